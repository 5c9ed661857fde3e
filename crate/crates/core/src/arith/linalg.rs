//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use super::Rational;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&mut self, other: &Matrix) {
        assert_eq!(self.cols, other.cols);
        self.data.extend(other.data.iter().cloned());
        self.rows += other.rows;
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for k in 0..self.cols {
                    self.data.swap(p * self.cols + k, r * self.cols + k);
                }
            }
            let inv = self.get(r, c).recip();
            for k in c..self.cols {
                let v = self.get(r, k) * &inv;
                self.set(r, k, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for k in c..self.cols {
                    if self.get(r, k).is_zero() {
                        continue;
                    }
                    let v = self.get(i, k) - &f * self.get(r, k);
                    self.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }
}

/// Basis of the right kernel `{v : A v = 0}`.
pub fn nullspace(a: &Matrix) -> Vec<Vec<Rational>> {
    let mut m = a.clone();
    let pivots = m.rref();
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); m.cols];
            v[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(r, f).clone();
            }
            v
        })
        .collect()
}

/// Solves `A x = b`; `None` if inconsistent or underdetermined.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows, b.len());
    let mut m = Matrix::zeros(a.rows, a.cols + 1);
    for (r, br) in b.iter().enumerate() {
        for c in 0..a.cols {
            m.set(r, c, a.get(r, c).clone());
        }
        m.set(r, a.cols, br.clone());
    }
    let pivots = m.rref();
    if pivots.contains(&a.cols) || pivots.len() < a.cols {
        return None;
    }
    let mut x = vec![Rational::zero(); a.cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m.get(r, a.cols).clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn mat(rows: &[&[i64]]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), rows[0].len());
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, int(v));
            }
        }
        m
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        let ker = nullspace(&a);
        assert_eq!(ker.len(), 2);
        for v in ker {
            for r in 0..2 {
                let s: Rational = (0..3).map(|c| a.get(r, c) * &v[c]).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn solve_square_system() {
        let a = mat(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[int(3), int(5)]).unwrap();
        assert_eq!(x, vec![crate::arith::rat(4, 5), crate::arith::rat(7, 5)]);
        assert!(solve(&mat(&[&[1, 1], &[1, 1]]), &[int(1), int(2)]).is_none());
    }
}
