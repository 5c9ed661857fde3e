use num_bigint::BigInt;

use super::{Operator, OperatorError};
use crate::arith::{factorial, int, Permutation, Polynomial, Rational};

/// Largest `N` for which group averages over `S_N` are built.
pub const MAX_GROUP_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetrizerKind {
    /// `(1/N!) Σ w`.
    Plus,
    /// `(1/N!) Σ (-1)^{l(w)} w`.
    Minus,
    /// `(1/N!) Σ (-1)^{l(w)} ŵ` with `ŵ` built from `ŝ_j` at the given `β`.
    MinusDeformed(u32),
}

fn check_n(n: usize) -> Result<(), OperatorError> {
    if n > MAX_GROUP_N {
        Err(OperatorError::TooLarge(n))
    } else {
        Ok(())
    }
}

pub fn symmetrizer(n: usize, kind: SymmetrizerKind) -> Result<Operator, OperatorError> {
    check_n(n)?;
    let norm = Rational::new(BigInt::from(1), factorial(n as u64));
    let terms: Vec<Operator> = Permutation::all(n)
        .into_iter()
        .map(|w| {
            let sign = int(w.sign() as i64);
            let op = match kind {
                SymmetrizerKind::Plus => return Operator::permute(w),
                SymmetrizerKind::Minus => Operator::permute(w),
                SymmetrizerKind::MinusDeformed(beta) => w_hat(&w, beta),
            };
            op.scale(&sign)
        })
        .collect();
    Ok(Operator::sum(n, terms).scale(&norm))
}

/// `ŝ_j = s_j + β (s_j - 1)/(x_j - x_{j+1})` for 1-based `j < N`.
pub fn s_hat(n: usize, beta: u32, j: usize) -> Result<Operator, OperatorError> {
    if j == 0 || j >= n {
        return Err(OperatorError::IndexOutOfRange { index: j, n: n - 1 });
    }
    Ok(s_hat0(n, beta, j - 1))
}

fn s_hat0(n: usize, beta: u32, j: usize) -> Operator {
    let s = Operator::exchange(n, j, j + 1);
    if beta == 0 {
        return s;
    }
    &s - &Operator::divided_diff_minus(n, j, j + 1).scale(&int(beta as i64))
}

/// `ŵ = ŝ_{a_1} ∘ .. ∘ ŝ_{a_k}` along the canonical reduced word of `w`.
pub fn w_hat(w: &Permutation, beta: u32) -> Operator {
    w_hat_word(w.len(), beta, &w.reduced_word())
}

/// Same as [`w_hat`] for an explicit word of 0-based simple reflections.
pub fn w_hat_word(n: usize, beta: u32, word: &[usize]) -> Operator {
    Operator::compose_all(n, word.iter().map(|&j| s_hat0(n, beta, j)).collect())
}

/// Multiplication by `Π_{i<j} (c - x_i + x_j)`.
pub fn y_prime(n: usize, c: &Rational) -> Operator {
    let mut acc = Polynomial::one(n);
    for i in 0..n {
        for j in i + 1..n {
            let f = &(&Polynomial::constant(n, c.clone()) - &Polynomial::var(n, i))
                + &Polynomial::var(n, j);
            acc = &acc * &f;
        }
    }
    Operator::multiply(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_polynomial;
    use crate::operators::operator_equal;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    #[test]
    fn plus_and_minus_examples() {
        let plus = symmetrizer(2, SymmetrizerKind::Plus).unwrap();
        assert_eq!(plus.apply(&p("x1", 2)).unwrap(), p("1/2*x1 + 1/2*x2", 2));
        let minus = symmetrizer(3, SymmetrizerKind::Minus).unwrap();
        assert!(minus
            .apply(&p(
                "x1^2*x2 + x2^2*x3 + x3^2*x1 + x1*x2^2 + x2*x3^2 + x3*x1^2",
                3
            ))
            .unwrap()
            .is_zero());
        assert!(symmetrizer(7, SymmetrizerKind::Plus).is_err());
    }

    #[test]
    fn s_hat_squares_to_one_and_words_agree() {
        let n = 3;
        for beta in 0..3 {
            for j in 1..n {
                let s = s_hat(n, beta, j).unwrap();
                assert!(operator_equal(&(&s * &s), &Operator::identity(n), 5).unwrap());
            }
            let a = w_hat_word(n, beta, &[0, 1, 0]);
            let b = w_hat_word(n, beta, &[1, 0, 1]);
            assert!(operator_equal(&a, &b, 5).unwrap());
        }
    }
}
