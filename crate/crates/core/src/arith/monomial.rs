use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Exponent vector of a Laurent monomial `x_1^{e_1} ... x_N^{e_N}`.
///
/// Ordered by graded lexicographic order: total degree first, then the
/// first differing exponent (larger exponent of `x_1` is larger).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[i32; 6]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn new(exponents: &[i32]) -> Self {
        Monomial(SmallVec::from_slice(exponents))
    }

    pub fn var(nvars: usize, j: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[j] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn exponents_mut(&mut self) -> &mut [i32] {
        &mut self.0
    }

    pub fn get(&self, j: usize) -> i32 {
        self.0[j]
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `self / other`, always defined for Laurent monomials.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// True when `other` divides `self` inside the polynomial ring.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|e| -e).collect())
    }

    pub fn with(&self, j: usize, e: i32) -> Monomial {
        let mut m = self.clone();
        m.0[j] = e;
        m
    }

    pub fn swapped(&self, i: usize, j: usize) -> Monomial {
        let mut m = self.clone();
        m.0.swap(i, j);
        m
    }

    /// All polynomial monomials in `nvars` variables of total degree `d`.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0i32; nvars];
        fn rec(i: usize, rest: i32, cur: &mut Vec<i32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = rest;
                out.push(Monomial::new(cur));
                return;
            }
            for e in (0..=rest).rev() {
                cur[i] = e;
                rec(i + 1, rest - e, cur, out);
            }
        }
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d as i32, &mut cur, &mut out);
        out
    }

    /// All polynomial monomials of total degree at most `d`.
    pub fn all_up_to(nvars: usize, d: u32) -> Vec<Monomial> {
        (0..=d)
            .flat_map(|k| Self::all_of_degree(nvars, k))
            .collect()
    }

    /// Sorted weakly decreasing: the partition of this exponent vector.
    pub fn sorted_desc(&self) -> Vec<i32> {
        let mut v: Vec<i32> = self.0.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}
