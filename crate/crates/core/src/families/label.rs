use std::fmt;

use crate::arith::{int, Monomial, Partition, Permutation, Rational};

/// Label `(λ, w)` of a non-symmetric polynomial whose leading monomial is
/// `x^λ_w = x_{w(1)}^{λ_1} .. x_{w(N)}^{λ_N}`.
///
/// `w` is normalised to the longest element of its coset `w·Stab(λ)`: on
/// each block of equal parts it is decreasing. With this choice the
/// eigenvalue of the `j`-th Cherednik operator is literally
/// `(w(λ + βδ))_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NonSymLabel {
    lambda: Partition,
    w: Permutation,
}

impl NonSymLabel {
    pub fn new(lambda: Partition, w: Permutation) -> Self {
        assert_eq!(lambda.len(), w.len(), "label size");
        let eta = Self::compose(&lambda, &w);
        Self::from_composition(&eta)
    }

    fn compose(lambda: &Partition, w: &Permutation) -> Vec<u32> {
        let mut eta = vec![0; lambda.len()];
        for i in 0..lambda.len() {
            eta[w.apply(i)] = lambda.part(i);
        }
        eta
    }

    /// Label of the monomial `x^η`.
    pub fn from_composition(eta: &[u32]) -> Self {
        let lambda = Partition::from_composition(eta);
        let n = eta.len();
        let mut images = vec![0; n];
        let mut i = 0;
        while i < n {
            let v = lambda.part(i);
            let mut positions: Vec<usize> = (0..n).filter(|&p| eta[p] == v).collect();
            positions.reverse();
            for (off, p) in positions.into_iter().enumerate() {
                images[i + off] = p;
            }
            while i < n && lambda.part(i) == v {
                i += 1;
            }
        }
        NonSymLabel {
            lambda,
            w: Permutation::from_images(images).expect("coset representative"),
        }
    }

    /// The identity-coset label: leading monomial `x^λ`.
    pub fn dominant(lambda: &Partition) -> Self {
        Self::from_composition(lambda.parts())
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn composition(&self) -> Vec<u32> {
        Self::compose(&self.lambda, &self.w)
    }

    pub fn monomial(&self) -> Monomial {
        let e: Vec<i32> = self.composition().iter().map(|&v| v as i32).collect();
        Monomial::new(&e)
    }

    /// `(w(λ + βδ))_j` for `j = 1..N`.
    pub fn spectrum(&self, beta: u32) -> Vec<Rational> {
        let n = self.lambda.len();
        let mut out = vec![int(0); n];
        for i in 0..n {
            let v = self.lambda.part(i) as i64 + beta as i64 * (n - 1 - i) as i64;
            out[self.w.apply(i)] = int(v);
        }
        out
    }

    /// Every label of weight `weight` in `n` variables, ordered by partition
    /// then composition.
    pub fn all_of_weight(weight: u32, n: usize) -> Vec<NonSymLabel> {
        Partition::all_of_weight(weight, n)
            .into_iter()
            .flat_map(|l| l.rearrangements().into_iter().rev())
            .map(|eta| Self::from_composition(&eta))
            .collect()
    }
}

impl fmt::Display for NonSymLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}), [{}])", self.lambda, self.w)
    }
}

impl fmt::Debug for NonSymLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
