use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::{format_rational, int, ArithError, Monomial, Partition, Permutation, Rational};

/// Sparse multivariate Laurent polynomial over the rationals.
///
/// Terms are kept in a map keyed by [`Monomial`] (graded-lex order); zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

/// Which Vandermonde product to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// `prod_{i<j} (x_i - x_j)`.
    A,
    /// `prod_{i<j} (z_i^2 - z_j^2)`, stored in `u_j = z_j^2`.
    B,
}

/// `prod_{i<j} (x_i - x_j)`. The B variant is the same product read in the
/// squared variables `u_j = z_j^2`.
pub fn vandermonde(n: usize, _variant: Variant) -> Polynomial {
    let mut acc = Polynomial::one(n);
    for i in 0..n {
        for j in i + 1..n {
            let factor = &Polynomial::var(n, i) - &Polynomial::var(n, j);
            acc = &acc * &factor;
        }
    }
    acc
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, j: usize) -> Self {
        Self::term(Monomial::var(nvars, j), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn monomial(exponents: &[i32]) -> Self {
        Self::term(Monomial::new(exponents), Rational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(nvars: usize, iter: I) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    /// Monomial symmetric polynomial `m_lambda` in `nvars` variables.
    pub fn monomial_symmetric(lambda: &Partition) -> Self {
        let n = lambda.len();
        let mut p = Self::zero(n);
        for eta in lambda.rearrangements() {
            let e: Vec<i32> = eta.iter().map(|&v| v as i32).collect();
            p.add_term(Monomial::new(&e), Rational::one());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff_of(&self, exponents: &[i32]) -> Rational {
        self.coeff(&Monomial::new(exponents))
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, k) in other.terms() {
            self.add_term(m.clone(), k * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Largest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_components(&self) -> BTreeMap<i64, Polynomial> {
        let mut out: BTreeMap<i64, Polynomial> = BTreeMap::new();
        for (m, c) in self.terms() {
            out.entry(m.degree())
                .or_insert_with(|| Polynomial::zero(self.nvars))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// Applies a monomial-wise linear map.
    pub fn map_terms<F>(&self, mut f: F) -> Polynomial
    where
        F: FnMut(&Monomial, &Rational, &mut Polynomial),
    {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in self.terms() {
            f(m, c, &mut out);
        }
        out
    }

    /// Action of `w` on the variables: `x_i -> x_{w(i)}`.
    pub fn permute(&self, w: &Permutation) -> Polynomial {
        assert_eq!(w.len(), self.nvars, "permutation size");
        self.map_terms(|m, c, out| {
            let mut e = vec![0; m.nvars()];
            for (i, &ei) in m.exponents().iter().enumerate() {
                e[w.apply(i)] = ei;
            }
            out.add_term(Monomial::new(&e), c.clone());
        })
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> Polynomial {
        self.map_terms(|m, c, out| out.add_term(m.swapped(i, j), c.clone()))
    }

    /// `x_j -> -x_j`.
    pub fn flip_sign(&self, j: usize) -> Polynomial {
        self.map_terms(|m, c, out| {
            let c = if m.get(j) % 2 == 0 { c.clone() } else { -c };
            out.add_term(m.clone(), c);
        })
    }

    pub fn derivative(&self, j: usize) -> Polynomial {
        self.map_terms(|m, c, out| {
            let e = m.get(j);
            if e != 0 {
                out.add_term(m.with(j, e - 1), c * int(e as i64));
            }
        })
    }

    /// `f(x) -> f(1/x)`.
    pub fn invert_vars(&self) -> Polynomial {
        self.map_terms(|m, c, out| out.add_term(m.inverse(), c.clone()))
    }

    /// `f(x) -> f(c x)`, i.e. each term scaled by `c^{deg}`.
    pub fn dilate(&self, c: &Rational) -> Polynomial {
        self.map_terms(|m, k, out| {
            let d = m.degree();
            let f = if d >= 0 {
                num_traits::pow(c.clone(), d as usize)
            } else {
                num_traits::pow(c.recip(), (-d) as usize)
            };
            out.add_term(m.clone(), k * f);
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|j| self.swap_vars(j, j + 1) == *self)
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|j| self.swap_vars(j, j + 1) == -self)
    }

    /// True iff every exponent is even.
    pub fn is_even(&self) -> bool {
        self.terms
            .keys()
            .all(|m| m.exponents().iter().all(|e| e % 2 == 0))
    }

    /// `u_j -> z_j^2`.
    pub fn u_to_z(&self) -> Polynomial {
        self.map_terms(|m, c, out| {
            let e: Vec<i32> = m.exponents().iter().map(|e| 2 * e).collect();
            out.add_term(Monomial::new(&e), c.clone());
        })
    }

    /// `z_j^2 -> u_j`; `None` if an odd exponent occurs.
    pub fn z_to_u(&self) -> Option<Polynomial> {
        if !self.is_even() {
            return None;
        }
        Some(self.map_terms(|m, c, out| {
            let e: Vec<i32> = m.exponents().iter().map(|e| e / 2).collect();
            out.add_term(Monomial::new(&e), c.clone());
        }))
    }

    /// Exact quotient `self / g`; fails unless `g` divides `self` in the
    /// polynomial ring.
    pub fn divide_exact(&self, g: &Polynomial) -> Result<Polynomial, ArithError> {
        if self.nvars != g.nvars {
            return Err(ArithError::SizeMismatch(self.nvars, g.nvars));
        }
        if g.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if !self.is_polynomial() || !g.is_polynomial() {
            return Err(ArithError::NotPolynomial);
        }
        let (gm, gc) = g
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            if !rm.divisible_by(&gm) {
                return Err(ArithError::NotDivisible);
            }
            let qm = rm.div(&gm);
            let qc = rc / &gc;
            let step = Polynomial::term(qm.clone(), qc.clone());
            rem -= &(&step * g);
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Renders with the given variable stem (`x`, `u`, `z`); a single
    /// variable prints without an index.
    pub fn to_string_with(&self, stem: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let name = |j: usize| {
            if self.nvars == 1 {
                stem.to_string()
            } else {
                format!("{stem}{}", j + 1)
            }
        };
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let vars: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(j, &e)| {
                    if e == 1 {
                        name(j)
                    } else {
                        format!("{}^{}", name(j), e)
                    }
                })
                .collect();
            if vars.is_empty() {
                out.push_str(&format_rational(&a));
            } else {
                if !a.is_one() {
                    out.push_str(&format_rational(&a));
                    out.push('*');
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with("x"))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.nvars, rhs.nvars, "ambient size mismatch");
        for (m, c) in rhs.terms() {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.nvars, rhs.nvars, "ambient size mismatch");
        for (m, c) in rhs.terms() {
            self.add_term(m.clone(), -c);
        }
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ambient size mismatch");
        let mut acc: std::collections::HashMap<Monomial, Rational> =
            std::collections::HashMap::with_capacity(self.len() * rhs.len());
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                let m = a.mul(b);
                let c = ca * cb;
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += c;
                    }
                }
            }
        }
        Polynomial {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn x(n: usize, j: usize) -> Polynomial {
        Polynomial::var(n, j)
    }

    #[test]
    fn vandermonde_small_cases() {
        assert_eq!(vandermonde(1, Variant::A), Polynomial::one(1));
        assert_eq!(vandermonde(2, Variant::A), &x(2, 0) - &x(2, 1));
        let v3 = vandermonde(3, Variant::A);
        assert_eq!(v3.len(), 6);
        assert!(v3.terms().all(|(_, c)| c.abs().is_one()));
        assert!(v3.is_antisymmetric());
        assert_eq!(vandermonde(3, Variant::B), v3);
    }

    #[test]
    fn divide_exact_examples() {
        let n = 2;
        let f = &x(n, 0).pow(2) - &x(n, 1).pow(2);
        let g = &x(n, 0) - &x(n, 1);
        assert_eq!(f.divide_exact(&g).unwrap(), &x(n, 0) + &x(n, 1));

        let m = Polynomial::monomial(&[1, 1, 1]);
        let v = vandermonde(3, Variant::A);
        assert_eq!((&v * &m).divide_exact(&v).unwrap(), m);

        let f = &x(n, 0) + &x(n, 1);
        assert_eq!(f.divide_exact(&g), Err(ArithError::NotDivisible));
        assert_eq!(
            f.divide_exact(&Polynomial::zero(2)),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn display_orders_terms_descending() {
        let h = &Polynomial::monomial(&[2]) - &Polynomial::constant(1, rat(1, 2));
        assert_eq!(h.to_string(), "x^2 - 1/2");
        assert_eq!(h.to_string_with("u"), "u^2 - 1/2");
        let p = &(&x(2, 0) * &x(2, 1)).scale(&rat(-3, 2)) + &x(2, 1);
        assert_eq!(p.to_string(), "-3/2*x1*x2 + x2");
    }

    #[test]
    fn monomial_symmetric_counts_orbit() {
        let m = Polynomial::monomial_symmetric(&Partition::new(vec![2, 1, 0]));
        assert_eq!(m.len(), 6);
        let m = Polynomial::monomial_symmetric(&Partition::new(vec![1, 1, 0]));
        assert_eq!(m.len(), 3);
        assert!(m.is_symmetric());
    }

    #[test]
    fn codec_between_u_and_z() {
        let f = &Polynomial::monomial(&[1, 0]) - &Polynomial::monomial(&[0, 2]);
        let z = f.u_to_z();
        assert_eq!(z.coeff_of(&[2, 0]), rat(1, 1));
        assert_eq!(z.z_to_u().unwrap(), f);
        assert!(Polynomial::monomial(&[1, 0]).z_to_u().is_none());
    }

    mod props {
        use super::*;
        use crate::arith::{int, Monomial};
        use proptest::prelude::*;

        fn poly(n: usize) -> impl Strategy<Value = Polynomial> {
            prop::collection::vec((prop::collection::vec(0i32..4, n), -4i64..5), 0..5).prop_map(
                move |ts| {
                    Polynomial::from_terms(
                        n,
                        ts.into_iter().map(|(e, c)| (Monomial::new(&e), int(c))),
                    )
                },
            )
        }

        fn perm(n: usize) -> impl Strategy<Value = Permutation> {
            Just((0..n).collect::<Vec<usize>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap())
        }

        proptest! {
            #[test]
            fn ring_axioms(f in poly(3), g in poly(3), h in poly(3)) {
                prop_assert_eq!(&f + &g, &g + &f);
                prop_assert_eq!(&f * &g, &g * &f);
                prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
                prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
                prop_assert!((&f - &f).is_zero());
                prop_assert_eq!(&f * &Polynomial::one(3), f.clone());
            }

            #[test]
            fn exact_division_inverts_multiplication(f in poly(3), g in poly(3)) {
                prop_assume!(!g.is_zero());
                prop_assert_eq!((&f * &g).divide_exact(&g).unwrap(), f);
            }

            #[test]
            fn vandermonde_division_round_trip(f in poly(3)) {
                let v = vandermonde(3, Variant::A);
                prop_assert_eq!((&f * &v).divide_exact(&v).unwrap(), f);
            }

            #[test]
            fn u_z_round_trip(f in poly(2)) {
                let z = f.u_to_z();
                prop_assert!(z.is_even());
                prop_assert_eq!(z.z_to_u().unwrap(), f);
            }

            #[test]
            fn permutations_act_multiplicatively(f in poly(3), g in poly(3), v in perm(3), w in perm(3)) {
                prop_assert_eq!((&f * &g).permute(&w), &f.permute(&w) * &g.permute(&w));
                prop_assert_eq!(f.permute(&w).permute(&v), f.permute(&v.compose(&w)));
            }

            #[test]
            fn derivative_is_a_derivation(f in poly(2), g in poly(2)) {
                prop_assert_eq!((&f * &g).derivative(0), &(&f.derivative(0) * &g) + &(&f * &g.derivative(0)));
            }
        }
    }
}
