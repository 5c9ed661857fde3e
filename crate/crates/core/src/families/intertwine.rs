use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::arith::{ArithError, Monomial, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::operators::{creation_a, creation_b, Family, FamilySpec};

type Key = (FamilySpec, Monomial);

fn store() -> &'static RwLock<HashMap<Key, Polynomial>> {
    static STORE: OnceLock<RwLock<HashMap<Key, Polynomial>>> = OnceLock::new();
    STORE.get_or_init(Default::default)
}

/// `Π_j C_j^{α_j} · 1` where `C_j = A_j` (Hermite) or `C_j = B_j²`
/// (Laguerre). The operators commute, so any application order works.
fn creation_power(spec: &FamilySpec, alpha: &Monomial) -> Result<Polynomial> {
    if alpha.is_one() {
        return Ok(Polynomial::one(spec.n()));
    }
    let key = (spec.clone(), alpha.clone());
    if let Some(p) = store().read().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let j = (0..alpha.nvars()).find(|&j| alpha.get(j) > 0).unwrap();
    let prev = creation_power(spec, &alpha.with(j, alpha.get(j) - 1))?;
    let out = match spec.family() {
        Family::Hermite => creation_a(j + 1, spec)?.apply(&prev)?,
        _ => creation_b(j + 1, spec)?.pow(2).apply(&prev)?,
    };
    store().write().unwrap().insert(key, out.clone());
    Ok(out)
}

fn two_pow_neg(k: i64) -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(2).pow(k as u32))
}

/// `σ^A(f) = f(ã†)·1`, computed without `√2` as `Σ_d 2^{-d} f_d(A)·1`
/// over the homogeneous components `f_d`.
pub fn sigma_a(f: &Polynomial, spec: &FamilySpec) -> Result<Polynomial> {
    spec.require(&[Family::Hermite], "sigma_A")?;
    if !f.is_polynomial() {
        return Err(ArithError::NotPolynomial.into());
    }
    let mut out = Polynomial::zero(spec.n());
    for (m, c) in f.terms() {
        let img = creation_power(spec, m)?;
        out.add_scaled(&img, &(c * two_pow_neg(m.degree())));
    }
    Ok(out)
}

/// `σ^B(f) = f((b̃†)²/2)·1 = f(B²/4)·1`, returned in the `u = z²` variables.
pub fn sigma_b(f: &Polynomial, spec: &FamilySpec) -> Result<Polynomial> {
    spec.require(&[Family::Laguerre], "sigma_B")?;
    if !f.is_polynomial() {
        return Err(ArithError::NotPolynomial.into());
    }
    let mut out = Polynomial::zero(spec.n());
    for (m, c) in f.terms() {
        let img = creation_power(spec, m)?;
        out.add_scaled(&img, &(c * two_pow_neg(2 * m.degree())));
    }
    out.z_to_u().ok_or(Error::EvennessViolated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_polynomial, rat};
    use crate::operators::{cherednik_a, htilde};

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    #[test]
    fn sigma_a_examples() {
        let s = FamilySpec::hermite(2, 1);
        assert_eq!(sigma_a(&p("1", 2), &s).unwrap(), p("1", 2));
        assert_eq!(sigma_a(&p("x1 + x2", 2), &s).unwrap(), p("x1 + x2", 2));
        let s1 = FamilySpec::hermite(1, 0);
        assert_eq!(sigma_a(&p("x^2", 1), &s1).unwrap(), p("x^2 - 1/2", 1));
    }

    #[test]
    fn sigma_a_intertwines_cherednik() {
        let s = FamilySpec::hermite(2, 1);
        let f = p("x1*x2", 2);
        let lhs = sigma_a(&cherednik_a(1, &s).unwrap().apply(&f).unwrap(), &s).unwrap();
        let rhs = htilde(1, &s)
            .unwrap()
            .apply(&sigma_a(&f, &s).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn sigma_b_examples() {
        let s = FamilySpec::laguerre(1, 0, rat(1, 2));
        assert_eq!(sigma_b(&p("1", 1), &s).unwrap(), p("1", 1));
        assert_eq!(sigma_b(&p("x", 1), &s).unwrap(), p("u - 1", 1));

        let s = FamilySpec::laguerre(2, 1, rat(1, 3));
        let f = p("x1", 2);
        let lhs = sigma_b(
            &cherednik_a(1, &s.as_jack()).unwrap().apply(&f).unwrap(),
            &s,
        )
        .unwrap();
        let half_h = htilde(1, &s).unwrap().scale(&rat(1, 2));
        let rhs = half_h.apply(&sigma_b(&f, &s).unwrap().u_to_z()).unwrap();
        assert_eq!(lhs, rhs.z_to_u().unwrap());
    }
}
