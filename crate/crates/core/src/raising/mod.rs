//! Raising operators `B_m` built from Cherednik-type operators for the three families,
//! the Rodrigues formulas built from them, and the shift operators
//! `G`, `Ĝ` that move between the levels `β` and `β + 1`.

mod shift;

pub use shift::{
    antisymmetrizer_lemma_check, calibrate, calibration, duality_check, duality_sides, shift_apply,
    shift_operator, y_operator, Assignment, Calibration, ShiftDirection, ShiftOutcome,
};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{int, rat, Partition, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::families::{
    family_polynomial, from_carrier, memo_family, symmetric_spectrum, to_carrier, Construction,
    FamilyPolynomial, Label,
};
use crate::operators::{cherednik_family, creation_a, creation_b, Family, FamilySpec, Operator};

/// A realised raising operator `B_m`.
#[derive(Debug, Clone)]
pub struct RaisingOp {
    pub m: usize,
    pub spec: FamilySpec,
    pub realized: Operator,
}

/// `Σ_{k_1<..<k_m} C_{k_1}..C_{k_m} ∘ Π_i (T_{k_i} + β(i+1-k_i))`, where
/// `C_k` is `x_k`, `A_k` or `B_k²/4` and `T_k` the family's Cherednik-type
/// operator. With `A_k = √2 ã†_k` the Hermite constant picks up `2^m`; the
/// Laguerre factors are the images of `x_k` and `D̂_k` under `ρ^B`.
pub fn raising_op(m: usize, spec: &FamilySpec) -> Result<RaisingOp> {
    let n = spec.n();
    if m == 0 || m > n {
        return Err(crate::operators::OperatorError::IndexOutOfRange { index: m, n }.into());
    }
    let beta = spec.beta_q();
    let mut terms = Vec::new();
    for ks in subsets(n, m) {
        let mut factors = Vec::with_capacity(2 * m);
        for &k in &ks {
            factors.push(match spec.family() {
                Family::Jack => Operator::var(n, k),
                Family::Hermite => creation_a(k + 1, spec)?,
                Family::Laguerre => creation_b(k + 1, spec)?.pow(2).scale(&rat(1, 4)),
            });
        }
        for (i, &k) in ks.iter().enumerate() {
            let shift = &beta * int(i as i64 + 1 - k as i64);
            factors.push(cherednik_family(k + 1, spec)?.shift(&shift));
        }
        terms.push(Operator::compose_all(n, factors));
    }
    Ok(RaisingOp {
        m,
        spec: spec.clone(),
        realized: Operator::sum(n, terms),
    })
}

fn subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for k in start..n {
            cur.push(k);
            go(k + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, m, &mut Vec::new(), &mut out);
    out
}

/// `Π_{j=1}^m (λ_j + β(m-j+1))`, times `2^m` for Hermite.
pub fn raising_constant(lambda: &Partition, m: usize, spec: &FamilySpec) -> Rational {
    let b = spec.beta() as i64;
    let mut c: Rational = (1..=m)
        .map(|j| int(lambda.part(j - 1) as i64 + b * (m - j + 1) as i64))
        .product();
    if spec.family() == Family::Hermite {
        c *= Rational::from_integer(BigInt::from(2).pow(m as u32));
    }
    c
}

/// `r` with `image = r · target`, if it exists.
pub(crate) fn proportionality(image: &Polynomial, target: &Polynomial) -> Option<Rational> {
    let (m, c) = target.leading_term()?;
    let r = image.coeff(m) / c;
    (*image == target.scale(&r)).then_some(r)
}

/// Result of applying `B_m` to a family polynomial.
#[derive(Debug, Clone)]
pub struct RaisingOutcome {
    /// The measured constant `r` in `B_m F_λ = r F_{λ'}`.
    pub constant: Rational,
    /// The closed-form constant.
    pub expected: Rational,
    pub polynomial: FamilyPolynomial,
}

impl RaisingOutcome {
    pub fn holds(&self) -> bool {
        self.constant == self.expected
    }
}

/// Applies `B_m` to `F` and identifies the image with the family
/// polynomial whose first `m` parts are one larger.
pub fn raising_apply(m: usize, f: &FamilyPolynomial) -> Result<RaisingOutcome> {
    let Label::Sym(lambda) = &f.label else {
        return Err(Error::Unsupported(
            "raising operators act on symmetric labels".into(),
        ));
    };
    let spec = &f.spec;
    let op = raising_op(m, spec)?;
    let image = from_carrier(spec, op.realized.apply(&to_carrier(spec, &f.poly))?)?;
    let target_label = lambda.add_first(m);
    let target = family_polynomial(&target_label, spec)?;
    let constant = proportionality(&image, &target.poly).ok_or_else(|| {
        Error::NotProportional(format!(
            "B_{m} applied to ({lambda}) versus ({target_label})"
        ))
    })?;
    Ok(RaisingOutcome {
        constant,
        expected: raising_constant(lambda, m, spec),
        polynomial: target,
    })
}

/// `Π_{(i,j)∈λ} (λ_i - j + β(λ'_j - i + 1))`.
pub fn hook_product(lambda: &Partition, beta: u32) -> Rational {
    lambda
        .boxes()
        .map(|(i, j)| {
            let li = lambda.part(i as usize - 1) as i64;
            let cj = lambda.conj_part(j) as i64;
            int(li - j as i64 + beta as i64 * (cj - i as i64 + 1))
        })
        .product()
}

/// `F_λ = (hook product)^{-1} B_N^{λ_N} .. B_1^{λ_1-λ_2} · 1`, with the
/// extra `2^{-|λ|}` for Hermite. At `β = 0` the raising operators
/// degenerate and the default construction is returned instead.
pub fn rodrigues(lambda: &Partition, spec: &FamilySpec) -> Result<FamilyPolynomial> {
    let n = spec.n();
    if lambda.len() != n {
        return Err(crate::arith::ArithError::SizeMismatch(lambda.len(), n).into());
    }
    if spec.beta() == 0 {
        return family_polynomial(lambda, spec);
    }
    let poly = memo_family(
        spec,
        &Label::Sym(lambda.clone()),
        Construction::Rodrigues,
        || {
            let hook = hook_product(lambda, spec.beta());
            if hook.is_zero() {
                return Err(Error::RodriguesSingular(format!("({lambda})")));
            }
            let mut f = to_carrier(spec, &Polynomial::one(n));
            for m in 1..=n {
                let next = if m < n { lambda.part(m) } else { 0 };
                let times = lambda.part(m - 1) - next;
                if times == 0 {
                    continue;
                }
                let op = raising_op(m, spec)?.realized;
                for _ in 0..times {
                    f = op.apply(&f)?;
                }
            }
            let mut scale = hook.recip();
            if spec.family() == Family::Hermite {
                scale /= Rational::from_integer(BigInt::from(2).pow(lambda.weight()));
            }
            from_carrier(spec, f.scale(&scale))
        },
    )?;
    crate::families::check_sym_triangular(&poly, lambda)?;
    Ok(FamilyPolynomial {
        label: Label::Sym(lambda.clone()),
        spec: spec.clone(),
        poly,
        construction: Construction::Rodrigues,
        eigenvalues: symmetric_spectrum(lambda, spec),
    })
}
