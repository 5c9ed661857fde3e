use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::proportionality;
use crate::arith::{int, rat, vandermonde, Partition, Polynomial, Rational, Variant};
use crate::error::{Error, Result};
use crate::families::{family_polynomial, from_carrier, to_carrier, FamilyPolynomial, Label};
use crate::operators::{
    cherednik_family, symmetrizer, y_prime, Family, FamilySpec, Operator, SymmetrizerKind,
};
use crate::pairings::{
    ct_pairing, gauss_pairing, laguerre_pairing, shift_constants, ScaledRational,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ShiftDirection {
    /// Level `β` to level `β+1`: `X^{-1} Y`.
    G,
    /// Level `β+1` to level `β`: `Y X`.
    GHat,
}

/// Which of the two products `Π_{i<j}(±β - T_i + T_j)` goes into `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Assignment {
    /// `G` uses the `+β` product, `Ĝ` the `-β` one.
    Standard,
    /// `G` uses the `-β` product, `Ĝ` the `+β` one.
    Swapped,
}

impl Assignment {
    fn sign(self, direction: ShiftDirection) -> i64 {
        match (self, direction) {
            (Assignment::Standard, ShiftDirection::G)
            | (Assignment::Swapped, ShiftDirection::GHat) => 1,
            _ => -1,
        }
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Assignment::Standard => "standard",
            Assignment::Swapped => "swapped",
        })
    }
}

/// `Π_{i<j} (sign·β - T_i + T_j)` with `T_j` the family's Cherednik-type
/// operators at the spec's level.
pub fn y_operator(spec: &FamilySpec, sign: i64) -> Result<Operator> {
    let n = spec.n();
    let ops = (1..=n)
        .map(|j| cherednik_family(j, spec))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let c = spec.beta_q() * int(sign);
    let mut factors = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            factors.push((&ops[j] - &ops[i]).shift(&c));
        }
    }
    Ok(Operator::compose_all(n, factors))
}

/// Applies `G` (to a level-`β` polynomial) or `Ĝ` (to a level-`β+1`
/// polynomial); `lower` is the level-`β` spec. Polynomials are in the
/// family's storage variables, where `X = Π_{i<j}(v_i - v_j)`.
pub fn shift_operator(
    direction: ShiftDirection,
    f: &Polynomial,
    lower: &FamilySpec,
    assignment: Assignment,
) -> Result<Polynomial> {
    let y = y_operator(lower, assignment.sign(direction))?;
    let x = vandermonde(lower.n(), Variant::A);
    match direction {
        ShiftDirection::G => {
            let img = from_carrier(lower, y.apply(&to_carrier(lower, f))?)?;
            Ok(img.divide_exact(&x)?)
        }
        ShiftDirection::GHat => {
            let g = &x * f;
            from_carrier(lower, y.apply(&to_carrier(lower, &g))?)
        }
    }
}

#[derive(Debug, Clone)]
pub struct ShiftOutcome {
    /// The measured constant `r` in `G F = r F'`.
    pub constant: Rational,
    /// `c_λ` for `G`, `c̃_λ` for `Ĝ`.
    pub expected: Rational,
    pub polynomial: FamilyPolynomial,
}

impl ShiftOutcome {
    pub fn holds_up_to_sign(&self) -> bool {
        self.constant.abs() == self.expected.abs()
    }
}

/// `G F_{λ+δ}^{(β)} = ±c_λ F_λ^{(β+1)}` or `Ĝ F_λ^{(β+1)} = ±c̃_λ F_{λ+δ}^{(β)}`.
pub fn shift_apply(
    direction: ShiftDirection,
    f: &FamilyPolynomial,
    assignment: Assignment,
) -> Result<ShiftOutcome> {
    let Label::Sym(label) = &f.label else {
        return Err(Error::Unsupported(
            "shift operators act on symmetric labels".into(),
        ));
    };
    let n = f.spec.n();
    let (lower, lambda, target_label, target_spec) = match direction {
        ShiftDirection::G => {
            let parts: Option<Vec<u32>> = (0..n)
                .map(|i| label.part(i).checked_sub((n - 1 - i) as u32))
                .collect();
            let lambda = parts
                .and_then(|p| Partition::try_new(p).ok())
                .ok_or_else(|| Error::Unsupported(format!("({label}) is not of the form λ+δ")))?;
            let upper = f.spec.with_beta(f.spec.beta() + 1);
            (f.spec.clone(), lambda.clone(), lambda, upper)
        }
        ShiftDirection::GHat => {
            if f.spec.beta() == 0 {
                return Err(Error::Unsupported(
                    "Ĝ needs a level β+1 ≥ 1 polynomial".into(),
                ));
            }
            let lower = f.spec.with_beta(f.spec.beta() - 1);
            (lower.clone(), label.clone(), label.plus_delta(), lower)
        }
    };
    let image = shift_operator(direction, &f.poly, &lower, assignment)?;
    let target = family_polynomial(&target_label, &target_spec)?;
    let constant = proportionality(&image, &target.poly).ok_or_else(|| {
        Error::NotProportional(format!(
            "{direction:?} on ({label}) versus ({target_label})"
        ))
    })?;
    let (c, ct) = shift_constants(&lambda, &lower);
    let expected = if direction == ShiftDirection::G {
        c
    } else {
        ct
    };
    Ok(ShiftOutcome {
        constant,
        expected,
        polynomial: target,
    })
}

/// The role assignment that makes the shift relations hold, found by
/// probing small cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Calibration {
    pub family: Family,
    pub assignment: Assignment,
    /// Sign of `r / c_λ` for `G` at the witness size.
    pub global_sign: i32,
    #[serde(rename = "witness_N")]
    pub witness_n: usize,
}

fn probe_spec(family: Family, n: usize, beta: u32) -> FamilySpec {
    match family {
        Family::Jack => FamilySpec::jack(n, beta),
        Family::Hermite => FamilySpec::hermite(n, beta),
        Family::Laguerre => FamilySpec::laguerre(n, beta, rat(1, 3)),
    }
}

/// Sign of `r/c` for `G` at `N = 2`, or `None` if the assignment fails
/// anywhere on the probe (`N ∈ {2,3}`, `β ∈ {0,1}`, `λ = ∅`).
fn probe(family: Family, assignment: Assignment) -> Option<i32> {
    let mut witness = None;
    for n in [2, 3] {
        for beta in [0, 1] {
            let lower = probe_spec(family, n, beta);
            let empty = Partition::empty(n);
            let f = family_polynomial(&empty.plus_delta(), &lower).ok()?;
            let g = shift_apply(ShiftDirection::G, &f, assignment).ok()?;
            let upper = lower.with_beta(beta + 1);
            let fh = family_polynomial(&empty, &upper).ok()?;
            let gh = shift_apply(ShiftDirection::GHat, &fh, assignment).ok()?;
            if !g.holds_up_to_sign() || !gh.holds_up_to_sign() || g.expected.is_zero() {
                return None;
            }
            if n == 2 && witness.is_none() {
                witness = Some(if (&g.constant / &g.expected).is_positive() {
                    1
                } else {
                    -1
                });
            }
        }
    }
    witness
}

/// Runs the probe for both assignments; the first that passes is frozen.
pub fn calibrate(family: Family) -> Result<Calibration> {
    for assignment in [Assignment::Standard, Assignment::Swapped] {
        if let Some(global_sign) = probe(family, assignment) {
            return Ok(Calibration {
                family,
                assignment,
                global_sign,
                witness_n: 2,
            });
        }
    }
    Err(Error::NotProportional(format!(
        "no shift assignment calibrates for {family}"
    )))
}

/// Cached [`calibrate`].
pub fn calibration(family: Family) -> Result<Calibration> {
    static STORE: OnceLock<RwLock<HashMap<Family, Calibration>>> = OnceLock::new();
    let store = STORE.get_or_init(Default::default);
    if let Some(c) = store.read().unwrap().get(&family) {
        return Ok(c.clone());
    }
    let c = calibrate(family)?;
    store.write().unwrap().insert(family, c.clone());
    Ok(c)
}

fn pair(f: &Polynomial, g: &Polynomial, spec: &FamilySpec) -> Result<ScaledRational> {
    match spec.family() {
        Family::Jack => Ok(ScaledRational::rational(ct_pairing(f, g, spec)?)),
        Family::Hermite => gauss_pairing(f, g, spec),
        Family::Laguerre => laguerre_pairing(f, g, spec),
    }
}

/// `(⟨G f, g⟩^{(β+1)}, ⟨f, Ĝ g⟩^{(β)})` for `f` at level `β` (the spec's)
/// and `g` at level `β+1`.
pub fn duality_sides(
    f: &Polynomial,
    g: &Polynomial,
    lower: &FamilySpec,
    assignment: Assignment,
) -> Result<(ScaledRational, ScaledRational)> {
    let upper = lower.with_beta(lower.beta() + 1);
    let gf = shift_operator(ShiftDirection::G, f, lower, assignment)?;
    let ghg = shift_operator(ShiftDirection::GHat, g, lower, assignment)?;
    Ok((pair(&gf, g, &upper)?, pair(f, &ghg, lower)?))
}

pub fn duality_check(
    f: &Polynomial,
    g: &Polynomial,
    lower: &FamilySpec,
    assignment: Assignment,
) -> Result<bool> {
    let (l, r) = duality_sides(f, g, lower, assignment)?;
    Ok(l == r)
}

/// `P_-(Y_+ - Y_-) f = 0` for the family's operators and, in the
/// multiplication representation, `P_-^{(β)}(Y' - Ŷ') f = 0`, on every
/// `m_μ` with `|μ| ≤ degree`.
pub fn antisymmetrizer_lemma_check(spec: &FamilySpec, degree: u32) -> Result<bool> {
    let n = spec.n();
    let p_minus = symmetrizer(n, SymmetrizerKind::Minus)?;
    let diff = &y_operator(spec, 1)? - &y_operator(spec, -1)?;
    let beta = spec.beta();
    let p_beta = symmetrizer(n, SymmetrizerKind::MinusDeformed(beta))?;
    let b = spec.beta_q();
    let diff_prime = &y_prime(n, &b) - &y_prime(n, &-b);
    for mu in Partition::all_up_to(degree, n) {
        let m = Polynomial::monomial_symmetric(&mu);
        let carried = to_carrier(spec, &m);
        if !p_minus.apply(&diff.apply(&carried)?)?.is_zero() {
            return Ok(false);
        }
        if !p_beta.apply(&diff_prime.apply(&m)?)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_polynomial;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    #[test]
    fn hand_expansions() {
        for beta in 0..3 {
            let s = FamilySpec::jack(2, beta);
            let y_minus = y_operator(&s, -1).unwrap();
            let img = y_minus.apply(&p("x1 + x2", 2)).unwrap();
            assert_eq!(img.divide_exact(&p("x1 - x2", 2)).unwrap(), p("-1", 2));
            let y_plus = y_operator(&s, 1).unwrap();
            let img = y_plus.apply(&p("x1 - x2", 2)).unwrap();
            assert_eq!(img, p("x1 + x2", 2).scale(&int(-(1 + 2 * beta as i64))));
        }
    }

    #[test]
    fn calibration_is_swapped_with_sign() {
        for family in Family::ALL {
            let c = calibration(family).unwrap();
            assert_eq!(c.assignment, Assignment::Swapped, "{family}");
            assert_eq!(c.global_sign, -1, "{family}");
        }
        let json = serde_json::to_string(&calibration(Family::Jack).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"{"family":"jack","assignment":"swapped","global_sign":-1,"witness_N":2}"#
        );
    }

    #[test]
    fn shift_relations_small() {
        for family in Family::ALL {
            for beta in 0..2 {
                let lower = probe_spec(family, 2, beta);
                for lam in Partition::all_up_to(2, 2) {
                    let f = family_polynomial(&lam.plus_delta(), &lower).unwrap();
                    let out = shift_apply(ShiftDirection::G, &f, Assignment::Swapped).unwrap();
                    assert!(out.holds_up_to_sign(), "{family} {beta} ({lam})");
                    let upper = lower.with_beta(beta + 1);
                    let f = family_polynomial(&lam, &upper).unwrap();
                    let out = shift_apply(ShiftDirection::GHat, &f, Assignment::Swapped).unwrap();
                    assert!(out.holds_up_to_sign(), "{family} {beta} ({lam}) hat");
                }
            }
        }
    }

    #[test]
    fn duality_small() {
        let f = p("x1^2 + x2^2 + 3*x1*x2 - 1", 2);
        let g = p("x1 + x2 + 2", 2);
        for family in Family::ALL {
            for beta in 0..2 {
                let lower = probe_spec(family, 2, beta);
                let (l, r) = duality_sides(&f, &g, &lower, Assignment::Swapped).unwrap();
                assert_eq!(l, r, "{family} beta={beta}");
            }
        }
    }

    #[test]
    fn lemma_checks() {
        assert!(antisymmetrizer_lemma_check(&FamilySpec::jack(2, 1), 4).unwrap());
        assert!(antisymmetrizer_lemma_check(&FamilySpec::jack(3, 1), 3).unwrap());
        assert!(antisymmetrizer_lemma_check(&FamilySpec::hermite(2, 2), 3).unwrap());
        assert!(antisymmetrizer_lemma_check(&FamilySpec::laguerre(2, 1, rat(1, 2)), 2).unwrap());
    }
}
