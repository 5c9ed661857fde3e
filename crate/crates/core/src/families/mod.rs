//! Jack, multivariable Hermite and multivariable Laguerre polynomials,
//! symmetric and non-symmetric, by several independent constructions, and
//! the intertwiners `σ^A`, `σ^B` that carry Jack polynomials to the other
//! two families.
//!
//! Hermite polynomials live in the `x` variables; Laguerre polynomials are
//! stored in `u_j = z_j²`.

mod cache;
mod intertwine;
mod jack;
mod label;
mod orthogonal;

pub use intertwine::{sigma_a, sigma_b};
pub use jack::{delta_coefficients, elementary_of, jack, jack_spectrum, nonsym_jack};
pub use label::NonSymLabel;
pub use orthogonal::{hermite, laguerre, nonsym_hermite, nonsym_laguerre};

pub(crate) use cache::memo_family;

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{dominance_leq, format_rational, Monomial, Partition, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::operators::{cherednik_family, Family, FamilySpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Triangular,
    Symmetrized,
    Intertwined,
    Gram,
    Rodrigues,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::Triangular => "triangular",
            Construction::Symmetrized => "symmetrized",
            Construction::Intertwined => "intertwined",
            Construction::Gram => "gram",
            Construction::Rodrigues => "rodrigues",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "triangular" => Construction::Triangular,
            "symmetrized" => Construction::Symmetrized,
            "intertwined" => Construction::Intertwined,
            "gram" => Construction::Gram,
            "rodrigues" => Construction::Rodrigues,
            other => return Err(Error::Unsupported(format!("unknown method {other:?}"))),
        })
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Label {
    Sym(Partition),
    NonSym(NonSymLabel),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Sym(l) => write!(f, "({l})"),
            Label::NonSym(l) => write!(f, "{l}"),
        }
    }
}

/// A constructed family member together with how it was built and the
/// eigenvalues it was checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyPolynomial {
    pub label: Label,
    pub spec: FamilySpec,
    pub poly: Polynomial,
    pub construction: Construction,
    /// Spectrum of the transported Cherednik operators; for symmetric
    /// labels the values whose elementary symmetric functions give the
    /// `Π_j (u + T_j)` eigenvalue.
    pub eigenvalues: Vec<Rational>,
}

impl FamilyPolynomial {
    pub fn partition(&self) -> &Partition {
        match &self.label {
            Label::Sym(l) => l,
            Label::NonSym(l) => l.lambda(),
        }
    }

    /// Variable stem for printing.
    pub fn stem(&self) -> &'static str {
        if self.spec.family() == Family::Laguerre {
            "u"
        } else {
            "x"
        }
    }

    /// Checks the eigen-relations against the operators directly.
    pub fn verify_eigen(&self) -> Result<bool> {
        let n = self.spec.n();
        let ops = (1..=n)
            .map(|j| cherednik_family(j, &self.spec))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let carrier = to_carrier(&self.spec, &self.poly);
        match &self.label {
            Label::NonSym(_) => {
                for (op, e) in ops.iter().zip(&self.eigenvalues) {
                    if op.apply(&carrier)? != carrier.scale(e) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Label::Sym(_) => {
                let coeffs = delta_coefficients(&ops, &carrier)?;
                let expected = elementary_of(&self.eigenvalues);
                Ok(coeffs
                    .iter()
                    .zip(&expected)
                    .all(|(c, e)| *c == carrier.scale(e)))
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let (kind, lambda, w) = match &self.label {
            Label::Sym(l) => ("symmetric", l.to_string(), None),
            Label::NonSym(l) => (
                "nonsymmetric",
                l.lambda().to_string(),
                Some(l.w().to_string()),
            ),
        };
        let mut label = serde_json::json!({ "kind": kind, "lambda": lambda });
        if let Some(w) = w {
            label["w"] = serde_json::Value::String(w);
        }
        serde_json::json!({
            "label": label,
            "spec": self.spec,
            "construction": self.construction,
            "polynomial": self.poly,
            "eigenvalues": self.eigenvalues.iter().map(format_rational).collect::<Vec<_>>(),
        })
    }
}

/// Polynomial in the variables the family operators act on: `z` for
/// Laguerre, `x` otherwise.
pub(crate) fn to_carrier(spec: &FamilySpec, f: &Polynomial) -> Polynomial {
    if spec.family() == Family::Laguerre {
        f.u_to_z()
    } else {
        f.clone()
    }
}

/// Coefficient of `m_μ` in a symmetric polynomial.
pub(crate) fn m_coeff(f: &Polynomial, mu: &Partition) -> Rational {
    let e: Vec<i32> = mu.parts().iter().map(|&p| p as i32).collect();
    f.coeff(&Monomial::new(&e))
}

/// Expands a symmetric polynomial in the monomial symmetric basis, largest
/// partitions last.
pub fn m_expansion(f: &Polynomial) -> Vec<(Partition, Rational)> {
    let mut out: Vec<(Partition, Rational)> = f
        .terms()
        .filter(|(m, _)| m.exponents().windows(2).all(|w| w[0] >= w[1]))
        .map(|(m, c)| {
            let parts = m.exponents().iter().map(|&e| e as u32).collect();
            (Partition::new(parts), c.clone())
        })
        .collect();
    out.sort_by(|a, b| a.0.weight().cmp(&b.0.weight()).then(a.0.cmp(&b.0)));
    out
}

/// Symmetric triangularity: coefficient one on `m_λ`, every other `m_μ`
/// either of lower degree or strictly dominance-below `λ`.
pub(crate) fn check_sym_triangular(f: &Polynomial, lambda: &Partition) -> Result<()> {
    if !f.is_symmetric() {
        return Err(Error::Triangularity(format!("({lambda}): not symmetric")));
    }
    for (mu, c) in m_expansion(f) {
        if c.is_zero() {
            continue;
        }
        if mu == *lambda {
            if !c.is_one() {
                return Err(Error::Triangularity(format!(
                    "({lambda}): leading coefficient {c}"
                )));
            }
        } else if mu.weight() > lambda.weight()
            || (mu.weight() == lambda.weight() && !dominance_leq(&mu, lambda)?)
        {
            return Err(Error::Triangularity(format!(
                "({lambda}): stray term m_({mu})"
            )));
        }
    }
    Ok(())
}

/// The values `λ_{N-j+1} + β(j-1)`, `j = 1..N`.
pub fn symmetric_spectrum(lambda: &Partition, spec: &FamilySpec) -> Vec<Rational> {
    let n = spec.n();
    (1..=n)
        .map(|j| {
            Rational::from_integer(
                (lambda.part(n - j) as i64 + spec.beta() as i64 * (j as i64 - 1)).into(),
            )
        })
        .collect()
}

/// The symmetric family polynomial of `spec` by its default construction:
/// triangular for Jack, intertwined for Hermite and Laguerre.
pub fn family_polynomial(lambda: &Partition, spec: &FamilySpec) -> Result<FamilyPolynomial> {
    match spec.family() {
        Family::Jack => jack(lambda, spec, Construction::Triangular),
        Family::Hermite => hermite(lambda, spec, Construction::Intertwined),
        Family::Laguerre => laguerre(lambda, spec, Construction::Intertwined),
    }
}

/// Converts an operator image in the carrier variables back to the
/// family's storage variables.
pub(crate) fn from_carrier(spec: &FamilySpec, f: Polynomial) -> Result<Polynomial> {
    if spec.family() == Family::Laguerre {
        f.z_to_u().ok_or(Error::EvennessViolated)
    } else {
        Ok(f)
    }
}
