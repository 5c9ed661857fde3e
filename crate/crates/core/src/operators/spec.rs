use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::OperatorError;
use crate::arith::{format_rational, int, parse_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Jack,
    Hermite,
    Laguerre,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Jack => "jack",
            Family::Hermite => "hermite",
            Family::Laguerre => "laguerre",
        }
    }

    pub const ALL: [Family; 3] = [Family::Jack, Family::Hermite, Family::Laguerre];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = OperatorError;
    fn from_str(s: &str) -> Result<Self, OperatorError> {
        match s.to_ascii_lowercase().as_str() {
            "jack" => Ok(Family::Jack),
            "hermite" => Ok(Family::Hermite),
            "laguerre" => Ok(Family::Laguerre),
            other => Err(OperatorError::InvalidSpec(format!(
                "unknown family {other:?}"
            ))),
        }
    }
}

/// Parameters shared by every construction: family, number of variables,
/// coupling `β` (non-negative integer) and, for Laguerre only, `γ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    family: Family,
    n: usize,
    beta: u32,
    gamma: Option<Rational>,
}

impl FamilySpec {
    pub fn new(
        family: Family,
        n: usize,
        beta: u32,
        gamma: Option<Rational>,
    ) -> Result<Self, OperatorError> {
        if n == 0 {
            return Err(OperatorError::InvalidSpec("N must be at least 1".into()));
        }
        match (family, &gamma) {
            (Family::Laguerre, None) => {
                return Err(OperatorError::InvalidSpec("laguerre requires gamma".into()))
            }
            (Family::Jack | Family::Hermite, Some(_)) => {
                return Err(OperatorError::InvalidSpec(format!(
                    "{family} takes no gamma"
                )))
            }
            _ => {}
        }
        Ok(FamilySpec {
            family,
            n,
            beta,
            gamma,
        })
    }

    pub fn jack(n: usize, beta: u32) -> Self {
        Self::new(Family::Jack, n, beta, None).unwrap()
    }

    pub fn hermite(n: usize, beta: u32) -> Self {
        Self::new(Family::Hermite, n, beta, None).unwrap()
    }

    pub fn laguerre(n: usize, beta: u32, gamma: Rational) -> Self {
        Self::new(Family::Laguerre, n, beta, Some(gamma)).unwrap()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    pub fn beta_q(&self) -> Rational {
        int(self.beta as i64)
    }

    /// `γ`, zero outside the Laguerre family.
    pub fn gamma(&self) -> Rational {
        self.gamma.clone().unwrap_or_else(|| int(0))
    }

    pub fn gamma_opt(&self) -> Option<&Rational> {
        self.gamma.as_ref()
    }

    pub fn with_beta(&self, beta: u32) -> Self {
        FamilySpec {
            beta,
            ..self.clone()
        }
    }

    /// Same `N` and `β` as a Jack spec.
    pub fn as_jack(&self) -> Self {
        Self::jack(self.n, self.beta)
    }

    pub(crate) fn require(&self, ok: &[Family], op: &'static str) -> Result<(), OperatorError> {
        if ok.contains(&self.family) {
            Ok(())
        } else {
            Err(OperatorError::FamilyMismatch {
                op,
                family: self.family,
            })
        }
    }

    pub(crate) fn check_index(&self, j: usize) -> Result<usize, OperatorError> {
        if j == 0 || j > self.n {
            Err(OperatorError::IndexOutOfRange {
                index: j,
                n: self.n,
            })
        } else {
            Ok(j - 1)
        }
    }

    /// `γ > -1/2`, the condition for the Laguerre weight to be integrable.
    pub fn gamma_convergent(&self) -> bool {
        (self.gamma() * int(2) + int(1)).is_positive()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} N={} beta={}", self.family, self.n, self.beta)?;
        if let Some(g) = &self.gamma {
            write!(f, " gamma={}", format_rational(g))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SpecJson {
    family: Family,
    n: usize,
    beta: u32,
    gamma: Option<String>,
}

impl Serialize for FamilySpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SpecJson {
            family: self.family,
            n: self.n,
            beta: self.beta,
            gamma: self.gamma.as_ref().map(format_rational),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FamilySpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = SpecJson::deserialize(d)?;
        let gamma = j
            .gamma
            .map(|g| parse_rational(&g))
            .transpose()
            .map_err(D::Error::custom)?;
        FamilySpec::new(j.family, j.n, j.beta, gamma).map_err(D::Error::custom)
    }
}
