use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, parse_rational, Rational};

/// `q · π^{p/2} · Γ(γ+1/2)^g` with `q` rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScaledRational {
    pub q: Rational,
    pub pi_half: u32,
    pub gamma_base: u32,
}

impl ScaledRational {
    pub fn new(q: Rational, pi_half: u32, gamma_base: u32) -> Self {
        ScaledRational {
            q,
            pi_half,
            gamma_base,
        }
    }

    pub fn rational(q: Rational) -> Self {
        Self::new(q, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    /// Sum of two values with the same transcendental part. A zero summand
    /// is compatible with anything.
    pub fn checked_add(&self, other: &ScaledRational) -> Option<ScaledRational> {
        if other.is_zero() {
            return Some(self.clone());
        }
        if self.is_zero() {
            return Some(other.clone());
        }
        if self.pi_half != other.pi_half || self.gamma_base != other.gamma_base {
            return None;
        }
        Some(Self::new(&self.q + &other.q, self.pi_half, self.gamma_base))
    }

    pub fn scale(&self, c: &Rational) -> ScaledRational {
        Self::new(&self.q * c, self.pi_half, self.gamma_base)
    }

    /// Human-readable form, e.g. `"π"`, `"1/2 · π^{1/2}"`, `"3 · Γ(γ+1/2)^2"`.
    pub fn render(&self) -> String {
        if self.q.is_zero() {
            return "0".into();
        }
        let mut factors = Vec::new();
        if self.pi_half > 0 {
            factors.push(if self.pi_half.is_multiple_of(2) {
                match self.pi_half / 2 {
                    1 => "π".to_string(),
                    k => format!("π^{k}"),
                }
            } else {
                format!("π^{{{}/2}}", self.pi_half)
            });
        }
        if self.gamma_base > 0 {
            factors.push(match self.gamma_base {
                1 => "Γ(γ+1/2)".to_string(),
                g => format!("Γ(γ+1/2)^{g}"),
            });
        }
        let q = format_rational(&self.q);
        if factors.is_empty() {
            return q;
        }
        let body = factors.join(" · ");
        if self.q.is_one() {
            body
        } else if self.q == -Rational::one() {
            format!("-{body}")
        } else {
            format!("{q} · {body}")
        }
    }
}

impl Mul for &ScaledRational {
    type Output = ScaledRational;
    fn mul(self, rhs: &ScaledRational) -> ScaledRational {
        ScaledRational::new(
            &self.q * &rhs.q,
            self.pi_half + rhs.pi_half,
            self.gamma_base + rhs.gamma_base,
        )
    }
}

impl fmt::Display for ScaledRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Serialize, Deserialize)]
struct Json {
    q: String,
    pi_half: u32,
    gamma_base: u32,
}

impl Serialize for ScaledRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Json {
            q: format_rational(&self.q),
            pi_half: self.pi_half,
            gamma_base: self.gamma_base,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ScaledRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = Json::deserialize(d)?;
        let q = parse_rational(&j.q).map_err(serde::de::Error::custom)?;
        Ok(ScaledRational::new(q, j.pi_half, j.gamma_base))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn render_forms() {
        assert_eq!(ScaledRational::new(int(1), 2, 0).render(), "π");
        assert_eq!(
            ScaledRational::new(rat(1, 2), 1, 0).render(),
            "1/2 · π^{1/2}"
        );
        assert_eq!(ScaledRational::new(int(3), 0, 2).render(), "3 · Γ(γ+1/2)^2");
        assert_eq!(
            ScaledRational::new(int(-1), 4, 1).render(),
            "-π^2 · Γ(γ+1/2)"
        );
        assert_eq!(ScaledRational::rational(rat(5, 3)).render(), "5/3");
        assert_eq!(ScaledRational::new(int(0), 2, 0).render(), "0");
    }

    #[test]
    fn arithmetic_rules() {
        let a = ScaledRational::new(int(2), 1, 0);
        let b = ScaledRational::new(int(3), 1, 0);
        assert_eq!(a.checked_add(&b), Some(ScaledRational::new(int(5), 1, 0)));
        assert_eq!(a.checked_add(&ScaledRational::new(int(1), 0, 1)), None);
        assert_eq!(
            a.checked_add(&ScaledRational::rational(int(0))),
            Some(a.clone())
        );
        assert_eq!(&a * &b, ScaledRational::new(int(6), 2, 0));
    }

    #[test]
    fn json_roundtrip() {
        let a = ScaledRational::new(rat(-7, 4), 3, 2);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"q":"-7/4","pi_half":3,"gamma_base":2}"#);
        assert_eq!(serde_json::from_str::<ScaledRational>(&s).unwrap(), a);
    }
}
