use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{ArithError, Monomial, Polynomial, Rational};

/// Canonical JSON form of a [`Polynomial`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub vars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i32>,
    pub num: String,
    pub den: String,
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        PolynomialJson {
            vars: p.nvars(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    exp: m.exponents().to_vec(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolynomialJson> for Polynomial {
    type Error = ArithError;

    fn try_from(j: &PolynomialJson) -> Result<Self, ArithError> {
        let mut p = Polynomial::zero(j.vars);
        for (pos, t) in j.terms.iter().enumerate() {
            if t.exp.len() != j.vars {
                return Err(ArithError::SizeMismatch(t.exp.len(), j.vars));
            }
            let bad = |msg: &str| ArithError::Parse {
                pos,
                msg: msg.to_string(),
            };
            let num: BigInt = t.num.parse().map_err(|_| bad("bad numerator"))?;
            let den: BigInt = t.den.parse().map_err(|_| bad("bad denominator"))?;
            if den == BigInt::from(0) {
                return Err(bad("zero denominator"));
            }
            p.add_term(Monomial::new(&t.exp), Rational::new(num, den));
        }
        Ok(p)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolynomialJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PolynomialJson::deserialize(d)?;
        Polynomial::try_from(&j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn json_shape_and_roundtrip() {
        let p = &Polynomial::monomial(&[2, 0]) - &Polynomial::constant(2, rat(1, 2));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"vars":2,"terms":[{"exp":[0,0],"num":"-1","den":"2"},{"exp":[2,0],"num":"1","den":"1"}]}"#
        );
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
