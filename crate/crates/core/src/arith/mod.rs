//! Exact arithmetic core: rationals, sparse Laurent polynomials, partitions,
//! permutations and the two partial orders that organise triangularity.
//!
//! Data-structure indices (variables, permutation points) are 0-based
//! throughout this module. The operator constructors in [`crate::operators`]
//! use the 1-based indices of the formulas they implement.

mod codec;
mod linalg;
mod monomial;
mod order;
mod parse;
mod partition;
mod permutation;
mod polynomial;

pub use codec::{PolynomialJson, TermJson};
pub use linalg::{nullspace, solve, Matrix};
pub use monomial::Monomial;
pub use order::{bruhat_leq, dominance_leq, precedes};
pub use parse::parse_polynomial;
pub use partition::Partition;
pub use permutation::Permutation;
pub use polynomial::{vandermonde, Polynomial, Variant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational scalar. Always reduced, denominator positive.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("ambient size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("not divisible")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("expected a polynomial with non-negative exponents")]
    NotPolynomial,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let s = s.trim();
    let bad = |msg: &str| ArithError::Parse {
        pos: 0,
        msg: format!("{msg}: {s:?}"),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
    let d: BigInt = den.parse().map_err(|_| bad("bad denominator"))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Renders as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Rising factorial `a (a+1) ... (a+k-1)`.
pub fn pochhammer(a: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term += Rational::one();
    }
    acc
}
