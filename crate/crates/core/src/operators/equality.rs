use num_traits::One;

use super::{Operator, OperatorError};
use crate::arith::{Monomial, Polynomial, Rational};

/// First input on which two operators disagree, with both images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub input: Polynomial,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
}

/// True iff `a` and `b` agree on every monomial of total degree `≤ degree`.
pub fn operator_equal(a: &Operator, b: &Operator, degree: u32) -> Result<bool, OperatorError> {
    Ok(operator_diff(a, b, degree)?.is_none())
}

/// The first monomial (in graded-lex order) where `a` and `b` differ.
pub fn operator_diff(
    a: &Operator,
    b: &Operator,
    degree: u32,
) -> Result<Option<Counterexample>, OperatorError> {
    if a.nvars() != b.nvars() {
        return Err(OperatorError::SizeMismatch(a.nvars(), b.nvars()));
    }
    let basis: Vec<Polynomial> = Monomial::all_up_to(a.nvars(), degree)
        .into_iter()
        .map(|m| Polynomial::term(m, Rational::one()))
        .collect();
    operator_diff_on(a, b, &basis)
}

/// Agreement on an explicit spanning set.
pub fn operator_diff_on(
    a: &Operator,
    b: &Operator,
    basis: &[Polynomial],
) -> Result<Option<Counterexample>, OperatorError> {
    for f in basis {
        let lhs = a.apply(f)?;
        let rhs = b.apply(f)?;
        if lhs != rhs {
            return Ok(Some(Counterexample {
                input: f.clone(),
                lhs,
                rhs,
            }));
        }
    }
    Ok(None)
}

pub fn operator_equal_on(
    a: &Operator,
    b: &Operator,
    basis: &[Polynomial],
) -> Result<bool, OperatorError> {
    Ok(operator_diff_on(a, b, basis)?.is_none())
}
