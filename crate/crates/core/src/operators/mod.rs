//! Linear operators on polynomials: the primitive building blocks
//! (derivatives, exchanges, sign flips, divided differences) and the
//! Dunkl, Cherednik, creation/annihilation and `h̃` operators built from
//! them.

mod equality;
mod expr;
mod named;
mod spec;
mod symmetrize;

pub use equality::{
    operator_diff, operator_diff_on, operator_equal, operator_equal_on, Counterexample,
};
pub use expr::Operator;
pub use named::{
    annihilation_a, annihilation_b, cherednik_a, cherednik_b, cherednik_family, creation_a,
    creation_b, dunkl_a, dunkl_b, htilde, operator_by_name,
};
pub use spec::{Family, FamilySpec};
pub use symmetrize::{
    s_hat, symmetrizer, w_hat, w_hat_word, y_prime, SymmetrizerKind, MAX_GROUP_N,
};

use thiserror::Error;

/// Which Weyl group an operator belongs to. Type-B primitives (sign flips
/// and the divided differences that use them) only make sense in `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootType {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error("type-B primitive in type-A context")]
    TypeBInTypeA,
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("ambient size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("{op} is not defined for the {family} family")]
    FamilyMismatch { op: &'static str, family: Family },
    #[error("N = {0} too large for group averaging (max {MAX_GROUP_N})")]
    TooLarge(usize),
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
}
