//! Exact operator calculus for Dunkl and Cherednik operators of types A and B,
//! with the Jack, multivariable Hermite and multivariable Laguerre families
//! they generate.

pub mod arith;
mod error;
pub mod families;
pub mod operators;
pub mod pairings;
pub mod raising;
pub mod verify;

pub use error::{Error, Result};
