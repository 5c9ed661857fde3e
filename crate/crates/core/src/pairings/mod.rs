//! Inner products of the three families, the Dunkl pairing, and the
//! closed-form norm evaluators.
//!
//! Integrals against Gaussian-type weights are reduced to sums of exact
//! one-variable moments; the transcendental constants `π^{1/2}` and
//! `Γ(γ+1/2)` are carried symbolically by [`ScaledRational`].

mod inner;
mod norms;
mod scaled;

pub use inner::{
    ct_pairing, dunkl_pairing, gauss_pairing, induced_pairing, laguerre_pairing,
    laguerre_pairing_z, DunklVariant,
};
pub use norms::{norm_formula, shift_constants, NormForm};
pub use scaled::ScaledRational;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::arith::{vandermonde, Polynomial, Variant};

/// `Π_{i<j} (x_i - x_j)^{2β}`, expanded once per `(N, β)`.
pub(crate) fn weight(n: usize, beta: u32) -> Arc<Polynomial> {
    type Store = RwLock<HashMap<(usize, u32), Arc<Polynomial>>>;
    static STORE: OnceLock<Store> = OnceLock::new();
    let store = STORE.get_or_init(Default::default);
    if let Some(w) = store.read().unwrap().get(&(n, beta)) {
        return w.clone();
    }
    let w = Arc::new(vandermonde(n, Variant::A).pow(2 * beta));
    store.write().unwrap().insert((n, beta), w.clone());
    w
}
