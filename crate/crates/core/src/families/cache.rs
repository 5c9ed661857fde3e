use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::{Construction, Label};
use crate::arith::Polynomial;
use crate::error::Result;
use crate::operators::FamilySpec;

type Key = (FamilySpec, Label, Construction);

fn store() -> &'static RwLock<HashMap<Key, Polynomial>> {
    static STORE: OnceLock<RwLock<HashMap<Key, Polynomial>>> = OnceLock::new();
    STORE.get_or_init(Default::default)
}

/// Memoised construction. The cache only saves work: a miss recomputes,
/// and concurrent misses compute the same value.
pub(crate) fn memo_family<F>(
    spec: &FamilySpec,
    label: &Label,
    construction: Construction,
    build: F,
) -> Result<Polynomial>
where
    F: FnOnce() -> Result<Polynomial>,
{
    let key = (spec.clone(), label.clone(), construction);
    if let Some(p) = store().read().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let p = build()?;
    store().write().unwrap().insert(key, p.clone());
    Ok(p)
}
