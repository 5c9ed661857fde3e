use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{int, Monomial, Partition, Polynomial};

/// Generator for one suite configuration: the grid seed mixed with an
/// FNV-1a hash of `tag`, so every configuration draws its own stream.
pub fn rng_for(seed: u64, tag: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in tag.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

fn coefficient(rng: &mut ChaCha8Rng) -> i64 {
    loop {
        let c = rng.gen_range(-3..=3);
        if c != 0 {
            return c;
        }
    }
}

/// Up to four terms with monomials of degree `≤ degree` and coefficients
/// in `-3..=3`.
pub fn random_polynomial(rng: &mut ChaCha8Rng, n: usize, degree: u32) -> Polynomial {
    let pool = Monomial::all_up_to(n, degree);
    let terms = rng.gen_range(1..=4);
    let mut f = Polynomial::zero(n);
    for _ in 0..terms {
        let m = pool[rng.gen_range(0..pool.len())].clone();
        f.add_term(m, int(coefficient(rng)));
    }
    if f.is_zero() {
        f = Polynomial::one(n);
    }
    f
}

/// A combination of up to three `m_μ` with `|μ| ≤ max_weight`.
pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, max_weight: u32) -> Polynomial {
    let pool = Partition::all_up_to(max_weight, n);
    let terms = rng.gen_range(1..=3);
    let mut f = Polynomial::zero(n);
    for _ in 0..terms {
        let mu = &pool[rng.gen_range(0..pool.len())];
        f.add_scaled(&Polynomial::monomial_symmetric(mu), &int(coefficient(rng)));
    }
    if f.is_zero() {
        f = Polynomial::one(n);
    }
    f
}
