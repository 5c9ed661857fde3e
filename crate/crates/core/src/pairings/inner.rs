use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{weight, ScaledRational};
use crate::arith::{factorial, pochhammer, ArithError, Monomial, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::families::sigma_a;
use crate::operators::{cherednik_a, dunkl_a, Family, FamilySpec};

/// `(-1)^{βN(N-1)/2} [f(x) g(x^{-1}) Π_{i<j}(x_i-x_j)^{2β} Π_j x_j^{-β(N-1)}]_0`.
pub fn ct_pairing(f: &Polynomial, g: &Polynomial, spec: &FamilySpec) -> Result<Rational> {
    spec.require(&[Family::Jack], "constant-term pairing")?;
    let n = spec.n();
    check(f, n)?;
    check(g, n)?;
    let beta = spec.beta();
    let w = weight(n, beta);
    let shift = (beta as i32) * (n as i32 - 1);
    let mut acc = Rational::zero();
    for (a, ca) in f.terms() {
        for (b, cb) in g.terms() {
            let e: Vec<i32> = (0..n).map(|j| b.get(j) - a.get(j) + shift).collect();
            if e.iter().any(|&x| x < 0) {
                continue;
            }
            let c = w.coeff(&Monomial::new(&e));
            if !c.is_zero() {
                acc += ca * cb * c;
            }
        }
    }
    let pairs = n * (n - 1) / 2;
    if (beta as usize * pairs) % 2 == 1 {
        acc = -acc;
    }
    Ok(acc)
}

fn check(f: &Polynomial, n: usize) -> Result<()> {
    if f.nvars() != n {
        return Err(ArithError::SizeMismatch(f.nvars(), n).into());
    }
    if !f.is_polynomial() {
        return Err(ArithError::NotPolynomial.into());
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Moment {
    /// `∫ x^k e^{-x²} dx / π^{1/2}`
    Gauss,
    /// `∫ |z|^{2γ} z^{2k} e^{-z²} dz / Γ(γ+1/2)`, indexed by `k`
    Laguerre(Rational),
}

impl Moment {
    fn one_dim(&self, k: i32) -> Rational {
        match self {
            Moment::Gauss => {
                if k % 2 == 1 {
                    return Rational::zero();
                }
                let t = (k / 2) as u64;
                Rational::new(
                    factorial(2 * t),
                    BigInt::from(4).pow(t as u32) * factorial(t),
                )
            }
            Moment::Laguerre(gamma) => {
                pochhammer(&(gamma + Rational::new(1.into(), 2.into())), k as u64)
            }
        }
    }
}

type MomentKey = (Moment, usize, u32, Monomial);

/// `Σ_m W_m Π_j μ(e_j + m_j)` for the cached weight `W`.
fn weighted_moment(kind: &Moment, n: usize, beta: u32, e: &Monomial) -> Rational {
    static STORE: OnceLock<RwLock<HashMap<MomentKey, Rational>>> = OnceLock::new();
    let store = STORE.get_or_init(Default::default);
    let key = (kind.clone(), n, beta, e.clone());
    if let Some(v) = store.read().unwrap().get(&key) {
        return v.clone();
    }
    let w = weight(n, beta);
    let mut acc = Rational::zero();
    for (m, c) in w.terms() {
        let mut term = c.clone();
        for j in 0..n {
            term *= kind.one_dim(e.get(j) + m.get(j));
            if term.is_zero() {
                break;
            }
        }
        acc += term;
    }
    store.write().unwrap().insert(key, acc.clone());
    acc
}

fn moment_sum(h: &Polynomial, kind: &Moment, n: usize, beta: u32) -> Rational {
    let mut acc = Rational::zero();
    for (m, c) in h.terms() {
        acc += c * weighted_moment(kind, n, beta, m);
    }
    acc
}

/// `∫ f g Π_{i<j}|x_i-x_j|^{2β} e^{-Σx²} dx`, as a multiple of `π^{N/2}`.
pub fn gauss_pairing(f: &Polynomial, g: &Polynomial, spec: &FamilySpec) -> Result<ScaledRational> {
    spec.require(&[Family::Hermite], "Gaussian pairing")?;
    let n = spec.n();
    check(f, n)?;
    check(g, n)?;
    let q = moment_sum(&(f * g), &Moment::Gauss, n, spec.beta());
    Ok(ScaledRational::new(q, n as u32, 0))
}

/// The Laguerre pairing of two polynomials in `u = z²`, as a multiple of
/// `Γ(γ+1/2)^N`.
pub fn laguerre_pairing(
    f: &Polynomial,
    g: &Polynomial,
    spec: &FamilySpec,
) -> Result<ScaledRational> {
    spec.require(&[Family::Laguerre], "Laguerre pairing")?;
    if !spec.gamma_convergent() {
        return Err(Error::DivergentWeight);
    }
    let n = spec.n();
    check(f, n)?;
    check(g, n)?;
    let q = moment_sum(&(f * g), &Moment::Laguerre(spec.gamma()), n, spec.beta());
    Ok(ScaledRational::new(q, 0, n as u32))
}

/// The Laguerre pairing of two polynomials in `z`; odd parts integrate to
/// zero.
pub fn laguerre_pairing_z(
    f: &Polynomial,
    g: &Polynomial,
    spec: &FamilySpec,
) -> Result<ScaledRational> {
    let n = spec.n();
    check(f, n)?;
    check(g, n)?;
    let h = f * g;
    let even = Polynomial::from_terms(
        n,
        h.terms()
            .filter(|(m, _)| m.exponents().iter().all(|e| e % 2 == 0))
            .map(|(m, c)| (m.clone(), c.clone())),
    );
    let u = even.z_to_u().expect("even part");
    laguerre_pairing(&u, &Polynomial::one(n), spec)
}

/// `⟨f(ã†)·1, g(ã†)·1⟩` with `ã† = A/√2`. Homogeneous parts of degrees
/// `d`, `e` contribute `2^{(d+e)/2}⟨σ^A f_d, σ^A g_e⟩`; odd `d+e` vanish by
/// parity, so the result stays a rational multiple of `π^{N/2}`.
pub fn induced_pairing(
    f: &Polynomial,
    g: &Polynomial,
    spec: &FamilySpec,
) -> Result<ScaledRational> {
    spec.require(&[Family::Hermite], "induced pairing")?;
    let n = spec.n();
    check(f, n)?;
    check(g, n)?;
    let fs: Vec<(i64, Polynomial)> = f
        .homogeneous_components()
        .into_iter()
        .map(|(d, p)| Ok((d, sigma_a(&p, spec)?)))
        .collect::<Result<_>>()?;
    let gs: Vec<(i64, Polynomial)> = g
        .homogeneous_components()
        .into_iter()
        .map(|(d, p)| Ok((d, sigma_a(&p, spec)?)))
        .collect::<Result<_>>()?;
    let mut acc = ScaledRational::new(Rational::zero(), n as u32, 0);
    for (d, sf) in &fs {
        for (e, sg) in &gs {
            if (d + e) % 2 == 1 {
                continue;
            }
            let scale = Rational::from_integer(BigInt::from(2).pow(((d + e) / 2) as u32));
            let term = gauss_pairing(sf, sg, spec)?.scale(&scale);
            acc = acc.checked_add(&term).expect("same transcendental part");
        }
    }
    Ok(acc)
}

/// Which operators replace the variables in [`dunkl_pairing`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DunklVariant {
    /// Plain Dunkl operators `D_j`.
    Dunkl,
    /// Cherednik operators `D̂_j`.
    Cherednik,
}

/// `[f(D) g]_0`: substitute commuting operators for the variables of `f`,
/// apply to `g` and evaluate at `x = 0`.
pub fn dunkl_pairing(
    f: &Polynomial,
    g: &Polynomial,
    spec: &FamilySpec,
    variant: DunklVariant,
) -> Result<Rational> {
    spec.require(&[Family::Jack, Family::Hermite], "Dunkl pairing")?;
    let n = spec.n();
    check(f, n)?;
    check(g, n)?;
    let jack = spec.as_jack();
    let ops = (1..=n)
        .map(|j| match variant {
            DunklVariant::Dunkl => dunkl_a(j, &jack),
            DunklVariant::Cherednik => cherednik_a(j, &jack),
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    // Images of g under monomials in the operators, shared across terms.
    let mut images: HashMap<Monomial, Polynomial> = HashMap::new();
    images.insert(Monomial::one(n), g.clone());
    let mut acc = Rational::zero();
    let mut order: Vec<&Monomial> = f.terms().map(|(m, _)| m).collect();
    order.sort_by_key(|m| m.degree());
    for m in order {
        let img = image(m, &ops, &mut images)?;
        acc += f.coeff(m) * img.constant_term();
    }
    Ok(acc)
}

fn image(
    m: &Monomial,
    ops: &[crate::operators::Operator],
    images: &mut HashMap<Monomial, Polynomial>,
) -> Result<Polynomial> {
    if let Some(p) = images.get(m) {
        return Ok(p.clone());
    }
    let j = (0..m.nvars()).find(|&j| m.get(j) > 0).unwrap();
    let prev = image(&m.with(j, m.get(j) - 1), ops, images)?;
    let out = ops[j].apply(&prev)?;
    images.insert(m.clone(), out.clone());
    Ok(out)
}
