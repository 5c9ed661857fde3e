use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ScaledRational;
use crate::arith::{factorial, pochhammer, rat, Partition, Rational};
use crate::error::{Error, Result};
use crate::operators::{Family, FamilySpec};

/// Which of the two closed forms of the norm to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormForm {
    /// Product over pairs `i < j` and `k = 1..β`.
    Product,
    /// Product over the boxes of the diagram.
    Hook,
}

impl NormForm {
    pub fn name(self) -> &'static str {
        match self {
            NormForm::Product => "product",
            NormForm::Hook => "hook",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "product" | "product_form" => Ok(NormForm::Product),
            "hook" | "hook_form" => Ok(NormForm::Hook),
            other => Err(Error::Unsupported(format!("unknown norm form {other:?}"))),
        }
    }
}

/// Product of linear factors `a + bβ` evaluated at a fixed `β`, taking the
/// limit when `β = 0` makes some factors vanish.
struct LimitProduct {
    beta: Rational,
    order: i64,
    value: Rational,
}

impl LimitProduct {
    fn new(beta: u32) -> Self {
        LimitProduct {
            beta: Rational::from_integer(beta.into()),
            order: 0,
            value: Rational::one(),
        }
    }

    fn factor(&mut self, a: i64, b: i64, power: i64) {
        let v = Rational::from_integer(a.into()) + &self.beta * Rational::from_integer(b.into());
        if !v.is_zero() {
            self.value *= if power > 0 { v } else { v.recip() };
        } else if b != 0 && self.beta.is_zero() {
            self.order += power;
            let b = Rational::from_integer(b.into());
            self.value *= if power > 0 { b } else { b.recip() };
        } else if power > 0 {
            self.order += 1_000;
        } else {
            self.order -= 1_000;
        }
    }

    fn mul(&mut self, a: i64, b: i64) {
        self.factor(a, b, 1);
    }

    fn div(&mut self, a: i64, b: i64) {
        self.factor(a, b, -1);
    }

    fn finish(self) -> Result<Rational> {
        match self.order {
            0 => Ok(self.value),
            o if o > 0 => Ok(Rational::zero()),
            _ => Err(Error::Unsupported("norm formula has a pole".into())),
        }
    }
}

fn fact(n: u64) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `N! Π_{k=1}^β Π_{i<j} (λ_i-λ_j-k+β(j-i+1)) / (λ_i-λ_j+k+β(j-i-1))`.
///
/// At `β = 0` the `k`-product is read as its Gamma-function continuation,
/// whose limit contributes `(j-i)/(j-i+1)` for every pair with `λ_i = λ_j`;
/// the whole expression then equals `N!/#Stab(λ)`.
fn pair_product(lambda: &Partition, beta: u32) -> Rational {
    let n = lambda.len();
    let mut out = fact(n as u64);
    let b = beta as i64;
    for i in 0..n {
        for j in i + 1..n {
            let d = lambda.part(i) as i64 - lambda.part(j) as i64;
            let gap = (j - i) as i64;
            if beta == 0 {
                if d == 0 {
                    out *= rat(gap, gap + 1);
                }
                continue;
            }
            for k in 1..=b {
                out *= rat(d - k + b * (gap + 1), d + k + b * (gap - 1));
            }
        }
    }
    out
}

/// `Π_j (λ_j + β(N-j))!`
fn shifted_factorials(lambda: &Partition, beta: u32) -> Rational {
    let n = lambda.len();
    (0..n)
        .map(|j| fact(lambda.part(j) as u64 + beta as u64 * (n - 1 - j) as u64))
        .product()
}

/// `Π_j Γ(λ_j + β(N-j) + γ + 1/2) / Γ(γ+1/2)`
fn gamma_ratios(lambda: &Partition, spec: &FamilySpec) -> Rational {
    let n = lambda.len();
    let base = spec.gamma() + rat(1, 2);
    (0..n)
        .map(|j| {
            pochhammer(
                &base,
                lambda.part(j) as u64 + spec.beta() as u64 * (n - 1 - j) as u64,
            )
        })
        .product()
}

fn two_pow(k: u64) -> Rational {
    Rational::from_integer(BigInt::from(2).pow(k as u32))
}

/// `(j-1+β(N-i+1))`, `(λ_i-j+1+β(λ'_j-i))` and `1/(λ_i-j+β(λ'_j-i+1))` over
/// the boxes, with the extra `1/(j+β(N-i))` of the Jack form when `jack`.
fn box_product(lambda: &Partition, beta: u32, jack: bool) -> Result<Rational> {
    let n = lambda.len() as i64;
    let mut acc = LimitProduct::new(beta);
    for (i, j) in lambda.boxes() {
        let (i, j) = (i as i64, j as i64);
        let li = lambda.part(i as usize - 1) as i64;
        let cj = lambda.conj_part(j as u32) as i64;
        acc.mul(j - 1, n - i + 1);
        acc.mul(li - j + 1, cj - i);
        acc.div(li - j, cj - i + 1);
        if jack {
            acc.div(j, n - i);
        }
    }
    acc.finish()
}

fn beta_factorial_ratio(lambda: &Partition, beta: u32, jack: bool) -> Rational {
    let n = lambda.len() as u64;
    let b = beta as u64;
    let num: Rational = if jack {
        fact(n * b)
    } else {
        (1..=n).map(|j| fact(j * b)).product()
    };
    num / fact(b).pow(n as i32)
}

/// Closed-form `⟨F_λ, F_λ⟩` for the family of `spec`.
pub fn norm_formula(
    lambda: &Partition,
    spec: &FamilySpec,
    form: NormForm,
) -> Result<ScaledRational> {
    let n = spec.n();
    if lambda.len() != n {
        return Err(crate::arith::ArithError::SizeMismatch(lambda.len(), n).into());
    }
    let beta = spec.beta();
    let pairs = (n * (n - 1) / 2) as u64;
    let family = spec.family();
    if family == Family::Laguerre && !spec.gamma_convergent() {
        return Err(Error::DivergentWeight);
    }
    let q = match form {
        NormForm::Product => {
            let base = pair_product(lambda, beta);
            match family {
                Family::Jack => base,
                Family::Hermite => {
                    base * shifted_factorials(lambda, beta)
                        / two_pow(lambda.weight() as u64 + beta as u64 * pairs)
                }
                Family::Laguerre => {
                    base * shifted_factorials(lambda, beta) * gamma_ratios(lambda, spec)
                }
            }
        }
        NormForm::Hook => {
            let jack = family == Family::Jack;
            let base = beta_factorial_ratio(lambda, beta, jack) * box_product(lambda, beta, jack)?;
            match family {
                Family::Jack => base,
                Family::Hermite => base / two_pow(lambda.weight() as u64 + beta as u64 * pairs),
                Family::Laguerre => base * gamma_ratios(lambda, spec),
            }
        }
    };
    Ok(match family {
        Family::Jack => ScaledRational::rational(q),
        Family::Hermite => ScaledRational::new(q, n as u32, 0),
        Family::Laguerre => ScaledRational::new(q, 0, n as u32),
    })
}

/// `(c_λ, c̃_λ)` linking level `β` (the spec's) to level `β+1`:
/// `Π_{i<j} (λ_{N-j+1} - λ_{N-i+1} + j - i + β(j-i∓1))`.
pub fn shift_constants(lambda: &Partition, spec: &FamilySpec) -> (Rational, Rational) {
    let n = lambda.len();
    let b = spec.beta() as i64;
    let mut c = Rational::one();
    let mut ct = Rational::one();
    for i in 1..=n {
        for j in i + 1..=n {
            let d = lambda.part(n - j) as i64 - lambda.part(n - i) as i64 + (j - i) as i64;
            let gap = (j - i) as i64;
            c *= Rational::from_integer((d + b * (gap - 1)).into());
            ct *= Rational::from_integer((d + b * (gap + 1)).into());
        }
    }
    (c, ct)
}
