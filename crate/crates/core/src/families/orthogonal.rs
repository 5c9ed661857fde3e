use super::{
    check_sym_triangular, jack, memo_family, nonsym_jack, sigma_a, sigma_b, symmetric_spectrum,
    Construction, FamilyPolynomial, Label, NonSymLabel,
};
use crate::arith::{dominance_leq, solve, Matrix, Partition, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::operators::{Family, FamilySpec};
use crate::pairings::{gauss_pairing, laguerre_pairing};

fn require(spec: &FamilySpec, family: Family) -> Result<()> {
    if spec.family() == family {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "expected a {family} spec, got {spec}"
        )))
    }
}

/// Partitions whose `m_μ` may appear below `m_λ`: all lower degrees (of the
/// same parity when `parity` is set) and the dominance-lower ones of equal
/// degree.
fn lower_basis(lambda: &Partition, parity: bool) -> Vec<Partition> {
    let n = lambda.len();
    let w = lambda.weight();
    let mut out = Vec::new();
    for d in 0..w {
        if parity && (w - d) % 2 == 1 {
            continue;
        }
        out.extend(Partition::all_of_weight(d, n));
    }
    out.extend(
        Partition::all_of_weight(w, n)
            .into_iter()
            .filter(|mu| mu != lambda && dominance_leq(mu, lambda).unwrap_or(false)),
    );
    out
}

/// `m_λ + Σ c_μ m_μ` orthogonal to every `m_ν` of the lower basis.
fn gram(lambda: &Partition, spec: &FamilySpec) -> Result<Polynomial> {
    let hermite = spec.family() == Family::Hermite;
    let pair = |f: &Polynomial, g: &Polynomial| -> Result<Rational> {
        Ok(if hermite {
            gauss_pairing(f, g, spec)?.q
        } else {
            laguerre_pairing(f, g, spec)?.q
        })
    };
    let basis = lower_basis(lambda, hermite);
    let lead = Polynomial::monomial_symmetric(lambda);
    let ms: Vec<Polynomial> = basis.iter().map(Polynomial::monomial_symmetric).collect();
    let k = ms.len();
    let mut mat = Matrix::zeros(k, k);
    let mut rhs = Vec::with_capacity(k);
    for (r, mr) in ms.iter().enumerate() {
        for (c, mc) in ms.iter().enumerate() {
            if c < r {
                let v = mat.get(c, r).clone();
                mat.set(r, c, v);
            } else {
                mat.set(r, c, pair(mc, mr)?);
            }
        }
        rhs.push(-pair(&lead, mr)?);
    }
    let coeffs = solve(&mat, &rhs)
        .ok_or_else(|| Error::Unsupported(format!("singular Gram system for ({lambda})")))?;
    let mut out = lead;
    for (m, c) in ms.iter().zip(&coeffs) {
        out.add_scaled(m, c);
    }
    Ok(out)
}

fn orthogonal(
    lambda: &Partition,
    spec: &FamilySpec,
    method: Construction,
    family: Family,
) -> Result<FamilyPolynomial> {
    require(spec, family)?;
    if lambda.len() != spec.n() {
        return Err(crate::arith::ArithError::SizeMismatch(lambda.len(), spec.n()).into());
    }
    if family == Family::Laguerre && !spec.gamma_convergent() {
        return Err(Error::DivergentWeight);
    }
    let poly = match method {
        Construction::Gram => memo_family(spec, &Label::Sym(lambda.clone()), method, || {
            gram(lambda, spec)
        })?,
        Construction::Intertwined => {
            memo_family(spec, &Label::Sym(lambda.clone()), method, || {
                let j = jack(lambda, &spec.as_jack(), Construction::Triangular)?.poly;
                if family == Family::Hermite {
                    sigma_a(&j, spec)
                } else {
                    sigma_b(&j, spec)
                }
            })?
        }
        Construction::Rodrigues => crate::raising::rodrigues(lambda, spec)?.poly,
        other => {
            return Err(Error::Unsupported(format!(
                "{family} has no {other} construction"
            )))
        }
    };
    check_sym_triangular(&poly, lambda)?;
    Ok(FamilyPolynomial {
        label: Label::Sym(lambda.clone()),
        spec: spec.clone(),
        poly,
        construction: method,
        eigenvalues: symmetric_spectrum(lambda, spec),
    })
}

/// Multivariable Hermite polynomial `H_λ`, monic in `m_λ`.
pub fn hermite(
    lambda: &Partition,
    spec: &FamilySpec,
    method: Construction,
) -> Result<FamilyPolynomial> {
    orthogonal(lambda, spec, method, Family::Hermite)
}

/// Multivariable Laguerre polynomial `L_λ` in `u = z²`, monic in `m_λ(u)`.
pub fn laguerre(
    lambda: &Partition,
    spec: &FamilySpec,
    method: Construction,
) -> Result<FamilyPolynomial> {
    orthogonal(lambda, spec, method, Family::Laguerre)
}

fn nonsym_image(
    label: &NonSymLabel,
    spec: &FamilySpec,
    family: Family,
) -> Result<FamilyPolynomial> {
    require(spec, family)?;
    let e = nonsym_jack(label, &spec.as_jack())?;
    let poly = memo_family(
        spec,
        &Label::NonSym(label.clone()),
        Construction::Intertwined,
        || {
            if family == Family::Hermite {
                sigma_a(&e.poly, spec)
            } else {
                sigma_b(&e.poly, spec)
            }
        },
    )?;
    Ok(FamilyPolynomial {
        label: Label::NonSym(label.clone()),
        spec: spec.clone(),
        poly,
        construction: Construction::Intertwined,
        eigenvalues: e.eigenvalues,
    })
}

/// Non-symmetric Hermite polynomial `σ^A(E^λ_w)`.
pub fn nonsym_hermite(label: &NonSymLabel, spec: &FamilySpec) -> Result<FamilyPolynomial> {
    nonsym_image(label, spec, Family::Hermite)
}

/// Non-symmetric Laguerre polynomial `σ^B(E^λ_w)`, in `u = z²`.
pub fn nonsym_laguerre(label: &NonSymLabel, spec: &FamilySpec) -> Result<FamilyPolynomial> {
    nonsym_image(label, spec, Family::Laguerre)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, parse_polynomial, rat, Permutation};

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn hermite_one_variable() {
        let s = FamilySpec::hermite(1, 0);
        let h = hermite(&part(&[2]), &s, Construction::Gram).unwrap();
        assert_eq!(h.poly, p("x^2 - 1/2", 1));
        let h = hermite(&part(&[1]), &s, Construction::Gram).unwrap();
        assert_eq!(h.poly, p("x", 1));
        // monic physicists' Hermite: H_3 / 8 = x^3 - 3/2 x
        let h = hermite(&part(&[3]), &s, Construction::Gram).unwrap();
        assert_eq!(h.poly, p("x^3 - 3/2*x", 1));
    }

    #[test]
    fn laguerre_one_variable() {
        for g in [rat(0, 1), rat(1, 3), rat(1, 2)] {
            let s = FamilySpec::laguerre(1, 0, g.clone());
            let l = laguerre(&part(&[1]), &s, Construction::Gram).unwrap();
            let expected = &p("u", 1) - &Polynomial::constant(1, &g + rat(1, 2));
            assert_eq!(l.poly, expected);
            assert_eq!(
                laguerre(&part(&[0]), &s, Construction::Gram).unwrap().poly,
                p("1", 1)
            );
        }
        assert_eq!(
            laguerre(
                &part(&[1]),
                &FamilySpec::laguerre(1, 0, rat(-1, 2)),
                Construction::Gram
            ),
            Err(Error::DivergentWeight)
        );
    }

    #[test]
    fn gram_equals_intertwined() {
        for beta in 0..3 {
            let h = FamilySpec::hermite(2, beta);
            let l = FamilySpec::laguerre(2, beta, rat(1, 2));
            for w in 0..=3 {
                for lam in Partition::all_of_weight(w, 2) {
                    let a = hermite(&lam, &h, Construction::Gram).unwrap();
                    let b = hermite(&lam, &h, Construction::Intertwined).unwrap();
                    assert_eq!(a.poly, b.poly, "H ({lam}) beta={beta}");
                    let a = laguerre(&lam, &l, Construction::Gram).unwrap();
                    let b = laguerre(&lam, &l, Construction::Intertwined).unwrap();
                    assert_eq!(a.poly, b.poly, "L ({lam}) beta={beta}");
                    assert!(b.verify_eigen().unwrap());
                }
            }
        }
    }

    #[test]
    fn nonsym_images() {
        let h = FamilySpec::hermite(2, 1);
        let id = NonSymLabel::dominant(&part(&[1, 0]));
        assert_eq!(nonsym_hermite(&id, &h).unwrap().poly, p("x1", 2));
        let zero = NonSymLabel::dominant(&part(&[0, 0]));
        assert_eq!(nonsym_hermite(&zero, &h).unwrap().poly, p("1", 2));
        let l = FamilySpec::laguerre(2, 1, rat(1, 3));
        for w in 0..=2 {
            for lab in NonSymLabel::all_of_weight(w, 2) {
                assert!(
                    nonsym_hermite(&lab, &h).unwrap().verify_eigen().unwrap(),
                    "{lab}"
                );
                assert!(
                    nonsym_laguerre(&lab, &l).unwrap().verify_eigen().unwrap(),
                    "{lab}"
                );
            }
        }
        let s1 = NonSymLabel::new(part(&[1, 0]), Permutation::simple(2, 0));
        assert_eq!(
            nonsym_hermite(&s1, &h).unwrap().eigenvalues,
            vec![int(0), int(2)]
        );
    }
}
