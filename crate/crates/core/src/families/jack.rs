use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{
    check_sym_triangular, m_coeff, memo_family, symmetric_spectrum, Construction, FamilyPolynomial,
    Label, NonSymLabel,
};
use crate::arith::{
    bruhat_leq, dominance_leq, nullspace, Matrix, Monomial, Partition, Permutation, Polynomial,
    Rational,
};
use crate::error::{Error, Result};
use crate::operators::{cherednik_a, Family, FamilySpec, Operator};

fn require_jack(spec: &FamilySpec) -> Result<()> {
    if spec.family() == Family::Jack {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "expected a jack spec, got {spec}"
        )))
    }
}

fn check_len(lambda: &Partition, spec: &FamilySpec) -> Result<()> {
    if lambda.len() != spec.n() {
        return Err(crate::arith::ArithError::SizeMismatch(lambda.len(), spec.n()).into());
    }
    Ok(())
}

/// `e_k(T) f` for `k = 0..=N`, read off from `Π_j (u + T_j) f`.
pub fn delta_coefficients(ops: &[Operator], f: &Polynomial) -> Result<Vec<Polynomial>> {
    let n = ops.len();
    let mut by_power = vec![f.clone()];
    for op in ops {
        let mut next = Vec::with_capacity(by_power.len() + 1);
        for p in 0..=by_power.len() {
            let mut acc = if p < by_power.len() {
                op.apply(&by_power[p])?
            } else {
                Polynomial::zero(f.nvars())
            };
            if p > 0 {
                acc += &by_power[p - 1];
            }
            next.push(acc);
        }
        by_power = next;
    }
    Ok((0..=n).map(|k| by_power[n - k].clone()).collect())
}

/// Elementary symmetric functions `e_0, .., e_N` of `values`.
pub fn elementary_of(values: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::one()];
    for v in values {
        let mut next = vec![Rational::zero(); e.len() + 1];
        for (k, c) in e.iter().enumerate() {
            next[k] += c;
            next[k + 1] += c * v;
        }
        e = next;
    }
    e
}

/// The values `λ_{N-j+1} + β(j-1)` whose elementary symmetric functions
/// are the eigenvalues of `e_k(D̂)` on `J_λ`.
pub fn jack_spectrum(lambda: &Partition, spec: &FamilySpec) -> Vec<Rational> {
    symmetric_spectrum(lambda, spec)
}

/// Non-symmetric Jack polynomial `E^λ_w`: the joint eigenfunction of the
/// Cherednik operators with leading monomial `x^λ_w` and unit coefficient.
pub fn nonsym_jack(label: &NonSymLabel, spec: &FamilySpec) -> Result<FamilyPolynomial> {
    require_jack(spec)?;
    check_len(label.lambda(), spec)?;
    let eigenvalues = label.spectrum(spec.beta());
    let poly = memo_family(
        spec,
        &Label::NonSym(label.clone()),
        Construction::Triangular,
        || nonsym_jack_poly(label, spec),
    )?;
    Ok(FamilyPolynomial {
        label: Label::NonSym(label.clone()),
        spec: spec.clone(),
        poly,
        construction: Construction::Triangular,
        eigenvalues,
    })
}

fn compositions_below(lambda: &Partition) -> Result<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for mu in Partition::all_of_weight(lambda.weight(), lambda.len()) {
        if dominance_leq(&mu, lambda)? {
            out.extend(mu.rearrangements());
        }
    }
    Ok(out)
}

fn to_monomial(eta: &[u32]) -> Monomial {
    let e: Vec<i32> = eta.iter().map(|&v| v as i32).collect();
    Monomial::new(&e)
}

fn nonsym_jack_poly(label: &NonSymLabel, spec: &FamilySpec) -> Result<Polynomial> {
    let n = spec.n();
    let eta = label.composition();
    if spec.beta() == 0 {
        return Ok(Polynomial::term(to_monomial(&eta), Rational::one()));
    }
    let basis = compositions_below(label.lambda())?;
    let spectrum = label.spectrum(spec.beta());
    let ops = (1..=n)
        .map(|j| cherednik_a(j, spec))
        .collect::<std::result::Result<Vec<_>, _>>()?;

    // rows: (operator index, output monomial)
    let mut row_of: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut entries: Vec<(usize, usize, Rational)> = Vec::new();
    for (col, nu) in basis.iter().enumerate() {
        let x = Polynomial::term(to_monomial(nu), Rational::one());
        for (j, op) in ops.iter().enumerate() {
            let mut img = op.apply(&x)?;
            img.add_scaled(&x, &-spectrum[j].clone());
            for (m, c) in img.terms() {
                let next = row_of.len();
                let row = *row_of.entry((j, m.clone())).or_insert(next);
                entries.push((row, col, c.clone()));
            }
        }
    }
    let mut mat = Matrix::zeros(row_of.len(), basis.len());
    for (r, c, v) in entries {
        mat.set(r, c, v);
    }
    let ker = nullspace(&mat);
    if ker.len() != 1 {
        return Err(Error::SpectrumCollision(format!(
            "{label} (kernel dimension {})",
            ker.len()
        )));
    }
    let v = &ker[0];
    let lead = basis
        .iter()
        .position(|nu| *nu == eta)
        .expect("leading composition in basis");
    if v[lead].is_zero() {
        return Err(Error::Triangularity(format!(
            "{label}: zero leading coefficient"
        )));
    }
    let scale = v[lead].recip();
    let poly = Polynomial::from_terms(
        n,
        basis
            .iter()
            .zip(v)
            .map(|(nu, c)| (to_monomial(nu), c * &scale)),
    );
    check_nonsym_triangular(&poly, label)?;
    Ok(poly)
}

/// Every monomial other than the leading one must carry a `≺`-lower label.
pub(crate) fn check_nonsym_triangular(f: &Polynomial, label: &NonSymLabel) -> Result<()> {
    let lead = label.monomial();
    if f.coeff(&lead) != Rational::one() {
        return Err(Error::Triangularity(format!(
            "{label}: leading coefficient"
        )));
    }
    for (m, _) in f.terms() {
        if *m == lead {
            continue;
        }
        let nu: Vec<u32> = m.exponents().iter().map(|&e| e as u32).collect();
        let other = NonSymLabel::from_composition(&nu);
        let lower = if other.lambda() == label.lambda() {
            other.w() != label.w() && bruhat_leq(other.w(), label.w())?
        } else {
            other.lambda().weight() < label.lambda().weight()
                || dominance_leq(other.lambda(), label.lambda())?
        };
        if !lower {
            return Err(Error::Triangularity(format!("{label}: stray term {other}")));
        }
    }
    Ok(())
}

/// Symmetric Jack polynomial `J_λ`, monic in `m_λ`.
pub fn jack(
    lambda: &Partition,
    spec: &FamilySpec,
    method: Construction,
) -> Result<FamilyPolynomial> {
    require_jack(spec)?;
    check_len(lambda, spec)?;
    let poly = match method {
        Construction::Triangular => memo_family(spec, &Label::Sym(lambda.clone()), method, || {
            jack_triangular(lambda, spec)
        })?,
        Construction::Symmetrized => {
            memo_family(spec, &Label::Sym(lambda.clone()), method, || {
                jack_symmetrized(lambda, spec)
            })?
        }
        Construction::Rodrigues => crate::raising::rodrigues(lambda, spec)?.poly,
        other => {
            return Err(Error::Unsupported(format!(
                "jack has no {other} construction"
            )))
        }
    };
    Ok(FamilyPolynomial {
        label: Label::Sym(lambda.clone()),
        spec: spec.clone(),
        poly,
        construction: method,
        eigenvalues: jack_spectrum(lambda, spec),
    })
}

fn jack_triangular(lambda: &Partition, spec: &FamilySpec) -> Result<Polynomial> {
    let n = spec.n();
    if spec.beta() == 0 {
        return Ok(Polynomial::monomial_symmetric(lambda));
    }
    let basis: Vec<Partition> = Partition::all_of_weight(lambda.weight(), n)
        .into_iter()
        .filter(|mu| dominance_leq(mu, lambda).unwrap_or(false))
        .collect();
    let ops = (1..=n)
        .map(|j| cherednik_a(j, spec))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let target = elementary_of(&jack_spectrum(lambda, spec));
    let mut mat = Matrix::zeros(n * basis.len(), basis.len());
    for (col, mu) in basis.iter().enumerate() {
        let m = Polynomial::monomial_symmetric(mu);
        let coeffs = delta_coefficients(&ops, &m)?;
        for k in 1..=n {
            let mut img = coeffs[k].clone();
            img.add_scaled(&m, &-target[k].clone());
            for (row, nu) in basis.iter().enumerate() {
                mat.set((k - 1) * basis.len() + row, col, m_coeff(&img, nu));
            }
        }
    }
    let ker = nullspace(&mat);
    if ker.len() != 1 {
        return Err(Error::SpectrumCollision(format!(
            "({lambda}) (kernel dimension {})",
            ker.len()
        )));
    }
    let v = &ker[0];
    let lead = basis.iter().position(|mu| mu == lambda).unwrap();
    if v[lead].is_zero() {
        return Err(Error::Triangularity(format!(
            "({lambda}): zero leading coefficient"
        )));
    }
    let scale = v[lead].recip();
    let mut out = Polynomial::zero(n);
    for (mu, c) in basis.iter().zip(v) {
        out.add_scaled(&Polynomial::monomial_symmetric(mu), &(c * &scale));
    }
    check_sym_triangular(&out, lambda)?;
    Ok(out)
}

fn jack_symmetrized(lambda: &Partition, spec: &FamilySpec) -> Result<Polynomial> {
    let n = spec.n();
    let e = nonsym_jack(&NonSymLabel::dominant(lambda), spec)?.poly;
    let mut acc = Polynomial::zero(n);
    for v in Permutation::all(n) {
        acc += &e.permute(&v);
    }
    let out = acc.scale(&Rational::new(BigInt::one(), lambda.stabilizer_order()));
    check_sym_triangular(&out, lambda)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, parse_polynomial, rat};

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn nonsym_small_cases() {
        for beta in 0..4 {
            let s = FamilySpec::jack(2, beta);
            let e = nonsym_jack(&NonSymLabel::dominant(&part(&[1, 0])), &s).unwrap();
            assert_eq!(e.poly, p("x1", 2));
            assert_eq!(e.eigenvalues, vec![int(1 + beta as i64), int(0)]);
            let l = NonSymLabel::new(part(&[1, 0]), Permutation::simple(2, 0));
            let e = nonsym_jack(&l, &s).unwrap();
            let c = rat(beta as i64, 1 + beta as i64);
            assert_eq!(e.poly, &p("x2", 2) + &p("x1", 2).scale(&c));
            assert_eq!(e.eigenvalues, vec![int(0), int(1 + beta as i64)]);
            assert!(e.verify_eigen().unwrap());
            let one = nonsym_jack(&NonSymLabel::dominant(&part(&[0, 0])), &s).unwrap();
            assert_eq!(one.poly, p("1", 2));
        }
    }

    #[test]
    fn jack_small_cases() {
        for beta in 0..3 {
            let s = FamilySpec::jack(2, beta);
            let j = jack(&part(&[1, 1]), &s, Construction::Triangular).unwrap();
            assert_eq!(j.poly, p("x1*x2", 2));
            let j = jack(&part(&[2, 0]), &s, Construction::Triangular).unwrap();
            let c = rat(2 * beta as i64, 1 + beta as i64);
            assert_eq!(j.poly, &p("x1^2 + x2^2", 2) + &p("x1*x2", 2).scale(&c));
            assert!(j.verify_eigen().unwrap());
        }
        for n in 1..=3 {
            let mut l = vec![0; n];
            l[0] = 1;
            let j = jack(&part(&l), &FamilySpec::jack(n, 2), Construction::Triangular).unwrap();
            assert_eq!(j.poly, Polynomial::monomial_symmetric(&part(&l)));
        }
    }

    #[test]
    fn triangular_equals_symmetrized() {
        for beta in 0..3 {
            let s = FamilySpec::jack(3, beta);
            for w in 0..=4 {
                for l in Partition::all_of_weight(w, 3) {
                    let a = jack(&l, &s, Construction::Triangular).unwrap();
                    let b = jack(&l, &s, Construction::Symmetrized).unwrap();
                    assert_eq!(a.poly, b.poly, "({l}) beta={beta}");
                }
            }
        }
    }

    #[test]
    fn every_nonsym_label_is_an_eigenfunction() {
        for beta in 0..3 {
            let s = FamilySpec::jack(3, beta);
            for w in 0..=3 {
                for l in NonSymLabel::all_of_weight(w, 3) {
                    let e = nonsym_jack(&l, &s).unwrap();
                    assert!(e.verify_eigen().unwrap(), "{l} beta={beta}");
                }
            }
        }
    }
}
