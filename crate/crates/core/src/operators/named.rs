//! The Dunkl-type operators of the A and B families. Public constructors
//! take 1-based indices `j ∈ 1..=N`.

use num_traits::Zero;

use super::{Family, FamilySpec, Operator, OperatorError};
use crate::arith::{int, rat, Polynomial, Rational};

fn dd_sum_a(n: usize, j: usize) -> Vec<Operator> {
    (0..n)
        .filter(|&k| k != j)
        .map(|k| Operator::divided_diff_minus(n, j, k))
        .collect()
}

fn dd_sum_b(n: usize, j: usize) -> Vec<Operator> {
    (0..n)
        .filter(|&k| k != j)
        .flat_map(|k| {
            [
                Operator::divided_diff_minus(n, j, k),
                Operator::divided_diff_plus(n, j, k),
            ]
        })
        .collect()
}

/// `t_j t_k s_{jk}`.
pub(crate) fn signed_exchange(n: usize, j: usize, k: usize) -> Operator {
    Operator::compose_all(
        n,
        vec![
            Operator::sign_flip(n, j),
            Operator::sign_flip(n, k),
            Operator::exchange(n, j, k),
        ],
    )
}

fn beta_terms(n: usize, beta: &Rational, terms: Vec<Operator>) -> Option<Operator> {
    if beta.is_zero() || terms.is_empty() {
        None
    } else {
        Some(Operator::sum(n, terms).scale(beta))
    }
}

fn collect(n: usize, parts: Vec<Option<Operator>>) -> Operator {
    Operator::sum(n, parts.into_iter().flatten().collect())
}

/// `β Σ_{k<j} s_{jk}`.
fn lower_exchanges_a(n: usize, beta: &Rational, j: usize) -> Option<Operator> {
    beta_terms(
        n,
        beta,
        (0..j).map(|k| Operator::exchange(n, j, k)).collect(),
    )
}

/// `β Σ_{k<j} (s_{jk} + t_j t_k s_{jk})`.
fn lower_exchanges_b(n: usize, beta: &Rational, j: usize) -> Option<Operator> {
    beta_terms(
        n,
        beta,
        (0..j)
            .flat_map(|k| [Operator::exchange(n, j, k), signed_exchange(n, j, k)])
            .collect(),
    )
}

pub(crate) fn dunkl_a_op(n: usize, beta: &Rational, j: usize) -> Operator {
    collect(
        n,
        vec![
            Some(Operator::derivative(n, j)),
            beta_terms(n, beta, dd_sum_a(n, j)),
        ],
    )
}

pub(crate) fn cherednik_a_op(n: usize, beta: &Rational, j: usize) -> Operator {
    collect(
        n,
        vec![
            Some(Operator::var(n, j) * dunkl_a_op(n, beta, j)),
            lower_exchanges_a(n, beta, j),
        ],
    )
}

pub(crate) fn creation_a_op(n: usize, beta: &Rational, j: usize) -> Operator {
    collect(
        n,
        vec![
            Some(-Operator::derivative(n, j)),
            Some(Operator::multiply(Polynomial::var(n, j).scale(&int(2)))),
            beta_terms(n, &-beta, dd_sum_a(n, j)),
        ],
    )
}

pub(crate) fn htilde_a_op(n: usize, beta: &Rational, j: usize) -> Operator {
    collect(
        n,
        vec![
            Some((creation_a_op(n, beta, j) * dunkl_a_op(n, beta, j)).scale(&rat(1, 2))),
            lower_exchanges_a(n, beta, j),
        ],
    )
}

pub(crate) fn dunkl_b_op(n: usize, beta: &Rational, gamma: &Rational, j: usize) -> Operator {
    let g = (!gamma.is_zero()).then(|| Operator::sign_divided(n, j).scale(gamma));
    collect(
        n,
        vec![
            Some(Operator::derivative(n, j)),
            beta_terms(n, beta, dd_sum_b(n, j)),
            g,
        ],
    )
}

pub(crate) fn cherednik_b_op(n: usize, beta: &Rational, gamma: &Rational, j: usize) -> Operator {
    collect(
        n,
        vec![
            Some(Operator::var(n, j) * dunkl_b_op(n, beta, gamma, j)),
            lower_exchanges_b(n, beta, j),
        ],
    )
}

pub(crate) fn creation_b_op(n: usize, beta: &Rational, gamma: &Rational, j: usize) -> Operator {
    let g = (!gamma.is_zero()).then(|| Operator::sign_divided(n, j).scale(&-gamma));
    collect(
        n,
        vec![
            Some(-Operator::derivative(n, j)),
            Some(Operator::multiply(Polynomial::var(n, j).scale(&int(2)))),
            beta_terms(n, &-beta, dd_sum_b(n, j)),
            g,
        ],
    )
}

pub(crate) fn htilde_b_op(n: usize, beta: &Rational, gamma: &Rational, j: usize) -> Operator {
    collect(
        n,
        vec![
            Some(
                (creation_b_op(n, beta, gamma, j) * dunkl_b_op(n, beta, gamma, j))
                    .scale(&rat(1, 2)),
            ),
            lower_exchanges_b(n, beta, j),
        ],
    )
}

/// Dunkl operator `D^A_j = ∂_j + β Σ_{k≠j} (1 - s_{jk})/(x_j - x_k)`.
pub fn dunkl_a(j: usize, spec: &FamilySpec) -> Result<Operator, OperatorError> {
    spec.require(&[Family::Jack, Family::Hermite], "dunkl_A")?;
    let j = spec.check_index(j)?;
    Ok(dunkl_a_op(spec.n(), &spec.beta_q(), j))
}

/// Cherednik operator `D̂^A_j = x_j D^A_j + β Σ_{k<j} s_{jk}`.
pub fn cherednik_a(j: usize, spec: &FamilySpec) -> Result<Operator, OperatorError> {
    spec.require(&[Family::Jack, Family::Hermite], "cherednik_A")?;
    let j = spec.check_index(j)?;
    Ok(cherednik_a_op(spec.n(), &spec.beta_q(), j))
}

/// B-type Dunkl operator in the `z` variables.
pub fn dunkl_b(j: usize, spec: &FamilySpec) -> Result<Operator, OperatorError> {
    spec.require(&[Family::Laguerre], "dunkl_B")?;
    let j = spec.check_index(j)?;
    Ok(dunkl_b_op(spec.n(), &spec.beta_q(), &spec.gamma(), j))
}

/// `D̂^B_j = z_j D^B_j + β Σ_{k<j} (s_{jk} + t_j t_k s_{jk})`.
pub fn cherednik_b(j: usize, spec: &FamilySpec) -> Result<Operator, OperatorError> {
    spec.require(&[Family::Laguerre], "cherednik_B")?;
    let j = spec.check_index(j)?;
    Ok(cherednik_b_op(spec.n(), &spec.beta_q(), &spec.gamma(), j))
}

/// Rescaled gauge-transformed creation operator `A_j = √2 ã†_j`.
pub fn creation_a(j: usize, spec: &FamilySpec) -> Result<Operator, OperatorError> {
    spec.require(&[Family::Hermite], "creation_A")?;
    let j = spec.check_index(j)?;
    Ok(creation_a_op(spec.n(), &spec.beta_q(), j))
}

/// Rescaled annihilation operator `a_j = √2 ã_j`, equal to `D^A_j`.
pub fn annihilation_a(j: usize, spec: &FamilySpec) -> Result<Operator, OperatorError> {
    spec.require(&[Family::Hermite], "annihilation_A")?;
    let j = spec.check_index(j)?;
    Ok(dunkl_a_op(spec.n(), &spec.beta_q(), j))
}

/// `B_j = √2 b̃†_j = -∂_j + 2z_j - β(..) - γ(1 - t_j)/z_j`.
pub fn creation_b(j: usize, spec: &FamilySpec) -> Result<Operator, OperatorError> {
    spec.require(&[Family::Laguerre], "creation_B")?;
    let j = spec.check_index(j)?;
    Ok(creation_b_op(spec.n(), &spec.beta_q(), &spec.gamma(), j))
}

/// `b_j = √2 b̃_j`, equal to `D^B_j`.
pub fn annihilation_b(j: usize, spec: &FamilySpec) -> Result<Operator, OperatorError> {
    spec.require(&[Family::Laguerre], "annihilation_B")?;
    let j = spec.check_index(j)?;
    Ok(dunkl_b_op(spec.n(), &spec.beta_q(), &spec.gamma(), j))
}

/// `h̃_j`: `½ A_j a_j + β Σ_{k<j} s_{jk}` for Hermite, and
/// `½ B_j b_j + β Σ_{k<j} (s_{jk} + t_j t_k s_{jk})` for Laguerre.
pub fn htilde(j: usize, spec: &FamilySpec) -> Result<Operator, OperatorError> {
    spec.require(&[Family::Hermite, Family::Laguerre], "htilde")?;
    let j = spec.check_index(j)?;
    let beta = spec.beta_q();
    Ok(match spec.family() {
        Family::Hermite => htilde_a_op(spec.n(), &beta, j),
        _ => htilde_b_op(spec.n(), &beta, &spec.gamma(), j),
    })
}

/// The commuting family the Jack polynomials diagonalise, transported to
/// each family: `D̂^A_j`, `h̃^A_j`, `h̃^B_j / 2`.
pub fn cherednik_family(j: usize, spec: &FamilySpec) -> Result<Operator, OperatorError> {
    match spec.family() {
        Family::Jack => cherednik_a(j, spec),
        Family::Hermite => htilde(j, spec),
        Family::Laguerre => Ok(htilde(j, spec)?.scale(&rat(1, 2))),
    }
}

/// Looks up an operator from a name and parameter string such as
/// `"cherednikA:j=2"` or `"s:i=1,j=3"`. Indices are 1-based.
pub fn operator_by_name(src: &str, spec: &FamilySpec) -> Result<Operator, OperatorError> {
    let bad = |msg: String| OperatorError::InvalidSpec(msg);
    let (name, args) = src.trim().split_once(':').unwrap_or((src.trim(), ""));
    let mut i = None;
    let mut j = None;
    for kv in args.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| bad(format!("expected key=value, found {kv:?}")))?;
        let v: usize = v
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad index {v:?}")))?;
        match k.trim() {
            "i" => i = Some(v),
            "j" => j = Some(v),
            other => return Err(bad(format!("unknown parameter {other:?}"))),
        }
    }
    let j = j.ok_or_else(|| bad(format!("{name}: missing j")))?;
    let n = spec.n();
    match name {
        "dunklA" => dunkl_a(j, spec),
        "cherednikA" => cherednik_a(j, spec),
        "dunklB" => dunkl_b(j, spec),
        "cherednikB" => cherednik_b(j, spec),
        "creationA" => creation_a(j, spec),
        "annihilationA" => annihilation_a(j, spec),
        "creationB" => creation_b(j, spec),
        "annihilationB" => annihilation_b(j, spec),
        "htilde" => htilde(j, spec),
        "family" => cherednik_family(j, spec),
        "x" => Ok(Operator::var(n, spec.check_index(j)?)),
        "d" => Ok(Operator::derivative(n, spec.check_index(j)?)),
        "s" => {
            let i = i.ok_or_else(|| bad("s: missing i".into()))?;
            let (a, b) = (spec.check_index(i)?, spec.check_index(j)?);
            if a == b {
                return Err(bad("s: i and j must differ".into()));
            }
            Ok(Operator::exchange(n, a, b))
        }
        other => Err(bad(format!("unknown operator {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_polynomial, Monomial};
    use crate::operators::{operator_equal, OperatorError};

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    fn comm(a: &Operator, b: &Operator) -> Operator {
        &(a * b) - &(b * a)
    }

    #[test]
    fn dunkl_a_examples() {
        let s = FamilySpec::jack(2, 1);
        let d1 = dunkl_a(1, &s).unwrap();
        assert_eq!(d1.apply(&p("x1", 2)).unwrap(), p("2", 2));
        for beta in 0..3 {
            let s = FamilySpec::jack(3, beta);
            for j in 1..=3 {
                assert!(dunkl_a(j, &s).unwrap().apply(&p("1", 3)).unwrap().is_zero());
            }
        }
        assert_eq!(
            dunkl_a(3, &s).unwrap_err(),
            OperatorError::IndexOutOfRange { index: 3, n: 2 }
        );
        assert!(dunkl_a(1, &FamilySpec::laguerre(2, 1, int(0))).is_err());
    }

    #[test]
    fn cherednik_a_examples() {
        for beta in 0..3u32 {
            let s = FamilySpec::jack(3, beta);
            for j in 1..=3 {
                let v = cherednik_a(j, &s).unwrap().apply(&p("1", 3)).unwrap();
                assert_eq!(
                    v,
                    Polynomial::constant(3, int((beta as i64) * (j as i64 - 1)))
                );
            }
        }
        let s = FamilySpec::jack(2, 1);
        let f = p("x1 + x2", 2);
        assert_eq!(cherednik_a(1, &s).unwrap().apply(&f).unwrap(), p("x1", 2));
        assert_eq!(
            cherednik_a(2, &s).unwrap().apply(&f).unwrap(),
            p("x1 + 2*x2", 2)
        );
    }

    /// Oracle: the expanded second form of the Cherednik operator, with the
    /// rational prefactors distributed over the divided differences.
    #[test]
    fn cherednik_a_matches_expanded_form() {
        for beta in 0..3u32 {
            let s = FamilySpec::jack(3, beta);
            let b = s.beta_q();
            for j in 0..3 {
                let mut parts = vec![Operator::var(3, j) * Operator::derivative(3, j)];
                for k in 0..3 {
                    if k == j {
                        continue;
                    }
                    let pre = if k < j { k } else { j };
                    parts.push(
                        (Operator::var(3, pre) * Operator::divided_diff_minus(3, j, k)).scale(&b),
                    );
                }
                parts.push(Operator::scalar(3, &b * int(j as i64)));
                let expanded = Operator::sum(3, parts);
                assert!(operator_equal(&expanded, &cherednik_a(j + 1, &s).unwrap(), 5).unwrap());
            }
        }
    }

    #[test]
    fn commutativity() {
        let s = FamilySpec::jack(3, 2);
        let d: Vec<_> = (1..=3).map(|j| dunkl_a(j, &s).unwrap()).collect();
        let dh: Vec<_> = (1..=3).map(|j| cherednik_a(j, &s).unwrap()).collect();
        let h = FamilySpec::hermite(2, 1);
        let a: Vec<_> = (1..=2).map(|j| creation_a(j, &h).unwrap()).collect();
        let ht: Vec<_> = (1..=2).map(|j| htilde(j, &h).unwrap()).collect();
        let zero = Operator::zero(3);
        let zero2 = Operator::zero(2);
        for i in 0..3 {
            for j in i + 1..3 {
                assert!(operator_equal(&comm(&d[i], &d[j]), &zero, 5).unwrap());
                assert!(operator_equal(&comm(&dh[i], &dh[j]), &zero, 4).unwrap());
            }
        }
        assert!(operator_equal(&comm(&a[0], &a[1]), &zero2, 4).unwrap());
        assert!(operator_equal(&comm(&ht[0], &ht[1]), &zero2, 5).unwrap());

        let l = FamilySpec::laguerre(2, 1, rat(1, 2));
        let db: Vec<_> = (1..=2).map(|j| dunkl_b(j, &l).unwrap()).collect();
        assert!(operator_equal(&comm(&db[0], &db[1]), &zero2, 4).unwrap());
        let hb: Vec<_> = (1..=2).map(|j| htilde(j, &l).unwrap()).collect();
        assert!(operator_equal(&comm(&hb[0], &hb[1]), &zero2, 4).unwrap());
        let bb: Vec<_> = (1..=2).map(|j| creation_b(j, &l).unwrap()).collect();
        assert!(operator_equal(&comm(&bb[0], &bb[1]), &zero2, 4).unwrap());
    }

    #[test]
    fn creation_annihilation_examples() {
        let h1 = FamilySpec::hermite(1, 0);
        let a = creation_a(1, &h1).unwrap();
        assert_eq!(a.apply(&p("1", 1)).unwrap(), p("2*x", 1));
        assert_eq!(a.pow(2).apply(&p("1", 1)).unwrap(), p("4*x^2 - 2", 1));
        assert_eq!(
            annihilation_a(1, &h1).unwrap().apply(&p("x^2", 1)).unwrap(),
            p("2*x", 1)
        );

        let h2 = FamilySpec::hermite(2, 1);
        for j in 1..=2 {
            assert_eq!(
                creation_a(j, &h2).unwrap().apply(&p("1", 2)).unwrap(),
                Polynomial::var(2, j - 1).scale(&int(2))
            );
            assert!(annihilation_a(j, &h2)
                .unwrap()
                .apply(&p("1", 2))
                .unwrap()
                .is_zero());
            let v = htilde(j, &h2).unwrap().apply(&p("1", 2)).unwrap();
            assert_eq!(v, Polynomial::constant(2, int(j as i64 - 1)));
            assert!(operator_equal(
                &annihilation_a(j, &h2).unwrap(),
                &dunkl_a(j, &FamilySpec::jack(2, 1)).unwrap(),
                6
            )
            .unwrap());
        }
    }

    #[test]
    fn b_type_examples() {
        let g = rat(1, 3);
        let l1 = FamilySpec::laguerre(1, 0, g.clone());
        assert_eq!(
            dunkl_b(1, &l1).unwrap().apply(&p("z^2", 1)).unwrap(),
            p("2*z", 1)
        );
        // B^2 1 / 4 in u = z^2 is u - (γ + 1/2)
        let b = creation_b(1, &l1).unwrap();
        let v = b.pow(2).apply(&p("1", 1)).unwrap().scale(&rat(1, 4));
        assert_eq!(v.z_to_u().unwrap(), p("u - 5/6", 1));

        let l2 = FamilySpec::laguerre(2, 1, rat(1, 3));
        for j in 1..=2 {
            let v = cherednik_b(j, &l2).unwrap().apply(&p("1", 2)).unwrap();
            assert_eq!(v, Polynomial::constant(2, int(2 * (j as i64 - 1))));
            assert!(dunkl_b(j, &l2)
                .unwrap()
                .apply(&p("1", 2))
                .unwrap()
                .is_zero());
        }
        let out = cherednik_b(1, &l2)
            .unwrap()
            .apply(&p("z1^2*z2^2", 2))
            .unwrap();
        assert!(out.is_even());
    }

    #[test]
    fn htilde_b_commutes_with_sign_flips() {
        let l = FamilySpec::laguerre(2, 1, rat(1, 4));
        for i in 0..2 {
            let t = Operator::sign_flip(2, i);
            for j in 1..=2 {
                let h = htilde(j, &l).unwrap();
                assert!(operator_equal(&(&t * &h), &(&h * &t), 4).unwrap());
                let b2 = creation_b(j, &l).unwrap().pow(2);
                assert!(operator_equal(&(&t * &b2), &(&b2 * &t), 4).unwrap());
            }
        }
    }

    #[test]
    fn even_subring_is_preserved() {
        let l = FamilySpec::laguerre(2, 1, rat(1, 3));
        for m in Monomial::all_up_to(2, 3) {
            let f = Polynomial::term(m, int(1)).u_to_z();
            for j in 1..=2 {
                for op in [
                    cherednik_b(j, &l).unwrap(),
                    htilde(j, &l).unwrap(),
                    creation_b(j, &l).unwrap().pow(2),
                ] {
                    assert!(op.apply(&f).unwrap().is_even());
                }
            }
        }
    }

    #[test]
    fn lookup_by_name() {
        let s = FamilySpec::jack(3, 2);
        let op = operator_by_name("cherednikA:j=2", &s).unwrap();
        assert!(operator_equal(&op, &cherednik_a(2, &s).unwrap(), 3).unwrap());
        let sw = operator_by_name("s:i=1,j=3", &s).unwrap();
        assert_eq!(sw.apply(&p("x1^2*x2", 3)).unwrap(), p("x3^2*x2", 3));
        assert!(operator_by_name("cherednikB:j=1", &s).is_err());
        assert!(operator_by_name("cherednikA:j=4", &s).is_err());
        assert!(operator_by_name("cherednikA", &s).is_err());
        assert!(operator_by_name("s:i=2,j=2", &s).is_err());
        assert!(operator_by_name("bogus:j=1", &s).is_err());
    }

    mod props {
        use super::*;
        use crate::arith::int;
        use proptest::prelude::*;

        fn poly(n: usize) -> impl Strategy<Value = Polynomial> {
            prop::collection::vec((prop::collection::vec(0i32..4, n), -4i64..5), 0..5).prop_map(
                move |ts| {
                    Polynomial::from_terms(
                        n,
                        ts.into_iter().map(|(e, c)| (Monomial::new(&e), int(c))),
                    )
                },
            )
        }

        proptest! {
            #[test]
            fn operators_are_linear(f in poly(3), g in poly(3), c in -3i64..4, beta in 0u32..3, j in 1usize..4) {
                let s = FamilySpec::hermite(3, beta);
                let l = FamilySpec::laguerre(3, beta, Rational::new(1.into(), 3.into()));
                let mut sum = f.clone();
                sum.add_scaled(&g, &int(c));
                for op in [cherednik_a(j, &s).unwrap(), creation_a(j, &s).unwrap(), htilde(j, &l).unwrap()] {
                    let mut expected = op.apply(&f).unwrap();
                    expected.add_scaled(&op.apply(&g).unwrap(), &int(c));
                    prop_assert_eq!(op.apply(&sum).unwrap(), expected);
                }
            }

            #[test]
            fn cherednik_operators_commute_on_samples(f in poly(3), beta in 0u32..3) {
                let s = FamilySpec::jack(3, beta);
                let d: Vec<Operator> = (1..=3).map(|j| cherednik_a(j, &s).unwrap()).collect();
                for i in 0..3 {
                    for k in i + 1..3 {
                        let a = d[i].apply(&d[k].apply(&f).unwrap()).unwrap();
                        let b = d[k].apply(&d[i].apply(&f).unwrap()).unwrap();
                        prop_assert_eq!(a, b);
                    }
                }
            }

            #[test]
            fn dunkl_exchange_relation(f in poly(3), beta in 0u32..3) {
                let s = FamilySpec::jack(3, beta);
                let sw = Operator::exchange(3, 0, 2);
                let lhs = sw.apply(&dunkl_a(3, &s).unwrap().apply(&f).unwrap()).unwrap();
                let rhs = dunkl_a(1, &s).unwrap().apply(&sw.apply(&f).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
