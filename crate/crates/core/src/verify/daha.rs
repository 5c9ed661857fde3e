use crate::arith::{int, rat, Polynomial, Rational};
use crate::error::Result;
use crate::operators::{cherednik_a, dunkl_a, FamilySpec, Operator};

/// An operator identity `lhs = rhs` with a printable name.
#[derive(Debug, Clone)]
pub struct Relation {
    pub name: String,
    pub lhs: Operator,
    pub rhs: Operator,
}

fn rel(name: String, lhs: Operator, rhs: Operator) -> Relation {
    Relation { name, lhs, rhs }
}

fn comm(a: &Operator, b: &Operator) -> Operator {
    &(a * b) - &(b * a)
}

/// The defining relations of the degenerate double affine Hecke algebra
/// in the representation by `x_j`, `D̂_j` and `s_ij` on polynomials.
/// Indices in the names are 1-based.
pub fn daha_relations(n: usize, beta: u32) -> Result<Vec<Relation>> {
    let spec = FamilySpec::jack(n, beta);
    let b = int(beta as i64);
    let d: Vec<Operator> = (1..=n)
        .map(|j| cherednik_a(j, &spec))
        .collect::<std::result::Result<_, _>>()?;
    let x: Vec<Operator> = (0..n).map(|j| Operator::var(n, j)).collect();
    let s = |i: usize, j: usize| Operator::exchange(n, i, j);
    let id = Operator::identity(n);
    let zero = Operator::zero(n);
    let beta_op = Operator::scalar(n, b.clone());
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(rel(
                format!("[D{},D{}]=0", i + 1, j + 1),
                comm(&d[i], &d[j]),
                zero.clone(),
            ));
            out.push(rel(
                format!("[x{},x{}]=0", i + 1, j + 1),
                comm(&x[i], &x[j]),
                zero.clone(),
            ));
        }
    }
    for j in 0..n.saturating_sub(1) {
        out.push(rel(
            format!("s{}^2=1", j + 1),
            &s(j, j + 1) * &s(j, j + 1),
            id.clone(),
        ));
        if j + 2 < n {
            let (a, c) = (s(j, j + 1), s(j + 1, j + 2));
            out.push(rel(
                format!("braid s{}", j + 1),
                &(&a * &c) * &a,
                &(&c * &a) * &c,
            ));
        }
        for i in j + 2..n.saturating_sub(1) {
            out.push(rel(
                format!("[s{},s{}]=0", j + 1, i + 1),
                comm(&s(j, j + 1), &s(i, i + 1)),
                zero.clone(),
            ));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            out.push(rel(
                format!("x{0} s{0}{1} = s{0}{1} x{1}", i + 1, j + 1),
                &x[i] * &s(i, j),
                &s(i, j) * &x[j],
            ));
            for k in j + 1..n {
                if k != i {
                    out.push(rel(
                        format!("x{0} s{1}{2} = s{1}{2} x{0}", i + 1, j + 1, k + 1),
                        &x[i] * &s(j, k),
                        &s(j, k) * &x[i],
                    ));
                }
            }
        }
    }
    for j in 0..n.saturating_sub(1) {
        let sj = s(j, j + 1);
        out.push(rel(
            format!("D{} s{1} - s{1} D{1} = beta", j + 2, j + 1),
            &(&d[j + 1] * &sj) - &(&sj * &d[j]),
            beta_op.clone(),
        ));
        out.push(rel(
            format!("s{0} D{1} - D{0} s{0} = beta", j + 1, j + 2),
            &(&sj * &d[j + 1]) - &(&d[j] * &sj),
            beta_op.clone(),
        ));
        for (k, dk) in d.iter().enumerate() {
            if k != j && k != j + 1 {
                out.push(rel(
                    format!("[s{},D{}]=0", j + 1, k + 1),
                    comm(&sj, dk),
                    zero.clone(),
                ));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let rhs = if i > j {
                (&x[j] * &s(i, j)).scale(&-b.clone())
            } else if i < j {
                (&x[i] * &s(i, j)).scale(&-b.clone())
            } else {
                let mut terms = vec![x[i].clone()];
                for k in 0..n {
                    if k < i {
                        terms.push((&x[k] * &s(i, k)).scale(&b));
                    } else if k > i {
                        terms.push((&x[i] * &s(i, k)).scale(&b));
                    }
                }
                Operator::sum(n, terms)
            };
            out.push(rel(
                format!("[D{},x{}]", i + 1, j + 1),
                comm(&d[i], &x[j]),
                rhs,
            ));
        }
    }
    Ok(out)
}

/// Relations of the plain Dunkl operators `D_j` with `x_j` and `s_ij`.
pub(crate) fn dunkl_relations(n: usize, beta: u32) -> Result<Vec<Relation>> {
    let spec = FamilySpec::jack(n, beta);
    let b = int(beta as i64);
    let d: Vec<Operator> = (1..=n)
        .map(|j| dunkl_a(j, &spec))
        .collect::<std::result::Result<_, _>>()?;
    let x: Vec<Operator> = (0..n).map(|j| Operator::var(n, j)).collect();
    let s = |i: usize, j: usize| Operator::exchange(n, i, j);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i < j {
                out.push(rel(
                    format!("[D{},D{}]=0", i + 1, j + 1),
                    comm(&d[i], &d[j]),
                    Operator::zero(n),
                ));
            }
            if i != j {
                out.push(rel(
                    format!("s{0}{1} D{1} = D{0} s{0}{1}", i + 1, j + 1),
                    &s(i, j) * &d[j],
                    &d[i] * &s(i, j),
                ));
                for k in j + 1..n {
                    if k != i {
                        out.push(rel(
                            format!("s{1}{2} D{0} = D{0} s{1}{2}", i + 1, j + 1, k + 1),
                            &s(j, k) * &d[i],
                            &d[i] * &s(j, k),
                        ));
                    }
                }
            }
            let rhs = if i == j {
                let mut terms = vec![Operator::identity(n)];
                terms.extend((0..n).filter(|&k| k != i).map(|k| s(i, k).scale(&b)));
                Operator::sum(n, terms)
            } else {
                s(i, j).scale(&-b.clone())
            };
            out.push(rel(
                format!("[D{},x{}]", i + 1, j + 1),
                comm(&d[i], &x[j]),
                rhs,
            ));
        }
    }
    Ok(out)
}

/// Both sides of the expanded gauge-transformed Sutherland operator on
/// symmetric polynomials:
/// `Σ(x_j∂_j)² + β Σ_{j<k} (x_j+x_k)/(x_j-x_k)(x_j∂_j - x_k∂_k) + β²N(N²-1)/12`
/// and `Σ_j (D̂_j - β(N-1)/2)²`. On symmetric input the middle quotient
/// is half the divided difference of an antisymmetric polynomial.
pub fn sutherland_sides(n: usize, beta: u32) -> Result<(Operator, Operator)> {
    let spec = FamilySpec::jack(n, beta);
    let b = int(beta as i64);
    let euler: Vec<Operator> = (0..n)
        .map(|j| &Operator::var(n, j) * &Operator::derivative(n, j))
        .collect();
    let mut lhs = Vec::new();
    for e in &euler {
        lhs.push(e * e);
    }
    for j in 0..n {
        for k in j + 1..n {
            let sum = Operator::multiply(&Polynomial::var(n, j) + &Polynomial::var(n, k));
            let dd = Operator::divided_diff_minus(n, j, k).scale(&rat(1, 2));
            lhs.push(Operator::compose_all(n, vec![sum, dd, &euler[j] - &euler[k]]).scale(&b));
        }
    }
    let nn = n as i64;
    let c: Rational = &b * &b * int(nn * (nn * nn - 1)) / int(12);
    lhs.push(Operator::scalar(n, c));
    let half = &b * rat(nn - 1, 2);
    let mut rhs = Vec::new();
    for j in 1..=n {
        let t = cherednik_a(j, &spec)?.shift(&-half.clone());
        rhs.push(&t * &t);
    }
    Ok((Operator::sum(n, lhs), Operator::sum(n, rhs)))
}
