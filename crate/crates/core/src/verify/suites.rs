use num_traits::{One, Zero};

use super::daha::{daha_relations, dunkl_relations, sutherland_sides, Relation};
use super::random::{random_polynomial, random_symmetric, rng_for};
use super::{par_cases, Case, GridSpec, Params, SuiteName};
use crate::arith::{
    dominance_leq, factorial, format_rational, int, rat, Matrix, Monomial, Partition, Permutation,
    Polynomial, Rational,
};
use crate::error::Result;
use crate::families::{
    delta_coefficients, elementary_of, family_polynomial, hermite, jack, jack_spectrum, laguerre,
    m_expansion, nonsym_hermite, nonsym_jack, nonsym_laguerre, sigma_a, sigma_b,
    symmetric_spectrum, Construction, NonSymLabel,
};
use crate::operators::{
    annihilation_a, annihilation_b, cherednik_a, cherednik_b, cherednik_family, creation_a,
    creation_b, dunkl_a, dunkl_b, htilde, operator_by_name, operator_diff, operator_diff_on,
    operator_equal, operator_equal_on, s_hat, symmetrizer, w_hat, w_hat_word, y_prime, Family,
    FamilySpec, Operator, SymmetrizerKind,
};
use crate::pairings::{
    ct_pairing, dunkl_pairing, gauss_pairing, induced_pairing, laguerre_pairing,
    laguerre_pairing_z, norm_formula, shift_constants, DunklVariant, NormForm, ScaledRational,
};
use crate::raising::{
    antisymmetrizer_lemma_check, calibrate, calibration, duality_check, duality_sides,
    hook_product, raising_apply, raising_constant, rodrigues, shift_apply, shift_operator,
    y_operator, Assignment, ShiftDirection,
};

pub(super) fn operations(name: SuiteName) -> &'static [&'static str] {
    use SuiteName::*;
    match name {
        DahaRelations => &["cherednik_a", "operator_diff", "operator_equal"],
        DunklCommute => &[
            "dunkl_a",
            "dunkl_b",
            "cherednik_a",
            "cherednik_b",
            "creation_a",
            "annihilation_a",
            "creation_b",
            "annihilation_b",
            "htilde",
            "cherednik_family",
            "operator_by_name",
            "operator_diff",
        ],
        NonsymEigen => &[
            "nonsym_jack",
            "nonsym_hermite",
            "nonsym_laguerre",
            "cherednik_family",
        ],
        JackEigen => &[
            "jack",
            "nonsym_jack",
            "delta_coefficients",
            "elementary_of",
            "jack_spectrum",
            "m_expansion",
            "symmetrizer",
            "cherednik_a",
        ],
        JackOrth => &["jack", "ct_pairing"],
        IntertwineA => &["sigma_a", "cherednik_a", "htilde", "creation_a"],
        IntertwineB => &["sigma_b", "cherednik_a", "cherednik_family", "creation_b"],
        ResB => &["cherednik_b", "cherednik_a"],
        HermiteIsSigmaJack => &["hermite", "jack", "sigma_a", "gauss_pairing"],
        LaguerreIsSigmaJack => &[
            "laguerre",
            "jack",
            "sigma_b",
            "laguerre_pairing",
            "laguerre_pairing_z",
        ],
        RaisingAll => &[
            "raising_apply",
            "raising_op",
            "raising_constant",
            "family_polynomial",
        ],
        RodriguesAll => &[
            "rodrigues",
            "jack",
            "hermite",
            "laguerre",
            "hook_product",
            "family_polynomial",
        ],
        ShiftAll => &[
            "shift_apply",
            "shift_operator",
            "y_operator",
            "shift_constants",
            "calibrate",
            "calibration",
            "norm_formula",
            "family_polynomial",
        ],
        DualityAll => &["duality_check", "duality_sides", "calibration"],
        NormsAll => &[
            "norm_formula",
            "ct_pairing",
            "gauss_pairing",
            "laguerre_pairing",
            "family_polynomial",
        ],
        NormEquivAppB => &["norm_formula"],
        AppendixA => &[
            "s_hat",
            "w_hat",
            "w_hat_word",
            "symmetrizer",
            "y_prime",
            "operator_equal",
            "operator_equal_on",
            "operator_diff_on",
            "antisymmetrizer_lemma_check",
        ],
        DunklPairingProp => &["dunkl_pairing", "induced_pairing", "gauss_pairing", "jack"],
        SutherlandForm => &[
            "cherednik_a",
            "operator_diff_on",
            "jack",
            "symmetric_spectrum",
        ],
    }
}

pub(super) fn run(name: SuiteName, grid: &GridSpec) -> Result<(Vec<Case>, serde_json::Value)> {
    use SuiteName::*;
    let cases = match name {
        DahaRelations => daha(grid)?,
        DunklCommute => dunkl_commute(grid)?,
        NonsymEigen => nonsym_eigen(grid),
        JackEigen => jack_eigen(grid),
        JackOrth => jack_orth(grid),
        IntertwineA => intertwine_a(grid),
        IntertwineB => intertwine_b(grid),
        ResB => res_b(grid),
        HermiteIsSigmaJack => orthogonal_is_sigma_jack(grid, Family::Hermite),
        LaguerreIsSigmaJack => orthogonal_is_sigma_jack(grid, Family::Laguerre),
        RaisingAll => return Ok(raising_all(grid)),
        RodriguesAll => rodrigues_all(grid),
        ShiftAll => return shift_all(grid),
        DualityAll => return duality_all(grid),
        NormsAll => norms_all(grid),
        NormEquivAppB => norm_equiv(grid),
        AppendixA => appendix_a(grid)?,
        DunklPairingProp => return dunkl_pairing_prop(grid),
        SutherlandForm => sutherland(grid)?,
    };
    Ok((cases, serde_json::Value::Null))
}

fn specs(grid: &GridSpec, family: Family) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for &n in &grid.ns {
        for &beta in &grid.betas {
            match family {
                Family::Jack => out.push(FamilySpec::jack(n, beta)),
                Family::Hermite => out.push(FamilySpec::hermite(n, beta)),
                Family::Laguerre => out.extend(
                    grid.gammas
                        .iter()
                        .map(|g| FamilySpec::laguerre(n, beta, g.clone())),
                ),
            }
        }
    }
    out
}

fn all_specs(grid: &GridSpec) -> Vec<FamilySpec> {
    Family::ALL.iter().flat_map(|&f| specs(grid, f)).collect()
}

fn base(spec: &FamilySpec) -> Params {
    let p = Params::default()
        .with("family", spec.family())
        .with("N", spec.n())
        .with("beta", spec.beta());
    match spec.gamma_opt() {
        Some(g) => p.with("gamma", format_rational(g)),
        None => p,
    }
}

fn nb(n: usize, beta: u32) -> Params {
    Params::default().with("N", n).with("beta", beta)
}

fn op_case(params: &Params, a: &Operator, b: &Operator, degree: u32) -> Case {
    match operator_diff(a, b, degree) {
        Ok(None) => Case::pass(params),
        Ok(Some(ce)) => Case::fail(params, format!("{} -> {}", ce.input, ce.lhs), ce.rhs),
        Err(e) => Case::fail(params, format!("error: {e}"), "-"),
    }
}

fn op_case_on(params: &Params, a: &Operator, b: &Operator, basis: &[Polynomial]) -> Case {
    match operator_diff_on(a, b, basis) {
        Ok(None) => Case::pass(params),
        Ok(Some(ce)) => Case::fail(params, format!("{} -> {}", ce.input, ce.lhs), ce.rhs),
        Err(e) => Case::fail(params, format!("error: {e}"), "-"),
    }
}

fn relation_cases(items: Vec<(Params, Relation)>, degree: u32) -> Vec<Case> {
    par_cases(&items, |(p, r)| {
        vec![op_case(
            &p.with("relation", &r.name),
            &r.lhs,
            &r.rhs,
            degree,
        )]
    })
}

fn symmetric_basis(n: usize, degree: u32) -> Vec<Polynomial> {
    Partition::all_up_to(degree, n)
        .iter()
        .map(Polynomial::monomial_symmetric)
        .collect()
}

fn labels(grid: &GridSpec, n: usize) -> Vec<Partition> {
    Partition::all_up_to(grid.max_weight, n)
}

/// A named operator constructor taking a 1-based index.
type Ctor =
    fn(usize, &FamilySpec) -> std::result::Result<Operator, crate::operators::OperatorError>;

fn ops(spec: &FamilySpec, f: Ctor) -> Result<Vec<Operator>> {
    (1..=spec.n())
        .map(|j| f(j, spec).map_err(Into::into))
        .collect()
}

fn comm(a: &Operator, b: &Operator) -> Operator {
    &(a * b) - &(b * a)
}

fn daha(grid: &GridSpec) -> Result<Vec<Case>> {
    let mut items = Vec::new();
    for &n in &grid.ns {
        for &beta in &grid.betas {
            for r in daha_relations(n, beta)? {
                items.push((nb(n, beta), r));
            }
        }
    }
    let mut cases = relation_cases(items, grid.degree);
    // The identity is its own witness: D̂_1 on a monomial of top degree.
    for &n in &grid.ns {
        let d = cherednik_a(1, &FamilySpec::jack(n, 0))?;
        let euler = &Operator::var(n, 0) * &Operator::derivative(n, 0);
        let p = nb(n, 0).with("relation", "D1 = x1 d1 at beta=0");
        cases.push(Case::check(
            &p,
            operator_equal(&d, &euler, grid.degree)?,
            "D1",
            "x1 d1",
        ));
    }
    Ok(cases)
}

fn dunkl_commute(grid: &GridSpec) -> Result<Vec<Case>> {
    let mut items = Vec::new();
    for &n in &grid.ns {
        for &beta in &grid.betas {
            for r in dunkl_relations(n, beta)? {
                items.push((nb(n, beta).with("family", "jack"), r));
            }
        }
    }
    let commuting: [(&str, Ctor); 10] = [
        ("D", dunkl_a),
        ("Dhat", cherednik_a),
        ("A", creation_a),
        ("a", annihilation_a),
        ("htilde", htilde),
        ("DB", dunkl_b),
        ("DhatB", cherednik_b),
        ("B", creation_b),
        ("b", annihilation_b),
        ("T", cherednik_family),
    ];
    for spec in specs(grid, Family::Hermite)
        .into_iter()
        .chain(specs(grid, Family::Laguerre))
    {
        let n = spec.n();
        for (name, f) in commuting {
            let Ok(list) = ops(&spec, f) else { continue };
            for i in 0..n {
                for j in i + 1..n {
                    items.push((
                        base(&spec),
                        Relation {
                            name: format!("[{name}{},{name}{}]=0", i + 1, j + 1),
                            lhs: comm(&list[i], &list[j]),
                            rhs: Operator::zero(n),
                        },
                    ));
                }
            }
        }
    }
    for spec in all_specs(grid) {
        for (name, f) in commuting {
            let key = match name {
                "D" => "dunklA",
                "Dhat" => "cherednikA",
                "A" => "creationA",
                "a" => "annihilationA",
                "DB" => "dunklB",
                "DhatB" => "cherednikB",
                "B" => "creationB",
                "b" => "annihilationB",
                "T" => "family",
                other => other,
            };
            for j in 1..=spec.n() {
                let Ok(direct) = f(j, &spec) else { continue };
                let by_name = operator_by_name(&format!("{key}:j={j}"), &spec)?;
                items.push((
                    base(&spec),
                    Relation {
                        name: format!("lookup {key}:j={j}"),
                        lhs: by_name,
                        rhs: direct,
                    },
                ));
            }
        }
    }
    Ok(relation_cases(items, grid.degree))
}

/// `η_p + β(#{q: η_q < η_p} + #{q < p: η_q = η_p})`, the spectrum read off
/// the composition.
fn composition_spectrum(eta: &[u32], beta: u32) -> Vec<Rational> {
    (0..eta.len())
        .map(|p| {
            let below = eta.iter().filter(|&&e| e < eta[p]).count()
                + eta[..p].iter().filter(|&&e| e == eta[p]).count();
            int(eta[p] as i64 + beta as i64 * below as i64)
        })
        .collect()
}

fn nonsym_eigen(grid: &GridSpec) -> Vec<Case> {
    let mut items = Vec::new();
    for spec in all_specs(grid) {
        for w in 0..=grid.max_weight {
            for label in NonSymLabel::all_of_weight(w, spec.n()) {
                items.push((spec.clone(), label));
            }
        }
    }
    par_cases(&items, |(spec, label)| {
        let p = base(spec).with("label", label);
        vec![Case::guard(&p, || {
            let f = match spec.family() {
                Family::Jack => nonsym_jack(label, spec)?,
                Family::Hermite => nonsym_hermite(label, spec)?,
                Family::Laguerre => nonsym_laguerre(label, spec)?,
            };
            let expected = composition_spectrum(&label.composition(), spec.beta());
            if f.eigenvalues != expected {
                return Ok(Case::fail(&p, fmt_vec(&f.eigenvalues), fmt_vec(&expected)));
            }
            Ok(Case::check(
                &p,
                f.verify_eigen()?,
                "not an eigenfunction",
                fmt_vec(&expected),
            ))
        })]
    })
}

fn fmt_vec(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

fn jack_eigen(grid: &GridSpec) -> Vec<Case> {
    let mut items = Vec::new();
    for spec in specs(grid, Family::Jack) {
        for lam in labels(grid, spec.n()) {
            items.push((spec.clone(), lam));
        }
    }
    par_cases(&items, |(spec, lam)| {
        let n = spec.n();
        let p = base(spec).with("lambda", lam);
        let mut out = Vec::new();
        out.push(Case::guard(&p.with("check", "Delta(u)"), || {
            let j = jack(lam, spec, Construction::Triangular)?;
            let values: Vec<Rational> = (1..=n)
                .map(|k| int(lam.part(n - k) as i64 + spec.beta() as i64 * (k as i64 - 1)))
                .collect();
            if jack_spectrum(lam, spec) != values {
                return Ok(Case::fail(
                    &p,
                    fmt_vec(&jack_spectrum(lam, spec)),
                    fmt_vec(&values),
                ));
            }
            let coeffs = delta_coefficients(&ops(spec, cherednik_a)?, &j.poly)?;
            for (k, (c, e)) in coeffs.iter().zip(elementary_of(&values)).enumerate() {
                let rhs = j.poly.scale(&e);
                if *c != rhs {
                    return Ok(Case::fail(&p.with("u_power", n - k), c, rhs));
                }
            }
            Ok(Case::pass(&p))
        }));
        out.push(Case::guard(&p.with("check", "triangular"), || {
            let j = jack(lam, spec, Construction::Triangular)?;
            for (mu, c) in m_expansion(&j.poly) {
                let ok = if mu == *lam {
                    c.is_one()
                } else {
                    mu.weight() == lam.weight() && dominance_leq(&mu, lam)?
                };
                if !ok {
                    return Ok(Case::fail(
                        &p,
                        format!("m_({mu}) coefficient {c}"),
                        "dominance-lower terms",
                    ));
                }
            }
            Ok(Case::pass(&p))
        }));
        out.push(Case::guard(&p.with("check", "symmetrized"), || {
            let a = jack(lam, spec, Construction::Triangular)?.poly;
            let plus = symmetrizer(n, SymmetrizerKind::Plus)?;
            for eta in lam.rearrangements() {
                let e = nonsym_jack(&NonSymLabel::from_composition(&eta), spec)?.poly;
                let s = plus.apply(&e)?;
                let lead = s.coeff(&Monomial::new(
                    &lam.parts().iter().map(|&x| x as i32).collect::<Vec<_>>(),
                ));
                if lead.is_zero() || s.scale(&lead.recip()) != a {
                    return Ok(Case::fail(&p.with("eta", format!("{eta:?}")), s, &a));
                }
            }
            let b = jack(lam, spec, Construction::Symmetrized)?.poly;
            Ok(Case::compare(&p, &b, &a))
        }));
        out
    })
}

fn jack_orth(grid: &GridSpec) -> Vec<Case> {
    let mut items = Vec::new();
    for spec in specs(grid, Family::Jack) {
        let ls = labels(grid, spec.n());
        for (i, a) in ls.iter().enumerate() {
            for b in &ls[i + 1..] {
                items.push((spec.clone(), a.clone(), Some(b.clone())));
            }
            items.push((spec.clone(), a.clone(), None));
        }
    }
    par_cases(&items, |(spec, a, b)| {
        let p = base(spec).with("lambda", a);
        match b {
            Some(b) => {
                let p = p.with("mu", b);
                vec![Case::guard(&p, || {
                    let fa = jack(a, spec, Construction::Triangular)?.poly;
                    let fb = jack(b, spec, Construction::Triangular)?.poly;
                    let v = ct_pairing(&fa, &fb, spec)?;
                    Ok(Case::check(&p, v.is_zero(), format_rational(&v), "0"))
                })]
            }
            // ⟨J_λ, m_μ⟩ = 0 for every μ strictly dominance-below λ.
            None => Partition::all_of_weight(a.weight(), spec.n())
                .into_iter()
                .filter(|mu| mu != a && dominance_leq(mu, a).unwrap_or(false))
                .map(|mu| {
                    let p = p.with("m_mu", &mu);
                    Case::guard(&p, || {
                        let fa = jack(a, spec, Construction::Triangular)?.poly;
                        let v = ct_pairing(&fa, &Polynomial::monomial_symmetric(&mu), spec)?;
                        Ok(Case::check(&p, v.is_zero(), format_rational(&v), "0"))
                    })
                })
                .collect(),
        }
    })
}

const INTERTWINE_SAMPLES: usize = 50;

/// `(name, Q, ρ(Q))` for the generators `D̂_j`, `s_ij` and `x_j`.
fn generator_images(spec: &FamilySpec) -> Result<Vec<(String, Operator, Operator)>> {
    let n = spec.n();
    let jack_spec = spec.as_jack();
    let mut out = Vec::new();
    for j in 1..=n {
        out.push((
            format!("Dhat{j}"),
            cherednik_a(j, &jack_spec)?,
            cherednik_family(j, spec)?,
        ));
    }
    for i in 0..n {
        for j in i + 1..n {
            let s = Operator::exchange(n, i, j);
            out.push((format!("s{}{}", i + 1, j + 1), s.clone(), s));
        }
    }
    for j in 1..=n {
        let image = match spec.family() {
            Family::Hermite => creation_a(j, spec)?.scale(&rat(1, 2)),
            _ => creation_b(j, spec)?.pow(2).scale(&rat(1, 4)),
        };
        out.push((format!("x{j}"), Operator::var(n, j - 1), image));
    }
    Ok(out)
}

fn intertwine(grid: &GridSpec, family: Family) -> Vec<Case> {
    let mut items = Vec::new();
    for spec in specs(grid, family) {
        let mut rng = rng_for(grid.seed, &format!("intertwine/{spec}"));
        for k in 0..INTERTWINE_SAMPLES {
            items.push((
                spec.clone(),
                k,
                random_polynomial(&mut rng, spec.n(), grid.degree),
            ));
        }
    }
    par_cases(&items, |(spec, k, f)| {
        let p = base(spec).with("sample", k);
        let gens = match generator_images(spec) {
            Ok(g) => g,
            Err(e) => return vec![Case::fail(&p, format!("error: {e}"), "-")],
        };
        gens.iter()
            .map(|(name, q, rho)| {
                let p = p.with("Q", name).with("f", f);
                Case::guard(&p, || {
                    let (lhs, rhs) = match spec.family() {
                        Family::Hermite => {
                            (sigma_a(&q.apply(f)?, spec)?, rho.apply(&sigma_a(f, spec)?)?)
                        }
                        _ => {
                            let lhs = sigma_b(&q.apply(f)?, spec)?;
                            let img = rho.apply(&sigma_b(f, spec)?.u_to_z())?;
                            match img.z_to_u() {
                                Some(rhs) => (lhs, rhs),
                                None => return Ok(Case::fail(&p, lhs, format!("odd image {img}"))),
                            }
                        }
                    };
                    Ok(Case::compare(&p, &lhs, &rhs))
                })
            })
            .collect()
    })
}

fn intertwine_a(grid: &GridSpec) -> Vec<Case> {
    intertwine(grid, Family::Hermite)
}

fn intertwine_b(grid: &GridSpec) -> Vec<Case> {
    intertwine(grid, Family::Laguerre)
}

/// On `t`-invariant polynomials `D̂^B_j` acts as `2 D̂^A_j` in `u = z²`.
fn res_b(grid: &GridSpec) -> Vec<Case> {
    let mut items = Vec::new();
    for spec in specs(grid, Family::Laguerre) {
        for j in 1..=spec.n() {
            items.push((spec.clone(), j));
        }
    }
    par_cases(&items, |(spec, j)| {
        let p = base(spec).with("j", j);
        vec![Case::guard(&p, || {
            let db = cherednik_b(*j, spec)?;
            let da = cherednik_a(*j, &spec.as_jack())?.scale(&int(2));
            for m in Monomial::all_up_to(spec.n(), grid.degree) {
                let u = Polynomial::term(m, Rational::one());
                let img = db.apply(&u.u_to_z())?;
                let rhs = da.apply(&u)?;
                match img.z_to_u() {
                    Some(lhs) if lhs == rhs => {}
                    Some(lhs) => return Ok(Case::fail(&p.with("u", &u), lhs, rhs)),
                    None => {
                        return Ok(Case::fail(
                            &p.with("u", &u),
                            format!("odd image {img}"),
                            rhs,
                        ))
                    }
                }
            }
            Ok(Case::pass(&p))
        })]
    })
}

fn pairing(spec: &FamilySpec, f: &Polynomial, g: &Polynomial) -> Result<ScaledRational> {
    match spec.family() {
        Family::Jack => Ok(ScaledRational::rational(ct_pairing(f, g, spec)?)),
        Family::Hermite => gauss_pairing(f, g, spec),
        Family::Laguerre => laguerre_pairing(f, g, spec),
    }
}

fn orthogonal_is_sigma_jack(grid: &GridSpec, family: Family) -> Vec<Case> {
    let mut items = Vec::new();
    for spec in specs(grid, family) {
        let ls = labels(grid, spec.n());
        for (i, a) in ls.iter().enumerate() {
            items.push((spec.clone(), a.clone(), None));
            for b in &ls[i + 1..] {
                items.push((spec.clone(), a.clone(), Some(b.clone())));
            }
        }
    }
    let build = |lam: &Partition, spec: &FamilySpec, method| match family {
        Family::Hermite => hermite(lam, spec, method),
        _ => laguerre(lam, spec, method),
    };
    par_cases(&items, |(spec, a, b)| {
        let p = base(spec).with("lambda", a);
        match b {
            None => vec![
                Case::guard(&p.with("check", "gram = sigma(J)"), || {
                    let gram = build(a, spec, Construction::Gram)?.poly;
                    let j = jack(a, &spec.as_jack(), Construction::Triangular)?.poly;
                    let image = match family {
                        Family::Hermite => sigma_a(&j, spec)?,
                        _ => sigma_b(&j, spec)?,
                    };
                    Ok(Case::compare(&p, &gram, &image))
                }),
                Case::guard(&p.with("check", "eigen"), || {
                    let f = build(a, spec, Construction::Intertwined)?;
                    Ok(Case::check(
                        &p,
                        f.verify_eigen()?,
                        "not an eigenfunction",
                        fmt_vec(&f.eigenvalues),
                    ))
                }),
            ],
            Some(b) => {
                let p = p.with("mu", b);
                vec![Case::guard(&p, || {
                    let fa = build(a, spec, Construction::Intertwined)?.poly;
                    let fb = build(b, spec, Construction::Intertwined)?.poly;
                    let v = pairing(spec, &fa, &fb)?;
                    if family == Family::Laguerre {
                        let vz = laguerre_pairing_z(&fa.u_to_z(), &fb.u_to_z(), spec)?;
                        if vz != v {
                            return Ok(Case::fail(&p.with("check", "z pairing"), vz, v));
                        }
                    }
                    Ok(Case::check(&p, v.is_zero(), v, "0"))
                })]
            }
        }
    })
}

/// `B_m F_λ ∝ F_{λ+(1^m)}` needs `ℓ(λ) ≤ m`; the remaining cases are
/// only counted, in the metadata.
fn raising_all(grid: &GridSpec) -> (Vec<Case>, serde_json::Value) {
    let mut items = Vec::new();
    let mut outside = Vec::new();
    for spec in all_specs(grid) {
        for lam in labels(grid, spec.n()) {
            for m in 1..=spec.n() {
                if lam.weight() + m as u32 <= grid.max_weight {
                    if lam.length() <= m {
                        items.push((spec.clone(), lam.clone(), m));
                    } else {
                        outside.push((spec.clone(), lam.clone(), m));
                    }
                }
            }
        }
    }
    let cases = par_cases(&items, |(spec, lam, m)| {
        let p = base(spec).with("lambda", lam).with("m", m);
        vec![Case::guard(&p, || {
            let f = family_polynomial(lam, spec)?;
            let out = raising_apply(*m, &f)?;
            let expected = raising_constant(lam, *m, spec);
            if out.polynomial.partition() != &lam.add_first(*m) {
                return Ok(Case::fail(&p, out.polynomial.label, lam.add_first(*m)));
            }
            Ok(Case::compare(&p, &out.constant, &expected))
        })]
    });
    let proportional = par_cases(&outside, |(spec, lam, m)| {
        let ok = family_polynomial(lam, spec)
            .and_then(|f| raising_apply(*m, &f))
            .map(|o| o.holds())
            .unwrap_or(false);
        vec![Case::check(&Params::default(), ok, "", "")]
    })
    .iter()
    .filter(|c| c.failure.is_none())
    .count();
    let meta = serde_json::json!({
        "hypothesis": "length(lambda) <= m",
        "outside_hypothesis": outside.len(),
        "outside_still_proportional": proportional,
    });
    (cases, meta)
}

fn rodrigues_all(grid: &GridSpec) -> Vec<Case> {
    let mut items = Vec::new();
    for spec in all_specs(grid) {
        // The hook product vanishes at β = 0, where the formula is void.
        if spec.beta() == 0 {
            continue;
        }
        for lam in labels(grid, spec.n()) {
            items.push((spec.clone(), lam));
        }
    }
    par_cases(&items, |(spec, lam)| {
        let p = base(spec).with("lambda", lam);
        vec![Case::guard(&p, || {
            let hook = hook_product(lam, spec.beta());
            if hook.is_zero() {
                return Ok(Case::fail(&p, "hook product 0", "nonzero"));
            }
            let (r, direct) = match spec.family() {
                Family::Jack => (
                    jack(lam, spec, Construction::Rodrigues)?,
                    jack(lam, spec, Construction::Triangular)?,
                ),
                Family::Hermite => (
                    hermite(lam, spec, Construction::Rodrigues)?,
                    hermite(lam, spec, Construction::Gram)?,
                ),
                Family::Laguerre => (
                    laguerre(lam, spec, Construction::Rodrigues)?,
                    laguerre(lam, spec, Construction::Gram)?,
                ),
            };
            let plain = rodrigues(lam, spec)?;
            if plain.poly != r.poly {
                return Ok(Case::fail(&p, plain.poly, r.poly));
            }
            let default = family_polynomial(lam, spec)?;
            if default.poly != direct.poly {
                return Ok(Case::fail(&p, default.poly, direct.poly));
            }
            Ok(Case::compare(&p, &r.poly, &direct.poly))
        })]
    })
}

fn delta_weight(n: usize) -> u32 {
    (n * (n - 1) / 2) as u32
}

fn shift_all(grid: &GridSpec) -> Result<(Vec<Case>, serde_json::Value)> {
    let mut calibrations = Vec::new();
    for family in Family::ALL {
        calibrations.push(calibrate(family)?);
    }
    let mut items = Vec::new();
    for spec in all_specs(grid) {
        let dw = delta_weight(spec.n());
        if dw > grid.max_weight {
            continue;
        }
        for lam in Partition::all_up_to(grid.max_weight - dw, spec.n()) {
            items.push((spec.clone(), lam));
        }
    }
    let mut cases = Vec::new();
    for c in &calibrations {
        let p = Params::default()
            .with("family", c.family)
            .with("check", "calibration cache");
        cases.push(Case::guard(&p, || {
            let cached = calibration(c.family)?;
            Ok(Case::check(
                &p,
                cached == *c,
                format!("{cached:?}"),
                format!("{c:?}"),
            ))
        }));
    }
    cases.extend(par_cases(&items, |(lower, lam)| {
        let p = base(lower).with("lambda", lam);
        let upper = lower.with_beta(lower.beta() + 1);
        let mut out = Vec::new();
        let assignment = match calibration(lower.family()) {
            Ok(c) => c.assignment,
            Err(e) => return vec![Case::fail(&p, format!("error: {e}"), "-")],
        };
        let (c, ct) = shift_constants(lam, lower);
        let mut measured = (None, None);
        out.push(Case::guard(&p.with("direction", "G"), || {
            let f = family_polynomial(&lam.plus_delta(), lower)?;
            let o = shift_apply(ShiftDirection::G, &f, assignment)?;
            measured.0 = Some(o.constant.clone());
            Ok(Case::check(
                &p,
                o.holds_up_to_sign() && o.expected == c,
                format_rational(&o.constant),
                format!("±{}", format_rational(&c)),
            ))
        }));
        out.push(Case::guard(&p.with("direction", "G_hat"), || {
            let f = family_polynomial(lam, &upper)?;
            let o = shift_apply(ShiftDirection::GHat, &f, assignment)?;
            measured.1 = Some(o.constant.clone());
            Ok(Case::check(
                &p,
                o.holds_up_to_sign() && o.expected == ct,
                format_rational(&o.constant),
                format!("±{}", format_rational(&ct)),
            ))
        }));
        // The shift operator built by hand from Y and X.
        out.push(Case::guard(&p.with("direction", "G by hand"), || {
            let f = family_polynomial(&lam.plus_delta(), lower)?;
            let via = shift_operator(ShiftDirection::G, &f.poly, lower, assignment)?;
            let sign = match assignment {
                Assignment::Standard => 1,
                Assignment::Swapped => -1,
            };
            let y = y_operator(lower, sign)?;
            let carrier = if lower.family() == Family::Laguerre {
                f.poly.u_to_z()
            } else {
                f.poly.clone()
            };
            let mut img = y.apply(&carrier)?;
            if lower.family() == Family::Laguerre {
                img = img.z_to_u().unwrap_or_else(|| Polynomial::zero(lower.n()));
            }
            let x = crate::arith::vandermonde(lower.n(), crate::arith::Variant::A);
            Ok(Case::compare(&p, &via, &img.divide_exact(&x)?))
        }));
        if let (Some(rg), Some(rh)) = measured {
            out.push(Case::guard(&p.with("check", "norm recursion"), || {
                let hi = norm_formula(lam, &upper, NormForm::Product)?.scale(&rg);
                let lo = norm_formula(&lam.plus_delta(), lower, NormForm::Product)?.scale(&rh);
                Ok(Case::compare(&p, &hi, &lo))
            }));
        }
        out
    }));
    let meta = serde_json::to_value(&calibrations).expect("calibration serializes");
    Ok((cases, meta))
}

const DUALITY_PAIRS: usize = 20;

fn duality_all(grid: &GridSpec) -> Result<(Vec<Case>, serde_json::Value)> {
    let mut items = Vec::new();
    for spec in all_specs(grid) {
        let mut rng = rng_for(grid.seed, &format!("duality/{spec}"));
        for k in 0..DUALITY_PAIRS {
            let f = random_symmetric(&mut rng, spec.n(), grid.max_weight);
            let g = random_symmetric(&mut rng, spec.n(), grid.max_weight);
            items.push((spec.clone(), k, f, g));
        }
    }
    let mut meta = Vec::new();
    for family in Family::ALL {
        meta.push(calibration(family)?);
    }
    let cases = par_cases(&items, |(lower, k, f, g)| {
        let p = base(lower).with("sample", k);
        vec![Case::guard(&p, || {
            let assignment = calibration(lower.family())?.assignment;
            if duality_check(f, g, lower, assignment)? {
                return Ok(Case::pass(&p));
            }
            let (l, r) = duality_sides(f, g, lower, assignment)?;
            Ok(Case::fail(&p.with("f", f).with("g", g), l, r))
        })]
    });
    Ok((
        cases,
        serde_json::to_value(&meta).expect("calibration serializes"),
    ))
}

fn norms_all(grid: &GridSpec) -> Vec<Case> {
    let mut items = Vec::new();
    for spec in all_specs(grid) {
        for lam in labels(grid, spec.n()) {
            items.push((spec.clone(), lam));
        }
    }
    let mut cases = par_cases(&items, |(spec, lam)| {
        let p = base(spec).with("lambda", lam);
        vec![Case::guard(&p, || {
            let f = family_polynomial(lam, spec)?.poly;
            let measured = pairing(spec, &f, &f)?;
            for form in [NormForm::Product, NormForm::Hook] {
                let closed = norm_formula(lam, spec, form)?;
                if closed != measured {
                    return Ok(Case::fail(&p.with("form", form.name()), measured, closed));
                }
            }
            Ok(Case::pass(&p))
        })]
    });
    // ⟨1,1⟩ = (βN)!/(β!)^N for Jack.
    for spec in specs(grid, Family::Jack) {
        let p = base(&spec).with("lambda", "empty");
        let (n, b) = (spec.n() as u64, spec.beta() as u64);
        let expected = Rational::new(factorial(n * b), factorial(b).pow(n as u32));
        cases.push(Case::guard(&p, || {
            let one = Polynomial::one(spec.n());
            Ok(Case::compare(
                &p,
                &ct_pairing(&one, &one, &spec)?,
                &expected,
            ))
        }));
    }
    cases
}

fn norm_equiv(grid: &GridSpec) -> Vec<Case> {
    let mut items = Vec::new();
    for spec in all_specs(grid) {
        for lam in labels(grid, spec.n()) {
            items.push((spec.clone(), lam));
        }
    }
    par_cases(&items, |(spec, lam)| {
        let p = base(spec).with("lambda", lam);
        vec![Case::guard(&p, || {
            let a = norm_formula(lam, spec, NormForm::Product)?;
            let b = norm_formula(lam, spec, NormForm::Hook)?;
            Ok(Case::compare(&p, &a, &b))
        })]
    })
}

/// Rank of `op` on the polynomials of degree `≤ d`.
fn rank_on(op: &Operator, n: usize, d: u32) -> Result<usize> {
    let basis = Monomial::all_up_to(n, d);
    let index: std::collections::HashMap<&Monomial, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut mat = Matrix::zeros(basis.len(), basis.len());
    for (c, m) in basis.iter().enumerate() {
        let img = op.apply(&Polynomial::term(m.clone(), Rational::one()))?;
        for (mm, v) in img.terms() {
            let r = index.get(mm).ok_or_else(|| {
                crate::error::Error::Unsupported(format!("image leaves degree {d}"))
            })?;
            mat.set(*r, c, v.clone());
        }
    }
    Ok(mat.rank())
}

fn appendix_a(grid: &GridSpec) -> Result<Vec<Case>> {
    let mut items: Vec<(Params, Relation)> = Vec::new();
    let mut symmetric_items: Vec<(Params, Relation)> = Vec::new();
    let mut ranks = Vec::new();
    for &n in &grid.ns {
        if n < 2 {
            continue;
        }
        let id = Operator::identity(n);
        let zero = Operator::zero(n);
        let p_minus = symmetrizer(n, SymmetrizerKind::Minus)?;
        let w0 = Operator::permute(Permutation::longest(n));
        let l0 = Permutation::longest(n).length();
        let w0_sign = if l0.is_multiple_of(2) {
            int(1)
        } else {
            int(-1)
        };
        for j in 0..n - 1 {
            let one_plus_s = &id + &Operator::exchange(n, j, j + 1);
            items.push((
                nb(n, 0),
                Relation {
                    name: format!("P-(1+s{})=0", j + 1),
                    lhs: &p_minus * &one_plus_s,
                    rhs: zero.clone(),
                },
            ));
            items.push((
                nb(n, 0),
                Relation {
                    name: format!("(1+s{})P-=0", j + 1),
                    lhs: &one_plus_s * &p_minus,
                    rhs: zero.clone(),
                },
            ));
        }
        let div = &id - &w0.scale(&w0_sign);
        items.push((
            nb(n, 0),
            Relation {
                name: "P-(1-(-1)^l(w0) w0)=0".into(),
                lhs: &p_minus * &div,
                rhs: zero.clone(),
            },
        ));
        items.push((
            nb(n, 0),
            Relation {
                name: "(1-(-1)^l(w0) w0)P-=0".into(),
                lhs: &div * &p_minus,
                rhs: zero.clone(),
            },
        ));
        for &beta in &grid.betas {
            let p = nb(n, beta);
            let b = int(beta as i64);
            let p_beta = symmetrizer(n, SymmetrizerKind::MinusDeformed(beta))?;
            for j in 1..n {
                let sh = s_hat(n, beta, j)?;
                let xj = Operator::var(n, j - 1);
                let xj1 = Operator::var(n, j);
                items.push((
                    p.clone(),
                    Relation {
                        name: format!("shat{j}^2=1"),
                        lhs: &sh * &sh,
                        rhs: id.clone(),
                    },
                ));
                items.push((
                    p.clone(),
                    Relation {
                        name: format!("x{} shat{j} - shat{j} x{j} = beta", j + 1),
                        lhs: &(&xj1 * &sh) - &(&sh * &xj),
                        rhs: Operator::scalar(n, b.clone()),
                    },
                ));
                items.push((
                    p.clone(),
                    Relation {
                        name: format!("shat{j} x{} - x{j} shat{j} = beta", j + 1),
                        lhs: &(&sh * &xj1) - &(&xj * &sh),
                        rhs: Operator::scalar(n, b.clone()),
                    },
                ));
                for k in 0..n {
                    if k != j - 1 && k != j {
                        let xk = Operator::var(n, k);
                        items.push((
                            p.clone(),
                            Relation {
                                name: format!("[shat{j},x{}]=0", k + 1),
                                lhs: comm(&sh, &xk),
                                rhs: zero.clone(),
                            },
                        ));
                    }
                }
                let one_plus_hat = &id + &sh;
                let one_plus_s = &id + &Operator::exchange(n, j - 1, j);
                items.push((
                    p.clone(),
                    Relation {
                        name: format!("P-beta(1+shat{j})=0"),
                        lhs: &p_beta * &one_plus_hat,
                        rhs: zero.clone(),
                    },
                ));
                items.push((
                    p.clone(),
                    Relation {
                        name: format!("(1+shat{j})P-beta=0"),
                        lhs: &one_plus_hat * &p_beta,
                        rhs: zero.clone(),
                    },
                ));
                items.push((
                    p.clone(),
                    Relation {
                        name: format!("P-beta(1+s{j})=0"),
                        lhs: &p_beta * &one_plus_s,
                        rhs: zero.clone(),
                    },
                ));
            }
            for w in Permutation::all(n) {
                let reference = w_hat(&w, beta);
                for word in w.all_reduced_words() {
                    items.push((
                        p.clone(),
                        Relation {
                            name: format!("w_hat {w} via {word:?}"),
                            lhs: w_hat_word(n, beta, &word),
                            rhs: reference.clone(),
                        },
                    ));
                }
            }
            let yp = y_prime(n, &b);
            let yh = y_prime(n, &-b.clone());
            let diff = &yp - &yh;
            let pairs = n * (n - 1) / 2;
            let sign = if pairs % 2 == 0 { int(1) } else { int(-1) };
            items.push((
                p.clone(),
                Relation {
                    name: "(1+(-1)^{N(N-1)/2} w0)(Y'-Y'hat) = (Y'-Y'hat)(1-w0)".into(),
                    lhs: &(&id + &w0.scale(&sign)) * &diff,
                    rhs: &diff * &(&id - &w0),
                },
            ));
            symmetric_items.push((
                p.clone(),
                Relation {
                    name: "P-(Y'-Y'hat)f=0".into(),
                    lhs: &p_minus * &diff,
                    rhs: zero.clone(),
                },
            ));
            symmetric_items.push((
                p.clone(),
                Relation {
                    name: "P-beta(Y'-Y'hat)f=0".into(),
                    lhs: &p_beta * &diff,
                    rhs: zero.clone(),
                },
            ));
            for d in 0..=grid.degree {
                ranks.push((n, beta, d, p_beta.clone(), p_minus.clone()));
            }
        }
    }
    let mut cases = relation_cases(items, grid.degree);
    cases.extend(par_cases(&symmetric_items, |(p, r)| {
        let basis = symmetric_basis(r.lhs.nvars(), grid.degree);
        let p = p.with("relation", &r.name);
        let mut out = vec![op_case_on(&p, &r.lhs, &r.rhs, &basis)];
        if let Ok(ok) = operator_equal_on(&r.lhs, &r.rhs, &basis) {
            out.push(Case::check(
                &p.with("check", "equal_on"),
                ok,
                "differs",
                "equal",
            ));
        }
        out
    }));
    cases.extend(par_cases(&ranks, |(n, beta, d, pb, pm)| {
        let p = nb(*n, *beta)
            .with("relation", "rank P-beta = rank P-")
            .with("degree", d);
        vec![Case::guard(&p, || {
            let a = rank_on(pb, *n, *d)?;
            let b = rank_on(pm, *n, *d)?;
            Ok(Case::compare(&p, &a, &b))
        })]
    }));
    let mut lemma = Vec::new();
    for spec in all_specs(grid) {
        if spec.n() >= 2 {
            lemma.push(spec);
        }
    }
    cases.extend(par_cases(&lemma, |spec| {
        let p = base(spec).with("relation", "P-(Y+ - Y-)f=0");
        vec![Case::guard(&p, || {
            Ok(Case::check(
                &p,
                antisymmetrizer_lemma_check(spec, grid.degree.min(4))?,
                "nonzero",
                "0",
            ))
        })]
    }));
    Ok(cases)
}

const PAIRING_SAMPLES: usize = 20;

fn dunkl_pairing_prop(grid: &GridSpec) -> Result<(Vec<Case>, serde_json::Value)> {
    let mut items = Vec::new();
    for spec in specs(grid, Family::Hermite) {
        let mut rng = rng_for(grid.seed, &format!("dunkl_pairing/{spec}"));
        for k in 0..PAIRING_SAMPLES {
            let f = random_polynomial(&mut rng, spec.n(), grid.degree.min(4));
            let g = random_polynomial(&mut rng, spec.n(), grid.degree.min(4));
            items.push((spec.clone(), k, f, g));
        }
    }
    let results: Vec<(Case, bool)> = {
        let tagged = par_cases(&items, |(spec, k, f, g)| {
            let p = base(spec).with("sample", k);
            let r = (|| -> Result<(Case, bool)> {
                let one = Polynomial::one(spec.n());
                let norm = gauss_pairing(&one, &one, spec)?;
                let lhs = induced_pairing(f, g, spec)?;
                let plain = norm.scale(&dunkl_pairing(f, g, spec, DunklVariant::Dunkl)?);
                let hat = norm.scale(&dunkl_pairing(f, g, spec, DunklVariant::Cherednik)?);
                let case = if lhs == plain {
                    Case::pass(&p)
                } else {
                    Case::fail(&p.with("f", f).with("g", g), &lhs, &plain)
                };
                Ok((case, lhs == hat))
            })();
            match r {
                Ok((c, hat)) => vec![c, Case::check(&Params::default(), hat, "", "")],
                Err(e) => vec![
                    Case::fail(&p, format!("error: {e}"), "-"),
                    Case::check(&Params::default(), false, "", ""),
                ],
            }
        });
        tagged
            .chunks(2)
            .map(|c| (c[0].clone(), c[1].failure.is_none()))
            .collect()
    };
    let hat_agree = results.iter().filter(|(_, h)| *h).count();
    let mut cases: Vec<Case> = results.into_iter().map(|(c, _)| c).collect();
    let mut orth = Vec::new();
    for spec in specs(grid, Family::Jack) {
        let ls = labels(grid, spec.n());
        for (i, a) in ls.iter().enumerate() {
            for b in &ls[i + 1..] {
                orth.push((spec.clone(), a.clone(), b.clone()));
            }
        }
    }
    cases.extend(par_cases(&orth, |(spec, a, b)| {
        let p = base(spec).with("lambda", a).with("mu", b);
        vec![Case::guard(&p, || {
            let fa = jack(a, spec, Construction::Triangular)?.poly;
            let fb = jack(b, spec, Construction::Triangular)?.poly;
            let v = dunkl_pairing(&fa, &fb, spec, DunklVariant::Dunkl)?;
            Ok(Case::check(&p, v.is_zero(), format_rational(&v), "0"))
        })]
    }));
    let meta = serde_json::json!({
        "operator": "dunkl",
        "normalisation": "<<f,g>> = <1,1> [f(D) g]_0",
        "cherednik_agreements": hat_agree,
        "samples": items.len(),
    });
    Ok((cases, meta))
}

fn sutherland(grid: &GridSpec) -> Result<Vec<Case>> {
    let mut items = Vec::new();
    let mut eigen = Vec::new();
    for &n in &grid.ns {
        for &beta in &grid.betas {
            let (lhs, rhs) = sutherland_sides(n, beta)?;
            items.push((nb(n, beta), lhs.clone(), rhs));
            for lam in labels(grid, n) {
                eigen.push((FamilySpec::jack(n, beta), lam, lhs.clone()));
            }
        }
    }
    let mut cases = par_cases(&items, |(p, lhs, rhs)| {
        let basis = symmetric_basis(lhs.nvars(), grid.degree);
        vec![op_case_on(
            &p.with("relation", "expanded = sum (Dhat - beta(N-1)/2)^2"),
            lhs,
            rhs,
            &basis,
        )]
    });
    cases.extend(par_cases(&eigen, |(spec, lam, h)| {
        let p = base(spec).with("lambda", lam);
        vec![Case::guard(&p, || {
            let j = jack(lam, spec, Construction::Triangular)?.poly;
            let shift = spec.beta_q() * rat(spec.n() as i64 - 1, 2);
            let e: Rational = symmetric_spectrum(lam, spec)
                .iter()
                .map(|v| {
                    let t = v - &shift;
                    &t * &t
                })
                .sum();
            Ok(Case::compare(&p, &h.apply(&j)?, &j.scale(&e)))
        })]
    }));
    Ok(cases)
}
