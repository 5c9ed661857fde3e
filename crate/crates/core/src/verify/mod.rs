//! Named verification suites. Each suite turns one family of identities
//! into exact pass/fail cases over a grid of `(N, β, γ, degree)` values and
//! reports every counterexample.

mod daha;
mod random;
mod suites;

pub use daha::{daha_relations, sutherland_sides, Relation};
pub use random::{random_polynomial, random_symmetric, rng_for};

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{format_rational, int, parse_rational, rat, Rational};
use crate::error::{Error, Result};

/// Parameter grid shared by all suites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub ns: Vec<usize>,
    pub betas: Vec<u32>,
    pub gammas: Vec<Rational>,
    /// Largest `|λ|` for label-indexed cases.
    pub max_weight: u32,
    /// Largest total degree for operator identities.
    pub degree: u32,
    pub seed: u64,
}

pub const MAX_N: usize = 4;
pub const MAX_DEGREE: u32 = 6;
pub const MAX_BETA: u32 = 3;
pub const MAX_WEIGHT: u32 = 8;

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            ns: vec![2, 3],
            betas: vec![0, 1, 2],
            gammas: vec![int(0), rat(1, 3), rat(1, 2)],
            max_weight: 4,
            degree: 5,
            seed: 1,
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::GridOutOfBounds(m));
        if self.ns.is_empty() || self.betas.is_empty() || self.gammas.is_empty() {
            return bad("empty parameter list".into());
        }
        if let Some(n) = self.ns.iter().find(|&&n| n == 0 || n > MAX_N) {
            return bad(format!("N = {n} outside 1..={MAX_N}"));
        }
        if let Some(b) = self.betas.iter().find(|&&b| b > MAX_BETA) {
            return bad(format!("beta = {b} exceeds {MAX_BETA}"));
        }
        if self.degree > MAX_DEGREE {
            return bad(format!("degree = {} exceeds {MAX_DEGREE}", self.degree));
        }
        if self.max_weight > MAX_WEIGHT {
            return bad(format!(
                "max weight = {} exceeds {MAX_WEIGHT}",
                self.max_weight
            ));
        }
        if let Some(g) = self.gammas.iter().find(|g| **g <= rat(-1, 2)) {
            return bad(format!("gamma = {} must exceed -1/2", format_rational(g)));
        }
        Ok(())
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ns": self.ns,
            "betas": self.betas,
            "gammas": self.gammas.iter().map(format_rational).collect::<Vec<_>>(),
            "max_weight": self.max_weight,
            "degree": self.degree,
            "seed": self.seed,
        })
    }

    /// Parses the `--gammas` style list `0,1/3,1/2`.
    pub fn parse_gammas(s: &str) -> Result<Vec<Rational>> {
        s.split(',')
            .map(|t| parse_rational(t.trim()).map_err(Error::from))
            .collect()
    }
}

macro_rules! suites {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum SuiteName {
            $($variant),*
        }

        impl SuiteName {
            pub const ALL: &'static [SuiteName] = &[$(SuiteName::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(SuiteName::$variant => $name),*
                }
            }
        }
    };
}

suites! {
    DahaRelations => "daha_relations",
    DunklCommute => "dunkl_commute",
    NonsymEigen => "nonsym_eigen",
    JackEigen => "jack_eigen",
    JackOrth => "jack_orth",
    IntertwineA => "intertwine_A",
    IntertwineB => "intertwine_B",
    ResB => "res_B",
    HermiteIsSigmaJack => "hermite_is_sigma_jack",
    LaguerreIsSigmaJack => "laguerre_is_sigma_jack",
    RaisingAll => "raising_all",
    RodriguesAll => "rodrigues_all",
    ShiftAll => "shift_all",
    DualityAll => "duality_all",
    NormsAll => "norms_all",
    NormEquivAppB => "norm_equiv_appB",
    AppendixA => "appendix_A",
    DunklPairingProp => "dunkl_pairing_prop",
    SutherlandForm => "sutherland_form",
}

impl SuiteName {
    /// Case-insensitive lookup by name.
    pub fn parse(s: &str) -> Result<Self> {
        SuiteName::ALL
            .iter()
            .copied()
            .find(|n| n.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }

    /// Public operations of the library the suite exercises.
    pub fn operations(self) -> &'static [&'static str] {
        suites::operations(self)
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One failing case with the exact values on both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub grid: serde_json::Value,
    pub cases_run: usize,
    pub cases_passed: usize,
    pub failures: Vec<Failure>,
    /// Convention metadata; `null` for suites that need none.
    pub calibration: serde_json::Value,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases_passed == self.cases_run
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// A single evaluated case.
#[derive(Debug, Clone)]
pub(crate) struct Case {
    params: BTreeMap<String, String>,
    failure: Option<(String, String)>,
}

impl Case {
    pub(crate) fn new(params: &Params, failure: Option<(String, String)>) -> Self {
        Case {
            params: params.0.clone(),
            failure,
        }
    }

    pub(crate) fn pass(params: &Params) -> Self {
        Case::new(params, None)
    }

    pub(crate) fn fail(params: &Params, lhs: impl ToString, rhs: impl ToString) -> Self {
        Case::new(params, Some((lhs.to_string(), rhs.to_string())))
    }

    pub(crate) fn compare<T: PartialEq + fmt::Display>(params: &Params, lhs: &T, rhs: &T) -> Self {
        if lhs == rhs {
            Case::pass(params)
        } else {
            Case::fail(params, lhs, rhs)
        }
    }

    pub(crate) fn check(params: &Params, ok: bool, lhs: impl ToString, rhs: impl ToString) -> Self {
        if ok {
            Case::pass(params)
        } else {
            Case::fail(params, lhs, rhs)
        }
    }

    /// Runs `f`, turning a library error into a failed case.
    pub(crate) fn guard(params: &Params, f: impl FnOnce() -> Result<Case>) -> Self {
        f().unwrap_or_else(|e| Case::fail(params, format!("error: {e}"), "-"))
    }
}

/// Ordered case parameters.
#[derive(Debug, Clone, Default)]
pub(crate) struct Params(BTreeMap<String, String>);

impl Params {
    pub(crate) fn with(&self, key: &str, value: impl ToString) -> Params {
        let mut p = self.clone();
        p.0.insert(key.to_string(), value.to_string());
        p
    }
}

fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads = std::env::var("HECKE_POLY_THREADS")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&t| t > 0)
            .unwrap_or(0);
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
    })
}

/// Evaluates `f` on every item in parallel, keeping the input order.
pub(crate) fn par_cases<T: Sync>(items: &[T], f: impl Fn(&T) -> Vec<Case> + Sync) -> Vec<Case> {
    pool()
        .install(|| items.par_iter().map(&f).collect::<Vec<_>>())
        .into_iter()
        .flatten()
        .collect()
}

pub fn run_suite(name: SuiteName, grid: &GridSpec) -> Result<SuiteReport> {
    grid.validate()?;
    let (cases, calibration) = suites::run(name, grid)?;
    let cases_run = cases.len();
    let failures: Vec<Failure> = cases
        .into_iter()
        .filter_map(|c| {
            c.failure.map(|(lhs, rhs)| Failure {
                params: c.params,
                lhs,
                rhs,
            })
        })
        .collect();
    Ok(SuiteReport {
        suite: name.name().to_string(),
        grid: grid.to_json(),
        cases_run,
        cases_passed: cases_run - failures.len(),
        failures,
        calibration,
    })
}

/// Every suite in [`SuiteName::ALL`] order.
pub fn run_all(grid: &GridSpec) -> Result<Vec<SuiteReport>> {
    SuiteName::ALL.iter().map(|&s| run_suite(s, grid)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn small() -> GridSpec {
        GridSpec {
            ns: vec![2],
            betas: vec![0, 1],
            gammas: vec![rat(1, 3)],
            max_weight: 2,
            degree: 3,
            seed: 7,
        }
    }

    #[test]
    fn names_round_trip() {
        assert_eq!(SuiteName::ALL.len(), 19);
        for &s in SuiteName::ALL {
            assert_eq!(SuiteName::parse(s.name()).unwrap(), s);
        }
        assert_eq!(
            SuiteName::parse("appendix_a").unwrap(),
            SuiteName::AppendixA
        );
        assert_eq!(
            SuiteName::parse("nope"),
            Err(Error::UnknownSuite("nope".into()))
        );
    }

    #[test]
    fn grid_bounds() {
        assert!(GridSpec::default().validate().is_ok());
        let g = GridSpec {
            ns: vec![5],
            ..GridSpec::default()
        };
        assert!(matches!(g.validate(), Err(Error::GridOutOfBounds(_))));
        let g = GridSpec {
            degree: 7,
            ..GridSpec::default()
        };
        assert!(g.validate().is_err());
        let g = GridSpec {
            betas: vec![4],
            ..GridSpec::default()
        };
        assert!(g.validate().is_err());
        let g = GridSpec {
            gammas: vec![rat(-1, 2)],
            ..GridSpec::default()
        };
        assert!(g.validate().is_err());
    }

    #[test]
    fn every_suite_passes_on_a_small_grid() {
        for report in run_all(&small()).unwrap() {
            assert!(report.cases_run > 0, "{}", report.suite);
            assert!(report.passed(), "{}", report.to_json());
        }
    }

    #[test]
    fn reports_are_reproducible() {
        let g = small();
        let a = run_suite(SuiteName::DualityAll, &g).unwrap().to_json();
        let b = run_suite(SuiteName::DualityAll, &g).unwrap().to_json();
        assert_eq!(a, b);
    }

    /// Names of the top-level `pub fn`s of a source file.
    fn public_fns(src: &str) -> Vec<String> {
        src.lines()
            .filter_map(|l| l.strip_prefix("pub fn "))
            .map(|rest| rest.split(['(', '<']).next().unwrap().to_string())
            .collect()
    }

    #[test]
    fn suites_cover_every_public_operation() {
        let sources = [
            include_str!("../operators/equality.rs"),
            include_str!("../operators/named.rs"),
            include_str!("../operators/symmetrize.rs"),
            include_str!("../families/mod.rs"),
            include_str!("../families/jack.rs"),
            include_str!("../families/intertwine.rs"),
            include_str!("../families/orthogonal.rs"),
            include_str!("../pairings/inner.rs"),
            include_str!("../pairings/norms.rs"),
            include_str!("../raising/mod.rs"),
            include_str!("../raising/shift.rs"),
        ];
        let declared: BTreeSet<&str> = SuiteName::ALL
            .iter()
            .flat_map(|s| s.operations().iter().copied())
            .collect();
        let mut missing = Vec::new();
        for src in sources {
            for f in public_fns(src) {
                if !declared.contains(f.as_str()) {
                    missing.push(f);
                }
            }
        }
        assert!(
            missing.is_empty(),
            "operations not exercised by any suite: {missing:?}"
        );
        assert!(declared.len() > 40);
    }
}
