//! Command-line front end for `hecke-poly`.
//!
//! [`RunConfig`] is the parsed command line. [`execute`] runs it and
//! returns an [`Output`] that can be rendered as JSON, CSV or plain text.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hecke_poly::arith::{
    format_rational, parse_polynomial, parse_rational, Partition, Permutation, Rational,
};
use hecke_poly::families::{
    family_polynomial, hermite, jack, laguerre, nonsym_hermite, nonsym_jack, nonsym_laguerre,
    Construction, FamilyPolynomial, NonSymLabel,
};
use hecke_poly::operators::{operator_by_name, Family, FamilySpec};
use hecke_poly::pairings::{
    ct_pairing, dunkl_pairing, gauss_pairing, induced_pairing, laguerre_pairing, norm_formula,
    DunklVariant, NormForm, ScaledRational,
};
use hecke_poly::raising::{calibration, raising_apply, shift_apply, ShiftDirection};
use hecke_poly::verify::{run_all, run_suite, GridSpec, SuiteName, SuiteReport};
use hecke_poly::Result;

#[derive(Parser, Debug, Clone, PartialEq)]
#[command(
    name = "hecke-poly",
    version,
    about = "Exact Jack, Hermite and Laguerre polynomials and the operators behind them"
)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Pretty => "pretty",
        }
    }
}

#[derive(Args, Debug, Clone, PartialEq)]
pub struct SpecArgs {
    #[arg(long)]
    pub family: Family,
    /// Number of variables.
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub beta: u32,
    /// Laguerre parameter, e.g. `1/2`.
    #[arg(long, value_parser = parse_gamma, allow_hyphen_values = true)]
    pub gamma: Option<Rational>,
}

impl SpecArgs {
    fn spec(&self) -> Result<FamilySpec> {
        Ok(FamilySpec::new(
            self.family,
            self.n,
            self.beta,
            self.gamma.clone(),
        )?)
    }

    fn render(&self, out: &mut Vec<String>) {
        push(out, "--family", self.family.name());
        push(out, "--n", self.n);
        push(out, "--beta", self.beta);
        if let Some(g) = &self.gamma {
            push(out, "--gamma", format_rational(g));
        }
    }
}

fn parse_gamma(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_suite(s: &str) -> std::result::Result<SuiteName, String> {
    SuiteName::parse(s).map_err(|e| e.to_string())
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormChoice {
    Product,
    Hook,
    /// Pair the polynomial with itself.
    Pairing,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairingChoice {
    /// The family's own pairing.
    Default,
    /// Hermite: `<<f,g>> = <1,1>[f(D)g]_0`.
    Dunkl,
    /// Hermite: the same pairing built from the Cherednik operators.
    Cherednik,
    /// Hermite: the pairing induced from the Jack pairing through `σ`.
    Induced,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    G,
    Ghat,
}

#[derive(Subcommand, Debug, Clone, PartialEq)]
pub enum Command {
    /// Construct a family polynomial.
    Poly {
        #[command(flatten)]
        spec: SpecArgs,
        /// Partition as a comma list; empty for the zero partition.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Permutation in one-line notation; gives the non-symmetric polynomial.
        #[arg(long)]
        w: Option<String>,
        /// triangular, symmetrized, intertwined, gram or rodrigues.
        #[arg(long)]
        method: Option<String>,
    },
    /// Norm of a symmetric family polynomial.
    Norm {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = NormChoice::Product)]
        form: NormChoice,
    },
    /// Pair two polynomials.
    Pair {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, value_enum, default_value_t = PairingChoice::Default)]
        pairing: PairingChoice,
    },
    /// Apply the raising operator `B_m` to a family polynomial.
    Raise {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        m: usize,
    },
    /// Apply a shift operator: `G` to `F_{λ+δ}` at `β`, or `Ĝ` to `F_λ` at `β+1`.
    Shift {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Direction::G)]
        direction: Direction,
    },
    /// Apply a named operator such as `cherednikA:j=2` to a polynomial.
    Apply {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        op: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_parser = parse_suite, conflicts_with = "all", required_unless_present = "all")]
        suite: Option<SuiteName>,
        #[arg(long)]
        all: bool,
        #[arg(long, value_delimiter = ',')]
        ns: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        betas: Option<Vec<u32>>,
        #[arg(long, value_delimiter = ',', value_parser = parse_gamma, allow_hyphen_values = true)]
        gammas: Option<Vec<Rational>>,
        #[arg(long)]
        max_weight: Option<u32>,
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Labels, norms and eigenvalues up to a weight.
    Table {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 4)]
        max_weight: u32,
    },
}

fn push(out: &mut Vec<String>, flag: &str, value: impl ToString) {
    out.push(flag.to_string());
    out.push(value.to_string());
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl RunConfig {
    pub fn parse_args<I, T>(args: I) -> std::result::Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        RunConfig::try_parse_from(args)
    }

    /// The argument vector, program name first, that parses back to `self`.
    pub fn render(&self) -> Vec<String> {
        let mut out = vec!["hecke-poly".to_string()];
        push(&mut out, "--format", self.format.name());
        if let Some(p) = &self.output {
            push(&mut out, "--output", p.display());
        }
        match &self.command {
            Command::Poly {
                spec,
                lambda,
                w,
                method,
            } => {
                out.push("poly".into());
                spec.render(&mut out);
                out.push(format!("--lambda={lambda}"));
                if let Some(w) = w {
                    push(&mut out, "--w", w);
                }
                if let Some(m) = method {
                    out.push(format!("--method={m}"));
                }
            }
            Command::Norm { spec, lambda, form } => {
                out.push("norm".into());
                spec.render(&mut out);
                out.push(format!("--lambda={lambda}"));
                push(
                    &mut out,
                    "--form",
                    form.to_possible_value().unwrap().get_name(),
                );
            }
            Command::Pair {
                spec,
                f,
                g,
                pairing,
            } => {
                out.push("pair".into());
                spec.render(&mut out);
                out.push(format!("--f={f}"));
                out.push(format!("--g={g}"));
                push(
                    &mut out,
                    "--pairing",
                    pairing.to_possible_value().unwrap().get_name(),
                );
            }
            Command::Raise { spec, lambda, m } => {
                out.push("raise".into());
                spec.render(&mut out);
                out.push(format!("--lambda={lambda}"));
                push(&mut out, "--m", m);
            }
            Command::Shift {
                spec,
                lambda,
                direction,
            } => {
                out.push("shift".into());
                spec.render(&mut out);
                out.push(format!("--lambda={lambda}"));
                push(
                    &mut out,
                    "--direction",
                    direction.to_possible_value().unwrap().get_name(),
                );
            }
            Command::Apply { spec, op, f } => {
                out.push("apply".into());
                spec.render(&mut out);
                out.push(format!("--op={op}"));
                out.push(format!("--f={f}"));
            }
            Command::Verify {
                suite,
                all,
                ns,
                betas,
                gammas,
                max_weight,
                degree,
                seed,
            } => {
                out.push("verify".into());
                if let Some(s) = suite {
                    push(&mut out, "--suite", s.name());
                }
                if *all {
                    out.push("--all".into());
                }
                if let Some(v) = ns {
                    push(&mut out, "--ns", join(v));
                }
                if let Some(v) = betas {
                    push(&mut out, "--betas", join(v));
                }
                if let Some(v) = gammas {
                    let g: Vec<String> = v.iter().map(format_rational).collect();
                    push(&mut out, "--gammas", g.join(","));
                }
                if let Some(v) = max_weight {
                    push(&mut out, "--max-weight", v);
                }
                if let Some(v) = degree {
                    push(&mut out, "--degree", v);
                }
                if let Some(v) = seed {
                    push(&mut out, "--seed", v);
                }
            }
            Command::Table { spec, max_weight } => {
                out.push("table".into());
                spec.render(&mut out);
                push(&mut out, "--max-weight", max_weight);
            }
        }
        out
    }
}

/// Result of a command: structured data plus a tabular view.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub pretty: String,
    /// Process exit code; non-zero when a verification failed.
    pub status: i32,
}

impl Output {
    fn new(json: Value, header: &[&str], rows: Vec<Vec<String>>, pretty: String) -> Self {
        Output {
            json,
            header: header.iter().map(|s| s.to_string()).collect(),
            rows,
            pretty,
            status: 0,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json output");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).expect("csv header");
                for r in &self.rows {
                    w.write_record(r).expect("csv row");
                }
                String::from_utf8(w.into_inner().expect("csv flush")).expect("utf-8")
            }
            Format::Pretty => {
                let mut s = self.pretty.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
        }
    }
}

fn partition(s: &str, n: usize) -> Result<Partition> {
    Ok(Partition::parse(s, n)?)
}

fn build(
    spec: &FamilySpec,
    lambda: &str,
    w: Option<&str>,
    method: Option<&str>,
) -> Result<FamilyPolynomial> {
    let lam = partition(lambda, spec.n())?;
    if let Some(w) = w {
        let w = Permutation::parse(w)?;
        let label = NonSymLabel::new(lam, w);
        return match spec.family() {
            Family::Jack => nonsym_jack(&label, spec),
            Family::Hermite => nonsym_hermite(&label, spec),
            Family::Laguerre => nonsym_laguerre(&label, spec),
        };
    }
    let Some(method) = method else {
        return family_polynomial(&lam, spec);
    };
    let method = Construction::parse(method)?;
    match spec.family() {
        Family::Jack => jack(&lam, spec, method),
        Family::Hermite => hermite(&lam, spec, method),
        Family::Laguerre => laguerre(&lam, spec, method),
    }
}

fn fmt_values(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(", ")
}

fn scaled_json(s: &ScaledRational) -> Value {
    let mut v = serde_json::to_value(s).expect("scaled rational");
    v["rendered"] = Value::String(s.render());
    v
}

fn stem(spec: &FamilySpec) -> &'static str {
    if spec.family() == Family::Laguerre {
        "u"
    } else {
        "x"
    }
}

pub fn execute(config: &RunConfig) -> Result<Output> {
    match &config.command {
        Command::Poly {
            spec,
            lambda,
            w,
            method,
        } => {
            let spec = spec.spec()?;
            let f = build(&spec, lambda, w.as_deref(), method.as_deref())?;
            let verified = f.verify_eigen()?;
            let text = f.poly.to_string_with(f.stem());
            let mut json = f.to_json();
            json["verified"] = Value::Bool(verified);
            json["rendered"] = Value::String(text.clone());
            let row = vec![
                f.label.to_string(),
                f.construction.to_string(),
                text.clone(),
                fmt_values(&f.eigenvalues),
                verified.to_string(),
            ];
            let pretty = format!(
                "{text}\neigenvalues: {}\nconstruction: {}\nverified: {verified}",
                fmt_values(&f.eigenvalues),
                f.construction
            );
            Ok(Output::new(
                json,
                &[
                    "label",
                    "construction",
                    "polynomial",
                    "eigenvalues",
                    "verified",
                ],
                vec![row],
                pretty,
            ))
        }
        Command::Norm { spec, lambda, form } => {
            let spec = spec.spec()?;
            let lam = partition(lambda, spec.n())?;
            let value = match form {
                NormChoice::Product => norm_formula(&lam, &spec, NormForm::Product)?,
                NormChoice::Hook => norm_formula(&lam, &spec, NormForm::Hook)?,
                NormChoice::Pairing => {
                    let f = family_polynomial(&lam, &spec)?.poly;
                    self_pairing(&spec, &f, &f)?
                }
            };
            let json =
                json!({ "lambda": lam.to_string(), "spec": spec, "norm": scaled_json(&value) });
            let row = vec![lam.to_string(), value.render()];
            Ok(Output::new(
                json,
                &["lambda", "norm"],
                vec![row],
                value.render(),
            ))
        }
        Command::Pair {
            spec,
            f,
            g,
            pairing,
        } => {
            let spec = spec.spec()?;
            let f = parse_polynomial(f, spec.n())?;
            let g = parse_polynomial(g, spec.n())?;
            let value = match pairing {
                PairingChoice::Default => self_pairing(&spec, &f, &g)?,
                PairingChoice::Dunkl => {
                    ScaledRational::rational(dunkl_pairing(&f, &g, &spec, DunklVariant::Dunkl)?)
                }
                PairingChoice::Cherednik => {
                    ScaledRational::rational(dunkl_pairing(&f, &g, &spec, DunklVariant::Cherednik)?)
                }
                PairingChoice::Induced => induced_pairing(&f, &g, &spec)?,
            };
            let json = json!({ "spec": spec, "value": scaled_json(&value) });
            Ok(Output::new(
                json,
                &["value"],
                vec![vec![value.render()]],
                value.render(),
            ))
        }
        Command::Raise { spec, lambda, m } => {
            let spec = spec.spec()?;
            let f = family_polynomial(&partition(lambda, spec.n())?, &spec)?;
            let out = raising_apply(*m, &f)?;
            let target = out.polynomial.poly.to_string_with(stem(&spec));
            let (c, e) = (
                format_rational(&out.constant),
                format_rational(&out.expected),
            );
            let json = json!({
                "source": f.label.to_string(),
                "target": out.polynomial.label.to_string(),
                "constant": c,
                "expected": e,
                "holds": out.holds(),
                "polynomial": out.polynomial.poly,
            });
            let row = vec![
                f.label.to_string(),
                out.polynomial.label.to_string(),
                c.clone(),
                e.clone(),
                out.holds().to_string(),
            ];
            let pretty = format!(
                "B_{m} F{} = {c} F{}\nexpected: {e}\ntarget: {target}",
                f.label, out.polynomial.label
            );
            let mut o = Output::new(
                json,
                &["source", "target", "constant", "expected", "holds"],
                vec![row],
                pretty,
            );
            o.status = if out.holds() { 0 } else { 1 };
            Ok(o)
        }
        Command::Shift {
            spec,
            lambda,
            direction,
        } => {
            let lower = spec.spec()?;
            let lam = partition(lambda, lower.n())?;
            let assignment = calibration(lower.family())?.assignment;
            let (dir, f) = match direction {
                Direction::G => (
                    ShiftDirection::G,
                    family_polynomial(&lam.plus_delta(), &lower)?,
                ),
                Direction::Ghat => (
                    ShiftDirection::GHat,
                    family_polynomial(&lam, &lower.with_beta(lower.beta() + 1))?,
                ),
            };
            let out = shift_apply(dir, &f, assignment)?;
            let (c, e) = (
                format_rational(&out.constant),
                format_rational(&out.expected),
            );
            let holds = out.holds_up_to_sign();
            let name = direction
                .to_possible_value()
                .unwrap()
                .get_name()
                .to_string();
            let json = json!({
                "direction": name,
                "assignment": assignment.to_string(),
                "source": f.label.to_string(),
                "target": out.polynomial.label.to_string(),
                "constant": c,
                "expected_abs": e,
                "holds_up_to_sign": holds,
            });
            let row = vec![
                name.clone(),
                assignment.to_string(),
                f.label.to_string(),
                out.polynomial.label.to_string(),
                c.clone(),
                e.clone(),
                holds.to_string(),
            ];
            let pretty = format!(
                "{name} F{} = {c} F{}\nexpected: ±{e}\nassignment: {assignment}",
                f.label, out.polynomial.label
            );
            let mut o = Output::new(
                json,
                &[
                    "direction",
                    "assignment",
                    "source",
                    "target",
                    "constant",
                    "expected_abs",
                    "holds_up_to_sign",
                ],
                vec![row],
                pretty,
            );
            o.status = if holds { 0 } else { 1 };
            Ok(o)
        }
        Command::Apply { spec, op, f } => {
            let spec = spec.spec()?;
            let stem = if spec.family() == Family::Laguerre {
                "z"
            } else {
                "x"
            };
            let f = parse_polynomial(f, spec.n())?;
            let image = operator_by_name(op, &spec)?.apply(&f)?;
            let text = image.to_string_with(stem);
            let json = json!({ "op": op, "result": image, "rendered": text });
            Ok(Output::new(
                json,
                &["op", "result"],
                vec![vec![op.clone(), text.clone()]],
                text,
            ))
        }
        Command::Verify {
            suite,
            all,
            ns,
            betas,
            gammas,
            max_weight,
            degree,
            seed,
        } => {
            let mut grid = GridSpec::default();
            if let Some(v) = ns {
                grid.ns = v.clone();
            }
            if let Some(v) = betas {
                grid.betas = v.clone();
            }
            if let Some(v) = gammas {
                grid.gammas = v.clone();
            }
            if let Some(v) = max_weight {
                grid.max_weight = *v;
            }
            if let Some(v) = degree {
                grid.degree = *v;
            }
            if let Some(v) = seed {
                grid.seed = *v;
            }
            let reports = match suite {
                Some(s) if !all => vec![run_suite(*s, &grid)?],
                _ => run_all(&grid)?,
            };
            Ok(verify_output(&reports, *all))
        }
        Command::Table { spec, max_weight } => {
            let spec = spec.spec()?;
            let mut rows = Vec::new();
            let mut items = Vec::new();
            for lam in Partition::all_up_to(*max_weight, spec.n()) {
                let f = family_polynomial(&lam, &spec)?;
                let norm = norm_formula(&lam, &spec, NormForm::Product)?;
                let text = f.poly.to_string_with(f.stem());
                rows.push(vec![
                    lam.to_string(),
                    norm.render(),
                    fmt_values(&f.eigenvalues),
                    text.clone(),
                ]);
                items.push(json!({
                    "lambda": lam.to_string(),
                    "norm": scaled_json(&norm),
                    "eigenvalues": f.eigenvalues.iter().map(format_rational).collect::<Vec<_>>(),
                    "polynomial": text,
                }));
            }
            let pretty = rows
                .iter()
                .map(|r| format!("({})  norm {}  eigenvalues [{}]", r[0], r[1], r[2]))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output::new(
                json!({ "spec": spec, "rows": items }),
                &["lambda", "norm", "eigenvalues", "polynomial"],
                rows,
                pretty,
            ))
        }
    }
}

fn self_pairing(
    spec: &FamilySpec,
    f: &hecke_poly::arith::Polynomial,
    g: &hecke_poly::arith::Polynomial,
) -> Result<ScaledRational> {
    match spec.family() {
        Family::Jack => Ok(ScaledRational::rational(ct_pairing(f, g, spec)?)),
        Family::Hermite => gauss_pairing(f, g, spec),
        Family::Laguerre => laguerre_pairing(f, g, spec),
    }
}

fn verify_output(reports: &[SuiteReport], all: bool) -> Output {
    let values: Vec<Value> = reports
        .iter()
        .map(|r| serde_json::to_value(r).expect("report serializes"))
        .collect();
    let json = if all || values.len() != 1 {
        Value::Array(values)
    } else {
        values.into_iter().next().expect("one report")
    };
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.suite.clone(),
                r.cases_run.to_string(),
                r.cases_passed.to_string(),
                r.failures.len().to_string(),
                if r.passed() { "pass" } else { "fail" }.to_string(),
            ]
        })
        .collect();
    let mut pretty = String::new();
    for r in reports {
        pretty.push_str(&format!(
            "{:<22} {:>6}/{:<6} {}\n",
            r.suite,
            r.cases_passed,
            r.cases_run,
            if r.passed() { "PASS" } else { "FAIL" }
        ));
        for f in r.failures.iter().take(3) {
            let params: Vec<String> = f.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            pretty.push_str(&format!(
                "    {}: {} != {}\n",
                params.join(" "),
                f.lhs,
                f.rhs
            ));
        }
    }
    let mut o = Output::new(
        json,
        &["suite", "cases_run", "cases_passed", "failures", "status"],
        rows,
        pretty,
    );
    o.status = if reports.iter().all(SuiteReport::passed) {
        0
    } else {
        1
    };
    o
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> RunConfig {
        RunConfig::parse_args(std::iter::once("hecke-poly").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn render_round_trips() {
        let cases: &[&[&str]] = &[
            &["poly", "--family", "hermite", "--lambda", "2", "--n", "1"],
            &[
                "--format",
                "json",
                "poly",
                "--family",
                "jack",
                "--lambda",
                "1,0",
                "--n",
                "2",
                "--w",
                "21",
                "--method",
                "triangular",
            ],
            &[
                "norm", "--family", "hermite", "--lambda", "", "--n", "2", "--beta", "1",
            ],
            &[
                "pair", "--family", "laguerre", "--n", "1", "--gamma", "1/2", "--f", "-u + 1",
                "--g", "u",
            ],
            &[
                "raise", "--family", "jack", "--n", "2", "--lambda", "1", "--m", "2",
            ],
            &[
                "shift",
                "--family",
                "jack",
                "--n",
                "2",
                "--lambda",
                "",
                "--direction",
                "ghat",
            ],
            &[
                "apply",
                "--family",
                "jack",
                "--n",
                "2",
                "--op",
                "cherednikA:j=2",
                "--f",
                "x1",
            ],
            &[
                "-o", "out.csv", "verify", "--all", "--ns", "2,3", "--gammas", "0,1/3", "--seed",
                "9",
            ],
            &[
                "verify",
                "--suite",
                "norms_all",
                "--betas",
                "1",
                "--max-weight",
                "3",
                "--degree",
                "2",
            ],
            &[
                "--format", "csv", "table", "--family", "laguerre", "--n", "2", "--gamma", "-1/3",
            ],
        ];
        for args in cases {
            let c = cfg(args);
            let again = RunConfig::parse_args(c.render()).unwrap();
            assert_eq!(again, c, "{args:?}");
        }
    }

    #[test]
    fn suite_and_all_are_exclusive() {
        assert!(
            RunConfig::parse_args(["hecke-poly", "verify", "--suite", "res_B", "--all"]).is_err()
        );
        assert!(RunConfig::parse_args(["hecke-poly", "verify"]).is_err());
        assert!(RunConfig::parse_args(["hecke-poly", "verify", "--suite", "nope"]).is_err());
    }

    #[test]
    fn malformed_partition_reports_position() {
        let c = cfg(&["poly", "--family", "jack", "--n", "2", "--lambda", "2,x"]);
        let e = execute(&c).unwrap_err().to_string();
        assert!(e.contains('2'), "{e}");
    }

    mod props {
        use super::*;
        use hecke_poly::arith::rat;
        use proptest::prelude::*;

        fn spec_args() -> impl Strategy<Value = SpecArgs> {
            (
                prop::sample::select(Family::ALL.to_vec()),
                1usize..5,
                0u32..4,
                prop::option::of((-1i64..7, 1i64..7)),
            )
                .prop_map(|(family, n, beta, g)| SpecArgs {
                    family,
                    n,
                    beta,
                    gamma: g.map(|(a, b)| rat(a, b)),
                })
        }

        fn label() -> impl Strategy<Value = String> {
            prop::collection::vec(0u32..5, 0..4)
                .prop_map(|v| v.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
        }

        fn command() -> impl Strategy<Value = Command> {
            prop_oneof![
                (
                    spec_args(),
                    label(),
                    prop::option::of(Just("21".to_string())),
                    prop::option::of(Just("gram".to_string()))
                )
                    .prop_map(|(spec, lambda, w, method)| Command::Poly {
                        spec,
                        lambda,
                        w,
                        method
                    }),
                (
                    spec_args(),
                    label(),
                    prop::sample::select(vec![
                        NormChoice::Product,
                        NormChoice::Hook,
                        NormChoice::Pairing
                    ])
                )
                    .prop_map(|(spec, lambda, form)| Command::Norm {
                        spec,
                        lambda,
                        form
                    }),
                (spec_args(), label(), 1usize..4).prop_map(|(spec, lambda, m)| Command::Raise {
                    spec,
                    lambda,
                    m
                }),
                (
                    spec_args(),
                    prop::sample::select(vec!["x1 - 1", "-x2^2", "(x1 + x2)^3"])
                )
                    .prop_map(|(spec, f)| Command::Pair {
                        spec,
                        f: f.into(),
                        g: "x1".into(),
                        pairing: PairingChoice::Induced
                    }),
                (
                    prop::option::of(prop::sample::select(SuiteName::ALL.to_vec())),
                    prop::option::of(prop::collection::vec(1usize..5, 1..3)),
                    prop::option::of(prop::collection::vec((-1i64..4, 1i64..4), 1..3)),
                    prop::option::of(any::<u64>()),
                )
                    .prop_map(|(suite, ns, gammas, seed)| Command::Verify {
                        all: suite.is_none(),
                        suite,
                        ns,
                        betas: None,
                        gammas: gammas.map(|v| v.into_iter().map(|(a, b)| rat(a, b)).collect()),
                        max_weight: Some(3),
                        degree: None,
                        seed,
                    }),
            ]
        }

        proptest! {
            #[test]
            fn parse_inverts_render(
                command in command(),
                format in prop::sample::select(vec![Format::Json, Format::Csv, Format::Pretty]),
                output in prop::option::of(Just(PathBuf::from("out/report.json"))),
            ) {
                let config = RunConfig { format, output, command };
                prop_assert_eq!(RunConfig::parse_args(config.render()).unwrap(), config);
            }
        }
    }
}
