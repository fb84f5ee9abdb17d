//! Command-line front end: argument parsing into a validated [`RunConfig`]
//! and execution with exit codes 0 (success), 1 (a property failed) and
//! 2 (invalid input).

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod format;
mod output;
pub mod params;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::Parser;
use gek_core::entropy::{Distribution, EntropySpec, Regime};
use gek_core::formal_series::{
    abel_series, fraction_string, group_law_from_g, identity_series, kaniadakis_series, parse_rational, tsallis_series,
    TruncatedSeries,
};
use gek_core::group_log::{GroupFunction, GroupLogarithm};
use gek_core::properties::{
    check_composability, check_composability_uniform, check_extensivity, check_group_axioms_numeric,
    check_schur_concavity, check_sk_axioms, extensivity_round_trip, solve_growth_law, tsallis_qstar, GrowthLaw,
    PropertyReport,
};
use gek_core::quantum::{extensive_alpha, lmg_sweep, parse_density_matrix, DensityMatrix, DickeSpec, LmgParams};
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use args::{Basis, Cli, Format, Suite, TopCommand};
use format::json_num;
use output::{emit_scalar, params_json, write_json, Cell, Table};
use params::{check_keys, parse_params, parse_rational_params, parse_sweep, FamilySelection};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    /// Usage errors, `--help` and `--version` from the argument parser.
    Usage(clap::Error),
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(e) => e.exit_code(),
            CliError::Input(_) => EXIT_INPUT,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(e) => write!(f, "{e}"),
            CliError::Input(msg) => write!(f, "error: {msg}"),
        }
    }
}

impl From<String> for CliError {
    fn from(msg: String) -> Self {
        CliError::Input(msg)
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

/// A fully validated invocation.
#[derive(Debug)]
pub struct RunConfig {
    pub format: Format,
    pub command: Command,
}

#[derive(Debug)]
pub enum Command {
    EntropyEval { spec: EntropySpec, dist: Distribution },
    EntropySweep { family: FamilySelection, key: String, values: Vec<f64>, dist: Distribution },
    Verify { spec: EntropySpec, suite: Suite, trials: usize, seed: u64, tol: f64, lambda: f64 },
    SeriesInvert { coeffs: Vec<BigRational>, order: usize, basis: Basis },
    GroupLawExpand { family: String, g: TruncatedSeries, order: u32, dense: bool },
    LogEval { lg: GroupLogarithm, x: f64 },
    ExpEval { lg: GroupLogarithm, y: f64 },
    ChiEval { g: GroupFunction, x: f64, y: f64 },
    GrowthSolve { spec: EntropySpec, lambda: f64, sizes: Vec<f64> },
    QStar { a: f64, rho: f64, sizes: Vec<f64> },
    QEntropyEval { spec: EntropySpec, rho: DensityMatrix },
    LmgDemo { m: usize, n: usize, occupations: Vec<usize>, a: f64, alpha: f64, blocks: Vec<usize> },
}

/// Parses and validates `argv` (including the program name).
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(CliError::Usage)?;
    let command = match cli.command {
        TopCommand::Entropy(args::EntropyCommand::Eval { family, dist }) => {
            let spec = selection(&family)?.build()?;
            Command::EntropyEval { spec, dist: load_distribution(&dist)? }
        }
        TopCommand::Entropy(args::EntropyCommand::Sweep { family, param, dist }) => {
            let (key, values) = parse_sweep(&param)?;
            let mut params = parse_params(&family.params)?;
            params.insert(key.clone(), values[0]);
            let family = FamilySelection::new(&family.family, family.g.as_deref(), params)?;
            Command::EntropySweep { family, key, values, dist: load_distribution(&dist)? }
        }
        TopCommand::Verify(v) => {
            if v.trials == 0 {
                return Err(input("--trials must be positive"));
            }
            if !(v.tol > 0.0) {
                return Err(input("--tol must be positive"));
            }
            if !(v.lambda > 0.0 && v.lambda.is_finite()) {
                return Err(input("--lambda must be positive"));
            }
            let spec = selection(&v.family)?.build()?;
            Command::Verify { spec, suite: v.suite, trials: v.trials, seed: v.seed, tol: v.tol, lambda: v.lambda }
        }
        TopCommand::Series(args::SeriesCommand::Invert { coeffs, order, basis }) => {
            if order < 1 {
                return Err(input("--order must be at least 1"));
            }
            let coeffs = coeffs
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| parse_rational(s).map_err(|e| format!("--coeffs: {e}")))
                .collect::<Result<_, _>>()?;
            Command::SeriesInvert { coeffs, order, basis }
        }
        TopCommand::Grouplaw(args::GroupLawCommand::Expand { family, params, order, dense }) => {
            if order < 1 {
                return Err(input("--order must be at least 1"));
            }
            let p = parse_rational_params(&params)?;
            let size = order as usize;
            let g = match family.as_str() {
                "id" | "identity" => {
                    check_keys(&p, &[], &[], &family)?;
                    identity_series(size)
                }
                "tsallis" => {
                    check_keys(&p, &["q"], &[], &family)?;
                    tsallis_series(&p["q"], size)
                }
                "kaniadakis" => {
                    check_keys(&p, &["k"], &[], &family)?;
                    kaniadakis_series(&p["k"], size)
                }
                "abel" => {
                    check_keys(&p, &["a", "b"], &[], &family)?;
                    if p["a"] == p["b"] {
                        return Err(input("abel needs a != b"));
                    }
                    abel_series(&p["a"], &p["b"], size)
                }
                other => {
                    return Err(input(format!(
                        "unknown group law family {other:?} (expected id, tsallis, kaniadakis, abel)"
                    )))
                }
            };
            Command::GroupLawExpand { family, g, order, dense }
        }
        TopCommand::Log(args::LogCommand::Eval { group, x }) => {
            Command::LogEval { lg: params::group_logarithm(&group.family, &parse_params(&group.params)?)?, x }
        }
        TopCommand::Exp(args::ExpCommand::Eval { group, y }) => {
            Command::ExpEval { lg: params::group_logarithm(&group.family, &parse_params(&group.params)?)?, y }
        }
        TopCommand::Chi(args::ChiCommand::Eval { group, x, y }) => {
            let p = parse_params(&group.params)?;
            let kind = params::GroupKind::parse(&group.family)?;
            check_keys(&p, kind.keys(), &[], &group.family)?;
            Command::ChiEval { g: kind.build(&p)?, x, y }
        }
        TopCommand::Extensivity(args::ExtensivityCommand::Solve { family, lambda, rho, sizes }) => {
            let sizes = parse_sizes(&sizes)?;
            match rho {
                Some(rho) => {
                    if family.family != "tsallis_aq" {
                        return Err(input("--rho applies to tsallis_aq only"));
                    }
                    let p = parse_params(&family.params)?;
                    check_keys(&p, &["a"], &[], "tsallis_aq with --rho")?;
                    tsallis_qstar(p["a"], rho).map_err(input)?;
                    Command::QStar { a: p["a"], rho, sizes }
                }
                None => {
                    let spec = selection(&family)?.build()?;
                    solve_growth_law(&spec, lambda).map_err(input)?;
                    Command::GrowthSolve { spec, lambda, sizes }
                }
            }
        }
        TopCommand::Qentropy(args::QentropyCommand::Eval { rho, family, params, g }) => {
            let spec = FamilySelection::new(&family, g.as_deref(), parse_params(&params)?)?.build()?;
            let text = read_file(&rho)?;
            let rho = parse_density_matrix(&text).map_err(|e| format!("{}: {e}", rho.display()))?;
            Command::QEntropyEval { spec, rho }
        }
        TopCommand::Lmg(args::LmgCommand::Demo { m, n, occupations, a, alpha, extensive, sweep_l }) => {
            let occupations: Vec<usize> = occupations
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| format!("--occupations: expected comma-separated counts, got {occupations:?}"))?;
            let alpha = match (alpha, extensive) {
                (Some(alpha), false) => alpha,
                _ => extensive_alpha(a, m).map_err(input)?,
            };
            let blocks: Vec<usize> = if sweep_l { (1..n).collect() } else { vec![n / 2] };
            for &block in &blocks {
                let spec = DickeSpec::new(m, n, occupations.clone(), block).map_err(input)?;
                LmgParams::new(a, m, alpha, block as f64 / n as f64, spec.densities()).map_err(input)?;
            }
            if !(a > 0.0) {
                return Err(input(format!("the exact Z_(a,0) entropy needs a > 0, got {a}")));
            }
            Command::LmgDemo { m, n, occupations, a, alpha, blocks }
        }
    };
    Ok(RunConfig { format: cli.format, command })
}

fn selection(f: &args::FamilyArgs) -> Result<FamilySelection, CliError> {
    Ok(FamilySelection::new(&f.family, f.g.as_deref(), parse_params(&f.params)?)?)
}

fn parse_sizes(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|s| s.trim().parse::<f64>().ok().filter(|n| *n >= 1.0 && n.is_finite()))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| input(format!("--N: expected comma-separated sizes >= 1, got {text:?}")))
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| input(format!("cannot read {}: {e}", path.display())))
}

/// `uW`, `dW`, inline comma-separated probabilities, or a file with one per line.
pub fn load_distribution(text: &str) -> Result<Distribution, CliError> {
    let shorthand = |prefix: char| text.strip_prefix(prefix).and_then(|w| w.parse::<usize>().ok()).filter(|&w| w >= 1);
    if let Some(w) = shorthand('u') {
        return Distribution::uniform(w).map_err(input);
    }
    if let Some(w) = shorthand('d') {
        return Distribution::delta(w).map_err(input);
    }
    let (values, source) = if Path::new(text).is_file() {
        (read_file(Path::new(text))?, text.to_string())
    } else if text.split(',').all(|s| s.trim().parse::<f64>().is_ok()) {
        (text.replace(',', "\n"), "--dist".to_string())
    } else {
        return Err(input(format!("--dist: {text:?} is neither uW, dW, a probability list nor a readable file")));
    };
    let p = values
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.parse::<f64>().map_err(|_| format!("{source}: {l:?} is not a number")))
        .collect::<Result<Vec<_>, _>>()?;
    Distribution::new(p).map_err(|e| input(format!("{source}: {e}")))
}

/// Executes a validated configuration, writing results to `out` and notes to `err`.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(config, out, err) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

/// Parses `argv`, runs, and returns the exit code.
pub fn main_with_args<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_args(argv) {
        Ok(config) => run(&config, out, err),
        Err(CliError::Usage(e)) => {
            let code = e.exit_code();
            if code == EXIT_OK {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}

fn spec_meta(spec: &EntropySpec) -> Map<String, Value> {
    let mut meta = Map::new();
    meta.insert("family".into(), json!(spec.name()));
    if let EntropySpec::ZGAlpha { g, .. } | EntropySpec::AltNewZ { g, .. } = spec {
        meta.insert("g".into(), json!(g.name()));
    }
    meta.insert("params".into(), params_json(&spec.params()));
    meta
}

fn regime_note(spec: &EntropySpec, err: &mut dyn Write) {
    if spec.regime() == Regime::NonConcave {
        let _ = writeln!(err, "note: alpha > 1 lies outside the concave regime");
    }
}

fn execute(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let format = config.format;
    let io = |e: std::io::Error| e.to_string();
    match &config.command {
        Command::EntropyEval { spec, dist } => {
            let value = spec.evaluate(dist).map_err(|e| e.to_string())?;
            regime_note(spec, err);
            let mut meta = spec_meta(spec);
            meta.insert("regime".into(), serde_json::to_value(value.regime).map_err(|e| e.to_string())?);
            emit_scalar(value.value, format, meta, out).map_err(io)?;
        }
        Command::EntropySweep { family, key, values, dist } => {
            let mut table = Table::new(&[key.as_str(), "entropy"]);
            for &v in values {
                let cell = match family
                    .with(key, v)
                    .and_then(|f| f.build())
                    .and_then(|s| s.value(dist).map_err(|e| e.to_string()))
                {
                    Ok(s) => Cell::Num(s),
                    Err(e) => {
                        let _ = writeln!(err, "note: {key}={}: {e}", format::num(v));
                        Cell::Text(String::new())
                    }
                };
                table.rows.push(vec![Cell::Num(v), cell]);
            }
            let mut meta = Map::new();
            meta.insert("family".into(), json!(family.family));
            table.emit(format, meta, out).map_err(io)?;
        }
        Command::Verify { spec, suite, trials, seed, tol, lambda } => {
            let reports = verify(spec, *suite, *trials, *seed, *tol, *lambda).map_err(|e| e.to_string())?;
            let passed = reports.iter().all(PropertyReport::ok);
            let mut meta = spec_meta(spec);
            meta.insert("suite".into(), json!(format!("{suite:?}").to_lowercase()));
            meta.insert("trials".into(), json!(trials));
            meta.insert("seed".into(), json!(seed));
            meta.insert("tol".into(), json_num(*tol));
            meta.insert("passed".into(), json!(passed));
            meta.insert("reports".into(), Value::Array(reports.iter().map(report_json).collect()));
            write_json(&Value::Object(output::document(meta)), out).map_err(io)?;
            return Ok(if passed { EXIT_OK } else { EXIT_PROPERTY_FAILED });
        }
        Command::SeriesInvert { coeffs, order, basis } => {
            let mut table;
            match basis {
                Basis::Normalized => {
                    let mut b = vec![BigRational::from_integer(1.into())];
                    b.extend(coeffs.iter().cloned());
                    let f = TruncatedSeries::from_b_sequence(&b, *order).map_err(|e| e.to_string())?;
                    let g = f.reversion().map_err(|e| e.to_string())?;
                    table = Table::new(&["k", "value"]);
                    for (k, a) in g.normalized_coefficients().iter().enumerate() {
                        table.rows.push(vec![Cell::Int(k as i64), Cell::Text(fraction_string(a))]);
                    }
                }
                Basis::Plain => {
                    let mut c = vec![BigRational::from_integer(0.into()), BigRational::from_integer(1.into())];
                    c.extend(coeffs.iter().cloned());
                    c.resize(order + 1, BigRational::from_integer(0.into()));
                    let f = TruncatedSeries::new(c).truncate(*order);
                    let g = f.reversion().map_err(|e| e.to_string())?;
                    table = Table::new(&["degree", "value"]);
                    for (d, c) in g.coeffs().iter().enumerate() {
                        table.rows.push(vec![Cell::Int(d as i64), Cell::Text(fraction_string(c))]);
                    }
                }
            }
            table.emit(format, Map::new(), out).map_err(io)?;
        }
        Command::GroupLawExpand { family, g, order, dense } => {
            let psi = group_law_from_g(g, *order).map_err(|e| e.to_string())?;
            let terms = if *dense { psi.dense_terms() } else { psi.terms() };
            let mut table = Table::new(&["i", "j", "value"]);
            for ((i, j), c) in terms {
                table.rows.push(vec![Cell::Int(i as i64), Cell::Int(j as i64), Cell::Text(fraction_string(&c))]);
            }
            let mut meta = Map::new();
            meta.insert("family".into(), json!(family));
            meta.insert("order".into(), json!(order));
            table.emit(format, meta, out).map_err(io)?;
        }
        Command::LogEval { lg, x } => {
            emit_scalar(lg.ln(*x).map_err(|e| e.to_string())?, format, group_meta(lg.g()), out).map_err(io)?
        }
        Command::ExpEval { lg, y } => {
            emit_scalar(lg.exp(*y).map_err(|e| e.to_string())?, format, group_meta(lg.g()), out).map_err(io)?
        }
        Command::ChiEval { g, x, y } => {
            emit_scalar(g.chi(*x, *y).map_err(|e| e.to_string())?, format, group_meta(g), out).map_err(io)?
        }
        Command::GrowthSolve { spec, lambda, sizes } => {
            let solution = solve_growth_law(spec, *lambda).map_err(|e| e.to_string())?;
            if let Some(max_n) = solution.max_valid_n {
                let _ = writeln!(err, "note: restricted domain, W(N) is defined only for N < {}", format::num(max_n));
            }
            let mut table = Table::new(&["N", "ln_W", "W", "S_over_N"]);
            for &n in sizes {
                if solution.max_valid_n.is_some_and(|max_n| n >= max_n) {
                    let _ = writeln!(err, "note: N={} skipped (outside the restricted domain)", format::num(n));
                    continue;
                }
                let ln_w = solution.law.ln_w(n).map_err(|e| e.to_string())?;
                let s = extensivity_round_trip(spec, &solution.law, n).map_err(|e| e.to_string())?;
                table.rows.push(vec![Cell::Num(n), Cell::Num(ln_w), Cell::Num(ln_w.exp()), Cell::Num(s)]);
            }
            let mut meta = spec_meta(spec);
            meta.insert("lambda".into(), json_num(*lambda));
            meta.insert("law".into(), json!(law_name(&solution.law)));
            meta.insert("valid".into(), json!(solution.valid));
            table.emit(format, meta, out).map_err(io)?;
        }
        Command::QStar { a, rho, sizes } => {
            let q = tsallis_qstar(*a, *rho).map_err(|e| e.to_string())?;
            let spec = EntropySpec::tsallis_aq(*a, q).map_err(|e| e.to_string())?;
            let law = GrowthLaw::PowerLaw { rho: *rho };
            let mut table = Table::new(&["N", "q_star", "S_over_N"]);
            for &n in sizes {
                let s = spec.uniform_value(law.ln_w(n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())? / n;
                table.rows.push(vec![Cell::Num(n), Cell::Num(q), Cell::Num(s)]);
            }
            let mut meta = Map::new();
            meta.insert("a".into(), json_num(*a));
            meta.insert("rho".into(), json_num(*rho));
            table.emit(format, meta, out).map_err(io)?;
        }
        Command::QEntropyEval { spec, rho } => {
            let value = spec.value(&rho.spectrum()).map_err(|e| e.to_string())?;
            regime_note(spec, err);
            let mut meta = spec_meta(spec);
            meta.insert("eigenvalues".into(), Value::Array(rho.eigenvalues().iter().map(|&x| json_num(x)).collect()));
            emit_scalar(value, format, meta, out).map_err(io)?;
        }
        Command::LmgDemo { m, n, occupations, a, alpha, blocks } => {
            let rows = lmg_sweep(*m, *n, occupations, *a, *alpha, blocks.iter().copied()).map_err(|e| e.to_string())?;
            let mut table = Table::new(&["L", "exact_entropy", "asymptotic_value", "ratio"]);
            for r in rows {
                table.rows.push(vec![
                    Cell::Int(r.block as i64),
                    Cell::Num(r.exact_entropy),
                    Cell::Num(r.asymptotic_value),
                    Cell::Num(r.ratio),
                ]);
            }
            let mut meta = Map::new();
            meta.insert("m".into(), json!(m));
            meta.insert("N".into(), json!(n));
            meta.insert("occupations".into(), json!(occupations));
            meta.insert("a".into(), json_num(*a));
            meta.insert("alpha".into(), json_num(*alpha));
            table.emit(format, meta, out).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn verify(
    spec: &EntropySpec,
    suite: Suite,
    trials: usize,
    seed: u64,
    tol: f64,
    lambda: f64,
) -> gek_core::Result<Vec<PropertyReport>> {
    let mut reports = Vec::new();
    let wants = |s: Suite| suite == Suite::All || suite == s;
    if wants(Suite::Composability) {
        reports.push(check_composability(spec, trials, tol, seed));
        reports.push(check_composability_uniform(spec, 8, tol));
        if let (true, Some(g), Some(alpha)) = (spec.is_z_family(), spec.group_function(), spec.alpha()) {
            reports.extend(check_group_axioms_numeric(&g, alpha, trials, tol, seed));
        }
    }
    if wants(Suite::Sk) {
        reports.extend(check_sk_axioms(spec, trials, seed));
    }
    if wants(Suite::Schur) {
        reports.extend(check_schur_concavity(spec, trials, seed));
    }
    if wants(Suite::Extensivity) {
        reports.extend(check_extensivity(spec, lambda)?);
    }
    Ok(reports)
}

fn report_json(r: &PropertyReport) -> Value {
    json!({
        "property": r.property,
        "subject": r.subject,
        "trials": r.trials,
        "failures": r.failures,
        "skipped": r.skipped,
        "worst_residual": json_num(r.worst_residual),
        "tolerance": json_num(r.tolerance),
        "seed": r.seed,
        "witness": r.witness,
        "passed": r.passed,
        "asserted": r.asserted,
    })
}

fn group_meta(g: &GroupFunction) -> Map<String, Value> {
    let mut meta = Map::new();
    meta.insert("g".into(), json!(g.name()));
    meta
}

fn law_name(law: &GrowthLaw) -> &'static str {
    match law {
        GrowthLaw::PowerLaw { .. } => "power_law",
        GrowthLaw::Exponential { .. } => "exponential",
        GrowthLaw::GroupSolved { .. } => "group_solved",
    }
}
