//! Command-line front end. Every report is a pure function of the
//! arguments and input files; output bytes are stable across runs.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::chains::{
    boundary_squared_is_zero, homology_betti, validate_group_complex, ChainError, GroupComplexFull, WeightedComplex,
};
use crate::chern_index::{index_dimension, index_integrality_scan, kawasaki_index, IsotropyWeights};
use crate::curvecalc::{
    adjunction_report, intersection_report, match_stations, verdict_from, with_precision_retry, CurveConfig, CurveError,
};
use crate::exact::{is_integer, Rational};
use crate::germ::MAX_TRUNCATION;
use crate::lens::{allowed_q_set, cobordism_congruence, lens_equivalent, lens_equivalent_with, LensSpace};
use crate::sweep::{random_complex_checks, sweep, Executor};
use crate::wps::{kawasaki_from_config, report, WpsError};

pub const MIN_PRECISION: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(
    name = "orbicurve",
    version,
    about = "Exact invariants of pseudoholomorphic curves in 4-orbifolds"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Starting series truncation, doubled on precision failures up to 256.
    #[arg(long, global = true)]
    pub precision: Option<usize>,
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Both sides of the adjunction formula for a curve configuration.
    Adjunction { file: PathBuf },
    /// Both sides of the intersection formula for two curve configurations.
    Intersect { first: PathBuf, second: PathBuf },
    #[command(subcommand)]
    Index(IndexCommand),
    #[command(subcommand)]
    Lens(LensCommand),
    #[command(subcommand)]
    Chains(ChainsCommand),
    #[command(subcommand)]
    Wps(WpsCommand),
    /// Checks every cone-model identity for all coprime (p, q) with p <= p-max.
    Sweep {
        #[arg(long, default_value_t = 30)]
        p_max: i64,
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum IndexCommand {
    /// Evaluates d = c1 + 2 - 2g - Σ (m_i1 + m_i2)/m_i.
    Eval(IndexEvalArgs),
    /// Index integrality for both local forms at x', for every q'.
    Scan { p: i64, q: i64 },
}

#[derive(Debug, Args)]
pub struct IndexEvalArgs {
    /// Curve configuration to read the data from.
    #[arg(long, conflicts_with_all = ["c1", "genus", "station"])]
    pub config: Option<PathBuf>,
    /// c1(TX) paired with the image cycle, as a rational "a/b".
    #[arg(long)]
    pub c1: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub genus: i64,
    /// Orbifold point "m:w1,w2"; repeatable.
    #[arg(long)]
    pub station: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum LensCommand {
    /// Congruence record and equivalence of L(p,q) and L(p,q').
    Classify { p: i64, q: i64, q_prime: i64 },
    /// All q' allowed by the congruence.
    Allowed { p: i64, q: i64 },
}

#[derive(Debug, Subcommand)]
pub enum ChainsCommand {
    /// Rational Betti numbers of a weighted complex and of its underlying complex.
    Betti { file: PathBuf },
    /// Divisibility and ∂∂ = 0, or the cocycle conditions for full group data.
    Validate { file: PathBuf },
    /// Checks on seeded random weighted complexes.
    Random {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 200)]
        max_simplices: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum WpsCommand {
    /// Every cone-model quantity for (p, q, q').
    Report { p: i64, q: i64, q_prime: i64 },
}

/// Failure classes, mapped to exit codes 2 and 1.
#[derive(Debug)]
pub enum CliError {
    Malformed(String),
    Computation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Malformed(_) => 2,
            CliError::Computation(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Malformed(m) | CliError::Computation(m) => m,
        }
    }
}

fn computation(e: impl std::fmt::Display) -> CliError {
    CliError::Computation(e.to_string())
}

fn malformed(e: impl std::fmt::Display) -> CliError {
    CliError::Malformed(e.to_string())
}

impl From<WpsError> for CliError {
    fn from(e: WpsError) -> Self {
        match e {
            WpsError::InvalidParameters(_) => malformed(e),
            _ => computation(e),
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| malformed(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| malformed(format!("{}: {e}", path.display())))
}

/// Parses `argv` (including the program name), runs the command, writes
/// the report to stdout and diagnostics to stderr, and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(value) => {
            print!("{}", emit_report(&value, cli.format));
            0
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

/// Runs a parsed command to its JSON result.
pub fn execute(cli: &Cli) -> Result<Value, CliError> {
    if let Some(p) = cli.precision {
        if !(MIN_PRECISION..=MAX_TRUNCATION).contains(&p) {
            return Err(malformed(format!(
                "--precision must lie in [{MIN_PRECISION}, {MAX_TRUNCATION}], got {p}"
            )));
        }
    }
    match &cli.command {
        Command::Adjunction { file } => {
            let cfg: CurveConfig = read_json(file)?;
            let report =
                with_precision_retry(&[&cfg], cli.precision, |c| adjunction_report(&c[0])).map_err(curve_error)?;
            let verdict = verdict_from(&report).ok();
            to_value(&json!({
                "name": cfg.name,
                "adjunction": report,
                "embeddedness": verdict,
            }))
        }
        Command::Intersect { first, second } => {
            let a: CurveConfig = read_json(first)?;
            let b: CurveConfig = read_json(second)?;
            let meetings = match_stations(&a, &b);
            let report = with_precision_retry(&[&a, &b], cli.precision, |c| {
                intersection_report(&c[0], &c[1], &meetings)
            })
            .map_err(curve_error)?;
            to_value(&json!({ "first": a.name, "second": b.name, "intersection": report }))
        }
        Command::Index(IndexCommand::Eval(args)) => index_eval(args),
        Command::Index(IndexCommand::Scan { p, q }) => {
            let rows = index_integrality_scan(*p, *q).map_err(malformed)?;
            to_value(&json!({ "p": p, "q": q, "rows": rows }))
        }
        Command::Lens(LensCommand::Classify { p, q, q_prime }) => {
            let record = cobordism_congruence(*p, *q, *q_prime).map_err(malformed)?;
            let a = LensSpace::new(*p, *q).map_err(malformed)?;
            let b = LensSpace::new(*p, *q_prime).map_err(malformed)?;
            let mut v = to_value(&record)?;
            let obj = v.as_object_mut().expect("record is an object");
            obj.insert("equivalent".into(), json!(lens_equivalent(&a, &b)));
            obj.insert("oriented_equivalent".into(), json!(lens_equivalent_with(&a, &b, true)));
            Ok(v)
        }
        Command::Lens(LensCommand::Allowed { p, q }) => {
            let allowed = allowed_q_set(*p, *q).map_err(malformed)?;
            to_value(&json!({ "p": p, "q": q, "allowed": allowed }))
        }
        Command::Chains(ChainsCommand::Betti { file }) => {
            let w: WeightedComplex = read_json(file)?;
            to_value(&json!({
                "simplices": w.len(),
                "dimension": w.dimension(),
                "boundary_squared_zero": boundary_squared_is_zero(&w),
                "betti": homology_betti(&w),
                "underlying_betti": homology_betti(&w.underlying()),
            }))
        }
        Command::Chains(ChainsCommand::Validate { file }) => chains_validate(file),
        Command::Chains(ChainsCommand::Random { count, max_simplices }) => {
            let checks = random_complex_checks(cli.seed, *count, *max_simplices, Executor::default());
            let all = checks.iter().all(|c| c.holds());
            to_value(&json!({ "seed": cli.seed, "count": count, "all_hold": all, "complexes": checks }))
        }
        Command::Wps(WpsCommand::Report { p, q, q_prime }) => {
            let r = report(*p, *q, *q_prime)?;
            let mut v = to_value(&r)?;
            v.as_object_mut()
                .expect("report is an object")
                .insert("holds".into(), json!(r.holds()));
            Ok(v)
        }
        Command::Sweep { p_max, sequential } => {
            if *p_max < 2 {
                return Err(malformed("--p-max must be at least 2"));
            }
            let exec = if *sequential {
                Executor::Sequential
            } else {
                Executor::Parallel
            };
            let rows = sweep(*p_max, exec)?;
            let all = rows.iter().all(|r| r.holds);
            to_value(&json!({ "p_max": p_max, "all_hold": all, "rows": rows }))
        }
    }
}

fn curve_error(e: CurveError) -> CliError {
    match e {
        CurveError::InvalidConfig(_) | CurveError::InvalidModel(_) | CurveError::UnknownLabel(_) => malformed(e),
        _ => computation(e),
    }
}

fn to_value<T: Serialize>(v: &T) -> Result<Value, CliError> {
    serde_json::to_value(v).map_err(computation)
}

fn index_eval(args: &IndexEvalArgs) -> Result<Value, CliError> {
    let d = if let Some(path) = &args.config {
        let cfg: CurveConfig = read_json(path)?;
        kawasaki_from_config(&cfg).map_err(curve_error)?
    } else {
        let c1: Rational = args
            .c1
            .as_deref()
            .ok_or_else(|| malformed("index eval needs --config or --c1"))?
            .parse()
            .map_err(malformed)?;
        let stations = args
            .station
            .iter()
            .map(|s| parse_station(s))
            .collect::<Result<Vec<_>, _>>()?;
        kawasaki_index(&c1, args.genus, &stations)
    };
    to_value(&json!({ "d": d, "integral": is_integer(&d), "index": index_dimension(&d) }))
}

fn parse_station(s: &str) -> Result<IsotropyWeights, CliError> {
    let bad = || malformed(format!("station {s:?} is not of the form m:w1,w2"));
    let (m, ws) = s.split_once(':').ok_or_else(bad)?;
    let m: i64 = m.trim().parse().map_err(|_| bad())?;
    let weights = ws
        .split(',')
        .map(|w| w.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| bad())?;
    IsotropyWeights::new(m, weights).map_err(malformed)
}

fn chains_validate(file: &Path) -> Result<Value, CliError> {
    let raw: Value = read_json(file)?;
    if raw.get("groups").is_some() {
        let g: GroupComplexFull = serde_json::from_value(raw).map_err(malformed)?;
        let valid = validate_group_complex(&g).map_err(malformed)?;
        let w = g.weighted().map_err(malformed)?;
        return to_value(&json!({
            "kind": "group_complex",
            "valid": valid,
            "boundary_squared_zero": boundary_squared_is_zero(&w),
        }));
    }
    match serde_json::from_value::<WeightedComplex>(raw) {
        Ok(w) => to_value(&json!({
            "kind": "weighted_complex",
            "valid": true,
            "boundary_squared_zero": boundary_squared_is_zero(&w),
        })),
        Err(e) if e.is_data() && e.to_string().contains("divide") => {
            to_value(&json!({ "kind": "weighted_complex", "valid": false, "reason": e.to_string() }))
        }
        Err(e) => Err(malformed(e)),
    }
}

impl From<ChainError> for CliError {
    fn from(e: ChainError) -> Self {
        malformed(e)
    }
}

/// JSON (pretty, stable key order) or aligned plain-text tables; always
/// newline-terminated.
pub fn emit_report(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("serializable");
            s.push('\n');
            s
        }
        Format::Table => render_table(value),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        other => other.to_string(),
    }
}

fn is_record_list(v: &Value) -> bool {
    matches!(v, Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object))
}

/// Flattens nested objects into dotted keys; record lists are collected
/// separately and rendered as column tables.
fn flatten(
    v: &Value,
    path: &str,
    scalars: &mut Vec<(String, String)>,
    tables: &mut Vec<(String, Vec<Map<String, Value>>)>,
) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let p = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                flatten(x, &p, scalars, tables);
            }
        }
        Value::Array(items) if is_record_list(v) => {
            let rows = items.iter().filter_map(Value::as_object).cloned().collect();
            tables.push((path.to_string(), rows));
        }
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(scalar_text).collect();
            scalars.push((path.to_string(), format!("[{}]", inner.join(", "))));
        }
        other => scalars.push((path.to_string(), scalar_text(other))),
    }
}

fn aligned(rows: &[Vec<String>]) -> String {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<width$}", width = widths[c]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn render_table(value: &Value) -> String {
    let mut scalars = Vec::new();
    let mut tables = Vec::new();
    flatten(value, "", &mut scalars, &mut tables);
    let mut out = String::new();
    if !scalars.is_empty() {
        let rows: Vec<Vec<String>> = scalars.into_iter().map(|(k, v)| vec![k, v]).collect();
        out.push_str(&aligned(&rows));
    }
    for (title, records) in tables {
        if !out.is_empty() {
            out.push('\n');
        }
        out.push_str(&format!("[{title}]\n"));
        let mut header: Vec<String> = Vec::new();
        let flat: Vec<Vec<(String, String)>> = records
            .iter()
            .map(|rec| {
                let mut s = Vec::new();
                let mut nested = Vec::new();
                flatten(&Value::Object(rec.clone()), "", &mut s, &mut nested);
                for (k, rows) in nested {
                    s.push((
                        k,
                        Value::Array(rows.into_iter().map(Value::Object).collect()).to_string(),
                    ));
                }
                s
            })
            .collect();
        for row in &flat {
            for (k, _) in row {
                if !header.contains(k) {
                    header.push(k.clone());
                }
            }
        }
        let mut grid = vec![header.clone()];
        for row in flat {
            grid.push(
                header
                    .iter()
                    .map(|h| {
                        row.iter()
                            .find(|(k, _)| k == h)
                            .map_or_else(|| "-".to_string(), |(_, v)| v.clone())
                    })
                    .collect(),
            );
        }
        out.push_str(&aligned(&grid));
    }
    if out.is_empty() {
        out.push('\n');
    }
    out
}
