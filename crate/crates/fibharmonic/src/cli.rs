//! Command-line front end: list identities, run sweeps and audits, evaluate
//! single points, write reports.
//!
//! Exit codes: 0 success, 1 identity discrepancy, 2 usage error, 3 internal
//! error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::exact::{HalfInt, Rational};
use crate::registry::{self, audited_status, AuditedStatus, IdentityEntry, Mutation, ParamKind};
use crate::report::{Assignment, ParamValue};
use crate::sequences::GibonacciSeed;
use crate::verifier::{self, GridSpec, SweepOptions, VerifierError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_DISCREPANCY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "fibharmonic",
    version,
    about = "Exact verifier for a catalog of Fibonacci-harmonic summation identities over Q[ln2]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct Selection {
    /// Comma-separated identity ids.
    #[arg(long, value_delimiter = ',')]
    ids: Vec<String>,
    /// Restrict to one family (ABEL-FIB, ABEL-COMB, GOULD, BT-BOYAD, BT-GQ).
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args, Clone, Default)]
struct GridArgs {
    /// Replace the upper bound of each entry's n range.
    #[arg(long)]
    n_max: Option<i64>,
    /// Parameter assignments/overrides: name=value, a..b ranges, p/2
    /// half-integers, g0:g1 seeds; repeatable and comma-separated.
    #[arg(long = "set", value_delimiter = ',')]
    set: Vec<String>,
    /// Gibonacci seeds to sweep, as g0:g1 pairs.
    #[arg(long, value_delimiter = ',')]
    seeds: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// One line per catalog entry: id, family, anchor, parameters, status.
    List {
        #[command(flatten)]
        selection: Selection,
        /// Show a single id (errors when unknown).
        #[arg(long)]
        id: Option<String>,
    },
    /// Sweep identities over a grid and compare against audited statuses.
    Verify {
        #[command(flatten)]
        selection: Selection,
        #[command(flatten)]
        grid: GridArgs,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Report path (default from FIBHARMONIC_REPORT when set).
        #[arg(long)]
        report: Option<String>,
        /// Report format.
        #[arg(long, default_value = "json")]
        format: String,
        /// Include per-point reports in the output.
        #[arg(long)]
        verbose: bool,
        /// Record wall times (makes reports non-reproducible).
        #[arg(long)]
        timings: bool,
        /// Fault injection: add +1 to this entry's right side.
        #[arg(long, hide = true)]
        mutate_rhs: Option<String>,
    },
    /// Evaluate one identity at one parameter point.
    Eval {
        #[arg(long)]
        id: String,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Re-run the independent audit and compare with committed statuses.
    Audit {
        #[command(flatten)]
        selection: Selection,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    eprintln!("run with --help for usage");
    ExitCode::from(EXIT_USAGE)
}

fn selected_ids(selection: &Selection) -> Result<Vec<String>, String> {
    let mut ids: Vec<String> = Vec::new();
    if !selection.ids.is_empty() {
        for id in &selection.ids {
            if registry::lookup(id).is_none() {
                return Err(format!("unknown identity id {id:?}"));
            }
            ids.push(id.clone());
        }
    }
    if let Some(fam) = &selection.family {
        let family = registry::Family::parse(fam)
            .ok_or_else(|| format!("unknown family {fam:?}"))?;
        for entry in registry::entries() {
            if entry.family == family {
                ids.push(entry.id.to_string());
            }
        }
    }
    if ids.is_empty() && selection.family.is_none() && selection.ids.is_empty() {
        ids = registry::entries().iter().map(|e| e.id.to_string()).collect();
    }
    if ids.is_empty() {
        return Err("selection matches no identities".into());
    }
    Ok(ids)
}

fn parse_value(kind: ParamKind, text: &str) -> Result<ParamValue, String> {
    let text = text.trim();
    match kind {
        ParamKind::Int => text
            .parse::<i64>()
            .map(ParamValue::Int)
            .map_err(|_| format!("expected an integer, got {text:?}")),
        ParamKind::Half => HalfInt::from_str(text)
            .map(ParamValue::Half)
            .map_err(|e| e.to_string()),
        ParamKind::Rat => Rational::from_str(text)
            .map(ParamValue::Rat)
            .map_err(|e| e.to_string()),
        ParamKind::Seed => GibonacciSeed::from_str(text)
            .map(ParamValue::Seed)
            .map_err(|e| e.to_string()),
    }
}

fn parse_values(kind: ParamKind, text: &str) -> Result<Vec<ParamValue>, String> {
    if let Some((lo, hi)) = text.split_once("..") {
        if kind != ParamKind::Int {
            return Err(format!("ranges are only supported for integers: {text:?}"));
        }
        let lo: i64 = lo
            .trim()
            .parse()
            .map_err(|_| format!("bad range start {lo:?}"))?;
        let hi: i64 = hi
            .trim()
            .parse()
            .map_err(|_| format!("bad range end {hi:?}"))?;
        if hi < lo {
            return Err(format!("empty range {text:?}"));
        }
        return Ok((lo..=hi).map(ParamValue::Int).collect());
    }
    Ok(vec![parse_value(kind, text)?])
}

/// Looks the parameter kind up across the selected entries so that --set can
/// be parsed consistently.
fn kind_of(param: &str, ids: &[String]) -> Result<ParamKind, String> {
    for id in ids {
        let entry = registry::lookup(id).expect("ids pre-validated");
        if let Some(spec) = entry.params.iter().find(|p| p.name == param) {
            return Ok(spec.kind);
        }
    }
    Err(format!("parameter {param:?} not used by the selected identities"))
}

fn build_grid(args: &GridArgs, ids: &[String]) -> Result<GridSpec, String> {
    let mut grid = GridSpec {
        n_max: args.n_max,
        ..GridSpec::default()
    };
    if !args.seeds.is_empty() {
        let mut seeds = Vec::new();
        for s in &args.seeds {
            seeds.push(GibonacciSeed::from_str(s).map_err(|e| e.to_string())?);
        }
        grid.seeds = seeds;
    }
    for item in &args.set {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| format!("--set expects name=value, got {item:?}"))?;
        let name = name.trim();
        let kind = kind_of(name, ids)?;
        let values = parse_values(kind, value)?;
        if name == "seed" {
            grid.seeds = values
                .iter()
                .map(|v| match v {
                    ParamValue::Seed(s) => Ok(s.clone()),
                    _ => Err("seed values must be g0:g1".to_string()),
                })
                .collect::<Result<_, _>>()?;
        } else {
            grid.overrides.insert(name.to_string(), values);
        }
    }
    Ok(grid)
}

fn schema_line(entry: &IdentityEntry) -> String {
    let mut buf = String::new();
    for (i, p) in entry.params.iter().enumerate() {
        if i > 0 {
            buf.push(' ');
        }
        let kind = match p.kind {
            ParamKind::Int => "int",
            ParamKind::Half => "half",
            ParamKind::Rat => "rat",
            ParamKind::Seed => "seed",
        };
        let _ = write!(buf, "{}:{kind}", p.name);
    }
    buf
}

fn status_line(id: &str) -> String {
    match audited_status(id) {
        AuditedStatus::ConfirmedPass => "ConfirmedPass".to_string(),
        AuditedStatus::Discrepancy { at, .. } => format!("Discrepancy(at {at})"),
    }
}

fn cmd_list(selection: &Selection, id: &Option<String>) -> ExitCode {
    if let Some(id) = id {
        let Some(entry) = registry::lookup(id) else {
            return usage_error(&format!("unknown identity id {id:?}"));
        };
        println!(
            "{} | {} | {} | {} | {}",
            entry.id,
            entry.family,
            entry.anchor,
            schema_line(entry),
            status_line(entry.id)
        );
        return ExitCode::from(EXIT_OK);
    }
    let ids = match selected_ids(selection) {
        Ok(ids) => ids,
        Err(msg) => return usage_error(&msg),
    };
    for id in &ids {
        let entry = registry::lookup(id).expect("validated");
        println!(
            "{} | {} | {} | {} | {}",
            entry.id,
            entry.family,
            entry.anchor,
            schema_line(entry),
            status_line(entry.id)
        );
    }
    ExitCode::from(EXIT_OK)
}

/// Canonical JSON report: {tool_version, grid, summaries, reports?}.
/// Byte-stable for identical inputs as long as timings are off.
pub fn render_json(
    grid: &GridSpec,
    summaries: &[verifier::SweepSummary],
    reports: &[crate::report::CheckReport],
    verbose: bool,
) -> String {
    let mut top = serde_json::Map::new();
    top.insert(
        "tool_version".into(),
        serde_json::json!(env!("CARGO_PKG_VERSION")),
    );
    let grid_desc: BTreeMap<String, String> = grid.describe();
    top.insert("grid".into(), serde_json::json!(grid_desc));
    top.insert(
        "summaries".into(),
        serde_json::Value::Array(summaries.iter().map(|s| s.to_json()).collect()),
    );
    if verbose {
        top.insert(
            "reports".into(),
            serde_json::Value::Array(reports.iter().map(|r| r.to_json()).collect()),
        );
    }
    let mut text = serde_json::to_string_pretty(&serde_json::Value::Object(top))
        .expect("report serialization");
    text.push('\n');
    text
}

/// TSV report: one CheckReport per row.
pub fn render_tsv(reports: &[crate::report::CheckReport]) -> String {
    let mut out = String::from("id\tassignment\tlhs\trhs\toutcome\n");
    for rep in reports {
        out.push_str(&rep.to_tsv_row());
        out.push('\n');
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    selection: &Selection,
    grid_args: &GridArgs,
    jobs: usize,
    report: &Option<String>,
    format: &str,
    verbose: bool,
    timings: bool,
    mutate_rhs: &Option<String>,
) -> ExitCode {
    if format != "json" && format != "tsv" {
        return usage_error(&format!("unknown format {format:?} (expected json or tsv)"));
    }
    let ids = match selected_ids(selection) {
        Ok(ids) => ids,
        Err(msg) => return usage_error(&msg),
    };
    let grid = match build_grid(grid_args, &ids) {
        Ok(g) => g,
        Err(msg) => return usage_error(&msg),
    };
    let options = SweepOptions {
        jobs,
        collect_reports: verbose || format == "tsv",
        timings,
        mutation: mutate_rhs.clone().map(|id| Mutation { id }),
    };
    let (summaries, reports) = match verifier::sweep(&ids, &grid, &options) {
        Ok(v) => v,
        Err(VerifierError::NotFound(id)) => {
            return usage_error(&format!("unknown identity id {id:?}"))
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
    };
    let text = if format == "tsv" {
        render_tsv(&reports)
    } else {
        render_json(&grid, &summaries, &reports, verbose)
    };
    let report_path = report
        .clone()
        .or_else(|| std::env::var("FIBHARMONIC_REPORT").ok());
    match &report_path {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("error: cannot write report to {path}: {e}");
                return ExitCode::from(EXIT_INTERNAL);
            }
        }
        None => print!("{text}"),
    }
    for s in &summaries {
        eprintln!(
            "{}: checked={} equal={} unequal={} skipped={}",
            s.id, s.checked, s.equal, s.unequal, s.skipped
        );
    }
    match verifier::verdict(&summaries, &grid) {
        Ok(()) => ExitCode::from(EXIT_OK),
        Err(msg) => {
            eprintln!("verdict: {msg}");
            ExitCode::from(EXIT_DISCREPANCY)
        }
    }
}

fn cmd_eval(id: &str, grid_args: &GridArgs) -> ExitCode {
    let Some(entry) = registry::lookup(id) else {
        return usage_error(&format!("unknown identity id {id:?}"));
    };
    let ids = vec![id.to_string()];
    let grid = match build_grid(grid_args, &ids) {
        Ok(g) => g,
        Err(msg) => return usage_error(&msg),
    };
    // Every parameter takes exactly one value here.
    let mut assignment = Assignment::new();
    for spec in entry.params {
        let values = if spec.name == "seed" && !grid.overrides.contains_key("seed") {
            grid.seeds.iter().cloned().map(ParamValue::Seed).collect()
        } else {
            match grid.overrides.get(spec.name) {
                Some(v) => v.clone(),
                None => {
                    return usage_error(&format!(
                        "eval needs --set {}=<value> for {}",
                        spec.name, entry.id
                    ))
                }
            }
        };
        if values.len() != 1 {
            return usage_error(&format!(
                "eval needs exactly one value for {}, got {}",
                spec.name,
                values.len()
            ));
        }
        assignment.push(spec.name, values[0].clone());
    }
    match registry::evaluate(entry, &assignment) {
        Ok(rep) => {
            match (&rep.lhs, &rep.rhs) {
                (Some(lhs), Some(rhs)) => {
                    println!("lhs = {lhs}, rhs = {rhs}, {}", rep.outcome);
                }
                _ => println!("{}", rep.outcome),
            }
            ExitCode::from(EXIT_OK)
        }
        Err(registry::RegistryError::BadAssignment(msg)) => usage_error(&msg),
        Err(registry::RegistryError::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

fn cmd_audit(selection: &Selection, grid_args: &GridArgs, jobs: usize) -> ExitCode {
    let ids = match selected_ids(selection) {
        Ok(ids) => ids,
        Err(msg) => return usage_error(&msg),
    };
    let grid = match build_grid(grid_args, &ids) {
        Ok(g) => g,
        Err(msg) => return usage_error(&msg),
    };
    let results = match verifier::audit(&ids, &grid, jobs) {
        Ok(r) => r,
        Err(VerifierError::NotFound(id)) => {
            return usage_error(&format!("unknown identity id {id:?}"))
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
    };
    let mut drifted = false;
    for r in &results {
        let committed = audited_status(&r.id);
        let matches = r.status.matches(committed);
        if !matches {
            drifted = true;
        }
        println!(
            "{} | checked={} skipped={} | {} | {}",
            r.id,
            r.checked,
            r.skipped,
            r.status,
            if matches { "as committed" } else { "DRIFT" }
        );
    }
    if drifted {
        ExitCode::from(EXIT_DISCREPANCY)
    } else {
        ExitCode::from(EXIT_OK)
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::List { selection, id } => cmd_list(selection, id),
        Command::Verify {
            selection,
            grid,
            jobs,
            report,
            format,
            verbose,
            timings,
            mutate_rhs,
        } => cmd_verify(
            selection, grid, *jobs, report, format, *verbose, *timings, mutate_rhs,
        ),
        Command::Eval { id, grid } => cmd_eval(id, grid),
        Command::Audit {
            selection,
            grid,
            jobs,
        } => cmd_audit(selection, grid, *jobs),
    }
}
