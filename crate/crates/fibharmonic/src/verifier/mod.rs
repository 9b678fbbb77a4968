//! Grid construction, parallel sweep execution, the independent audit, and
//! report aggregation.
//!
//! Sweeps are deterministic: grid points are enumerated in lexicographic
//! order over each entry's declared parameter order, evaluation may fan out
//! across worker threads, and aggregation keys every report back to its
//! enumeration index before anything is emitted.

pub mod oracle;

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::exact::HalfInt;
use crate::registry::{
    self, audited_status, AuditedStatus, Domain, IdentityEntry, Mutation, ParamSpec,
    RegistryError,
};
use crate::report::{Assignment, CheckReport, Outcome, ParamValue};
use crate::sequences::GibonacciSeed;

/// Default seed set for seed-parameterized entries.
pub fn default_seeds() -> Vec<GibonacciSeed> {
    vec![
        GibonacciSeed::new(0, 1),
        GibonacciSeed::new(2, 1),
        GibonacciSeed::new(1, 1),
        GibonacciSeed::new(3, -1),
        GibonacciSeed::new(-2, 5),
    ]
}

/// Finite description of the points a sweep visits.
#[derive(Debug, Clone)]
pub struct GridSpec {
    /// Replaces the upper bound of each entry's n range.
    pub n_max: Option<i64>,
    /// Full domain replacements by parameter name.
    pub overrides: BTreeMap<String, Vec<ParamValue>>,
    pub seeds: Vec<GibonacciSeed>,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            n_max: None,
            overrides: BTreeMap::new(),
            seeds: default_seeds(),
        }
    }
}

impl GridSpec {
    pub fn with_n_max(n_max: i64) -> Self {
        GridSpec {
            n_max: Some(n_max),
            ..GridSpec::default()
        }
    }

    /// Canonical rendering used in report headers.
    pub fn describe(&self) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        if let Some(n) = self.n_max {
            out.insert("n_max".into(), n.to_string());
        }
        for (name, values) in &self.overrides {
            let list: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            out.insert(format!("set.{name}"), list.join(","));
        }
        let seeds: Vec<String> = self.seeds.iter().map(|s| s.to_string()).collect();
        out.insert("seeds".into(), seeds.join(","));
        out
    }
}

fn half_from_twice(t: i64) -> ParamValue {
    ParamValue::Half(HalfInt::halves(t))
}

fn domain_values(
    spec: &ParamSpec,
    partial: &Assignment,
    grid: &GridSpec,
) -> Vec<ParamValue> {
    if let Some(values) = grid.overrides.get(spec.name) {
        return values.clone();
    }
    match spec.domain {
        Domain::IntRange(lo, hi) => {
            let hi = if spec.name == "n" {
                grid.n_max.unwrap_or(hi)
            } else {
                hi
            };
            (lo..=hi).map(ParamValue::Int).collect()
        }
        Domain::Ints(vs) => vs.iter().copied().map(ParamValue::Int).collect(),
        Domain::Halves(ts) => ts.iter().copied().map(half_from_twice).collect(),
        Domain::Rats(ps) => ps
            .iter()
            .map(|(p, q)| ParamValue::Rat(crate::exact::Rational::frac(*p, *q)))
            .collect(),
        Domain::Seeds => grid
            .seeds
            .iter()
            .cloned()
            .map(ParamValue::Seed)
            .collect(),
        Domain::Rel {
            bases,
            offsets_twice,
            extras_twice,
        } => {
            let mut base = 0i64;
            for b in bases {
                base += partial.int(b);
            }
            let mut twices: Vec<i64> = offsets_twice
                .iter()
                .map(|off| 2 * base + off)
                .chain(extras_twice.iter().copied())
                .collect();
            twices.sort_unstable();
            twices.dedup();
            twices.into_iter().map(half_from_twice).collect()
        }
    }
}

/// All admissible points of one entry under a grid, in lexicographic order
/// over the entry's declared parameter order.
pub fn grid_points(entry: &IdentityEntry, grid: &GridSpec) -> Vec<Assignment> {
    fn expand(
        entry: &IdentityEntry,
        grid: &GridSpec,
        depth: usize,
        current: &mut Assignment,
        out: &mut Vec<Assignment>,
    ) {
        if depth == entry.params.len() {
            if entry.admissible.is_none_or(|ok| ok(current)) {
                out.push(current.clone());
            }
            return;
        }
        let spec = &entry.params[depth];
        for value in domain_values(spec, current, grid) {
            let mut next = current.clone();
            next.push(spec.name, value);
            expand(entry, grid, depth + 1, &mut next, out);
        }
    }
    let mut out = Vec::new();
    expand(entry, grid, 0, &mut Assignment::new(), &mut out);
    out
}

/// Per-identity aggregation of one sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    pub id: String,
    pub family: String,
    pub anchor: String,
    pub checked: u64,
    pub equal: u64,
    pub unequal: u64,
    pub skipped: u64,
    pub first_counterexample: Option<CheckReport>,
    pub elapsed: Option<Duration>,
}

impl SweepSummary {
    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("id".into(), serde_json::json!(self.id));
        obj.insert("family".into(), serde_json::json!(self.family));
        obj.insert("paper_anchor".into(), serde_json::json!(self.anchor));
        obj.insert("checked".into(), serde_json::json!(self.checked));
        obj.insert("equal".into(), serde_json::json!(self.equal));
        obj.insert("unequal".into(), serde_json::json!(self.unequal));
        obj.insert("skipped".into(), serde_json::json!(self.skipped));
        obj.insert(
            "first_counterexample".into(),
            match &self.first_counterexample {
                Some(rep) => rep.to_json(),
                None => serde_json::Value::Null,
            },
        );
        if let Some(elapsed) = self.elapsed {
            obj.insert(
                "elapsed_ms".into(),
                serde_json::json!(elapsed.as_millis() as u64),
            );
        }
        serde_json::Value::Object(obj)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifierError {
    NotFound(String),
    /// Registry and oracle evaluators disagree on the same side: the
    /// catalog encoding itself is broken, not the identity.
    EncodingBug(String),
    Internal(String),
}

impl fmt::Display for VerifierError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifierError::NotFound(id) => write!(f, "unknown identity id {id:?}"),
            VerifierError::EncodingBug(msg) => write!(f, "encoding bug: {msg}"),
            VerifierError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for VerifierError {}

/// Sweep options beyond the grid itself.
#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    /// Worker threads; 0 means the rayon default.
    pub jobs: usize,
    /// Collect every per-point report, not just summaries.
    pub collect_reports: bool,
    /// Record wall times (left out by default so reports stay byte-stable).
    pub timings: bool,
    /// Fault injection for the mutation canary.
    pub mutation: Option<Mutation>,
}

pub fn resolve_ids(ids: &[String]) -> Result<Vec<&'static IdentityEntry>, VerifierError> {
    ids.iter()
        .map(|id| registry::lookup(id).ok_or_else(|| VerifierError::NotFound(id.clone())))
        .collect()
}

fn run_pool<T: Send>(
    jobs: usize,
    work: impl FnOnce() -> Result<T, VerifierError> + Send,
) -> Result<T, VerifierError> {
    if jobs == 0 {
        work()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| VerifierError::Internal(e.to_string()))?;
        pool.install(work)
    }
}

/// Evaluates every admissible grid point of every requested identity exactly
/// once. Summaries and reports are independent of the parallelism degree.
pub fn sweep(
    ids: &[String],
    grid: &GridSpec,
    options: &SweepOptions,
) -> Result<(Vec<SweepSummary>, Vec<CheckReport>), VerifierError> {
    let entries = resolve_ids(ids)?;
    run_pool(options.jobs, || {
        let mut summaries = Vec::with_capacity(entries.len());
        let mut all_reports = Vec::new();
        for entry in &entries {
            let start = Instant::now();
            let points = grid_points(entry, grid);
            let evaluated: Result<Vec<(usize, CheckReport)>, RegistryError> = points
                .par_iter()
                .enumerate()
                .map(|(i, assignment)| {
                    registry::evaluate_unchecked(entry, assignment, &options.mutation)
                        .map(|rep| (i, rep))
                })
                .collect();
            let mut evaluated =
                evaluated.map_err(|e| VerifierError::Internal(e.to_string()))?;
            evaluated.sort_by_key(|(i, _)| *i);

            let mut summary = SweepSummary {
                id: entry.id.to_string(),
                family: entry.family.to_string(),
                anchor: entry.anchor.to_string(),
                checked: 0,
                equal: 0,
                unequal: 0,
                skipped: 0,
                first_counterexample: None,
                elapsed: None,
            };
            for (_, rep) in &evaluated {
                match &rep.outcome {
                    Outcome::Equal => {
                        summary.checked += 1;
                        summary.equal += 1;
                    }
                    Outcome::Unequal => {
                        summary.checked += 1;
                        summary.unequal += 1;
                        if summary.first_counterexample.is_none() {
                            summary.first_counterexample = Some(rep.clone());
                        }
                    }
                    Outcome::Skipped(_) => summary.skipped += 1,
                }
            }
            if options.timings {
                summary.elapsed = Some(start.elapsed());
            }
            summaries.push(summary);
            if options.collect_reports {
                all_reports.extend(evaluated.into_iter().map(|(_, r)| r));
            }
        }
        summaries.sort_by(|a, b| a.id.cmp(&b.id));
        Ok((summaries, all_reports))
    })
}

/// Audit outcome computed for one identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComputedStatus {
    ConfirmedPass,
    Discrepancy {
        at: String,
        lhs: String,
        rhs: String,
    },
}

impl ComputedStatus {
    /// Comparison against the committed table.
    pub fn matches(&self, committed: &AuditedStatus) -> bool {
        match (self, committed) {
            (ComputedStatus::ConfirmedPass, AuditedStatus::ConfirmedPass) => true,
            (
                ComputedStatus::Discrepancy { at, lhs, rhs },
                AuditedStatus::Discrepancy {
                    at: at2,
                    lhs: lhs2,
                    rhs: rhs2,
                },
            ) => at == at2 && lhs == lhs2 && rhs == rhs2,
            _ => false,
        }
    }
}

impl fmt::Display for ComputedStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComputedStatus::ConfirmedPass => write!(f, "ConfirmedPass"),
            ComputedStatus::Discrepancy { at, lhs, rhs } => {
                write!(f, "Discrepancy(at {at}: lhs = {lhs}, rhs = {rhs})")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct AuditResult {
    pub id: String,
    pub status: ComputedStatus,
    pub checked: u64,
    pub skipped: u64,
}

/// One audited point: both routes evaluated, compared value-for-value. A
/// registry/oracle mismatch on either side is an encoding bug: the catalog
/// encoding itself is broken, not the identity.
fn audit_point(
    entry: &IdentityEntry,
    oracle_lhs: oracle::OracleFn,
    oracle_rhs: oracle::OracleFn,
    assignment: &Assignment,
) -> Result<CheckReport, VerifierError> {
    let reg = registry::evaluate_unchecked(entry, assignment, &None)
        .map_err(|e| VerifierError::Internal(e.to_string()))?;
    let ora = oracle::evaluate(entry.id, oracle_lhs, oracle_rhs, assignment)
        .map_err(|e| VerifierError::Internal(e.to_string()))?;
    match (&reg.outcome, &ora.outcome) {
        (Outcome::Skipped(_), Outcome::Skipped(_)) => {}
        (Outcome::Skipped(_), _) | (_, Outcome::Skipped(_)) => {
            return Err(VerifierError::EncodingBug(format!(
                "{} at {assignment}: registry {} vs oracle {}",
                entry.id, reg.outcome, ora.outcome
            )));
        }
        _ => {
            if reg.lhs != ora.lhs {
                return Err(VerifierError::EncodingBug(format!(
                    "{} lhs at {assignment}: registry {} vs oracle {}",
                    entry.id,
                    reg.lhs.as_ref().unwrap(),
                    ora.lhs.as_ref().unwrap()
                )));
            }
            if reg.rhs != ora.rhs {
                return Err(VerifierError::EncodingBug(format!(
                    "{} rhs at {assignment}: registry {} vs oracle {}",
                    entry.id,
                    reg.rhs.as_ref().unwrap(),
                    ora.rhs.as_ref().unwrap()
                )));
            }
        }
    }
    Ok(reg)
}

/// Cross-checks the registry evaluators against the independently written
/// direct-summation oracle value-for-value, then classifies each identity.
pub fn audit(
    ids: &[String],
    grid: &GridSpec,
    jobs: usize,
) -> Result<Vec<AuditResult>, VerifierError> {
    let entries = resolve_ids(ids)?;
    run_pool(jobs, || {
        let mut results = Vec::with_capacity(entries.len());
        for entry in &entries {
            let (oracle_lhs, oracle_rhs) = oracle::oracle_for(entry.id).ok_or_else(|| {
                VerifierError::Internal(format!("no oracle for {}", entry.id))
            })?;
            let points = grid_points(entry, grid);
            let evaluated: Result<Vec<(usize, CheckReport)>, VerifierError> = points
                .par_iter()
                .enumerate()
                .map(|(i, assignment)| {
                    audit_point(entry, oracle_lhs, oracle_rhs, assignment).map(|rep| (i, rep))
                })
                .collect();
            let mut evaluated = evaluated?;
            evaluated.sort_by_key(|(i, _)| *i);

            let mut checked = 0;
            let mut skipped = 0;
            let mut first: Option<&CheckReport> = None;
            for (_, rep) in &evaluated {
                match &rep.outcome {
                    Outcome::Skipped(_) => skipped += 1,
                    Outcome::Equal => checked += 1,
                    Outcome::Unequal => {
                        checked += 1;
                        if first.is_none() {
                            first = Some(rep);
                        }
                    }
                }
            }
            let status = match first {
                None => ComputedStatus::ConfirmedPass,
                Some(rep) => ComputedStatus::Discrepancy {
                    at: rep.assignment.to_string(),
                    lhs: rep.lhs.as_ref().unwrap().to_string(),
                    rhs: rep.rhs.as_ref().unwrap().to_string(),
                },
            };
            results.push(AuditResult {
                id: entry.id.to_string(),
                status,
                checked,
                skipped,
            });
        }
        results.sort_by(|a, b| a.id.cmp(&b.id));
        Ok(results)
    })
}

/// Success test for a sweep against the committed audit statuses: every
/// ConfirmedPass identity must come back with zero unequal points, and when
/// the grid contains a Discrepancy identity's stored counterexample point,
/// the sweep's first counterexample must reproduce the stored triple
/// exactly. Grids that omit the stored point are not judged on it.
pub fn verdict(summaries: &[SweepSummary], grid: &GridSpec) -> Result<(), String> {
    for s in summaries {
        match audited_status(&s.id) {
            AuditedStatus::ConfirmedPass => {
                if s.unequal > 0 {
                    let at = s
                        .first_counterexample
                        .as_ref()
                        .map(|r| r.assignment.to_string())
                        .unwrap_or_default();
                    return Err(format!(
                        "{}: {} unexpected inequalities (first at {at})",
                        s.id, s.unequal
                    ));
                }
            }
            AuditedStatus::Discrepancy { at, lhs, rhs } => {
                let entry = match registry::lookup(&s.id) {
                    Some(e) => e,
                    None => continue,
                };
                let stored_in_grid = grid_points(entry, grid)
                    .iter()
                    .any(|p| p.to_string() == *at);
                if !stored_in_grid {
                    continue;
                }
                let reproduced = s.first_counterexample.as_ref().is_some_and(|rep| {
                    rep.assignment.to_string() == *at
                        && rep.lhs.as_ref().is_some_and(|v| v.to_string() == *lhs)
                        && rep.rhs.as_ref().is_some_and(|v| v.to_string() == *rhs)
                });
                if !reproduced {
                    let got = s
                        .first_counterexample
                        .as_ref()
                        .map(|rep| {
                            format!(
                                "{}: {} vs {}",
                                rep.assignment,
                                rep.lhs.as_ref().unwrap(),
                                rep.rhs.as_ref().unwrap()
                            )
                        })
                        .unwrap_or_else(|| "none".into());
                    return Err(format!(
                        "{}: stored counterexample not reproduced (stored {at}: {lhs} vs {rhs}; got {got})",
                        s.id
                    ));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_lexicographic_and_filtered() {
        let entry = registry::lookup("rec-odd").unwrap();
        let grid = GridSpec::with_n_max(3);
        let points = grid_points(entry, &grid);
        // n in [1,3], r in {1,3,5}, s in [0,4]
        assert_eq!(points.len(), 3 * 3 * 5);
        assert_eq!(points[0].to_string(), "n=1,r=1,s=0");
        assert_eq!(points[1].to_string(), "n=1,r=1,s=1");
        let mut sorted = points.clone();
        sorted.sort_by_key(|a| a.to_string());
        // already lexicographic by construction over ordered domains
        assert_eq!(points.len(), sorted.len());
    }

    #[test]
    fn relative_domains_track_n() {
        let entry = registry::lookup("gould2-G").unwrap();
        let mut grid = GridSpec::with_n_max(2);
        grid.seeds.truncate(1);
        let points = grid_points(entry, &grid);
        assert!(points
            .iter()
            .any(|a| a.to_string().contains("n=2,b=3/2")));
        assert!(points.iter().all(|a| {
            let b = a.half("b");
            b >= HalfInt::halves(2 * a.int("n") - 1)
        }));
    }

    #[test]
    fn sweep_counts_are_complete() {
        let ids = vec!["rec-FF-part".to_string()];
        let grid = GridSpec::with_n_max(60);
        let (summaries, _) = sweep(&ids, &grid, &SweepOptions::default()).unwrap();
        assert_eq!(summaries.len(), 1);
        let s = &summaries[0];
        assert_eq!(s.checked, 60);
        assert_eq!(s.equal, 60);
        assert_eq!(s.unequal, 0);
        assert_eq!(s.skipped, 0);
    }

    #[test]
    fn unknown_id_is_not_found() {
        let ids = vec!["nope".to_string()];
        assert!(matches!(
            sweep(&ids, &GridSpec::default(), &SweepOptions::default()),
            Err(VerifierError::NotFound(_))
        ));
    }

    #[test]
    fn parallelism_does_not_change_results() {
        let ids = vec!["conv-sq".to_string(), "boyad-HF-part".to_string()];
        let grid = GridSpec::with_n_max(12);
        let opts1 = SweepOptions {
            jobs: 1,
            collect_reports: true,
            ..SweepOptions::default()
        };
        let opts8 = SweepOptions {
            jobs: 8,
            collect_reports: true,
            ..SweepOptions::default()
        };
        let (s1, r1) = sweep(&ids, &grid, &opts1).unwrap();
        let (s8, r8) = sweep(&ids, &grid, &opts8).unwrap();
        assert_eq!(s1, s8);
        assert_eq!(r1, r8);
    }

    #[test]
    fn audit_confirms_and_classifies() {
        let grid = GridSpec::with_n_max(5);
        let results = audit(&["conv-sq".to_string()], &grid, 0).unwrap();
        assert_eq!(results[0].status, ComputedStatus::ConfirmedPass);
        let results = audit(&["prop2-a".to_string()], &grid, 0).unwrap();
        assert!(matches!(
            &results[0].status,
            ComputedStatus::Discrepancy { at, .. } if at == "n=0,seed=2:1"
        ));
    }

    fn perturbed_conv_sq_rhs(a: &Assignment) -> Result<crate::exact::LogValue, registry::EvalError> {
        let (_, rhs) = oracle::oracle_for("conv-sq").unwrap();
        rhs(a).map(|v| &v + &crate::exact::LogValue::int(1))
    }

    #[test]
    fn deliberate_misencoding_is_an_encoding_bug() {
        let entry = registry::lookup("conv-sq").unwrap();
        let (lhs, _) = oracle::oracle_for("conv-sq").unwrap();
        let point = Assignment::new().with("n", ParamValue::Int(0));
        let err = audit_point(entry, lhs, perturbed_conv_sq_rhs, &point).unwrap_err();
        assert!(matches!(err, VerifierError::EncodingBug(_)), "{err:?}");
    }

    #[test]
    fn enlarging_a_grid_preserves_counterexamples() {
        // Monotone grids: the set of unequal points can only grow.
        let ids = vec!["shift-simple".to_string()];
        let collect = |n_max: i64| -> Vec<String> {
            let opts = SweepOptions {
                collect_reports: true,
                ..SweepOptions::default()
            };
            let (_, reports) = sweep(&ids, &GridSpec::with_n_max(n_max), &opts).unwrap();
            reports
                .into_iter()
                .filter(|r| r.outcome == Outcome::Unequal)
                .map(|r| r.assignment.to_string())
                .collect()
        };
        let small = collect(2);
        let large = collect(6);
        assert!(!small.is_empty());
        for point in &small {
            assert!(large.contains(point), "{point} flipped to equal");
        }
    }

    #[test]
    fn mutation_is_caught() {
        let ids = vec!["conv-sq".to_string()];
        let grid = GridSpec::with_n_max(6);
        let opts = SweepOptions {
            mutation: Some(Mutation {
                id: "conv-sq".into(),
            }),
            ..SweepOptions::default()
        };
        let (summaries, _) = sweep(&ids, &grid, &opts).unwrap();
        assert!(summaries[0].unequal >= 1);
        assert!(verdict(&summaries, &grid).is_err());
    }
}
