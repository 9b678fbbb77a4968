//! The data-driven identity catalog: one entry per displayed identity, each
//! bundling a parameter schema, admissibility constraints, and exact
//! left/right evaluators over Q[ln2].
//!
//! Evaluators encode the displays as published. Whether a display actually
//! holds is decided by the one-time audit (see `verifier::audit`) and
//! committed in [`status`]; nothing here is silently corrected.

mod abel_comb;
mod abel_fib;
mod bt_boyad;
mod bt_gq;
mod gould;
pub mod status;

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::exact::{HalfInt, LogValue, Rational};
use crate::harmonic::{
    binom, binom_halfint_lower, binom_hdiff, choose, harmonic, odd_harmonic, HarmonicError,
};
use crate::report::{Assignment, CheckReport, ParamValue};
use crate::sequences::{fib, gib, lucas, GibonacciSeed};

pub use status::{audited_status, AuditedStatus};

/// Catalog families, named as in the CLI contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    AbelFib,
    AbelComb,
    Gould,
    BtBoyad,
    BtGq,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::AbelFib,
        Family::AbelComb,
        Family::Gould,
        Family::BtBoyad,
        Family::BtGq,
    ];

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::AbelFib => "ABEL-FIB",
            Family::AbelComb => "ABEL-COMB",
            Family::Gould => "GOULD",
            Family::BtBoyad => "BT-BOYAD",
            Family::BtGq => "BT-GQ",
        };
        write!(f, "{s}")
    }
}

/// Kind of a schema parameter, which also drives CLI value parsing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Int,
    Half,
    Rat,
    Seed,
}

/// Default sample domain of one parameter. Values are produced in ascending
/// order so that grid iteration is lexicographic.
#[derive(Debug, Clone, Copy)]
pub enum Domain {
    /// Inclusive integer range. For the parameter named "n" the upper bound
    /// honors a sweep's n_max override.
    IntRange(i64, i64),
    Ints(&'static [i64]),
    /// Half-integers as twice-values.
    Halves(&'static [i64]),
    /// Rationals as (numerator, denominator) literals.
    Rats(&'static [(i64, i64)]),
    /// The default gibonacci seed list.
    Seeds,
    /// Values of the form sum(bases) + offset/2 plus absolute extras/2,
    /// for domains that track earlier parameters (e.g. b near n).
    Rel {
        bases: &'static [&'static str],
        offsets_twice: &'static [i64],
        extras_twice: &'static [i64],
    },
}

#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
    pub domain: Domain,
}

/// Evaluation failure classes for one side at one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    /// A pole filter fired; the string names the subterm.
    Skip(String),
    /// An encoding bug or ring overflow; internal, never a data outcome.
    Internal(String),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Skip(s) => write!(f, "skipped: {s}"),
            EvalError::Internal(s) => write!(f, "internal error: {s}"),
        }
    }
}

pub type Eval = Result<LogValue, EvalError>;
pub type REval = Result<Rational, EvalError>;
pub type EvalFn = fn(&Assignment) -> Eval;

/// One catalog identity.
pub struct IdentityEntry {
    pub id: &'static str,
    pub family: Family,
    /// Stable label of the source display; opaque data for reports.
    pub anchor: &'static str,
    pub params: &'static [ParamSpec],
    /// Cross-parameter constraint beyond the per-parameter domains.
    pub admissible: Option<fn(&Assignment) -> bool>,
    pub lhs: EvalFn,
    pub rhs: EvalFn,
}

impl fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("id", &self.id)
            .field("family", &self.family)
            .field("anchor", &self.anchor)
            .finish()
    }
}

/// The immutable catalog, in publication order.
pub fn entries() -> &'static [&'static IdentityEntry] {
    static ALL: OnceLock<Vec<&'static IdentityEntry>> = OnceLock::new();
    ALL.get_or_init(|| {
        let mut v: Vec<&'static IdentityEntry> = Vec::new();
        v.extend(abel_fib::ENTRIES.iter());
        v.extend(abel_comb::ENTRIES.iter());
        v.extend(gould::ENTRIES.iter());
        v.extend(bt_boyad::ENTRIES.iter());
        v.extend(bt_gq::ENTRIES.iter());
        v
    })
}

pub fn lookup(id: &str) -> Option<&'static IdentityEntry> {
    static INDEX: OnceLock<HashMap<&'static str, &'static IdentityEntry>> = OnceLock::new();
    INDEX
        .get_or_init(|| entries().iter().map(|e| (e.id, *e)).collect())
        .get(id)
        .copied()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegistryError {
    /// The assignment does not satisfy the entry's schema.
    BadAssignment(String),
    /// An evaluator hit an internal error (ring overflow, encoding bug).
    Internal(String),
}

impl fmt::Display for RegistryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegistryError::BadAssignment(s) => write!(f, "bad assignment: {s}"),
            RegistryError::Internal(s) => write!(f, "internal error: {s}"),
        }
    }
}

impl std::error::Error for RegistryError {}

fn kind_matches(kind: ParamKind, value: &ParamValue) -> bool {
    match (kind, value) {
        (ParamKind::Int, ParamValue::Int(_)) => true,
        (ParamKind::Int, ParamValue::Half(h)) => h.is_integer(),
        (ParamKind::Half, ParamValue::Int(_) | ParamValue::Half(_)) => true,
        (
            ParamKind::Rat,
            ParamValue::Int(_) | ParamValue::Half(_) | ParamValue::Rat(_),
        ) => true,
        (ParamKind::Seed, ParamValue::Seed(_)) => true,
        _ => false,
    }
}

/// Validates an assignment against the entry's schema and constraints.
pub fn validate(entry: &IdentityEntry, assignment: &Assignment) -> Result<(), RegistryError> {
    for spec in entry.params {
        let value = assignment.get(spec.name).ok_or_else(|| {
            RegistryError::BadAssignment(format!(
                "{}: missing parameter {}",
                entry.id, spec.name
            ))
        })?;
        if !kind_matches(spec.kind, value) {
            return Err(RegistryError::BadAssignment(format!(
                "{}: parameter {} has wrong kind (got {})",
                entry.id, spec.name, value
            )));
        }
    }
    for (name, _) in assignment.pairs() {
        if !entry.params.iter().any(|p| p.name == name) {
            return Err(RegistryError::BadAssignment(format!(
                "{}: unknown parameter {name}",
                entry.id
            )));
        }
    }
    if let Some(ok) = entry.admissible {
        if !ok(assignment) {
            return Err(RegistryError::BadAssignment(format!(
                "{}: constraint violated at {assignment}",
                entry.id
            )));
        }
    }
    Ok(())
}

/// Evaluates both sides at one admissible point. Pole filters yield a
/// Skipped report; internal errors propagate.
pub fn evaluate(
    entry: &IdentityEntry,
    assignment: &Assignment,
) -> Result<CheckReport, RegistryError> {
    validate(entry, assignment)?;
    evaluate_unchecked(entry, assignment, &None)
}

/// A sweep-injected fault: adds +1 to the named entry's right side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mutation {
    pub id: String,
}

pub(crate) fn evaluate_unchecked(
    entry: &IdentityEntry,
    assignment: &Assignment,
    mutation: &Option<Mutation>,
) -> Result<CheckReport, RegistryError> {
    let lhs = (entry.lhs)(assignment);
    let rhs = (entry.rhs)(assignment);
    let mutate = mutation.as_ref().is_some_and(|m| m.id == entry.id);
    match (lhs, rhs) {
        (Ok(lhs), Ok(rhs)) => {
            let rhs = if mutate {
                &rhs + &LogValue::int(1)
            } else {
                rhs
            };
            Ok(CheckReport::equal_or_not(entry.id, assignment.clone(), lhs, rhs))
        }
        (Err(EvalError::Skip(reason)), _) | (_, Err(EvalError::Skip(reason))) => {
            Ok(CheckReport::skipped(entry.id, assignment.clone(), reason))
        }
        (Err(EvalError::Internal(msg)), _) | (_, Err(EvalError::Internal(msg))) => {
            Err(RegistryError::Internal(format!(
                "{} at {assignment}: {msg}",
                entry.id
            )))
        }
    }
}

// ---- shared schema vocabulary ---------------------------------------------

pub(crate) const P_N0: ParamSpec = ParamSpec {
    name: "n",
    kind: ParamKind::Int,
    domain: Domain::IntRange(0, 24),
};
pub(crate) const P_N1: ParamSpec = ParamSpec {
    name: "n",
    kind: ParamKind::Int,
    domain: Domain::IntRange(1, 24),
};
pub(crate) const P_R_ALL: ParamSpec = ParamSpec {
    name: "r",
    kind: ParamKind::Int,
    domain: Domain::Ints(&[-3, -2, -1, 0, 1, 2, 3, 4, 5]),
};
pub(crate) const P_R_GE0: ParamSpec = ParamSpec {
    name: "r",
    kind: ParamKind::Int,
    domain: Domain::Ints(&[0, 1, 2, 3, 4, 5]),
};
pub(crate) const P_R_GE1: ParamSpec = ParamSpec {
    name: "r",
    kind: ParamKind::Int,
    domain: Domain::Ints(&[1, 2, 3, 4, 5]),
};
pub(crate) const P_R_ODD: ParamSpec = ParamSpec {
    name: "r",
    kind: ParamKind::Int,
    domain: Domain::Ints(&[1, 3, 5]),
};
pub(crate) const P_R_EVEN: ParamSpec = ParamSpec {
    name: "r",
    kind: ParamKind::Int,
    domain: Domain::Ints(&[2, 4]),
};
pub(crate) const P_S: ParamSpec = ParamSpec {
    name: "s",
    kind: ParamKind::Int,
    domain: Domain::Ints(&[0, 1, 2, 3, 4]),
};
pub(crate) const P_S1: ParamSpec = ParamSpec {
    name: "s",
    kind: ParamKind::Int,
    domain: Domain::Ints(&[1, 2, 3, 4]),
};
pub(crate) const P_T: ParamSpec = ParamSpec {
    name: "t",
    kind: ParamKind::Int,
    domain: Domain::Ints(&[0, 1, 2, 3, 4]),
};
pub(crate) const P_SEED: ParamSpec = ParamSpec {
    name: "seed",
    kind: ParamKind::Seed,
    domain: Domain::Seeds,
};

// ---- shared evaluator vocabulary -----------------------------------------

pub(crate) fn rat(n: i64) -> Rational {
    Rational::int(n)
}

pub(crate) fn big(b: &BigInt) -> Rational {
    Rational::from(b)
}

pub(crate) fn fibr(j: i64) -> Rational {
    big(&fib(j))
}

pub(crate) fn lucr(j: i64) -> Rational {
    big(&lucas(j))
}

pub(crate) fn gibr(seed: &GibonacciSeed, j: i64) -> Rational {
    big(&gib(seed, j))
}

pub(crate) fn chooser(n: i64, k: i64) -> Rational {
    big(&choose(n, k))
}

pub(crate) fn sign(k: i64) -> Rational {
    Rational::neg_one_pow(k)
}

/// Skip-aware rational inverse; `subterm` names what vanished.
pub(crate) fn inv_or_skip(x: Rational, subterm: impl FnOnce() -> String) -> REval {
    x.inv()
        .map_err(|_| EvalError::Skip(format!("zero denominator {}", subterm())))
}

/// Inverse integer binomial, skipping when C(n, k) = 0.
pub(crate) fn inv_choose(n: i64, k: i64) -> REval {
    let c = choose(n, k);
    Rational::from(&c)
        .inv()
        .map_err(|_| EvalError::Skip(format!("zero binomial C({n}, {k})")))
}

/// Inverse generalized binomial with half-integer indices; zero skips and an
/// unsupported pattern is an internal error (the schema should prevent it).
pub(crate) fn inv_binom_half(upper: &HalfInt, lower: &HalfInt) -> REval {
    match binom_halfint_lower(upper, lower) {
        Ok(v) => v
            .inv()
            .map_err(|_| EvalError::Skip(format!("zero binomial C({upper}, {lower})"))),
        Err(e) => Err(EvalError::Internal(e.to_string())),
    }
}

/// Generalized binomial C(upper, lower) with half-integer indices as a value.
pub(crate) fn binom_half(upper: &HalfInt, lower: &HalfInt) -> REval {
    binom_halfint_lower(upper, lower).map_err(|e| EvalError::Internal(e.to_string()))
}

/// Harmonic value with poles turned into skips.
pub(crate) fn h_at(z: &HalfInt) -> Eval {
    match harmonic(z) {
        Ok(v) => Ok(v),
        Err(HarmonicError::Pole(_)) => {
            Err(EvalError::Skip(format!("harmonic pole at H_{{{z}}}")))
        }
        Err(e) => Err(EvalError::Internal(e.to_string())),
    }
}

pub(crate) fn h_int(n: i64) -> Eval {
    h_at(&HalfInt::from_int(n))
}

/// H_a - H_b when the difference is rational (same lattice component).
pub(crate) fn hdiff(a: &HalfInt, b: &HalfInt) -> REval {
    let d = &h_at(a)? - &h_at(b)?;
    if d.is_rational() {
        Ok(d.rat)
    } else {
        Err(EvalError::Internal(format!(
            "H_{{{a}}} - H_{{{b}}} is not rational"
        )))
    }
}

/// O_n with negative arguments skipped.
pub(crate) fn o_at(n: i64) -> REval {
    odd_harmonic(n).map_err(|_| EvalError::Skip(format!("odd harmonic at O_{{{n}}}")))
}

/// The differential binomial weight C(x,k)(H_x - H_{x-k}); total.
pub(crate) fn weight(x: &HalfInt, k: i64) -> Rational {
    binom_hdiff(x, k).expect("weight is total for k >= 0")
}

/// C(upper, lower) with integer lower >= 0 (falling factorial).
pub(crate) fn binom_int_lower(upper: &HalfInt, lower: i64) -> REval {
    if lower < 0 {
        return Ok(Rational::zero());
    }
    binom(upper, lower).map_err(|e| EvalError::Internal(e.to_string()))
}

/// Sum over an inclusive integer range in Q[ln2]; empty sums are zero.
pub(crate) fn lsum(lo: i64, hi: i64, mut f: impl FnMut(i64) -> Eval) -> Eval {
    let mut acc = LogValue::zero();
    let mut k = lo;
    while k <= hi {
        acc = &acc + &f(k)?;
        k += 1;
    }
    Ok(acc)
}

/// Rational-valued sum over an inclusive range; empty sums are zero.
pub(crate) fn rsum(lo: i64, hi: i64, mut f: impl FnMut(i64) -> REval) -> REval {
    let mut acc = Rational::zero();
    let mut k = lo;
    while k <= hi {
        acc = &acc + &f(k)?;
        k += 1;
    }
    Ok(acc)
}

/// x^e for a nonzero base (negative e inverts); zero base with negative e
/// is a skip.
pub(crate) fn pow_or_skip(x: &Rational, e: i64, subterm: impl FnOnce() -> String) -> REval {
    x.pow(e)
        .map_err(|_| EvalError::Skip(format!("zero base {}", subterm())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_size_and_lookup() {
        assert!(entries().len() >= 55, "catalog holds {} entries", entries().len());
        let e = lookup("rec-FF-part").expect("rec-FF-part registered");
        assert_eq!(e.family, Family::AbelFib);
        assert!(lookup("nope").is_none());
        // ids are unique
        let mut ids: Vec<_> = entries().iter().map(|e| e.id).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len());
    }

    #[test]
    fn families_are_stable_strings() {
        assert_eq!(Family::BtGq.to_string(), "BT-GQ");
        assert_eq!(Family::parse("abel-fib"), Some(Family::AbelFib));
        assert_eq!(Family::parse("??"), None);
    }

    #[test]
    fn spot_rec_ff_part() {
        let e = lookup("rec-FF-part").unwrap();
        let a = Assignment::new().with("n", ParamValue::Int(1));
        let rep = evaluate(e, &a).unwrap();
        assert_eq!(rep.lhs.as_ref().unwrap(), &LogValue::int(-1));
        assert_eq!(rep.rhs.as_ref().unwrap(), &LogValue::int(-1));
        assert!(rep.outcome.is_equal());
    }

    #[test]
    fn spot_conv_sq() {
        let e = lookup("conv-sq").unwrap();
        let a = Assignment::new().with("n", ParamValue::Int(2));
        let rep = evaluate(e, &a).unwrap();
        assert_eq!(rep.lhs.as_ref().unwrap(), &LogValue::int(1));
        assert_eq!(rep.rhs.as_ref().unwrap(), &LogValue::int(1));
    }

    #[test]
    fn spot_boyad_hf_part() {
        let e = lookup("boyad-HF-part").unwrap();
        let a = Assignment::new().with("n", ParamValue::Int(2));
        let rep = evaluate(e, &a).unwrap();
        assert_eq!(
            rep.lhs.as_ref().unwrap(),
            &LogValue::from_rational(Rational::frac(-1, 2))
        );
        assert!(rep.outcome.is_equal());
    }

    #[test]
    fn spot_rec_odd_part() {
        let e = lookup("rec-odd-part").unwrap();
        let a = Assignment::new().with("n", ParamValue::Int(1));
        let rep = evaluate(e, &a).unwrap();
        assert_eq!(
            rep.lhs.as_ref().unwrap(),
            &LogValue::from_rational(Rational::frac(2, 3))
        );
        assert!(rep.outcome.is_equal());
    }

    #[test]
    fn spot_gib_prod_empty_product() {
        let e = lookup("gib-prod").unwrap();
        let a = Assignment::new()
            .with("n", ParamValue::Int(3))
            .with("m", ParamValue::Int(0))
            .with("r", ParamValue::Int(0))
            .with("s", ParamValue::Int(1))
            .with("seed", ParamValue::Seed(GibonacciSeed::new(3, -1)));
        let rep = evaluate(e, &a).unwrap();
        assert_eq!(rep.lhs.as_ref().unwrap(), &LogValue::zero());
        assert_eq!(rep.rhs.as_ref().unwrap(), &LogValue::zero());
    }

    #[test]
    fn bad_assignment_is_rejected() {
        let e = lookup("rec-odd").unwrap();
        // r must be odd for this entry.
        let a = Assignment::new()
            .with("n", ParamValue::Int(2))
            .with("r", ParamValue::Int(2))
            .with("s", ParamValue::Int(0));
        assert!(matches!(
            evaluate(e, &a),
            Err(RegistryError::BadAssignment(_))
        ));
        let a = Assignment::new().with("n", ParamValue::Int(2));
        assert!(matches!(
            evaluate(e, &a),
            Err(RegistryError::BadAssignment(_))
        ));
    }

    #[test]
    fn prop1_ln2_values_carry_ln2() {
        let e = lookup("prop1-ln2-a").unwrap();
        let a = Assignment::new()
            .with("n", ParamValue::Int(2))
            .with("seed", ParamValue::Seed(GibonacciSeed::fibonacci()));
        let rep = evaluate(e, &a).unwrap();
        assert!(!rep.lhs.as_ref().unwrap().log2.is_zero());
        assert!(!rep.rhs.as_ref().unwrap().log2.is_zero());
        assert!(rep.outcome.is_equal());
    }
}
