//! Check outcomes and parameter assignments shared by the suites, the
//! registry, and the verifier.

use std::fmt;
use std::time::Duration;

use serde_json::{json, Value};

use crate::exact::{HalfInt, LogValue, Rational};
use crate::sequences::GibonacciSeed;

/// One concrete parameter value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamValue {
    Int(i64),
    Half(HalfInt),
    Rat(Rational),
    Seed(GibonacciSeed),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Half(v) => write!(f, "{v}"),
            ParamValue::Rat(v) => write!(f, "{v}"),
            ParamValue::Seed(v) => write!(f, "{v}"),
        }
    }
}

/// Ordered name/value pairs, in the declaring schema's parameter order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Assignment {
    pairs: Vec<(String, ParamValue)>,
}

impl Assignment {
    pub fn new() -> Self {
        Assignment { pairs: Vec::new() }
    }

    pub fn push(&mut self, name: &str, value: ParamValue) {
        self.pairs.push((name.to_string(), value));
    }

    pub fn with(mut self, name: &str, value: ParamValue) -> Self {
        self.push(name, value);
        self
    }

    pub fn pairs(&self) -> &[(String, ParamValue)] {
        &self.pairs
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        self.pairs
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
    }

    /// Integer parameter; half-integer values that happen to be integral
    /// coerce. Panics when absent, which indicates a schema bug upstream.
    pub fn int(&self, name: &str) -> i64 {
        match self.get(name) {
            Some(ParamValue::Int(v)) => *v,
            Some(ParamValue::Half(h)) => h
                .as_int()
                .unwrap_or_else(|| panic!("parameter {name} is not an integer")),
            other => panic!("missing integer parameter {name}: {other:?}"),
        }
    }

    pub fn half(&self, name: &str) -> HalfInt {
        match self.get(name) {
            Some(ParamValue::Half(h)) => h.clone(),
            Some(ParamValue::Int(v)) => HalfInt::from_int(*v),
            other => panic!("missing half-integer parameter {name}: {other:?}"),
        }
    }

    pub fn rat(&self, name: &str) -> Rational {
        match self.get(name) {
            Some(ParamValue::Rat(r)) => r.clone(),
            Some(ParamValue::Int(v)) => Rational::int(*v),
            Some(ParamValue::Half(h)) => h.to_rational(),
            other => panic!("missing rational parameter {name}: {other:?}"),
        }
    }

    pub fn seed(&self, name: &str) -> GibonacciSeed {
        match self.get(name) {
            Some(ParamValue::Seed(s)) => s.clone(),
            other => panic!("missing seed parameter {name}: {other:?}"),
        }
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, value)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{name}={value}")?;
        }
        Ok(())
    }
}

/// Result class of one evaluated point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Equal,
    Unequal,
    /// The point was filtered out during evaluation; the string names the
    /// subterm that fired (harmonic pole, zero binomial, zero denominator).
    Skipped(String),
}

impl Outcome {
    pub fn is_equal(&self) -> bool {
        matches!(self, Outcome::Equal)
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Outcome::Skipped(_))
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Equal => write!(f, "EQUAL"),
            Outcome::Unequal => write!(f, "UNEQUAL"),
            Outcome::Skipped(reason) => write!(f, "SKIPPED({reason})"),
        }
    }
}

/// Outcome of evaluating one identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub id: String,
    pub assignment: Assignment,
    pub lhs: Option<LogValue>,
    pub rhs: Option<LogValue>,
    pub outcome: Outcome,
    /// Populated only when timings are requested; omitted from canonical
    /// output so that repeated runs are byte-identical.
    pub elapsed: Option<Duration>,
}

impl CheckReport {
    pub fn equal_or_not(
        id: &str,
        assignment: Assignment,
        lhs: LogValue,
        rhs: LogValue,
    ) -> CheckReport {
        let outcome = if lhs == rhs {
            Outcome::Equal
        } else {
            Outcome::Unequal
        };
        CheckReport {
            id: id.to_string(),
            assignment,
            lhs: Some(lhs),
            rhs: Some(rhs),
            outcome,
            elapsed: None,
        }
    }

    pub fn skipped(id: &str, assignment: Assignment, reason: String) -> CheckReport {
        CheckReport {
            id: id.to_string(),
            assignment,
            lhs: None,
            rhs: None,
            outcome: Outcome::Skipped(reason),
            elapsed: None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("id".into(), json!(self.id));
        obj.insert("assignment".into(), json!(self.assignment.to_string()));
        obj.insert(
            "lhs".into(),
            match &self.lhs {
                Some(v) => json!(v.to_string()),
                None => Value::Null,
            },
        );
        obj.insert(
            "rhs".into(),
            match &self.rhs {
                Some(v) => json!(v.to_string()),
                None => Value::Null,
            },
        );
        obj.insert("outcome".into(), json!(self.outcome.to_string()));
        if let Some(elapsed) = self.elapsed {
            obj.insert("elapsed_ms".into(), json!(elapsed.as_millis() as u64));
        }
        Value::Object(obj)
    }

    pub fn to_tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.id,
            self.assignment,
            self.lhs.as_ref().map_or_else(|| "-".into(), |v| v.to_string()),
            self.rhs.as_ref().map_or_else(|| "-".into(), |v| v.to_string()),
            self.outcome
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assignment_rendering_and_access() {
        let a = Assignment::new()
            .with("n", ParamValue::Int(3))
            .with("m", ParamValue::Half(HalfInt::halves(-1)))
            .with("seed", ParamValue::Seed(GibonacciSeed::new(2, 1)));
        assert_eq!(a.to_string(), "n=3,m=-1/2,seed=2:1");
        assert_eq!(a.int("n"), 3);
        assert_eq!(a.half("m"), HalfInt::halves(-1));
        assert_eq!(a.seed("seed"), GibonacciSeed::lucas());
    }

    #[test]
    fn report_outcomes() {
        let eq = CheckReport::equal_or_not(
            "x",
            Assignment::new(),
            LogValue::int(1),
            LogValue::int(1),
        );
        assert!(eq.outcome.is_equal());
        let ne = CheckReport::equal_or_not(
            "x",
            Assignment::new(),
            LogValue::int(1),
            LogValue::int(2),
        );
        assert_eq!(ne.outcome, Outcome::Unequal);
        let sk = CheckReport::skipped("x", Assignment::new(), "harmonic pole at H_{-1}".into());
        assert!(sk.outcome.is_skipped());
        assert_eq!(sk.outcome.to_string(), "SKIPPED(harmonic pole at H_{-1})");
    }
}
