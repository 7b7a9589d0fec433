use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

/// Where two computations first disagreed. `location` is an exponent
/// (`q^17`), a partition size (`n=17`) or a trial index (`trial 4`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstMismatch {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one `verify-identity` or `lemma` run.
///
/// All maps are `BTreeMap`s so the JSON key order is fixed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub parameters: BTreeMap<String, Value>,
    pub order_or_trials: u64,
    pub status: Status,
    pub first_mismatch: Option<FirstMismatch>,
    pub elapsed_ms: u64,
    /// Measured quantities: max errors, rejection counts, chain values.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub observations: BTreeMap<String, Value>,
}

impl VerificationReport {
    pub fn new(check_id: impl Into<String>, order_or_trials: u64) -> Self {
        Self {
            check_id: check_id.into(),
            parameters: BTreeMap::new(),
            order_or_trials,
            status: Status::Pass,
            first_mismatch: None,
            elapsed_ms: 0,
            observations: BTreeMap::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn observe(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.observations.insert(key.to_string(), value.into());
        self
    }

    /// Records a failure; only the first one is kept.
    pub fn fail(
        &mut self,
        location: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        if self.first_mismatch.is_none() {
            self.status = Status::Fail;
            self.first_mismatch = Some(FirstMismatch {
                location: location.into(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    /// Marks the run as aborted by a runtime error.
    pub fn error(&mut self, message: impl ToString) {
        self.status = Status::Error;
        self.observe("error", message.to_string());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "check: {}", self.check_id);
        let _ = writeln!(out, "status: {}", self.status.as_str());
        for (k, v) in &self.parameters {
            let _ = writeln!(out, "param {k}: {}", plain(v));
        }
        let _ = writeln!(out, "order_or_trials: {}", self.order_or_trials);
        if let Some(m) = &self.first_mismatch {
            let _ = writeln!(
                out,
                "first mismatch at {}: expected {}, got {}",
                m.location, m.expected, m.actual
            );
        }
        for (k, v) in &self.observations {
            let _ = writeln!(out, "{k}: {}", plain(v));
        }
        let _ = writeln!(out, "elapsed_ms: {}", self.elapsed_ms);
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn only_the_first_failure_is_kept() {
        let mut r = VerificationReport::new("x", 3);
        assert_eq!(r.status, Status::Pass);
        r.fail("q^4", 1, 2);
        r.fail("q^9", 5, 6);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.first_mismatch.as_ref().unwrap().location, "q^4");
        assert_eq!(r.status.exit_code(), 1);
    }

    #[test]
    fn keys_come_out_sorted() {
        let mut r = VerificationReport::new("x", 1);
        r.param("zeta", 1).param("alpha", 2);
        let json = r.to_json();
        assert!(json.find("\"alpha\"").unwrap() < json.find("\"zeta\"").unwrap());
        assert!(json.find("\"check_id\"").unwrap() < json.find("\"status\"").unwrap());
    }
}
