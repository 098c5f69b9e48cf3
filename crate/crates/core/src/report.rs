use std::fmt;

use serde::Serialize;
use serde_json::Value;

use crate::partition::Partition;

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub lambda: Vec<usize>,
    pub check: String,
    pub expected: String,
    pub got: String,
    pub seed: Option<u64>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl CheckReport {
    pub fn new(lambda: &Partition, check: &str, expected: impl ToString, got: impl ToString) -> Self {
        let expected = expected.to_string();
        let got = got.to_string();
        CheckReport {
            lambda: lambda.parts().to_vec(),
            check: check.to_string(),
            pass: expected == got,
            expected,
            got,
            seed: None,
            elapsed_ms: None,
            counterexample: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_counterexample(mut self, value: Option<impl Serialize>) -> Self {
        self.counterexample = value.map(|v| serde_json::to_value(v).expect("serializable counterexample"));
        self
    }

    pub fn failed(lambda: &Partition, check: &str, expected: impl ToString, error: impl fmt::Display) -> Self {
        let mut report = CheckReport::new(lambda, check, expected, format!("error: {error}"));
        report.pass = false;
        report
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lambda: Vec<String> = self.lambda.iter().map(ToString::to_string).collect();
        write!(
            f,
            "{} lambda=({}) {} expected={} got={}",
            if self.pass { "PASS" } else { "FAIL" },
            lambda.join(","),
            self.check,
            self.expected,
            self.got
        )?;
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        if let Some(ms) = self.elapsed_ms {
            write!(f, " elapsed_ms={ms}")?;
        }
        if let Some(c) = &self.counterexample {
            write!(f, "\n  counterexample: {c}")?;
        }
        Ok(())
    }
}
