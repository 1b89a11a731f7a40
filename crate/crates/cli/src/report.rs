use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

/// One JSON object per invocation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub check_name: String,
    pub parameters: BTreeMap<String, String>,
    pub passed: bool,
    pub counters: BTreeMap<String, u64>,
    pub extrema: BTreeMap<String, Value>,
    pub runtime_ms: u64,
}

impl Report {
    pub fn new(check_name: &str) -> Self {
        Self {
            check_name: check_name.to_string(),
            parameters: BTreeMap::new(),
            passed: true,
            counters: BTreeMap::new(),
            extrema: BTreeMap::new(),
            runtime_ms: 0,
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn counter(&mut self, key: &str, value: u64) -> &mut Self {
        self.counters.insert(key.to_string(), value);
        self
    }

    pub fn extremum(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.extrema.insert(key.to_string(), value.into());
        self
    }

    /// Non-finite floats become the strings `inf`, `-inf`, `nan`.
    pub fn float(&mut self, key: &str, value: f64) -> &mut Self {
        self.extremum(key, float_value(value))
    }

    pub fn counter_value(&self, key: &str) -> u64 {
        self.counters.get(key).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The JSON with `runtime_ms` removed, for comparing runs.
    pub fn deterministic_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        strip_runtime(&mut v);
        v.to_string()
    }

    pub fn summary(&self) -> String {
        let mut s = format!("{}: {}", self.check_name, if self.passed { "PASS" } else { "FAIL" });
        for (k, v) in &self.counters {
            let _ = write!(s, " {k}={v}");
        }
        s
    }
}

pub fn float_value(x: f64) -> Value {
    if x.is_finite() {
        Value::from(x)
    } else if x.is_nan() {
        Value::from("nan")
    } else if x > 0.0 {
        Value::from("inf")
    } else {
        Value::from("-inf")
    }
}

/// Drops a top-level `runtime_ms` field from a parsed report.
pub fn strip_runtime(v: &mut Value) {
    if let Value::Object(map) = v {
        map.remove("runtime_ms");
    }
}
