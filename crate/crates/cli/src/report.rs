//! JSON report plumbing. Schema:
//! { command, params, results, assertions: { passed, failed: [...] },
//!   timing }
//! Values wider than 64 bits are serialized as decimal strings so nothing
//! is truncated. Reports are deterministic for a fixed config: timing is
//! null unless explicitly requested.

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub params: Value,
    pub results: Value,
    pub assertions: Assertions,
    pub timing: Option<Timing>,
}

#[derive(Serialize, Default)]
pub struct Assertions {
    pub passed: u64,
    pub failed: Vec<String>,
}

impl Assertions {
    /// Record a named assertion; failures carry the identifying label.
    pub fn check(&mut self, label: &str, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed.push(label.to_string());
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed.is_empty()
    }
}

#[derive(Serialize)]
pub struct Timing {
    pub wall_ms: u64,
}

pub fn big(v: &BigInt) -> Value {
    json!(v.to_string())
}

pub fn ratio(n: impl ToString, d: impl ToString) -> Value {
    json!(format!("{}/{}", n.to_string(), d.to_string()))
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &std::path::Path) -> std::io::Result<()> {
        std::fs::write(path, self.to_json())
    }
}
