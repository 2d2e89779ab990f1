//! Per-instance run records shared by the command-line workflows.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    /// Problem family, e.g. `shortest-path` or `stemma`.
    pub kind: String,
    pub instance: String,
    /// `sat`, `unsat`, `optimal`, `suboptimal`, `consistent`, ...
    pub verdict: String,
    pub objective: Option<u64>,
    pub vars: u64,
    pub clauses: u64,
    pub encode_ms: f64,
    pub solve_ms: f64,
    /// Problem-specific witness data.
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub records: Vec<RunRecord>,
    pub summary: String,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<RunReport> {
        serde_json::from_str(text)
    }

    pub fn csv_header() -> &'static str {
        "kind,instance,verdict,objective,vars,clauses,encode_ms,solve_ms"
    }

    /// One line per record; fields never contain commas except the
    /// instance name, which is quoted.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::csv_header());
        out.push('\n');
        for r in &self.records {
            out.push_str(&format!(
                "{},\"{}\",{},{},{},{},{:.3},{:.3}\n",
                r.kind,
                r.instance.replace('"', "\"\""),
                r.verdict,
                r.objective.map_or(String::new(), |o| o.to_string()),
                r.vars,
                r.clauses,
                r.encode_ms,
                r.solve_ms
            ));
        }
        out
    }
}
