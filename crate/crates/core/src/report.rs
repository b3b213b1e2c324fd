//! Machine-readable check reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::exactnum::{LinComb, ParamPoly, SMono, Symbol};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Where a check failed (or, for passing checks, what was found).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Detail {
    /// Matrix entry as `[row legs, column legs]`, 1-based.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entry: Option<[Vec<usize>; 2]>,
    /// Spectral monomial as `(variable, exponent)` pairs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomial: Option<Vec<(String, i32)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbol: Option<String>,
    /// Offending coefficient in canonical polynomial form.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub info: Option<String>,
}

impl Detail {
    pub fn info(msg: impl Into<String>) -> Self {
        Detail { info: Some(msg.into()), ..Default::default() }
    }

    pub fn with_entry(mut self, row: Vec<usize>, col: Vec<usize>) -> Self {
        self.entry = Some([row, col]);
        self
    }

    pub fn with_monomial(mut self, m: &SMono) -> Self {
        self.monomial = Some(m.pairs());
        self
    }

    pub fn with_info(mut self, msg: impl Into<String>) -> Self {
        self.info = Some(msg.into());
        self
    }

    /// Locates the first nonzero coefficient of a residual vector.
    pub fn from_residual<S: Symbol>(v: &LinComb<S>) -> Self {
        match v.first() {
            Some((s, c)) => Detail { symbol: Some(s.to_string()), residual: Some(c.to_string()), ..Default::default() },
            None => Detail::default(),
        }
    }

    pub fn scalar(c: &ParamPoly) -> Self {
        Detail { residual: Some(c.to_string()), ..Default::default() }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        if let Some([r, c]) = &self.entry {
            let _ = write!(s, "entry ({:?},{:?}) ", r, c);
        }
        if let Some(m) = &self.monomial {
            let parts: Vec<String> = m.iter().map(|(v, e)| format!("{v}^{e}")).collect();
            let _ = write!(s, "monomial [{}] ", parts.join(" "));
        }
        if let Some(sym) = &self.symbol {
            let _ = write!(s, "symbol {sym} ");
        }
        if let Some(r) = &self.residual {
            let _ = write!(s, "residual {r} ");
        }
        if let Some(i) = &self.info {
            let _ = write!(s, "{i}");
        }
        s.trim_end().to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Detail>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Pass, detail: None }
    }

    pub fn pass_with(name: impl Into<String>, detail: Detail) -> Self {
        Check { name: name.into(), status: Status::Pass, detail: Some(detail) }
    }

    pub fn fail(name: impl Into<String>, detail: Detail) -> Self {
        Check { name: name.into(), status: Status::Fail, detail: Some(detail) }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Skipped, detail: Some(Detail::info(reason)) }
    }

    pub fn from_outcome(name: impl Into<String>, outcome: Outcome) -> Self {
        match outcome {
            Ok(()) => Check::pass(name),
            Err(d) => Check::fail(name, d),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Result of an identity check: `Err` carries the first failure.
pub type Outcome = std::result::Result<(), Detail>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            command: command.into(),
            params: BTreeMap::new(),
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn param(mut self, k: &str, v: impl ToString) -> Self {
        self.params.insert(k.to_string(), v.to_string());
        self
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    /// True iff every check passed. Skipped checks count as not passing.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(s, "{} {}", self.command, params.join(" "));
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            match &c.detail {
                Some(d) => {
                    let _ = writeln!(s, "  {tag} {}: {}", c.name, d.render());
                }
                None => {
                    let _ = writeln!(s, "  {tag} {}", c.name);
                }
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        let _ = writeln!(s, "{passed}/{} checks passed in {} ms", self.checks.len(), self.elapsed_ms);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let mut r = Report::new("verify cybe").param("n", 3);
        r.push(Check::pass("cybe"));
        r.push(Check::fail("skew", Detail::scalar(&ParamPoly::int(2)).with_entry(vec![1, 2], vec![2, 1])));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["checks"][0]["status"], "pass");
        assert_eq!(v["checks"][1]["detail"]["entry"][0][1], 2);
        assert!(v["checks"][0].get("detail").is_none());
        assert!(!r.all_passed());
    }
}
