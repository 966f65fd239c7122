use serde::{Deserialize, Serialize};

use crate::exactlin::{SVec, Scalar};

/// A nonzero residual left by a failing identity instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum Residual {
    /// A vector in space `side` (0 for the first space, 1 for the second,
    /// or an index into some other ambient space named by the check).
    Vector { side: u8, entries: Vec<Entry> },
    /// An operator on a representation space.
    Matrix { entries: Vec<(usize, usize, Scalar)> },
    /// Free-form explanation for structural failures.
    Note { text: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub idx: usize,
    pub c: Scalar,
}

impl Residual {
    pub fn vector(side: u8, v: &SVec) -> Self {
        Residual::Vector { side, entries: v.iter().map(|(i, c)| Entry { idx: *i, c: c.clone() }).collect() }
    }

    pub fn note(text: impl Into<String>) -> Self {
        Residual::Note { text: text.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// 0 when the identity's `X, Y, Z` range over the first space, 1 when
    /// they range over the second.
    pub orientation: u8,
    pub tuple: Vec<usize>,
    pub labels: Vec<String>,
    pub residual: Residual,
}

/// Outcome of one exhaustive check, or an aggregate of several.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub name: String,
    /// Identity form used, e.g. `"jacobi-analog:printed"`.
    pub form: Option<String>,
    pub total: u64,
    pub failure_count: u64,
    /// The first few failures in enumeration order.
    pub failures: Vec<Failure>,
    pub parts: Vec<AxiomReport>,
}

/// Number of failures kept verbatim in a report; all failures are counted.
pub const DEFAULT_MAX_FAILURES: usize = 16;

impl AxiomReport {
    pub fn new(name: impl Into<String>, form: Option<String>) -> Self {
        AxiomReport { name: name.into(), form, total: 0, failure_count: 0, failures: Vec::new(), parts: Vec::new() }
    }

    pub fn aggregate(name: impl Into<String>, parts: Vec<AxiomReport>) -> Self {
        AxiomReport {
            name: name.into(),
            form: None,
            total: parts.iter().map(|p| p.total).sum(),
            failure_count: parts.iter().map(|p| p.failure_count).sum(),
            failures: Vec::new(),
            parts,
        }
    }

    pub fn pass(&self) -> bool {
        self.failure_count == 0 && self.parts.iter().all(AxiomReport::pass)
    }

    /// Records one checked instance.
    pub fn record(&mut self, failure: Option<Failure>, max_failures: usize) {
        self.total += 1;
        if let Some(f) = failure {
            self.failure_count += 1;
            if self.failures.len() < max_failures {
                self.failures.push(f);
            }
        }
    }

    /// Folds another report of the same check into this one (counts add,
    /// stored failures are appended up to the cap).
    pub fn absorb(&mut self, other: AxiomReport, max_failures: usize) {
        self.total += other.total;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < max_failures {
                self.failures.push(f);
            }
        }
    }

    /// Names of failing leaf checks, depth first.
    pub fn failing_checks(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.failure_count > 0 {
            out.push(self.name.clone());
        }
        for p in &self.parts {
            out.extend(p.failing_checks());
        }
        out
    }

    pub fn find(&self, name: &str) -> Option<&AxiomReport> {
        if self.name == name {
            return Some(self);
        }
        self.parts.iter().find_map(|p| p.find(name))
    }

    /// Multi-line text summary.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        self.write_text(&mut s, 0);
        s
    }

    fn write_text(&self, s: &mut String, depth: usize) {
        use std::fmt::Write;
        let pad = "  ".repeat(depth);
        let verdict = if self.pass() { "pass" } else { "FAIL" };
        let form = self.form.as_deref().map(|f| format!(" [{f}]")).unwrap_or_default();
        let _ = writeln!(s, "{pad}{}{form}: {verdict} ({} checked, {} failed)", self.name, self.total, self.failure_count);
        for f in &self.failures {
            let _ = writeln!(s, "{pad}  - orientation {} at ({}): {}", f.orientation, f.labels.join(", "), residual_text(&f.residual));
        }
        for p in &self.parts {
            p.write_text(s, depth + 1);
        }
    }
}

fn residual_text(r: &Residual) -> String {
    match r {
        Residual::Vector { side, entries } => {
            let terms: Vec<String> = entries.iter().map(|e| format!("{}·e{}", e.c, e.idx)).collect();
            format!("residual in space {} = {}", side + 1, terms.join(" + "))
        }
        Residual::Matrix { entries } => format!("residual operator with {} nonzero entries", entries.len()),
        Residual::Note { text } => text.clone(),
    }
}
