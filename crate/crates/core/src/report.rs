//! Structured verdicts shared by every check in the crate.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::matrix::Matrix;

/// A matrix attached to a check, rendered exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl Witness {
    pub fn new<F: Field>(label: impl Into<String>, m: &Matrix<F>) -> Self {
        Witness {
            label: label.into(),
            rows: m.rows(),
            cols: m.cols(),
            entries: m.render_rows(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), passed: true, detail: String::new(), witnesses: vec![] }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed: false, detail: detail.into(), witnesses: vec![] }
    }

    pub fn verdict(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into(), witnesses: vec![] }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    pub fn with_witness<F: Field>(mut self, label: impl Into<String>, m: &Matrix<F>) -> Self {
        self.witnesses.push(Witness::new(label, m));
        self
    }

    /// Exact equality of two matrices; on failure both sides and their
    /// difference are attached.
    pub fn equal<F: Field>(name: impl Into<String>, lhs: &Matrix<F>, rhs: &Matrix<F>) -> Self {
        let name = name.into();
        if lhs.shape() != rhs.shape() {
            return Check::fail(name, format!("shapes differ: {:?} vs {:?}", lhs.shape(), rhs.shape()))
                .with_witness("lhs", lhs)
                .with_witness("rhs", rhs);
        }
        if lhs == rhs {
            return Check::pass(name);
        }
        Check::fail(name, "sides differ")
            .with_witness("lhs", lhs)
            .with_witness("rhs", rhs)
            .with_witness("defect", &lhs.sub(rhs))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), ..Default::default() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    /// Appends the checks and notes of `other`, prefixing check names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}: {}", c.name);
            }
            self.checks.push(c);
        }
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.title)?;
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            let mut line = format!("[{mark}] {}", c.name);
            if !c.detail.is_empty() {
                let _ = write!(line, " ({})", c.detail);
            }
            writeln!(f, "{line}")?;
            for w in &c.witnesses {
                writeln!(f, "    {} ({}x{}):", w.label, w.rows, w.cols)?;
                for row in &w.entries {
                    writeln!(f, "      [{}]", row.join(", "))?;
                }
            }
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        let total = self.checks.len();
        let ok = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "{ok}/{total} checks passed")
    }
}
