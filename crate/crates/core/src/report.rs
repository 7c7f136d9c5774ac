//! Pass/fail reports produced by the verification routines.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub claim: String,
    pub status: Status,
    /// Number of individual identities checked.
    pub checked: usize,
    /// One entry per counterexample.
    pub details: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<Report>,
}

impl Report {
    pub fn new(claim: impl Into<String>) -> Report {
        Report {
            claim: claim.into(),
            status: Status::Pass,
            checked: 0,
            details: Vec::new(),
            notes: Vec::new(),
            parts: Vec::new(),
        }
    }

    /// Counts one check; `detail` is only evaluated on failure.
    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.details.push(detail());
            self.status = Status::Fail;
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn add_part(&mut self, part: Report) {
        self.checked += part.checked;
        if part.status == Status::Fail {
            self.status = Status::Fail;
        }
        self.parts.push(part);
    }

    pub fn with_parts(claim: impl Into<String>, parts: impl IntoIterator<Item = Report>) -> Report {
        let mut r = Report::new(claim);
        for p in parts {
            r.add_part(p);
        }
        r
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Human-readable table, one row per report and nested part.
    pub fn to_table(&self) -> String {
        let mut rows = Vec::new();
        self.collect_rows(0, &mut rows);
        let width = rows.iter().map(|(c, _, _)| c.len()).max().unwrap_or(5).max(5);
        let mut out = String::new();
        let _ = writeln!(out, "{:<width$}  {:<6}  {:>7}", "claim", "status", "checked");
        let _ = writeln!(out, "{}", "-".repeat(width + 17));
        for (claim, status, checked) in rows {
            let _ = writeln!(out, "{claim:<width$}  {status:<6}  {checked:>7}");
        }
        self.collect_text(&mut out);
        out
    }

    fn collect_rows(&self, depth: usize, rows: &mut Vec<(String, &'static str, usize)>) {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        rows.push((format!("{}{}", "  ".repeat(depth), self.claim), status, self.checked));
        for p in &self.parts {
            p.collect_rows(depth + 1, rows);
        }
    }

    fn collect_text(&self, out: &mut String) {
        for n in &self.notes {
            let _ = writeln!(out, "note [{}]: {n}", self.claim);
        }
        for d in &self.details {
            let _ = writeln!(out, "counterexample [{}]: {d}", self.claim);
        }
        for p in &self.parts {
            p.collect_text(out);
        }
    }
}
