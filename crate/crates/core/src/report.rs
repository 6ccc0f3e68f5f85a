//! Check entries and the versioned report document.

use serde::Serialize;

use crate::error::Result;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// bounded search result; not a proof either way
    Evidence,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckEntry {
    pub check_id: String,
    pub paper_ref: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// Accumulates entries under a common id prefix.
#[derive(Clone, Debug, Default)]
pub struct Checks {
    prefix: String,
    pub entries: Vec<CheckEntry>,
}

impl Checks {
    pub fn new(prefix: impl Into<String>) -> Self {
        Checks { prefix: prefix.into(), entries: Vec::new() }
    }

    fn id(&self, id: &str) -> String {
        if self.prefix.is_empty() {
            id.to_string()
        } else {
            format!("{}/{id}", self.prefix)
        }
    }

    pub fn push(&mut self, id: &str, paper_ref: &str, verdict: Verdict, witness: Option<String>) {
        self.entries.push(CheckEntry {
            check_id: self.id(id),
            paper_ref: paper_ref.to_string(),
            verdict,
            witness,
            elapsed_ms: None,
        });
    }

    /// Pass iff `ok`; the witness is only rendered on failure.
    pub fn check(&mut self, id: &str, paper_ref: &str, ok: bool, witness: impl FnOnce() -> String) {
        let w = if ok { None } else { Some(witness()) };
        self.push(id, paper_ref, if ok { Verdict::Pass } else { Verdict::Fail }, w);
    }

    /// An evaluation that may itself error; errors become failed entries.
    pub fn check_result(&mut self, id: &str, paper_ref: &str, r: Result<(bool, Option<String>)>) {
        match r {
            Ok((true, _)) => self.push(id, paper_ref, Verdict::Pass, None),
            Ok((false, w)) => self.push(id, paper_ref, Verdict::Fail, Some(w.unwrap_or_else(|| "mismatch".into()))),
            Err(e) => self.push(id, paper_ref, Verdict::Fail, Some(format!("error: {e}"))),
        }
    }

    pub fn fail(&mut self, id: &str, paper_ref: &str, witness: String) {
        self.push(id, paper_ref, Verdict::Fail, Some(witness));
    }

    /// Nests `other` under this prefix.
    pub fn extend(&mut self, other: Checks) {
        for mut e in other.entries {
            e.check_id = self.id(&e.check_id);
            self.entries.push(e);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.verdict != Verdict::Fail)
    }

    pub fn into_entries(self) -> Vec<CheckEntry> {
        self.entries
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub schema_version: u32,
    pub config: serde_json::Value,
    pub summary: Summary,
    pub checks: Vec<CheckEntry>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub evidence: usize,
}

impl Report {
    /// Entries are sorted by id so parallel evaluation order never leaks.
    pub fn new(config: serde_json::Value, mut checks: Vec<CheckEntry>) -> Self {
        checks.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        let mut summary = Summary { total: checks.len(), ..Summary::default() };
        for c in &checks {
            match c.verdict {
                Verdict::Pass => summary.pass += 1,
                Verdict::Fail => summary.fail += 1,
                Verdict::Evidence => summary.evidence += 1,
            }
        }
        Report { schema_version: SCHEMA_VERSION, config, summary, checks }
    }

    pub fn success(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let width = self.checks.iter().map(|c| c.check_id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let v = match c.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Evidence => "evidence",
            };
            out.push_str(&format!("{:<width$}  {:<8}  {}", c.check_id, v, c.paper_ref));
            if let Some(ms) = c.elapsed_ms {
                out.push_str(&format!("  {ms}ms"));
            }
            if let Some(w) = &c.witness {
                out.push_str(&format!("  [{w}]"));
            }
            out.push('\n');
        }
        let s = &self.summary;
        out.push_str(&format!("total {}  pass {}  fail {}  evidence {}\n", s.total, s.pass, s.fail, s.evidence));
        out
    }
}
