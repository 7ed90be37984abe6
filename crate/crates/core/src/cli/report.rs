//! Check records and their aggregation.

use std::fmt::Display;

use serde::{Deserialize, Serialize};

use super::corpus::Provenance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    /// A recorded discrepancy with the literature; both readings are kept.
    Flagged,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub group: String,
    pub name: String,
    pub computed: String,
    pub expected: String,
    pub provenance: Provenance,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn compare(group: &str, name: impl Into<String>, computed: impl Display, expected: impl Display, provenance: Provenance) -> Check {
        let (computed, expected) = (computed.to_string(), expected.to_string());
        let outcome = if computed == expected { Outcome::Pass } else { Outcome::Fail };
        Check { group: group.into(), name: name.into(), computed, expected, provenance, outcome, note: None }
    }

    pub fn truth(group: &str, name: impl Into<String>, ok: bool, what: &str, provenance: Provenance) -> Check {
        let computed = if ok { what.to_string() } else { format!("not {what}") };
        Check { group: group.into(), name: name.into(), computed, expected: what.into(), provenance, outcome: if ok { Outcome::Pass } else { Outcome::Fail }, note: None }
    }

    /// The printed value disagrees with the computation; flagged, never passed.
    pub fn discrepancy(group: &str, name: impl Into<String>, computed: impl Display, stated: impl Display, note: &str) -> Check {
        let (computed, expected) = (computed.to_string(), stated.to_string());
        let outcome = if computed == expected { Outcome::Pass } else { Outcome::Flagged };
        Check {
            group: group.into(),
            name: name.into(),
            computed,
            expected,
            provenance: Provenance::Discrepancy,
            outcome,
            note: Some(note.into()),
        }
    }

    pub fn error(group: &str, name: impl Into<String>, e: impl Display, provenance: Provenance) -> Check {
        Check {
            group: group.into(),
            name: name.into(),
            computed: format!("error: {e}"),
            expected: "a value".into(),
            provenance,
            outcome: Outcome::Fail,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Check {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub flagged: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub seed: u64,
    pub filter: Option<String>,
    pub summary: Summary,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(seed: u64, filter: Option<String>, checks: Vec<Check>) -> Report {
        let mut s = Summary::default();
        for c in &checks {
            match c.outcome {
                Outcome::Pass => s.pass += 1,
                Outcome::Fail => s.fail += 1,
                Outcome::Flagged => s.flagged += 1,
            }
        }
        Report { seed, filter, summary: s, checks }
    }

    /// 0 when everything passes, 1 on any failure, 2 when only flagged
    /// discrepancies remain.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else if self.summary.flagged > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.outcome {
                Outcome::Pass => "pass",
                Outcome::Fail => "FAIL",
                Outcome::Flagged => "flag",
            };
            out.push_str(&format!("[{tag}] {}/{}: {}", c.group, c.name, c.computed));
            if c.outcome != Outcome::Pass {
                out.push_str(&format!(" (expected {})", c.expected));
            }
            if let Some(n) = &c.note {
                out.push_str(&format!(" -- {n}"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} flagged\n",
            self.summary.pass, self.summary.fail, self.summary.flagged
        ));
        out
    }
}
