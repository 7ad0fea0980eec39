//! Check reports: one entry per identity, with a witness on failure.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Info => "info",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessTerm {
    pub word: Vec<usize>,
    pub coeff: String,
}

/// Where an identity broke and what `lhs - rhs` was there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub location: String,
    pub difference: Vec<WitnessTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub entries: Vec<ReportEntry>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.entries.push(ReportEntry {
            id: id.into(),
            status: Status::Pass,
            witness: None,
            detail: None,
        });
    }

    pub fn fail(&mut self, id: impl Into<String>, witness: Witness) {
        self.entries.push(ReportEntry {
            id: id.into(),
            status: Status::Fail,
            witness: Some(witness),
            detail: None,
        });
    }

    pub fn fail_with(&mut self, id: impl Into<String>, location: impl Into<String>) {
        self.fail(
            id,
            Witness {
                location: location.into(),
                difference: Vec::new(),
            },
        );
    }

    pub fn skip(&mut self, id: impl Into<String>, reason: impl Into<String>) {
        self.entries.push(ReportEntry {
            id: id.into(),
            status: Status::Skipped,
            witness: None,
            detail: Some(reason.into()),
        });
    }

    pub fn info(&mut self, id: impl Into<String>, detail: impl Into<String>) {
        self.entries.push(ReportEntry {
            id: id.into(),
            status: Status::Info,
            witness: None,
            detail: Some(detail.into()),
        });
    }

    /// Record pass, or fail with the given witness.
    pub fn record(&mut self, id: impl Into<String>, witness: Option<Witness>) {
        match witness {
            None => self.pass(id),
            Some(w) => self.fail(id, w),
        }
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    /// True when no entry failed.
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn status_of(&self, id: &str) -> Option<Status> {
        self.entries.iter().find(|e| e.id == id).map(|e| e.status)
    }

    pub fn failed_ids(&self) -> Vec<String> {
        self.entries
            .iter()
            .filter(|e| e.status == Status::Fail)
            .map(|e| e.id.clone())
            .collect()
    }

    pub fn ids_with(&self, status: Status) -> Vec<String> {
        self.entries
            .iter()
            .filter(|e| e.status == status)
            .map(|e| e.id.clone())
            .collect()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(f, "{:<8} {}", e.status, e.id)?;
            if let Some(d) = &e.detail {
                write!(f, "  ({d})")?;
            }
            writeln!(f)?;
            if let Some(w) = &e.witness {
                writeln!(f, "         at {}", w.location)?;
                for t in &w.difference {
                    writeln!(f, "         {:?} -> {}", t.word, t.coeff)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_status_is_conjunction() {
        let mut r = CheckReport::new();
        r.pass("a");
        r.skip("b", "no R");
        r.info("c", "x");
        assert!(r.passed());
        r.fail_with("d", "a = e1");
        assert!(!r.passed());
        assert_eq!(r.failed_ids(), vec!["d".to_string()]);
        assert_eq!(r.status_of("b"), Some(Status::Skipped));
    }
}
