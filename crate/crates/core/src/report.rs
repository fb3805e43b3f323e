//! Line-oriented validation reports.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FindingKind {
    /// A checked condition that fails.
    Violation,
    /// A fact taken from an input flag and echoed, never computed.
    Declared,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub check: String,
    pub kind: FindingKind,
    pub message: String,
}

/// Outcome of a validator. Empty of violations means the input passed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub findings: Vec<Finding>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn violation(&mut self, check: &str, message: impl Into<String>) {
        self.findings.push(Finding {
            check: check.to_string(),
            kind: FindingKind::Violation,
            message: message.into(),
        });
    }

    pub fn declared(&mut self, check: &str, message: impl Into<String>) {
        self.findings.push(Finding {
            check: check.to_string(),
            kind: FindingKind::Declared,
            message: message.into(),
        });
    }

    pub fn violations(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.kind == FindingKind::Violation)
    }

    pub fn is_valid(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn has(&self, check: &str) -> bool {
        self.violations().any(|f| f.check == check)
    }

    pub fn extend(&mut self, other: Report) {
        self.findings.extend(other.findings);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for finding in &self.findings {
            match finding.kind {
                FindingKind::Violation => writeln!(f, "{}: {}", finding.check, finding.message)?,
                FindingKind::Declared => {
                    writeln!(f, "{} (declared): {}", finding.check, finding.message)?
                }
            }
        }
        Ok(())
    }
}
