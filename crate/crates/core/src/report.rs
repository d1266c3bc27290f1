//! Identity-check reports shared by every verification suite.

use std::fmt;

use serde::Serialize;

/// Whether a line is a pass/fail assertion or an informational finding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Assertion,
    Finding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub identity: String,
    pub subject: String,
    pub kind: CheckKind,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    /// Record an equality check; both sides are kept only on failure.
    pub fn check_eq<T: PartialEq>(
        &mut self,
        identity: &str,
        subject: impl Into<String>,
        lhs: &T,
        rhs: &T,
        render: impl Fn(&T) -> String,
    ) -> bool {
        let passed = lhs == rhs;
        self.checks.push(Check {
            identity: identity.to_string(),
            subject: subject.into(),
            kind: CheckKind::Assertion,
            passed,
            lhs: (!passed).then(|| render(lhs)),
            rhs: (!passed).then(|| render(rhs)),
            note: None,
        });
        passed
    }

    /// Record a boolean assertion with an optional note.
    pub fn assert(&mut self, identity: &str, subject: impl Into<String>, passed: bool, note: Option<String>) -> bool {
        self.checks.push(Check {
            identity: identity.to_string(),
            subject: subject.into(),
            kind: CheckKind::Assertion,
            passed,
            lhs: None,
            rhs: None,
            note,
        });
        passed
    }

    /// Record an informational finding that never fails the report.
    pub fn finding(&mut self, identity: &str, subject: impl Into<String>, holds: bool, note: Option<String>) {
        self.checks.push(Check {
            identity: identity.to_string(),
            subject: subject.into(),
            kind: CheckKind::Finding,
            passed: holds,
            lhs: None,
            rhs: None,
            note,
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    fn assertions(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.kind == CheckKind::Assertion)
    }

    pub fn passed(&self) -> bool {
        self.assertions().all(|c| c.passed)
    }

    pub fn pass_count(&self) -> usize {
        self.assertions().filter(|c| c.passed).count()
    }

    pub fn fail_count(&self) -> usize {
        self.assertions().filter(|c| !c.passed).count()
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.assertions().find(|c| !c.passed)
    }

    /// Failures of one identity.
    pub fn failures_of<'a>(&'a self, identity: &'a str) -> impl Iterator<Item = &'a Check> + 'a {
        self.assertions()
            .filter(move |c| !c.passed && c.identity == identity)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.title)?;
        for c in &self.checks {
            let tag = match (c.kind, c.passed) {
                (CheckKind::Assertion, true) => "PASS",
                (CheckKind::Assertion, false) => "FAIL",
                (CheckKind::Finding, true) => "HOLDS",
                (CheckKind::Finding, false) => "FAILS",
            };
            write!(f, "{tag} {} [{}]", c.identity, c.subject)?;
            if let (Some(l), Some(r)) = (&c.lhs, &c.rhs) {
                write!(f, " lhs = {l} ; rhs = {r}")?;
            }
            if let Some(n) = &c.note {
                write!(f, " -- {n}")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "# {} passed, {} failed",
            self.pass_count(),
            self.fail_count()
        )
    }
}
