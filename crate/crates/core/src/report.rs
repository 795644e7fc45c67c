//! Verification reports: one entry per checked tuple, with both sides kept
//! in canonical text form for counterexample reading.

use serde::Serialize;

/// Outcome of one checked identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    /// Basis labels (and, for multi-law checks, a leading law tag)
    /// identifying the checked instance.
    pub tuple: Vec<String>,
    /// Left side in canonical form.
    pub lhs: String,
    /// Right side in canonical form.
    pub rhs: String,
    pub passed: bool,
}

/// Result of running one check over all of its basis tuples.
///
/// Entries are kept in the deterministic tuple order the check iterates in,
/// so two runs over the same data produce identical reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// Stable check name (`E1`..`E6`, `associativity`, `coalgebra`, ...).
    pub check: String,
    pub entries: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>, entries: Vec<CheckEntry>) -> Self {
        VerificationReport {
            check: check.into(),
            entries,
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn num_passed(&self) -> usize {
        self.entries.iter().filter(|e| e.passed).count()
    }

    /// The failing entries, in tuple order.
    pub fn counterexamples(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }
}

/// A report plus whether a failure is fatal for the run it belongs to.
/// Informational checks are reported but never gate an exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub report: VerificationReport,
    pub required: bool,
}

impl CheckOutcome {
    pub fn required(report: VerificationReport) -> Self {
        CheckOutcome {
            report,
            required: true,
        }
    }

    pub fn informational(report: VerificationReport) -> Self {
        CheckOutcome {
            report,
            required: false,
        }
    }
}

/// Aggregate of several checks; `passed` looks only at required ones.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationRun {
    pub outcomes: Vec<CheckOutcome>,
}

impl VerificationRun {
    pub fn passed(&self) -> bool {
        self.outcomes
            .iter()
            .all(|o| !o.required || o.report.passed())
    }

    pub fn push(&mut self, outcome: CheckOutcome) {
        self.outcomes.push(outcome);
    }

    pub fn extend(&mut self, other: VerificationRun) {
        self.outcomes.extend(other.outcomes);
    }

    pub fn find(&self, check: &str) -> Option<&VerificationReport> {
        self.outcomes
            .iter()
            .map(|o| &o.report)
            .find(|r| r.check == check)
    }
}
