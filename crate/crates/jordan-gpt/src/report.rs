//! JSON reports: one record per check, sorted by name.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub claim: String,
    /// Short label of the statement being checked.
    pub anchor: String,
    pub samples: usize,
    /// `null` in JSON when the residual is not finite.
    pub worst_residual: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    /// Passes iff `residual ≤ tolerance`.
    pub fn measured(
        name: &str,
        claim: &str,
        anchor: &str,
        samples: usize,
        residual: f64,
        tolerance: f64,
    ) -> Self {
        let pass = residual <= tolerance;
        Self::verdict(name, claim, anchor, samples, residual, tolerance, pass)
    }

    /// A check whose verdict is decided by the caller.
    pub fn verdict(
        name: &str,
        claim: &str,
        anchor: &str,
        samples: usize,
        residual: f64,
        tolerance: f64,
        pass: bool,
    ) -> Self {
        Check {
            name: name.into(),
            claim: claim.into(),
            anchor: anchor.into(),
            samples,
            worst_residual: residual.is_finite().then_some(residual),
            tolerance,
            pass,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub tolerance: f64,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl Report {
    pub fn new(suite: &str, seed: u64, tolerance: f64, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let pass = checks.iter().all(|c| c.pass);
        Report {
            suite: suite.into(),
            seed,
            tolerance,
            checks,
            pass,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
