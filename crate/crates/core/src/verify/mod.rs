//! Exact joint distributions over `S_n` and exhaustive checks of every
//! identity the library relies on.
//!
//! Nothing here uses tolerances: distributions are compared as integer
//! tables. Checks never panic on a failed identity; they return a
//! [`VerificationReport`] carrying the first counterexample in enumeration
//! order.

mod checks;
mod distribution;
mod enumerate;
mod lemmas;
mod qpoly;

use std::time::Instant;

use serde::Serialize;

pub use checks::{
    check_all, check_boundary, check_denert, check_equidistribution, check_macmahon,
    check_transfer, check_worked_examples, Identity,
};
pub use distribution::{joint_distribution, JointDistribution, StatPair, DEFAULT_MAX_N};
pub use enumerate::{
    all_permutations, factorial, for_each_in_range, next_permutation, rank_lex, split_ranks,
    unrank_lex, Enumerator,
};
pub use lemmas::check_lemma_contracts;
pub use qpoly::QPolynomial;

/// Outcome of one identity at one `(n, r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub n: usize,
    pub r: Option<usize>,
    pub passed: bool,
    /// First failure in enumeration order, replayable through the CLI.
    pub counterexample: Option<String>,
    /// Supplementary finding that is not a failure.
    pub note: Option<String>,
    pub wall_time_us: u64,
    pub examined: u64,
}

impl VerificationReport {
    pub fn line(&self) -> String {
        let r = self.r.map(|r| format!(" r={r}")).unwrap_or_default();
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut out = format!(
            "{status} {} n={}{r} ({} checked, {} us)",
            self.identity, self.n, self.examined, self.wall_time_us
        );
        if let Some(c) = &self.counterexample {
            out.push_str(&format!("\n     counterexample: {c}"));
        }
        if let Some(note) = &self.note {
            out.push_str(&format!("\n     note: {note}"));
        }
        out
    }
}

pub(crate) struct Probe {
    start: Instant,
    pub examined: u64,
    failure: Option<String>,
    note: Option<String>,
}

impl Probe {
    pub fn start() -> Self {
        Probe {
            start: Instant::now(),
            examined: 0,
            failure: None,
            note: None,
        }
    }

    /// Record a failure unless an earlier one is already held.
    pub fn fail(&mut self, msg: impl FnOnce() -> String) {
        if self.failure.is_none() {
            self.failure = Some(msg());
        }
    }

    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.fail(msg);
        }
    }

    pub fn note(&mut self, note: String) {
        self.note = Some(note);
    }

    pub fn finish(self, identity: &str, n: usize, r: Option<usize>) -> VerificationReport {
        VerificationReport {
            identity: identity.to_string(),
            n,
            r,
            passed: self.failure.is_none(),
            counterexample: self.failure,
            note: self.note,
            wall_time_us: self.start.elapsed().as_micros() as u64,
            examined: self.examined,
        }
    }
}
