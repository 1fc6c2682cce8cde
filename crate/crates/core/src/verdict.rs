//! Verdicts shared by every verifier.

use std::fmt;

use crate::graded::Element;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
    /// The degree window or word-length cap cut the computation short.
    Inconclusive,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::NotApplicable => "not-applicable",
            Outcome::Inconclusive => "inconclusive",
        })
    }
}

/// Replayable evidence attached to a failing check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `left · right` is not in the subspace named `target`.
    Escape {
        left: Element,
        right: Element,
        target: String,
    },
    /// No element of the named span fixes `sample`.
    Unfixable { sample: Element, span: String },
    /// `r` and `a` satisfy the hypotheses of the pair condition but `a ∉ R`.
    Pair { r: Element, a: Element },
    /// A nonzero element of a subspace required to vanish.
    Nonzero { element: Element, space: String },
    /// `left · right = product` lies outside the named arrow set.
    ArrowProduct {
        left: usize,
        right: usize,
        product: usize,
        target: String,
    },
    /// An arrow violating the named requirement.
    Arrow { arrow: usize, requirement: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
    pub witness: Option<Witness>,
    /// Human-readable rendering of `witness`.
    pub witness_text: Option<String>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, outcome: Outcome, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            outcome,
            detail: detail.into(),
            witness: None,
            witness_text: None,
        }
    }

    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(name, Outcome::Pass, detail)
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(name, Outcome::Fail, detail)
    }

    pub fn with_witness(mut self, witness: Witness, text: impl Into<String>) -> Self {
        self.witness = Some(witness);
        self.witness_text = Some(text.into());
        self
    }

    /// Attaches a rendering without a structured witness.
    pub fn with_note(mut self, text: impl Into<String>) -> Self {
        self.witness_text = Some(text.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fail
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} ({})", self.name, self.outcome, self.detail)?;
        if let Some(w) = &self.witness_text {
            write!(f, "; witness: {w}")?;
        }
        Ok(())
    }
}

/// Overall strength of a realization claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Certificate {
    WindowedCertified,
    Refuted,
    InconclusiveWindow,
}

impl Certificate {
    /// Fail dominates inconclusive, which dominates pass.
    pub fn from_checks<'a>(checks: impl IntoIterator<Item = &'a CheckResult>) -> Self {
        let mut out = Certificate::WindowedCertified;
        for c in checks {
            match c.outcome {
                Outcome::Fail => return Certificate::Refuted,
                Outcome::Inconclusive => out = Certificate::InconclusiveWindow,
                Outcome::Pass | Outcome::NotApplicable => {}
            }
        }
        out
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Certificate::WindowedCertified => 0,
            Certificate::Refuted => 1,
            Certificate::InconclusiveWindow => 2,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Certificate::WindowedCertified => "windowed-certified",
            Certificate::Refuted => "refuted",
            Certificate::InconclusiveWindow => "inconclusive-window",
        })
    }
}
