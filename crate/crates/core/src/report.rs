//! Per-diagram verdicts shared by the validators and checkers.

use std::fmt;

use crate::kernel::Mor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    /// The two composites of a diagram that should agree.
    Unequal(Box<Mor>, Box<Mor>),
    Error(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Unequal(l, r) => write!(f, "lhs {l} != rhs {r}"),
            Failure::Error(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramCheck {
    pub diagram: String,
    pub failure: Option<Failure>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<DiagramCheck>,
}

pub type ValidityReport = Report;

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failure.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &DiagramCheck> {
        self.checks.iter().filter(|c| c.failure.is_some())
    }

    pub fn first_failure(&self) -> Option<&DiagramCheck> {
        self.failures().next()
    }

    pub fn equal(&mut self, diagram: impl Into<String>, lhs: Mor, rhs: Mor) -> bool {
        let ok = lhs == rhs;
        let failure = (!ok).then(|| Failure::Unequal(Box::new(lhs), Box::new(rhs)));
        self.checks.push(DiagramCheck { diagram: diagram.into(), failure });
        ok
    }

    pub fn holds(&mut self, diagram: impl Into<String>, ok: bool, why: impl fmt::Display) -> bool {
        let failure = (!ok).then(|| Failure::Error(why.to_string()));
        self.checks.push(DiagramCheck { diagram: diagram.into(), failure });
        ok
    }

    pub fn pass(&mut self, diagram: impl Into<String>) {
        self.checks.push(DiagramCheck { diagram: diagram.into(), failure: None });
    }

    pub fn error(&mut self, diagram: impl Into<String>, e: impl fmt::Display) {
        self.checks.push(DiagramCheck { diagram: diagram.into(), failure: Some(Failure::Error(e.to_string())) });
    }

    /// Records `Ok(lhs, rhs)` as an equality check and an `Err` as a failure.
    pub fn eq_result<E: fmt::Display>(&mut self, diagram: impl Into<String>, r: Result<(Mor, Mor), E>) -> bool {
        match r {
            Ok((l, r)) => self.equal(diagram, l, r),
            Err(e) => {
                self.error(diagram, e);
                false
            }
        }
    }

    pub fn extend(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.checks.push(DiagramCheck { diagram: format!("{prefix}/{}", c.diagram), failure: c.failure });
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.failure {
                None => writeln!(f, "pass {}", c.diagram)?,
                Some(fail) => writeln!(f, "FAIL {}: {fail}", c.diagram)?,
            }
        }
        Ok(())
    }
}
