//! Outcomes of exhaustive checks.

use alloc::string::String;
use alloc::vec::Vec;

use crate::monteiro::ThreeValue;

/// A value bound in a counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Element(String),
    Object(String),
    Set(Vec<String>),
    Pair { lower: Vec<String>, upper: Vec<String> },
    Grade(ThreeValue),
}

/// Variable bindings under which a law failed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Counterexample {
    pub bindings: Vec<(String, Witness)>,
}

impl Counterexample {
    pub fn with(mut self, name: &str, value: Witness) -> Self {
        self.bindings.push((name.into(), value));
        self
    }

    pub fn get(&self, name: &str) -> Option<&Witness> {
        self.bindings.iter().find(|(n, _)| n == name).map(|(_, w)| w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

/// One named law, the number of cases examined, and the first failure if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: u64,
    pub counterexample: Option<Counterexample>,
}

impl Check {
    pub fn new(name: &str) -> Self {
        Check {
            name: name.into(),
            cases: 0,
            counterexample: None,
        }
    }

    /// Counts one case; on the first failing case, keeps its counterexample.
    pub fn record(&mut self, holds: bool, witness: impl FnOnce() -> Counterexample) {
        self.cases += 1;
        if !holds && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    pub fn status(&self) -> Status {
        if self.counterexample.is_some() {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }

    /// Prefixes every check name with `prefix.`.
    pub fn scoped(mut self, prefix: &str) -> Self {
        for c in &mut self.checks {
            c.name = alloc::format!("{prefix}.{}", c.name);
        }
        self
    }
}

impl FromIterator<Check> for Report {
    fn from_iter<I: IntoIterator<Item = Check>>(iter: I) -> Self {
        Report {
            checks: iter.into_iter().collect(),
        }
    }
}
