use std::fmt;

use serde::Serialize;

use crate::graph::Vertex;

/// The vertex or vertex pair that makes a condition fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Vertex(Vertex),
    Pair(Vertex, Vertex),
}

impl Witness {
    pub fn vertices(self) -> Vec<Vertex> {
        match self {
            Witness::Vertex(v) => vec![v],
            Witness::Pair(u, v) => vec![u, v],
        }
    }

    pub fn map(self, f: impl Fn(Vertex) -> Vertex) -> Witness {
        match self {
            Witness::Vertex(v) => Witness::Vertex(f(v)),
            Witness::Pair(u, v) => Witness::Pair(f(u), f(v)),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Vertex(v) => write!(f, "{v}"),
            Witness::Pair(u, v) => write!(f, "({u}, {v})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub index: usize,
    pub statement: &'static str,
    pub holds: bool,
    pub witness: Option<Witness>,
}

/// Verdicts for a numbered list of conditions. Every condition is evaluated,
/// and each failing one carries a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub conditions: Vec<Condition>,
    pub overall: bool,
}

impl ConditionReport {
    pub(crate) fn new() -> Self {
        ConditionReport { conditions: Vec::new(), overall: true }
    }

    /// `failure` is `None` when the condition holds.
    pub(crate) fn push(&mut self, statement: &'static str, failure: Option<Witness>) {
        let holds = failure.is_none();
        self.overall &= holds;
        self.conditions.push(Condition {
            index: self.conditions.len() + 1,
            statement,
            holds,
            witness: failure,
        });
    }

    pub fn condition(&self, index: usize) -> &Condition {
        &self.conditions[index - 1]
    }

    pub fn first_failure(&self) -> Option<&Condition> {
        self.conditions.iter().find(|c| !c.holds)
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.conditions {
            match c.witness {
                None => writeln!(f, "({}) {}: holds", c.index, c.statement)?,
                Some(w) => writeln!(f, "({}) {}: FAILS at {w}", c.index, c.statement)?,
            }
        }
        write!(f, "overall: {}", self.overall)
    }
}
