use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::FoonGraph;
use crate::kitchen::Kitchen;
use crate::node::{normalize_label, LabelError, ObjectKey, ObjectNode};

/// A goal as typed by a user: a bare name, or a full key such as
/// `sweet potato{fried}` or `bowl{clean}[salt]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GoalSpec {
    Name(String),
    Exact(ObjectKey),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GoalError {
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error("no object named `{0}`")]
    Unknown(String),
    #[error("goal `{name}` is ambiguous: {}", list(.matches))]
    Ambiguous {
        name: String,
        matches: Vec<ObjectKey>,
    },
}

fn list(keys: &[ObjectKey]) -> String {
    keys.iter().map(ObjectKey::as_str).collect::<Vec<_>>().join(", ")
}

impl FromStr for GoalSpec {
    type Err = GoalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.contains(['{', '[']) {
            return Ok(GoalSpec::Exact(s.parse()?));
        }
        // validates the name
        let node = ObjectNode::new(s)?;
        Ok(GoalSpec::Name(node.name().to_string()))
    }
}

impl fmt::Display for GoalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoalSpec::Name(name) => f.write_str(name),
            GoalSpec::Exact(key) => write!(f, "{key}"),
        }
    }
}

impl GoalSpec {
    /// Exact keys resolve to themselves. A bare name must match exactly one
    /// object among the graph's nodes and the kitchen's items.
    pub fn resolve(&self, graph: &FoonGraph, kitchen: &Kitchen) -> Result<ObjectKey, GoalError> {
        let name = match self {
            GoalSpec::Exact(key) => return Ok(key.clone()),
            GoalSpec::Name(name) => normalize_label(name),
        };
        let matches: BTreeSet<ObjectKey> = graph
            .nodes()
            .iter()
            .map(ObjectNode::key)
            .chain(kitchen.items().iter().cloned())
            .filter(|key| key.name() == name)
            .collect();
        let mut matches: Vec<ObjectKey> = matches.into_iter().collect();
        match matches.len() {
            0 => Err(GoalError::Unknown(name)),
            1 => Ok(matches.remove(0)),
            _ => Err(GoalError::Ambiguous { name, matches }),
        }
    }
}
