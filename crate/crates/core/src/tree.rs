//! Task trees and their verification against a graph and a kitchen.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{FoonGraph, UnitId};
use crate::kitchen::Kitchen;
use crate::node::ObjectKey;

/// An ordered sequence of units which, executed front to back from the
/// kitchen's items, produces the goal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaskTree {
    pub unit_ids: Vec<UnitId>,
    pub goal: ObjectKey,
}

impl TaskTree {
    pub fn new(unit_ids: Vec<UnitId>, goal: ObjectKey) -> Self {
        Self { unit_ids, goal }
    }

    pub fn len(&self) -> usize {
        self.unit_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.unit_ids.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("position {position}: unit {unit} does not exist in the graph")]
    UnknownUnit { position: usize, unit: UnitId },
    #[error("position {position}: unit {unit} already appears earlier")]
    RepeatedUnit { position: usize, unit: UnitId },
    #[error("position {position}: input {missing} of unit {unit} is neither available nor produced earlier")]
    MissingInput {
        position: usize,
        unit: UnitId,
        missing: ObjectKey,
    },
    #[error("goal {goal} is not produced by any unit in the tree")]
    GoalNotProduced { goal: ObjectKey },
    #[error("goal {goal} is not available and the tree is empty")]
    GoalUnavailable { goal: ObjectKey },
}

impl Violation {
    /// Tree position of the offending unit, when there is one.
    pub fn position(&self) -> Option<usize> {
        match self {
            Violation::UnknownUnit { position, .. }
            | Violation::RepeatedUnit { position, .. }
            | Violation::MissingInput { position, .. } => Some(*position),
            Violation::GoalNotProduced { .. } | Violation::GoalUnavailable { .. } => None,
        }
    }
}

/// Checks executability and goal coverage, reporting the first violation.
pub fn verify_task_tree(
    graph: &FoonGraph,
    tree: &TaskTree,
    kitchen: &Kitchen,
    goal: &ObjectKey,
) -> Result<(), Violation> {
    if tree.unit_ids.is_empty() {
        return if kitchen.contains(goal) {
            Ok(())
        } else {
            Err(Violation::GoalUnavailable { goal: goal.clone() })
        };
    }

    let mut produced: HashSet<ObjectKey> = HashSet::new();
    let mut seen = HashSet::new();
    for (position, &id) in tree.unit_ids.iter().enumerate() {
        let unit = graph
            .unit(id)
            .ok_or(Violation::UnknownUnit { position, unit: id })?;
        if !seen.insert(id) {
            return Err(Violation::RepeatedUnit { position, unit: id });
        }
        for input in unit.inputs() {
            let key = input.key();
            if !kitchen.contains(&key) && !produced.contains(&key) {
                return Err(Violation::MissingInput {
                    position,
                    unit: id,
                    missing: key,
                });
            }
        }
        produced.extend(unit.outputs().iter().map(|o| o.key()));
    }

    if produced.contains(goal) {
        Ok(())
    } else {
        Err(Violation::GoalNotProduced { goal: goal.clone() })
    }
}
