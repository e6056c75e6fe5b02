//! Task-tree retrieval: iterative deepening over AND-OR unit layers, two greedy
//! best-first variants, and an exhaustive oracle for testing.

mod greedy;
mod ids;
pub mod oracle;

use std::fmt;
use std::str::FromStr;

use crate::graph::FoonGraph;
use crate::kitchen::Kitchen;
use crate::node::ObjectKey;
use crate::tree::TaskTree;

pub use greedy::{retrieve_greedy, select_candidate};
pub use ids::{ids_expansion_formula, retrieve_ids, retrieve_ids_with, IdsOptions};
pub use oracle::{layer_depth, oracle_enumerate, shallowest_depth};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NotFoundReason {
    /// The goal, or an item a greedy run committed to, has no producing unit.
    NoProducer,
    DepthLimitExhausted,
    /// The greedy choices could not be arranged into an executable tree.
    GreedyDeadEnd,
}

impl fmt::Display for NotFoundReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotFoundReason::NoProducer => "no-producer",
            NotFoundReason::DepthLimitExhausted => "depth-limit-exhausted",
            NotFoundReason::GreedyDeadEnd => "greedy-dead-end",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Found(TaskTree),
    NotFound(NotFoundReason),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetrievalResult {
    pub outcome: Outcome,
    /// Resolution calls (IDS) or queue dequeues (greedy).
    pub expansions: u64,
    /// Depth bound at which IDS succeeded; `None` for greedy runs and failures.
    pub depth: Option<usize>,
}

impl RetrievalResult {
    pub(crate) fn found(tree: TaskTree, expansions: u64, depth: Option<usize>) -> Self {
        Self {
            outcome: Outcome::Found(tree),
            expansions,
            depth,
        }
    }

    pub(crate) fn not_found(reason: NotFoundReason, expansions: u64) -> Self {
        Self {
            outcome: Outcome::NotFound(reason),
            expansions,
            depth: None,
        }
    }

    pub fn tree(&self) -> Option<&TaskTree> {
        match &self.outcome {
            Outcome::Found(tree) => Some(tree),
            Outcome::NotFound(_) => None,
        }
    }

    pub fn unit_count(&self) -> Option<usize> {
        self.tree().map(TaskTree::len)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HeuristicKind {
    /// Prefer the producer whose motion has the highest success rate.
    MaxSuccessRate,
    /// Prefer the producer with the fewest input objects.
    MinInputCount,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Ids,
    H1,
    H2,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Ids, Algorithm::H1, Algorithm::H2];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Ids => "ids",
            Algorithm::H1 => "h1",
            Algorithm::H2 => "h2",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Algorithm::Ids => "Iterative Deepening Search",
            Algorithm::H1 => "Heuristic 1",
            Algorithm::H2 => "Heuristic 2",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ids" => Ok(Algorithm::Ids),
            "h1" => Ok(Algorithm::H1),
            "h2" => Ok(Algorithm::H2),
            other => Err(format!("unknown algorithm `{other}` (expected ids, h1 or h2)")),
        }
    }
}

/// IDS depth bound used when none is given: one layer per unit always suffices.
pub fn default_depth_limit(graph: &FoonGraph) -> usize {
    graph.unit_count()
}

pub fn retrieve(
    graph: &FoonGraph,
    goal: &ObjectKey,
    kitchen: &Kitchen,
    algorithm: Algorithm,
    depth_limit: Option<usize>,
) -> RetrievalResult {
    match algorithm {
        Algorithm::Ids => retrieve_ids(
            graph,
            goal,
            kitchen,
            depth_limit.unwrap_or_else(|| default_depth_limit(graph)),
        ),
        Algorithm::H1 => retrieve_greedy(graph, goal, kitchen, HeuristicKind::MaxSuccessRate),
        Algorithm::H2 => retrieve_greedy(graph, goal, kitchen, HeuristicKind::MinInputCount),
    }
}
