//! Functional object-oriented networks (FOON): a bipartite graph of object
//! nodes and motion nodes grouped into functional units, merged from
//! per-recipe subgraphs into a universal network, and searched for task trees
//! that produce a goal object from what is available in a kitchen.

pub mod dot;
pub mod format;
pub mod goal;
pub mod graph;
pub mod kitchen;
pub mod node;
pub mod retrieval;
pub mod synth;
pub mod tree;
pub mod unit;

pub use dot::export_dot;
pub use format::{parse_kitchen, parse_subgraph, serialize_graph, serialize_task_tree, ParseError};
pub use goal::{GoalError, GoalSpec};
pub use graph::{merge, AddOutcome, FoonGraph, NodeId, UnitId};
pub use kitchen::{is_available, Kitchen};
pub use node::{normalize_label, LabelError, MotionNode, ObjectKey, ObjectNode};
pub use retrieval::{
    retrieve, retrieve_greedy, retrieve_ids, Algorithm, HeuristicKind, NotFoundReason, Outcome,
    RetrievalResult,
};
pub use tree::{verify_task_tree, TaskTree, Violation};
pub use unit::{FunctionalUnit, UnitError, UnitIdentity};
