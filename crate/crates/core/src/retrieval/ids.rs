use std::collections::HashMap;

use crate::graph::{FoonGraph, NodeId, UnitId};
use crate::kitchen::Kitchen;
use crate::node::ObjectKey;
use crate::tree::TaskTree;

use super::{NotFoundReason, RetrievalResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdsOptions {
    pub depth_limit: usize,
    /// Cache `(node, remaining depth)` results within one iteration. Does not
    /// change the returned tree, only the expansion count.
    pub memoize: bool,
}

pub fn retrieve_ids(
    graph: &FoonGraph,
    goal: &ObjectKey,
    kitchen: &Kitchen,
    depth_limit: usize,
) -> RetrievalResult {
    retrieve_ids_with(
        graph,
        goal,
        kitchen,
        IdsOptions {
            depth_limit,
            memoize: true,
        },
    )
}

/// Iterative deepening over unit layers.
///
/// A node resolves at depth `d` if it is in the kitchen, or if `d > 0` and
/// some producing unit (first in insertion order wins) has every input
/// resolving at `d - 1`. All inputs of a unit are explored even after one
/// fails. Units come out in post-order with repeats dropped.
pub fn retrieve_ids_with(
    graph: &FoonGraph,
    goal: &ObjectKey,
    kitchen: &Kitchen,
    options: IdsOptions,
) -> RetrievalResult {
    if kitchen.contains(goal) {
        return RetrievalResult::found(TaskTree::new(Vec::new(), goal.clone()), 1, Some(0));
    }
    // without a producer only the depth-0 probe of the goal can run
    let Some(goal_id) = graph.node_id(goal) else {
        return RetrievalResult::not_found(NotFoundReason::NoProducer, 1);
    };
    if graph.producers(goal_id).is_empty() {
        return RetrievalResult::not_found(NotFoundReason::NoProducer, 1);
    }

    let mut resolver = Resolver {
        graph,
        available: graph
            .nodes()
            .iter()
            .map(|node| kitchen.contains(&node.key()))
            .collect(),
        memo: options.memoize.then(HashMap::new),
        expansions: 0,
    };
    for depth in 0..=options.depth_limit {
        if let Some(memo) = resolver.memo.as_mut() {
            memo.clear();
        }
        if let Some(units) = resolver.solve(goal_id, depth) {
            let tree = TaskTree::new(units, goal.clone());
            return RetrievalResult::found(tree, resolver.expansions, Some(depth));
        }
    }
    RetrievalResult::not_found(NotFoundReason::DepthLimitExhausted, resolver.expansions)
}

type Memo = HashMap<(NodeId, usize), Option<Vec<UnitId>>>;

struct Resolver<'g> {
    graph: &'g FoonGraph,
    available: Vec<bool>,
    memo: Option<Memo>,
    expansions: u64,
}

impl Resolver<'_> {
    fn solve(&mut self, node: NodeId, depth: usize) -> Option<Vec<UnitId>> {
        self.expansions += 1;
        if self.available[node.0] {
            return Some(Vec::new());
        }
        if depth == 0 {
            return None;
        }
        if let Some(hit) = self.memo.as_ref().and_then(|m| m.get(&(node, depth))) {
            return hit.clone();
        }

        let graph = self.graph;
        let mut result = None;
        for &unit in graph.producers(node) {
            let mut sequence = Vec::new();
            let mut complete = true;
            for &input in graph.input_ids(unit) {
                match self.solve(input, depth - 1) {
                    Some(sub) if complete => extend_unique(&mut sequence, sub),
                    Some(_) => {}
                    None => complete = false,
                }
            }
            if complete {
                extend_unique(&mut sequence, [unit]);
                result = Some(sequence);
                break;
            }
        }

        if let Some(memo) = self.memo.as_mut() {
            memo.insert((node, depth), result.clone());
        }
        result
    }
}

fn extend_unique(sequence: &mut Vec<UnitId>, units: impl IntoIterator<Item = UnitId>) {
    for unit in units {
        if !sequence.contains(&unit) {
            sequence.push(unit);
        }
    }
}

/// Total node expansions of iterative deepening over a uniform tree with
/// branching factor `b`, iterating bounds `0..=d`: the root is expanded
/// `d + 1` times and level `i` nodes `d + 1 - i` times each.
pub fn ids_expansion_formula(b: u64, d: u32) -> u128 {
    (0..=d)
        .map(|i| u128::from(d + 1 - i) * u128::from(b).pow(i))
        .sum()
}
