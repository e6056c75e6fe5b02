use std::collections::VecDeque;

use crate::graph::{FoonGraph, UnitId};
use crate::kitchen::Kitchen;
use crate::node::ObjectKey;
use crate::tree::{verify_task_tree, TaskTree};

use super::{HeuristicKind, NotFoundReason, RetrievalResult};

/// Picks one producer by the heuristic. Ties go to the lowest unit id.
///
/// # Panics
///
/// If `candidates` is empty or names a unit outside `graph`.
pub fn select_candidate(candidates: &[UnitId], graph: &FoonGraph, heuristic: HeuristicKind) -> UnitId {
    let unit = |id: UnitId| graph.unit(id).expect("candidate unit exists in graph");
    let mut best = *candidates.first().expect("at least one candidate");
    for &id in &candidates[1..] {
        let better = match heuristic {
            HeuristicKind::MaxSuccessRate => {
                let (rate, best_rate) = (
                    unit(id).motion().success_rate(),
                    unit(best).motion().success_rate(),
                );
                rate > best_rate || (rate == best_rate && id < best)
            }
            HeuristicKind::MinInputCount => {
                let (inputs, best_inputs) = (unit(id).inputs().len(), unit(best).inputs().len());
                inputs < best_inputs || (inputs == best_inputs && id < best)
            }
        };
        if better {
            best = id;
        }
    }
    best
}

/// Greedy best-first retrieval without backtracking.
///
/// Items are dequeued breadth-first from the goal; each one missing from the
/// kitchen commits to a single producer chosen by `heuristic`, whose unvisited
/// inputs are enqueued. The committed units are reversed, then stably
/// reordered so every unit runs after the units feeding it.
pub fn retrieve_greedy(
    graph: &FoonGraph,
    goal: &ObjectKey,
    kitchen: &Kitchen,
    heuristic: HeuristicKind,
) -> RetrievalResult {
    if kitchen.contains(goal) {
        return RetrievalResult::found(TaskTree::new(Vec::new(), goal.clone()), 1, None);
    }
    let Some(goal_id) = graph.node_id(goal) else {
        return RetrievalResult::not_found(NotFoundReason::NoProducer, 1);
    };

    let available: Vec<bool> = graph
        .nodes()
        .iter()
        .map(|node| kitchen.contains(&node.key()))
        .collect();
    let mut visited = vec![false; graph.node_count()];
    let mut queue = VecDeque::from([goal_id]);
    visited[goal_id.0] = true;
    let mut committed: Vec<UnitId> = Vec::new();
    let mut expansions = 0;

    while let Some(item) = queue.pop_front() {
        expansions += 1;
        if available[item.0] {
            continue;
        }
        let candidates = graph.producers(item);
        if candidates.is_empty() {
            return RetrievalResult::not_found(NotFoundReason::NoProducer, expansions);
        }
        let chosen = select_candidate(candidates, graph, heuristic);
        if !committed.contains(&chosen) {
            committed.push(chosen);
        }
        for &input in graph.input_ids(chosen) {
            if !visited[input.0] {
                visited[input.0] = true;
                queue.push_back(input);
            }
        }
    }

    committed.reverse();
    let Some(order) = executable_order(graph, committed, &available) else {
        return RetrievalResult::not_found(NotFoundReason::GreedyDeadEnd, expansions);
    };
    let tree = TaskTree::new(order, goal.clone());
    if verify_task_tree(graph, &tree, kitchen, goal).is_err() {
        return RetrievalResult::not_found(NotFoundReason::GreedyDeadEnd, expansions);
    }
    RetrievalResult::found(tree, expansions, None)
}

/// Repeatedly takes the earliest pending unit whose inputs are all at hand.
/// `None` when the remaining units block each other.
fn executable_order(graph: &FoonGraph, mut pending: Vec<UnitId>, available: &[bool]) -> Option<Vec<UnitId>> {
    let mut have = available.to_vec();
    let mut order = Vec::with_capacity(pending.len());
    while !pending.is_empty() {
        let ready = pending
            .iter()
            .position(|&unit| graph.input_ids(unit).iter().all(|n| have[n.0]))?;
        let unit = pending.remove(ready);
        for output in graph.output_ids(unit) {
            have[output.0] = true;
        }
        order.push(unit);
    }
    Some(order)
}
