//! Exhaustive ground truth for small graphs.

use crate::graph::{FoonGraph, UnitId};
use crate::kitchen::Kitchen;
use crate::node::ObjectKey;
use crate::tree::TaskTree;

/// Largest graph the enumeration accepts; it visits every unit subset.
pub const MAX_ORACLE_UNITS: usize = 20;

/// Every inclusion-minimal valid task tree with at most `max_units` units.
///
/// A unit set is valid if all of its units can be executed in some order
/// starting from the kitchen and one of them outputs the goal (the empty set
/// is valid when the goal is already at hand). Each set is reported once, in
/// its canonical order: repeatedly run the lowest-id unit that is ready.
/// Trees come out sorted by size.
///
/// # Panics
///
/// If the graph has more than [`MAX_ORACLE_UNITS`] units.
pub fn oracle_enumerate(
    graph: &FoonGraph,
    goal: &ObjectKey,
    kitchen: &Kitchen,
    max_units: usize,
) -> Vec<TaskTree> {
    let n = graph.unit_count();
    assert!(
        n <= MAX_ORACLE_UNITS,
        "oracle enumeration is limited to {MAX_ORACLE_UNITS} units, graph has {n}"
    );
    let available: Vec<bool> = graph
        .nodes()
        .iter()
        .map(|node| kitchen.contains(&node.key()))
        .collect();
    let goal_id = graph.node_id(goal);

    let mut masks: Vec<u32> = (0..1u32 << n)
        .filter(|m| m.count_ones() as usize <= max_units)
        .collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));

    let mut minimal: Vec<u32> = Vec::new();
    let mut trees = Vec::new();
    for mask in masks {
        if minimal.iter().any(|&m| m & !mask == 0) {
            continue;
        }
        let order = if mask == 0 {
            kitchen.contains(goal).then(Vec::new)
        } else {
            goal_id.and_then(|goal_id| {
                let order = execute(graph, mask, &available)?;
                order
                    .iter()
                    .any(|&u| graph.output_ids(u).contains(&goal_id))
                    .then_some(order)
            })
        };
        if let Some(order) = order {
            minimal.push(mask);
            trees.push(TaskTree::new(order, goal.clone()));
        }
    }
    trees
}

/// Smallest [`layer_depth`] over every valid task tree, minimal or not.
/// Dropping units can make a tree deeper, so the shallowest tree need not be
/// one of those [`oracle_enumerate`] reports.
///
/// # Panics
///
/// If the graph has more than [`MAX_ORACLE_UNITS`] units.
pub fn shallowest_depth(graph: &FoonGraph, goal: &ObjectKey, kitchen: &Kitchen) -> Option<usize> {
    let n = graph.unit_count();
    assert!(
        n <= MAX_ORACLE_UNITS,
        "oracle enumeration is limited to {MAX_ORACLE_UNITS} units, graph has {n}"
    );
    if kitchen.contains(goal) {
        return Some(0);
    }
    let goal_id = graph.node_id(goal)?;
    let available: Vec<bool> = graph
        .nodes()
        .iter()
        .map(|node| kitchen.contains(&node.key()))
        .collect();
    (1..1u32 << n)
        .filter_map(|mask| execute(graph, mask, &available))
        .filter(|order| order.iter().any(|&u| graph.output_ids(u).contains(&goal_id)))
        .filter_map(|order| layer_depth(graph, &order, kitchen, goal))
        .min()
}

/// Canonical execution order of the units in `mask`, if all of them can run.
fn execute(graph: &FoonGraph, mask: u32, available: &[bool]) -> Option<Vec<UnitId>> {
    let mut have = available.to_vec();
    let mut pending: Vec<UnitId> = graph.unit_ids().filter(|u| mask & (1 << u.0) != 0).collect();
    let mut order = Vec::with_capacity(pending.len());
    while !pending.is_empty() {
        let ready = pending
            .iter()
            .position(|&u| graph.input_ids(u).iter().all(|n| have[n.0]))?;
        let unit = pending.remove(ready);
        for output in graph.output_ids(unit) {
            have[output.0] = true;
        }
        order.push(unit);
    }
    Some(order)
}

/// Height of the shallowest derivation of `goal` using only `units`, where
/// kitchen items sit at layer 0 and a unit sits one layer above its deepest
/// input. `None` if the units cannot derive the goal.
pub fn layer_depth(graph: &FoonGraph, units: &[UnitId], kitchen: &Kitchen, goal: &ObjectKey) -> Option<usize> {
    if kitchen.contains(goal) {
        return Some(0);
    }
    let mut level: Vec<Option<usize>> = graph
        .nodes()
        .iter()
        .map(|node| kitchen.contains(&node.key()).then_some(0))
        .collect();
    loop {
        let mut changed = false;
        for &unit in units {
            let inputs: Option<Vec<usize>> = graph.input_ids(unit).iter().map(|n| level[n.0]).collect();
            let Some(inputs) = inputs else { continue };
            let here = 1 + inputs.into_iter().max().unwrap_or(0);
            for output in graph.output_ids(unit) {
                if level[output.0].is_none_or(|l| here < l) {
                    level[output.0] = Some(here);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    graph.node_id(goal).and_then(|id| level[id.0])
}
