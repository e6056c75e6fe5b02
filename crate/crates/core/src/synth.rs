//! Synthetic instances for benchmarking and property tests.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::FoonGraph;
use crate::kitchen::Kitchen;
use crate::node::{MotionNode, ObjectKey, ObjectNode};
use crate::unit::FunctionalUnit;

/// A graph, a kitchen and a goal to retrieve.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: FoonGraph,
    pub kitchen: Kitchen,
    pub goal: ObjectKey,
}

fn tree_node(level: u32, index: u64) -> ObjectNode {
    ObjectNode::with_states(&format!("n{level} {index}"), ["open"]).expect("valid label")
}

/// A complete `b`-ary tree of depth `d` in which every internal node has a
/// single producing unit whose `b` inputs are its children. Leaves are absent
/// from the (empty) kitchen, so the root goal is unreachable.
pub fn uniform_tree(b: u64, d: u32) -> Instance {
    let mut graph = FoonGraph::new();
    let motion = MotionNode::new("combine", 1.0).expect("valid motion");
    for level in 0..d {
        for index in 0..b.pow(level) {
            let children = (0..b).map(|c| tree_node(level + 1, index * b + c)).collect();
            let unit = FunctionalUnit::new(children, motion.clone(), vec![tree_node(level, index)])
                .expect("children are distinct");
            graph.add_unit(unit);
        }
    }
    Instance {
        graph,
        kitchen: Kitchen::new(),
        goal: tree_node(0, 0).key(),
    }
}

#[derive(Debug, Clone)]
pub struct RandomGraphConfig {
    pub max_units: usize,
    pub max_producers: usize,
    /// Chance that a unit outputs an item an earlier unit consumes, or one of
    /// its own inputs, closing a cycle.
    pub cycle_probability: f64,
    pub base_items: usize,
    pub max_inputs: usize,
    pub max_outputs: usize,
    /// Chance that each base item is in the kitchen.
    pub stock_probability: f64,
}

impl Default for RandomGraphConfig {
    fn default() -> Self {
        Self {
            max_units: 12,
            max_producers: 3,
            cycle_probability: 0.2,
            base_items: 6,
            max_inputs: 3,
            max_outputs: 2,
            stock_probability: 0.75,
        }
    }
}

const MOTIONS: &[&str] = &["mix", "cut", "heat", "pour", "stir well"];
const STATES: &[&str] = &["raw", "cooked", "sliced", "in bowl"];
const INGREDIENTS: &[&str] = &["salt", "sugar", "egg"];

fn fresh_item<R: Rng>(rng: &mut R, index: usize) -> ObjectNode {
    let mut node = ObjectNode::new(&format!("item {index}")).expect("valid label");
    for _ in 0..rng.gen_range(0..=2) {
        node.add_state(STATES.choose(rng).expect("non-empty"))
            .expect("valid label");
    }
    if rng.gen_bool(0.2) {
        node.add_ingredient(INGREDIENTS.choose(rng).expect("non-empty"))
            .expect("valid label");
    }
    node
}

/// A random instance respecting the size, producer and cycle limits of
/// `config`. The goal is an item with at least one producer.
pub fn random_instance<R: Rng>(config: &RandomGraphConfig, rng: &mut R) -> Instance {
    let base: Vec<ObjectNode> = (0..config.base_items)
        .map(|i| ObjectNode::with_states(&format!("base {i}"), ["fresh"]).expect("valid label"))
        .collect();
    let mut produced: Vec<ObjectNode> = Vec::new();
    let mut consumed: Vec<ObjectNode> = Vec::new();
    let mut producer_count: HashMap<ObjectKey, usize> = HashMap::new();
    let mut fresh = 0;
    let mut graph = FoonGraph::new();

    let unit_count = rng.gen_range(1..=config.max_units.max(1));
    for _ in 0..unit_count {
        let mut inputs: Vec<ObjectNode> = Vec::new();
        for _ in 0..rng.gen_range(1..=config.max_inputs.max(1)) {
            let pick = if !produced.is_empty() && rng.gen_bool(0.6) {
                produced.choose(rng)
            } else {
                base.choose(rng)
            };
            if let Some(node) = pick {
                if !inputs.contains(node) {
                    inputs.push(node.clone());
                }
            }
        }
        if inputs.is_empty() {
            inputs.push(base[0].clone());
        }

        let mut outputs: Vec<ObjectNode> = Vec::new();
        for _ in 0..rng.gen_range(1..=config.max_outputs.max(1)) {
            let candidate = if rng.gen_bool(config.cycle_probability) {
                let pool = if rng.gen_bool(0.5) { &consumed } else { &inputs };
                pool.choose(rng).cloned()
            } else if rng.gen_bool(0.35) {
                produced.choose(rng).cloned()
            } else {
                None
            };
            let node = candidate
                .filter(|n| producer_count.get(&n.key()).copied().unwrap_or(0) < config.max_producers)
                .unwrap_or_else(|| {
                    fresh += 1;
                    fresh_item(rng, fresh)
                });
            if !outputs.contains(&node) {
                outputs.push(node);
            }
        }

        let rate = f64::from(rng.gen_range(1..=20u32)) / 20.0;
        let motion = MotionNode::new(MOTIONS.choose(rng).expect("non-empty"), rate).expect("valid motion");
        let unit = FunctionalUnit::new(inputs.clone(), motion, outputs.clone()).expect("sides are distinct");
        if let crate::graph::AddOutcome::Added(_) = graph.add_unit(unit) {
            for output in &outputs {
                *producer_count.entry(output.key()).or_default() += 1;
                if !produced.contains(output) {
                    produced.push(output.clone());
                }
            }
            for input in inputs {
                if !consumed.contains(&input) {
                    consumed.push(input);
                }
            }
        }
    }

    let kitchen: Kitchen = base
        .iter()
        .filter(|_| rng.gen_bool(config.stock_probability))
        .map(ObjectNode::key)
        .collect();
    let goal = produced
        .choose(rng)
        .map(ObjectNode::key)
        .expect("at least one unit was added");
    Instance { graph, kitchen, goal }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn uniform_tree_shape() {
        let inst = uniform_tree(2, 3);
        assert_eq!(inst.graph.unit_count(), 1 + 2 + 4);
        assert_eq!(inst.graph.node_count(), 1 + 2 + 4 + 8);
        assert_eq!(inst.graph.producers_of(&inst.goal).len(), 1);
        assert_eq!(uniform_tree(3, 0).graph.unit_count(), 0);
    }

    #[test]
    fn random_instances_respect_limits() {
        let config = RandomGraphConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let inst = random_instance(&config, &mut rng);
            assert!(inst.graph.unit_count() >= 1);
            assert!(inst.graph.unit_count() <= config.max_units);
            let (producers, _) = inst.graph.adjacency();
            assert!(producers.iter().all(|p| p.len() <= config.max_producers));
            assert!(!inst.graph.producers_of(&inst.goal).is_empty());
        }
    }
}
