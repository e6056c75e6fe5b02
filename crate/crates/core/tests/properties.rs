use std::collections::{BTreeSet, HashMap};

use proptest::collection::vec;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use foon_core::retrieval::{
    ids_expansion_formula, layer_depth, oracle_enumerate, retrieve_ids_with, select_candidate,
    shallowest_depth, IdsOptions,
};
use foon_core::synth::{random_instance, uniform_tree, Instance, RandomGraphConfig};
use foon_core::{
    export_dot, merge, parse_subgraph, retrieve_greedy, retrieve_ids, serialize_graph,
    serialize_task_tree, verify_task_tree, FoonGraph, FunctionalUnit, HeuristicKind, MotionNode,
    ObjectNode, UnitId,
};

fn arb_object() -> impl Strategy<Value = ObjectNode> {
    (
        prop::sample::select(vec!["a", "b", "sweet potato", "Bowl"]),
        prop::sample::subsequence(vec!["x", "y", "in pan"], 0..=2),
        prop::sample::subsequence(vec!["salt", "oil"], 0..=1),
    )
        .prop_map(|(name, states, ingredients)| {
            let mut node = ObjectNode::with_states(name, states).unwrap();
            for ingredient in ingredients {
                node.add_ingredient(ingredient).unwrap();
            }
            node
        })
}

fn distinct(nodes: Vec<ObjectNode>) -> Vec<ObjectNode> {
    let mut seen = BTreeSet::new();
    nodes.into_iter().filter(|n| seen.insert(n.key())).collect()
}

fn arb_unit() -> impl Strategy<Value = FunctionalUnit> {
    (
        vec(arb_object(), 1..=3),
        prop::sample::select(vec!["m", "stir well"]),
        0u32..=10,
        vec(arb_object(), 1..=2),
    )
        .prop_map(|(inputs, label, rate, outputs)| {
            FunctionalUnit::new(
                distinct(inputs),
                MotionNode::new(label, f64::from(rate) / 10.0).unwrap(),
                distinct(outputs),
            )
            .unwrap()
        })
}

fn arb_graph(max: usize) -> impl Strategy<Value = FoonGraph> {
    vec(arb_unit(), 0..=max).prop_map(FoonGraph::from_units)
}

fn instance(seed: u64) -> Instance {
    random_instance(&RandomGraphConfig::default(), &mut ChaCha8Rng::seed_from_u64(seed))
}

fn identity_set(graph: &FoonGraph) -> BTreeSet<foon_core::UnitIdentity> {
    graph.units().iter().map(FunctionalUnit::identity).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn merge_is_idempotent(g in arb_graph(20)) {
        let merged = merge([&g, &g]);
        prop_assert_eq!(merged.units(), g.units());
    }

    #[test]
    fn merge_unit_set_ignores_order(a in arb_graph(15), b in arb_graph(15)) {
        prop_assert_eq!(identity_set(&merge([&a, &b])), identity_set(&merge([&b, &a])));
    }

    #[test]
    fn unit_count_equals_distinct_tuples(units in vec(arb_unit(), 0..=50)) {
        let tuples: BTreeSet<(Vec<String>, String, Vec<String>)> = units
            .iter()
            .map(|u| {
                let mut inputs: Vec<String> = u.inputs().iter().map(|n| n.to_string()).collect();
                let mut outputs: Vec<String> = u.outputs().iter().map(|n| n.to_string()).collect();
                inputs.sort();
                outputs.sort();
                (inputs, u.motion().label().to_string(), outputs)
            })
            .collect();
        prop_assert_eq!(FoonGraph::from_units(units).unit_count(), tuples.len());
    }

    #[test]
    fn duplicates_keep_the_highest_rate(units in vec(arb_unit(), 1..=30)) {
        let graph = FoonGraph::from_units(units.clone());
        let mut best: HashMap<_, f64> = HashMap::new();
        for u in &units {
            let rate = best.entry(u.identity()).or_insert(0.0);
            *rate = rate.max(u.motion().success_rate());
        }
        for u in graph.units() {
            prop_assert_eq!(u.motion().success_rate(), best[&u.identity()]);
        }
    }

    #[test]
    fn indexes_match_a_rebuild_from_scratch(units in vec(arb_unit(), 0..=30)) {
        let graph = FoonGraph::from_units(units);
        let mut producers: HashMap<String, Vec<UnitId>> = HashMap::new();
        let mut consumers: HashMap<String, Vec<UnitId>> = HashMap::new();
        for (i, unit) in graph.units().iter().enumerate() {
            for n in unit.inputs() {
                consumers.entry(n.to_string()).or_default().push(UnitId(i));
            }
            for n in unit.outputs() {
                producers.entry(n.to_string()).or_default().push(UnitId(i));
            }
        }
        let (stored_producers, stored_consumers) = graph.adjacency();
        let none = Vec::new();
        prop_assert_eq!(stored_producers.len(), graph.node_count());
        for (id, node) in graph.nodes().iter().enumerate() {
            let key = node.to_string();
            prop_assert_eq!(&stored_producers[id], producers.get(&key).unwrap_or(&none));
            prop_assert_eq!(&stored_consumers[id], consumers.get(&key).unwrap_or(&none));
        }
    }

    #[test]
    fn serialization_round_trips(g in arb_graph(20)) {
        let text = serialize_graph(&g);
        let again = FoonGraph::from_units(parse_subgraph(&text).unwrap());
        prop_assert_eq!(again.units(), g.units());
        prop_assert_eq!(again.nodes(), g.nodes());
        prop_assert_eq!(again.adjacency(), g.adjacency());
        prop_assert_eq!(parse_subgraph(&text).unwrap(), parse_subgraph(&text).unwrap());
    }

    #[test]
    fn dot_edges_are_bipartite(g in arb_graph(20)) {
        let dot = export_dot(&g);
        let framed = dot.starts_with("digraph foon {\n") && dot.ends_with("}\n");
        prop_assert!(framed);
        let mut edges = 0;
        for line in dot.lines().filter(|l| l.contains("->")) {
            let (from, to) = line.trim().trim_end_matches(';').split_once(" -> ").unwrap();
            let kinds = (from.as_bytes()[0], to.as_bytes()[0]);
            prop_assert!(kinds == (b'o', b'm') || kinds == (b'm', b'o'), "{}", line);
            edges += 1;
        }
        let expected: usize = g.units().iter().map(|u| u.inputs().len() + u.outputs().len()).sum();
        prop_assert_eq!(edges, expected);
        prop_assert_eq!(dot.matches("shape=circle").count(), g.node_count());
        prop_assert_eq!(dot.matches("shape=square").count(), g.unit_count());
    }

    #[test]
    fn found_trees_verify(seed in any::<u64>()) {
        let Instance { graph, kitchen, goal } = instance(seed);
        let results = [
            retrieve_ids(&graph, &goal, &kitchen, graph.unit_count()),
            retrieve_greedy(&graph, &goal, &kitchen, HeuristicKind::MaxSuccessRate),
            retrieve_greedy(&graph, &goal, &kitchen, HeuristicKind::MinInputCount),
        ];
        for result in results {
            if let Some(tree) = result.tree() {
                prop_assert_eq!(verify_task_tree(&graph, tree, &kitchen, &goal), Ok(()));
            }
        }
    }

    #[test]
    fn ids_matches_the_oracle(seed in any::<u64>()) {
        ids_agrees_with_the_oracle(seed)?;
    }

    #[test]
    fn memoization_only_changes_the_count(seed in any::<u64>()) {
        let Instance { graph, kitchen, goal } = instance(seed);
        let limit = graph.unit_count().min(5);
        let run = |memoize| retrieve_ids_with(&graph, &goal, &kitchen, IdsOptions { depth_limit: limit, memoize });
        let (with, without) = (run(true), run(false));
        prop_assert_eq!(with.outcome, without.outcome);
        prop_assert_eq!(with.depth, without.depth);
    }

    #[test]
    fn expansions_grow_with_the_depth_limit(seed in any::<u64>()) {
        let Instance { graph, kitchen, goal } = instance(seed);
        let counts: Vec<u64> = (0..=graph.unit_count())
            .map(|limit| retrieve_ids(&graph, &goal, &kitchen, limit).expansions)
            .collect();
        prop_assert!(counts.windows(2).all(|w| w[0] <= w[1]), "{:?}", counts);
    }

    #[test]
    fn retrieval_is_deterministic(seed in any::<u64>()) {
        let first = instance(seed);
        let second = instance(seed);
        let serialize = |inst: &Instance| -> Vec<Option<String>> {
            [
                retrieve_ids(&inst.graph, &inst.goal, &inst.kitchen, inst.graph.unit_count()),
                retrieve_greedy(&inst.graph, &inst.goal, &inst.kitchen, HeuristicKind::MaxSuccessRate),
                retrieve_greedy(&inst.graph, &inst.goal, &inst.kitchen, HeuristicKind::MinInputCount),
            ]
            .iter()
            .map(|r| r.tree().map(|t| serialize_task_tree(&inst.graph, t, &inst.kitchen, None).unwrap()))
            .collect()
        };
        prop_assert_eq!(serialize(&first), serialize(&second));
    }

    #[test]
    fn selector_laws(units in vec(arb_unit(), 1..=12)) {
        let graph = FoonGraph::from_units(units);
        let candidates: Vec<UnitId> = graph.unit_ids().collect();
        let rates: Vec<f64> = graph.units().iter().map(|u| u.motion().success_rate()).collect();
        let sizes: Vec<usize> = graph.units().iter().map(|u| u.inputs().len()).collect();

        let best_rate = rates.iter().copied().fold(f64::MIN, f64::max);
        let first_best = rates.iter().position(|&r| r == best_rate).unwrap();
        prop_assert_eq!(
            select_candidate(&candidates, &graph, HeuristicKind::MaxSuccessRate),
            UnitId(first_best)
        );

        let fewest = *sizes.iter().min().unwrap();
        let first_fewest = sizes.iter().position(|&s| s == fewest).unwrap();
        prop_assert_eq!(
            select_candidate(&candidates, &graph, HeuristicKind::MinInputCount),
            UnitId(first_fewest)
        );
    }
}

fn ids_agrees_with_the_oracle(seed: u64) -> Result<(), TestCaseError> {
    let Instance { graph, kitchen, goal } = instance(seed);
    let trees = oracle_enumerate(&graph, &goal, &kitchen, graph.unit_count());
    let shallowest = shallowest_depth(&graph, &goal, &kitchen);
    prop_assert_eq!(shallowest.is_some(), !trees.is_empty());
    // minimal trees are a subset of all trees, so never shallower
    let minimal = trees
        .iter()
        .filter_map(|t| layer_depth(&graph, &t.unit_ids, &kitchen, &goal))
        .min();
    prop_assert!(minimal >= shallowest);

    let full = retrieve_ids(&graph, &goal, &kitchen, graph.unit_count());
    prop_assert_eq!(full.depth, shallowest);
    for limit in 0..=graph.unit_count() {
        let bounded = retrieve_ids(&graph, &goal, &kitchen, limit);
        prop_assert_eq!(bounded.tree().is_some(), shallowest.is_some_and(|m| m <= limit));
    }
    if let Some(depth) = full.depth.filter(|&d| d > 0) {
        prop_assert!(retrieve_ids(&graph, &goal, &kitchen, depth - 1).tree().is_none());
    }
    Ok(())
}

/// The shallowest tree here is not inclusion-minimal: removing a unit from it
/// leaves a valid but deeper tree.
#[test]
fn shallowest_tree_can_be_non_minimal() {
    let seed = 2578232884301807871;
    ids_agrees_with_the_oracle(seed).unwrap();
    let Instance { graph, kitchen, goal } = instance(seed);
    let minimal = oracle_enumerate(&graph, &goal, &kitchen, graph.unit_count())
        .iter()
        .filter_map(|t| layer_depth(&graph, &t.unit_ids, &kitchen, &goal))
        .min();
    assert_eq!(minimal, Some(4));
    assert_eq!(shallowest_depth(&graph, &goal, &kitchen), Some(3));
}

/// Counts expansions level by level: iteration `k` expands every node on
/// levels `0..=k` once.
fn brute_force_expansions(b: u64, d: u32) -> u128 {
    (0..=d)
        .map(|k| (0..=k).map(|level| u128::from(b).pow(level)).sum::<u128>())
        .sum()
}

#[test]
fn expansion_formula_matches_simulation() {
    for b in [2u64, 3] {
        for d in 0..=5u32 {
            let inst = uniform_tree(b, d);
            let result = retrieve_ids_with(
                &inst.graph,
                &inst.goal,
                &inst.kitchen,
                IdsOptions { depth_limit: d as usize, memoize: false },
            );
            assert!(result.tree().is_none());
            let formula = ids_expansion_formula(b, d);
            assert_eq!(u128::from(result.expansions), formula, "b={b} d={d}");
            assert_eq!(brute_force_expansions(b, d), formula, "b={b} d={d}");
        }
    }
    assert_eq!(brute_force_expansions(2, 2), 11);
    assert_eq!(brute_force_expansions(3, 3), 58);
}
