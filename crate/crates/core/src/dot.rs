//! Graphviz rendering: object nodes as green circles, motion nodes as red
//! squares. Each unit gets its own motion vertex.

use std::fmt::Write as _;

use crate::graph::FoonGraph;
use crate::node::ObjectNode;

fn escape(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}

fn object_label(node: &ObjectNode) -> String {
    let mut label = escape(node.name());
    if !node.states().is_empty() {
        let states: Vec<&str> = node.states().iter().map(String::as_str).collect();
        let _ = write!(label, "\\n({})", escape(&states.join(", ")));
    }
    if !node.ingredients().is_empty() {
        let items: Vec<&str> = node.ingredients().iter().map(String::as_str).collect();
        let _ = write!(label, "\\n[{}]", escape(&items.join(", ")));
    }
    label
}

pub fn export_dot(graph: &FoonGraph) -> String {
    let mut out = String::from("digraph foon {\n");
    out.push_str("  rankdir=TB;\n");
    out.push_str("  node [style=filled, fontcolor=white, fontname=\"Helvetica\"];\n");

    for (id, node) in graph.nodes().iter().enumerate() {
        let _ = writeln!(
            out,
            "  o{id} [shape=circle, color=green, fillcolor=green, label=\"{}\"];",
            object_label(node)
        );
    }
    for (id, unit) in graph.units().iter().enumerate() {
        let motion = unit.motion();
        let _ = writeln!(
            out,
            "  m{id} [shape=square, color=red, fillcolor=red, label=\"{}\\n{}\"];",
            escape(motion.label()),
            motion.success_rate()
        );
    }
    for unit in graph.unit_ids() {
        for input in graph.input_ids(unit) {
            let _ = writeln!(out, "  o{input} -> m{unit};");
        }
        for output in graph.output_ids(unit) {
            let _ = writeln!(out, "  m{unit} -> o{output};");
        }
    }
    out.push_str("}\n");
    out
}
