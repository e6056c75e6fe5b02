//! Line-oriented, tab-separated text formats for subgraphs, kitchens and task
//! trees.
//!
//! ```text
//! # comment
//! O	water
//! S	liquid
//! O	bowl
//! S	clean	{salt,sugar}
//! M	pour	0.9
//! O	bowl
//! S	filled	{salt,sugar,water}
//! //
//! ```
//!
//! Objects listed before the `M` line are inputs, objects after it outputs,
//! and `//` closes the unit. Kitchen files use only `O` and `S` records.

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::graph::FoonGraph;
use crate::kitchen::Kitchen;
use crate::node::{split_list, LabelError, MotionNode, ObjectNode};
use crate::tree::{verify_task_tree, TaskTree, Violation};
use crate::unit::{FunctionalUnit, UnitError};

pub const SUBGRAPH_HEADER: &str = "# foon subgraph";
pub const TASK_TREE_HEADER: &str = "# foon task tree";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub file: String,
    pub line: usize,
    pub reason: String,
}

impl ParseError {
    fn at(line: usize, reason: impl Into<String>) -> Self {
        Self {
            file: String::new(),
            line,
            reason: reason.into(),
        }
    }

    /// Attaches the name of the file the text came from.
    pub fn in_file(mut self, file: impl Into<String>) -> Self {
        self.file = file.into();
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.file.is_empty() {
            write!(f, "line {}: {}", self.line, self.reason)
        } else {
            write!(f, "{}:{}: {}", self.file, self.line, self.reason)
        }
    }
}

/// Non-blank records with comments stripped, paired with 1-based line numbers.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or_default().trim();
        (!content.is_empty()).then(|| (i + 1, content.split('\t').collect()))
    })
}

fn label_error(line: usize, err: LabelError) -> ParseError {
    ParseError::at(line, err.to_string())
}

fn object_record(line: usize, fields: &[&str]) -> Result<ObjectNode, ParseError> {
    match fields {
        [_, name] => ObjectNode::new(name).map_err(|e| label_error(line, e)),
        _ => Err(ParseError::at(line, "object line must be `O<TAB>name`")),
    }
}

fn apply_state(node: &mut ObjectNode, line: usize, fields: &[&str]) -> Result<(), ParseError> {
    let (state, ingredients) = match fields {
        [_, state] => (*state, None),
        [_, state, ingredients] => (*state, Some(*ingredients)),
        _ => {
            return Err(ParseError::at(
                line,
                "state line must be `S<TAB>state[<TAB>{ingredients}]`",
            ))
        }
    };
    if state.trim().is_empty() {
        if ingredients.is_none() {
            return Err(ParseError::at(line, "state line has an empty state"));
        }
    } else {
        node.add_state(state).map_err(|e| label_error(line, e))?;
    }
    if let Some(field) = ingredients {
        let body = field
            .trim()
            .strip_prefix('{')
            .and_then(|f| f.strip_suffix('}'))
            .ok_or_else(|| {
                ParseError::at(line, format!("ingredient set `{field}` must be wrapped in braces"))
            })?;
        for ingredient in split_list(body) {
            node.add_ingredient(ingredient)
                .map_err(|e| label_error(line, e))?;
        }
    }
    Ok(())
}

fn motion_record(line: usize, fields: &[&str]) -> Result<MotionNode, ParseError> {
    let (label, rate) = match fields {
        [_, label] => (*label, 1.0),
        [_, label, rate] => {
            let rate: f64 = rate.trim().parse().map_err(|_| {
                ParseError::at(line, format!("success rate `{rate}` is not a number"))
            })?;
            (*label, rate)
        }
        _ => return Err(ParseError::at(line, "motion line must be `M<TAB>label[<TAB>rate]`")),
    };
    MotionNode::new(label, rate).map_err(|e| label_error(line, e))
}

#[derive(Default)]
struct UnitBlock {
    last_line: usize,
    inputs: Vec<(ObjectNode, usize)>,
    motion: Option<(MotionNode, usize)>,
    outputs: Vec<(ObjectNode, usize)>,
    current: Option<(ObjectNode, usize)>,
}

impl UnitBlock {
    fn is_empty(&self) -> bool {
        self.last_line == 0
    }

    fn flush_object(&mut self) {
        if let Some(object) = self.current.take() {
            if self.motion.is_some() {
                self.outputs.push(object);
            } else {
                self.inputs.push(object);
            }
        }
    }

    fn finish(mut self, line: usize) -> Result<FunctionalUnit, ParseError> {
        self.flush_object();
        let Some((motion, _)) = self.motion else {
            return Err(ParseError::at(line, "unit has no motion line"));
        };
        let line_of = |side: &[(ObjectNode, usize)], key| {
            side.iter()
                .rev()
                .find(|(node, _)| node.key() == key)
                .map_or(line, |&(_, l)| l)
        };
        let inputs: Vec<_> = self.inputs.iter().map(|(n, _)| n.clone()).collect();
        let outputs: Vec<_> = self.outputs.iter().map(|(n, _)| n.clone()).collect();
        FunctionalUnit::new(inputs, motion, outputs).map_err(|err| {
            let at = match &err {
                UnitError::DuplicateInput(key) => line_of(&self.inputs, key.clone()),
                UnitError::DuplicateOutput(key) => line_of(&self.outputs, key.clone()),
                UnitError::NoInputs | UnitError::NoOutputs => line,
            };
            ParseError::at(at, err.to_string())
        })
    }
}

/// Parses a subgraph file into its units, in file order.
pub fn parse_subgraph(text: &str) -> Result<Vec<FunctionalUnit>, ParseError> {
    let mut units = Vec::new();
    let mut block = UnitBlock::default();

    for (line, fields) in records(text) {
        match fields[0] {
            "//" if fields.len() == 1 => {
                let done = std::mem::take(&mut block);
                units.push(done.finish(line)?);
                continue;
            }
            "O" => {
                block.flush_object();
                block.current = Some((object_record(line, &fields)?, line));
            }
            "S" => {
                let Some((node, _)) = block.current.as_mut() else {
                    return Err(ParseError::at(line, "state line not preceded by an object line"));
                };
                apply_state(node, line, &fields)?;
            }
            "M" => {
                if block.motion.is_some() {
                    return Err(ParseError::at(line, "unit has more than one motion line"));
                }
                block.flush_object();
                if block.inputs.is_empty() {
                    return Err(ParseError::at(line, UnitError::NoInputs.to_string()));
                }
                block.motion = Some((motion_record(line, &fields)?, line));
            }
            other => {
                return Err(ParseError::at(line, format!("unknown record type `{other}`")));
            }
        }
        block.last_line = line;
    }

    if !block.is_empty() {
        return Err(ParseError::at(
            block.last_line,
            "unterminated unit at end of file (missing `//`)",
        ));
    }
    Ok(units)
}

/// Parses a kitchen file: `O`/`S` records only, duplicates collapse.
pub fn parse_kitchen(text: &str) -> Result<Kitchen, ParseError> {
    let mut kitchen = Kitchen::new();
    let mut current: Option<ObjectNode> = None;

    for (line, fields) in records(text) {
        match fields[0] {
            "//" if fields.len() == 1 => {
                if let Some(node) = current.take() {
                    kitchen.insert_node(&node);
                }
            }
            "O" => {
                if let Some(node) = current.replace(object_record(line, &fields)?) {
                    kitchen.insert_node(&node);
                }
            }
            "S" => {
                let Some(node) = current.as_mut() else {
                    return Err(ParseError::at(line, "state line not preceded by an object line"));
                };
                apply_state(node, line, &fields)?;
            }
            "M" => return Err(ParseError::at(line, "motion line not allowed in kitchen file")),
            other => {
                return Err(ParseError::at(line, format!("unknown record type `{other}`")));
            }
        }
    }
    if let Some(node) = current {
        kitchen.insert_node(&node);
    }
    Ok(kitchen)
}

fn write_object(out: &mut String, node: &ObjectNode) {
    let _ = writeln!(out, "O\t{}", node.name());
    let ingredients = (!node.ingredients().is_empty()).then(|| {
        let list: Vec<&str> = node.ingredients().iter().map(String::as_str).collect();
        format!("\t{{{}}}", list.join(","))
    });
    if node.states().is_empty() {
        if let Some(ingredients) = &ingredients {
            let _ = writeln!(out, "S\t{ingredients}");
        }
        return;
    }
    for (i, state) in node.states().iter().enumerate() {
        let suffix = match (&ingredients, i) {
            (Some(ingredients), 0) => ingredients.as_str(),
            _ => "",
        };
        let _ = writeln!(out, "S\t{state}{suffix}");
    }
}

/// Writes one unit block, terminated by `//`.
pub fn write_unit(out: &mut String, unit: &FunctionalUnit) {
    for input in unit.inputs() {
        write_object(out, input);
    }
    let motion = unit.motion();
    let _ = writeln!(out, "M\t{}\t{}", motion.label(), motion.success_rate());
    for output in unit.outputs() {
        write_object(out, output);
    }
    out.push_str("//\n");
}

pub fn serialize_graph(graph: &FoonGraph) -> String {
    let mut out = format!("{SUBGRAPH_HEADER}\n");
    for unit in graph.units() {
        write_unit(&mut out, unit);
    }
    out
}

/// Writes a verified task tree as a subgraph in execution order, followed by
/// `# goal:` and (optionally) `# algorithm:` trailers.
pub fn serialize_task_tree(
    graph: &FoonGraph,
    tree: &TaskTree,
    kitchen: &Kitchen,
    algorithm: Option<&str>,
) -> Result<String, Violation> {
    verify_task_tree(graph, tree, kitchen, &tree.goal)?;
    let mut out = format!("{TASK_TREE_HEADER}\n");
    for &id in &tree.unit_ids {
        // verified above, every id exists
        if let Some(unit) = graph.unit(id) {
            write_unit(&mut out, unit);
        }
    }
    let _ = writeln!(out, "# goal: {}", tree.goal);
    if let Some(algorithm) = algorithm {
        let _ = writeln!(out, "# algorithm: {algorithm}");
    }
    Ok(out)
}
