use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use anyhow::{anyhow, Context, Result};

use foon_core::retrieval::{retrieve, Algorithm};
use foon_core::{
    parse_kitchen, parse_subgraph, serialize_graph, serialize_task_tree, verify_task_tree,
    AddOutcome, FoonGraph, GoalError, GoalSpec, Kitchen, ObjectKey, Outcome, TaskTree,
    Violation,
};

use crate::Status;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .context("cannot write to standard output"),
    }
}

fn parse_units(path: &Path) -> Result<Vec<foon_core::FunctionalUnit>> {
    parse_subgraph(&read(path)?).map_err(|e| anyhow!(e.in_file(path.display().to_string())))
}

fn load_graph(path: &Path) -> Result<FoonGraph> {
    Ok(FoonGraph::from_units(parse_units(path)?))
}

fn load_kitchen(path: &Path) -> Result<Kitchen> {
    parse_kitchen(&read(path)?).map_err(|e| anyhow!(e.in_file(path.display().to_string())))
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

pub fn merge(inputs: &[impl AsRef<Path>], output: Option<&Path>) -> Result<Status> {
    let mut graph = FoonGraph::new();
    let mut duplicates = 0;
    for path in inputs {
        for unit in parse_units(path.as_ref())? {
            if let AddOutcome::Duplicate(_) = graph.add_unit(unit) {
                duplicates += 1;
            }
        }
    }
    write_or_print(output, &serialize_graph(&graph))?;
    eprintln!(
        "merged {}: {}, {}, {} removed",
        plural(inputs.len(), "file"),
        plural(graph.unit_count(), "unit"),
        plural(graph.node_count(), "object node"),
        plural(duplicates, "duplicate"),
    );
    Ok(Status::Success)
}

/// Resolves a goal spec; a bare name matching several objects is an error.
fn resolve_goal(spec: &str, graph: &FoonGraph, kitchen: &Kitchen) -> Result<ObjectKey, GoalError> {
    spec.parse::<GoalSpec>()?.resolve(graph, kitchen)
}

pub fn search(
    graph_path: &Path,
    goal: &str,
    kitchen_path: &Path,
    algorithm: Algorithm,
    max_depth: Option<usize>,
    output: Option<&Path>,
) -> Result<Status> {
    let graph = load_graph(graph_path)?;
    let kitchen = load_kitchen(kitchen_path)?;
    let goal = match resolve_goal(goal, &graph, &kitchen) {
        Ok(key) => key,
        Err(GoalError::Unknown(name)) => {
            eprintln!("no task tree for `{name}`: no-producer (unknown object)");
            return Ok(Status::NotFound);
        }
        Err(err) => return Err(err.into()),
    };

    let result = retrieve(&graph, &goal, &kitchen, algorithm, max_depth);
    match &result.outcome {
        Outcome::Found(tree) => {
            let text = serialize_task_tree(&graph, tree, &kitchen, Some(algorithm.as_str()))
                .map_err(|v| anyhow!("retrieved tree failed verification: {v}"))?;
            write_or_print(output, &text)?;
            eprintln!(
                "{goal}: {} ({algorithm}, {})",
                plural(tree.len(), "functional unit"),
                plural(result.expansions as usize, "expansion"),
            );
            Ok(Status::Success)
        }
        Outcome::NotFound(reason) => {
            eprintln!(
                "no task tree for {goal}: {reason} ({algorithm}, {})",
                plural(result.expansions as usize, "expansion"),
            );
            Ok(Status::NotFound)
        }
    }
}

/// One row of the comparison table: unit counts per algorithm, `None` when no
/// tree was found.
pub struct CompareRow {
    pub goal: String,
    pub counts: Vec<Option<usize>>,
}

pub fn compare_rows(graph: &FoonGraph, kitchen: &Kitchen, goals: &str) -> Vec<CompareRow> {
    goals
        .lines()
        .map(|line| line.split('#').next().unwrap_or_default().trim())
        .filter(|line| !line.is_empty())
        .map(|spec| {
            let counts = match resolve_goal(spec, graph, kitchen) {
                Ok(goal) => Algorithm::ALL
                    .iter()
                    .map(|&algo| retrieve(graph, &goal, kitchen, algo, None).unit_count())
                    .collect(),
                Err(err) => {
                    eprintln!("{spec}: {err}");
                    vec![None; Algorithm::ALL.len()]
                }
            };
            CompareRow {
                goal: spec.to_string(),
                counts,
            }
        })
        .collect()
}

pub fn render_table(rows: &[CompareRow]) -> String {
    let mut header = vec!["Goal Nodes".to_string()];
    header.extend(Algorithm::ALL.iter().map(|a| a.title().to_string()));
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            let mut cells = vec![row.goal.clone()];
            cells.extend(
                row.counts
                    .iter()
                    .map(|c| c.map_or_else(|| "-".to_string(), |n| n.to_string())),
            );
            cells
        })
        .collect();

    let widths: Vec<usize> = (0..header.len())
        .map(|col| {
            std::iter::once(&header)
                .chain(&body)
                .map(|cells| cells[col].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for cells in std::iter::once(&header).chain(&body) {
        let line: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(cell, &width)| format!("{cell:<width$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn render_csv(rows: &[CompareRow]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["goal", "ids", "h1", "h2"])?;
    for row in rows {
        let mut record = vec![row.goal.clone()];
        record.extend(row.counts.iter().map(|c| c.map(|n| n.to_string()).unwrap_or_default()));
        writer.write_record(&record)?;
    }
    Ok(String::from_utf8(writer.into_inner()?)?)
}

pub fn compare(graph_path: &Path, kitchen_path: &Path, goals_path: &Path, csv: Option<&Path>) -> Result<Status> {
    let graph = load_graph(graph_path)?;
    let kitchen = load_kitchen(kitchen_path)?;
    let rows = compare_rows(&graph, &kitchen, &read(goals_path)?);
    write_or_print(None, &render_table(&rows))?;
    if let Some(path) = csv {
        write_or_print(Some(path), &render_csv(&rows)?)?;
    }
    Ok(Status::Success)
}

pub fn export_dot(graph_path: &Path, output: Option<&Path>) -> Result<Status> {
    let graph = load_graph(graph_path)?;
    write_or_print(output, &foon_core::export_dot(&graph))?;
    Ok(Status::Success)
}

pub fn stats(graph_path: &Path) -> Result<Status> {
    let graph = load_graph(graph_path)?;
    let motions: BTreeSet<&str> = graph.units().iter().map(|u| u.motion().label()).collect();
    let (producers, consumers) = graph.adjacency();
    let max_len = |lists: &[Vec<foon_core::UnitId>]| lists.iter().map(Vec::len).max().unwrap_or(0);
    let max_inputs = graph.units().iter().map(|u| u.inputs().len()).max().unwrap_or(0);
    let max_outputs = graph.units().iter().map(|u| u.outputs().len()).max().unwrap_or(0);

    let mut out = String::new();
    out.push_str(&format!("{}\n", plural(graph.unit_count(), "unit")));
    out.push_str(&format!("{}\n", plural(graph.node_count(), "object node")));
    out.push_str(&format!("{}\n", plural(motions.len(), "distinct motion label")));
    out.push_str(&format!("max object in-degree: {}\n", max_len(producers)));
    out.push_str(&format!("max object out-degree: {}\n", max_len(consumers)));
    out.push_str(&format!("max motion in-degree: {max_inputs}\n"));
    out.push_str(&format!("max motion out-degree: {max_outputs}\n"));
    write_or_print(None, &out)?;
    Ok(Status::Success)
}

pub fn verify(graph_path: &Path, tree_path: &Path, kitchen_path: &Path, goal: &str) -> Result<Status> {
    let graph = load_graph(graph_path)?;
    let kitchen = load_kitchen(kitchen_path)?;
    let units = parse_units(tree_path)?;
    let goal = match resolve_goal(goal, &graph, &kitchen) {
        Ok(key) => key,
        Err(GoalError::Unknown(name)) => {
            eprintln!("invalid task tree: goal `{name}` does not occur in the graph or kitchen");
            return Ok(Status::Invalid);
        }
        Err(err) => return Err(err.into()),
    };

    let mut ids = Vec::with_capacity(units.len());
    for (position, unit) in units.iter().enumerate() {
        match graph.find_unit(&unit.identity()) {
            Some(id) => ids.push(id),
            None => {
                eprintln!(
                    "invalid task tree: position {position}: `{}` unit is not in the graph",
                    unit.motion().label()
                );
                return Ok(Status::Invalid);
            }
        }
    }
    let tree = TaskTree::new(ids, goal.clone());
    match verify_task_tree(&graph, &tree, &kitchen, &goal) {
        Ok(()) => {
            eprintln!("valid task tree for {goal}: {}", plural(tree.len(), "functional unit"));
            Ok(Status::Success)
        }
        Err(violation) => {
            report_violation(&violation);
            Ok(Status::Invalid)
        }
    }
}

fn report_violation(violation: &Violation) {
    eprintln!("invalid task tree: {violation}");
}
