//! The universal network: an insertion-ordered, duplicate-free list of
//! functional units plus producer and consumer adjacency lists per object node.

use std::collections::HashMap;
use std::fmt;

use crate::node::{ObjectKey, ObjectNode};
use crate::unit::{FunctionalUnit, UnitIdentity};

/// Dense index of an object node, assigned in first-seen order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

/// Dense index of a functional unit, assigned in insertion order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitId(pub usize);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for UnitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AddOutcome {
    Added(UnitId),
    /// The unit was already present; its stored success rate is raised to the
    /// larger of the two.
    Duplicate(UnitId),
}

impl AddOutcome {
    pub fn id(self) -> UnitId {
        match self {
            AddOutcome::Added(id) | AddOutcome::Duplicate(id) => id,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct FoonGraph {
    units: Vec<FunctionalUnit>,
    nodes: Vec<ObjectNode>,
    node_index: HashMap<ObjectKey, NodeId>,
    unit_index: HashMap<UnitIdentity, UnitId>,
    producers: Vec<Vec<UnitId>>,
    consumers: Vec<Vec<UnitId>>,
    unit_inputs: Vec<Vec<NodeId>>,
    unit_outputs: Vec<Vec<NodeId>>,
}

impl FoonGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_units(units: impl IntoIterator<Item = FunctionalUnit>) -> Self {
        let mut graph = Self::new();
        for unit in units {
            graph.add_unit(unit);
        }
        graph
    }

    pub fn add_unit(&mut self, unit: FunctionalUnit) -> AddOutcome {
        let identity = unit.identity();
        if let Some(&id) = self.unit_index.get(&identity) {
            let rate = unit.motion().success_rate();
            self.units[id.0].motion_mut().raise_rate(rate);
            return AddOutcome::Duplicate(id);
        }

        let id = UnitId(self.units.len());
        let inputs: Vec<NodeId> = unit.inputs().iter().map(|n| self.intern(n)).collect();
        let outputs: Vec<NodeId> = unit.outputs().iter().map(|n| self.intern(n)).collect();
        for &node in &inputs {
            self.consumers[node.0].push(id);
        }
        for &node in &outputs {
            self.producers[node.0].push(id);
        }
        self.unit_inputs.push(inputs);
        self.unit_outputs.push(outputs);
        self.unit_index.insert(identity, id);
        self.units.push(unit);
        AddOutcome::Added(id)
    }

    fn intern(&mut self, node: &ObjectNode) -> NodeId {
        let key = node.key();
        if let Some(&id) = self.node_index.get(&key) {
            return id;
        }
        let id = NodeId(self.nodes.len());
        self.nodes.push(node.clone());
        self.node_index.insert(key, id);
        self.producers.push(Vec::new());
        self.consumers.push(Vec::new());
        id
    }

    pub fn units(&self) -> &[FunctionalUnit] {
        &self.units
    }

    pub fn unit(&self, id: UnitId) -> Option<&FunctionalUnit> {
        self.units.get(id.0)
    }

    pub fn unit_count(&self) -> usize {
        self.units.len()
    }

    pub fn unit_ids(&self) -> impl Iterator<Item = UnitId> {
        (0..self.units.len()).map(UnitId)
    }

    pub fn nodes(&self) -> &[ObjectNode] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> Option<&ObjectNode> {
        self.nodes.get(id.0)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node_id(&self, key: &ObjectKey) -> Option<NodeId> {
        self.node_index.get(key).copied()
    }

    pub fn find_unit(&self, identity: &UnitIdentity) -> Option<UnitId> {
        self.unit_index.get(identity).copied()
    }

    /// Units whose outputs contain `key`, in insertion order.
    pub fn producers_of(&self, key: &ObjectKey) -> &[UnitId] {
        self.node_id(key)
            .map(|id| self.producers(id))
            .unwrap_or_default()
    }

    /// Units whose inputs contain `key`, in insertion order.
    pub fn consumers_of(&self, key: &ObjectKey) -> &[UnitId] {
        self.node_id(key)
            .map(|id| self.consumers(id))
            .unwrap_or_default()
    }

    pub fn producers(&self, node: NodeId) -> &[UnitId] {
        &self.producers[node.0]
    }

    pub fn consumers(&self, node: NodeId) -> &[UnitId] {
        &self.consumers[node.0]
    }

    pub fn input_ids(&self, unit: UnitId) -> &[NodeId] {
        &self.unit_inputs[unit.0]
    }

    pub fn output_ids(&self, unit: UnitId) -> &[NodeId] {
        &self.unit_outputs[unit.0]
    }

    /// Producer and consumer lists indexed by node id, for consistency checks.
    pub fn adjacency(&self) -> (&[Vec<UnitId>], &[Vec<UnitId>]) {
        (&self.producers, &self.consumers)
    }
}

/// Union of several graphs under unit identity, in first-occurrence order.
pub fn merge<'a>(graphs: impl IntoIterator<Item = &'a FoonGraph>) -> FoonGraph {
    let mut merged = FoonGraph::new();
    for graph in graphs {
        for unit in graph.units() {
            merged.add_unit(unit.clone());
        }
    }
    merged
}
