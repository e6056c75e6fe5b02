use std::collections::BTreeSet;

use thiserror::Error;

use crate::node::{MotionNode, ObjectKey, ObjectNode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnitError {
    #[error("unit has no inputs")]
    NoInputs,
    #[error("unit has no outputs")]
    NoOutputs,
    #[error("duplicate input object {0}")]
    DuplicateInput(ObjectKey),
    #[error("duplicate output object {0}")]
    DuplicateOutput(ObjectKey),
}

/// One atomic action: input objects are transformed by a motion into output
/// objects.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionalUnit {
    inputs: Vec<ObjectNode>,
    motion: MotionNode,
    outputs: Vec<ObjectNode>,
}

/// What makes two units the same action. The success rate is not part of it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitIdentity {
    pub inputs: BTreeSet<ObjectKey>,
    pub motion: String,
    pub outputs: BTreeSet<ObjectKey>,
}

impl FunctionalUnit {
    pub fn new(
        inputs: Vec<ObjectNode>,
        motion: MotionNode,
        outputs: Vec<ObjectNode>,
    ) -> Result<Self, UnitError> {
        if inputs.is_empty() {
            return Err(UnitError::NoInputs);
        }
        if outputs.is_empty() {
            return Err(UnitError::NoOutputs);
        }
        if let Some(key) = first_repeat(&inputs) {
            return Err(UnitError::DuplicateInput(key));
        }
        if let Some(key) = first_repeat(&outputs) {
            return Err(UnitError::DuplicateOutput(key));
        }
        Ok(Self {
            inputs,
            motion,
            outputs,
        })
    }

    pub fn inputs(&self) -> &[ObjectNode] {
        &self.inputs
    }

    pub fn motion(&self) -> &MotionNode {
        &self.motion
    }

    pub fn outputs(&self) -> &[ObjectNode] {
        &self.outputs
    }

    pub fn identity(&self) -> UnitIdentity {
        UnitIdentity {
            inputs: self.inputs.iter().map(ObjectNode::key).collect(),
            motion: self.motion.label().to_string(),
            outputs: self.outputs.iter().map(ObjectNode::key).collect(),
        }
    }

    pub(crate) fn motion_mut(&mut self) -> &mut MotionNode {
        &mut self.motion
    }
}

fn first_repeat(nodes: &[ObjectNode]) -> Option<ObjectKey> {
    let mut seen = BTreeSet::new();
    nodes
        .iter()
        .map(ObjectNode::key)
        .find(|key| !seen.insert(key.clone()))
}
