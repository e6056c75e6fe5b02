//! Object and motion nodes, the two sides of the bipartite network.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Characters that would make the text formats or the key syntax ambiguous.
const RESERVED_ANYWHERE: &[char] = &['#', '{', '}', '[', ']'];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LabelError {
    #[error("{what} label is empty")]
    Empty { what: &'static str },
    #[error("{what} label {label:?} contains reserved character {ch:?}")]
    Reserved {
        what: &'static str,
        label: String,
        ch: char,
    },
    #[error("success rate {0} is outside [0, 1]")]
    Rate(f64),
    #[error("malformed object key {0:?}")]
    Key(String),
}

/// Trim, lowercase and collapse runs of whitespace into single spaces.
pub fn normalize_label(raw: &str) -> String {
    raw.split_whitespace()
        .map(str::to_lowercase)
        .collect::<Vec<_>>()
        .join(" ")
}

fn checked_label(what: &'static str, raw: &str, extra: &[char]) -> Result<String, LabelError> {
    let label = normalize_label(raw);
    if label.is_empty() {
        return Err(LabelError::Empty { what });
    }
    if let Some(ch) = label
        .chars()
        .find(|c| RESERVED_ANYWHERE.contains(c) || extra.contains(c))
    {
        return Err(LabelError::Reserved { what, label, ch });
    }
    Ok(label)
}

/// Canonical identity of an object node: `name{state,...}` with an optional
/// `[ingredient,...]` suffix, states and ingredients sorted.
///
/// Two nodes are the same node exactly when their keys are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectKey(String);

impl ObjectKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The object name, without states or ingredients.
    pub fn name(&self) -> &str {
        // names cannot contain '{', and every key carries a state brace
        self.0.split('{').next().unwrap_or_default()
    }
}

impl fmt::Display for ObjectKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for ObjectKey {
    type Err = LabelError;

    /// Parses and normalizes a key; state and ingredient order is irrelevant.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<ObjectNode>().map(|node| node.key())
    }
}

/// An object in a particular state, optionally holding ingredients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectNode {
    name: String,
    states: BTreeSet<String>,
    ingredients: BTreeSet<String>,
}

impl ObjectNode {
    pub fn new(name: &str) -> Result<Self, LabelError> {
        Ok(Self {
            name: checked_label("object", name, &[])?,
            states: BTreeSet::new(),
            ingredients: BTreeSet::new(),
        })
    }

    /// Shorthand for a node with states and no ingredients.
    pub fn with_states<'a>(
        name: &str,
        states: impl IntoIterator<Item = &'a str>,
    ) -> Result<Self, LabelError> {
        let mut node = Self::new(name)?;
        for state in states {
            node.add_state(state)?;
        }
        Ok(node)
    }

    pub fn add_state(&mut self, state: &str) -> Result<(), LabelError> {
        self.states.insert(checked_label("state", state, &[','])?);
        Ok(())
    }

    pub fn add_ingredient(&mut self, ingredient: &str) -> Result<(), LabelError> {
        self.ingredients
            .insert(checked_label("ingredient", ingredient, &[','])?);
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn states(&self) -> &BTreeSet<String> {
        &self.states
    }

    pub fn ingredients(&self) -> &BTreeSet<String> {
        &self.ingredients
    }

    pub fn key(&self) -> ObjectKey {
        let mut text = self.name.clone();
        text.push('{');
        text.push_str(&join(&self.states));
        text.push('}');
        if !self.ingredients.is_empty() {
            text.push('[');
            text.push_str(&join(&self.ingredients));
            text.push(']');
        }
        ObjectKey(text)
    }
}

fn join(set: &BTreeSet<String>) -> String {
    set.iter().map(String::as_str).collect::<Vec<_>>().join(",")
}

impl fmt::Display for ObjectNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key().as_str())
    }
}

impl FromStr for ObjectNode {
    type Err = LabelError;

    /// Accepts `name`, `name{s1,s2}`, `name[i1]` and `name{s1}[i1,i2]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || LabelError::Key(s.to_string());
        let s = s.trim();
        let name_end = s.find(['{', '[']).unwrap_or(s.len());
        let mut node = ObjectNode::new(&s[..name_end])?;
        let mut rest = &s[name_end..];

        if let Some(body) = rest.strip_prefix('{') {
            let close = body.find('}').ok_or_else(malformed)?;
            for state in split_list(&body[..close]) {
                node.add_state(state)?;
            }
            rest = &body[close + 1..];
        }
        if let Some(body) = rest.strip_prefix('[') {
            let close = body.find(']').ok_or_else(malformed)?;
            for ingredient in split_list(&body[..close]) {
                node.add_ingredient(ingredient)?;
            }
            rest = &body[close + 1..];
        }
        if !rest.trim().is_empty() {
            return Err(malformed());
        }
        Ok(node)
    }
}

/// Splits a comma-separated list, dropping empty entries (`{}` is an empty set).
pub(crate) fn split_list(body: &str) -> impl Iterator<Item = &str> {
    body.split(',').filter(|item| !item.trim().is_empty())
}

/// A manipulation motion together with the rate at which it succeeds.
#[derive(Debug, Clone, PartialEq)]
pub struct MotionNode {
    label: String,
    success_rate: f64,
}

impl MotionNode {
    pub fn new(label: &str, success_rate: f64) -> Result<Self, LabelError> {
        if !(0.0..=1.0).contains(&success_rate) {
            return Err(LabelError::Rate(success_rate));
        }
        Ok(Self {
            label: checked_label("motion", label, &[])?,
            success_rate,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn success_rate(&self) -> f64 {
        self.success_rate
    }

    pub(crate) fn raise_rate(&mut self, rate: f64) {
        if rate > self.success_rate {
            self.success_rate = rate;
        }
    }
}
