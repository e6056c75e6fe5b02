use std::collections::BTreeSet;

use crate::node::{ObjectKey, ObjectNode};

/// Items the agent has at hand. Matching is exact on the full object key.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Kitchen {
    items: BTreeSet<ObjectKey>,
}

impl Kitchen {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns false if the item was already present.
    pub fn insert(&mut self, key: ObjectKey) -> bool {
        self.items.insert(key)
    }

    pub fn insert_node(&mut self, node: &ObjectNode) -> bool {
        self.insert(node.key())
    }

    pub fn contains(&self, key: &ObjectKey) -> bool {
        self.items.contains(key)
    }

    pub fn items(&self) -> &BTreeSet<ObjectKey> {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

impl FromIterator<ObjectKey> for Kitchen {
    fn from_iter<T: IntoIterator<Item = ObjectKey>>(iter: T) -> Self {
        Self {
            items: iter.into_iter().collect(),
        }
    }
}

pub fn is_available(key: &ObjectKey, kitchen: &Kitchen) -> bool {
    kitchen.contains(key)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kitchen(items: &[&str]) -> Kitchen {
        items.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn key(s: &str) -> ObjectKey {
        s.parse().unwrap()
    }

    #[test]
    fn exact_state_match() {
        assert!(is_available(&key("water{liquid}"), &kitchen(&["water{liquid}"])));
        assert!(!is_available(&key("water{liquid}"), &kitchen(&["water{frozen}"])));
    }

    #[test]
    fn ingredients_must_match_in_both_directions() {
        let with_salt = key("bowl{clean}[salt]");
        let plain = key("bowl{clean}");
        assert!(!is_available(&with_salt, &kitchen(&["bowl{clean}"])));
        assert!(!is_available(&plain, &kitchen(&["bowl{clean}[salt]"])));
        assert!(is_available(&with_salt, &kitchen(&["bowl{clean}[salt]"])));
    }

    #[test]
    fn set_semantics() {
        let mut k = Kitchen::new();
        assert!(k.insert(key("tray{empty}")));
        assert!(!k.insert(key("tray{empty}")));
        assert_eq!(k.len(), 1);
    }
}
