//! Display equivalence classes.
//!
//! The residuation moves are reversible, so the sequents reachable from a
//! given one form an equivalence class. It has one member per edge of the
//! underlying unrooted structure tree, hence it is always finite.

use std::collections::HashMap;

use super::rules::{display_steps, RuleLabel};
use crate::term::Sequent;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("display closure exceeded cap of {cap} sequents")]
pub struct CapExceeded {
    pub cap: usize,
}

/// A display class explored breadth-first from an entry sequent, with the
/// move that first reached each member.
#[derive(Debug, Clone)]
pub struct DisplayClass {
    /// Members in discovery order; `members[0]` is the entry sequent.
    pub members: Vec<Sequent>,
    /// For each member except the entry: (index of predecessor, move applied backward to it).
    parents: Vec<Option<(usize, RuleLabel)>>,
    rendered: Vec<String>,
}

impl DisplayClass {
    pub fn explore(entry: &Sequent, cap: Option<usize>) -> Result<DisplayClass, CapExceeded> {
        let mut members = vec![entry.clone()];
        let mut parents = vec![None];
        let mut rendered = vec![entry.to_string()];
        let mut index: HashMap<String, usize> = HashMap::new();
        index.insert(rendered[0].clone(), 0);
        let mut head = 0;
        while head < members.len() {
            for (label, next) in display_steps(&members[head]) {
                let key = next.to_string();
                if index.contains_key(&key) {
                    continue;
                }
                if let Some(cap) = cap {
                    if members.len() >= cap {
                        return Err(CapExceeded { cap });
                    }
                }
                index.insert(key.clone(), members.len());
                members.push(next);
                parents.push(Some((head, label)));
                rendered.push(key);
            }
            head += 1;
        }
        Ok(DisplayClass { members, parents, rendered })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn rendered(&self, i: usize) -> &str {
        &self.rendered[i]
    }

    /// Index of the member with the lexicographically least rendering.
    pub fn canonical_index(&self) -> usize {
        (0..self.members.len()).min_by(|&a, &b| self.rendered[a].cmp(&self.rendered[b])).unwrap_or(0)
    }

    /// Moves leading from the entry sequent to member `i`: each pair is the
    /// current sequent and the label applied to it backward.
    pub fn path_to(&self, mut i: usize) -> Vec<(Sequent, RuleLabel)> {
        let mut rev = Vec::new();
        while let Some((parent, label)) = self.parents[i] {
            rev.push((self.members[parent].clone(), label));
            i = parent;
        }
        rev.reverse();
        rev
    }

    pub fn position(&self, s: &Sequent) -> Option<usize> {
        self.members.iter().position(|m| m == s)
    }
}

/// Every sequent display-equivalent to `s` (including `s`), in breadth-first order.
pub fn display_closure(s: &Sequent, cap: Option<usize>) -> Result<Vec<Sequent>, CapExceeded> {
    DisplayClass::explore(s, cap).map(|c| c.members)
}

/// The member of the display class of `s` with the least rendering.
pub fn canonical(s: &Sequent) -> Sequent {
    let class = DisplayClass::explore(s, None).expect("display classes are finite");
    class.members[class.canonical_index()].clone()
}
