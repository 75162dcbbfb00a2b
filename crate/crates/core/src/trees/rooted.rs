use std::fmt;

use super::PlanarTree;
use crate::Result;

/// A non-planar rooted tree with distinct labels. Children are always stored
/// sorted by their canonical printed form, so structural equality is
/// isomorphism of labeled rooted trees.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedTree {
    label: String,
    children: Vec<RootedTree>,
}

impl RootedTree {
    pub fn leaf(label: impl Into<String>) -> Self {
        RootedTree {
            label: label.into(),
            children: Vec::new(),
        }
    }

    pub fn new(label: impl Into<String>, mut children: Vec<RootedTree>) -> Self {
        children.sort_by_cached_key(|c| c.to_string());
        RootedTree {
            label: label.into(),
            children,
        }
    }

    pub fn checked(label: impl Into<String>, children: Vec<RootedTree>) -> Result<Self> {
        let t = Self::new(label, children);
        t.to_planar().check_labels()?;
        Ok(t)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(RootedTree::size).sum::<usize>()
    }

    pub fn labels(&self) -> Vec<&str> {
        let mut out = vec![self.label.as_str()];
        for c in &self.children {
            out.extend(c.labels());
        }
        out
    }

    pub fn find(&self, v: &str) -> Option<&RootedTree> {
        if self.label == v {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find(v))
    }

    pub fn from_planar(t: &PlanarTree) -> Self {
        RootedTree::new(
            t.label.clone(),
            t.children.iter().map(RootedTree::from_planar).collect(),
        )
    }

    /// The embedding that uses the canonical child order.
    pub fn to_planar(&self) -> PlanarTree {
        PlanarTree::new(
            self.label.clone(),
            self.children.iter().map(RootedTree::to_planar).collect(),
        )
    }

    pub fn relabel(&self, f: &impl Fn(&str) -> String) -> RootedTree {
        RootedTree::new(f(&self.label), self.children.iter().map(|c| c.relabel(f)).collect())
    }

    /// Shape code with labels erased (for unlabeled enumeration).
    pub fn shape_code(&self) -> String {
        let mut kids: Vec<String> = self.children.iter().map(RootedTree::shape_code).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_planar())
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{parse_planar, parse_rooted};

    #[test]
    fn canonical_order() {
        assert_eq!(parse_rooted("1(3,2)").unwrap().to_string(), "1(2,3)");
        assert_eq!(parse_rooted("1(3(5,4),2)").unwrap().to_string(), "1(2,3(4,5))");
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let t = RootedTree::from_planar(&parse_planar("1(4(6,5),2,3(7))").unwrap());
        assert_eq!(RootedTree::from_planar(&t.to_planar()), t);
        let m = RootedTree::from_planar(&parse_planar("1(4(6,5),2,3(7))").unwrap().mirror());
        assert_eq!(m, t);
    }
}
