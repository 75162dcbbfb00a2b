use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// A rooted tree whose children are ordered left to right, with distinct
/// vertex labels. Edges point toward the root.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarTree {
    pub label: String,
    pub children: Vec<PlanarTree>,
}

/// A gap at a vertex between consecutive incoming edges (or flanking them).
/// Slot `k` lies between the `k`-th and `(k+1)`-th child; a vertex with `d`
/// children has slots `0..=d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Angle {
    pub vertex: String,
    pub slot: usize,
}

impl PlanarTree {
    pub fn leaf(label: impl Into<String>) -> Self {
        PlanarTree {
            label: label.into(),
            children: Vec::new(),
        }
    }

    /// Panics if labels repeat; use [`PlanarTree::checked`] for input data.
    pub fn new(label: impl Into<String>, children: Vec<PlanarTree>) -> Self {
        PlanarTree {
            label: label.into(),
            children,
        }
    }

    pub fn checked(label: impl Into<String>, children: Vec<PlanarTree>) -> Result<Self> {
        let t = Self::new(label, children);
        t.check_labels()?;
        Ok(t)
    }

    pub fn check_labels(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for l in self.labels() {
            if !seen.insert(l.to_string()) {
                return Err(Error::DuplicateLabel(l.to_string()));
            }
        }
        Ok(())
    }

    /// The corolla with root `1` and leaves `2..=n+1` in order.
    pub fn corolla(n: usize) -> Self {
        PlanarTree::new("1", (2..=n + 1).map(|i| PlanarTree::leaf(i.to_string())).collect())
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(PlanarTree::size).sum::<usize>()
    }

    /// Labels in preorder.
    pub fn labels(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.walk(&mut |t| out.push(t.label.as_str()));
        out
    }

    fn walk<'a>(&'a self, f: &mut impl FnMut(&'a PlanarTree)) {
        f(self);
        for c in &self.children {
            c.walk(f);
        }
    }

    pub fn find(&self, v: &str) -> Option<&PlanarTree> {
        if self.label == v {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find(v))
    }

    pub fn contains(&self, v: &str) -> bool {
        self.find(v).is_some()
    }

    /// Incoming edges at `v`, i.e. the child subtrees of `v` in planar order.
    pub fn entering_edges(&self, v: &str) -> Result<&[PlanarTree]> {
        self.find(v)
            .map(|t| t.children.as_slice())
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    /// All angles in left-to-right order: a depth-first contour walk that
    /// emits slot `k` of a vertex between its `k`-th and `(k+1)`-th subtree.
    pub fn angles(&self) -> Vec<Angle> {
        let mut out = Vec::with_capacity(2 * self.size() - 1);
        self.push_angles(&mut out);
        out
    }

    fn push_angles(&self, out: &mut Vec<Angle>) {
        for (k, c) in self.children.iter().enumerate() {
            out.push(Angle {
                vertex: self.label.clone(),
                slot: k,
            });
            c.push_angles(out);
        }
        out.push(Angle {
            vertex: self.label.clone(),
            slot: self.children.len(),
        });
    }

    pub fn relabel(&self, f: &impl Fn(&str) -> String) -> PlanarTree {
        PlanarTree {
            label: f(&self.label),
            children: self.children.iter().map(|c| c.relabel(f)).collect(),
        }
    }

    /// Left-right mirror image.
    pub fn mirror(&self) -> PlanarTree {
        PlanarTree {
            label: self.label.clone(),
            children: self.children.iter().rev().map(PlanarTree::mirror).collect(),
        }
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)?;
        if !self.children.is_empty() {
            f.write_str("(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::parse_planar;

    #[test]
    fn angle_counts() {
        assert_eq!(PlanarTree::leaf("1").angles().len(), 1);
        let cor = parse_planar("1(2,3)").unwrap();
        let a = cor.angles();
        assert_eq!(a.len(), 5);
        let order: Vec<(String, usize)> = a.into_iter().map(|x| (x.vertex, x.slot)).collect();
        assert_eq!(
            order,
            vec![
                ("1".into(), 0),
                ("2".into(), 0),
                ("1".into(), 1),
                ("3".into(), 0),
                ("1".into(), 2)
            ]
        );
    }

    #[test]
    fn eleven_angles_on_six_vertices() {
        for s in ["1(2(3,4),5(6))", "1(2,3,4,5,6)", "1(2(3(4(5(6)))))"] {
            assert_eq!(parse_planar(s).unwrap().angles().len(), 11);
        }
    }

    #[test]
    fn entering() {
        let t = parse_planar("1(2(4),3)").unwrap();
        let e: Vec<String> = t.entering_edges("1").unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(e, vec!["2(4)", "3"]);
        assert!(t.entering_edges("3").unwrap().is_empty());
        assert_eq!(t.entering_edges("2").unwrap().len(), 1);
        assert_eq!(t.entering_edges("9").unwrap_err(), Error::UnknownVertex("9".into()));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let t = PlanarTree::checked("1", vec![PlanarTree::leaf("1")]);
        assert_eq!(t.unwrap_err(), Error::DuplicateLabel("1".into()));
    }
}
