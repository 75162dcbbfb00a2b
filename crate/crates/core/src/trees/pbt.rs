use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// A generator of a free algebra, indexing into an [`Alphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen(pub u32);

impl Gen {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Names of the generators of a free algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new(names: Vec<String>) -> Result<Self> {
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::Domain(format!("invalid generator name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(Error::DuplicateLabel(n.clone()));
            }
        }
        Ok(Alphabet { names })
    }

    /// `a`, `b`, …, `z`, then `g26`, `g27`, ….
    pub fn letters(n: usize) -> Self {
        Alphabet {
            names: (0..n)
                .map(|i| {
                    if i < 26 {
                        ((b'a' + i as u8) as char).to_string()
                    } else {
                        format!("g{i}")
                    }
                })
                .collect(),
        }
    }

    /// `x1`, …, `xn`: the slots of an `n`-ary operation.
    pub fn slots(n: usize) -> Self {
        Alphabet {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, name: &str) -> Option<Gen> {
        self.names.iter().position(|n| n == name).map(|i| Gen(i as u32))
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> {
        (0..self.names.len() as u32).map(Gen)
    }

    /// Generator names longer than one character need separators in words.
    pub fn single_chars(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbtNode {
    left: Pbt,
    gen: Gen,
    right: Pbt,
    degree: usize,
}

/// A planar binary tree with decorated internal nodes.
///
/// `Node(l, v, r)` stands for `l ∨^v r = l ≻ v ≺ r`; every nonunit basis
/// element of the free dendriform algebra decomposes uniquely this way.
/// `Leaf` is the empty tree: the unit only ever appears as a subtree here,
/// never as a standalone algebra element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pbt {
    Leaf,
    Node(Arc<PbtNode>),
}

impl Pbt {
    pub fn node(left: Pbt, gen: Gen, right: Pbt) -> Pbt {
        let degree = 1 + left.degree() + right.degree();
        Pbt::Node(Arc::new(PbtNode {
            left,
            gen,
            right,
            degree,
        }))
    }

    pub fn generator(g: Gen) -> Pbt {
        Pbt::node(Pbt::Leaf, g, Pbt::Leaf)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Pbt::Leaf)
    }

    /// Number of internal nodes.
    pub fn degree(&self) -> usize {
        match self {
            Pbt::Leaf => 0,
            Pbt::Node(n) => n.degree,
        }
    }

    /// Sum of generator weights over internal nodes.
    pub fn weight(&self, weights: &[usize]) -> usize {
        match self {
            Pbt::Leaf => 0,
            Pbt::Node(n) => n.left.weight(weights) + weights[n.gen.index()] + n.right.weight(weights),
        }
    }

    /// `(left, decoration, right)` of an internal node.
    pub fn split(&self) -> Option<(&Pbt, Gen, &Pbt)> {
        match self {
            Pbt::Leaf => None,
            Pbt::Node(n) => Some((&n.left, n.gen, &n.right)),
        }
    }

    /// Decorations in left-to-right (in-order) reading.
    pub fn gens(&self) -> Vec<Gen> {
        let mut out = Vec::with_capacity(self.degree());
        self.push_gens(&mut out);
        out
    }

    fn push_gens(&self, out: &mut Vec<Gen>) {
        if let Pbt::Node(n) = self {
            n.left.push_gens(out);
            out.push(n.gen);
            n.right.push_gens(out);
        }
    }

    pub fn relabel(&self, f: &impl Fn(Gen) -> Gen) -> Pbt {
        match self {
            Pbt::Leaf => Pbt::Leaf,
            Pbt::Node(n) => Pbt::node(n.left.relabel(f), f(n.gen), n.right.relabel(f)),
        }
    }

    /// Left-right mirror; exchanges `≺` and `≻` with swapped arguments.
    pub fn mirror(&self) -> Pbt {
        match self {
            Pbt::Leaf => Pbt::Leaf,
            Pbt::Node(n) => Pbt::node(n.right.mirror(), n.gen, n.left.mirror()),
        }
    }

    /// Bracket notation: `*` for the leaf, `(l v r)` for a node.
    pub fn to_bracket(&self, alphabet: &Alphabet) -> String {
        match self {
            Pbt::Leaf => "*".to_string(),
            Pbt::Node(n) => format!(
                "({} {} {})",
                n.left.to_bracket(alphabet),
                alphabet.name(n.gen),
                n.right.to_bracket(alphabet)
            ),
        }
    }

    /// Product notation that evaluates back to this single tree:
    /// `l>v<r`, with unit sides dropped and compound sides parenthesized.
    pub fn to_expr(&self, alphabet: &Alphabet) -> String {
        match self {
            Pbt::Leaf => "1".to_string(),
            Pbt::Node(n) => {
                let side = |t: &Pbt| {
                    if t.degree() == 1 {
                        t.to_expr(alphabet)
                    } else {
                        format!("({})", t.to_expr(alphabet))
                    }
                };
                let mut s = String::new();
                if !n.left.is_leaf() {
                    s.push_str(&side(&n.left));
                    s.push('>');
                }
                s.push_str(alphabet.name(n.gen));
                if !n.right.is_leaf() {
                    s.push('<');
                    s.push_str(&side(&n.right));
                }
                s
            }
        }
    }
}

impl fmt::Debug for Pbt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pbt::Leaf => f.write_str("*"),
            Pbt::Node(n) => write!(f, "({:?} {} {:?})", n.left, n.gen.0, n.right),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_and_printing() {
        let a = Alphabet::letters(2);
        let t = Pbt::node(Pbt::Leaf, Gen(0), Pbt::generator(Gen(1)));
        assert_eq!(t.degree(), 2);
        assert_eq!(t.to_bracket(&a), "(* a (* b *))");
        assert_eq!(t.to_expr(&a), "a<b");
        assert_eq!(t.mirror().to_expr(&a), "b>a");
        let u = Pbt::node(t.clone(), Gen(0), t.clone());
        assert_eq!(u.to_expr(&a), "(a<b)>a<(a<b)");
        assert_eq!(u.gens(), vec![Gen(0), Gen(1), Gen(0), Gen(0), Gen(1)]);
        assert_eq!(u.weight(&[1, 2]), 7);
    }

    #[test]
    fn alphabet_names() {
        let a = Alphabet::letters(28);
        assert_eq!(a.name(Gen(25)), "z");
        assert_eq!(a.name(Gen(27)), "g27");
        assert_eq!(a.lookup("c"), Some(Gen(2)));
        assert!(Alphabet::new(vec!["a".into(), "a".into()]).is_err());
        assert!(Alphabet::new(vec!["a b".into()]).is_err());
        assert!(!Alphabet::slots(2).single_chars());
    }
}
