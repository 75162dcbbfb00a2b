//! Planar rooted trees, non-planar rooted trees, and decorated planar binary
//! trees, with their canonical forms, enumeration and text grammar.

mod enumerate;
mod parse;
mod pbt;
mod planar;
mod rooted;

pub use enumerate::{
    decorate, labeled_planar_trees, labeled_rooted_trees, multilinear_pbts, pbt_shapes, pbts, permutations,
    planar_shapes, rooted_shapes,
};
pub use parse::{parse_pbt, parse_planar, parse_rooted};
pub use pbt::{Alphabet, Gen, Pbt, PbtNode};
pub use planar::{Angle, PlanarTree};
pub use rooted::RootedTree;

use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Species {
    Planar,
    NonPlanar,
    Binary,
}

/// A tree of any species, as produced by [`parse`] and [`enumerate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyTree {
    Planar(PlanarTree),
    NonPlanar(RootedTree),
    Binary(Pbt),
}

impl AnyTree {
    pub fn print(&self, alphabet: &Alphabet) -> String {
        match self {
            AnyTree::Planar(t) => t.to_string(),
            AnyTree::NonPlanar(t) => t.to_string(),
            AnyTree::Binary(t) => t.to_bracket(alphabet),
        }
    }
}

/// Parses `text` as a tree of the given species. Binary trees take their
/// decorations from `alphabet`.
pub fn parse(text: &str, species: Species, alphabet: &Alphabet) -> Result<AnyTree> {
    Ok(match species {
        Species::Planar => AnyTree::Planar(parse_planar(text)?),
        Species::NonPlanar => AnyTree::NonPlanar(parse_rooted(text)?),
        Species::Binary => AnyTree::Binary(parse_pbt(text, alphabet)?),
    })
}

/// Exhaustive, duplicate-free enumeration. With `labels`, rooted species use
/// exactly that vertex set and binary trees are decorated by permutations of
/// the first `size` generators; without, one representative per shape.
pub fn enumerate(species: Species, size: usize, labels: Option<&[String]>) -> Vec<AnyTree> {
    match (species, labels) {
        (Species::Planar, None) => planar_shapes(size).into_iter().map(AnyTree::Planar).collect(),
        (Species::Planar, Some(l)) => labeled_planar_trees(l).into_iter().map(AnyTree::Planar).collect(),
        (Species::NonPlanar, None) => rooted_shapes(size).into_iter().map(AnyTree::NonPlanar).collect(),
        (Species::NonPlanar, Some(l)) => labeled_rooted_trees(l).into_iter().map(AnyTree::NonPlanar).collect(),
        (Species::Binary, None) => pbt_shapes(size).into_iter().map(AnyTree::Binary).collect(),
        (Species::Binary, Some(_)) => multilinear_pbts(size).into_iter().map(AnyTree::Binary).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn print_parse_roundtrip_all_species() {
        let alpha = Alphabet::letters(3);
        for n in 1..=6 {
            for t in enumerate(Species::Planar, n, None) {
                assert_eq!(parse(&t.print(&alpha), Species::Planar, &alpha).unwrap(), t);
            }
            for t in enumerate(Species::NonPlanar, n, None) {
                assert_eq!(parse(&t.print(&alpha), Species::NonPlanar, &alpha).unwrap(), t);
            }
            for t in pbts(n.min(4), 3) {
                let s = t.to_bracket(&alpha);
                assert_eq!(parse_pbt(&s, &alpha).unwrap(), t);
            }
        }
        let labels: Vec<String> = (1..=4).map(|i| i.to_string()).collect();
        for t in enumerate(Species::NonPlanar, 4, Some(&labels)) {
            assert_eq!(parse(&t.print(&alpha), Species::NonPlanar, &alpha).unwrap(), t);
        }
    }

    #[test]
    fn species_examples() {
        let alpha = Alphabet::letters(2);
        let t = parse("1(3,2)", Species::NonPlanar, &alpha).unwrap();
        assert_eq!(t.print(&alpha), "1(2,3)");
        let b = parse("(* a (* b *))", Species::Binary, &alpha).unwrap();
        assert_eq!(b, AnyTree::Binary(Pbt::node(Pbt::Leaf, Gen(0), Pbt::generator(Gen(1)))));
    }
}
