use std::collections::BTreeSet;

use super::{Gen, Pbt, PlanarTree, RootedTree};

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Ordered sequences of planar shapes with `m` vertices in total.
fn planar_forests(m: usize) -> Vec<Vec<PlanarTree>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=m {
        for t in planar_shape_list(first) {
            for mut rest in planar_forests(m - first) {
                rest.insert(0, t.clone());
                out.push(rest);
            }
        }
    }
    out
}

fn planar_shape_list(n: usize) -> Vec<PlanarTree> {
    planar_forests(n - 1)
        .into_iter()
        .map(|f| PlanarTree::new("", f))
        .collect()
}

fn label_preorder(t: &PlanarTree, labels: &[String], next: &mut usize) -> PlanarTree {
    let label = labels[*next].clone();
    *next += 1;
    let children = t.children.iter().map(|c| label_preorder(c, labels, next)).collect();
    PlanarTree::new(label, children)
}

/// Planar rooted shapes on `n` vertices, labeled `1..=n` in preorder.
/// There are Catalan(n−1) of them.
pub fn planar_shapes(n: usize) -> Vec<PlanarTree> {
    assert!(n >= 1);
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    planar_shape_list(n)
        .iter()
        .map(|t| label_preorder(t, &labels, &mut 0))
        .collect()
}

/// Every planar rooted tree whose vertex set is exactly `labels`.
pub fn labeled_planar_trees(labels: &[String]) -> Vec<PlanarTree> {
    let n = labels.len();
    assert!(n >= 1);
    let shapes = planar_shape_list(n);
    let mut out = Vec::with_capacity(shapes.len() * (1..=n).product::<usize>());
    for s in &shapes {
        for p in permutations(n) {
            let lab: Vec<String> = p.iter().map(|&i| labels[i].clone()).collect();
            out.push(label_preorder(s, &lab, &mut 0));
        }
    }
    out
}

/// Every non-planar rooted tree on the vertex set `labels`; n^(n−1) of them.
pub fn labeled_rooted_trees(labels: &[String]) -> Vec<RootedTree> {
    let set: BTreeSet<RootedTree> = labeled_planar_trees(labels)
        .iter()
        .map(RootedTree::from_planar)
        .collect();
    set.into_iter().collect()
}

/// Unlabeled non-planar rooted shapes on `n` vertices, labeled in preorder.
pub fn rooted_shapes(n: usize) -> Vec<RootedTree> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for t in planar_shapes(n) {
        let r = RootedTree::from_planar(&t);
        if seen.insert(r.shape_code()) {
            out.push(r);
        }
    }
    out
}

/// Planar binary tree shapes with `n` internal nodes, all decorated by
/// `Gen(0)`; Catalan(n) of them.
pub fn pbt_shapes(n: usize) -> Vec<Pbt> {
    if n == 0 {
        return vec![Pbt::Leaf];
    }
    let mut out = Vec::new();
    for k in 0..n {
        for l in pbt_shapes(k) {
            for r in pbt_shapes(n - 1 - k) {
                out.push(Pbt::node(l.clone(), Gen(0), r));
            }
        }
    }
    out
}

/// Reassigns decorations of `t` in in-order reading from `gens`.
pub fn decorate(t: &Pbt, gens: &[Gen]) -> Pbt {
    fn go(t: &Pbt, gens: &[Gen], next: &mut usize) -> Pbt {
        match t.split() {
            None => Pbt::Leaf,
            Some((l, _, r)) => {
                let l = go(l, gens, next);
                let g = gens[*next];
                *next += 1;
                let r = go(r, gens, next);
                Pbt::node(l, g, r)
            }
        }
    }
    go(t, gens, &mut 0)
}

/// All trees with `n` internal nodes decorated from `num_gens` generators:
/// Catalan(n)·num_gens^n of them.
pub fn pbts(n: usize, num_gens: usize) -> Vec<Pbt> {
    let shapes = pbt_shapes(n);
    let mut words: Vec<Vec<Gen>> = vec![Vec::new()];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w| {
                (0..num_gens as u32).map(move |g| {
                    let mut w = w.clone();
                    w.push(Gen(g));
                    w
                })
            })
            .collect();
    }
    let mut out = Vec::with_capacity(shapes.len() * words.len());
    for s in &shapes {
        for w in &words {
            out.push(decorate(s, w));
        }
    }
    out.sort();
    out
}

/// Trees with `n` internal nodes decorated by a permutation of
/// `Gen(0)..Gen(n-1)`: the basis of the multilinear part `Dend(n)`.
pub fn multilinear_pbts(n: usize) -> Vec<Pbt> {
    let shapes = pbt_shapes(n);
    let perms = permutations(n);
    let mut out = Vec::with_capacity(shapes.len() * perms.len());
    for s in &shapes {
        for p in &perms {
            let gens: Vec<Gen> = p.iter().map(|&i| Gen(i as u32)).collect();
            out.push(decorate(s, &gens));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalan(n: usize) -> usize {
        let mut c = vec![1usize; n + 1];
        for m in 1..=n {
            c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
        }
        c[n]
    }

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
    }

    #[test]
    fn planar_counts() {
        let s3: Vec<String> = planar_shapes(3).iter().map(|t| t.to_string()).collect();
        assert_eq!(s3.len(), 2);
        assert!(s3.contains(&"1(2(3))".to_string()));
        assert!(s3.contains(&"1(2,3)".to_string()));
        for n in 1..=7 {
            assert_eq!(planar_shapes(n).len(), catalan(n - 1));
        }
    }

    #[test]
    fn cayley_counts() {
        assert_eq!(labeled_rooted_trees(&labels(3)).len(), 9);
        for n in 1..=5 {
            assert_eq!(labeled_rooted_trees(&labels(n)).len(), n.pow(n as u32 - 1));
        }
    }

    #[test]
    fn unlabeled_rooted_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| rooted_shapes(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20]);
    }

    #[test]
    fn pbt_counts() {
        assert_eq!(pbt_shapes(4).len(), 14);
        for n in 0..=7 {
            assert_eq!(pbt_shapes(n).len(), catalan(n));
        }
        assert_eq!(pbts(3, 2).len(), 5 * 8);
        assert_eq!(multilinear_pbts(4).len(), 14 * 24);
    }

    #[test]
    fn angle_law_on_all_small_trees() {
        for n in 1..=7 {
            for t in planar_shapes(n) {
                assert_eq!(t.angles().len(), 2 * n - 1);
                // angles at one vertex appear in slot order
                for v in t.labels() {
                    let slots: Vec<usize> = t
                        .angles()
                        .into_iter()
                        .filter(|a| a.vertex == v)
                        .map(|a| a.slot)
                        .collect();
                    assert!(slots.windows(2).all(|w| w[0] < w[1]));
                }
            }
        }
    }
}
