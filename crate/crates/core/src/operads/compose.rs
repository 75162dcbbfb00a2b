use std::collections::{BTreeMap, BTreeSet};

use crate::exactlin::{LinComb, Rational};
use crate::trees::{permutations, PlanarTree, RootedTree};
use crate::{Error, Result};

/// Elements of `APE(n)` (equivalently `Brace(n)`).
pub type PlanarOp = LinComb<PlanarTree>;
/// Elements of `PreLie(n)`.
pub type PreLieOp = LinComb<RootedTree>;

/// Nondecreasing sequences of length `k` with values in `0..a`;
/// there are `binom(a + k − 1, k)` of them.
pub fn weakly_increasing(k: usize, a: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, lo: usize, a: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in lo..a {
            cur.push(v);
            go(k, v, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, 0, a, &mut Vec::with_capacity(k), &mut out);
    out
}

/// All maps `0..k → 0..n`, as value sequences.
fn all_maps(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|m| {
                (0..n).map(move |v| {
                    let mut m = m.clone();
                    m.push(v);
                    m
                })
            })
            .collect();
    }
    out
}

fn check_disjoint<'a>(
    outer: impl IntoIterator<Item = &'a str>,
    at: &str,
    inner: impl IntoIterator<Item = &'a str>,
) -> Result<()> {
    let outer: BTreeSet<&str> = outer.into_iter().filter(|&l| l != at).collect();
    for l in inner {
        if outer.contains(l) {
            return Err(Error::LabelCollision(l.to_string()));
        }
    }
    Ok(())
}

fn replace_vertex(t: &PlanarTree, at: &str, by: &PlanarTree) -> PlanarTree {
    if t.label == at {
        return by.clone();
    }
    PlanarTree::new(
        t.label.clone(),
        t.children.iter().map(|c| replace_vertex(c, at, by)).collect(),
    )
}

/// Rebuilds `s` with the trees of `buckets[i]` grafted at its `i`-th angle.
fn graft_at_angles(s: &PlanarTree, buckets: &[Vec<PlanarTree>], next: &mut usize) -> PlanarTree {
    let mut children = Vec::new();
    for c in &s.children {
        children.extend(buckets[*next].iter().cloned());
        *next += 1;
        children.push(graft_at_angles(c, buckets, next));
    }
    children.extend(buckets[*next].iter().cloned());
    *next += 1;
    PlanarTree::new(s.label.clone(), children)
}

/// The basis terms of `outer ∘_at inner` in APE, one per weakly increasing
/// map from the edges entering `at` to the angles of `inner`, uncollected.
pub fn compose_ape_terms(outer: &PlanarTree, at: &str, inner: &PlanarTree) -> Result<Vec<PlanarTree>> {
    let edges = outer.entering_edges(at)?;
    check_disjoint(outer.labels(), at, inner.labels())?;
    let a = 2 * inner.size() - 1;
    let mut out = Vec::new();
    for f in weakly_increasing(edges.len(), a) {
        let mut buckets = vec![Vec::new(); a];
        for (e, &i) in edges.iter().zip(&f) {
            buckets[i].push(e.clone());
        }
        let grafted = graft_at_angles(inner, &buckets, &mut 0);
        out.push(replace_vertex(outer, at, &grafted));
    }
    Ok(out)
}

pub fn compose_ape(outer: &PlanarOp, at: &str, inner: &PlanarOp) -> Result<PlanarOp> {
    let mut out = PlanarOp::zero();
    for (t, c) in outer {
        for (s, d) in inner {
            let cd = c * d;
            for term in compose_ape_terms(t, at, s)? {
                out.add_term(term, cd.clone());
            }
        }
    }
    Ok(out)
}

fn graft_at_vertices(s: &PlanarTree, extra: &BTreeMap<&str, Vec<PlanarTree>>) -> PlanarTree {
    let mut children: Vec<PlanarTree> = s.children.iter().map(|c| graft_at_vertices(c, extra)).collect();
    if let Some(more) = extra.get(s.label.as_str()) {
        children.extend(more.iter().cloned());
    }
    PlanarTree::new(s.label.clone(), children)
}

/// The terms of `outer ∘_at inner` in PreLie: every map from the edges
/// entering `at` to the vertices of `inner`, uncollected.
pub fn compose_prelie_terms(outer: &RootedTree, at: &str, inner: &RootedTree) -> Result<Vec<RootedTree>> {
    let po = outer.to_planar();
    let pi = inner.to_planar();
    let edges = po.entering_edges(at)?;
    check_disjoint(po.labels(), at, pi.labels())?;
    let verts = pi.labels();
    let mut out = Vec::new();
    for f in all_maps(edges.len(), verts.len()) {
        let mut extra: BTreeMap<&str, Vec<PlanarTree>> = BTreeMap::new();
        for (e, &v) in edges.iter().zip(&f) {
            extra.entry(verts[v]).or_default().push(e.clone());
        }
        let grafted = graft_at_vertices(&pi, &extra);
        out.push(RootedTree::from_planar(&replace_vertex(&po, at, &grafted)));
    }
    Ok(out)
}

pub fn compose_prelie(outer: &PreLieOp, at: &str, inner: &PreLieOp) -> Result<PreLieOp> {
    let mut out = PreLieOp::zero();
    for (t, c) in outer {
        for (s, d) in inner {
            let cd = c * d;
            for term in compose_prelie_terms(t, at, s)? {
                out.add_term(term, cd.clone());
            }
        }
    }
    Ok(out)
}

/// Every planar embedding of `t`: all child orders at every vertex.
pub fn planar_embeddings(t: &RootedTree) -> Vec<PlanarTree> {
    let kids: Vec<Vec<PlanarTree>> = t.children().iter().map(planar_embeddings).collect();
    let mut out = Vec::new();
    for p in permutations(kids.len()) {
        let mut partial: Vec<Vec<PlanarTree>> = vec![Vec::new()];
        for &i in &p {
            partial = partial
                .into_iter()
                .flat_map(|pre| {
                    kids[i].iter().map(move |k| {
                        let mut pre = pre.clone();
                        pre.push(k.clone());
                        pre
                    })
                })
                .collect();
        }
        out.extend(partial.into_iter().map(|cs| PlanarTree::new(t.label(), cs)));
    }
    out
}

/// The symmetrization morphism PreLie → APE.
pub fn phi(t: &PreLieOp) -> PlanarOp {
    t.map_linear(|r| PlanarOp::from_terms(planar_embeddings(r).into_iter().map(|p| (p, Rational::one()))))
}

/// The corolla `Corl_n` as an operation: root `1`, leaves `2..=n+1`.
pub fn corolla(n: usize) -> PlanarOp {
    PlanarOp::basis(PlanarTree::corolla(n))
}

fn leaf(label: usize) -> PlanarTree {
    PlanarTree::leaf(label.to_string())
}

/// Compositions of `m` into `parts` nonnegative parts.
pub fn compositions(m: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if m == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=m {
        for mut rest in compositions(m - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Left side minus right side of the brace relation
///
/// ```text
/// {{z|x₁,…,xₙ}|y₁,…,y_m} = Σ {z|Y₀,{x₁|Y₁},Y₂,…,{xₙ|Y_{2n−1}},Y_{2n}}
/// ```
///
/// summed over decompositions of `y₁…y_m` into consecutive, possibly empty
/// intervals. Labels: `z = 1`, `x_i = i+1`, `y_j = n+j+1`.
pub fn brace_relation_defect(n: usize, m: usize) -> Result<PlanarOp> {
    let z = PlanarTree::new("1", (2..=n + 1).map(leaf).collect());
    let ys: Vec<PlanarTree> = (n + 2..=n + m + 1).map(leaf).collect();
    let outer = PlanarTree::new("0", ys.clone());
    let lhs = compose_ape(&PlanarOp::basis(outer), "0", &PlanarOp::basis(z))?;
    let mut rhs = PlanarOp::zero();
    for parts in compositions(m, 2 * n + 1) {
        let mut next = 0;
        let mut take = |k: usize| {
            let block = ys[next..next + k].to_vec();
            next += k;
            block
        };
        let mut children = Vec::new();
        for (i, &k) in parts.iter().enumerate() {
            let block = take(k);
            if i % 2 == 0 {
                children.extend(block);
            } else {
                children.push(PlanarTree::new((i / 2 + 2).to_string(), block));
            }
        }
        rhs.add_term(PlanarTree::new("1", children), Rational::one());
    }
    Ok(lhs.sub(&rhs))
}

/// Number of right-hand terms of the brace relation: `binom(m + 2n, 2n)`.
pub fn brace_relation_terms(n: usize, m: usize) -> usize {
    compositions(m, 2 * n + 1).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::format_sum;
    use crate::trees::{parse_planar, parse_rooted};

    fn ape(s: &str) -> PlanarOp {
        PlanarOp::basis(parse_planar(s).unwrap())
    }
    fn pl(s: &str) -> PreLieOp {
        PreLieOp::basis(parse_rooted(s).unwrap())
    }
    fn show<K: Ord + std::fmt::Display>(x: &LinComb<K>) -> String {
        format_sum(x, |k| k.to_string())
    }

    #[test]
    fn ape_examples() {
        assert_eq!(show(&compose_ape(&ape("1(2)"), "2", &ape("3")).unwrap()), "1(3)");
        assert_eq!(
            show(&compose_ape(&ape("1(2)"), "1", &ape("3(4)")).unwrap()),
            "3(2,4) + 3(4,2) + 3(4(2))"
        );
        assert_eq!(
            compose_ape(&ape("1(2)"), "9", &ape("3")),
            Err(Error::UnknownVertex("9".into()))
        );
        assert_eq!(
            compose_ape(&ape("1(2)"), "1", &ape("2")),
            Err(Error::LabelCollision("2".into()))
        );
    }

    #[test]
    fn grafting_term_count() {
        let outer = parse_planar("1(2,3)").unwrap();
        let inner = parse_planar("4(5(6,7),8(9))").unwrap();
        assert_eq!(compose_ape_terms(&outer, "1", &inner).unwrap().len(), 66);
    }

    #[test]
    fn prelie_examples() {
        let x = compose_prelie(&pl("1(2)"), "1", &pl("3(4)")).unwrap();
        assert_eq!(show(&x), "3(2,4) + 3(4(2))");
        assert_eq!(show(&compose_prelie(&pl("1(2)"), "2", &pl("3")).unwrap()), "1(3)");
    }

    #[test]
    fn phi_examples() {
        assert_eq!(show(&phi(&pl("1(2(3))"))), "1(2(3))");
        assert_eq!(show(&phi(&pl("1(2,3)"))), "1(2,3) + 1(3,2)");
        assert_eq!(phi(&pl("1(2,3,4)")).len(), 6);
    }

    #[test]
    fn brace_relation_small() {
        assert!(brace_relation_defect(1, 1).unwrap().is_zero());
        assert_eq!(brace_relation_terms(1, 1), 3);
        assert_eq!(brace_relation_terms(1, 2), 6);
        assert_eq!(brace_relation_terms(2, 1), 5);
    }

    #[test]
    fn stars_and_bars() {
        assert_eq!(weakly_increasing(2, 11).len(), 66);
        assert_eq!(weakly_increasing(0, 5), vec![Vec::<usize>::new()]);
        assert_eq!(compositions(2, 3).len(), 6);
    }
}
