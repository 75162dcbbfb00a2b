use std::collections::{BTreeMap, VecDeque};

use super::compose::{phi, PlanarOp, PreLieOp};
use crate::dendriform::free::{self, Tilde};
use crate::dendriform::{psi_multilinear, SignConvention};
use crate::exactlin::DenseSpan;
use crate::trees::{labeled_planar_trees, labeled_rooted_trees, multilinear_pbts, Gen, Pbt};
use crate::{Error, Result};

/// `Dend(n)`: the multilinear part of the free dendriform algebra on
/// `Gen(0)..Gen(n-1)`, where `Gen(i)` stands for the slot `x_{i+1}`.
#[derive(Clone, Debug)]
pub struct MultilinearDendSpace {
    pub arity: usize,
    pub basis: Vec<Pbt>,
}

impl MultilinearDendSpace {
    pub fn new(arity: usize) -> Self {
        MultilinearDendSpace {
            arity,
            basis: multilinear_pbts(arity),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureMode {
    /// Closed under substitution into operations and relabeling.
    LeftIdeal,
    /// Additionally closed under substituting operations into the slots.
    TwoSided,
}

/// Per-arity subspaces `J(n) ⊆ Dend(n)` for `1 ≤ n ≤ max_arity`.
#[derive(Clone, Debug)]
pub struct IdealClosure {
    pub max_arity: usize,
    spans: BTreeMap<usize, DenseSpan<Pbt>>,
}

impl IdealClosure {
    pub fn span(&self, arity: usize) -> &DenseSpan<Pbt> {
        &self.spans[&arity]
    }

    pub fn dims(&self) -> BTreeMap<usize, usize> {
        self.spans.iter().map(|(&n, s)| (n, s.rank())).collect()
    }

    /// Membership of a homogeneous multilinear element.
    pub fn contains(&self, e: &Tilde) -> Result<bool> {
        let n = multilinear_arity(e)?;
        match self.spans.get(&n) {
            Some(s) => s.contains(e),
            None => Err(Error::DegreeOverflow {
                degree: n,
                bound: self.max_arity,
            }),
        }
    }
}

/// The arity of a homogeneous multilinear element (0 for zero).
pub fn multilinear_arity(e: &Tilde) -> Result<usize> {
    let mut arity = None;
    for t in e.keys() {
        let mut gs = t.gens();
        gs.sort();
        let n = gs.len();
        if gs.iter().enumerate().any(|(i, g)| g.index() != i) || arity.is_some_and(|a| a != n) {
            return Err(Error::Domain("expected a homogeneous multilinear element".into()));
        }
        arity = Some(n);
    }
    Ok(arity.unwrap_or(0))
}

fn shifted(t: &Pbt, by: u32) -> Pbt {
    t.relabel(&|g| Gen(g.0 + by))
}

fn swap(e: &Tilde, i: u32) -> Tilde {
    e.map_keys(|t| {
        t.relabel(&|g| {
            if g.0 == i {
                Gen(i + 1)
            } else if g.0 == i + 1 {
                Gen(i)
            } else {
                g
            }
        })
    })
}

/// `u ∘_i g`: slot `x_{i+1}` becomes `x_{i+1} g x_{i+2}`.
fn right_compose(u: &Tilde, i: u32, prec: bool) -> Result<Tilde> {
    free::eval(u, &|g: Gen| {
        if g.0 < i {
            free::generator(g)
        } else if g.0 > i {
            free::generator(Gen(g.0 + 1))
        } else {
            let (a, b) = (free::generator(Gen(i)), free::generator(Gen(i + 1)));
            if prec {
                free::prec(&a, &b).expect("unit-free")
            } else {
                free::succ(&a, &b).expect("unit-free")
            }
        }
    })
}

/// Saturates `generators` to the smallest family of subspaces of
/// `Dend(1..=max_arity)` closed under the operations of `mode` and under
/// the symmetric group actions.
pub fn ideal_closure(generators: &[Tilde], max_arity: usize, mode: ClosureMode) -> Result<IdealClosure> {
    let mut spans: BTreeMap<usize, DenseSpan<Pbt>> = (1..=max_arity)
        .map(|n| (n, DenseSpan::new(multilinear_pbts(n))))
        .collect();
    let mut queue: VecDeque<(usize, Tilde)> = VecDeque::new();
    let push = |spans: &mut BTreeMap<usize, DenseSpan<Pbt>>,
                queue: &mut VecDeque<(usize, Tilde)>,
                n: usize,
                v: &Tilde|
     -> Result<()> {
        if let Some(row) = spans.get_mut(&n).unwrap().insert(v)? {
            queue.push_back((n, row));
        }
        Ok(())
    };
    for g in generators {
        let n = multilinear_arity(g)?;
        if n == 0 {
            continue;
        }
        if n > max_arity {
            return Err(Error::DegreeOverflow {
                degree: n,
                bound: max_arity,
            });
        }
        push(&mut spans, &mut queue, n, g)?;
    }
    let partners: BTreeMap<(usize, usize), Vec<Tilde>> = (1..=max_arity)
        .flat_map(|k| (1..=max_arity - k).map(move |m| (k, m)))
        .map(|(k, m)| {
            let ws = multilinear_pbts(m)
                .iter()
                .map(|w| Tilde::basis(shifted(w, k as u32)))
                .collect();
            ((k, m), ws)
        })
        .collect();
    while let Some((k, u)) = queue.pop_front() {
        for i in 0..k.saturating_sub(1) as u32 {
            push(&mut spans, &mut queue, k, &swap(&u, i))?;
        }
        for m in 1..=max_arity - k {
            for w in &partners[&(k, m)] {
                for p in [
                    free::prec(&u, w)?,
                    free::prec(w, &u)?,
                    free::succ(&u, w)?,
                    free::succ(w, &u)?,
                ] {
                    push(&mut spans, &mut queue, k + m, &p)?;
                }
            }
        }
        if mode == ClosureMode::TwoSided && k < max_arity {
            for i in 0..k as u32 {
                for prec in [true, false] {
                    push(&mut spans, &mut queue, k + 1, &right_compose(&u, i, prec)?)?;
                }
            }
        }
    }
    Ok(IdealClosure { max_arity, spans })
}

/// `dim Dend(n) − dim J(n)` per arity.
pub fn quotient_dims(closure: &IdealClosure) -> BTreeMap<usize, usize> {
    closure
        .spans
        .iter()
        .map(|(&n, s)| (n, s.ambient_dim() - s.rank()))
        .collect()
}

fn slot_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// `ψ(T)` for every labeled planar tree `T` with `2..=max_arity` vertices.
pub fn brace_generators(max_arity: usize) -> Result<Vec<Tilde>> {
    let mut out = Vec::new();
    for n in 2..=max_arity {
        for t in labeled_planar_trees(&slot_labels(n)) {
            out.push(psi_multilinear(&PlanarOp::basis(t), n, SignConvention::Standard)?);
        }
    }
    Ok(out)
}

/// `ψ(φ(T))` for every labeled rooted tree `T` with `2..=max_arity` vertices.
pub fn prelie_generators(max_arity: usize) -> Result<Vec<Tilde>> {
    let mut out = Vec::new();
    for n in 2..=max_arity {
        for t in labeled_rooted_trees(&slot_labels(n)) {
            let op = phi(&PreLieOp::basis(t));
            out.push(psi_multilinear(&op, n, SignConvention::Standard)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_full() {
        let c = ideal_closure(&[], 3, ClosureMode::TwoSided).unwrap();
        assert_eq!(quotient_dims(&c), BTreeMap::from([(1, 1), (2, 4), (3, 30)]));
        let full: Vec<Tilde> = multilinear_pbts(2).into_iter().map(Tilde::basis).collect();
        let c = ideal_closure(&full, 3, ClosureMode::LeftIdeal).unwrap();
        assert_eq!(c.dims()[&3], 30);
    }

    #[test]
    fn prelie_arity_two_generates_zin_kernel() {
        let gens = prelie_generators(2).unwrap();
        let c = ideal_closure(&gens, 3, ClosureMode::TwoSided).unwrap();
        assert_eq!(c.dims()[&3], 24);
        assert_eq!(quotient_dims(&c)[&2], 2);
    }

    #[test]
    fn arity_detection() {
        let a = free::generator(Gen(0));
        let b = free::generator(Gen(1));
        assert_eq!(multilinear_arity(&free::prec(&a, &b).unwrap()).unwrap(), 2);
        assert!(multilinear_arity(&free::prec(&a, &a).unwrap()).is_err());
    }
}
