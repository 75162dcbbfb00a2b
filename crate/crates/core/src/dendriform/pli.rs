use std::collections::{BTreeMap, VecDeque};

use super::free::{self, Tilde};
use crate::exactlin::DenseSpan;
use crate::trees::{pbts, permutations, Pbt};
use crate::{Error, Result};

/// Shuffles of `1..=p+q` with the first block reversed:
/// `σ(p) < … < σ(1)` and `σ(p+1) < … < σ(p+q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PliSet {
    pub p: usize,
    pub q: usize,
    /// One-based images `[σ(1), …, σ(p+q)]`.
    pub permutations: Vec<Vec<usize>>,
}

pub fn pli(p: usize, q: usize) -> PliSet {
    let permutations = permutations(p + q)
        .into_iter()
        .map(|s| s.into_iter().map(|i| i + 1).collect::<Vec<_>>())
        .filter(|s| s[..p].windows(2).all(|w| w[0] > w[1]) && s[p..].windows(2).all(|w| w[0] < w[1]))
        .collect();
    PliSet { p, q, permutations }
}

/// The dendriform ideal generated by `seed` in the free algebra on
/// `num_gens` generators, truncated at `degree_bound`, as one span per degree.
pub fn s_closure(seed: &[Tilde], degree_bound: usize, num_gens: usize) -> Result<BTreeMap<usize, DenseSpan<Pbt>>> {
    let mut spans: BTreeMap<usize, DenseSpan<Pbt>> = (1..=degree_bound)
        .map(|d| (d, DenseSpan::new(pbts(d, num_gens))))
        .collect();
    let mut queue = VecDeque::new();
    for s in seed {
        if !s.coeff(&Pbt::Leaf).is_zero() {
            return Err(Error::UnitPart);
        }
        let top = s.keys().map(Pbt::degree).max().unwrap_or(0);
        if top > degree_bound {
            return Err(Error::DegreeOverflow {
                degree: top,
                bound: degree_bound,
            });
        }
        for d in 1..=degree_bound {
            let part = free::component(s, d);
            if let Some(row) = spans.get_mut(&d).unwrap().insert(&part)? {
                queue.push_back((d, row));
            }
        }
    }
    while let Some((d, u)) = queue.pop_front() {
        for e in 1..=degree_bound.saturating_sub(d) {
            for w in pbts(e, num_gens) {
                let w = Tilde::basis(w);
                for p in [
                    free::prec(&u, &w)?,
                    free::prec(&w, &u)?,
                    free::succ(&u, &w)?,
                    free::succ(&w, &u)?,
                ] {
                    if let Some(row) = spans.get_mut(&(d + e)).unwrap().insert(&p)? {
                        queue.push_back((d + e, row));
                    }
                }
            }
        }
    }
    Ok(spans)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dendriform::free::generator;
    use crate::trees::Gen;

    #[test]
    fn pli_sizes() {
        let p11 = pli(1, 1);
        assert_eq!(p11.permutations, vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(pli(2, 1).permutations.len(), 3);
        assert_eq!(pli(2, 2).permutations.len(), 6);
        assert!(pli(2, 1).permutations.contains(&vec![3, 1, 2]));
    }

    #[test]
    fn closure_of_one_relation() {
        let a = generator(Gen(0));
        let s = free::prec(&a, &a).unwrap().sub(&free::succ(&a, &a).unwrap());
        let spans = s_closure(std::slice::from_ref(&s), 2, 1).unwrap();
        assert_eq!(spans[&2].rank(), 1);
        let spans = s_closure(&[s], 3, 1).unwrap();
        assert_eq!(spans[&3].rank(), 4);
        assert!(s_closure(&[], 3, 1).unwrap().values().all(|s| s.rank() == 0));
        assert_eq!(s_closure(&[free::unit()], 3, 1).unwrap_err(), Error::UnitPart);
    }
}
