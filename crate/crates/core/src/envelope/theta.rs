use super::quotient::{build_envelope, weighted_trees, TruncatedQuotient};
use super::structure::{harvest, Harvest};
use crate::bialgebra::{coproduct, tensor_map};
use crate::dendriform::free::{self, Tilde};
use crate::exactlin::DenseSpan;
use crate::trees::{pbts, Pbt};
use crate::Result;

/// Per-weight comparison of `Ũ(Prim D̃(V))` with `D̃(V)` through θ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaReport {
    pub num_gens: usize,
    pub bound: usize,
    /// Quotient dimensions, weights `0..=N`.
    pub quotient_dims: Vec<usize>,
    /// `Catalan(n)·g^n`.
    pub target_dims: Vec<usize>,
    /// Rank of θ on the quotient basis of each weight.
    pub image_ranks: Vec<usize>,
    /// Ideal rows not sent to zero.
    pub kernel_defects: usize,
    /// Trees of `D(B)` on which `Δ∘θ ≠ (θ⊗θ)∘Δ`.
    pub coproduct_defects: usize,
}

impl ThetaReport {
    pub fn dims_match(&self) -> bool {
        self.quotient_dims == self.target_dims
    }

    pub fn surjective(&self) -> bool {
        self.image_ranks == self.target_dims
    }

    pub fn ok(&self) -> bool {
        self.dims_match() && self.surjective() && self.kernel_defects == 0 && self.coproduct_defects == 0
    }
}

/// θ: the dendriform extension of `b_i ↦ p_i`.
pub fn theta(h: &Harvest, e: &Tilde) -> Result<Tilde> {
    free::eval(e, &|g| h.elements[g.index()].clone())
}

fn theta_tree(h: &Harvest, t: &Pbt) -> Tilde {
    free::eval_tree(t, &|g| h.elements[g.index()].clone()).expect("unit-free substitution")
}

pub fn theta_roundtrip(num_gens: usize, bound: usize) -> Result<ThetaReport> {
    let h = harvest(num_gens, bound)?;
    let q = build_envelope(&h.structure, bound, 0)?;
    roundtrip_with(&h, &q)
}

pub fn roundtrip_with(h: &Harvest, q: &TruncatedQuotient) -> Result<ThetaReport> {
    let bound = q.bound();
    let target_dims: Vec<usize> = (0..=bound).map(|n| pbts(n, h.num_gens).len()).collect();
    let mut image_ranks = Vec::new();
    for n in 0..=bound {
        let mut span = DenseSpan::new(pbts(n, h.num_gens));
        for t in q.quotient_basis(n) {
            span.insert(&theta_tree(h, &t))?;
        }
        image_ranks.push(span.rank());
    }
    let kernel_defects = q
        .ideal_basis()
        .iter()
        .filter(|r| !theta(h, r).map(|v| v.is_zero()).unwrap_or(false))
        .count();
    let weights = h.structure.weights();
    let mut coproduct_defects = 0;
    for n in 0..=bound {
        for t in weighted_trees(n, weights) {
            let image = theta_tree(h, &t);
            let lhs = coproduct(&image);
            let th = |s: &Pbt| theta_tree(h, s);
            let rhs = tensor_map(&coproduct(&Tilde::basis(t)), th, th);
            if lhs != rhs {
                coproduct_defects += 1;
            }
        }
    }
    Ok(ThetaReport {
        num_gens: h.num_gens,
        bound,
        quotient_dims: q.dims().to_vec(),
        target_dims,
        image_ranks,
        kernel_defects,
        coproduct_defects,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_generator_to_three() {
        let r = theta_roundtrip(1, 3).unwrap();
        assert_eq!(r.quotient_dims, vec![1, 1, 2, 5]);
        assert!(r.ok(), "{r:?}");
    }
}
