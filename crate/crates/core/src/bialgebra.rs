//! The Loday–Ronco coproduct on `K·1 ⊕ D(V)`, its compatibility with the
//! dendriform products, and primitive elements with their brace structure.
//!
//! ```text
//! Δ(1) = 1 ⊗ 1
//! Δ(x ∨^v y) = (x ∨^v y) ⊗ 1 + Σ (x₍₁₎ * y₍₁₎) ⊗ (x₍₂₎ ∨^v y₍₂₎)
//! ```

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use crate::dendriform::free::{self, Tilde};
use crate::dendriform::{corolla_tilde, SignConvention};
use crate::exactlin::{format_sum, kernel_basis, DenseSpan, LinComb, RatMatrix, Rational};
use crate::trees::{pbts, Alphabet, Pbt};
use crate::{Error, Result};

/// An element of `W ⊗ W`, with the unit as the leaf tree on either side.
pub type Tensor2 = LinComb<(Pbt, Pbt)>;

thread_local! {
    static COPRODUCT_CACHE: RefCell<HashMap<Pbt, Tensor2>> = RefCell::new(HashMap::new());
}

pub fn coproduct_tree(t: &Pbt) -> Tensor2 {
    let Some((l, v, r)) = t.split() else {
        return Tensor2::basis((Pbt::Leaf, Pbt::Leaf));
    };
    if let Some(hit) = COPRODUCT_CACHE.with(|c| c.borrow().get(t).cloned()) {
        return hit;
    }
    let mut out = Tensor2::basis((t.clone(), Pbt::Leaf));
    let (dl, dr) = (coproduct_tree(l), coproduct_tree(r));
    for ((l1, l2), c) in &dl {
        for ((r1, r2), d) in &dr {
            let cd = c * d;
            let right = Pbt::node(l2.clone(), v, r2.clone());
            for (left, e) in &free::star_trees(l1, r1) {
                out.add_term((left.clone(), right.clone()), &cd * e);
            }
        }
    }
    COPRODUCT_CACHE.with(|c| c.borrow_mut().insert(t.clone(), out.clone()));
    out
}

pub fn coproduct(e: &Tilde) -> Tensor2 {
    e.map_linear(coproduct_tree)
}

/// `Δ(x) − x⊗1 − 1⊗x` for unit-free `x`.
pub fn reduced_coproduct(e: &Tilde) -> Tensor2 {
    let mut out = coproduct(e);
    for (t, c) in e {
        out.add_term((t.clone(), Pbt::Leaf), -c);
        out.add_term((Pbt::Leaf, t.clone()), -c);
    }
    out
}

pub fn is_primitive(e: &Tilde) -> bool {
    e.coeff(&Pbt::Leaf).is_zero() && reduced_coproduct(e).is_zero()
}

/// `(f ⊗ g)` applied to a tensor, for linear maps given on basis trees.
pub fn tensor_map<A: Ord + Clone, B: Ord + Clone>(
    x: &Tensor2,
    f: impl Fn(&Pbt) -> LinComb<A>,
    g: impl Fn(&Pbt) -> LinComb<B>,
) -> LinComb<(A, B)> {
    let mut out = LinComb::zero();
    for ((a, b), c) in x {
        let fa = f(a);
        let gb = g(b);
        for (ka, ca) in &fa {
            for (kb, cb) in &gb {
                out.add_term((ka.clone(), kb.clone()), &(c * ca) * cb);
            }
        }
    }
    out
}

/// Counit: the unit coefficient.
pub fn counit(e: &Tilde) -> Rational {
    e.coeff(&Pbt::Leaf)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Prec,
    Succ,
}

/// `Δ(x ▹ y)` minus `(x▹y)⊗1 + Σ' (x₍₁₎*y₍₁₎) ⊗ (x₍₂₎ ▹ y₍₂₎)`, where `Σ'`
/// skips the single term with `x₍₂₎ = y₍₂₎ = 1`.
pub fn compat_defect(x: &Tilde, y: &Tilde, side: Side) -> Result<Tensor2> {
    if !x.coeff(&Pbt::Leaf).is_zero() || !y.coeff(&Pbt::Leaf).is_zero() {
        return Err(Error::UnitPart);
    }
    let op = |a: &Pbt, b: &Pbt| match side {
        Side::Prec => free::prec_trees(a, b),
        Side::Succ => free::succ_trees(a, b),
    };
    let xy = match side {
        Side::Prec => free::prec(x, y)?,
        Side::Succ => free::succ(x, y)?,
    };
    let mut out = coproduct(&xy);
    out.add_scaled(&-Rational::one(), &xy.map_keys(|t| (t.clone(), Pbt::Leaf)));
    for ((x1, x2), c) in &coproduct(x) {
        for ((y1, y2), d) in &coproduct(y) {
            if x2.is_leaf() && y2.is_leaf() {
                continue;
            }
            let cd = -(c * d);
            let right = op(x2, y2)?;
            for (l, e) in &free::star_trees(x1, y1) {
                for (r, f) in &right {
                    out.add_term((l.clone(), r.clone()), &(&cd * e) * f);
                }
            }
        }
    }
    Ok(out)
}

/// The kernel of `Δ̄` on the degree-`degree` slice, as a reduced echelon
/// basis over the canonical tree order.
pub fn primitives(degree: usize, num_gens: usize) -> Result<Vec<Tilde>> {
    let trees = pbts(degree, num_gens);
    let images: Vec<Tensor2> = trees
        .iter()
        .map(|t| reduced_coproduct(&Tilde::basis(t.clone())))
        .collect();
    let mut rows: BTreeMap<(Pbt, Pbt), usize> = BTreeMap::new();
    for im in &images {
        for k in im.keys() {
            let n = rows.len();
            rows.entry(k.clone()).or_insert(n);
        }
    }
    let mut m = vec![vec![Rational::zero(); trees.len()]; rows.len()];
    for (j, im) in images.iter().enumerate() {
        for (k, c) in im {
            m[rows[k]][j] = c.clone();
        }
    }
    let kernel = if rows.is_empty() {
        (0..trees.len())
            .map(|j| {
                let mut v = vec![Rational::zero(); trees.len()];
                v[j] = Rational::one();
                v
            })
            .collect()
    } else {
        kernel_basis(&RatMatrix::from_rows(m))
    };
    let mut span = DenseSpan::new(trees);
    for v in &kernel {
        let lc = span.to_sparse(v);
        span.insert(&lc)?;
    }
    Ok(span.basis())
}

/// `{x₀ | x₁,…,x_k}` on primitive arguments, through ψ of the corolla.
pub fn brace_on_primitives(args: &[Tilde]) -> Result<Tilde> {
    let (head, rest) = args.split_first().ok_or(Error::Arity { expected: 1, got: 0 })?;
    for (i, a) in args.iter().enumerate() {
        if !is_primitive(a) {
            return Err(Error::NotPrimitive(i));
        }
    }
    corolla_tilde(head, rest, SignConvention::Standard)
}

/// `lhs (x) rhs` terms, with `1` for the unit.
pub fn format_tensor(x: &Tensor2, alphabet: &Alphabet, expr: bool) -> String {
    let show = |t: &Pbt| {
        if expr {
            let s = t.to_expr(alphabet);
            if t.degree() > 1 && s.contains(['<', '>']) {
                format!("({s})")
            } else {
                s
            }
        } else {
            t.to_bracket(alphabet)
        }
    };
    format_sum(x, |(a, b)| format!("{} (x) {}", show(a), show(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::Gen;

    fn g(i: u32) -> Tilde {
        free::generator(Gen(i))
    }

    #[test]
    fn small_coproducts() {
        assert_eq!(coproduct(&free::unit()), Tensor2::basis((Pbt::Leaf, Pbt::Leaf)));
        assert!(reduced_coproduct(&g(0)).is_zero());
        let ab = free::prec(&g(0), &g(1)).unwrap();
        let red = reduced_coproduct(&ab);
        assert_eq!(red, Tensor2::basis((Pbt::generator(Gen(1)), Pbt::generator(Gen(0)))));
        let ab = free::succ(&g(0), &g(1)).unwrap();
        assert_eq!(
            reduced_coproduct(&ab),
            Tensor2::basis((Pbt::generator(Gen(0)), Pbt::generator(Gen(1))))
        );
    }

    #[test]
    fn compatibility_on_generators() {
        for side in [Side::Prec, Side::Succ] {
            assert!(compat_defect(&g(0), &g(1), side).unwrap().is_zero());
        }
        assert_eq!(compat_defect(&free::unit(), &g(0), Side::Prec), Err(Error::UnitPart));
    }

    #[test]
    fn primitive_dimensions() {
        assert_eq!(primitives(1, 2).unwrap().len(), 2);
        let p2 = primitives(2, 1).unwrap();
        assert_eq!(p2.len(), 1);
        let a = g(0);
        let expect = free::prec(&a, &a).unwrap().sub(&free::succ(&a, &a).unwrap());
        assert!(p2[0] == expect || p2[0] == expect.scaled(&-Rational::one()));
        let dims: Vec<usize> = (1..=5).map(|n| primitives(n, 1).unwrap().len()).collect();
        assert_eq!(dims, vec![1, 1, 2, 5, 14]);
    }

    #[test]
    fn braces_of_primitives() {
        let a = g(0);
        let aa = brace_on_primitives(&[a.clone(), a.clone()]).unwrap();
        assert!(is_primitive(&aa));
        assert!(is_primitive(
            &brace_on_primitives(&[a.clone(), a.clone(), a.clone()]).unwrap()
        ));
        assert!(is_primitive(&brace_on_primitives(&[aa.clone(), a.clone()]).unwrap()));
        let not = free::prec(&a, &a).unwrap();
        assert_eq!(brace_on_primitives(&[a, not]), Err(Error::NotPrimitive(1)));
    }
}
