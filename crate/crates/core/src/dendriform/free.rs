//! Products in the unital free dendriform algebra `K·1 ⊕ D(V)`.
//!
//! Internally an element is a [`Tilde`]: a combination of planar binary
//! trees in which [`Pbt::Leaf`] plays the role of the unit. On basis trees
//! `t = l ∨^v r` and `s = l' ∨^w r'`:
//!
//! ```text
//! t ≺ s = l ∨^v (r * s)      t ≻ s = (t * l') ∨^w r'      * = ≺ + ≻
//! x ≺ 1 = 1 ≻ x = x          1 ≺ x = x ≻ 1 = 0            1 * x = x * 1 = x
//! ```
//!
//! `1 ≺ 1` and `1 ≻ 1` are undefined.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::exactlin::{LinComb, Rational};
use crate::trees::{Gen, Pbt};
use crate::{Error, Result};

/// An element of `K·1 ⊕ D(V)` with the unit stored as the leaf tree.
pub type Tilde = LinComb<Pbt>;

thread_local! {
    static STAR_CACHE: RefCell<HashMap<(Pbt, Pbt), Tilde>> = RefCell::new(HashMap::new());
}

fn graft_right(l: &Pbt, v: Gen, rights: &Tilde) -> Tilde {
    rights.map_keys(|r| Pbt::node(l.clone(), v, r.clone()))
}

fn graft_left(lefts: &Tilde, w: Gen, r: &Pbt) -> Tilde {
    lefts.map_keys(|l| Pbt::node(l.clone(), w, r.clone()))
}

/// `t * s` on basis trees (either may be the unit).
pub fn star_trees(t: &Pbt, s: &Pbt) -> Tilde {
    if t.is_leaf() {
        return Tilde::basis(s.clone());
    }
    if s.is_leaf() {
        return Tilde::basis(t.clone());
    }
    let key = (t.clone(), s.clone());
    if let Some(hit) = STAR_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let mut out = prec_nonunit(t, s);
    out.add_scaled(&Rational::one(), &succ_nonunit(t, s));
    STAR_CACHE.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

fn prec_nonunit(t: &Pbt, s: &Pbt) -> Tilde {
    let (l, v, r) = t.split().expect("nonunit");
    graft_right(l, v, &star_trees(r, s))
}

fn succ_nonunit(t: &Pbt, s: &Pbt) -> Tilde {
    let (l, w, r) = s.split().expect("nonunit");
    graft_left(&star_trees(t, l), w, r)
}

/// `t ≺ s` on basis trees.
pub fn prec_trees(t: &Pbt, s: &Pbt) -> Result<Tilde> {
    match (t.is_leaf(), s.is_leaf()) {
        (true, true) => Err(Error::UnitProduct('<')),
        (true, false) => Ok(Tilde::zero()),
        (false, true) => Ok(Tilde::basis(t.clone())),
        (false, false) => Ok(prec_nonunit(t, s)),
    }
}

/// `t ≻ s` on basis trees.
pub fn succ_trees(t: &Pbt, s: &Pbt) -> Result<Tilde> {
    match (t.is_leaf(), s.is_leaf()) {
        (true, true) => Err(Error::UnitProduct('>')),
        (false, true) => Ok(Tilde::zero()),
        (true, false) => Ok(Tilde::basis(s.clone())),
        (false, false) => Ok(succ_nonunit(t, s)),
    }
}

fn has_unit(a: &Tilde) -> bool {
    !a.coeff(&Pbt::Leaf).is_zero()
}

fn bilinear_checked(a: &Tilde, b: &Tilde, op: char, f: fn(&Pbt, &Pbt) -> Result<Tilde>) -> Result<Tilde> {
    if has_unit(a) && has_unit(b) {
        return Err(Error::UnitProduct(op));
    }
    let mut out = Tilde::zero();
    for (ka, ca) in a {
        for (kb, cb) in b {
            out.add_scaled(&(ca * cb), &f(ka, kb)?);
        }
    }
    Ok(out)
}

pub fn prec(a: &Tilde, b: &Tilde) -> Result<Tilde> {
    bilinear_checked(a, b, '<', prec_trees)
}

pub fn succ(a: &Tilde, b: &Tilde) -> Result<Tilde> {
    bilinear_checked(a, b, '>', succ_trees)
}

pub fn star(a: &Tilde, b: &Tilde) -> Tilde {
    Tilde::bilinear(a, b, star_trees)
}

/// `x ∨^v y = x ≻ v ≺ y`, bilinear in `x` and `y`.
pub fn vee(x: &Tilde, v: Gen, y: &Tilde) -> Tilde {
    Tilde::bilinear(x, y, |l, r| Tilde::basis(Pbt::node(l.clone(), v, r.clone())))
}

pub fn unit() -> Tilde {
    Tilde::basis(Pbt::Leaf)
}

pub fn generator(g: Gen) -> Tilde {
    Tilde::basis(Pbt::generator(g))
}

/// `↗(x₁,…,xₙ) = x₁ ≺ ↗(x₂,…,xₙ)`, with `↗() = 1`.
pub fn upcomb(xs: &[Tilde]) -> Result<Tilde> {
    match xs.split_first() {
        None => Ok(unit()),
        Some((x, [])) => Ok(x.clone()),
        Some((x, rest)) => prec(x, &upcomb(rest)?),
    }
}

/// `↘(x₁,…,xₙ) = ↘(x₁,…,xₙ₋₁) ≻ xₙ`, with `↘() = 1`.
pub fn downcomb(xs: &[Tilde]) -> Result<Tilde> {
    match xs.split_last() {
        None => Ok(unit()),
        Some((x, [])) => Ok(x.clone()),
        Some((x, rest)) => succ(&downcomb(rest)?, x),
    }
}

/// Evaluates the tree `t` as a dendriform expression, substituting `sub(v)`
/// for each decoration `v`. Substituted values must be unit-free.
pub fn eval_tree(t: &Pbt, sub: &dyn Fn(Gen) -> Tilde) -> Result<Tilde> {
    match t.split() {
        None => Ok(unit()),
        Some((l, v, r)) => {
            let x = sub(v);
            if has_unit(&x) {
                return Err(Error::UnitPart);
            }
            let right = prec(&x, &eval_tree(r, sub)?)?;
            succ(&eval_tree(l, sub)?, &right)
        }
    }
}

/// Linear extension of [`eval_tree`].
pub fn eval(e: &Tilde, sub: &dyn Fn(Gen) -> Tilde) -> Result<Tilde> {
    let mut out = Tilde::zero();
    for (t, c) in e {
        out.add_scaled(c, &eval_tree(t, sub)?);
    }
    Ok(out)
}

/// Homogeneous component of node-count `d`.
pub fn component(e: &Tilde, d: usize) -> Tilde {
    e.filter(|t| t.degree() == d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{parse_pbt, pbts, Alphabet};

    fn a() -> Tilde {
        generator(Gen(0))
    }
    fn b() -> Tilde {
        generator(Gen(1))
    }

    #[test]
    fn one_step_products() {
        let alpha = Alphabet::letters(1);
        let p = prec(&a(), &a()).unwrap();
        assert_eq!(p, Tilde::basis(parse_pbt("(* a (* a *))", &alpha).unwrap()));
        let s = succ(&a(), &a()).unwrap();
        assert_eq!(s, Tilde::basis(parse_pbt("((* a *) a *)", &alpha).unwrap()));
    }

    #[test]
    fn unit_laws() {
        assert_eq!(succ(&unit(), &a()).unwrap(), a());
        assert_eq!(prec(&a(), &unit()).unwrap(), a());
        assert!(prec(&unit(), &a()).unwrap().is_zero());
        assert!(succ(&a(), &unit()).unwrap().is_zero());
        assert_eq!(prec(&unit(), &unit()), Err(Error::UnitProduct('<')));
        assert_eq!(succ(&unit(), &unit()), Err(Error::UnitProduct('>')));
        assert_eq!(star(&unit(), &unit()), unit());
    }

    #[test]
    fn dendriform_axioms_small() {
        let c = generator(Gen(2));
        let lhs = prec(&prec(&a(), &b()).unwrap(), &c).unwrap();
        let rhs = prec(&a(), &star(&b(), &c)).unwrap();
        assert_eq!(lhs, rhs);
        let l2 = prec(&succ(&a(), &b()).unwrap(), &c).unwrap();
        let r2 = succ(&a(), &prec(&b(), &c).unwrap()).unwrap();
        assert_eq!(l2, r2);
        let l3 = succ(&a(), &succ(&b(), &c).unwrap()).unwrap();
        let r3 = succ(&star(&a(), &b()), &c).unwrap();
        assert_eq!(l3, r3);
    }

    #[test]
    fn combs() {
        assert_eq!(upcomb(&[]).unwrap(), unit());
        assert_eq!(upcomb(&[a()]).unwrap(), a());
        assert_eq!(upcomb(&[a(), b()]).unwrap(), prec(&a(), &b()).unwrap());
        assert_eq!(downcomb(&[a(), b()]).unwrap(), succ(&a(), &b()).unwrap());
    }

    #[test]
    fn trees_evaluate_to_themselves() {
        for t in pbts(4, 2) {
            let e = eval_tree(&t, &|g| generator(g)).unwrap();
            assert_eq!(e, Tilde::basis(t));
        }
    }

    #[test]
    fn star_counts_are_binomial() {
        // the product of a left comb and a right comb of total degree n has
        // as many terms as lattice paths; here just check total mass
        for t in pbts(2, 1) {
            for s in pbts(2, 1) {
                let p = star_trees(&t, &s);
                let mass: i64 = p.iter().map(|(_, c)| c.to_string().parse::<i64>().unwrap()).sum();
                assert!(mass >= 1);
            }
        }
    }
}
