//! Brace operations realized in a dendriform algebra.
//!
//! ```text
//! ψ(Corl_k)(x; y₁,…,y_k) = Σ_{i=1}^{k+1} ε_i ↗(y₁,…,y_{i−1}) ≻ x ≺ ↘(y_i,…,y_k)
//! ```
//!
//! with `↗() = ↘() = 1` and `ε_i = (−1)^{i+1}`. A planar tree with root `z`
//! and subtrees `T₁,…,T_k` acts as `ψ(Corl_k)(x_z; ψ(T₁),…,ψ(T_k))`.

use super::free::{self, Tilde};
use super::DendElement;
use crate::exactlin::{LinComb, Rational};
use crate::trees::{Gen, PlanarTree};
use crate::{Error, Result};

/// Which alternating sign the corolla formula uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SignConvention {
    /// `(−1)^{i+1}`: arity 2 gives `x≺y − y≻x`.
    #[default]
    Standard,
    /// `(−1)^i`: every corolla changes sign.
    Negated,
}

impl SignConvention {
    fn sign(self, i: usize) -> Rational {
        let odd = i % 2 == 1;
        let positive = match self {
            SignConvention::Standard => odd,
            SignConvention::Negated => !odd,
        };
        if positive {
            Rational::one()
        } else {
            -Rational::one()
        }
    }
}

/// `ψ(Corl_k)(x; ys)` on unit-free arguments; `k = 0` gives `x`.
pub fn corolla_tilde(x: &Tilde, ys: &[Tilde], sign: SignConvention) -> Result<Tilde> {
    if ys.is_empty() {
        return Ok(x.clone());
    }
    let mut out = Tilde::zero();
    for i in 1..=ys.len() + 1 {
        let up = free::upcomb(&ys[..i - 1])?;
        let down = free::downcomb(&ys[i - 1..])?;
        // ↗ ≻ x ≺ ↘ = ↗ ≻ (x ≺ ↘), valid since x has no unit part
        let term = free::succ(&up, &free::prec(x, &down)?)?;
        out.add_scaled(&sign.sign(i), &term);
    }
    Ok(out)
}

fn check_unit_free(t: &Tilde) -> Result<()> {
    if t.coeff(&crate::trees::Pbt::Leaf).is_zero() {
        Ok(())
    } else {
        Err(Error::UnitPart)
    }
}

/// ψ of one planar tree, with vertex `v` bound to `arg(v)`.
pub fn psi_tree_with(t: &PlanarTree, arg: &dyn Fn(&str) -> Result<Tilde>, sign: SignConvention) -> Result<Tilde> {
    let x = arg(&t.label)?;
    check_unit_free(&x)?;
    let ys = t
        .children
        .iter()
        .map(|c| psi_tree_with(c, arg, sign))
        .collect::<Result<Vec<_>>>()?;
    corolla_tilde(&x, &ys, sign)
}

/// Linear extension of [`psi_tree_with`].
pub fn psi_with(op: &LinComb<PlanarTree>, arg: &dyn Fn(&str) -> Result<Tilde>, sign: SignConvention) -> Result<Tilde> {
    let mut out = Tilde::zero();
    for (t, c) in op {
        out.add_scaled(c, &psi_tree_with(t, arg, sign)?);
    }
    Ok(out)
}

/// Label `i` is bound to `args[i−1]`.
fn positional<'a>(args: &'a [Tilde]) -> impl Fn(&str) -> Result<Tilde> + 'a {
    move |label: &str| {
        label
            .parse::<usize>()
            .ok()
            .filter(|&i| (1..=args.len()).contains(&i))
            .map(|i| args[i - 1].clone())
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }
}

fn check_arity(op: &LinComb<PlanarTree>, n: usize) -> Result<()> {
    for t in op.keys() {
        if t.size() != n {
            return Err(Error::Arity {
                expected: t.size(),
                got: n,
            });
        }
    }
    Ok(())
}

/// Evaluates an operation on trees labeled `1..=n` at `n` arguments.
pub fn psi_eval_tilde(op: &LinComb<PlanarTree>, args: &[Tilde], sign: SignConvention) -> Result<Tilde> {
    check_arity(op, args.len())?;
    psi_with(op, &positional(args), sign)
}

pub fn psi_eval(op: &LinComb<PlanarTree>, args: &[DendElement]) -> Result<DendElement> {
    let ts: Vec<Tilde> = args.iter().map(DendElement::to_tilde).collect();
    Ok(DendElement::from_tilde(psi_eval_tilde(
        op,
        &ts,
        SignConvention::Standard,
    )?))
}

/// The multilinear value `ψ(T)(x₁,…,xₙ)` with `x_i = Gen(i−1)`.
pub fn psi_multilinear(op: &LinComb<PlanarTree>, n: usize, sign: SignConvention) -> Result<Tilde> {
    let args: Vec<Tilde> = (0..n as u32).map(|g| free::generator(Gen(g))).collect();
    psi_eval_tilde(op, &args, sign)
}

/// Both sides of the brace relation evaluated in the free dendriform
/// algebra through nested corollas, on `z = Gen(0)`, `x_i = Gen(i)`,
/// `y_j = Gen(n+j)`; returns left minus right.
pub fn psi_brace_defect(n: usize, m: usize, sign: SignConvention) -> Result<Tilde> {
    let g = |i: usize| free::generator(Gen(i as u32));
    let z = g(0);
    let xs: Vec<Tilde> = (1..=n).map(g).collect();
    let ys: Vec<Tilde> = (n + 1..=n + m).map(g).collect();
    let mut out = corolla_tilde(&corolla_tilde(&z, &xs, sign)?, &ys, sign)?;
    for parts in crate::operads::compositions(m, 2 * n + 1) {
        let mut args = Vec::new();
        let mut next = 0;
        for (i, &k) in parts.iter().enumerate() {
            let block = &ys[next..next + k];
            next += k;
            if i % 2 == 0 {
                args.extend(block.iter().cloned());
            } else {
                args.push(corolla_tilde(&xs[i / 2], block, sign)?);
            }
        }
        out = out.sub(&corolla_tilde(&z, &args, sign)?);
    }
    Ok(out)
}
