use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bialgebra::primitives;
use crate::dendriform::free::Tilde;
use crate::dendriform::{corolla_tilde, SignConvention};
use crate::exactlin::{format_sum, LinComb, Rational};
use crate::operads::compositions;
use crate::trees::{Alphabet, Pbt};
use crate::{Error, Result};

/// Elements of a brace algebra in coordinates over its basis.
pub type BraceVec = LinComb<usize>;

/// A finite-dimensional brace algebra given by structure constants
/// `{b_root | b_{args[0]},…,b_{args[k-1]}}`. Absent tuples are zero.
///
/// Basis elements carry positive weights (all 1 unless declared). The
/// envelope is filtered by total weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceStructure {
    basis: Vec<String>,
    weights: Vec<usize>,
    max_arity: usize,
    products: BTreeMap<(usize, Vec<usize>), BraceVec>,
}

#[derive(Serialize, Deserialize)]
struct TermFile {
    coeff: Rational,
    index: usize,
}

#[derive(Serialize, Deserialize)]
struct ProductFile {
    root: usize,
    args: Vec<usize>,
    value: Vec<TermFile>,
}

#[derive(Serialize, Deserialize)]
struct BraceFile {
    dim: usize,
    basis: Vec<String>,
    max_arity: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<usize>>,
    products: Vec<ProductFile>,
}

impl BraceStructure {
    pub fn new(basis: Vec<String>, weights: Option<Vec<usize>>, max_arity: usize) -> Result<Self> {
        Alphabet::new(basis.clone())?;
        let weights = weights.unwrap_or_else(|| vec![1; basis.len()]);
        if weights.len() != basis.len() || weights.contains(&0) {
            return Err(Error::InvalidBrace(
                "weights must be positive, one per basis element".into(),
            ));
        }
        if max_arity < 2 {
            return Err(Error::InvalidBrace("max_arity must be at least 2".into()));
        }
        Ok(BraceStructure {
            basis,
            weights,
            max_arity,
            products: BTreeMap::new(),
        })
    }

    /// All products zero.
    pub fn trivial(dim: usize, max_arity: usize) -> Self {
        let names = Alphabet::letters(dim).names().to_vec();
        Self::new(names, None, max_arity).expect("valid trivial brace")
    }

    pub fn set_product(&mut self, root: usize, args: Vec<usize>, value: BraceVec) -> Result<()> {
        let d = self.dim();
        if root >= d || args.iter().chain(value.keys()).any(|&i| i >= d) {
            return Err(Error::InvalidBrace(format!("index out of range 0..{d}")));
        }
        if args.is_empty() || args.len() + 1 > self.max_arity {
            return Err(Error::InvalidBrace(format!(
                "product arity {} outside 2..={}",
                args.len() + 1,
                self.max_arity
            )));
        }
        if value.is_zero() {
            self.products.remove(&(root, args));
        } else {
            self.products.insert((root, args), value);
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.basis.clone()).expect("validated names")
    }

    pub fn products(&self) -> impl Iterator<Item = (&(usize, Vec<usize>), &BraceVec)> {
        self.products.iter()
    }

    /// True when every product is homogeneous for the weights.
    pub fn is_homogeneous(&self) -> bool {
        self.products.iter().all(|((r, args), v)| {
            let w = self.weights[*r] + args.iter().map(|&a| self.weights[a]).sum::<usize>();
            v.keys().all(|&k| self.weights[k] == w)
        })
    }

    pub fn product(&self, root: usize, args: &[usize]) -> Result<BraceVec> {
        if args.is_empty() {
            return Ok(BraceVec::basis(root));
        }
        if args.len() + 1 > self.max_arity {
            return Err(Error::MissingConstants(format!(
                "arity {} exceeds max_arity {}",
                args.len() + 1,
                self.max_arity
            )));
        }
        Ok(self.products.get(&(root, args.to_vec())).cloned().unwrap_or_default())
    }

    /// Multilinear extension of the structure constants.
    pub fn brace(&self, root: &BraceVec, args: &[BraceVec]) -> Result<BraceVec> {
        let mut out = BraceVec::zero();
        let mut tuples: Vec<(Vec<usize>, Rational)> = vec![(Vec::new(), Rational::one())];
        for a in args {
            let mut next = Vec::new();
            for (t, c) in &tuples {
                for (&k, d) in a {
                    let mut t = t.clone();
                    t.push(k);
                    next.push((t, c * d));
                }
            }
            tuples = next;
        }
        for (&r, c) in root {
            for (t, d) in &tuples {
                out.add_scaled(&(c * d), &self.product(r, t)?);
            }
        }
        Ok(out)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: BraceFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: 0,
            msg: format!("brace file: {e}"),
        })?;
        if f.dim != f.basis.len() {
            return Err(Error::InvalidBrace(format!(
                "dim {} but {} basis names",
                f.dim,
                f.basis.len()
            )));
        }
        let mut b = Self::new(f.basis, f.weights, f.max_arity)?;
        for p in f.products {
            let key = (p.root, p.args.clone());
            if b.products.contains_key(&key) {
                return Err(Error::InvalidBrace(format!(
                    "duplicate product for root {} args {:?}",
                    p.root, p.args
                )));
            }
            let value = BraceVec::from_terms(p.value.into_iter().map(|t| (t.index, t.coeff)));
            b.set_product(p.root, p.args, value)?;
        }
        Ok(b)
    }

    pub fn to_json(&self) -> String {
        let weights = if self.weights.iter().all(|&w| w == 1) {
            None
        } else {
            Some(self.weights.clone())
        };
        let f = BraceFile {
            dim: self.dim(),
            basis: self.basis.clone(),
            max_arity: self.max_arity,
            weights,
            products: self
                .products
                .iter()
                .map(|((root, args), v)| ProductFile {
                    root: *root,
                    args: args.clone(),
                    value: v
                        .iter()
                        .map(|(&index, c)| TermFile {
                            coeff: c.clone(),
                            index,
                        })
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&f).expect("serializable")
    }

    pub fn format_vec(&self, v: &BraceVec) -> String {
        format_sum(v, |&i| self.basis[i].clone())
    }
}

/// A failure of the brace relation on one basis tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceDefect {
    pub n: usize,
    pub m: usize,
    /// `[z, x₁,…,xₙ, y₁,…,y_m]`.
    pub tuple: Vec<usize>,
    pub lhs: BraceVec,
    pub rhs: BraceVec,
}

impl BraceDefect {
    pub fn describe(&self, b: &BraceStructure) -> String {
        let name = |i: &usize| b.basis()[*i].clone();
        let xs: Vec<String> = self.tuple[1..=self.n].iter().map(name).collect();
        let ys: Vec<String> = self.tuple[self.n + 1..].iter().map(name).collect();
        format!(
            "{{{{{}|{}}}|{}}}: lhs = {}, rhs = {}",
            name(&self.tuple[0]),
            xs.join(","),
            ys.join(","),
            b.format_vec(&self.lhs),
            b.format_vec(&self.rhs)
        )
    }
}

impl fmt::Display for BraceDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, m={}) at {:?}", self.n, self.m, self.tuple)
    }
}

fn tuples(dim: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..dim).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Both sides of the brace relation on every basis tuple with
/// `n + m + 1 ≤ arity_bound`; returns the tuples where they differ.
pub fn validate_brace(b: &BraceStructure, arity_bound: usize) -> Result<Vec<BraceDefect>> {
    if arity_bound > b.max_arity() {
        return Err(Error::MissingConstants(format!(
            "validation needs arity {arity_bound}, structure declares up to {}",
            b.max_arity()
        )));
    }
    let e = |i: usize| BraceVec::basis(i);
    let mut defects = Vec::new();
    for n in 1..arity_bound {
        for m in 1..arity_bound - n {
            for t in tuples(b.dim(), n + m + 1) {
                let z = e(t[0]);
                let xs: Vec<BraceVec> = t[1..=n].iter().map(|&i| e(i)).collect();
                let ys: Vec<BraceVec> = t[n + 1..].iter().map(|&i| e(i)).collect();
                let lhs = b.brace(&b.brace(&z, &xs)?, &ys)?;
                let mut rhs = BraceVec::zero();
                for parts in compositions(m, 2 * n + 1) {
                    let mut args = Vec::new();
                    let mut next = 0;
                    for (i, &k) in parts.iter().enumerate() {
                        let block = &ys[next..next + k];
                        next += k;
                        if i % 2 == 0 {
                            args.extend(block.iter().cloned());
                        } else {
                            args.push(b.brace(&xs[i / 2], block)?);
                        }
                    }
                    rhs = rhs.add(&b.brace(&z, &args)?);
                }
                if lhs != rhs {
                    defects.push(BraceDefect {
                        n,
                        m,
                        tuple: t,
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    Ok(defects)
}

/// The primitives of `K·1 ⊕ D(V)` in degrees `1..=max_degree`, with the
/// brace structure induced by ψ, truncated above `max_degree`.
#[derive(Clone, Debug)]
pub struct Harvest {
    pub structure: BraceStructure,
    /// `elements[i]` is the primitive named `structure.basis()[i]`.
    pub elements: Vec<Tilde>,
    pub num_gens: usize,
}

pub fn harvest(num_gens: usize, max_degree: usize) -> Result<Harvest> {
    let letters = Alphabet::letters(num_gens);
    let mut names = Vec::new();
    let mut weights = Vec::new();
    let mut elements = Vec::new();
    // per degree: (first index, pivot trees of the echelon basis)
    let mut blocks: BTreeMap<usize, (usize, Vec<Pbt>)> = BTreeMap::new();
    for d in 1..=max_degree {
        let basis = primitives(d, num_gens)?;
        let start = elements.len();
        let mut pivots = Vec::new();
        for (j, p) in basis.into_iter().enumerate() {
            names.push(if d == 1 {
                letters.name(crate::trees::Gen(j as u32)).to_string()
            } else {
                format!("p{d}_{}", j + 1)
            });
            weights.push(d);
            pivots.push(p.keys().next().expect("nonzero").clone());
            elements.push(p);
        }
        blocks.insert(d, (start, pivots));
    }
    let mut s = BraceStructure::new(names, Some(weights.clone()), max_degree.max(2))?;
    let dim = elements.len();
    for k in 1..max_degree {
        for t in tuples(dim, k + 1) {
            let w: usize = t.iter().map(|&i| weights[i]).sum();
            if w > max_degree {
                continue;
            }
            let args: Vec<Tilde> = t[1..].iter().map(|&i| elements[i].clone()).collect();
            let v = corolla_tilde(&elements[t[0]], &args, SignConvention::Standard)?;
            let (start, pivots) = &blocks[&w];
            let mut coords = BraceVec::zero();
            let mut check = Tilde::zero();
            for (j, piv) in pivots.iter().enumerate() {
                let c = v.coeff(piv);
                check.add_scaled(&c, &elements[start + j]);
                coords.add_term(start + j, c);
            }
            if check != v {
                return Err(Error::Domain(format!("brace of primitives {t:?} is not primitive")));
            }
            s.set_product(t[0], t[1..].to_vec(), coords)?;
        }
    }
    Ok(Harvest {
        structure: s,
        elements,
        num_gens,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_dim(products: &[(&[usize], i64)]) -> BraceStructure {
        let mut b = BraceStructure::new(vec!["b".into()], None, 4).unwrap();
        for (args, c) in products {
            b.set_product(0, args.to_vec(), BraceVec::term(0, Rational::from_int(*c)))
                .unwrap();
        }
        b
    }

    #[test]
    fn trivial_is_valid() {
        assert!(validate_brace(&BraceStructure::trivial(2, 4), 4).unwrap().is_empty());
    }

    #[test]
    fn binary_idempotent_is_valid_but_ternary_breaks_it() {
        assert!(validate_brace(&one_dim(&[(&[0], 1)]), 4).unwrap().is_empty());
        let bad = one_dim(&[(&[0], 1), (&[0, 0], 1)]);
        let d = validate_brace(&bad, 3).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!((d[0].n, d[0].m), (1, 1));
        assert_eq!(bad.format_vec(&d[0].lhs), "b");
        assert_eq!(bad.format_vec(&d[0].rhs), "3 b");
    }

    #[test]
    fn missing_constants() {
        assert!(matches!(
            validate_brace(&BraceStructure::trivial(1, 3), 4),
            Err(Error::MissingConstants(_))
        ));
    }

    #[test]
    fn json_roundtrip() {
        let b = one_dim(&[(&[0], 1), (&[0, 0], -2)]);
        let text = b.to_json();
        assert_eq!(BraceStructure::from_json(&text).unwrap(), b);
        let src = r#"{"dim": 1, "basis": ["a"], "max_arity": 3,
            "products": [{"root": 0, "args": [0], "value": [{"coeff": "1/2", "index": 0}]}]}"#;
        let c = BraceStructure::from_json(src).unwrap();
        assert_eq!(c.product(0, &[0]).unwrap(), BraceVec::term(0, "1/2".parse().unwrap()));
        assert!(BraceStructure::from_json(r#"{"dim": 2, "basis": ["a"], "max_arity": 2, "products": []}"#).is_err());
    }

    #[test]
    fn harvested_free_brace_is_valid() {
        let h = harvest(1, 3).unwrap();
        assert_eq!(h.structure.dim(), 4);
        assert_eq!(h.structure.weights(), &[1, 2, 3, 3]);
        assert!(h.structure.is_homogeneous());
        assert!(validate_brace(&h.structure, 3).unwrap().is_empty());
    }
}
