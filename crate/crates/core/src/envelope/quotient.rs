use std::collections::{BTreeMap, VecDeque};

use super::structure::BraceStructure;
use super::validate_brace;
use crate::bialgebra::{coproduct, tensor_map, Tensor2};
use crate::dendriform::free::{self, Tilde};
use crate::dendriform::{corolla_tilde, SignConvention};
use crate::exactlin::{kernel_basis, DenseSpan, RatMatrix, Rational};
use crate::trees::{decorate, pbt_shapes, Gen, Pbt};
use crate::{Error, Result};

/// Decorated trees of total weight exactly `n`, sorted.
pub fn weighted_trees(n: usize, weights: &[usize]) -> Vec<Pbt> {
    if n == 0 {
        return vec![Pbt::Leaf];
    }
    let mut out = Vec::new();
    for k in 1..=n {
        let words = weighted_words(n, k, weights);
        if words.is_empty() {
            continue;
        }
        for s in pbt_shapes(k) {
            for w in &words {
                out.push(decorate(&s, w));
            }
        }
    }
    out.sort();
    out
}

fn weighted_words(n: usize, k: usize, weights: &[usize]) -> Vec<Vec<Gen>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for (i, &w) in weights.iter().enumerate() {
        if w > n {
            continue;
        }
        for mut rest in weighted_words(n - w, k - 1, weights) {
            rest.insert(0, Gen(i as u32));
            out.push(rest);
        }
    }
    out
}

/// Largest weight carrying a nonzero coefficient.
pub fn top_weight(e: &Tilde, weights: &[usize]) -> usize {
    e.keys().map(|t| t.weight(weights)).max().unwrap_or(0)
}

/// `ψ(Corl_k)(b_root; b_args) − {b_root | b_args}` for every tuple with
/// `1 ≤ k` and total weight at most `weight_bound`, in tuple order.
pub fn relation_generators(b: &BraceStructure, weight_bound: usize) -> Result<Vec<Tilde>> {
    let w = b.weights();
    let gen = |i: usize| free::generator(Gen(i as u32));
    let mut out = Vec::new();
    let mut frontier: Vec<(Vec<usize>, usize)> = (0..b.dim()).map(|i| (vec![i], w[i])).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (t, tw) in frontier {
            for (i, &wi) in w.iter().enumerate() {
                if tw + wi > weight_bound {
                    continue;
                }
                let mut t = t.clone();
                t.push(i);
                let args: Vec<Tilde> = t[1..].iter().map(|&j| gen(j)).collect();
                let psi = corolla_tilde(&gen(t[0]), &args, SignConvention::Standard)?;
                let value = b.product(t[0], &t[1..])?;
                let mut rel = psi;
                for (&k, c) in &value {
                    rel.add_term(Pbt::generator(Gen(k as u32)), -c);
                }
                out.push(rel);
                next.push((t, tw + wi));
            }
        }
        frontier = next;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Layout {
    /// One span per weight `0..=T`, for homogeneous relations.
    Graded(Vec<DenseSpan<Pbt>>),
    /// One span over all weights `≤ T`, columns by descending weight.
    Filtered(DenseSpan<Pbt>),
}

struct Closure {
    weights: Vec<usize>,
    ceiling: usize,
    layout: Layout,
    trees: Vec<Vec<Pbt>>,
}

fn column_order(trees: &[Pbt]) -> Vec<Pbt> {
    let mut cols: Vec<Pbt> = trees.iter().filter(|t| t.degree() > 1).cloned().collect();
    cols.extend(trees.iter().filter(|t| t.degree() <= 1).cloned());
    cols
}

impl Closure {
    fn new(weights: &[usize], ceiling: usize, graded: bool) -> Self {
        let trees: Vec<Vec<Pbt>> = (0..=ceiling).map(|n| weighted_trees(n, weights)).collect();
        let layout = if graded {
            Layout::Graded(trees.iter().map(|ts| DenseSpan::new(column_order(ts))).collect())
        } else {
            let cols = trees.iter().rev().flat_map(|ts| column_order(ts)).collect();
            Layout::Filtered(DenseSpan::new(cols))
        };
        Closure {
            weights: weights.to_vec(),
            ceiling,
            layout,
            trees,
        }
    }

    fn insert(&mut self, v: &Tilde) -> Result<Option<Tilde>> {
        if v.is_zero() {
            return Ok(None);
        }
        match &mut self.layout {
            Layout::Graded(spans) => spans[top_weight(v, &self.weights)].insert(v),
            Layout::Filtered(span) => span.insert(v),
        }
    }

    fn saturate(&mut self, generators: &[Tilde]) -> Result<()> {
        let mut queue = VecDeque::new();
        for g in generators {
            if let Some(row) = self.insert(g)? {
                queue.push_back(row);
            }
        }
        while let Some(u) = queue.pop_front() {
            let k = top_weight(&u, &self.weights);
            for m in 1..=self.ceiling - k {
                for w in self.trees[m].clone() {
                    let w = Tilde::basis(w);
                    for p in [
                        free::prec(&u, &w)?,
                        free::prec(&w, &u)?,
                        free::succ(&u, &w)?,
                        free::succ(&w, &u)?,
                    ] {
                        if let Some(row) = self.insert(&p)? {
                            queue.push_back(row);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `#columns − #pivots` of each weight `0..=bound`.
    fn dims(&self, bound: usize) -> Vec<usize> {
        match &self.layout {
            Layout::Graded(spans) => spans[..=bound].iter().map(|s| s.ambient_dim() - s.rank()).collect(),
            Layout::Filtered(span) => {
                let mut out: Vec<usize> = (0..=bound).map(|n| self.trees[n].len()).collect();
                for &p in span.pivots() {
                    let n = span.columns()[p].weight(&self.weights);
                    if n <= bound {
                        out[n] -= 1;
                    }
                }
                out
            }
        }
    }
}

/// The truncation of `Ũ(B) = K·1 ⊕ D(B)/J` to weights `≤ N`.
pub struct TruncatedQuotient {
    structure: BraceStructure,
    bound: usize,
    slack: usize,
    closure: Closure,
    dims: Vec<usize>,
    stable: bool,
    includes_arity_two: bool,
}

/// Validates `b`, saturates its relations inside weights `≤ N + slack` and
/// keeps the quotient up to weight `N`.
///
/// Homogeneous relations are saturated exactly, one weight at a time, with
/// ceiling `N`. Otherwise the closure only uses products whose top weight
/// fits under the ceiling, and it is redone with one more unit of slack to
/// decide the stability flag.
pub fn build_envelope(b: &BraceStructure, bound: usize, slack: usize) -> Result<TruncatedQuotient> {
    if bound == 0 {
        return Err(Error::Domain("envelope bound must be at least 1".into()));
    }
    let check = b.max_arity().min(bound + slack + 1).max(2);
    let defects = validate_brace(b, check)?;
    if let Some(d) = defects.first() {
        return Err(Error::InvalidBrace(d.describe(b)));
    }
    let homogeneous = b.is_homogeneous();
    let ceiling = if homogeneous { bound } else { bound + slack };
    let closure = saturate(b, ceiling, homogeneous)?;
    let dims = closure.dims(bound);
    let stable = if homogeneous {
        true
    } else {
        saturate(b, ceiling + 1, false)?.dims(bound) == dims
    };
    let min_weight = b.weights().iter().copied().min().unwrap_or(1);
    Ok(TruncatedQuotient {
        structure: b.clone(),
        bound,
        slack,
        closure,
        dims,
        stable,
        includes_arity_two: b.dim() > 0 && 2 * min_weight <= ceiling,
    })
}

fn saturate(b: &BraceStructure, ceiling: usize, graded: bool) -> Result<Closure> {
    let mut c = Closure::new(b.weights(), ceiling, graded);
    c.saturate(&relation_generators(b, ceiling)?)?;
    Ok(c)
}

impl TruncatedQuotient {
    pub fn structure(&self) -> &BraceStructure {
        &self.structure
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn slack(&self) -> usize {
        self.slack
    }

    /// Dimensions of the associated graded pieces, weights `0..=N`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn stable(&self) -> bool {
        self.stable
    }

    pub fn includes_arity_two(&self) -> bool {
        self.includes_arity_two
    }

    pub fn weight(&self, t: &Pbt) -> usize {
        t.weight(self.structure.weights())
    }

    fn check_bound(&self, e: &Tilde) -> Result<()> {
        let w = top_weight(e, self.structure.weights());
        if w > self.bound {
            return Err(Error::DegreeOverflow {
                degree: w,
                bound: self.bound,
            });
        }
        Ok(())
    }

    /// The canonical representative: supported on quotient basis trees.
    pub fn reduce(&self, e: &Tilde) -> Result<Tilde> {
        self.check_bound(e)?;
        match &self.closure.layout {
            Layout::Filtered(span) => span.reduce(e),
            Layout::Graded(spans) => {
                let mut parts: BTreeMap<usize, Tilde> = BTreeMap::new();
                for (t, c) in e {
                    parts.entry(self.weight(t)).or_default().add_term(t.clone(), c.clone());
                }
                let mut out = Tilde::zero();
                for (n, part) in parts {
                    out = out.add(&spans[n].reduce(&part)?);
                }
                Ok(out)
            }
        }
    }

    /// Trees of weight `n` spanning the quotient modulo lower weights.
    pub fn quotient_basis(&self, n: usize) -> Vec<Pbt> {
        if n > self.bound {
            return Vec::new();
        }
        match &self.closure.layout {
            Layout::Graded(spans) => spans[n].complement(),
            Layout::Filtered(span) => span.complement().into_iter().filter(|t| self.weight(t) == n).collect(),
        }
    }

    /// Echelon rows of the ideal with top weight `≤ N`.
    pub fn ideal_basis(&self) -> Vec<Tilde> {
        match &self.closure.layout {
            Layout::Graded(spans) => spans[..=self.bound].iter().flat_map(|s| s.basis()).collect(),
            Layout::Filtered(span) => span
                .basis()
                .into_iter()
                .filter(|r| top_weight(r, self.structure.weights()) <= self.bound)
                .collect(),
        }
    }

    pub fn product(&self, a: &Tilde, b: &Tilde) -> Result<Tilde> {
        self.reduce(&free::star(a, b))
    }

    pub fn prec(&self, a: &Tilde, b: &Tilde) -> Result<Tilde> {
        self.reduce(&free::prec(a, b)?)
    }

    pub fn succ(&self, a: &Tilde, b: &Tilde) -> Result<Tilde> {
        self.reduce(&free::succ(a, b)?)
    }

    fn reduce_tensor(&self, x: &Tensor2) -> Tensor2 {
        let leg = |t: &Pbt| self.reduce(&Tilde::basis(t.clone())).expect("weight checked");
        tensor_map(x, leg, leg)
    }

    /// Δ computed in `D̃(B)`, both legs reduced.
    pub fn coproduct(&self, e: &Tilde) -> Result<Tensor2> {
        self.check_bound(e)?;
        Ok(self.reduce_tensor(&coproduct(e)))
    }

    /// Ideal rows whose coproduct does not vanish in the quotient.
    pub fn coproduct_defects(&self) -> Vec<Tilde> {
        self.ideal_basis()
            .into_iter()
            .filter(|r| !self.reduce_tensor(&coproduct(r)).is_zero())
            .collect()
    }
}

pub fn envelope_coproduct(q: &TruncatedQuotient, e: &Tilde) -> Result<Tensor2> {
    q.coproduct(e)
}

#[derive(Clone, Debug)]
pub struct EnvelopePrimitives {
    /// Echelon basis of the primitives, as reduced representatives.
    pub basis: Vec<Tilde>,
    /// The primitives are exactly the span of the generator classes.
    pub equals_generators: bool,
    /// Tuples whose recomputed brace differs from the structure constant.
    pub structure_defects: Vec<(usize, Vec<usize>)>,
}

impl EnvelopePrimitives {
    pub fn ok(&self) -> bool {
        self.equals_generators && self.structure_defects.is_empty()
    }
}

pub fn envelope_primitives(q: &TruncatedQuotient) -> Result<EnvelopePrimitives> {
    let cols: Vec<Pbt> = (1..=q.bound()).flat_map(|n| q.quotient_basis(n)).collect();
    let mut rows: BTreeMap<(Pbt, Pbt), usize> = BTreeMap::new();
    let mut images = Vec::with_capacity(cols.len());
    for t in &cols {
        let mut im = q.coproduct(&Tilde::basis(t.clone()))?;
        im.add_term((t.clone(), Pbt::Leaf), -Rational::one());
        im.add_term((Pbt::Leaf, t.clone()), -Rational::one());
        for k in im.keys() {
            let n = rows.len();
            rows.entry(k.clone()).or_insert(n);
        }
        images.push(im);
    }
    let mut span = DenseSpan::new(cols.clone());
    if rows.is_empty() {
        for t in &cols {
            span.insert(&Tilde::basis(t.clone()))?;
        }
    } else {
        let mut m = vec![vec![Rational::zero(); cols.len()]; rows.len()];
        for (j, im) in images.iter().enumerate() {
            for (k, c) in im {
                m[rows[k]][j] = c.clone();
            }
        }
        for v in kernel_basis(&RatMatrix::from_rows(m)) {
            let lc = span.to_sparse(&v);
            span.insert(&lc)?;
        }
    }
    let b = q.structure();
    let gen = |i: usize| free::generator(Gen(i as u32));
    let mut equals_generators = span.rank() == b.dim();
    for i in 0..b.dim() {
        if b.weights()[i] > q.bound() {
            equals_generators = false;
            continue;
        }
        equals_generators &= span.contains(&q.reduce(&gen(i))?)?;
    }
    let mut structure_defects = Vec::new();
    let w = b.weights();
    let mut frontier: Vec<Vec<usize>> = (0..b.dim()).map(|i| vec![i]).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for t in frontier {
            let tw: usize = t.iter().map(|&i| w[i]).sum();
            for (i, &wi) in w.iter().enumerate() {
                if tw + wi > q.bound() || t.len() + 1 > b.max_arity() {
                    continue;
                }
                let mut t = t.clone();
                t.push(i);
                let args: Vec<Tilde> = t[1..].iter().map(|&j| gen(j)).collect();
                let lhs = q.reduce(&corolla_tilde(&gen(t[0]), &args, SignConvention::Standard)?)?;
                let mut value = Tilde::zero();
                for (&k, c) in &b.product(t[0], &t[1..])? {
                    value.add_scaled(c, &gen(k));
                }
                if lhs != q.reduce(&value)? {
                    structure_defects.push((t[0], t[1..].to_vec()));
                }
                next.push(t);
            }
        }
        frontier = next;
    }
    Ok(EnvelopePrimitives {
        basis: span.basis(),
        equals_generators,
        structure_defects,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::BraceVec;
    use crate::trees::Alphabet;

    #[test]
    fn weighted_tree_counts() {
        assert_eq!(weighted_trees(3, &[1, 1]).len(), 40);
        // words 111, 12, 21
        assert_eq!(weighted_trees(3, &[1, 2]).len(), 5 + 2 * 2);
    }

    #[test]
    fn relations_of_trivial_brace() {
        let b = BraceStructure::trivial(1, 3);
        let rels = relation_generators(&b, 3).unwrap();
        assert_eq!(rels.len(), 2);
        let al = Alphabet::letters(1);
        let show = |e: &Tilde| crate::exactlin::format_sum(e, |t| t.to_expr(&al));
        assert_eq!(
            show(&rels[0]),
            show(
                &free::prec(&free::generator(Gen(0)), &free::generator(Gen(0)))
                    .unwrap()
                    .sub(&free::succ(&free::generator(Gen(0)), &free::generator(Gen(0))).unwrap())
            )
        );
        let mut c = BraceStructure::new(vec!["a".into()], None, 3).unwrap();
        c.set_product(0, vec![0], BraceVec::basis(0)).unwrap();
        let rels = relation_generators(&c, 2).unwrap();
        assert_eq!(rels[0].coeff(&Pbt::generator(Gen(0))), -Rational::one());
    }

    #[test]
    fn trivial_envelope_dims() {
        let q = build_envelope(&BraceStructure::trivial(1, 4), 4, 0).unwrap();
        assert_eq!(q.dims(), &[1, 1, 1, 1, 1]);
        assert!(q.stable() && q.includes_arity_two());
        let q = build_envelope(&BraceStructure::trivial(2, 3), 3, 0).unwrap();
        assert_eq!(q.dims(), &[1, 2, 4, 8]);
        let p = envelope_primitives(&q).unwrap();
        assert!(p.ok());
        assert_eq!(p.basis.len(), 2);
        assert!(q.coproduct_defects().is_empty());
    }

    #[test]
    fn reduction_is_idempotent_and_bounded() {
        let q = build_envelope(&BraceStructure::trivial(2, 3), 3, 0).unwrap();
        for t in weighted_trees(3, &[1, 1]) {
            let r = q.reduce(&Tilde::basis(t)).unwrap();
            assert_eq!(q.reduce(&r).unwrap(), r);
        }
        let big = Tilde::basis(weighted_trees(4, &[1, 1])[0].clone());
        assert!(matches!(q.reduce(&big), Err(Error::DegreeOverflow { .. })));
    }

    #[test]
    fn inhomogeneous_envelope_is_stable() {
        let mut b = BraceStructure::new(vec!["a".into()], None, 8).unwrap();
        b.set_product(0, vec![0], BraceVec::basis(0)).unwrap();
        let q = build_envelope(&b, 3, 1).unwrap();
        assert_eq!(q.dims(), &[1, 1, 1, 1]);
        assert!(q.stable());
        assert!(envelope_primitives(&q).unwrap().ok());
        assert!(q.coproduct_defects().is_empty());
    }
}
