use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use super::Rational;

/// A finite formal sum `Σ c_k · k` with nonzero rational coefficients.
///
/// Keys are kept in their canonical order, so two combinations are equal
/// exactly when their stored maps are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Rational::one())
    }

    pub fn term(key: K, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Rational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Rational> {
        self.terms.keys()
    }

    /// Smallest key in canonical order.
    pub fn leading(&self) -> Option<(&K, &Rational)> {
        self.terms.iter().next()
    }

    /// `self += c · key`, pruning a coefficient that cancels to zero.
    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &LinComb<K>) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), c * v);
        }
    }

    /// `a + c · b`.
    pub fn combine(a: &LinComb<K>, c: &Rational, b: &LinComb<K>) -> LinComb<K> {
        let mut out = a.clone();
        out.add_scaled(c, b);
        out
    }

    pub fn scaled(&self, c: &Rational) -> LinComb<K> {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), c * v)).collect(),
        }
    }

    pub fn sub(&self, other: &LinComb<K>) -> LinComb<K> {
        Self::combine(self, &-Rational::one(), other)
    }

    pub fn add(&self, other: &LinComb<K>) -> LinComb<K> {
        Self::combine(self, &Rational::one(), other)
    }

    /// Linear extension of `f` on basis keys.
    pub fn map_linear<L: Ord + Clone, F>(&self, mut f: F) -> LinComb<L>
    where
        F: FnMut(&K) -> LinComb<L>,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Relabels keys; colliding images are summed.
    pub fn map_keys<L: Ord + Clone, F: FnMut(&K) -> L>(&self, mut f: F) -> LinComb<L> {
        LinComb::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Bilinear extension of `f` on pairs of basis keys.
    pub fn bilinear<J: Ord + Clone, L: Ord + Clone, F>(a: &LinComb<K>, b: &LinComb<J>, mut f: F) -> LinComb<L>
    where
        F: FnMut(&K, &J) -> LinComb<L>,
    {
        let mut out = LinComb::zero();
        for (ka, ca) in a.iter() {
            for (kb, cb) in b.iter() {
                out.add_scaled(&(ca * cb), &f(ka, kb));
            }
        }
        out
    }

    pub fn filter<F: FnMut(&K) -> bool>(&self, mut keep: F) -> LinComb<K> {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, Rational);
    type IntoIter = btree_map::IntoIter<K, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Rational);
    type IntoIter = btree_map::Iter<'a, K, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// Writes `Σ c·k` as a signed sum, e.g. `2 x - 1/2 y`, using `key` for basis
/// elements. Unit coefficients are omitted; the empty sum prints as `0`.
pub fn format_sum<K: Ord, F>(lc: &LinComb<K>, mut key: F) -> String
where
    F: FnMut(&K) -> String,
{
    if lc.terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (k, c)) in lc.terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push(' ');
        }
        out.push_str(&key(k));
    }
    out
}

impl<K: Ord + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_sum(self, |k| k.to_string()))
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn additive_inverse_is_empty() {
        let x = LinComb::basis("x");
        let out = LinComb::combine(&x, &Rational::one(), &x.scaled(&q(-1, 1)));
        assert!(out.is_zero());
        assert_eq!(out.to_string(), "0");
    }

    #[test]
    fn zero_scalar_is_identity() {
        let x = LinComb::basis("x");
        let y = LinComb::basis("y");
        assert_eq!(LinComb::combine(&x, &Rational::zero(), &y), x);
    }

    #[test]
    fn fraction_arithmetic() {
        let a = LinComb::term("x", q(2, 3));
        let b = LinComb::from_terms([("x", q(1, 3)), ("y", q(1, 1))]);
        let out = LinComb::combine(&a, &Rational::one(), &b);
        assert_eq!(out, LinComb::from_terms([("x", q(1, 1)), ("y", q(1, 1))]));
    }

    #[test]
    fn formatting() {
        let lc = LinComb::from_terms([("b", q(-1, 1)), ("a", q(1, 1)), ("c", q(3, 2))]);
        assert_eq!(lc.to_string(), "a - b + 3/2 c");
        let neg = LinComb::term("a", q(-2, 1));
        assert_eq!(neg.to_string(), "-2 a");
    }
}
