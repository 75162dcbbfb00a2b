use std::collections::HashMap;
use std::hash::Hash;

use super::{LinComb, Rational};
use crate::Error;

/// An incrementally grown subspace of a fixed finite-dimensional space,
/// kept in reduced row-echelon form.
///
/// The ambient basis is given as an ordered column list. Each stored row has
/// a `1` at its pivot, zeros in every other pivot column, and zeros in all
/// columns before its pivot. Consequently, for any split point `b`, the rows
/// whose pivot is at or after `b` span the intersection of the subspace with
/// the coordinate subspace of columns `b..`.
#[derive(Clone, Debug)]
pub struct DenseSpan<K> {
    columns: Vec<K>,
    index: HashMap<K, usize>,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl<K: Clone + Hash + Eq + Ord> DenseSpan<K> {
    pub fn new(columns: Vec<K>) -> Self {
        let index = columns.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        let n = columns.len();
        DenseSpan {
            columns,
            index,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; n],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.columns.len()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn columns(&self) -> &[K] {
        &self.columns
    }

    pub fn column_of(&self, key: &K) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    pub fn to_dense(&self, v: &LinComb<K>) -> Result<Vec<Rational>, Error> {
        let mut out = vec![Rational::zero(); self.columns.len()];
        for (k, c) in v {
            let i = self
                .index
                .get(k)
                .ok_or_else(|| Error::Domain("vector has a key outside the ambient basis".into()))?;
            out[*i] = c.clone();
        }
        Ok(out)
    }

    pub fn to_sparse(&self, v: &[Rational]) -> LinComb<K> {
        LinComb::from_terms(
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (self.columns[i].clone(), c.clone())),
        )
    }

    fn reduce_dense(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (j, r) in row.iter().enumerate().skip(p) {
                if !r.is_zero() {
                    v[j] -= &(&f * r);
                }
            }
        }
    }

    /// Adds `v` to the span. Returns the new echelon row when the rank grew.
    pub fn insert(&mut self, v: &LinComb<K>) -> Result<Option<LinComb<K>>, Error> {
        let mut d = self.to_dense(v)?;
        Ok(self.insert_dense(&mut d).map(|r| self.to_sparse(&self.rows[r])))
    }

    /// Returns the index of the new row, if any.
    fn insert_dense(&mut self, v: &mut [Rational]) -> Option<usize> {
        self.reduce_dense(v);
        let p = v.iter().position(|c| !c.is_zero())?;
        let inv = v[p].recip().unwrap();
        for c in v.iter_mut().skip(p) {
            if !c.is_zero() {
                *c = &*c * &inv;
            }
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (j, r) in v.iter().enumerate().skip(p) {
                if !r.is_zero() {
                    row[j] -= &(&f * r);
                }
            }
        }
        self.rows.push(v.to_vec());
        self.pivots.push(p);
        self.pivot_row[p] = Some(self.rows.len() - 1);
        Some(self.rows.len() - 1)
    }

    pub fn contains(&self, v: &LinComb<K>) -> Result<bool, Error> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Canonical representative of `v` modulo the span: the unique element of
    /// `v + span` supported on non-pivot columns.
    pub fn reduce(&self, v: &LinComb<K>) -> Result<LinComb<K>, Error> {
        let mut d = self.to_dense(v)?;
        self.reduce_dense(&mut d);
        Ok(self.to_sparse(&d))
    }

    /// Current echelon rows as formal combinations, sorted by pivot column.
    pub fn basis(&self) -> Vec<LinComb<K>> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&i| self.pivots[i]);
        idx.into_iter().map(|i| self.to_sparse(&self.rows[i])).collect()
    }

    /// Echelon rows paired with their pivot keys, sorted by pivot column.
    pub fn basis_with_pivots(&self) -> Vec<(K, LinComb<K>)> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&i| self.pivots[i]);
        idx.into_iter()
            .map(|i| (self.columns[self.pivots[i]].clone(), self.to_sparse(&self.rows[i])))
            .collect()
    }

    /// Columns that carry no pivot; their keys form a basis of the quotient.
    pub fn complement(&self) -> Vec<K> {
        (0..self.columns.len())
            .filter(|&c| self.pivot_row[c].is_none())
            .map(|c| self.columns[c].clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn grows_and_reduces() {
        let mut s = DenseSpan::new(vec!["a", "b", "c"]);
        let v1 = LinComb::from_terms([("a", q(2)), ("b", q(2))]);
        let row = s.insert(&v1).unwrap().unwrap();
        assert_eq!(row, LinComb::from_terms([("a", q(1)), ("b", q(1))]));
        assert!(s.insert(&v1.scaled(&q(3))).unwrap().is_none());
        let v2 = LinComb::from_terms([("b", q(1)), ("c", q(1))]);
        s.insert(&v2).unwrap();
        assert_eq!(s.rank(), 2);
        assert_eq!(s.complement(), vec!["c"]);
        let r = s.reduce(&LinComb::basis("a")).unwrap();
        assert_eq!(r, LinComb::basis("c"));
        assert_eq!(s.reduce(&r).unwrap(), r);
        assert!(s.insert(&LinComb::basis("zz")).is_err());
    }

    #[test]
    fn tail_intersection_counts() {
        // span{a - c, b} meets span{c} trivially but span{b, c} in dimension 1
        let mut s = DenseSpan::new(vec!["a", "b", "c"]);
        s.insert(&LinComb::from_terms([("a", q(1)), ("c", q(-1))])).unwrap();
        s.insert(&LinComb::basis("b")).unwrap();
        let tail = |b: usize| s.pivots().iter().filter(|&&p| p >= b).count();
        assert_eq!(tail(1), 1);
        assert_eq!(tail(2), 0);
    }
}
