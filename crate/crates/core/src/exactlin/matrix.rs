use std::collections::BTreeSet;
use std::fmt;

use super::{LinComb, Rational};

/// Dense `rows × cols` matrix of rationals, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Result of [`rowreduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub matrix: RatMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            entries.extend(r);
        }
        RatMatrix { rows: n, cols, entries }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[Rational]> = (0..self.rows).map(|i| self.row(i)).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// Reduced row-echelon form by Gauss–Jordan elimination.
pub fn rowreduce(m: &RatMatrix) -> Echelon {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a[(r, c)].recip().unwrap();
        for j in c..a.cols {
            if !a[(r, j)].is_zero() {
                a[(r, j)] = &a[(r, j)] * &inv;
            }
        }
        for i in 0..a.rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..a.cols {
                if !a[(r, j)].is_zero() {
                    let d = &f * &a[(r, j)];
                    a[(i, j)] -= &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon {
        matrix: a,
        rank: r,
        pivots,
    }
}

pub fn rank(m: &RatMatrix) -> usize {
    rowreduce(m).rank
}

/// Basis of `{v : m·v = 0}`, one vector per free column, with a `1` in that
/// free column.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let ech = rowreduce(m);
    let pivot_set: BTreeSet<usize> = ech.pivots.iter().copied().collect();
    let mut out = Vec::new();
    for free in (0..m.cols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![Rational::zero(); m.cols];
        v[free] = Rational::one();
        for (r, &p) in ech.pivots.iter().enumerate() {
            let e = &ech.matrix[(r, free)];
            if !e.is_zero() {
                v[p] = -e;
            }
        }
        out.push(v);
    }
    out
}

/// Rows of the matrix whose columns are the union of keys, in key order.
fn to_matrix<K: Ord + Clone>(vectors: &[&LinComb<K>]) -> RatMatrix {
    let keys: Vec<K> = vectors
        .iter()
        .flat_map(|v| v.keys().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let rows = vectors
        .iter()
        .map(|v| keys.iter().map(|k| v.coeff(k)).collect())
        .collect::<Vec<_>>();
    if rows.is_empty() {
        return RatMatrix::zeros(0, keys.len());
    }
    if keys.is_empty() {
        return RatMatrix::zeros(rows.len(), 0);
    }
    RatMatrix::from_rows(rows)
}

/// Rank of the span of formal combinations.
pub fn span_rank<K: Ord + Clone>(vectors: &[LinComb<K>]) -> usize {
    let refs: Vec<&LinComb<K>> = vectors.iter().collect();
    rank(&to_matrix(&refs))
}

/// Whether `candidate` lies in the rational span of `generators`, decided by
/// comparing ranks before and after adjoining it.
pub fn span_contains<K: Ord + Clone>(generators: &[LinComb<K>], candidate: &LinComb<K>) -> bool {
    let mut refs: Vec<&LinComb<K>> = generators.iter().collect();
    let before = rank(&to_matrix(&refs));
    refs.push(candidate);
    rank(&to_matrix(&refs)) == before
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_reduced() {
        let e = rowreduce(&RatMatrix::identity(2));
        assert_eq!(e.rank, 2);
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.matrix, RatMatrix::identity(2));
    }

    #[test]
    fn proportional_rows() {
        let m = RatMatrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn reduced_form() {
        let m = RatMatrix::from_i64(&[vec![0, 2, 4], vec![3, 0, 3], vec![3, 2, 7]]);
        let e = rowreduce(&m);
        assert_eq!(e.rank, 2);
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(
            e.matrix,
            RatMatrix::from_i64(&[vec![1, 0, 1], vec![0, 1, 2], vec![0, 0, 0]])
        );
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(kernel_basis(&RatMatrix::identity(3)).is_empty());
    }

    #[test]
    fn kernel_of_row_vector() {
        let k = kernel_basis(&RatMatrix::from_i64(&[vec![1, 1]]));
        assert_eq!(k, vec![vec![Rational::from_int(-1), Rational::one()]]);
    }

    #[test]
    fn span_membership() {
        let x = LinComb::basis("x");
        let y = LinComb::basis("y");
        let g = vec![x.add(&y)];
        assert!(span_contains(&g, &x.add(&y).scaled(&Rational::from_int(2))));
        assert!(!span_contains(std::slice::from_ref(&x), &y));
        assert!(span_contains::<&str>(&[], &LinComb::zero()));
        assert!(!span_contains(&[], &x));
    }
}
