//! Exact linear algebra over a coefficient field.
//!
//! Everything graded in the crate eventually becomes a finite-dimensional
//! problem; [`Echelon`] is the one elimination primitive behind ranks,
//! kernels, span membership and linear solves.

use crate::error::{Error, Result};
use crate::field::{Coeff, FieldDescriptor};

/// Sparse vector: `(index, value)` pairs with increasing indices and no zeros.
pub type SparseVec<K> = Vec<(usize, K)>;

/// Result of inserting a vector into an [`Echelon`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insert<K> {
    /// The vector enlarged the span; its pivot column.
    Independent(usize),
    /// The vector was already in the span. With tracking enabled this is the
    /// relation `sum_k c_k v_k = 0` among inserted vectors (the new one has
    /// coefficient 1).
    Dependent(Option<SparseVec<K>>),
}

/// Incremental row echelon form of the span of inserted vectors.
#[derive(Clone, Debug)]
pub struct Echelon<K> {
    field: FieldDescriptor,
    ncols: usize,
    pivot_row: Vec<Option<usize>>,
    rows: Vec<SparseVec<K>>,
    tracks: Option<Vec<SparseVec<K>>>,
    inserted: usize,
}

impl<K: Coeff> Echelon<K> {
    pub fn new(ncols: usize, field: FieldDescriptor) -> Self {
        Echelon {
            field,
            ncols,
            pivot_row: vec![None; ncols],
            rows: Vec::new(),
            tracks: None,
            inserted: 0,
        }
    }

    /// Also records each echelon row as a combination of the inserted
    /// vectors, which is what kernels and solves need.
    pub fn with_tracking(ncols: usize, field: FieldDescriptor) -> Self {
        let mut e = Self::new(ncols, field);
        e.tracks = Some(Vec::new());
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Echelon rows, each with leading coefficient one.
    pub fn rows(&self) -> &[SparseVec<K>] {
        &self.rows
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Returns `(residue, combination)` with `v = residue + sum_k c_k v_k`
    /// over inserted vectors `v_k` (combination only when tracking).
    pub fn reduce(&self, v: &SparseVec<K>) -> (SparseVec<K>, Option<SparseVec<K>>) {
        let zero = K::zero(self.field);
        let mut dense = vec![zero.clone(); self.ncols];
        for (i, c) in v {
            dense[*i] = c.clone();
        }
        let mut combo: Option<Vec<K>> = self.tracks.as_ref().map(|_| vec![zero.clone(); self.inserted]);
        for col in 0..self.ncols {
            if dense[col].is_zero() {
                continue;
            }
            let Some(r) = self.pivot_row[col] else { continue };
            let c = dense[col].clone();
            for (j, x) in &self.rows[r] {
                dense[*j] = dense[*j].sub(&c.mul(x));
            }
            if let (Some(acc), Some(tracks)) = (combo.as_mut(), self.tracks.as_ref()) {
                for (k, t) in &tracks[r] {
                    acc[*k] = acc[*k].add(&c.mul(t));
                }
            }
        }
        (sparsify(dense), combo.map(sparsify))
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).0.is_empty()
    }

    pub fn insert(&mut self, v: &SparseVec<K>) -> Insert<K> {
        let (residue, combo) = self.reduce(v);
        let index = self.inserted;
        self.inserted += 1;
        let one = K::one(self.field);
        if residue.is_empty() {
            let relation = combo.map(|c| {
                let mut rel: SparseVec<K> = c.into_iter().map(|(k, x)| (k, x.neg())).collect();
                rel.push((index, one));
                rel
            });
            return Insert::Dependent(relation);
        }
        let (pivot, lead) = residue[0].clone();
        let scale = lead.inv().expect("nonzero pivot");
        let row: SparseVec<K> = residue.into_iter().map(|(j, x)| (j, x.mul(&scale))).collect();
        if let Some(tracks) = self.tracks.as_mut() {
            let mut t: SparseVec<K> = combo
                .unwrap_or_default()
                .into_iter()
                .map(|(k, x)| (k, x.neg().mul(&scale)))
                .collect();
            t.push((index, scale));
            tracks.push(t);
        }
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(row);
        Insert::Independent(pivot)
    }

    /// Solves `sum_k x_k v_k = target` over the inserted vectors.
    pub fn solve(&self, target: &SparseVec<K>) -> Option<SparseVec<K>> {
        assert!(self.tracks.is_some(), "solve needs tracking");
        let (residue, combo) = self.reduce(target);
        residue.is_empty().then(|| combo.unwrap_or_default())
    }
}

fn sparsify<K: Coeff>(dense: Vec<K>) -> SparseVec<K> {
    dense.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

pub fn rank_of_vectors<K: Coeff>(vectors: &[SparseVec<K>], ncols: usize, field: FieldDescriptor) -> usize {
    let mut e = Echelon::new(ncols, field);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Basis of `{x : sum_k x_k v_k = 0}`.
pub fn kernel_of_vectors<K: Coeff>(vectors: &[SparseVec<K>], ncols: usize, field: FieldDescriptor) -> Vec<SparseVec<K>> {
    let mut e = Echelon::with_tracking(ncols, field);
    vectors
        .iter()
        .filter_map(|v| match e.insert(v) {
            Insert::Dependent(rel) => rel,
            Insert::Independent(_) => None,
        })
        .collect()
}

pub fn dense_to_sparse<K: Coeff>(row: &[K]) -> SparseVec<K> {
    row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

pub fn determinant<K: Coeff>(m: &[Vec<K>], field: FieldDescriptor) -> K {
    let n = m.len();
    let mut a: Vec<Vec<K>> = m.to_vec();
    let mut det = K::one(field);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return K::zero(field);
        };
        if p != col {
            a.swap(p, col);
            det = det.neg();
        }
        let pivot = a[col][col].clone();
        det = det.mul(&pivot);
        let inv = pivot.inv().expect("nonzero pivot");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].mul(&inv);
            for c in col..n {
                let t = f.mul(&a[col][c]);
                a[r][c] = a[r][c].sub(&t);
            }
        }
    }
    det
}

pub fn invert<K: Coeff>(m: &[Vec<K>], field: FieldDescriptor) -> Result<Vec<Vec<K>>> {
    let n = m.len();
    let mut a: Vec<Vec<K>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { K::one(field) } else { K::zero(field) }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
        a.swap(p, col);
        let inv = a[col][col].inv().expect("nonzero pivot");
        for c in 0..2 * n {
            a[col][c] = a[col][c].mul(&inv);
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..2 * n {
                let t = f.mul(&a[col][c]);
                a[r][c] = a[r][c].sub(&t);
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul<K: Coeff>(a: &[Vec<K>], b: &[Vec<K>], field: FieldDescriptor) -> Vec<Vec<K>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(K::zero(field), |acc, k| acc.add(&row[k].mul(&b[k][j])))
                })
                .collect()
        })
        .collect()
}
