//! Exact linear algebra over the rationals.
//!
//! Subspaces are kept as reduced row-echelon bases, so two subspaces are
//! equal exactly when their stored rows are equal. Everything here is
//! tolerance-free by construction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

/// `n` as an exact rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as an exact rational.
pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vec(len: usize) -> Vec<Rat> {
    vec![Rat::zero(); len]
}

/// A subspace of `Q^ambient`, stored as a reduced row-echelon basis with
/// strictly increasing pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rat>>,
    {
        let mut s = Subspace::new(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Reduces `v` against the stored rows, leaving only non-pivot support.
    fn reduce(&self, v: &mut [Rat]) {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for (vi, ri) in v.iter_mut().zip(row) {
                    if !ri.is_zero() {
                        *vi -= &factor * ri;
                    }
                }
            }
        }
    }

    /// Adds `v` to the span. Returns true if the dimension grew.
    pub fn insert(&mut self, mut v: Vec<Rat>) -> bool {
        self.reduce(&mut v);
        let pivot = match v.iter().position(|c| !c.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        let lead = v[pivot].clone();
        for c in v.iter_mut() {
            if !c.is_zero() {
                *c /= &lead;
            }
        }
        // back-eliminate the new pivot column from existing rows
        for row in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let factor = row[pivot].clone();
                for (ri, vi) in row.iter_mut().zip(&v) {
                    if !vi.is_zero() {
                        *ri -= &factor * vi;
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|c| c.is_zero())
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Smallest subspace containing both operands.
    pub fn union(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    /// Projection of the subspace onto a set of coordinates: keeps only the
    /// listed coordinates of each basis vector (zeroing the rest) and spans
    /// the results. For a coordinate-stable subspace this is the
    /// intersection with the coordinate subspace.
    pub fn coordinate_slice(&self, keep: &[bool]) -> Subspace {
        assert_eq!(keep.len(), self.ambient);
        let mut s = Subspace::new(self.ambient);
        for row in &self.rows {
            let sliced: Vec<Rat> = row
                .iter()
                .zip(keep)
                .map(|(c, &k)| if k { c.clone() } else { Rat::zero() })
                .collect();
            s.insert(sliced);
        }
        s
    }
}

/// Rank of a list of vectors.
pub fn rank<I>(ambient: usize, vectors: I) -> usize
where
    I: IntoIterator<Item = Vec<Rat>>,
{
    Subspace::from_vectors(ambient, vectors).dim()
}

/// A basis of the right null space `{x : M x = 0}` of the matrix whose rows
/// are `rows` (each of length `ncols`). Deterministic: one basis vector per
/// free column, in ascending column order.
pub fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut rref = Subspace::new(ncols);
    for r in rows {
        rref.insert(r.clone());
    }
    let pivots = rref.pivots.clone();
    let mut basis = Vec::new();
    for j in 0..ncols {
        if pivots.contains(&j) {
            continue;
        }
        let mut x = zero_vec(ncols);
        x[j] = Rat::one();
        for (row, &p) in rref.rows.iter().zip(&pivots) {
            x[p] = -row[j].clone();
        }
        basis.push(x);
    }
    basis
}
