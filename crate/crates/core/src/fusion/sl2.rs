//! Finite-dimensional cyclic sl2 modules used as fusion factors.
//!
//! Basis conventions for the irreducible `pi_l` on `u_0, ..., u_l`:
//!
//! ```text
//! e u_j = j(l - j + 1) u_{j-1},   f u_j = u_{j+1},   h u_j = (l - 2j) u_j
//! ```
//!
//! so `u_0` is the highest weight vector. Three constructors are provided:
//! the irreducible itself, the direct sum of `pi_0, ..., pi_m` with the sum
//! of highest weight vectors as cyclic vector, and the matrix module
//! `sum_{l<=k} pi_l^* (x) pi_l` whose cyclic vector is the sum of canonical
//! elements (the action only sees the second tensor slot, so this is `l+1`
//! copies of each `pi_l`).

use crate::linalg::{rat, zero_vec, Rat, Subspace};
use num_traits::Zero;

/// Which sl2 generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    E,
    F,
    H,
}

pub const GENS: [Gen; 3] = [Gen::E, Gen::F, Gen::H];

/// The irreducible `pi_l` with explicit action matrices.
#[derive(Clone, Debug)]
pub struct Sl2Irrep {
    pub highest_weight: usize,
}

impl Sl2Irrep {
    pub fn new(highest_weight: usize) -> Self {
        Sl2Irrep { highest_weight }
    }

    pub fn dim(&self) -> usize {
        self.highest_weight + 1
    }

    /// Dense action matrix of a generator, `rows x cols = dim x dim`.
    pub fn action(&self, gen: Gen) -> Vec<Vec<Rat>> {
        let l = self.highest_weight;
        let dim = self.dim();
        let mut mat = vec![zero_vec(dim); dim];
        for j in 0..dim {
            match gen {
                Gen::E => {
                    if j > 0 {
                        mat[j - 1][j] = rat((j * (l - j + 1)) as i64);
                    }
                }
                Gen::F => {
                    if j + 1 < dim {
                        mat[j + 1][j] = rat(1);
                    }
                }
                Gen::H => {
                    mat[j][j] = rat(l as i64 - 2 * j as i64);
                }
            }
        }
        mat
    }
}

/// How a factor was built; irreducibles carry their weight so sweeps can
/// recover the multiplicity vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// `pi_l`, highest weight vector cyclic.
    Irrep(usize),
    /// `pi_0 (+) ... (+) pi_m`, sum of highest weight vectors cyclic.
    HighestSum(usize),
    /// `sum_{l<=k} pi_l^* (x) pi_l`, sum of canonical elements cyclic.
    MatrixSum(usize),
}

/// A cyclic sl2 module placed at an evaluation point.
#[derive(Clone, Debug)]
pub struct CyclicModuleFactor {
    pub kind: FactorKind,
    pub dim: usize,
    pub point: Rat,
    /// Action matrices indexed by [e, f, h].
    actions: [Vec<Vec<Rat>>; 3],
    /// h-eigenvalue of each basis vector (h is diagonal in all constructors).
    pub weights: Vec<i64>,
    pub cyclic_vector: Vec<Rat>,
}

/// One direct summand: actions of e, f, h plus the basis weights.
type Block = (Vec<Vec<Rat>>, Vec<Vec<Rat>>, Vec<Vec<Rat>>, Vec<i64>);

fn direct_sum(blocks: Vec<Block>) -> (usize, [Vec<Vec<Rat>>; 3], Vec<i64>) {
    let dim: usize = blocks.iter().map(|(_, _, _, w)| w.len()).sum();
    let mut e = vec![zero_vec(dim); dim];
    let mut f = vec![zero_vec(dim); dim];
    let mut h = vec![zero_vec(dim); dim];
    let mut weights = Vec::with_capacity(dim);
    let mut offset = 0;
    for (be, bf, bh, bw) in blocks {
        let d = bw.len();
        for r in 0..d {
            for c in 0..d {
                e[offset + r][offset + c] = be[r][c].clone();
                f[offset + r][offset + c] = bf[r][c].clone();
                h[offset + r][offset + c] = bh[r][c].clone();
            }
        }
        weights.extend(bw);
        offset += d;
    }
    (dim, [e, f, h], weights)
}

impl CyclicModuleFactor {
    /// The irreducible `pi_l` at point `z`, highest weight vector cyclic.
    pub fn irrep(l: usize, z: Rat) -> Self {
        let rep = Sl2Irrep::new(l);
        let weights: Vec<i64> = (0..rep.dim()).map(|j| l as i64 - 2 * j as i64).collect();
        let mut cyclic = zero_vec(rep.dim());
        cyclic[0] = rat(1);
        CyclicModuleFactor {
            kind: FactorKind::Irrep(l),
            dim: rep.dim(),
            point: z,
            actions: [rep.action(Gen::E), rep.action(Gen::F), rep.action(Gen::H)],
            weights,
            cyclic_vector: cyclic,
        }
    }

    /// `pi_0 (+) ... (+) pi_m` at point `z`, cyclic vector the sum of the
    /// highest weight vectors.
    pub fn highest_weight_sum(m: usize, z: Rat) -> Self {
        let mut blocks = Vec::new();
        for l in 0..=m {
            let rep = Sl2Irrep::new(l);
            let weights: Vec<i64> = (0..rep.dim()).map(|j| l as i64 - 2 * j as i64).collect();
            blocks.push((
                rep.action(Gen::E),
                rep.action(Gen::F),
                rep.action(Gen::H),
                weights,
            ));
        }
        let (dim, actions, weights) = direct_sum(blocks);
        let mut cyclic = zero_vec(dim);
        let mut offset = 0;
        for l in 0..=m {
            cyclic[offset] = rat(1); // u_0 of pi_l
            offset += l + 1;
        }
        CyclicModuleFactor {
            kind: FactorKind::HighestSum(m),
            dim,
            point: z,
            actions,
            weights,
            cyclic_vector: cyclic,
        }
    }

    /// `sum_{l<=k} pi_l^* (x) pi_l` at point `z`: for each `l`, `l+1`
    /// copies of `pi_l` (one per dual basis vector), with the canonical
    /// element `sum_j u_j^* (x) u_j` summed over `l` as cyclic vector.
    pub fn matrix_sum(k: usize, z: Rat) -> Self {
        let mut blocks = Vec::new();
        for l in 0..=k {
            let rep = Sl2Irrep::new(l);
            let weights: Vec<i64> = (0..rep.dim()).map(|j| l as i64 - 2 * j as i64).collect();
            for _copy in 0..rep.dim() {
                blocks.push((
                    rep.action(Gen::E),
                    rep.action(Gen::F),
                    rep.action(Gen::H),
                    weights.clone(),
                ));
            }
        }
        let (dim, actions, weights) = direct_sum(blocks);
        let mut cyclic = zero_vec(dim);
        let mut offset = 0;
        for l in 0..=k {
            for copy in 0..=l {
                cyclic[offset + copy] = rat(1); // u_copy inside copy number `copy`
                offset += l + 1;
            }
        }
        CyclicModuleFactor {
            kind: FactorKind::MatrixSum(k),
            dim,
            point: z,
            actions,
            weights,
            cyclic_vector: cyclic,
        }
    }

    pub fn action(&self, gen: Gen) -> &Vec<Vec<Rat>> {
        match gen {
            Gen::E => &self.actions[0],
            Gen::F => &self.actions[1],
            Gen::H => &self.actions[2],
        }
    }

    pub fn apply(&self, gen: Gen, v: &[Rat]) -> Vec<Rat> {
        let mat = self.action(gen);
        let mut out = zero_vec(self.dim);
        for (r, row) in mat.iter().enumerate() {
            for (c, entry) in row.iter().enumerate() {
                if !entry.is_zero() && !v[c].is_zero() {
                    out[r] += entry * &v[c];
                }
            }
        }
        out
    }

    /// True when the cyclic vector generates the whole module under
    /// `e, f, h` (closure check).
    pub fn is_cyclic(&self) -> bool {
        let mut span = Subspace::new(self.dim);
        span.insert(self.cyclic_vector.clone());
        let mut frontier = vec![self.cyclic_vector.clone()];
        while let Some(v) = frontier.pop() {
            for gen in GENS {
                let w = self.apply(gen, &v);
                if span.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        span.is_full()
    }
}

/// Irreducible factors for the multiplicity vector `m`: `m_i` copies of
/// `pi_i` in ascending weight order, placed at the given points.
pub fn irrep_factors(m: &[usize], points: &[Rat]) -> Vec<CyclicModuleFactor> {
    let mut factors = Vec::new();
    let mut next = 0;
    for (i, &mult) in m.iter().enumerate() {
        for _ in 0..mult {
            factors.push(CyclicModuleFactor::irrep(i + 1, points[next].clone()));
            next += 1;
        }
    }
    factors
}
