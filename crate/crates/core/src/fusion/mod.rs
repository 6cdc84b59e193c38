//! Brute-force engine for filtered tensor products of cyclic sl2 evaluation
//! modules, their fusion products and coinvariant spaces.
//!
//! A list of [`CyclicModuleFactor`]s at pairwise distinct points spans a
//! `g[t]`-module where `x[j]` acts as `sum_i z_i^j x^(i)`. The filtration
//! is by the total `t`-degree applied to the tensor product of cyclic
//! vectors:
//!
//! ```text
//! F^d = span{ x_1[j_1] ... x_r[j_r] v : j_1 + ... + j_r <= d }
//! ```
//!
//! computed by the recursion `F^0 = closure(v)`,
//! `F^d = closure(F^{d-1} + sum_j x[j] F^{d-j})` where `closure` applies
//! the degree-zero operators until the span stabilizes. Two cost cuts that
//! change nothing mathematically: `x[j]` for `j >= N` acts as a linear
//! combination of `x[0], ..., x[N-1]`, so generator degrees are capped at
//! `N - 1`; and `x[j] F^{d-1-j}` already lies in `F^{d-1}`, so generators
//! only need to hit the spanning vectors added at degree `d - j`.
//!
//! Coinvariants are taken with respect to the right ideal generated by
//! `h[0] + l`, `e[0]` and `e[1]^{k-l+1}`, either on the filtered space or
//! on its associated graded.

pub mod ideal;
pub mod points;
mod sl2;

pub use ideal::{componentwise_ideal_fuse, top_of_ideal, ComponentwiseIdeal, RatPoly};
pub use points::{point_pool, point_set};
pub use sl2::{irrep_factors, CyclicModuleFactor, FactorKind, Gen, Sl2Irrep, GENS};

use crate::kostka;
use crate::linalg::{rat, zero_vec, Rat, Subspace};
use crate::qseries::QPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FusionError {
    #[error("evaluation points must be pairwise distinct")]
    CoincidentPoints,
    #[error("expected {expected} evaluation points, got {got}")]
    PointCountMismatch { expected: usize, got: usize },
    #[error("factor {index} is not cyclic: its vector does not generate the module")]
    NonCyclicFactor { index: usize },
    #[error(
        "filtration stalled at degree {degree} with dimension {dim} of {full_dim}; \
         the tensor of cyclic vectors does not generate"
    )]
    FiltrationStalled {
        degree: usize,
        dim: usize,
        full_dim: usize,
    },
    #[error("weight {l} exceeds level {k}")]
    WeightAboveLevel { l: usize, k: usize },
    #[error("requested {requested} points but the pool holds {available}")]
    PointPoolExhausted { requested: usize, available: usize },
    #[error("ideal generator p_{component} must be monic and non-zero")]
    NonMonicGenerator { component: char },
    #[error("subalgebra condition fails: p_h does not divide p_e * p_f")]
    SubalgebraViolation,
    #[error("{ideals} ideals but {points} points")]
    IdealCountMismatch { ideals: usize, points: usize },
}

/// Character table of a graded module: `(t-degree, h-weight) -> dimension`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCharacter {
    table: BTreeMap<(usize, i64), usize>,
}

impl GradedCharacter {
    pub fn new() -> Self {
        GradedCharacter {
            table: BTreeMap::new(),
        }
    }

    fn add(&mut self, degree: usize, weight: i64, dim: usize) {
        if dim > 0 {
            *self.table.entry((degree, weight)).or_insert(0) += dim;
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, usize)> + '_ {
        self.table.iter().map(|(&(d, w), &n)| (d, w, n))
    }

    pub fn dimension_at(&self, degree: usize, weight: i64) -> usize {
        self.table.get(&(degree, weight)).copied().unwrap_or(0)
    }

    /// Series in `q` of a fixed h-weight slice.
    pub fn weight_series(&self, weight: i64) -> QPoly {
        let mut poly = QPoly::zero();
        for (&(d, w), &n) in &self.table {
            if w == weight {
                poly = &poly + &QPoly::monomial(BigInt::from(n), d);
            }
        }
        poly
    }

    /// Series in `q` summed over all weights.
    pub fn degree_series(&self) -> QPoly {
        let mut poly = QPoly::zero();
        for (&(d, _), &n) in &self.table {
            poly = &poly + &QPoly::monomial(BigInt::from(n), d);
        }
        poly
    }

    pub fn total_dimension(&self) -> usize {
        self.table.values().sum()
    }

    pub fn weights(&self) -> Vec<i64> {
        let mut ws: Vec<i64> = self.table.keys().map(|&(_, w)| w).collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }
}

impl Default for GradedCharacter {
    fn default() -> Self {
        GradedCharacter::new()
    }
}

/// The ambient tensor product of the factors, with index bookkeeping.
struct TensorSpace {
    factors: Vec<CyclicModuleFactor>,
    strides: Vec<usize>,
    total_dim: usize,
    /// h-weight of each ambient basis vector.
    weights: Vec<i64>,
}

impl TensorSpace {
    fn new(factors: &[CyclicModuleFactor]) -> Result<Self, FusionError> {
        for i in 0..factors.len() {
            for j in 0..i {
                if factors[i].point == factors[j].point {
                    return Err(FusionError::CoincidentPoints);
                }
            }
        }
        for (index, f) in factors.iter().enumerate() {
            if !f.is_cyclic() {
                return Err(FusionError::NonCyclicFactor { index });
            }
        }
        let mut strides = vec![1usize; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1].dim;
        }
        let total_dim: usize = factors.iter().map(|f| f.dim).product();
        let mut weights = vec![0i64; total_dim];
        for (b, w) in weights.iter_mut().enumerate() {
            for (i, f) in factors.iter().enumerate() {
                let digit = (b / strides[i]) % f.dim;
                *w += f.weights[digit];
            }
        }
        Ok(TensorSpace {
            factors: factors.to_vec(),
            strides,
            total_dim,
            weights,
        })
    }

    fn cyclic_tensor(&self) -> Vec<Rat> {
        let mut v = zero_vec(self.total_dim);
        for (b, entry) in v.iter_mut().enumerate() {
            let mut prod = rat(1);
            for (i, f) in self.factors.iter().enumerate() {
                let digit = (b / self.strides[i]) % f.dim;
                if f.cyclic_vector[digit].is_zero() {
                    prod = Rat::zero();
                    break;
                }
                prod *= &f.cyclic_vector[digit];
            }
            *entry = prod;
        }
        v
    }

    /// Applies the generator on one tensor slot.
    fn apply_slot(&self, slot: usize, gen: Gen, v: &[Rat], out: &mut [Rat], scale: &Rat) {
        let f = &self.factors[slot];
        let stride = self.strides[slot];
        let mat = f.action(gen);
        for (b, vb) in v.iter().enumerate() {
            if vb.is_zero() {
                continue;
            }
            let digit = (b / stride) % f.dim;
            let base = b - digit * stride;
            for (r, row) in mat.iter().enumerate() {
                let entry = &row[digit];
                if !entry.is_zero() {
                    out[base + r * stride] += scale * entry * vb;
                }
            }
        }
    }

    /// `x[j] v = sum_i z_i^j x^(i) v`.
    fn apply_current(&self, gen: Gen, j: usize, v: &[Rat]) -> Vec<Rat> {
        let mut out = zero_vec(self.total_dim);
        for slot in 0..self.factors.len() {
            let mut scale = Rat::one();
            for _ in 0..j {
                scale *= &self.factors[slot].point;
            }
            if scale.is_zero() {
                continue;
            }
            self.apply_slot(slot, gen, v, &mut out, &scale);
        }
        out
    }

    /// `(h[0] + l) v`.
    fn apply_h0_plus(&self, l: usize, v: &[Rat]) -> Vec<Rat> {
        let mut out = self.apply_current(Gen::H, 0, v);
        let shift = rat(l as i64);
        for (o, vb) in out.iter_mut().zip(v) {
            *o += &shift * vb;
        }
        out
    }

    /// `e[1]^p v` by iterated application.
    fn apply_e1_power(&self, p: usize, v: &[Rat]) -> Vec<Rat> {
        let mut cur = v.to_vec();
        for _ in 0..p {
            cur = self.apply_current(Gen::E, 1, &cur);
        }
        cur
    }

    /// Extends `space` to its closure under the degree-zero operators.
    /// `layer` holds the spanning vectors added at the current degree;
    /// everything from index `from` on is treated as unprocessed frontier
    /// and newly inserted vectors are appended.
    fn close_under_degree_zero(
        &self,
        space: &mut Subspace,
        layer: &mut Vec<Vec<Rat>>,
        from: usize,
    ) {
        let mut i = from;
        while i < layer.len() {
            for gen in GENS {
                let w = self.apply_current(gen, 0, &layer[i]);
                if space.insert(w.clone()) {
                    layer.push(w);
                }
            }
            i += 1;
        }
    }

    /// Degree cap before the build is declared stalled.
    fn safety_bound(&self) -> usize {
        let weights: Vec<usize> = self
            .factors
            .iter()
            .filter_map(|f| match f.kind {
                FactorKind::Irrep(l) => Some(l),
                _ => None,
            })
            .collect();
        if weights.len() == self.factors.len() {
            let max = weights.iter().copied().max().unwrap_or(0);
            let mut m = vec![0usize; max];
            for l in weights.into_iter().filter(|&l| l > 0) {
                m[l - 1] += 1;
            }
            2 * kostka::norm(&m) + kostka::weighted_size(&m) + 1
        } else {
            self.factors.len().saturating_sub(1) * self.total_dim + 1
        }
    }

    /// The subspace `(h[0]+l) V + e[0] V + e[1]^{k-l+1} V`, taken literally
    /// as a sum of operator images over the whole space.
    fn coinvariant_denominator(&self, k: usize, l: usize) -> Subspace {
        let p = k - l + 1;
        let mut w = Subspace::new(self.total_dim);
        for b in 0..self.total_dim {
            let mut unit = zero_vec(self.total_dim);
            unit[b] = rat(1);
            w.insert(self.apply_h0_plus(l, &unit));
            w.insert(self.apply_current(Gen::E, 0, &unit));
            w.insert(self.apply_e1_power(p, &unit));
        }
        w
    }
}

/// The degree filtration `F^0 subset F^1 subset ...` of the filtered tensor
/// product, ending at the full space. Built once, then queried for the
/// various characters.
pub struct Filtration {
    /// `spaces[d]` is `F^d`; the last entry spans the whole tensor product.
    pub spaces: Vec<Subspace>,
    ctx: TensorSpace,
}

/// Builds the degree filtration of the filtered tensor product of the
/// factors, with the generator degree cap chosen automatically (`N - 1`
/// suffices on `N` points).
pub fn build_filtration(factors: &[CyclicModuleFactor]) -> Result<Filtration, FusionError> {
    build_filtration_with_cap(factors, None)
}

/// As [`build_filtration`], with an explicit cap on the generator degrees
/// `j` of the `x[j]` applied at each step. A cap below the automatic one
/// can make the build stall, which is reported as an error.
pub fn build_filtration_with_cap(
    factors: &[CyclicModuleFactor],
    max_gen_degree: Option<usize>,
) -> Result<Filtration, FusionError> {
    let ctx = TensorSpace::new(factors)?;
    let mut space = Subspace::new(ctx.total_dim);
    let mut layer = Vec::new();
    let v = ctx.cyclic_tensor();
    if space.insert(v.clone()) {
        layer.push(v);
    }
    ctx.close_under_degree_zero(&mut space, &mut layer, 0);
    let mut spaces = vec![space];
    let mut layers = vec![layer];

    let max_gen = max_gen_degree.unwrap_or_else(|| factors.len().saturating_sub(1));
    let stall_window = max_gen.max(1);
    let safety = ctx.safety_bound();
    let mut stalls = 0usize;
    while !spaces.last().expect("non-empty").is_full() {
        let d = spaces.len();
        if d > safety {
            let dim = spaces.last().unwrap().dim();
            return Err(FusionError::FiltrationStalled {
                degree: d,
                dim,
                full_dim: ctx.total_dim,
            });
        }
        let mut space = spaces[d - 1].clone();
        let mut layer = Vec::new();
        for j in 1..=d.min(max_gen) {
            for v in &layers[d - j] {
                for gen in GENS {
                    let w = ctx.apply_current(gen, j, v);
                    if space.insert(w.clone()) {
                        layer.push(w);
                    }
                }
            }
        }
        ctx.close_under_degree_zero(&mut space, &mut layer, 0);
        if space.dim() == spaces[d - 1].dim() {
            stalls += 1;
            if stalls >= stall_window && !space.is_full() {
                return Err(FusionError::FiltrationStalled {
                    degree: d,
                    dim: space.dim(),
                    full_dim: ctx.total_dim,
                });
            }
        } else {
            stalls = 0;
        }
        spaces.push(space);
        layers.push(layer);
    }
    Ok(Filtration { spaces, ctx })
}

impl Filtration {
    pub fn top_degree(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn total_dim(&self) -> usize {
        self.ctx.total_dim
    }

    /// Dimensions `dim F^0, dim F^1, ...`.
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.dim()).collect()
    }

    /// Graded character of the fusion product `gr F_Z(V_1, ..., V_N)`,
    /// split by t-degree and h-weight.
    pub fn fusion_character(&self) -> GradedCharacter {
        let ctx = &self.ctx;
        let mut weight_values: Vec<i64> = ctx.weights.clone();
        weight_values.sort_unstable();
        weight_values.dedup();

        let mut char_table = GradedCharacter::new();
        let mut prev: BTreeMap<i64, usize> = weight_values.iter().map(|&w| (w, 0)).collect();
        for (d, space) in self.spaces.iter().enumerate() {
            let mut checksum = 0;
            for &w in &weight_values {
                let keep: Vec<bool> = ctx.weights.iter().map(|&bw| bw == w).collect();
                let dim_w = space.coordinate_slice(&keep).dim();
                checksum += dim_w;
                let grew = dim_w - prev[&w];
                char_table.add(d, w, grew);
                prev.insert(w, dim_w);
            }
            // h[0]-stability means the weight slices exhaust the space
            debug_assert_eq!(checksum, space.dim());
        }
        char_table
    }

    /// Character of `gr` of the coinvariant space `V / <h[0]+l, e[0],
    /// e[1]^{k-l+1}>` with the filtration induced from the filtered tensor
    /// product: the coefficient of `q^d` is `dim (F^d + W)/(F^{d-1} + W)`.
    pub fn filtered_coinvariant_character(&self, k: usize, l: usize) -> Result<QPoly, FusionError> {
        validate_level_weight(k, l)?;
        let w = self.ctx.coinvariant_denominator(k, l);
        let mut poly = QPoly::zero();
        let mut prev_dim = w.dim();
        let mut acc = w;
        for (d, space) in self.spaces.iter().enumerate() {
            for b in space.basis().to_vec() {
                acc.insert(b);
            }
            let dim = acc.dim();
            poly = &poly + &QPoly::monomial(BigInt::from(dim - prev_dim), d);
            prev_dim = dim;
        }
        Ok(poly)
    }

    /// Character of the same quotient computed on the associated graded
    /// module: the operators act degree-by-degree (apply, then project to
    /// the top slice), so the coefficient of `q^d` is
    /// `dim F^d - dim((h[0]+l)F^d + e[0]F^d + e[1]^{k-l+1}F^{d-p} + F^{d-1})`.
    pub fn graded_coinvariant_character(&self, k: usize, l: usize) -> Result<QPoly, FusionError> {
        validate_level_weight(k, l)?;
        let ctx = &self.ctx;
        let p = k - l + 1;
        let spaces = &self.spaces;
        let mut poly = QPoly::zero();
        for (d, space) in spaces.iter().enumerate() {
            let mut image = if d > 0 {
                spaces[d - 1].clone()
            } else {
                Subspace::new(ctx.total_dim)
            };
            for b in space.basis().to_vec() {
                image.insert(ctx.apply_h0_plus(l, &b));
                image.insert(ctx.apply_current(Gen::E, 0, &b));
            }
            if d >= p {
                for b in spaces[d - p].basis().to_vec() {
                    image.insert(ctx.apply_e1_power(p, &b));
                }
            }
            poly = &poly + &QPoly::monomial(BigInt::from(space.dim() - image.dim()), d);
        }
        Ok(poly)
    }
}

/// Graded character of the fusion product.
pub fn fusion_character(factors: &[CyclicModuleFactor]) -> Result<GradedCharacter, FusionError> {
    Ok(build_filtration(factors)?.fusion_character())
}

fn validate_level_weight(k: usize, l: usize) -> Result<(), FusionError> {
    if l > k {
        return Err(FusionError::WeightAboveLevel { l, k });
    }
    Ok(())
}

/// Character of `gr` of the coinvariant space with the induced filtration.
pub fn filtered_coinvariant_character(
    factors: &[CyclicModuleFactor],
    k: usize,
    l: usize,
) -> Result<QPoly, FusionError> {
    validate_level_weight(k, l)?;
    build_filtration(factors)?.filtered_coinvariant_character(k, l)
}

/// Character of the coinvariant space of the associated graded module.
pub fn graded_coinvariant_character(
    factors: &[CyclicModuleFactor],
    k: usize,
    l: usize,
) -> Result<QPoly, FusionError> {
    validate_level_weight(k, l)?;
    build_filtration(factors)?.graded_coinvariant_character(k, l)
}

/// Dimension of the unfiltered coinvariant space `V / W`.
pub fn coinvariant_dimension(
    factors: &[CyclicModuleFactor],
    k: usize,
    l: usize,
) -> Result<usize, FusionError> {
    validate_level_weight(k, l)?;
    let ctx = TensorSpace::new(factors)?;
    let w = ctx.coinvariant_denominator(k, l);
    Ok(ctx.total_dim - w.dim())
}

/// True iff the fusion character and both coinvariant characters agree
/// across every supplied point set for the irreducible factors of `m`.
pub fn z_independence_test(
    m: &[usize],
    k: usize,
    l: usize,
    point_sets: &[Vec<Rat>],
) -> Result<bool, FusionError> {
    validate_level_weight(k, l)?;
    let count: usize = m.iter().sum();
    let mut reference: Option<(GradedCharacter, QPoly, QPoly)> = None;
    for points in point_sets {
        if points.len() != count {
            return Err(FusionError::PointCountMismatch {
                expected: count,
                got: points.len(),
            });
        }
        let factors = irrep_factors(m, points);
        let filtration = build_filtration(&factors)?;
        let triple = (
            filtration.fusion_character(),
            filtration.filtered_coinvariant_character(k, l)?,
            filtration.graded_coinvariant_character(k, l)?,
        );
        match &reference {
            None => reference = Some(triple),
            Some(r) => {
                if *r != triple {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostka::{restricted_kostka, supernomial};
    use crate::linalg::rat_frac;

    fn pts(values: &[i64]) -> Vec<Rat> {
        values.iter().map(|&v| rat(v)).collect()
    }

    // --- build_filtration ---

    #[test]
    fn single_irrep_lives_in_degree_zero() {
        let factors = vec![CyclicModuleFactor::irrep(3, rat(0))];
        let f = build_filtration(&factors).unwrap();
        assert_eq!(f.dims(), vec![4]);
    }

    #[test]
    fn two_fundamentals_grow_by_one_dimension() {
        let factors = irrep_factors(&[2], &pts(&[0, 1]));
        let f = build_filtration(&factors).unwrap();
        assert_eq!(f.dims(), vec![3, 4]);
    }

    #[test]
    fn terminal_dimension_is_the_tensor_dimension() {
        for n in 1..=4 {
            let m = vec![n];
            let points = point_set(n, None).unwrap();
            let factors = irrep_factors(&m, &points);
            let f = build_filtration(&factors).unwrap();
            assert_eq!(f.total_dim(), 1 << n);
            assert!(f.spaces.last().unwrap().is_full());
        }
    }

    /// Independent oracle for the optimized build: the literal recursion,
    /// applying every generator degree `j <= d` to the full basis of each
    /// lower space.
    fn literal_filtration(factors: &[CyclicModuleFactor]) -> Vec<Subspace> {
        let ctx = TensorSpace::new(factors).unwrap();
        let close = |space: &mut Subspace, seed: Vec<Vec<Rat>>| {
            let mut frontier = seed;
            while let Some(v) = frontier.pop() {
                for gen in GENS {
                    let w = ctx.apply_current(gen, 0, &v);
                    if space.insert(w.clone()) {
                        frontier.push(w);
                    }
                }
            }
        };
        let v = ctx.cyclic_tensor();
        let mut space = Subspace::new(ctx.total_dim);
        space.insert(v.clone());
        close(&mut space, vec![v]);
        let mut spaces = vec![space];
        while !spaces.last().unwrap().is_full() {
            let d = spaces.len();
            let mut next = spaces[d - 1].clone();
            let mut seed = Vec::new();
            for j in 1..=d {
                for b in spaces[d - j].basis().to_vec() {
                    for gen in GENS {
                        let w = ctx.apply_current(gen, j, &b);
                        if next.insert(w.clone()) {
                            seed.push(w);
                        }
                    }
                }
            }
            close(&mut next, seed);
            assert!(next.dim() > spaces[d - 1].dim(), "oracle build stalled");
            spaces.push(next);
        }
        spaces
    }

    #[test]
    fn optimized_build_matches_the_literal_recursion() {
        let cases: Vec<Vec<CyclicModuleFactor>> = vec![
            irrep_factors(&[3], &pts(&[0, 1, 2])),
            irrep_factors(&[1, 1], &pts(&[0, 1])),
            irrep_factors(&[0, 2], &pts(&[5, -3])),
            vec![
                CyclicModuleFactor::highest_weight_sum(2, rat(0)),
                CyclicModuleFactor::highest_weight_sum(1, rat(1)),
            ],
            vec![
                CyclicModuleFactor::matrix_sum(1, rat(2)),
                CyclicModuleFactor::irrep(1, rat(0)),
            ],
        ];
        for factors in cases {
            let fast = build_filtration(&factors).unwrap();
            // reduced row-echelon bases are canonical, so subspace equality
            // is literal equality of the stored spaces
            assert_eq!(fast.spaces, literal_filtration(&factors));
        }
    }

    #[test]
    fn generator_degree_cap_can_stall_the_build() {
        let factors = irrep_factors(&[2], &pts(&[0, 1]));
        assert!(matches!(
            build_filtration_with_cap(&factors, Some(0)),
            Err(FusionError::FiltrationStalled { dim: 3, .. })
        ));
        // an oversized cap only adds redundant generators
        let capped = build_filtration_with_cap(&factors, Some(5)).unwrap();
        assert_eq!(capped.dims(), vec![3, 4]);
    }

    #[test]
    fn coincident_points_are_rejected() {
        let factors = irrep_factors(&[2], &pts(&[1, 1]));
        assert!(matches!(
            build_filtration(&factors),
            Err(FusionError::CoincidentPoints)
        ));
    }

    #[test]
    fn non_cyclic_factor_is_rejected() {
        let mut factor = CyclicModuleFactor::highest_weight_sum(1, rat(0));
        factor.cyclic_vector = zero_vec(factor.dim);
        factor.cyclic_vector[0] = rat(1);
        assert!(matches!(
            build_filtration(&[factor]),
            Err(FusionError::NonCyclicFactor { index: 0 })
        ));
    }

    #[test]
    fn empty_factor_list_is_the_trivial_module() {
        let f = build_filtration(&[]).unwrap();
        assert_eq!(f.dims(), vec![1]);
        let c = fusion_character(&[]).unwrap();
        assert_eq!(c.dimension_at(0, 0), 1);
        assert_eq!(c.total_dimension(), 1);
    }

    // --- fusion_character ---

    #[test]
    fn fusion_character_of_two_fundamentals() {
        let factors = irrep_factors(&[2], &pts(&[0, 1]));
        let c = fusion_character(&factors).unwrap();
        // gr = pi_2 + q pi_0
        assert_eq!(c.dimension_at(0, -2), 1);
        assert_eq!(c.dimension_at(0, 0), 1);
        assert_eq!(c.dimension_at(0, 2), 1);
        assert_eq!(c.dimension_at(1, 0), 1);
        assert_eq!(c.total_dimension(), 4);
        assert_eq!(c.weight_series(0), QPoly::from_ints(&[1, 1]));
        assert_eq!(c.weight_series(0), supernomial(0, &[2]));
    }

    #[test]
    fn single_irrep_character_sits_at_degree_zero() {
        let factors = vec![CyclicModuleFactor::irrep(2, rat(3))];
        let c = fusion_character(&factors).unwrap();
        for (d, _, _) in c.entries() {
            assert_eq!(d, 0);
        }
        assert_eq!(c.total_dimension(), 3);
    }

    #[test]
    fn weight_slices_match_supernomials() {
        for m in [vec![3], vec![1, 1], vec![0, 2]] {
            let n: usize = m.iter().sum();
            let points = point_set(n, None).unwrap();
            let factors = irrep_factors(&m, &points);
            let c = fusion_character(&factors).unwrap();
            let size = kostka::weighted_size(&m) as i64;
            for w in (-size..=size).filter(|w| (w - size) % 2 == 0) {
                assert_eq!(
                    c.weight_series(w),
                    supernomial(w.unsigned_abs() as usize, &m),
                    "m={m:?}, w={w}"
                );
            }
        }
    }

    // --- coinvariant characters ---

    #[test]
    fn filtered_coinvariant_examples() {
        let factors = irrep_factors(&[2], &pts(&[0, 1]));
        assert_eq!(
            filtered_coinvariant_character(&factors, 1, 0).unwrap(),
            QPoly::q_power(1)
        );
        assert_eq!(
            filtered_coinvariant_character(&factors, 1, 1).unwrap(),
            QPoly::zero()
        );
        assert_eq!(
            filtered_coinvariant_character(&factors, 2, 2).unwrap(),
            QPoly::one()
        );
    }

    #[test]
    fn graded_coinvariant_examples() {
        let factors2 = irrep_factors(&[2], &pts(&[0, 1]));
        assert_eq!(
            graded_coinvariant_character(&factors2, 1, 0).unwrap(),
            QPoly::q_power(1)
        );
        let factors3 = irrep_factors(&[3], &pts(&[0, 1, -1]));
        assert_eq!(
            graded_coinvariant_character(&factors3, 1, 1).unwrap(),
            QPoly::q_power(2)
        );
        let factors22 = irrep_factors(&[0, 2], &pts(&[0, 1]));
        assert_eq!(
            graded_coinvariant_character(&factors22, 2, 0).unwrap(),
            QPoly::q_power(2)
        );
        assert_eq!(
            graded_coinvariant_character(&factors22, 2, 0).unwrap(),
            restricted_kostka(2, 0, &[0, 2]).unwrap()
        );
    }

    #[test]
    fn weight_above_level_is_rejected() {
        let factors = irrep_factors(&[1], &pts(&[0]));
        assert!(matches!(
            filtered_coinvariant_character(&factors, 1, 2),
            Err(FusionError::WeightAboveLevel { l: 2, k: 1 })
        ));
    }

    // --- coinvariant_dimension ---

    #[test]
    fn coinvariant_dimension_examples() {
        let factors = irrep_factors(&[2], &pts(&[0, 1]));
        assert_eq!(coinvariant_dimension(&factors, 1, 0).unwrap(), 1);

        let sums = vec![
            CyclicModuleFactor::highest_weight_sum(1, rat(0)),
            CyclicModuleFactor::highest_weight_sum(1, rat(1)),
        ];
        // (([0]+[1])^2 : [0])_1 = 2
        assert_eq!(coinvariant_dimension(&sums, 1, 0).unwrap(), 2);

        let matrix = vec![CyclicModuleFactor::matrix_sum(1, rat_frac(1, 2))];
        // ((1[0] + 2[1]) : [0])_1 = 1
        assert_eq!(coinvariant_dimension(&matrix, 1, 0).unwrap(), 1);
        // ((1[0] + 2[1]) : [1])_1 = 2
        assert_eq!(coinvariant_dimension(&matrix, 1, 1).unwrap(), 2);
    }

    // --- z independence ---

    #[test]
    fn z_independence_examples() {
        let sets = vec![pts(&[0, 1]), pts(&[0, -1]), pts(&[2, 5])];
        assert!(z_independence_test(&[2], 1, 0, &sets).unwrap());

        let sets3 = vec![pts(&[0, 1, 2]), pts(&[5, -3, 7]), pts(&[-1, 4, 9])];
        assert!(z_independence_test(&[3], 1, 1, &sets3).unwrap());

        let single = vec![pts(&[5])];
        assert!(z_independence_test(&[1], 1, 1, &single).unwrap());

        assert!(matches!(
            z_independence_test(&[2], 1, 0, &[pts(&[0])]),
            Err(FusionError::PointCountMismatch {
                expected: 2,
                got: 1
            })
        ));
    }
}
