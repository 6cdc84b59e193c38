//! The sl2 Verlinde algebra at level `k`.
//!
//! Basis classes `[0], ..., [k]`. Products are computed by the
//! Clebsch-Gordan decomposition followed by affine Weyl folding on the
//! shifted weight `l + 1` modulo `2(k+2)`: shifted values on a wall
//! (`0` or `k+2` mod `2(k+2)`) are annihilated, everything else reflects
//! into the fundamental window `(0, k+2)` with one sign flip per
//! reflection.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerlindeError {
    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: usize, right: usize },
    #[error("weight {weight} out of range 0..={level}")]
    WeightOutOfRange { weight: usize, level: usize },
    #[error("expected {expected} coefficients for level {level}, got {got}")]
    CoefficientLength {
        level: usize,
        expected: usize,
        got: usize,
    },
}

/// An element of the level-`k` Verlinde algebra in the basis `[0..=k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerlindeVector {
    level: usize,
    coeffs: Vec<BigInt>,
}

impl VerlindeVector {
    pub fn zero(level: usize) -> Self {
        VerlindeVector {
            level,
            coeffs: vec![BigInt::zero(); level + 1],
        }
    }

    /// The basis class `[l]`.
    pub fn basis_class(level: usize, l: usize) -> Result<Self, VerlindeError> {
        if l > level {
            return Err(VerlindeError::WeightOutOfRange { weight: l, level });
        }
        let mut v = VerlindeVector::zero(level);
        v.coeffs[l] = BigInt::one();
        Ok(v)
    }

    /// The identity element `[0]`.
    pub fn one(level: usize) -> Self {
        VerlindeVector::basis_class(level, 0).expect("[0] exists at every level")
    }

    /// Builds a vector from explicit coefficients `c_0, ..., c_k`.
    pub fn from_coeffs(level: usize, coeffs: Vec<BigInt>) -> Result<Self, VerlindeError> {
        if coeffs.len() != level + 1 {
            return Err(VerlindeError::CoefficientLength {
                level,
                expected: level + 1,
                got: coeffs.len(),
            });
        }
        Ok(VerlindeVector { level, coeffs })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, l: usize) -> BigInt {
        self.coeffs.get(l).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_assign_scaled(&mut self, l: usize, c: &BigInt, sign: i8) {
        if sign >= 0 {
            self.coeffs[l] += c;
        } else {
            self.coeffs[l] -= c;
        }
    }
}

/// Tensor decomposition of sl2 irreducibles: `{|l1-l2|, |l1-l2|+2, ..., l1+l2}`.
pub fn clebsch_gordan(l1: usize, l2: usize) -> Vec<usize> {
    let lo = l1.abs_diff(l2);
    let hi = l1 + l2;
    (lo..=hi).step_by(2).collect()
}

/// Folds a weight into the level-`k` window through the shifted affine Weyl
/// action. Returns the window weight and a sign, or `None` when the shifted
/// weight lands on a wall.
pub fn fold_weight(level: usize, l: usize) -> Option<(usize, i8)> {
    let period = 2 * (level + 2);
    let r = (l + 1) % period;
    if r == 0 || r == level + 2 {
        None
    } else if r < level + 2 {
        Some((r - 1, 1))
    } else {
        Some((period - r - 1, -1))
    }
}

/// Product in the level-`k` Verlinde algebra.
pub fn verlinde_product(
    v1: &VerlindeVector,
    v2: &VerlindeVector,
) -> Result<VerlindeVector, VerlindeError> {
    if v1.level != v2.level {
        return Err(VerlindeError::LevelMismatch {
            left: v1.level,
            right: v2.level,
        });
    }
    let level = v1.level;
    let mut out = VerlindeVector::zero(level);
    for (l1, c1) in v1.coeffs.iter().enumerate() {
        if c1.is_zero() {
            continue;
        }
        for (l2, c2) in v2.coeffs.iter().enumerate() {
            if c2.is_zero() {
                continue;
            }
            let c = c1 * c2;
            for l in clebsch_gordan(l1, l2) {
                if let Some((folded, sign)) = fold_weight(level, l) {
                    out.add_assign_scaled(folded, &c, sign);
                }
            }
        }
    }
    Ok(out)
}

/// Product `prod_{w in word} [w]` as a Verlinde vector, by a left fold of
/// binary products.
pub fn verlinde_word_product(
    level: usize,
    word: &[usize],
) -> Result<VerlindeVector, VerlindeError> {
    let mut acc = VerlindeVector::one(level);
    for &w in word {
        let factor = VerlindeVector::basis_class(level, w)?;
        acc = verlinde_product(&acc, &factor)?;
    }
    Ok(acc)
}

/// Coefficient of `[l]` in `prod_{w in word} [w]` at level `k`. Weights and
/// `l` must lie in `0..=k`.
pub fn fusion_coefficient(level: usize, word: &[usize], l: usize) -> Result<BigInt, VerlindeError> {
    if l > level {
        return Err(VerlindeError::WeightOutOfRange { weight: l, level });
    }
    Ok(verlinde_word_product(level, word)?.coeff(l))
}

/// The multiplicity word attached to `m = (m_1, ..., m_k)`: weight `i`
/// repeated `m_i` times.
pub fn word_of_multiplicities(m: &[usize]) -> Vec<usize> {
    let mut word = Vec::new();
    for (i, &mult) in m.iter().enumerate() {
        word.extend(std::iter::repeat_n(i + 1, mult));
    }
    word
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn product_of_classes(k: usize, l1: usize, l2: usize) -> VerlindeVector {
        let a = VerlindeVector::basis_class(k, l1).unwrap();
        let b = VerlindeVector::basis_class(k, l2).unwrap();
        verlinde_product(&a, &b).unwrap()
    }

    // --- clebsch_gordan examples ---

    #[test]
    fn clebsch_gordan_examples() {
        assert_eq!(clebsch_gordan(1, 1), vec![0, 2]);
        assert_eq!(clebsch_gordan(0, 5), vec![5]);
        assert_eq!(clebsch_gordan(2, 3), vec![1, 3, 5]);
    }

    // --- verlinde_product examples ---

    #[test]
    fn level_one_square_of_fundamental() {
        let p = product_of_classes(1, 1, 1);
        assert_eq!(p, VerlindeVector::basis_class(1, 0).unwrap());
    }

    #[test]
    fn level_two_square_of_fundamental() {
        let p = product_of_classes(2, 1, 1);
        let expected = {
            let mut v = VerlindeVector::zero(2);
            v.coeffs[0] = BigInt::one();
            v.coeffs[2] = BigInt::one();
            v
        };
        assert_eq!(p, expected);
    }

    #[test]
    fn identity_class_is_neutral() {
        for k in 0..=4 {
            for l in 0..=k {
                let p = product_of_classes(k, 0, l);
                assert_eq!(p, VerlindeVector::basis_class(k, l).unwrap());
            }
        }
    }

    #[test]
    fn level_mismatch_is_rejected() {
        let a = VerlindeVector::one(1);
        let b = VerlindeVector::one(2);
        assert_eq!(
            verlinde_product(&a, &b),
            Err(VerlindeError::LevelMismatch { left: 1, right: 2 })
        );
    }

    // --- fusion_coefficient examples ---

    #[test]
    fn fusion_coefficient_examples() {
        assert_eq!(fusion_coefficient(1, &[1, 1], 0).unwrap(), BigInt::one());
        assert_eq!(fusion_coefficient(1, &[1, 1, 1], 1).unwrap(), BigInt::one());
        for k in 1..=4 {
            let word = vec![0; 3];
            assert_eq!(fusion_coefficient(k, &word, 0).unwrap(), BigInt::one());
        }
        assert_eq!(
            fusion_coefficient(1, &[2], 0),
            Err(VerlindeError::WeightOutOfRange {
                weight: 2,
                level: 1
            })
        );
    }

    // --- closed-form window rule ---

    /// Structure constant of the sl2 fusion ring in closed form:
    /// 1 iff |l1-l2| <= l <= min(l1+l2, 2k-l1-l2) and l = l1+l2 mod 2.
    fn window_rule(k: usize, l1: usize, l2: usize, l: usize) -> BigInt {
        let lo = l1.abs_diff(l2);
        let hi = (l1 + l2).min(2 * k - l1 - l2);
        if l >= lo && l <= hi && (l1 + l2) % 2 == l % 2 {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    }

    #[test]
    fn folding_matches_window_rule_up_to_level_six() {
        for k in 0..=6 {
            for l1 in 0..=k {
                for l2 in 0..=k {
                    let p = product_of_classes(k, l1, l2);
                    for l in 0..=k {
                        assert_eq!(
                            p.coeff(l),
                            window_rule(k, l1, l2, l),
                            "k={k} l1={l1} l2={l2} l={l}"
                        );
                    }
                }
            }
        }
    }

    // --- algebra laws on random words ---

    proptest! {
        #[test]
        fn product_is_commutative_and_associative(
            k in 1usize..=4,
            seed in proptest::collection::vec(0usize..=4, 3),
        ) {
            let ws: Vec<usize> = seed.into_iter().map(|w| w.min(k)).collect();
            let a = VerlindeVector::basis_class(k, ws[0]).unwrap();
            let b = VerlindeVector::basis_class(k, ws[1]).unwrap();
            let c = VerlindeVector::basis_class(k, ws[2]).unwrap();
            let ab = verlinde_product(&a, &b).unwrap();
            let ba = verlinde_product(&b, &a).unwrap();
            prop_assert_eq!(&ab, &ba);
            let ab_c = verlinde_product(&ab, &c).unwrap();
            let bc = verlinde_product(&b, &c).unwrap();
            let a_bc = verlinde_product(&a, &bc).unwrap();
            prop_assert_eq!(ab_c, a_bc);
        }

        #[test]
        fn coefficients_of_basis_products_are_nonnegative(
            k in 1usize..=4,
            seed in proptest::collection::vec(0usize..=4, 0..5),
        ) {
            let word: Vec<usize> = seed.into_iter().map(|w| w.min(k)).collect();
            let p = verlinde_word_product(k, &word).unwrap();
            for c in p.coeffs() {
                prop_assert!(c >= &BigInt::zero());
            }
        }
    }
}
