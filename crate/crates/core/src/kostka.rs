//! Level-restricted Kostka polynomials and q-supernomials for sl2.
//!
//! The data of a computation is a level `k >= 1`, a weight `0 <= l <= k`
//! and a multiplicity vector `m = (m_1, ..., m_k)` counting how many
//! factors of highest weight `i` enter the product. Derived quantities:
//!
//! * `|m| = sum i * m_i`,
//! * `2 ||m|| = sum min(i,j) m_i m_j - |m|` (the right side is always even),
//! * `A_{ab} = min(a,b)` and `v_a = max(a - k + l, 0)`, indices starting at 1.
//!
//! The restricted polynomial is the fermionic sum over quasi-particle
//! configurations `s` with `2|s| = |m| - l`:
//!
//! ```text
//! K^(k)_{l,m}(q) = sum_s q^{sAs + vs} * qbin(A(m - 2s) - v + s, s)
//! ```
//!
//! and the alternating-sum form replaces level restriction by a signed sum
//! of unrestricted polynomials over the affine Weyl orbit of `l`.

use crate::qseries::{vector_qbinom, QPoly};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KostkaError {
    #[error("level must be at least 1")]
    InvalidLevel,
    #[error("weight {l} out of range 0..={k}")]
    WeightOutOfRange { l: usize, k: usize },
    #[error("multiplicity vector has length {got}, expected {expected}")]
    WrongMultiplicityLength { expected: usize, got: usize },
}

/// `|m| = sum i * m_i` with 1-based part sizes.
pub fn weighted_size(m: &[usize]) -> usize {
    m.iter().enumerate().map(|(i, &mi)| (i + 1) * mi).sum()
}

/// `||m||`, defined by `2||m|| = sum min(i,j) m_i m_j - |m|`.
pub fn norm(m: &[usize]) -> usize {
    let mut twice: i64 = 0;
    for (i, &mi) in m.iter().enumerate() {
        for (j, &mj) in m.iter().enumerate() {
            twice += ((i + 1).min(j + 1) * mi * mj) as i64;
        }
    }
    twice -= weighted_size(m) as i64;
    assert!(
        twice >= 0 && twice % 2 == 0,
        "2||m|| must be even, got {twice}"
    );
    (twice / 2) as usize
}

/// The linear-term vector `v_a = max(a - k + l, 0)`, 1-based.
pub fn linear_term(k: usize, l: usize) -> Vec<i64> {
    (1..=k)
        .map(|a| (a as i64 + l as i64 - k as i64).max(0))
        .collect()
}

/// The constant data of the fermionic sum: `A_{ab} = min(a, b)` and
/// `v_a = max(a - k + l, 0)`, both 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermionicConstants {
    pub a: Vec<Vec<i64>>,
    pub v: Vec<i64>,
}

impl FermionicConstants {
    pub fn new(k: usize, l: usize) -> Self {
        let a = (1..=k)
            .map(|row| (1..=k).map(|col| row.min(col) as i64).collect())
            .collect();
        FermionicConstants {
            a,
            v: linear_term(k, l),
        }
    }

    /// Matrix-vector product `A x`.
    pub fn apply_a(&self, x: &[i64]) -> Vec<i64> {
        self.a
            .iter()
            .map(|row| row.iter().zip(x).map(|(c, xi)| c * xi).sum())
            .collect()
    }

    /// Quadratic form `x A x`.
    pub fn quadratic(&self, x: &[i64]) -> i64 {
        self.apply_a(x).iter().zip(x).map(|(ax, xi)| ax * xi).sum()
    }
}

/// Validated input `(k, l, m)` with its derived invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermionicInput {
    pub k: usize,
    pub l: usize,
    pub m: Vec<usize>,
    pub size: usize,
    pub norm: usize,
}

impl FermionicInput {
    pub fn new(k: usize, l: usize, m: &[usize]) -> Result<Self, KostkaError> {
        if k == 0 {
            return Err(KostkaError::InvalidLevel);
        }
        if l > k {
            return Err(KostkaError::WeightOutOfRange { l, k });
        }
        if m.len() != k {
            return Err(KostkaError::WrongMultiplicityLength {
                expected: k,
                got: m.len(),
            });
        }
        Ok(FermionicInput {
            k,
            l,
            m: m.to_vec(),
            size: weighted_size(m),
            norm: norm(m),
        })
    }
}

/// All `s` in `Z_{>=0}^k` with `sum i * s_i = target`.
fn configurations(k: usize, target: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == k {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let part = i + 1;
        for si in 0..=(left / part) {
            cur.push(si);
            go(k, i + 1, left - part * si, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, 0, target, &mut Vec::new(), &mut out);
    out
}

/// Level-restricted Kostka polynomial `K^(k)_{l,m}(q)` by the fermionic
/// formula. Returns the zero polynomial when `|m| - l` is odd or negative.
pub fn restricted_kostka(k: usize, l: usize, m: &[usize]) -> Result<QPoly, KostkaError> {
    let input = FermionicInput::new(k, l, m)?;
    let size = input.size as i64;
    let diff = size - l as i64;
    if diff < 0 || diff % 2 != 0 {
        return Ok(QPoly::zero());
    }
    let target = (diff / 2) as usize;
    let constants = FermionicConstants::new(k, l);
    let mut total = QPoly::zero();
    for s in configurations(k, target) {
        let s: Vec<i64> = s.iter().map(|&si| si as i64).collect();
        let vs: i64 = constants.v.iter().zip(&s).map(|(va, sa)| va * sa).sum();
        let exponent = constants.quadratic(&s) + vs;
        // top vector A(m - 2s) - v + s
        let shifted: Vec<i64> = m
            .iter()
            .zip(&s)
            .map(|(&mb, sb)| mb as i64 - 2 * sb)
            .collect();
        let top: Vec<i64> = constants
            .apply_a(&shifted)
            .into_iter()
            .zip(constants.v.iter().zip(&s))
            .map(|(am, (va, sa))| am - va + sa)
            .collect();
        let term = vector_qbinom(&top, &s).expect("vectors have equal length");
        if !term.is_zero() {
            debug_assert!(exponent >= 0);
            total = &total + &term.shift_by_q_power(exponent as usize);
        }
    }
    Ok(total)
}

/// Stabilization level for the unrestricted polynomial: any level at least
/// this large gives the same value.
pub fn stable_level(l: usize, m: &[usize]) -> usize {
    l.max(weighted_size(m)).max(m.len()).max(1)
}

/// Unrestricted (`k -> infinity`) Kostka polynomial `K_{l,m}(q)`, computed
/// at the stabilization level with `m` zero-padded on the right.
pub fn unrestricted_kostka(l: usize, m: &[usize]) -> QPoly {
    unrestricted_kostka_at_level(stable_level(l, m), l, m)
}

/// Unrestricted polynomial evaluated at an explicit level `big_k` (used to
/// test stabilization). `big_k` must be at least `stable_level(l, m)`.
pub fn unrestricted_kostka_at_level(big_k: usize, l: usize, m: &[usize]) -> QPoly {
    assert!(big_k >= stable_level(l, m));
    let mut padded = m.to_vec();
    padded.resize(big_k, 0);
    restricted_kostka(big_k, l, &padded).expect("padded input is valid by construction")
}

/// Alternating sum over the affine Weyl orbit:
///
/// ```text
/// sum_{i>=0} q^{(k+2)i^2+(l+1)i} K_{2(k+2)i+l, m}
///   - sum_{i>0} q^{(k+2)i^2-(l+1)i} K_{2(k+2)i-l-2, m}
/// ```
///
/// truncated once the weight argument exceeds `|m|`.
pub fn alternating_sum(k: usize, l: usize, m: &[usize]) -> Result<QPoly, KostkaError> {
    let input = FermionicInput::new(k, l, m)?;
    let size = input.size;
    let period = 2 * (k + 2);
    let mut total = QPoly::zero();
    for i in 0usize.. {
        let plus_weight = period * i + l;
        let minus_weight = (period * i).checked_sub(l + 2);
        let plus_done = plus_weight > size;
        let minus_done = i == 0 || minus_weight.is_none_or(|w| w > size);
        if plus_done && minus_done && i > 0 {
            break;
        }
        if !plus_done {
            let shift = (k + 2) * i * i + (l + 1) * i;
            total = &total + &unrestricted_kostka(plus_weight, m).shift_by_q_power(shift);
        }
        if i > 0 {
            if let Some(w) = minus_weight {
                if w <= size {
                    let shift = (k + 2) * i * i - (l + 1) * i;
                    total = &total - &unrestricted_kostka(w, m).shift_by_q_power(shift);
                }
            }
        }
        if plus_done && minus_done {
            break;
        }
    }
    Ok(total)
}

/// q-supernomial `S_{l,m}(q)`: the q-multiplicity of the weight `l` in the
/// graded product, i.e. the sum of `K_{l',m}(q)` over `l' >= l` of the same
/// parity.
pub fn supernomial(l: usize, m: &[usize]) -> QPoly {
    let size = weighted_size(m);
    let mut total = QPoly::zero();
    let mut lp = l;
    while lp <= size {
        total = &total + &unrestricted_kostka(lp, m);
        lp += 2;
    }
    total
}

/// True iff the fermionic and alternating-sum forms agree exactly.
pub fn mainconj_check(k: usize, l: usize, m: &[usize]) -> Result<bool, KostkaError> {
    Ok(restricted_kostka(k, l, m)? == alternating_sum(k, l, m)?)
}

/// All multiplicity vectors of length `len` with `|m| <= max_size`, in
/// lexicographic order. Shared by the verification sweeps.
pub fn multiplicity_vectors(len: usize, max_size: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == len {
            out.push(cur.clone());
            return;
        }
        let part = i + 1;
        for mi in 0..=(left / part) {
            cur.push(mi);
            go(len, i + 1, left - part * mi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, 0, max_size, &mut Vec::new(), &mut out);
    out
}
