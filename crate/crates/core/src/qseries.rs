//! Exact polynomial arithmetic in the variable `q`.
//!
//! [`QPoly`] is a polynomial with arbitrary-precision integer coefficients
//! and non-negative exponents. It is the carrier for every character and
//! Kostka polynomial in this crate. The module also provides the Gaussian
//! binomial coefficient [`qbinom`] and its componentwise vector form
//! [`vector_qbinom`].

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Degrees up to this bound are stored densely; anything larger switches to
/// a sparse exponent map.
const DENSE_DEGREE_MAX: usize = 512;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QSeriesError {
    #[error("reverse_with_degree: polynomial degree {degree} exceeds target degree {target}")]
    DegreeExceedsTarget { degree: usize, target: usize },
    #[error("vector q-binomial: top has {top} entries but bottom has {bottom}")]
    VectorLengthMismatch { top: usize, bottom: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Coeffs {
    /// Ascending coefficients, no trailing zero. The zero polynomial is an
    /// empty vector.
    Dense(Vec<BigInt>),
    /// Exponent -> coefficient, no zero values stored.
    Sparse(BTreeMap<usize, BigInt>),
}

/// A polynomial in `q` with exact integer coefficients.
///
/// Kept in canonical form: no stored zero coefficients, and the zero
/// polynomial has empty support (its degree is `None`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Coeffs,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly {
            coeffs: Coeffs::Dense(Vec::new()),
        }
    }

    pub fn one() -> Self {
        QPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        QPoly::monomial(c, 0)
    }

    /// The monomial `q^n`.
    pub fn q_power(n: usize) -> Self {
        QPoly::monomial(BigInt::one(), n)
    }

    /// The monomial `c * q^n`.
    pub fn monomial(c: BigInt, n: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut map = BTreeMap::new();
        map.insert(n, c);
        QPoly::from_map(map)
    }

    /// Builds a polynomial from ascending coefficients `c0, c1, ...`.
    pub fn from_coeffs<I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = BigInt>,
    {
        let map: BTreeMap<usize, BigInt> = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        QPoly::from_map(map)
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)))
    }

    fn from_map(map: BTreeMap<usize, BigInt>) -> Self {
        debug_assert!(map.values().all(|c| !c.is_zero()));
        let degree = map.keys().next_back().copied();
        let coeffs = match degree {
            Some(d) if d > DENSE_DEGREE_MAX => Coeffs::Sparse(map),
            Some(d) => {
                let mut v = vec![BigInt::zero(); d + 1];
                for (e, c) in map {
                    v[e] = c;
                }
                Coeffs::Dense(v)
            }
            None => Coeffs::Dense(Vec::new()),
        };
        QPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        match &self.coeffs {
            Coeffs::Dense(v) => v.is_empty(),
            Coeffs::Sparse(m) => m.is_empty(),
        }
    }

    /// Maximal stored exponent; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        match &self.coeffs {
            Coeffs::Dense(v) => v.len().checked_sub(1),
            Coeffs::Sparse(m) => m.keys().next_back().copied(),
        }
    }

    /// Coefficient of `q^n` (zero when absent).
    pub fn coeff(&self, n: usize) -> BigInt {
        match &self.coeffs {
            Coeffs::Dense(v) => v.get(n).cloned().unwrap_or_else(BigInt::zero),
            Coeffs::Sparse(m) => m.get(&n).cloned().unwrap_or_else(BigInt::zero),
        }
    }

    /// Non-zero terms in ascending exponent order.
    pub fn terms(&self) -> Vec<(usize, BigInt)> {
        match &self.coeffs {
            Coeffs::Dense(v) => v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e, c.clone()))
                .collect(),
            Coeffs::Sparse(m) => m.iter().map(|(&e, c)| (e, c.clone())).collect(),
        }
    }

    /// Dense ascending coefficient list `c0, c1, ..., c_deg` (empty for zero).
    pub fn dense_coeffs(&self) -> Vec<BigInt> {
        match &self.coeffs {
            Coeffs::Dense(v) => v.clone(),
            Coeffs::Sparse(m) => {
                let deg = *m.keys().next_back().expect("sparse map is never empty");
                let mut v = vec![BigInt::zero(); deg + 1];
                for (&e, c) in m {
                    v[e] = c.clone();
                }
                v
            }
        }
    }

    pub fn scalar_mul(&self, c: &BigInt) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly::from_map(self.terms().into_iter().map(|(e, a)| (e, a * c)).collect())
    }

    /// Multiplies by `q^n`.
    pub fn shift_by_q_power(&self, n: usize) -> QPoly {
        QPoly::from_map(self.terms().into_iter().map(|(e, a)| (e + n, a)).collect())
    }

    /// Sum of coefficients, i.e. the value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms().into_iter().map(|(_, c)| c).sum()
    }

    /// Returns `q^target * p(q^{-1})`. Requires `deg p <= target`.
    pub fn reverse_with_degree(&self, target: usize) -> Result<QPoly, QSeriesError> {
        if let Some(degree) = self.degree() {
            if degree > target {
                return Err(QSeriesError::DegreeExceedsTarget { degree, target });
            }
        }
        Ok(QPoly::from_map(
            self.terms()
                .into_iter()
                .map(|(e, c)| (target - e, c))
                .collect(),
        ))
    }

    /// True when every coefficient of `self` is at most the matching
    /// coefficient of `other`.
    pub fn coefficientwise_le(&self, other: &QPoly) -> bool {
        let diff = other - self;
        diff.terms().iter().all(|(_, c)| c >= &BigInt::zero())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut map: BTreeMap<usize, BigInt> = self.terms().into_iter().collect();
        for (e, c) in rhs.terms() {
            let entry = map.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                map.remove(&e);
            }
        }
        QPoly::from_map(map)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::from_map(self.terms().into_iter().map(|(e, c)| (e, -c)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut map: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                let entry = map.entry(e1 + e2).or_insert_with(BigInt::zero);
                *entry += &c1 * &c2;
            }
        }
        map.retain(|_, c| !c.is_zero());
        QPoly::from_map(map)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (e, c)) in terms.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_part = if abs.is_one() && *e != 0 {
                String::new()
            } else {
                abs.to_string()
            };
            let var_part = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            out.push_str(&coeff_part);
            out.push_str(&var_part);
        }
        write!(f, "{out}")
    }
}

// JSON form: {"coeffs": ["c0", "c1", ...]} dense ascending, with coefficients
// as decimal strings so arbitrary precision survives any JSON parser.
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            coeffs: Vec<String>,
        }
        Repr {
            coeffs: self.dense_coeffs().iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            coeffs: Vec<serde_json::Value>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(repr.coeffs.len());
        for v in repr.coeffs {
            let c = match v {
                serde_json::Value::String(s) => s
                    .parse::<BigInt>()
                    .map_err(|e| D::Error::custom(format!("bad coefficient {s:?}: {e}")))?,
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| D::Error::custom(format!("bad coefficient {n}")))?,
                other => return Err(D::Error::custom(format!("bad coefficient {other}"))),
            };
            coeffs.push(c);
        }
        Ok(QPoly::from_coeffs(coeffs))
    }
}

/// Gaussian binomial coefficient `[m choose n]_q`.
///
/// Zero whenever `n < 0`, `n > m` or `m < 0`; all coefficients of a
/// non-zero result are non-negative. Computed by the Pascal recurrence
/// `[m n] = [m-1 n-1] + q^n [m-1 n]` so every intermediate stays in the
/// polynomial ring.
pub fn qbinom(m: i64, n: i64) -> QPoly {
    if n < 0 || n > m {
        return QPoly::zero();
    }
    let m = m as usize;
    let n = (n as usize).min(m - n as usize); // symmetry keeps the row short
                                              // row[j] holds [i choose j]_q while i sweeps 0..=m
    let mut row: Vec<QPoly> = vec![QPoly::one()];
    for _i in 1..=m {
        let width = row.len().min(n);
        let mut next = Vec::with_capacity(width + 1);
        next.push(QPoly::one());
        for j in 1..=width {
            let left = &row[j - 1];
            let up = if j < row.len() {
                row[j].shift_by_q_power(j)
            } else {
                QPoly::zero()
            };
            next.push(left + &up);
        }
        row = next;
    }
    row.swap_remove(n.min(row.len() - 1))
}

/// Componentwise product of Gaussian binomials `prod_i [m_i choose n_i]_q`.
pub fn vector_qbinom(top: &[i64], bottom: &[i64]) -> Result<QPoly, QSeriesError> {
    if top.len() != bottom.len() {
        return Err(QSeriesError::VectorLengthMismatch {
            top: top.len(),
            bottom: bottom.len(),
        });
    }
    let mut acc = QPoly::one();
    for (&m, &n) in top.iter().zip(bottom) {
        if acc.is_zero() {
            break;
        }
        acc = &acc * &qbinom(m, n);
    }
    Ok(acc)
}
