//! Functional realization of the dual coinvariant space.
//!
//! For admissible `(k, l, m)` put `s = (|m| - l)/2` and
//! `M_a = sum_i min(a, i) m_i`. The dual space is the space of symmetric
//! polynomials `f(x_1, ..., x_s)` with
//!
//! 1. `deg_x f(x, ..., x, x_{a+1}, ..., x_s) <= M_a - a` for `a = 1..s`,
//! 2. `f(0, x_2, ..., x_s) = 0`,
//! 3. writing `f = (prod x_i) g`: if `s >= k - l + 1` then
//!    `g(0, ..., 0, x_{k-l+2}, ..., x_s) = 0`.
//!
//! Its character by total degree equals the level-restricted Kostka
//! polynomial. The solver works in the monomial-symmetric basis over
//! partitions with exactly `s` parts in `[1, M_1 - 1]` (conditions 2 and
//! the `a = 1` bound), extracts the remaining conditions as exact linear
//! constraints by symbolic diagonal substitution, and reads off null space
//! dimensions degree by degree.

use crate::kostka::{weighted_size, FermionicInput, KostkaError};
use crate::linalg::{nullspace, Rat};
use crate::qseries::QPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

/// Default bound on the number of diagonal variables (cost guard).
pub const DEFAULT_VARIABLE_CAP: usize = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GordonError {
    #[error(transparent)]
    Input(#[from] KostkaError),
    #[error("{s} variables exceed the configured cap {cap}")]
    VariableCapExceeded { s: usize, cap: usize },
}

/// Validated problem data: variable count and diagonal degree bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSpaceProblem {
    pub input: FermionicInput,
    /// Number of variables `s = (|m| - l)/2`; `None` when the parity is
    /// inadmissible (the solution space is zero).
    pub variables: Option<usize>,
    /// `M_a` for `a = 1..=s`.
    pub degree_caps: Vec<usize>,
}

impl DualSpaceProblem {
    pub fn new(k: usize, l: usize, m: &[usize]) -> Result<Self, GordonError> {
        let input = FermionicInput::new(k, l, m)?;
        let size = input.size as i64;
        let diff = size - l as i64;
        let variables = if diff < 0 || diff % 2 != 0 {
            None
        } else {
            Some((diff / 2) as usize)
        };
        let s = variables.unwrap_or(0);
        let degree_caps = (1..=s)
            .map(|a| m.iter().enumerate().map(|(i, &mi)| a.min(i + 1) * mi).sum())
            .collect();
        Ok(DualSpaceProblem {
            input,
            variables,
            degree_caps,
        })
    }
}

/// One graded component of the solution space.
#[derive(Clone, Debug)]
pub struct DegreeComponent {
    pub degree: usize,
    /// Exponent partitions indexing the monomial-symmetric basis.
    pub partitions: Vec<Vec<usize>>,
    /// Null space vectors: coefficient lists over `partitions`.
    pub solutions: Vec<Vec<Rat>>,
}

/// The solved dual space, grouped by total degree.
#[derive(Clone, Debug)]
pub struct GordonSolution {
    pub problem: DualSpaceProblem,
    pub components: Vec<DegreeComponent>,
}

impl GordonSolution {
    /// Graded dimension by total degree.
    pub fn character(&self) -> QPoly {
        let mut poly = QPoly::zero();
        for comp in &self.components {
            poly = &poly + &QPoly::monomial(BigInt::from(comp.solutions.len()), comp.degree);
        }
        poly
    }
}

/// Partitions with exactly `parts` parts, each in `[1, max_part]`,
/// descending part order inside a partition.
fn partitions_exact(parts: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn go(parts: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == parts {
            out.push(cur.clone());
            return;
        }
        let hi = cur.last().copied().unwrap_or(max_part);
        for p in (1..=hi).rev() {
            cur.push(p);
            go(parts, max_part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if max_part >= 1 || parts == 0 {
        go(parts, max_part, &mut Vec::new(), &mut out);
    }
    out
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Distinct splits of the exponent multiset `nu` into a chosen sub-multiset
/// of size `a` and the rest: returns `(sum of chosen, rest sorted
/// descending, number of distinct arrangements of the chosen part)`.
fn diagonal_splits(nu: &[usize], a: usize) -> Vec<(usize, Vec<usize>, BigInt)> {
    // distinct values with multiplicities, descending
    let mut values: Vec<(usize, usize)> = Vec::new();
    for &p in nu {
        match values.last_mut() {
            Some((v, c)) if *v == p => *c += 1,
            _ => values.push((p, 1)),
        }
    }
    fn go(
        values: &[(usize, usize)],
        i: usize,
        left: usize,
        taken: &mut Vec<usize>,
        out: &mut Vec<(usize, Vec<usize>, BigInt)>,
    ) {
        if i == values.len() {
            if left != 0 {
                return;
            }
            let total: usize = taken.iter().sum();
            let mut count = factorial(total);
            let mut j = 0;
            let mut rest = Vec::new();
            for (&(v, full), &used) in values.iter().zip(taken.iter()) {
                count /= factorial(used);
                j += v * used;
                rest.extend(std::iter::repeat_n(v, full - used));
            }
            out.push((j, rest, count));
            return;
        }
        let (_, mult) = values[i];
        for c in 0..=mult.min(left) {
            taken.push(c);
            go(values, i + 1, left - c, taken, out);
            taken.pop();
        }
    }
    let mut out = Vec::new();
    go(&values, 0, a, &mut vec![], &mut out);
    out
}

/// Key of a linear constraint row: which condition produced it and the
/// canonical monomial it pins down.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum ConstraintKey {
    /// Diagonal degree condition: `(a, x-degree, remaining exponents)`.
    Diagonal(usize, usize, Vec<usize>),
    /// Vanishing condition (iii): remaining exponents of `g`.
    Vanishing(Vec<usize>),
}

/// Solves the dual space with an explicit variable cap.
pub fn solve_dual_space_with_cap(
    k: usize,
    l: usize,
    m: &[usize],
    cap: usize,
) -> Result<GordonSolution, GordonError> {
    let problem = DualSpaceProblem::new(k, l, m)?;
    let s = match problem.variables {
        None => {
            return Ok(GordonSolution {
                problem,
                components: Vec::new(),
            })
        }
        Some(s) => s,
    };
    if s > cap {
        return Err(GordonError::VariableCapExceeded { s, cap });
    }
    if s == 0 {
        // no variables: the space is the constants
        return Ok(GordonSolution {
            problem,
            components: vec![DegreeComponent {
                degree: 0,
                partitions: vec![Vec::new()],
                solutions: vec![vec![Rat::one()]],
            }],
        });
    }
    let m1 = problem.degree_caps[0];
    if m1 < 2 {
        // every admissible part needs 1 <= part <= M_1 - 1
        return Ok(GordonSolution {
            problem,
            components: Vec::new(),
        });
    }
    let mut by_degree: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for nu in partitions_exact(s, m1 - 1) {
        by_degree.entry(nu.iter().sum()).or_default().push(nu);
    }
    let vanish_count = k - l + 1; // condition (iii) active when s >= this

    let mut components = Vec::new();
    for (&degree, partitions) in &by_degree {
        let ncols = partitions.len();
        let mut rows: BTreeMap<ConstraintKey, Vec<Rat>> = BTreeMap::new();
        for (col, nu) in partitions.iter().enumerate() {
            for a in 2..=s {
                let cap_a = problem.degree_caps[a - 1] as i64 - a as i64;
                for (j, rest, count) in diagonal_splits(nu, a) {
                    if (j as i64) > cap_a {
                        let key = ConstraintKey::Diagonal(a, j, rest);
                        let row = rows.entry(key).or_insert_with(|| vec![Rat::zero(); ncols]);
                        row[col] += Rat::from_integer(count);
                    }
                }
            }
            if s >= vanish_count {
                let mu: Vec<usize> = nu.iter().map(|&p| p - 1).collect();
                let zeros = mu.iter().filter(|&&p| p == 0).count();
                if zeros >= vanish_count {
                    let rest: Vec<usize> = mu.iter().copied().filter(|&p| p > 0).collect();
                    let mut padded = rest;
                    padded.resize(s - vanish_count, 0); // canonical length
                    let key = ConstraintKey::Vanishing(padded);
                    let row = rows.entry(key).or_insert_with(|| vec![Rat::zero(); ncols]);
                    row[col] += Rat::one();
                }
            }
        }
        let matrix: Vec<Vec<Rat>> = rows.into_values().collect();
        let solutions = nullspace(&matrix, ncols);
        components.push(DegreeComponent {
            degree,
            partitions: partitions.clone(),
            solutions,
        });
    }
    Ok(GordonSolution {
        problem,
        components,
    })
}

pub fn solve_dual_space(k: usize, l: usize, m: &[usize]) -> Result<GordonSolution, GordonError> {
    solve_dual_space_with_cap(k, l, m, DEFAULT_VARIABLE_CAP)
}

/// Graded dimension of the dual space; equal to the level-restricted
/// Kostka polynomial.
pub fn dual_space_character(k: usize, l: usize, m: &[usize]) -> Result<QPoly, GordonError> {
    Ok(solve_dual_space(k, l, m)?.character())
}

/// Checks that every computed basis polynomial vanishes under the `a`-fold
/// diagonal specialization for all `a >= k + 1`. Vacuously true when
/// `s <= k`.
pub fn lemma41_check(solution: &GordonSolution) -> bool {
    let s = match solution.problem.variables {
        Some(s) => s,
        None => return true,
    };
    let k = solution.problem.input.k;
    if s < k + 1 {
        return true;
    }
    for comp in &solution.components {
        for coeffs in &comp.solutions {
            for a in (k + 1)..=s {
                // full expansion of phi_a(f); every monomial must cancel
                let mut sums: BTreeMap<(usize, Vec<usize>), Rat> = BTreeMap::new();
                for (nu, c) in comp.partitions.iter().zip(coeffs) {
                    if c.is_zero() {
                        continue;
                    }
                    for (j, rest, count) in diagonal_splits(nu, a) {
                        *sums.entry((j, rest)).or_insert_with(Rat::zero) +=
                            c * &Rat::from_integer(count);
                    }
                }
                if sums.values().any(|v| !v.is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

impl GordonSolution {
    /// Dual space character with condition (iii) dropped: computed at the
    /// stabilization level, where (iii) is vacuous because
    /// `s = (|m|-l)/2 < |m| - l + 1`.
    pub fn unrestricted_reference(l: usize, m: &[usize]) -> Result<QPoly, GordonError> {
        let big_k = l.max(weighted_size(m)).max(m.len()).max(1);
        let mut padded = m.to_vec();
        padded.resize(big_k, 0);
        dual_space_character(big_k, l, &padded)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostka::{restricted_kostka, unrestricted_kostka};

    // --- problem data ---

    #[test]
    fn degree_caps_are_weakly_increasing() {
        for (k, l, m) in [(2usize, 0usize, vec![2, 1]), (3, 1, vec![1, 2, 1])] {
            let p = DualSpaceProblem::new(k, l, &m).unwrap();
            assert!(p.degree_caps.windows(2).all(|w| w[0] <= w[1]), "{m:?}");
        }
    }

    #[test]
    fn parity_violation_yields_empty_space() {
        let sol = solve_dual_space(1, 1, &[2]).unwrap();
        assert!(sol.character().is_zero());
    }

    #[test]
    fn variable_cap_is_enforced() {
        // s = 5 for l = 0, m = (10)
        assert_eq!(
            solve_dual_space(1, 0, &[10]).map(|s| s.character()),
            Err(GordonError::VariableCapExceeded { s: 5, cap: 4 })
        );
        assert!(solve_dual_space_with_cap(1, 0, &[10], 5).is_ok());
    }

    // --- dual_space_character examples ---

    #[test]
    fn character_examples() {
        assert_eq!(dual_space_character(1, 0, &[2]).unwrap(), QPoly::q_power(1));
        assert_eq!(
            dual_space_character(2, 0, &[0, 2]).unwrap(),
            QPoly::q_power(2)
        );
        // l = |m|: s = 0, the space is the constants
        assert_eq!(dual_space_character(2, 2, &[0, 1]).unwrap(), QPoly::one());
        assert_eq!(
            dual_space_character(3, 3, &[1, 1, 0]).unwrap(),
            QPoly::one()
        );
        // odd |m| - l: no admissible variable count
        assert_eq!(
            dual_space_character(3, 2, &[1, 1, 0]).unwrap(),
            QPoly::zero()
        );
        // a genuinely interacting case: one relation survives at degree 6
        assert_eq!(dual_space_character(1, 1, &[5]).unwrap(), QPoly::q_power(6));
    }

    #[test]
    fn duality_with_fermionic_formula_small() {
        for (k, l, m) in [
            (1usize, 0usize, vec![2]),
            (1, 0, vec![4]),
            (1, 1, vec![3]),
            (1, 1, vec![5]),
            (2, 0, vec![2, 0]),
            (2, 0, vec![0, 2]),
            (2, 1, vec![1, 1]),
            (2, 2, vec![2, 1]),
            (3, 1, vec![1, 0, 1]),
        ] {
            assert_eq!(
                dual_space_character(k, l, &m).unwrap(),
                restricted_kostka(k, l, &m).unwrap(),
                "k={k} l={l} m={m:?}"
            );
        }
    }

    #[test]
    fn dropping_condition_iii_recovers_the_unrestricted_polynomial() {
        for (l, m) in [
            (0usize, vec![4]),
            (1, vec![3]),
            (0, vec![2, 1]),
            (2, vec![0, 2]),
        ] {
            let unrestricted = GordonSolution::unrestricted_reference(l, &m).unwrap();
            assert_eq!(unrestricted, unrestricted_kostka(l, &m), "l={l} m={m:?}");
            // the restricted character is coefficientwise bounded by it
            for k in m.len()..=m.len() + 1 {
                let mut padded = m.clone();
                padded.resize(k, 0);
                if l > k {
                    continue;
                }
                let restricted = dual_space_character(k, l, &padded).unwrap();
                assert!(
                    restricted.coefficientwise_le(&unrestricted),
                    "k={k} l={l} m={m:?}"
                );
            }
        }
    }

    // --- lemma41_check examples ---

    #[test]
    fn diagonal_vanishing_beyond_the_level() {
        // s = 2 >= k + 1 = 2: every solution vanishes on the full diagonal
        let sol = solve_dual_space(1, 1, &[5]).unwrap();
        assert!(lemma41_check(&sol));
        let sol = solve_dual_space(1, 0, &[4]).unwrap();
        assert!(lemma41_check(&sol));
        // s <= k: vacuous
        let sol = solve_dual_space(2, 0, &[0, 2]).unwrap();
        assert!(lemma41_check(&sol));
    }

    #[test]
    fn lemma41_fails_on_a_vector_outside_the_space() {
        // hand-build a fake "solution" that does not vanish on the diagonal
        let mut sol = solve_dual_space(1, 1, &[5]).unwrap();
        for comp in &mut sol.components {
            if comp.degree == 6 {
                comp.solutions = vec![vec![Rat::one(), Rat::zero()]];
            }
        }
        assert!(!lemma41_check(&sol));
    }
}
