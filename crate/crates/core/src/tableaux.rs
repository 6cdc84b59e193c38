//! Semistandard tableaux and the charge statistic.
//!
//! This is the independent oracle for the unrestricted Kostka polynomials:
//! `K_{l,m}(q)` equals the reversal (at degree `||m||`) of the charge
//! generating function over `Tab(lambda, R(m))`, where
//! `lambda = ((|m|+l)/2, (|m|-l)/2)` and `R(m)` is the partition with `m_i`
//! parts equal to `i`.
//!
//! Conventions (validated wholesale against the fermionic formula, see the
//! cross-oracle tests): the reading word takes rows bottom to top, each row
//! left to right; standard subwords are extracted by repeated selection of
//! one copy of each letter `1..=max`, starting at the leftmost available 1
//! and finding each next letter by a cyclic leftward scan; within a
//! standard subword the index of letter 1 is 0 and the index of `r+1` is
//! the index of `r`, plus 1 when `r+1` sits to the right of `r`. The scan
//! direction only matters once letters repeat, and the leftward scan is the
//! one the cross-oracle confirms (it mirrors the classical right-to-left
//! reading convention under word reversal).

use crate::kostka::{norm, weighted_size};
use crate::qseries::{QPoly, QSeriesError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableauxError {
    #[error("tableau is not semistandard")]
    NotSemistandard,
    #[error("charge requires partition content (weakly decreasing letter multiplicities)")]
    NonPartitionContent,
    #[error("charge {0} exceeds the norm bound: {1}")]
    ChargeExceedsNorm(String, String),
}

/// A filling of a (two-row) Young diagram, rows top to bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    /// Letter multiplicities, index `j` counting occurrences of `j + 1`.
    pub fn weight(&self) -> Vec<usize> {
        let max = self
            .rows
            .iter()
            .flat_map(|r| r.iter())
            .copied()
            .max()
            .unwrap_or(0);
        let mut counts = vec![0usize; max];
        for row in &self.rows {
            for &x in row {
                counts[x - 1] += 1;
            }
        }
        counts
    }

    /// Rows weakly increase left to right, columns strictly increase top to
    /// bottom, shape weakly decreases.
    pub fn is_semistandard(&self) -> bool {
        for (r, row) in self.rows.iter().enumerate() {
            if row.contains(&0) {
                return false;
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if r > 0 {
                let above = &self.rows[r - 1];
                if row.len() > above.len() {
                    return false;
                }
                if row.iter().zip(above).any(|(below, up)| below <= up) {
                    return false;
                }
            }
        }
        true
    }

    /// Rows bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows
            .iter()
            .rev()
            .flat_map(|r| r.iter().copied())
            .collect()
    }
}

/// All semistandard tableaux of the given shape and letter multiplicities,
/// enumerated by backtracking in lexicographic order of the row-major
/// filling. Empty when the sizes disagree.
pub fn enumerate_tableaux(shape: &[usize], content: &[usize]) -> Vec<Tableau> {
    let cells: usize = shape.iter().sum();
    let letters: usize = content.iter().sum();
    if cells != letters || shape.windows(2).any(|w| w[0] < w[1]) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut counts = content.to_vec();
    fill(shape, &mut rows, &mut counts, 0, 0, &mut out);
    out
}

fn fill(
    shape: &[usize],
    rows: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
    r: usize,
    c: usize,
    out: &mut Vec<Tableau>,
) {
    if r == shape.len() {
        out.push(Tableau::new(rows.clone()));
        return;
    }
    if c == shape[r] {
        fill(shape, rows, counts, r + 1, 0, out);
        return;
    }
    let min_letter = {
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]); // row weakly increasing
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1); // column strictly increasing
        }
        lo
    };
    for letter in min_letter..=counts.len() {
        if counts[letter - 1] == 0 {
            continue;
        }
        counts[letter - 1] -= 1;
        rows[r][c] = letter;
        fill(shape, rows, counts, r, c + 1, out);
        rows[r][c] = 0;
        counts[letter - 1] += 1;
    }
}

/// Charge of a word with partition content.
pub fn charge_of_word(word: &[usize]) -> Result<usize, TableauxError> {
    // validate partition content: multiplicities weakly decreasing, no gaps
    let max = word.iter().copied().max().unwrap_or(0);
    if word.contains(&0) {
        return Err(TableauxError::NonPartitionContent);
    }
    let mut counts = vec![0usize; max];
    for &x in word {
        counts[x - 1] += 1;
    }
    if counts.windows(2).any(|w| w[0] < w[1]) || counts.last().is_some_and(|&c| c == 0) {
        return Err(TableauxError::NonPartitionContent);
    }

    let n = word.len();
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut total = 0usize;
    while remaining > 0 {
        let max_letter = word
            .iter()
            .zip(&alive)
            .filter(|(_, &a)| a)
            .map(|(&x, _)| x)
            .max()
            .expect("word is non-empty here");
        // leftmost available 1, then each next letter by a cyclic leftward scan
        let mut positions = vec![0usize; max_letter]; // positions[x-1] = chosen slot of x
        let start = (0..n)
            .find(|&i| alive[i] && word[i] == 1)
            .expect("partition content guarantees a 1");
        positions[0] = start;
        let mut cur = start;
        for letter in 2..=max_letter {
            let next = (0..cur)
                .rev()
                .chain((cur + 1..n).rev())
                .find(|&i| alive[i] && word[i] == letter)
                .expect("partition content guarantees every letter up to the maximum");
            positions[letter - 1] = next;
            cur = next;
        }
        // index rule on the extracted standard subword
        let mut index = 0usize;
        for letter in 2..=max_letter {
            if positions[letter - 1] > positions[letter - 2] {
                index += 1;
            }
            total += index;
        }
        for &p in &positions {
            alive[p] = false;
        }
        remaining -= max_letter;
    }
    Ok(total)
}

/// Lascoux-Schutzenberger charge of a semistandard tableau.
pub fn charge(t: &Tableau) -> Result<usize, TableauxError> {
    if !t.is_semistandard() {
        return Err(TableauxError::NotSemistandard);
    }
    charge_of_word(&t.reading_word())
}

/// The partition `R(m) = (k^{m_k}, ..., 2^{m_2}, 1^{m_1})` as a descending
/// part list; this is also the tableau weight vector.
pub fn content_partition(m: &[usize]) -> Vec<usize> {
    let mut parts = Vec::new();
    for i in (1..=m.len()).rev() {
        parts.extend(std::iter::repeat_n(i, m[i - 1]));
    }
    parts
}

/// Unrestricted Kostka polynomial through the charge statistic:
/// the reversal at degree `||m||` of `sum_t q^{charge(t)}` over
/// `Tab(lambda, R(m))`. Returns the zero polynomial when `l` and `|m|`
/// have different parities or `l > |m|`.
pub fn kostka_via_charge(l: usize, m: &[usize]) -> Result<QPoly, TableauxError> {
    let size = weighted_size(m);
    if l > size || !(size - l).is_multiple_of(2) {
        return Ok(QPoly::zero());
    }
    let shape: Vec<usize> = [(size + l) / 2, (size - l) / 2]
        .into_iter()
        .filter(|&len| len > 0)
        .collect();
    let content = content_partition(m);
    let mut sum = QPoly::zero();
    for t in enumerate_tableaux(&shape, &content) {
        let c = charge(&t)?;
        sum = &sum + &QPoly::q_power(c);
    }
    sum.reverse_with_degree(norm(m)).map_err(|e| match e {
        QSeriesError::DegreeExceedsTarget { degree, target } => {
            TableauxError::ChargeExceedsNorm(degree.to_string(), target.to_string())
        }
        other => TableauxError::ChargeExceedsNorm(other.to_string(), String::new()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostka::{multiplicity_vectors, unrestricted_kostka};

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect())
    }

    // --- enumeration ---

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_tableaux(&[1, 1], &[1, 1]).len(), 1);
        assert_eq!(enumerate_tableaux(&[2, 1], &[1, 1, 1]).len(), 2);
        // shape = content: only the superstandard filling
        for shape in [vec![3], vec![2, 2], vec![4, 1]] {
            let found = enumerate_tableaux(&shape, &shape);
            assert_eq!(found.len(), 1);
            for (i, row) in found[0].rows().iter().enumerate() {
                assert!(row.iter().all(|&x| x == i + 1));
            }
        }
        // size mismatch yields the empty list
        assert!(enumerate_tableaux(&[2, 1], &[1, 1]).is_empty());
    }

    #[test]
    fn enumeration_is_semistandard_and_lexicographic() {
        let all = enumerate_tableaux(&[3, 2], &[2, 2, 1]);
        assert!(all.iter().all(|t| t.is_semistandard()));
        assert!(all.iter().all(|t| t.weight() == vec![2, 2, 1]));
        let keys: Vec<Vec<usize>> = all
            .iter()
            .map(|t| t.rows().iter().flatten().copied().collect())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    // --- charge ---

    #[test]
    fn charge_of_superstandard_tableau_is_zero() {
        for shape in [vec![2, 1], vec![3, 2], vec![4]] {
            let found = enumerate_tableaux(&shape, &shape);
            assert_eq!(charge(&found[0]).unwrap(), 0, "shape {shape:?}");
        }
    }

    #[test]
    fn charges_of_two_standard_tableaux() {
        let t1 = t(&[&[1, 2], &[3]]);
        let t2 = t(&[&[1, 3], &[2]]);
        let mut charges = vec![charge(&t1).unwrap(), charge(&t2).unwrap()];
        charges.sort();
        assert_eq!(charges, vec![1, 2]);
    }

    #[test]
    fn charge_of_increasing_standard_word() {
        for n in 1..=6 {
            let word: Vec<usize> = (1..=n).collect();
            assert_eq!(charge_of_word(&word).unwrap(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn charge_rejects_invalid_input() {
        assert_eq!(charge(&t(&[&[2, 1]])), Err(TableauxError::NotSemistandard));
        assert_eq!(
            charge_of_word(&[2, 2, 1]),
            Err(TableauxError::NonPartitionContent)
        );
        assert_eq!(charge_of_word(&[]).unwrap(), 0);
    }

    // --- kostka_via_charge ---

    #[test]
    fn charge_kostka_examples() {
        assert_eq!(
            kostka_via_charge(1, &[3]).unwrap(),
            QPoly::from_ints(&[0, 1, 1])
        );
        assert_eq!(kostka_via_charge(0, &[2]).unwrap(), QPoly::q_power(1));
        for m in [vec![2], vec![0, 1], vec![1, 1], vec![0, 0, 2]] {
            assert_eq!(
                kostka_via_charge(weighted_size(&m), &m).unwrap(),
                QPoly::one(),
                "m={m:?}"
            );
        }
        // parity violation
        assert!(kostka_via_charge(1, &[2]).unwrap().is_zero());
        assert!(kostka_via_charge(5, &[1]).unwrap().is_zero());
    }

    #[test]
    fn charge_range_is_bounded_by_norm() {
        for m in multiplicity_vectors(2, 5) {
            let size = weighted_size(&m);
            let bound = norm(&m);
            for l in (0..=size).filter(|l| (size - l).is_multiple_of(2)) {
                let shape: Vec<usize> = [(size + l) / 2, (size - l) / 2]
                    .into_iter()
                    .filter(|&x| x > 0)
                    .collect();
                for t in enumerate_tableaux(&shape, &content_partition(&m)) {
                    let c = charge(&t).unwrap();
                    assert!(c <= bound, "charge {c} > ||m|| = {bound} for {t:?}");
                }
            }
        }
    }

    #[test]
    fn cross_oracle_against_fermionic_formula_small() {
        // convention pin: both routes must agree before the full acceptance
        // sweep runs at |m| <= 7; repeated letters only start to separate
        // the scan-direction conventions around |m| = 6
        for m in multiplicity_vectors(3, 6) {
            let size = weighted_size(&m);
            for l in 0..=size {
                assert_eq!(
                    kostka_via_charge(l, &m).unwrap(),
                    unrestricted_kostka(l, &m),
                    "l={l}, m={m:?}"
                );
            }
        }
    }

    #[test]
    fn tableau_count_matches_kostka_number() {
        for m in multiplicity_vectors(2, 5) {
            let size = weighted_size(&m);
            for l in (0..=size).filter(|l| (size - l).is_multiple_of(2)) {
                let shape: Vec<usize> = [(size + l) / 2, (size - l) / 2]
                    .into_iter()
                    .filter(|&x| x > 0)
                    .collect();
                let count = enumerate_tableaux(&shape, &content_partition(&m)).len();
                let expected = unrestricted_kostka(l, &m).eval_at_one();
                assert_eq!(num_bigint::BigInt::from(count), expected, "l={l}, m={m:?}");
            }
        }
    }
}
