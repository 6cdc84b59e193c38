//! Exact-arithmetic library for level-restricted Kostka polynomials, sl2
//! Verlinde fusion rules, q-supernomials and graded characters of fusion
//! products and their coinvariant spaces.
//!
//! Everything is computed over exact integers and rationals, so identities
//! between the different routes (fermionic sums, alternating sums, tableau
//! charges, brute-force module filtrations, symmetric-polynomial dual
//! spaces, Verlinde numbers) can be checked as exact equalities. The
//! modules:
//!
//! * [`qseries`]: polynomials in `q` and Gaussian binomials;
//! * [`verlinde`]: the level-`k` fusion ring of sl2;
//! * [`kostka`]: fermionic and alternating-sum formulas, q-supernomials;
//! * [`tableaux`]: semistandard tableaux and the charge statistic;
//! * [`fusion`]: filtered tensor products of cyclic evaluation modules,
//!   coinvariant characters, componentwise ideal fusion;
//! * [`gordon`]: symmetric-polynomial realization of the dual space;
//! * [`linalg`]: exact rational row reduction underneath it all.

pub mod gordon;
pub mod kostka;
pub mod linalg;
pub mod qseries;
pub mod tableaux;
pub mod verlinde;

pub mod fusion;

pub use qseries::{qbinom, vector_qbinom, QPoly};
