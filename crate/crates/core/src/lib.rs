//! Exact-arithmetic machinery linking sl_n central characters, the cohomology
//! ring of the Grassmannian, and the Prouhet-Tarry-Escott problem.
//!
//! Every quantity is an exact rational or an arbitrary-precision integer.
//! The crate is organised bottom-up:
//!
//! - [`symfunc`]: partitions, sparse polynomials, Schur polynomials, LR products
//! - [`linalg`]: exact matrices and fraction-free rank/span computations
//! - [`weights`]: Young patterns, power-sum functionals, central-character equality
//! - [`cartan`]: ideal membership and the diagonal Schur-matrix basis on the Cartan
//! - [`grassmann`]: the Schubert-basis ring and its presentation by `w` generators
//! - [`separation`]: tensor constituents of `V_{ω_k} ⊗ V_ν` and the separation index
//! - [`matrix_model`]: exterior-power representations, Casimir and Kostant matrices
//! - [`pte`]: verification, brute-force and collision-driven searches

pub mod cartan;
pub mod error;
pub mod grassmann;
pub mod linalg;
pub mod matrix_model;
pub mod pte;
pub mod report;
pub mod separation;
pub mod symfunc;
pub mod weights;

pub use error::{Error, Result};
pub use grassmann::{GrassElement, WPoly};
pub use linalg::ExactMatrix;
pub use report::{Check, Report};
pub use symfunc::{Partition, SparsePoly};
pub use weights::{FundWeight, IndexSet, YoungPattern};

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

pub(crate) fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

/// Binomial coefficient as an arbitrary-precision integer.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::from(0);
    }
    let k = k.min(n - k);
    let mut acc = Int::from(1);
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}
