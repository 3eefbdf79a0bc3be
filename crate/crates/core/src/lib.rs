//! Exact computation of projective elliptic genera.
//!
//! Everything is carried out over truncated series in `u = q^{1/2}` with
//! exact rational coefficients:
//!
//! - [`qseries`]: the scalar ring [`HalfQSeries`] and eta-type products.
//! - [`cohring`]: truncated graded cohomology rings, manifolds and Chern roots.
//! - [`theta`]: the four Jacobi theta functions, as exact characteristic-class
//!   factor series and as numeric complex functions.
//! - [`bundleops`]: characters of bundle operations (Witten bundles, the
//!   determinant-weight graded decomposition, Schur functors).
//! - [`genera`]: Â-genus, Witten genus, the four projective elliptic genera
//!   (two independent pipelines) and the dimension-12 cancellation check.
//! - [`modcheck`]: exact `τ ↦ τ+1` checks and numeric checks over `SL(2,ℤ)`
//!   and its level-2 subgroups.
//! - [`manifest`] / [`report`]: the JSON input and output formats used by the
//!   `ellgen` binary.

pub mod bundleops;
pub mod cli;
pub mod cohring;
pub mod error;
pub mod genera;
pub mod manifest;
pub mod modcheck;
pub mod par;
pub mod qseries;
pub mod report;
pub mod theta;
pub(crate) mod univariate;

pub use error::{Error, Result};
pub use qseries::{HalfQSeries, Rational};
