//! Membership decisions for the low-rank-plus-diagonal covariance sets
//! `F(p, m)` with `m` in {0, 1, 2}: a symmetric positive definite matrix
//! belongs to `F(p, m)` when it can be written as `diag(delta) + Gamma * Gamma^t`
//! with strictly positive `delta` and a `p x m` loading matrix `Gamma`.
//!
//! The crate provides three complementary routes to a decision:
//!
//! * direct deciders with constructive certificates and exact non-membership
//!   witnesses ([`decide`]),
//! * the reduction to principal submatrices of size `2(m + 1)`, which is
//!   equivalent to global membership ([`finiteness`]),
//! * an induction engine that assembles a global decomposition from the two
//!   margins obtained by deleting the first or last row ([`construct`]).
//!
//! Instance generators with known ground truth live in [`witness`], and a
//! seeded multistart least-squares fitter used as an independent numerical
//! oracle lives in [`oracle`].
//!
//! Everything is deterministic given explicit seeds. With the default
//! `parallel` feature, subset scans, multistart fits, and verification sweeps
//! run on rayon; aggregation is order-independent so results are identical to
//! the sequential fallback.

pub mod construct;
pub mod decide;
mod error;
pub(crate) mod exec;
pub mod finiteness;
pub mod matcore;
pub mod oracle;
pub mod witness;

pub use error::{Error, Result};
pub use exec::ExecMode;
pub use matcore::{IndexSet, LoadingMatrix, SymMatrix, Tolerances};
