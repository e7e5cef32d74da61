//! Exact arithmetic for split parabolic bundles on the projective line.
//!
//! A split parabolic bundle is a finite multiset of rank-one pieces on a
//! marked curve: each piece carries an integer degree and one rational
//! weight in `[0, 1)` per marked point, with the weight denominator dividing
//! the point's divisibility. Everything here is computed exactly, over
//! arbitrary-precision rationals and cyclotomic integers; no floats.
//!
//! The crate is organized by what the operations act on:
//!
//! - [`exact`]: rationals with true floor/frac, cyclotomic integers in
//!   `Z[x]/(x^r - 1)`, and the inverse character transform that recovers
//!   eigenvalue multiplicities from trace data.
//! - [`parabolic`]: marked curves, split bundles, evaluation, shifts,
//!   tensor/dual/hom, and the filtration view of the weight data.
//! - [`orbifold`]: the equivalent twist/exponent presentation and the
//!   dictionary between the two sides.
//! - [`pullback`]: pullback along `z -> z^m`, the root-divisibility
//!   pullback with its subsheaf-intersection cross-check, and delooping.
//! - [`cyclic`]: invariants of cyclic covers branched at finite points and
//!   infinity: jump weights, carry counts, and twist degrees.
//! - [`covers`]: monodromy data of three-point covers, trace-derived weight
//!   multisets, and the resulting degree bounds.

pub mod covers;
pub mod cyclic;
pub mod exact;
pub mod orbifold;
pub mod parabolic;
pub mod pullback;

use thiserror::Error;

/// Errors produced by the operations in this crate.
///
/// Everything except [`Error::Internal`] is an input problem: the caller
/// handed us data outside an operation's domain. `Internal` flags a broken
/// invariant that valid inputs can never trigger; seeing one means a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two bundles that must share a marked curve do not.
    #[error("curve mismatch: {0}")]
    CurveMismatch(String),
    /// A weight or weight vector entry is not divisible by the point's
    /// divisibility, or lies outside its required range.
    #[error("divisibility violation: {0}")]
    Divisibility(String),
    /// Malformed input data (ranges, lengths, labels, canonicality).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Matrix order detection exceeded the iteration cap.
    #[error("order cap exceeded: no finite order within {0} iterations")]
    OrderCap(u64),
    /// An internal invariant failed. Valid inputs cannot cause this.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
