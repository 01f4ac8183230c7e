//! Exact-arithmetic engine for root systems, Weyl groups, and torus
//! semistability of Schubert varieties.
//!
//! Everything is computed over arbitrary-precision rationals; no floating
//! point appears anywhere. The central criterion is combinatorial: a
//! Schubert variety `X(w)` admits a torus-semistable point for the line
//! bundle of a dominant root-lattice character `chi` exactly when `w(chi)`
//! has all coordinates `<= 0` in the simple-root basis.
//!
//! Modules:
//! - [`rootsys`]: Cartan data, pairings, fundamental weights, positive roots.
//! - [`weyl`]: Weyl group elements, length, Bruhat order, coset minima,
//!   Coxeter elements.
//! - [`ssgit`]: the semistability criterion, brute-force minimal admitting
//!   sets for maximal parabolic quotients, and the closed-form expected sets.
//! - [`coxfeas`]: which Coxeter elements admit a nonzero dominant weight
//!   `chi` with `w(chi) <= 0`, decided by exact Fourier-Motzkin elimination.
//! - [`verify`]: batch verification suites over type/rank grids.

pub mod coxfeas;
pub mod error;
pub mod matrix;
pub mod rootsys;
pub mod ssgit;
pub mod verify;
pub mod weyl;

pub use coxfeas::CoxeterReport;
pub use error::Error;
pub use rootsys::{Kind, Root, RootSystem, Weight};
pub use ssgit::MinimalSetReport;
pub use verify::SuiteOutcome;
pub use weyl::{CosetSpec, WeylElement};

pub type Result<T> = std::result::Result<T, Error>;

/// Exact rational scalar used throughout.
pub type Rat = num::BigRational;

/// Shorthand for building a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}

/// Default ceiling on Weyl group enumeration; sized for rank <= 7 in
/// types B/C/D (2^7 * 7! = 645120).
pub const DEFAULT_ENUM_LIMIT: u128 = 1_000_000;
