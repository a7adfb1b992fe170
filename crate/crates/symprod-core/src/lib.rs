//! Exact-arithmetic invariants of symmetric products of smooth projective curves.
//!
//! Everything here computes over exact fields (arbitrary-precision rationals or
//! odd prime fields) with no floating point anywhere. The crate is `no_std`
//! (alloc required); IO, JSON schemas and the CLI live in the companion
//! `symprod-cli` crate.
//!
//! The layers, bottom to top:
//!
//! * [`exact`] — scalars, polynomials, truncated power series, matrices, rank.
//! * [`curve`] — hyperelliptic and smooth plane curve models, points, point
//!   enumeration over prime fields.
//! * [`jets`] — canonical differential bases and their local jet expansions.
//! * [`linsys`] — effective divisors, jet-evaluation matrices, Riemann-Roch
//!   dimension reports, base-point tests, the degree-2 pencil, and an
//!   independent combinatorial h0 oracle for hyperelliptic curves.
//! * [`classes`] — numerical divisor classes on the second symmetric product
//!   and on the Cartesian square, with exact intersection numbers.
//! * [`verdict`] — gonality data, base-locus surveys, and the rule table
//!   deciding existence of semi-orthogonal decompositions.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod classes;
pub mod curve;
pub mod error;
pub mod exact;
pub mod jets;
pub mod linsys;
pub mod verdict;

pub use error::Error;
pub use exact::matrix::ExactMatrix;
pub use exact::poly::Poly;
pub use exact::scalar::{FieldDesc, Scalar};
pub use exact::series::TruncatedSeries;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
