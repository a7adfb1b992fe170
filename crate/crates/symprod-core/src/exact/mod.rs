//! Exact scalar, polynomial, truncated power-series, and matrix arithmetic.
//!
//! No floating point anywhere: scalars are arbitrary-precision rationals or
//! residues in an odd prime field, and every operation is a pure function of
//! immutable inputs.

pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod series;
