//! Exact scalars over Q and GF(p), dense matrices, and the subspace lattice.
//!
//! Everything here is exact; there is no floating point anywhere in the crate.

mod matrix;
mod scalar;
mod subspace;
pub mod vector;

pub use matrix::Matrix;
pub use scalar::{FieldJson, FieldSpec, Scalar};
pub use subspace::{SpanBuilder, Subspace};
