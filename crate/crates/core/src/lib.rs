//! Exact computer algebra for transposed Poisson (super)algebras, their
//! Kantor and Lie doubles, and Jordan superalgebras.
//!
//! Algebras are finite-dimensional, given by structure constants over the
//! rationals or a prime field of odd characteristic, and carry two products:
//! a supercommutative `∘` and a superskew bracket.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod exactmath;
pub mod halfderiv;
pub mod identities;
pub mod kantor;
pub mod structure;
pub mod witt;

pub use algebra::{Element, Product, SuperAlgebra};
pub use error::{Error, Result};
pub use exactmath::{FieldSpec, Matrix, Scalar, Subspace};
pub use identities::{IdentityId, IdentityReport};
