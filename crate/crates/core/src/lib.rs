//! Finite-dimensional quotients of path algebras over exact fields, their
//! module categories, and arrow removal.
//!
//! Everything here is `no_std` with `alloc`; IO lives in the `arrowkernel` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod cleft;
pub mod error;
pub mod extension;
pub mod field;
pub mod fixtures;
pub mod hochschild;
pub mod ideal;
pub mod linalg;
pub mod module;
pub mod presentation;
pub mod reduction;
pub mod resolution;
pub mod verifier;

pub use algebra::{assemble_algebra, enveloping_algebra, opposite_algebra, FiniteDimAlgebra};
pub use error::Error;
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use linalg::{Matrix, Subspace};
pub use presentation::{parse_presentation, serialize_presentation, QuiverPresentation};
