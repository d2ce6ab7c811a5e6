//! Exact finite-dimensional associative algebras over the Gaussian
//! rationals, their Hochschild cochains, and deformations of their products
//! by associative Nijenhuis tensors.
//!
//! Everything is computed exactly; identities are decided by exhaustive
//! evaluation on basis tuples.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod dynamics;
mod error;
pub mod exactnum;
pub mod hochschild;
pub mod nijenhuis;
pub mod report;

pub use algebra::{Algebra, Decomposition, Element, Operator, Part};
pub use error::{Error, Result};
pub use exactnum::{Matrix, Rational, Scalar};
pub use hochschild::Cochain;
pub use nijenhuis::{Associativity, Product};
pub use report::Check;
