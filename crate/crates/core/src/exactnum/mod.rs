//! Exact scalars and linear algebra over the Gaussian rationals `Q(i)`.
//!
//! Everything above this module computes through [`Scalar`], so every
//! identity check in the crate is decided bit-exactly.

mod echelon;
mod matrix;
mod rational;
mod scalar;

pub use echelon::{SparseEchelon, SparseRow};
pub use matrix::{AffineSolution, Inconsistent, Matrix};
pub use rational::{ParseScalarError, Rational};
pub use scalar::Scalar;
