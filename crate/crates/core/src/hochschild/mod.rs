//! Hochschild cochains with coefficients in the algebra, the coboundary,
//! cohomology dimensions and the Gerstenhaber bracket.

mod cochain;
mod coboundary;
mod gerstenhaber;
pub mod scan;

pub use coboundary::{coboundary, cohomology_dimension, is_cocycle, COHOMOLOGY_LIMIT};
pub use cochain::{Cochain, Tuples, MAX_ARITY, MAX_TABLE_ENTRIES};
pub use gerstenhaber::{composition, gerstenhaber_bracket};
