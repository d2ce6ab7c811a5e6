//! Algebras by structure constants, elements, operators and splittings.

pub mod builders;
mod decomposition;
mod element;
mod operator;
mod structure;

pub use builders::{
    banded_oscillator_algebra, dual_numbers, full_matrix_algebra, m2_iabc_algebra, upper_triangular_algebra, Oscillator,
};
pub use decomposition::{Decomposition, Part};
pub use element::{Accumulator, Element};
pub use operator::Operator;
pub use structure::Algebra;
pub(crate) use structure::{find_unit, unit_law_witness};
