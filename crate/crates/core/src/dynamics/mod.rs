//! Derivations, inner generators, bi-Hamiltonian pairs of products, and the
//! worked examples.

mod derivation;
mod examples;

pub use derivation::{
    commutator_derivation, derivation_witness, inner_generator, is_bi_hamiltonian, is_derivation, BiHamiltonianReport,
    DerivationReport,
};
pub use examples::{example_check, ExampleOptions, EXAMPLE_IDS};
