//! Deformations `μ_N` of an associative product by linear operators, the
//! Nijenhuis torsion, and the constructions built on Nijenhuis tensors.

mod construct;
mod deform;
mod lie;
mod product;
mod tensors;

pub use construct::{
    conjugated_product, contraction_limit, contraction_product, extend_tensor, theorem5_product, Extension,
};
pub use deform::{
    associativity_criterion, deform, deform_cochain, deform_unchecked, is_nijenhuis, mixed_associator_compatible,
    mixed_associator_witness, power_product, torsion, torsion_cochain, torsion_witness, verify_hierarchy,
    CriterionReport, HierarchyReport, MAX_HIERARCHY_POWER,
};
pub use lie::{lie_bracket_of, lie_deformed_bracket, lie_nijenhuis_check, lie_nijenhuis_witness, total_skew_associator};
pub use product::{Associativity, Product};
pub use tensors::{
    compatibility_witness, diagonal_left_multiplication, diagonal_part_multiplication, diagonal_split, lambda_tensor,
    left_multiplication_tensor, projection_tensor, tensors_compatible,
};
