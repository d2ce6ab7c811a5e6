//! JSON documents for algebras, operators, decompositions and products.
//!
//! Scalars are always strings in the exact scalar grammar (`"3/2"`,
//! `"1/2-3i"`) and indices are 0-based. Unknown fields are ignored on load.

use nijenhuis_core::exactnum::Scalar;
use nijenhuis_core::{Algebra, Cochain, Decomposition, Element, Operator, Product};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// `{ name, dim, basis, structure: [[i, j, k, "c"]…], unit? }` with
/// `e_i·e_j = Σ_k c e_k`. Products are exported in the same layout with an
/// extra `associative` flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub structure: Vec<(usize, usize, usize, String)>,
    #[serde(default)]
    pub unit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub associative: Option<bool>,
}

/// `{ algebra, matrix }`, where column `j` of `matrix` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorDoc {
    pub algebra: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDoc {
    pub part1: Vec<usize>,
}

fn scalar(s: &str) -> Result<Scalar, CliError> {
    Ok(s.parse::<Scalar>()?)
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

fn vector(coords: &[String], dim: usize, what: &str) -> Result<Element, CliError> {
    if coords.len() != dim {
        return Err(invalid(format!("{what} has {} coordinates, expected {dim}", coords.len())));
    }
    let v = coords.iter().map(|c| scalar(c)).collect::<Result<Vec<_>, _>>()?;
    Ok(Element::from_dense(&v))
}

fn strings(x: &Element) -> Vec<String> {
    x.to_dense().iter().map(ToString::to_string).collect()
}

impl AlgebraDoc {
    fn check_shape(&self) -> Result<(), CliError> {
        if self.basis.len() != self.dim {
            return Err(invalid(format!("{} basis labels for dimension {}", self.basis.len(), self.dim)));
        }
        Ok(())
    }

    /// The structure constants as a product cochain, with no associativity check.
    pub fn cochain(&self) -> Result<Cochain, CliError> {
        self.check_shape()?;
        let entries = self
            .structure
            .iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, scalar(c)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(Cochain::from_structure_constants(self.dim, entries)?)
    }

    /// Validates associativity, then validates or solves for the unit.
    pub fn to_algebra(&self) -> Result<Algebra, CliError> {
        let structure = self.cochain()?;
        let unit = self.unit.as_ref().map(|u| vector(u, self.dim, "unit")).transpose()?;
        Ok(Algebra::new(self.name.clone(), self.basis.clone(), structure, unit)?)
    }

    /// A product over the basis of this document; associativity is scanned.
    pub fn to_product(&self) -> Result<Product, CliError> {
        Ok(Product::checked(self.cochain()?)?)
    }

    pub fn from_algebra(alg: &Algebra) -> Self {
        AlgebraDoc {
            name: alg.name().to_string(),
            dim: alg.dim(),
            basis: alg.basis_labels().to_vec(),
            structure: structure_entries(alg.structure()),
            unit: alg.unit().map(strings),
            associative: None,
        }
    }

    pub fn from_product(name: &str, basis: &[String], p: &Product) -> Self {
        AlgebraDoc {
            name: name.to_string(),
            dim: p.dim(),
            basis: basis.to_vec(),
            structure: structure_entries(p.cochain()),
            unit: p.unit().map(strings),
            associative: p.is_associative(),
        }
    }
}

/// Sparse `[i, j, k, "c"]` rows of an arity-2 cochain in index order.
pub fn structure_entries(c: &Cochain) -> Vec<(usize, usize, usize, String)> {
    c.sparse_entries().map(|(t, k, v)| (t[0], t[1], k, v.to_string())).collect()
}

impl OperatorDoc {
    pub fn to_operator(&self, alg: &Algebra) -> Result<Operator, CliError> {
        if self.algebra != alg.name() {
            return Err(invalid(format!("operator is over `{}`, not `{}`", self.algebra, alg.name())));
        }
        let d = alg.dim();
        if self.matrix.len() != d || self.matrix.iter().any(|r| r.len() != d) {
            return Err(invalid(format!("operator matrix must be {d}×{d}")));
        }
        let rows = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|c| scalar(c)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Operator::from_fn(d, |j| Element::from_terms(d, rows.iter().enumerate().map(|(i, r)| (i, r[j].clone())))))
    }

    pub fn from_operator(alg: &Algebra, n: &Operator) -> Self {
        let d = n.dim();
        OperatorDoc {
            algebra: alg.name().to_string(),
            matrix: (0..d).map(|i| (0..d).map(|j| n.column(j).coord(i).to_string()).collect()).collect(),
        }
    }
}

impl DecompositionDoc {
    pub fn to_decomposition(&self, alg: &Algebra) -> Result<Decomposition, CliError> {
        Ok(Decomposition::new(alg, &self.part1)?)
    }
}
