use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::Element;
use crate::exactnum::{Scalar, SparseEchelon};
use crate::hochschild::{scan, Cochain};
use crate::{Error, Result};

/// A finite-dimensional associative algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    basis: Vec<String>,
    structure: Cochain,
    unit: Option<Element>,
}

impl Algebra {
    /// Validates associativity on all basis triples, then validates the
    /// claimed unit or, when none is given, solves for one.
    pub fn new(name: impl Into<String>, basis: Vec<String>, structure: Cochain, unit: Option<Element>) -> Result<Self> {
        let d = basis.len();
        if structure.dim() != d || structure.arity() != 2 {
            return Err(Error::DimensionMismatch { expected: d, found: structure.dim() });
        }
        if let Some(witness) = scan::associator_witness(&structure) {
            return Err(Error::NonAssociative { witness });
        }
        let unit = match unit {
            Some(u) => {
                if u.dim() != d {
                    return Err(Error::DimensionMismatch { expected: d, found: u.dim() });
                }
                if let Some(witness) = unit_law_witness(&structure, &u) {
                    return Err(Error::NotAUnit { witness });
                }
                Some(u)
            }
            None => find_unit(&structure),
        };
        Ok(Algebra { name: name.into(), basis, structure, unit })
    }

    /// Skips validation; for builders whose structure is associative by construction.
    pub(crate) fn trusted(name: impl Into<String>, basis: Vec<String>, structure: Cochain, unit: Option<Element>) -> Self {
        debug_assert_eq!(basis.len(), structure.dim());
        Algebra { name: name.into(), basis, structure, unit }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    /// The product as an arity-2 cochain.
    pub fn structure(&self) -> &Cochain {
        &self.structure
    }

    pub fn unit(&self) -> Option<&Element> {
        self.unit.as_ref()
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    /// Basis element by label; panics on an unknown label.
    pub fn e(&self, label: &str) -> Element {
        let i = self.index_of(label).unwrap_or_else(|| panic!("unknown basis label {label}"));
        self.basis_element(i)
    }

    pub fn check_element(&self, x: &Element) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.dim() });
        }
        Ok(())
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.mul(x, y))
    }

    /// Unchecked product; panics on a dimension mismatch.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        self.structure.mul(x, y)
    }

    /// `xy − yx`
    pub fn commutator(&self, x: &Element, y: &Element) -> Element {
        &self.mul(x, y) - &self.mul(y, x)
    }
}

/// First basis index `j` with `u·e_j ≠ e_j` or `e_j·u ≠ e_j`.
pub(crate) fn unit_law_witness(p: &Cochain, u: &Element) -> Option<usize> {
    let d = p.dim();
    (0..d).find(|&j| {
        let ej = Element::basis(d, j);
        p.mul(u, &ej) != ej || p.mul(&ej, u) != ej
    })
}

/// Solves `u·e_j = e_j = e_j·u` for all `j`; a unit is unique when it exists.
pub(crate) fn find_unit(p: &Cochain) -> Option<Element> {
    let d = p.dim();
    // (side, j, k) -> coefficients over the unknown coordinates u_m
    let mut rows: BTreeMap<(u8, usize, usize), Vec<(usize, Scalar)>> = BTreeMap::new();
    for m in 0..d {
        for j in 0..d {
            for (k, c) in p.get2(m, j).terms() {
                rows.entry((0, j, *k)).or_default().push((m, c.clone()));
            }
            for (k, c) in p.get2(j, m).terms() {
                rows.entry((1, j, *k)).or_default().push((m, c.clone()));
            }
        }
    }
    for side in 0..2 {
        for j in 0..d {
            rows.entry((side, j, j)).or_default().push((d, Scalar::ONE));
        }
    }
    let mut system = SparseEchelon::new(d + 1);
    for (_, row) in rows {
        system.insert(row);
    }
    let sol = system.solve_augmented().ok()?;
    Some(Element::from_dense(&sol.particular))
}
