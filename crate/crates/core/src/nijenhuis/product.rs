use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{find_unit, unit_law_witness, Algebra, Element};
use crate::hochschild::{scan, Cochain};
use crate::{Error, Result};

/// What is known about the associativity of a [`Product`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Associativity {
    Unknown,
    Associative,
    /// Fails on this basis triple.
    NonAssociative([usize; 3]),
}

/// A bilinear product on an algebra's underlying space, with its
/// associativity status and unit (when known to exist).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    cochain: Cochain,
    associativity: Associativity,
    unit: Option<Element>,
}

impl Product {
    /// Wraps an arity-2 cochain without inspecting it.
    pub fn unchecked(cochain: Cochain) -> Result<Self> {
        if cochain.arity() != 2 {
            return Err(Error::precondition("a product is an arity-2 cochain"));
        }
        Ok(Product { cochain, associativity: Associativity::Unknown, unit: None })
    }

    /// Wraps a cochain, deciding associativity by scanning all basis triples
    /// and, when associative, solving for a unit.
    pub fn checked(cochain: Cochain) -> Result<Self> {
        let mut p = Product::unchecked(cochain)?;
        p.check_associativity();
        if p.associativity == Associativity::Associative {
            p.unit = find_unit(&p.cochain);
        }
        Ok(p)
    }

    /// Attaches a precomputed associativity status and unit; the unit is
    /// validated.
    pub(crate) fn with_flags(cochain: Cochain, associativity: Associativity, unit: Option<Element>) -> Self {
        let unit = unit.filter(|u| unit_law_witness(&cochain, u).is_none());
        Product { cochain, associativity, unit }
    }

    /// The algebra's own product.
    pub fn of_algebra(alg: &Algebra) -> Self {
        Product {
            cochain: alg.structure().clone(),
            associativity: Associativity::Associative,
            unit: alg.unit().cloned(),
        }
    }

    pub fn cochain(&self) -> &Cochain {
        &self.cochain
    }

    pub fn dim(&self) -> usize {
        self.cochain.dim()
    }

    pub fn associativity(&self) -> Associativity {
        self.associativity
    }

    /// `None` while unknown.
    pub fn is_associative(&self) -> Option<bool> {
        match self.associativity {
            Associativity::Unknown => None,
            Associativity::Associative => Some(true),
            Associativity::NonAssociative(_) => Some(false),
        }
    }

    /// Scans all basis triples (again, if already known) and records the result.
    pub fn check_associativity(&mut self) -> Associativity {
        self.associativity = match scan::associator_witness(&self.cochain) {
            Some(w) => Associativity::NonAssociative(w),
            None => Associativity::Associative,
        };
        self.associativity
    }

    /// Associativity, scanning first if unknown.
    pub fn ensure_associativity(&mut self) -> Associativity {
        if self.associativity == Associativity::Unknown {
            self.check_associativity();
        }
        self.associativity
    }

    pub fn unit(&self) -> Option<&Element> {
        self.unit.as_ref()
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        self.cochain.mul(x, y)
    }

    /// Reinterprets an associative product as an algebra on the same basis.
    pub fn to_algebra(&self, name: impl Into<String>, basis: Vec<String>) -> Result<Algebra> {
        Algebra::new(name, basis, self.cochain.clone(), self.unit.clone())
    }
}
