use alloc::vec;
use alloc::vec::Vec;

use super::{Algebra, Element, Operator};
use crate::hochschild::Cochain;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    First,
    Second,
}

impl Part {
    pub fn number(self) -> u8 {
        match self {
            Part::First => 1,
            Part::Second => 2,
        }
    }
}

/// A basis-aligned splitting `A = A₁ ⊕ A₂`.
///
/// Closure of each part under the algebra product is computed once at
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    dim: usize,
    part1: Vec<usize>,
    part2: Vec<usize>,
    in_part1: Vec<bool>,
    part1_closure: Option<[usize; 2]>,
    part2_closure: Option<[usize; 2]>,
}

/// First basis pair in `part` whose product leaves `part`.
fn closure_witness(p: &Cochain, part: &[usize], inside: &dyn Fn(usize) -> bool) -> Option<[usize; 2]> {
    for &i in part {
        for &j in part {
            if p.get2(i, j).terms().iter().any(|(k, _)| !inside(*k)) {
                return Some([i, j]);
            }
        }
    }
    None
}

impl Decomposition {
    /// Splits the basis into `part1` and its complement.
    pub fn new(alg: &Algebra, part1: &[usize]) -> Result<Self> {
        let d = alg.dim();
        let mut in_part1 = vec![false; d];
        for &i in part1 {
            if i >= d {
                return Err(Error::IndexOutOfRange { index: i, dim: d });
            }
            in_part1[i] = true;
        }
        let p1: Vec<usize> = (0..d).filter(|&i| in_part1[i]).collect();
        let p2: Vec<usize> = (0..d).filter(|&i| !in_part1[i]).collect();
        let part1_closure = closure_witness(alg.structure(), &p1, &|k| in_part1[k]);
        let part2_closure = closure_witness(alg.structure(), &p2, &|k| !in_part1[k]);
        Ok(Decomposition { dim: d, part1: p1, part2: p2, in_part1, part1_closure, part2_closure })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn part(&self, part: Part) -> &[usize] {
        match part {
            Part::First => &self.part1,
            Part::Second => &self.part2,
        }
    }

    pub fn part1(&self) -> &[usize] {
        &self.part1
    }

    pub fn part2(&self) -> &[usize] {
        &self.part2
    }

    pub fn in_part1(&self, i: usize) -> bool {
        self.in_part1[i]
    }

    pub fn is_subalgebra(&self, part: Part) -> bool {
        self.closure_witness(part).is_none()
    }

    /// A basis pair of `part` whose product leaves it, if any.
    pub fn closure_witness(&self, part: Part) -> Option<[usize; 2]> {
        match part {
            Part::First => self.part1_closure,
            Part::Second => self.part2_closure,
        }
    }

    pub fn require_subalgebra(&self, part: Part) -> Result<()> {
        match self.closure_witness(part) {
            Some(witness) => Err(Error::NotSubalgebra { part: part.number(), witness }),
            None => Ok(()),
        }
    }

    /// Whether both parts are subalgebras (a twilled algebra).
    pub fn is_twilled(&self) -> bool {
        self.part1_closure.is_none() && self.part2_closure.is_none()
    }

    pub fn project(&self, x: &Element, part: Part) -> Element {
        assert_eq!(x.dim(), self.dim, "element from another algebra");
        match part {
            Part::First => x.filter(|i| self.in_part1[i]),
            Part::Second => x.filter(|i| !self.in_part1[i]),
        }
    }

    pub fn projector(&self, part: Part) -> Operator {
        Operator::from_fn(self.dim, |j| self.project(&Element::basis(self.dim, j), part))
    }
}
