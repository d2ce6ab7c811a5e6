use alloc::vec::Vec;

use super::{Accumulator, Algebra, Element};
use crate::exactnum::{Matrix, Scalar};
use crate::{Error, Result};

/// A linear map `A → A`; column `j` is the image of `e_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Operator {
    cols: Vec<Element>,
}

impl Operator {
    /// Panics if the columns disagree on dimension or their count differs from it.
    pub fn from_columns(cols: Vec<Element>) -> Self {
        let d = cols.len();
        assert!(cols.iter().all(|c| c.dim() == d), "operator must be square");
        Operator { cols }
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize) -> Element) -> Self {
        Operator::from_columns((0..dim).map(f).collect())
    }

    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::DimensionMismatch { expected: m.rows(), found: m.cols() });
        }
        let d = m.rows();
        Ok(Operator::from_fn(d, |j| Element::from_terms(d, (0..d).map(|i| (i, m[(i, j)].clone())))))
    }

    pub fn to_matrix(&self) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col.terms() {
                m[(*i, j)] = v.clone();
            }
        }
        m
    }

    pub fn identity(dim: usize) -> Self {
        Operator::from_fn(dim, |j| Element::basis(dim, j))
    }

    pub fn zero(dim: usize) -> Self {
        Operator::from_fn(dim, |_| Element::zero(dim))
    }

    /// Multiplication by a field element, `A ↦ λA`.
    pub fn scalar(dim: usize, lambda: &Scalar) -> Self {
        Operator::from_fn(dim, |j| Element::basis(dim, j).scale(lambda))
    }

    /// Diagonal in the basis: `e_j ↦ diag[j]·e_j`.
    pub fn diagonal(diag: &[Scalar]) -> Self {
        let d = diag.len();
        Operator::from_fn(d, |j| Element::basis(d, j).scale(&diag[j]))
    }

    /// Left multiplication `N_K(A) = KA`.
    pub fn left_multiplication(alg: &Algebra, k: &Element) -> Result<Self> {
        alg.check_element(k)?;
        Ok(Operator::from_fn(alg.dim(), |j| alg.mul(k, &Element::basis(alg.dim(), j))))
    }

    /// Right multiplication `A ↦ AK`.
    pub fn right_multiplication(alg: &Algebra, k: &Element) -> Result<Self> {
        alg.check_element(k)?;
        Ok(Operator::from_fn(alg.dim(), |j| alg.mul(&Element::basis(alg.dim(), j), k)))
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn columns(&self) -> &[Element] {
        &self.cols
    }

    pub fn column(&self, j: usize) -> &Element {
        &self.cols[j]
    }

    pub fn apply(&self, x: &Element) -> Element {
        assert_eq!(x.dim(), self.dim(), "operator applied to element of wrong dimension");
        let mut acc = Accumulator::new(self.dim());
        self.apply_into(&mut acc, &Scalar::ONE, x);
        acc.take()
    }

    /// `acc += coef · N(x)`
    pub fn apply_into(&self, acc: &mut Accumulator, coef: &Scalar, x: &Element) {
        for (j, v) in x.terms() {
            acc.add_scaled(&(coef * v), &self.cols[*j]);
        }
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Operator) -> Operator {
        assert_eq!(self.dim(), other.dim());
        Operator { cols: other.cols.iter().map(|c| self.apply(c)).collect() }
    }

    /// `self^k`, with `self^0` the identity.
    pub fn pow(&self, k: u32) -> Operator {
        let mut out = Operator::identity(self.dim());
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    pub fn add(&self, other: &Operator) -> Operator {
        assert_eq!(self.dim(), other.dim());
        Operator { cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Operator) -> Operator {
        assert_eq!(self.dim(), other.dim());
        Operator { cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, f: &Scalar) -> Operator {
        Operator { cols: self.cols.iter().map(|c| c.scale(f)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Element::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.to_matrix().rank()
    }

    /// Whether `N` maps `span{e_i : i ∈ part}` into itself.
    pub fn preserves(&self, part: &[usize]) -> bool {
        let mut inside = alloc::vec![false; self.dim()];
        for &i in part {
            inside[i] = true;
        }
        part.iter().all(|&j| self.cols[j].terms().iter().all(|(i, _)| inside[*i]))
    }
}
