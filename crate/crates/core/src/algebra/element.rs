use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::exactnum::Scalar;

/// A vector over an algebra's basis, stored as sorted nonzero coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    dim: usize,
    terms: Vec<(usize, Scalar)>,
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element { dim, terms: Vec::new() }
    }

    /// The basis vector `e_i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range for dimension {dim}");
        Element { dim, terms: vec![(i, Scalar::ONE)] }
    }

    pub fn from_dense(coords: &[Scalar]) -> Self {
        let terms = coords
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        Element { dim: coords.len(), terms }
    }

    /// Sums the given `(index, value)` pairs; duplicates are allowed.
    pub fn from_terms<I>(dim: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut acc = Accumulator::new(dim);
        for (i, v) in terms {
            assert!(i < dim, "index {i} out of range for dimension {dim}");
            acc.add_term(i, &Scalar::ONE, &v);
        }
        acc.take()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[(usize, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coord(&self, i: usize) -> Scalar {
        match self.terms.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(p) => self.terms[p].1.clone(),
            Err(_) => Scalar::ZERO,
        }
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::ZERO; self.dim];
        for (i, v) in &self.terms {
            out[*i] = v.clone();
        }
        out
    }

    pub fn scale(&self, f: &Scalar) -> Element {
        if f.is_zero() {
            return Element::zero(self.dim);
        }
        let terms = self.terms.iter().map(|(i, v)| (*i, f * v)).collect();
        Element { dim: self.dim, terms }
    }

    /// Keeps only the coordinates selected by `keep`.
    pub fn filter(&self, keep: impl Fn(usize) -> bool) -> Element {
        let terms = self.terms.iter().filter(|(i, _)| keep(*i)).cloned().collect();
        Element { dim: self.dim, terms }
    }

    fn combine(&self, other: &Element, sign: &Scalar) -> Element {
        assert_eq!(self.dim, other.dim, "element dimension mismatch");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, sign * &b[j].1));
                j += 1;
            } else {
                let v = &a[i].1 + &(sign * &b[j].1);
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        Element { dim: self.dim, terms: out }
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.combine(rhs, &Scalar::ONE)
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.combine(rhs, &Scalar::int(-1))
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&Scalar::int(-1))
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (i, v)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({v})e{i}")?;
        }
        Ok(())
    }
}

/// Dense scratch space for summing many sparse contributions.
///
/// Only touched slots are visited when the result is extracted or cleared, so
/// a single accumulator can be reused across millions of evaluations.
pub struct Accumulator {
    vals: Vec<Scalar>,
    touched: Vec<usize>,
    marked: Vec<bool>,
}

impl Accumulator {
    pub fn new(dim: usize) -> Self {
        Accumulator { vals: vec![Scalar::ZERO; dim], touched: Vec::new(), marked: vec![false; dim] }
    }

    pub fn dim(&self) -> usize {
        self.vals.len()
    }

    /// `slot[i] += a·b`
    #[inline]
    pub fn add_term(&mut self, i: usize, a: &Scalar, b: &Scalar) {
        if !self.marked[i] {
            self.marked[i] = true;
            self.touched.push(i);
        }
        self.vals[i].add_mul(a, b);
    }

    /// `self += f·x`
    #[inline]
    pub fn add_scaled(&mut self, f: &Scalar, x: &Element) {
        debug_assert_eq!(x.dim, self.vals.len());
        for (i, v) in &x.terms {
            self.add_term(*i, f, v);
        }
    }

    /// `slot[i] -= a·b`
    #[inline]
    pub fn sub_term(&mut self, i: usize, a: &Scalar, b: &Scalar) {
        if !self.marked[i] {
            self.marked[i] = true;
            self.touched.push(i);
        }
        self.vals[i].sub_mul(a, b);
    }

    /// `self -= f·x`
    #[inline]
    pub fn sub_scaled(&mut self, f: &Scalar, x: &Element) {
        debug_assert_eq!(x.dim, self.vals.len());
        for (i, v) in &x.terms {
            self.sub_term(*i, f, v);
        }
    }

    /// `self ± f·x` depending on `negate`.
    #[inline]
    pub fn add_signed(&mut self, negate: bool, f: &Scalar, x: &Element) {
        if negate {
            self.sub_scaled(f, x)
        } else {
            self.add_scaled(f, x)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.touched.iter().all(|&i| self.vals[i].is_zero())
    }

    pub fn clear(&mut self) {
        for &i in &self.touched {
            self.vals[i] = Scalar::ZERO;
            self.marked[i] = false;
        }
        self.touched.clear();
    }

    /// Extracts the accumulated element and resets the scratch space.
    pub fn take(&mut self) -> Element {
        self.touched.sort_unstable();
        let mut terms = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            let v = core::mem::take(&mut self.vals[i]);
            self.marked[i] = false;
            if !v.is_zero() {
                terms.push((i, v));
            }
        }
        self.touched.clear();
        Element { dim: self.vals.len(), terms }
    }
}
