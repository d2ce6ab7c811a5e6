use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Accumulator, Element, Operator};
use crate::exactnum::Scalar;
use crate::{Error, Result};

/// Highest supported cochain arity.
pub const MAX_ARITY: usize = 3;

/// Upper bound on `dim^arity` for a dense cochain table.
pub const MAX_TABLE_ENTRIES: u128 = 1 << 22;

/// An `n`-linear map `A × … × A → A`, tabulated on basis tuples.
///
/// The table is indexed by the row-major flattening of the input tuple; each
/// entry is the (sparse) image of that tuple. An arity-0 cochain is a single
/// element, arity 1 a linear operator, arity 2 a candidate product.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain {
    dim: usize,
    arity: usize,
    table: Vec<Element>,
}

pub(crate) fn table_len(dim: usize, arity: usize) -> Result<usize> {
    if arity > MAX_ARITY {
        return Err(Error::ArityOverflow { arity });
    }
    let size = (dim as u128).pow(arity as u32);
    if size > MAX_TABLE_ENTRIES {
        return Err(Error::TooLarge { what: "cochain table", size, limit: MAX_TABLE_ENTRIES });
    }
    Ok(size as usize)
}

/// Odometer over all basis tuples of the given length, in table order.
pub struct Tuples {
    dim: usize,
    cur: Vec<usize>,
    done: bool,
}

impl Tuples {
    pub fn new(dim: usize, len: usize) -> Self {
        Tuples { dim, cur: vec![0; len], done: dim == 0 && len > 0 }
    }
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        let mut pos = self.cur.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.cur[pos] += 1;
            if self.cur[pos] < self.dim {
                break;
            }
            self.cur[pos] = 0;
        }
        Some(out)
    }
}

impl Cochain {
    pub fn zero(dim: usize, arity: usize) -> Result<Self> {
        let len = table_len(dim, arity)?;
        Ok(Cochain { dim, arity, table: vec![Element::zero(dim); len] })
    }

    /// Tabulates `f` on every basis tuple.
    pub fn from_fn(dim: usize, arity: usize, mut f: impl FnMut(&[usize]) -> Element) -> Result<Self> {
        table_len(dim, arity)?;
        let table: Vec<Element> = Tuples::new(dim, arity)
            .map(|t| {
                let v = f(&t);
                assert_eq!(v.dim(), dim, "cochain value has wrong dimension");
                v
            })
            .collect();
        Ok(Cochain { dim, arity, table })
    }

    /// Builds a cochain from a full table in row-major tuple order.
    pub fn from_table(dim: usize, arity: usize, table: Vec<Element>) -> Result<Self> {
        let len = table_len(dim, arity)?;
        if table.len() != len {
            return Err(Error::DimensionMismatch { expected: len, found: table.len() });
        }
        if let Some(bad) = table.iter().find(|e| e.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.dim() });
        }
        Ok(Cochain { dim, arity, table })
    }

    pub fn from_element(e: Element) -> Self {
        Cochain { dim: e.dim(), arity: 0, table: vec![e] }
    }

    pub fn from_operator(op: &Operator) -> Self {
        Cochain { dim: op.dim(), arity: 1, table: op.columns().to_vec() }
    }

    /// Sparse `(i, j, k, c)` entries meaning `e_i ∘ e_j` has coefficient `c` on `e_k`.
    pub fn from_structure_constants<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let len = table_len(dim, 2)?;
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); len];
        for (i, j, k, c) in entries {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            buckets[i * dim + j].push((k, c));
        }
        let table = buckets.into_iter().map(|b| Element::from_terms(dim, b)).collect();
        Ok(Cochain { dim, arity: 2, table })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[Element] {
        &self.table
    }

    fn flat(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.arity);
        tuple.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    /// Value on a basis tuple.
    pub fn get(&self, tuple: &[usize]) -> &Element {
        assert_eq!(tuple.len(), self.arity, "tuple length does not match arity");
        &self.table[self.flat(tuple)]
    }

    /// Value of an arity-2 cochain on `(e_i, e_j)`.
    #[inline]
    pub fn get2(&self, i: usize, j: usize) -> &Element {
        debug_assert_eq!(self.arity, 2);
        &self.table[i * self.dim + j]
    }

    pub fn to_operator(&self) -> Option<Operator> {
        (self.arity == 1).then(|| Operator::from_columns(self.table.clone()))
    }

    pub fn to_element(&self) -> Option<Element> {
        (self.arity == 0).then(|| self.table[0].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Element::is_zero)
    }

    /// First basis tuple (in table order) with a nonzero value.
    pub fn first_nonzero(&self) -> Option<Vec<usize>> {
        let pos = self.table.iter().position(|e| !e.is_zero())?;
        let mut t = vec![0; self.arity];
        let mut rest = pos;
        for slot in t.iter_mut().rev() {
            *slot = rest % self.dim;
            rest /= self.dim;
        }
        Some(t)
    }

    /// `(tuple, output index, coefficient)` for every nonzero table entry.
    pub fn sparse_entries(&self) -> impl Iterator<Item = (Vec<usize>, usize, &Scalar)> + '_ {
        Tuples::new(self.dim, self.arity)
            .zip(self.table.iter())
            .flat_map(|(t, e)| e.terms().iter().map(move |(k, c)| (t.clone(), *k, c)))
    }

    /// Accumulates `coef · self(args…)` by multilinearity.
    pub fn eval_into(&self, acc: &mut Accumulator, coef: &Scalar, args: &[&Element]) {
        assert_eq!(args.len(), self.arity, "argument count does not match arity");
        self.eval_rec(acc, coef, args, 0);
    }

    fn eval_rec(&self, acc: &mut Accumulator, coef: &Scalar, args: &[&Element], flat: usize) {
        match args.split_first() {
            None => acc.add_scaled(coef, &self.table[flat]),
            Some((first, rest)) => {
                for (i, v) in first.terms() {
                    self.eval_rec(acc, &(coef * v), rest, flat * self.dim + i);
                }
            }
        }
    }

    pub fn eval(&self, args: &[&Element]) -> Element {
        let mut acc = Accumulator::new(self.dim);
        self.eval_into(&mut acc, &Scalar::ONE, args);
        acc.take()
    }

    /// Bilinear evaluation for arity-2 cochains.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        self.eval(&[x, y])
    }

    /// `acc ± Σ_m v_m · self(e_m, e_k)`
    #[inline]
    pub(crate) fn left_into(&self, acc: &mut Accumulator, negate: bool, v: &Element, k: usize) {
        for (m, c) in v.terms() {
            acc.add_signed(negate, c, self.get2(*m, k));
        }
    }

    /// `acc ± Σ_m w_m · self(e_i, e_m)`
    #[inline]
    pub(crate) fn right_into(&self, acc: &mut Accumulator, negate: bool, i: usize, w: &Element) {
        for (m, c) in w.terms() {
            acc.add_signed(negate, c, self.get2(i, *m));
        }
    }

    /// Applies `f` to every value.
    pub fn map_values(&self, f: impl FnMut(&Element) -> Element) -> Cochain {
        Cochain { dim: self.dim, arity: self.arity, table: self.table.iter().map(f).collect() }
    }

    fn zip_with(&self, other: &Cochain, f: impl Fn(&Element, &Element) -> Element) -> Cochain {
        assert_eq!((self.dim, self.arity), (other.dim, other.arity), "cochain shape mismatch");
        let table = self.table.iter().zip(&other.table).map(|(a, b)| f(a, b)).collect();
        Cochain { dim: self.dim, arity: self.arity, table }
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, f: &Scalar) -> Cochain {
        self.map_values(|e| e.scale(f))
    }

    /// Transposed arity-2 cochain `(a, b) ↦ self(b, a)`.
    pub fn opposite(&self) -> Cochain {
        assert_eq!(self.arity, 2);
        let d = self.dim;
        let table = (0..d * d).map(|idx| self.get2(idx % d, idx / d).clone()).collect();
        Cochain { dim: d, arity: 2, table }
    }
}
