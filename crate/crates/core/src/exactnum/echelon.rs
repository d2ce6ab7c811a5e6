//! Incremental sparse Gaussian elimination.
//!
//! Rows are inserted one at a time and reduced against the current pivots, so
//! tall sparse systems (tens of thousands of equations over a few hundred
//! unknowns) never need to be materialized densely.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{AffineSolution, Inconsistent, Scalar};

/// Sorted `(column, value)` pairs with no explicit zeros.
pub type SparseRow = Vec<(usize, Scalar)>;

#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    cols: usize,
    /// pivot column -> row whose leading entry (at that column) is 1
    pivots: BTreeMap<usize, SparseRow>,
}

fn entry(row: &[(usize, Scalar)], col: usize) -> Option<&Scalar> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|i| &row[i].1)
}

/// `a - f·b` on sorted sparse rows.
fn sub_scaled(a: &[(usize, Scalar)], f: &Scalar, b: &[(usize, Scalar)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - &(f * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl SparseEchelon {
    pub fn new(cols: usize) -> Self {
        SparseEchelon { cols, pivots: BTreeMap::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts a row given as arbitrary `(column, value)` pairs (duplicates
    /// are summed). Returns whether the rank increased.
    pub fn insert<I>(&mut self, entries: I) -> bool
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut row: SparseRow = Vec::new();
        let mut sorted: Vec<(usize, Scalar)> = entries.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        sorted.sort_by_key(|(c, _)| *c);
        for (c, v) in sorted {
            assert!(c < self.cols, "column {c} out of range");
            match row.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += &v,
                _ => row.push((c, v)),
            }
        }
        row.retain(|(_, v)| !v.is_zero());
        self.insert_sorted(row)
    }

    fn insert_sorted(&mut self, mut row: SparseRow) -> bool {
        loop {
            let Some((lead, coef)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(p) => row = sub_scaled(&row, &coef, p),
                None => {
                    let inv = coef.inv().expect("nonzero leading entry");
                    for (_, v) in row.iter_mut() {
                        *v = &*v * &inv;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Reduces every pivot row against all later pivots (reduced echelon form).
    fn reduce(&mut self) {
        let keys: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for &p in &keys {
            let prow = self.pivots[&p].clone();
            for (_, row) in self.pivots.range_mut(..p) {
                if let Some(f) = entry(row, p).cloned() {
                    *row = sub_scaled(row, &f, &prow);
                }
            }
        }
    }

    /// Null space basis of the first `unknowns` columns.
    pub fn kernel_basis(&mut self, unknowns: usize) -> Vec<Vec<Scalar>> {
        self.reduce();
        (0..unknowns)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|free| {
                let mut v = vec![Scalar::ZERO; unknowns];
                v[free] = Scalar::ONE;
                for (&p, row) in &self.pivots {
                    if p >= unknowns {
                        continue;
                    }
                    if let Some(f) = entry(row, free) {
                        v[p] = -f;
                    }
                }
                v
            })
            .collect()
    }

    /// Treats column `cols - 1` as the right-hand side of an augmented system.
    pub fn solve_augmented(&mut self) -> Result<AffineSolution, Inconsistent> {
        let rhs = self.cols - 1;
        if self.pivots.contains_key(&rhs) {
            return Err(Inconsistent);
        }
        let kernel = self.kernel_basis(rhs);
        let mut particular = vec![Scalar::ZERO; rhs];
        for (&p, row) in &self.pivots {
            if let Some(v) = entry(row, rhs) {
                particular[p] = v.clone();
            }
        }
        Ok(AffineSolution { particular, kernel })
    }
}
