use alloc::vec;
use alloc::vec::Vec;

use super::cochain::{table_len, Tuples};
use super::Cochain;
use crate::algebra::{Accumulator, Algebra};
use crate::exactnum::{Scalar, SparseEchelon};
use crate::{Error, Result};

/// Largest admissible `d^{n+2}` for a cohomology computation in degree `n`.
pub const COHOMOLOGY_LIMIT: u128 = 1_000_000;

/// Highest arity accepted by [`coboundary`].
const MAX_COBOUNDARY_ARITY: usize = 2;

/// The Hochschild coboundary with coefficients in the algebra itself:
///
/// `(δα)(a₁,…,a_{n+1}) = a₁α(a₂,…) + Σᵢ (−1)^i α(…,a_i a_{i+1},…) + (−1)^{n+1} α(a₁,…,a_n)a_{n+1}`
pub fn coboundary(alg: &Algebra, c: &Cochain) -> Result<Cochain> {
    let n = c.arity();
    if n > MAX_COBOUNDARY_ARITY {
        return Err(Error::ArityOverflow { arity: n + 1 });
    }
    if c.dim() != alg.dim() {
        return Err(Error::DimensionMismatch { expected: alg.dim(), found: c.dim() });
    }
    let d = alg.dim();
    let mu = alg.structure();
    let mut acc = Accumulator::new(d);
    let mut slot = vec![0usize; n];
    Cochain::from_fn(d, n + 1, |t| {
        mu.right_into(&mut acc, false, t[0], c.get(&t[1..]));
        for i in 1..=n {
            let negate = i % 2 == 1;
            for (m, coef) in mu.get2(t[i - 1], t[i]).terms() {
                slot[..i - 1].copy_from_slice(&t[..i - 1]);
                slot[i - 1] = *m;
                slot[i..].copy_from_slice(&t[i + 1..]);
                acc.add_signed(negate, coef, c.get(&slot));
            }
        }
        mu.left_into(&mut acc, (n + 1) % 2 == 1, c.get(&t[..n]), t[n]);
        acc.take()
    })
}

pub fn is_cocycle(alg: &Algebra, c: &Cochain) -> Result<bool> {
    Ok(coboundary(alg, c)?.is_zero())
}

/// Sparse image under `δ` of the basis `n`-cochain sending the tuple `t` to
/// `e_k` and every other tuple to zero, as `(flat output position, coefficient)`.
///
/// `preimage[m]` lists every `(x, y, c)` with `e_x e_y` having coefficient
/// `c` on `e_m`.
fn basis_coboundary(
    alg: &Algebra,
    preimage: &[Vec<(usize, usize, Scalar)>],
    t: &[usize],
    k: usize,
    out: &mut Vec<(usize, Scalar)>,
) {
    let d = alg.dim();
    let n = t.len();
    let mu = alg.structure();
    let flat = |tuple: &mut dyn Iterator<Item = usize>, coord: usize| tuple.fold(0, |acc, i| acc * d + i) * d + coord;
    out.clear();
    for a in 0..d {
        for (coord, c) in mu.get2(a, k).terms() {
            out.push((flat(&mut core::iter::once(a).chain(t.iter().copied()), *coord), c.clone()));
        }
    }
    for i in 1..=n {
        let sign_negative = i % 2 == 1;
        for (x, y, c) in &preimage[t[i - 1]] {
            let mut tuple = t[..i - 1].iter().copied().chain([*x, *y]).chain(t[i..].iter().copied());
            let coef = if sign_negative { -c } else { c.clone() };
            out.push((flat(&mut tuple, k), coef));
        }
    }
    for a in 0..d {
        for (coord, c) in mu.get2(k, a).terms() {
            let coef = if n.is_multiple_of(2) { -c } else { c.clone() };
            out.push((flat(&mut t.iter().copied().chain(core::iter::once(a)), *coord), coef));
        }
    }
}

/// Rank of `δ_n : C^n → C^{n+1}`, by row-reducing the images of basis cochains.
fn coboundary_rank(alg: &Algebra, n: usize, preimage: &[Vec<(usize, usize, Scalar)>]) -> usize {
    let d = alg.dim();
    let cols = d.pow(n as u32 + 2);
    let mut ech = SparseEchelon::new(cols);
    let mut row = Vec::new();
    for t in Tuples::new(d, n) {
        for k in 0..d {
            basis_coboundary(alg, preimage, &t, k, &mut row);
            ech.insert(row.drain(..));
        }
    }
    ech.rank()
}

/// `dim H^n(A, A) = dim ker δ_n − rank δ_{n−1}` for `n ≤ 2`.
pub fn cohomology_dimension(alg: &Algebra, n: usize) -> Result<usize> {
    if n > MAX_COBOUNDARY_ARITY {
        return Err(Error::ArityOverflow { arity: n });
    }
    let d = alg.dim();
    let size = (d as u128).pow(n as u32 + 2);
    if size > COHOMOLOGY_LIMIT {
        return Err(Error::TooLarge { what: "coboundary matrix", size, limit: COHOMOLOGY_LIMIT });
    }
    table_len(d, n + 1)?;
    let mut preimage: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); d];
    for x in 0..d {
        for y in 0..d {
            for (m, c) in alg.structure().get2(x, y).terms() {
                preimage[*m].push((x, y, c.clone()));
            }
        }
    }
    let cochains = d.pow(n as u32 + 1);
    let rank_here = coboundary_rank(alg, n, &preimage);
    let rank_below = if n == 0 { 0 } else { coboundary_rank(alg, n - 1, &preimage) };
    Ok(cochains - rank_here - rank_below)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builders::transpose_operator;
    use crate::algebra::{dual_numbers, full_matrix_algebra, upper_triangular_algebra, Element};

    #[test]
    fn arity_zero_is_the_commutator() {
        let m2 = full_matrix_algebra(2).unwrap();
        let h = &m2.e("E12") + &m2.e("E22").scale(&Scalar::int(3));
        let dh = coboundary(&m2, &Cochain::from_element(h.clone())).unwrap();
        for j in 0..4 {
            let a = m2.basis_element(j);
            assert_eq!(dh.get(&[j]), &(&m2.mul(&a, &h) - &m2.mul(&h, &a)));
        }
    }

    #[test]
    fn transpose_is_not_a_cocycle() {
        let m2 = full_matrix_algebra(2).unwrap();
        let t = Cochain::from_operator(&transpose_operator(2));
        let dt = coboundary(&m2, &t).unwrap();
        let (e11, e12) = (m2.index_of("E11").unwrap(), m2.index_of("E12").unwrap());
        assert_eq!(dt.get(&[e11, e12]), &(&m2.e("E12") - &m2.e("E21")));
        assert!(!is_cocycle(&m2, &t).unwrap());
    }

    #[test]
    fn the_product_is_a_cocycle() {
        for alg in [full_matrix_algebra(2).unwrap(), dual_numbers()] {
            assert!(is_cocycle(&alg, alg.structure()).unwrap());
        }
    }

    #[test]
    fn arity_three_is_refused() {
        let m2 = full_matrix_algebra(2).unwrap();
        let c = Cochain::zero(4, 3).unwrap();
        assert_eq!(coboundary(&m2, &c).unwrap_err(), Error::ArityOverflow { arity: 4 });
    }

    #[test]
    fn basis_images_agree_with_coboundary() {
        let t3 = upper_triangular_algebra(2).unwrap();
        let d = t3.dim();
        let mut preimage: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); d];
        for x in 0..d {
            for y in 0..d {
                for (m, c) in t3.structure().get2(x, y).terms() {
                    preimage[*m].push((x, y, c.clone()));
                }
            }
        }
        let mut row = Vec::new();
        for n in 0..=2 {
            for t in Tuples::new(d, n) {
                for k in 0..d {
                    let alpha = Cochain::from_fn(d, n, |s| {
                        if s == &t[..] { Element::basis(d, k) } else { Element::zero(d) }
                    })
                    .unwrap();
                    let full = coboundary(&t3, &alpha).unwrap();
                    basis_coboundary(&t3, &preimage, &t, k, &mut row);
                    let mut dense = vec![Scalar::ZERO; d.pow(n as u32 + 2)];
                    for (pos, c) in row.drain(..) {
                        dense[pos] += &c;
                    }
                    let expected: Vec<Scalar> = full.table().iter().flat_map(Element::to_dense).collect();
                    assert_eq!(dense, expected, "arity {n}, tuple {t:?}, target {k}");
                }
            }
        }
    }

    #[test]
    fn matrix_algebra_cohomology() {
        let m2 = full_matrix_algebra(2).unwrap();
        assert_eq!(cohomology_dimension(&m2, 0).unwrap(), 1);
        assert_eq!(cohomology_dimension(&m2, 1).unwrap(), 0);
        assert_eq!(cohomology_dimension(&m2, 2).unwrap(), 0);
    }

    #[test]
    fn dual_number_cohomology() {
        let dual = dual_numbers();
        assert_eq!(cohomology_dimension(&dual, 0).unwrap(), 2);
        assert_eq!(cohomology_dimension(&dual, 1).unwrap(), 1);
    }

    #[test]
    fn size_guard() {
        let big = full_matrix_algebra(6).unwrap();
        assert!(matches!(cohomology_dimension(&big, 2), Err(Error::TooLarge { .. })));
        assert!(matches!(cohomology_dimension(&big, 3), Err(Error::ArityOverflow { .. })));
    }
}
