//! Concrete algebras: matrix algebras, triangular matrices, dual numbers,
//! spans of explicit matrices, and the truncated oscillator.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Algebra, Element, Operator};
use crate::exactnum::{Matrix, Scalar};
use crate::hochschild::Cochain;
use crate::{Error, Result};

/// Label of the matrix unit `E_pq` (0-based `p`, `q`, printed 1-based).
pub fn matrix_unit_label(n: usize, p: usize, q: usize) -> String {
    if n < 10 {
        format!("E{}{}", p + 1, q + 1)
    } else {
        format!("E{},{}", p + 1, q + 1)
    }
}

/// Basis index of `E_pq` in [`full_matrix_algebra`]`(n)`.
pub fn matrix_unit(n: usize, p: usize, q: usize) -> usize {
    p * n + q
}

/// Algebra spanned by the matrix units `E_pq` for `(p, q)` in `units`,
/// which must be closed under `E_pq E_rs = δ_qr E_ps`.
fn matrix_unit_algebra(name: String, n: usize, units: &[(usize, usize)]) -> Algebra {
    let d = units.len();
    let index = |p: usize, q: usize| units.iter().position(|&u| u == (p, q));
    let mut entries = Vec::new();
    for (i, &(p, q)) in units.iter().enumerate() {
        for (j, &(r, s)) in units.iter().enumerate() {
            if q == r {
                let k = index(p, s).expect("matrix unit set not closed under multiplication");
                entries.push((i, j, k, Scalar::ONE));
            }
        }
    }
    let structure = Cochain::from_structure_constants(d, entries).expect("valid matrix unit table");
    let unit_terms: Vec<(usize, Scalar)> = (0..n).filter_map(|p| index(p, p)).map(|i| (i, Scalar::ONE)).collect();
    let unit = (unit_terms.len() == n).then(|| Element::from_terms(d, unit_terms));
    let basis = units.iter().map(|&(p, q)| matrix_unit_label(n, p, q)).collect();
    Algebra::trusted(name, basis, structure, unit)
}

/// `M_n(K)` with basis `E_pq` in row-major order.
pub fn full_matrix_algebra(n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::precondition("matrix size must be at least 1"));
    }
    let units: Vec<(usize, usize)> = (0..n).flat_map(|p| (0..n).map(move |q| (p, q))).collect();
    Ok(matrix_unit_algebra(format!("M{n}"), n, &units))
}

/// Upper-triangular `n×n` matrices, basis `E_pq` with `p ≤ q` in row-major order.
pub fn upper_triangular_algebra(n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::precondition("matrix size must be at least 1"));
    }
    let units: Vec<(usize, usize)> = (0..n).flat_map(|p| (p..n).map(move |q| (p, q))).collect();
    Ok(matrix_unit_algebra(format!("T{n}"), n, &units))
}

/// `K[ε]/(ε²)` with basis `(1, ε)`.
pub fn dual_numbers() -> Algebra {
    let structure = Cochain::from_structure_constants(
        2,
        [(0, 0, 0, Scalar::ONE), (0, 1, 1, Scalar::ONE), (1, 0, 1, Scalar::ONE)],
    )
    .expect("valid table");
    Algebra::trusted("dual", alloc::vec!["1".into(), "eps".into()], structure, Some(Element::basis(2, 0)))
}

/// Coordinates of a square matrix in the basis of [`full_matrix_algebra`].
pub fn matrix_to_element(m: &Matrix) -> Element {
    let n = m.rows();
    assert_eq!(n, m.cols(), "square matrix required");
    Element::from_terms(n * n, (0..n).flat_map(|p| (0..n).map(move |q| (p * n + q, m[(p, q)].clone()))))
}

pub fn element_to_matrix(n: usize, x: &Element) -> Matrix {
    assert_eq!(x.dim(), n * n);
    let mut m = Matrix::zeros(n, n);
    for (i, v) in x.terms() {
        m[(i / n, i % n)] = v.clone();
    }
    m
}

/// `Σ_p diag[p] E_pp` in `M_n`.
pub fn diagonal_element(diag: &[Scalar]) -> Element {
    let n = diag.len();
    Element::from_terms(n * n, diag.iter().enumerate().map(|(p, v)| (p * n + p, v.clone())))
}

/// Basis indices of the diagonal units of `M_n`.
pub fn diagonal_indices(n: usize) -> Vec<usize> {
    (0..n).map(|p| p * n + p).collect()
}

/// Matrix transpose `E_pq ↦ E_qp` as an operator on `M_n`.
pub fn transpose_operator(n: usize) -> Operator {
    Operator::from_fn(n * n, |j| Element::basis(n * n, (j % n) * n + j / n))
}

/// The algebra spanned by explicit `n×n` matrices, in that basis.
///
/// The matrices must be linearly independent and their span closed under
/// matrix multiplication; structure constants come from exact solves.
pub fn matrix_span_algebra(name: &str, labels: &[&str], mats: &[Matrix]) -> Result<Algebra> {
    let d = mats.len();
    if labels.len() != d || d == 0 {
        return Err(Error::precondition("one label per matrix required"));
    }
    let n = mats[0].rows();
    let coords: Vec<Vec<Scalar>> = mats.iter().map(|m| matrix_to_element(m).to_dense()).collect();
    // columns are the spanning matrices flattened
    let mut span = Matrix::zeros(n * n, d);
    for (j, c) in coords.iter().enumerate() {
        for (i, v) in c.iter().enumerate() {
            span[(i, j)] = v.clone();
        }
    }
    if span.rank() != d {
        return Err(Error::precondition("spanning matrices are linearly dependent"));
    }
    let express = |m: &Matrix| -> Option<Vec<Scalar>> {
        let sol = span.solve_affine(&matrix_to_element(m).to_dense()).ok()?;
        Some(sol.particular)
    };
    let mut entries = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let prod = mats[i].mul(&mats[j]);
            let c = express(&prod).ok_or_else(|| Error::precondition_at("span is not closed", &[i, j]))?;
            entries.extend(c.into_iter().enumerate().map(|(k, v)| (i, j, k, v)));
        }
    }
    let structure = Cochain::from_structure_constants(d, entries)?;
    let unit = express(&Matrix::identity(n)).map(|c| Element::from_dense(&c));
    let basis = labels.iter().map(|l| String::from(*l)).collect();
    Algebra::new(name, basis, structure, unit)
}

/// `M_2` in the basis `I, A = diag(1,−1), B = [[0,1],[1,0]], C = [[0,1],[−1,0]]`.
pub fn m2_iabc_algebra() -> Algebra {
    let mats = [
        Matrix::from_i64(2, 2, &[1, 0, 0, 1]),
        Matrix::from_i64(2, 2, &[1, 0, 0, -1]),
        Matrix::from_i64(2, 2, &[0, 1, 1, 0]),
        Matrix::from_i64(2, 2, &[0, 1, -1, 0]),
    ];
    matrix_span_algebra("M2(I,A,B,C)", &["I", "A", "B", "C"], &mats).expect("I, A, B, C span M2")
}

/// Finite truncation of the oscillator: `M_dim` with unnormalized ladder
/// operators `a|n⟩ = n|n−1⟩`, `a†|n⟩ = |n+1⟩` (the top state is annihilated)
/// and the number operator `H = diag(0, 1, …, dim−1)`.
#[derive(Clone, Debug)]
pub struct Oscillator {
    pub algebra: Algebra,
    /// Number of retained states; the algebra is `M_size`.
    pub size: usize,
    /// Band width of the operators of interest; recorded, not enforced.
    pub band: usize,
    pub a: Element,
    pub adag: Element,
    pub h: Element,
}

pub fn banded_oscillator_algebra(dim: usize, band: usize) -> Result<Oscillator> {
    if dim < 2 || band < 1 {
        return Err(Error::precondition("oscillator truncation needs dim ≥ 2 and band ≥ 1"));
    }
    let units: Vec<(usize, usize)> = (0..dim).flat_map(|p| (0..dim).map(move |q| (p, q))).collect();
    let algebra = matrix_unit_algebra(format!("oscillator{dim}"), dim, &units);
    let d = dim * dim;
    // matrix entry (row, col) = coefficient of e_row in the image of e_col
    let a = Element::from_terms(d, (1..dim).map(|n| (matrix_unit(dim, n - 1, n), Scalar::int(n as i64))));
    let adag = Element::from_terms(d, (0..dim - 1).map(|n| (matrix_unit(dim, n + 1, n), Scalar::ONE)));
    let h = Element::from_terms(d, (0..dim).map(|n| (matrix_unit(dim, n, n), Scalar::int(n as i64))));
    Ok(Oscillator { algebra, size: dim, band, a, adag, h })
}
