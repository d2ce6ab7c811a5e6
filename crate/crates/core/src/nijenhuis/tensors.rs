use super::deform::{deform_cochain, require_nijenhuis};
use crate::algebra::{builders, Accumulator, Algebra, Decomposition, Element, Operator, Part};
use crate::exactnum::Scalar;
use crate::Result;

/// First basis pair violating
/// `N₁(A ∘_{N₂} B) + N₂(A ∘_{N₁} B) = N₁(A)N₂(B) + N₂(A)N₁(B)`.
pub fn compatibility_witness(alg: &Algebra, n1: &Operator, n2: &Operator) -> Result<Option<[usize; 2]>> {
    require_nijenhuis(alg, n1)?;
    require_nijenhuis(alg, n2)?;
    let mu = alg.structure();
    let (d1, d2) = (deform_cochain(mu, n1), deform_cochain(mu, n2));
    let d = alg.dim();
    let mut acc = Accumulator::new(d);
    for i in 0..d {
        for j in 0..d {
            n1.apply_into(&mut acc, &Scalar::ONE, d2.get2(i, j));
            n2.apply_into(&mut acc, &Scalar::ONE, d1.get2(i, j));
            for (a, b) in [(n1, n2), (n2, n1)] {
                for (m, c) in a.column(i).terms() {
                    for (l, e) in b.column(j).terms() {
                        acc.sub_scaled(&(c * e), mu.get2(*m, *l));
                    }
                }
            }
            if !acc.is_zero() {
                return Ok(Some([i, j]));
            }
            acc.clear();
        }
    }
    Ok(None)
}

/// Compatibility of two Nijenhuis tensors; equivalent to `N₁ + N₂` being
/// Nijenhuis. Errors if either input is not a Nijenhuis tensor.
pub fn tensors_compatible(alg: &Algebra, n1: &Operator, n2: &Operator) -> Result<bool> {
    Ok(compatibility_witness(alg, n1, n2)?.is_none())
}

/// `λ₁P₁ + λ₂P₂` for a splitting into two subalgebras.
pub fn projection_tensor(dec: &Decomposition, l1: &Scalar, l2: &Scalar) -> Result<Operator> {
    dec.require_subalgebra(Part::First)?;
    dec.require_subalgebra(Part::Second)?;
    let diag: alloc::vec::Vec<Scalar> =
        (0..dec.dim()).map(|i| if dec.in_part1(i) { l1.clone() } else { l2.clone() }).collect();
    Ok(Operator::diagonal(&diag))
}

/// `N_K(A) = KA`.
pub fn left_multiplication_tensor(alg: &Algebra, k: &Element) -> Result<Operator> {
    Operator::left_multiplication(alg, k)
}

/// `N_λ(A) = (1−λ)A₁ + λA`, i.e. `P₁ + λP₂`.
pub fn lambda_tensor(dec: &Decomposition, lambda: &Scalar) -> Result<Operator> {
    projection_tensor(dec, &Scalar::ONE, lambda)
}

/// `A ↦ KΔ(A)` on `M_n`, with `Δ` the diagonal part and `K = diag(k)`.
pub fn diagonal_part_multiplication(n: usize, k: &[Scalar]) -> Operator {
    assert_eq!(k.len(), n, "one diagonal entry per row");
    let d = n * n;
    Operator::from_fn(d, |j| {
        let (p, q) = (j / n, j % n);
        if p == q {
            Element::basis(d, j).scale(&k[p])
        } else {
            Element::zero(d)
        }
    })
}

/// Left multiplication by `diag(k)` on `M_n`, for callers without the algebra at hand.
pub fn diagonal_left_multiplication(n: usize, k: &[Scalar]) -> Operator {
    assert_eq!(k.len(), n, "one diagonal entry per row");
    let d = n * n;
    Operator::from_fn(d, |j| Element::basis(d, j).scale(&k[j / n]))
}

/// The decomposition of `M_n` into diagonal and off-diagonal matrix units.
pub fn diagonal_split(alg: &Algebra, n: usize) -> Result<Decomposition> {
    Decomposition::new(alg, &builders::diagonal_indices(n))
}
