//! Products and tensors built from a splitting `A = A₁ ⊕ A₂`.

use alloc::vec::Vec;

use super::deform::{is_nijenhuis, torsion_cochain};
use super::{Associativity, Product};
use crate::algebra::{Accumulator, Algebra, Decomposition, Element, Operator, Part};
use crate::exactnum::{Matrix, Scalar};
use crate::hochschild::Cochain;
use crate::{Error, Result};

/// `A ∘ B = A₁B₁ + P₂(A₁B₂ + A₂B₁)`; needs only `A₁` to be a subalgebra.
pub fn contraction_product(alg: &Algebra, dec: &Decomposition) -> Result<Product> {
    dec.require_subalgebra(Part::First)?;
    let d = alg.dim();
    let mu = alg.structure();
    let cochain = Cochain::from_fn(d, 2, |t| {
        let (i, j) = (t[0], t[1]);
        match (dec.in_part1(i), dec.in_part1(j)) {
            (true, true) => mu.get2(i, j).clone(),
            (false, false) => Element::zero(d),
            _ => dec.project(mu.get2(i, j), Part::Second),
        }
    })?;
    Ok(Product::with_flags(cochain, Associativity::Associative, alg.unit().cloned()))
}

/// `T_h⁻¹(T_h(A)T_h(B))` with `T_h = P₁ + hP₂`, for `h ≠ 0`.
pub fn conjugated_product(alg: &Algebra, dec: &Decomposition, h: &Scalar) -> Result<Cochain> {
    let h_inv = h.inv().ok_or_else(|| Error::precondition("conjugation parameter must be nonzero"))?;
    let scale = |x: &Element, f: &Scalar| {
        Element::from_terms(x.dim(), x.terms().iter().map(|(i, c)| (*i, if dec.in_part1(*i) { c.clone() } else { c * f })))
    };
    let d = alg.dim();
    Cochain::from_fn(d, 2, |t| {
        let a = scale(&alg.basis_element(t[0]), h);
        let b = scale(&alg.basis_element(t[1]), h);
        scale(&alg.mul(&a, &b), &h_inv)
    })
}

/// The `h → 0` limit of [`conjugated_product`], by exact Lagrange
/// interpolation of the quadratic `h ↦ T_h⁻¹(T_h(A)T_h(B))` at `h = 1, 1/2, 1/3`.
pub fn contraction_limit(alg: &Algebra, dec: &Decomposition) -> Result<Cochain> {
    let nodes = [Scalar::ONE, Scalar::ratio(1, 2), Scalar::ratio(1, 3)];
    let mut limit = Cochain::zero(alg.dim(), 2)?;
    for (i, hi) in nodes.iter().enumerate() {
        // Lagrange basis polynomial of node i evaluated at 0
        let mut weight = Scalar::ONE;
        for (j, hj) in nodes.iter().enumerate() {
            if i != j {
                weight = &weight * &(&-hj / &(hi - hj));
            }
        }
        limit = limit.add(&conjugated_product(alg, dec, hi)?.scale(&weight));
    }
    Ok(limit)
}

/// Restriction of `n` to the span of `part` as a square matrix, after
/// checking the span is invariant.
fn restrict(n: &Operator, part: &[usize], what: &str) -> Result<Matrix> {
    if !n.preserves(part) {
        return Err(Error::precondition(alloc::format!("{what} does not preserve its part")));
    }
    let mut m = Matrix::zeros(part.len(), part.len());
    for (c, &j) in part.iter().enumerate() {
        for (r, &i) in part.iter().enumerate() {
            m[(r, c)] = n.column(j).coord(i);
        }
    }
    Ok(m)
}

/// The product
/// `A ∘ B = A₁ ∘₁ B₁ + N₂⁻¹((N₁(A₁)N₂(B₂) + N₂(A₂)N'₁(B₁))₂)`.
///
/// `circ1` is read on pairs of part-1 basis elements, `n1`/`n1p` on part 1
/// and `n2` on part 2. Checked up front: part 1 is a subalgebra, `circ1` is an
/// associative product on it, `n1` and `n1p` map `circ1` homomorphically into
/// the original product, and `n2` is invertible on part 2. Associativity of the
/// result is then decided by scanning.
pub fn theorem5_product(
    alg: &Algebra,
    dec: &Decomposition,
    circ1: &Cochain,
    n1: &Operator,
    n1p: &Operator,
    n2: &Operator,
) -> Result<Product> {
    let d = alg.dim();
    for (dim, what) in [(circ1.dim(), d), (n1.dim(), d), (n1p.dim(), d), (n2.dim(), d)] {
        if dim != what {
            return Err(Error::DimensionMismatch { expected: what, found: dim });
        }
    }
    if circ1.arity() != 2 {
        return Err(Error::precondition("circ1 must be a product"));
    }
    dec.require_subalgebra(Part::First)?;
    let (p1, p2) = (dec.part1(), dec.part2());
    for &i in p1 {
        for &j in p1 {
            if circ1.get2(i, j).terms().iter().any(|(k, _)| !dec.in_part1(*k)) {
                return Err(Error::precondition_at("circ1 leaves part 1", &[i, j]));
            }
        }
    }
    if let Some(w) = part_associator_witness(circ1, p1) {
        return Err(Error::precondition_at("circ1 is not associative on part 1", &w));
    }
    restrict(n1, p1, "N1")?;
    restrict(n1p, p1, "N1'")?;
    for (op, what) in [(n1, "N1"), (n1p, "N1'")] {
        for &i in p1 {
            for &j in p1 {
                let lhs = op.apply(circ1.get2(i, j));
                let rhs = alg.mul(op.column(i), op.column(j));
                if lhs != rhs {
                    return Err(Error::precondition_at(alloc::format!("{what} is not a homomorphism"), &[i, j]));
                }
            }
        }
    }
    let n2_inv = restrict(n2, p2, "N2")?
        .inverse()
        .ok_or_else(|| Error::precondition("N2 is not invertible on part 2"))?;
    let apply_n2_inv = |x: &Element| -> Element {
        let coords: Vec<Scalar> = p2.iter().map(|&i| x.coord(i)).collect();
        let image = n2_inv.mul_vec(&coords);
        Element::from_terms(d, p2.iter().copied().zip(image))
    };

    let cochain = Cochain::from_fn(d, 2, |t| {
        let (i, j) = (t[0], t[1]);
        match (dec.in_part1(i), dec.in_part1(j)) {
            (true, true) => circ1.get2(i, j).clone(),
            (true, false) => apply_n2_inv(&dec.project(&alg.mul(n1.column(i), n2.column(j)), Part::Second)),
            (false, true) => apply_n2_inv(&dec.project(&alg.mul(n2.column(i), n1p.column(j)), Part::Second)),
            (false, false) => Element::zero(d),
        }
    })?;
    Product::checked(cochain)
}

/// Associator witness of `p` restricted to basis triples from `part`.
fn part_associator_witness(p: &Cochain, part: &[usize]) -> Option<[usize; 3]> {
    let mut acc = Accumulator::new(p.dim());
    for &i in part {
        for &j in part {
            for &k in part {
                p.left_into(&mut acc, false, p.get2(i, j), k);
                p.right_into(&mut acc, true, i, p.get2(j, k));
                if !acc.is_zero() {
                    return Some([i, j, k]);
                }
                acc.clear();
            }
        }
    }
    None
}

/// Outcome of [`extend_tensor`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    /// `N(A) = N₁(A₁)`.
    pub operator: Operator,
    pub is_nijenhuis: bool,
    /// `N₁²((A₂B₂)₁) = 0`, `N₁((N₁(A₁)B₂)₁ − N₁((A₁B₂)₁)) = 0` and
    /// `N₁((A₂N₁(B₁))₁ − N₁((A₂B₁)₁)) = 0`.
    pub conditions: [bool; 3],
    /// First failing basis pair of each condition.
    pub witnesses: [Option<[usize; 2]>; 3],
}

impl Extension {
    pub fn conditions_hold(&self) -> bool {
        self.conditions.iter().all(|&c| c)
    }
}

/// Extends a Nijenhuis tensor `N₁` of the subalgebra `A₁` by `N(A) = N₁(A₁)`
/// and evaluates the three conditions characterizing when the extension is
/// again Nijenhuis.
pub fn extend_tensor(alg: &Algebra, dec: &Decomposition, n1: &Operator) -> Result<Extension> {
    let d = alg.dim();
    if n1.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: n1.dim() });
    }
    dec.require_subalgebra(Part::First)?;
    let (p1, p2) = (dec.part1(), dec.part2());
    restrict(n1, p1, "N1")?;
    let operator = Operator::from_fn(d, |j| if dec.in_part1(j) { n1.column(j).clone() } else { Element::zero(d) });
    // Nijenhuis on A₁: the torsion of the extension restricted to part-1 pairs
    let torsion = torsion_cochain(alg.structure(), &operator);
    for &i in p1 {
        for &j in p1 {
            if !torsion.get2(i, j).is_zero() {
                return Err(Error::NotNijenhuis { witness: [i, j] });
            }
        }
    }
    let first = |x: &Element| dec.project(x, Part::First);
    let n = &operator;
    let scan = |left: &[usize], right: &[usize], f: &dyn Fn(usize, usize) -> Element| -> Option<[usize; 2]> {
        left.iter().flat_map(|&a| right.iter().map(move |&b| (a, b))).find(|&(a, b)| !f(a, b).is_zero()).map(|(a, b)| [a, b])
    };
    let w1 = scan(p2, p2, &|a, b| n.apply(&n.apply(&first(alg.structure().get2(a, b)))));
    let w2 = scan(p1, p2, &|a, b| {
        let lhs = first(&alg.mul(n.column(a), &alg.basis_element(b)));
        let rhs = n.apply(&first(alg.structure().get2(a, b)));
        n.apply(&(&lhs - &rhs))
    });
    let w3 = scan(p2, p1, &|a, b| {
        let lhs = first(&alg.mul(&alg.basis_element(a), n.column(b)));
        let rhs = n.apply(&first(alg.structure().get2(a, b)));
        n.apply(&(&lhs - &rhs))
    });
    let is_nij = is_nijenhuis(alg, &operator)?;
    Ok(Extension {
        operator,
        is_nijenhuis: is_nij,
        conditions: [w1.is_none(), w2.is_none(), w3.is_none()],
        witnesses: [w1, w2, w3],
    })
}
