//! The commutator side of associative deformations.

use super::Product;
use crate::algebra::{Accumulator, Algebra, Operator};
use crate::exactnum::Scalar;
use crate::hochschild::{scan, Cochain};
use crate::{Error, Result};

/// `[A, B] = A∘B − B∘A`.
pub fn lie_bracket_of(p: &Product) -> Cochain {
    scan::commutator(p.cochain())
}

/// `[A, B]_N = [N(A), B] + [A, N(B)] − N[A, B]`, built from the commutator
/// of the algebra alone.
pub fn lie_deformed_bracket(alg: &Algebra, n: &Operator) -> Result<Cochain> {
    if n.dim() != alg.dim() {
        return Err(Error::DimensionMismatch { expected: alg.dim(), found: n.dim() });
    }
    let bracket = scan::commutator(alg.structure());
    let d = alg.dim();
    let mut acc = Accumulator::new(d);
    let minus_one = -Scalar::ONE;
    Cochain::from_fn(d, 2, |t| {
        bracket.left_into(&mut acc, false, n.column(t[0]), t[1]);
        bracket.right_into(&mut acc, false, t[0], n.column(t[1]));
        n.apply_into(&mut acc, &minus_one, bracket.get2(t[0], t[1]));
        acc.take()
    })
}

/// First basis pair with `N([A,B]_N) ≠ [N(A), N(B)]`.
pub fn lie_nijenhuis_witness(alg: &Algebra, n: &Operator) -> Result<Option<[usize; 2]>> {
    let deformed = lie_deformed_bracket(alg, n)?;
    let d = alg.dim();
    for i in 0..d {
        for j in 0..d {
            let lhs = n.apply(deformed.get2(i, j));
            let rhs = alg.commutator(n.column(i), n.column(j));
            if lhs != rhs {
                return Ok(Some([i, j]));
            }
        }
    }
    Ok(None)
}

/// Whether `N` is a Nijenhuis tensor of the commutator Lie algebra.
pub fn lie_nijenhuis_check(alg: &Algebra, n: &Operator) -> Result<bool> {
    Ok(lie_nijenhuis_witness(alg, n)?.is_none())
}

/// `Σ_{σ ∈ S₃} sgn(σ) Ass(a_σ(1), a_σ(2), a_σ(3))` with
/// `Ass(a,b,c) = (a∘b)∘c − a∘(b∘c)`; vanishes iff the commutator of the
/// product satisfies the Jacobi identity.
pub fn total_skew_associator(p: &Product) -> Result<Cochain> {
    let c = p.cochain();
    let d = c.dim();
    const PERMS: [([usize; 3], bool); 6] = [
        ([0, 1, 2], false),
        ([1, 2, 0], false),
        ([2, 0, 1], false),
        ([1, 0, 2], true),
        ([0, 2, 1], true),
        ([2, 1, 0], true),
    ];
    let mut acc = Accumulator::new(d);
    Cochain::from_fn(d, 3, |t| {
        for (perm, odd) in PERMS {
            let (a, b, e) = (t[perm[0]], t[perm[1]], t[perm[2]]);
            c.left_into(&mut acc, odd, c.get2(a, b), e);
            c.right_into(&mut acc, !odd, a, c.get2(b, e));
        }
        acc.take()
    })
}
