//! Exhaustive basis-triple scans of trilinear identities.
//!
//! By multilinearity an identity between products holds on all of `A` iff it
//! holds on every basis triple, so these scans decide associativity,
//! compatibility and the Jacobi identity exactly. Each returns the first
//! failing triple in lexicographic order.

use crate::algebra::Accumulator;
use crate::hochschild::Cochain;

/// First triple with `(e_i e_j) e_k ≠ e_i (e_j e_k)`.
pub fn associator_witness(p: &Cochain) -> Option<[usize; 3]> {
    assert_eq!(p.arity(), 2);
    let d = p.dim();
    let mut acc = Accumulator::new(d);
    for i in 0..d {
        for j in 0..d {
            let ij = p.get2(i, j);
            for k in 0..d {
                p.left_into(&mut acc, false, ij, k);
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

/// First triple where the mixed associator
/// `p(q(a,b),c) + q(p(a,b),c) − p(a,q(b,c)) − q(a,p(b,c))` is nonzero.
pub fn mixed_associator_witness(p: &Cochain, q: &Cochain) -> Option<[usize; 3]> {
    assert_eq!((p.arity(), q.arity()), (2, 2));
    assert_eq!(p.dim(), q.dim(), "products over different algebras");
    let d = p.dim();
    let mut acc = Accumulator::new(d);
    for i in 0..d {
        for j in 0..d {
            let (pij, qij) = (p.get2(i, j), q.get2(i, j));
            for k in 0..d {
                p.left_into(&mut acc, false, qij, k);
                q.left_into(&mut acc, false, pij, k);
                p.right_into(&mut acc, true, i, q.get2(j, k));
                q.right_into(&mut acc, true, i, p.get2(j, k));
                if !acc.is_zero() {
                    return Some([i, j, k]);
                }
                acc.clear();
            }
        }
    }
    None
}

/// First pair with `b(e_i, e_j) ≠ −b(e_j, e_i)`.
pub fn antisymmetry_witness(b: &Cochain) -> Option<[usize; 2]> {
    let d = b.dim();
    for i in 0..d {
        for j in i..d {
            if b.get2(i, j) != &-b.get2(j, i) {
                return Some([i, j]);
            }
        }
    }
    None
}

/// First triple where `[[a,b],c] + [[b,c],a] + [[c,a],b] ≠ 0` for the
/// bracket `b`.
///
/// For antisymmetric brackets the Jacobiator is alternating, so only strictly
/// increasing triples are scanned; otherwise every triple is.
pub fn jacobi_witness(b: &Cochain) -> Option<[usize; 3]> {
    assert_eq!(b.arity(), 2);
    let d = b.dim();
    let alternating = antisymmetry_witness(b).is_none();
    let mut acc = Accumulator::new(d);
    for i in 0..d {
        let j0 = if alternating { i + 1 } else { 0 };
        for j in j0..d {
            let k0 = if alternating { j + 1 } else { 0 };
            for k in k0..d {
                b.left_into(&mut acc, false, b.get2(i, j), k);
                b.left_into(&mut acc, false, b.get2(j, k), i);
                b.left_into(&mut acc, false, b.get2(k, i), j);
                if !acc.is_zero() {
                    return Some([i, j, k]);
                }
                acc.clear();
            }
        }
    }
    None
}

/// The commutator bracket `(a, b) ↦ p(a,b) − p(b,a)`.
pub fn commutator(p: &Cochain) -> Cochain {
    p.sub(&p.opposite())
}
