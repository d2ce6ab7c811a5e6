use alloc::vec;

use super::Cochain;
use crate::algebra::Accumulator;
use crate::{Error, Result};

fn odd(x: i64) -> bool {
    x.rem_euclid(2) == 1
}

/// The pre-Lie composition
/// `(P ∘̄ Q)(a₁,…) = Σ_{i=1}^{p} (−1)^{(i−1)(q−1)} P(a₁,…,a_{i−1}, Q(a_i,…,a_{i+q−1}), a_{i+q},…)`.
///
/// The result has arity `p + q − 1`; composing into a 0-cochain `P` gives zero.
pub fn composition(p: &Cochain, q: &Cochain) -> Result<Cochain> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: q.dim() });
    }
    let (pa, qa) = (p.arity(), q.arity());
    if pa + qa == 0 {
        return Err(Error::precondition("composition of two 0-cochains has no arity"));
    }
    let out_arity = pa + qa - 1;
    let d = p.dim();
    let mut acc = Accumulator::new(d);
    let mut slot = vec![0usize; pa];
    Cochain::from_fn(d, out_arity, |t| {
        for i in 0..pa {
            let negate = odd(i as i64 * (qa as i64 - 1));
            let inner = q.get(&t[i..i + qa]);
            for (m, c) in inner.terms() {
                slot[..i].copy_from_slice(&t[..i]);
                slot[i] = *m;
                slot[i + 1..].copy_from_slice(&t[i + qa..]);
                acc.add_signed(negate, c, p.get(&slot));
            }
        }
        acc.take()
    })
}

/// `[P, Q]_G = P ∘̄ Q − (−1)^{(p−1)(q−1)} Q ∘̄ P`.
///
/// With the product `μ` as a 2-cochain this gives `[μ, N]_G = μ_N` and
/// `[μ, μ]_G = 2·(associator)`; against the coboundary,
/// `[μ, h]_G = −δh`, `[μ, N]_G = δN` and `[μ, α]_G = −δα` in arities 0, 1, 2.
pub fn gerstenhaber_bracket(p: &Cochain, q: &Cochain) -> Result<Cochain> {
    let (pa, qa) = (p.arity() as i64, q.arity() as i64);
    if pa + qa > 4 {
        return Err(Error::ArityOverflow { arity: (pa + qa - 1) as usize });
    }
    let pq = composition(p, q)?;
    let qp = composition(q, p)?;
    Ok(if odd((pa - 1) * (qa - 1)) { pq.add(&qp) } else { pq.sub(&qp) })
}
