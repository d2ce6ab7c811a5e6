use alloc::format;
use alloc::vec::Vec;

use super::{Associativity, Product};
use crate::algebra::{Accumulator, Algebra, Operator};
use crate::exactnum::Scalar;
use crate::hochschild::{coboundary, scan, Cochain};
use crate::report::Check;
use crate::{Error, Result};

fn check_operator(alg: &Algebra, n: &Operator) -> Result<()> {
    if n.dim() != alg.dim() {
        return Err(Error::DimensionMismatch { expected: alg.dim(), found: n.dim() });
    }
    Ok(())
}

/// `p_N(a, b) = p(N a, b) + p(a, N b) − N p(a, b)` for an arbitrary product `p`.
pub fn deform_cochain(p: &Cochain, n: &Operator) -> Cochain {
    assert_eq!(p.dim(), n.dim(), "operator and product over different spaces");
    let d = p.dim();
    let mut acc = Accumulator::new(d);
    let minus_one = -Scalar::ONE;
    Cochain::from_fn(d, 2, |t| {
        let (i, j) = (t[0], t[1]);
        p.left_into(&mut acc, false, n.column(i), j);
        p.right_into(&mut acc, false, i, n.column(j));
        n.apply_into(&mut acc, &minus_one, p.get2(i, j));
        acc.take()
    })
    .expect("arity-2 table of an existing product")
}

/// The deformed product `A ∘_N B = N(A)B + AN(B) − N(AB)`.
///
/// Associativity is decided over all basis triples. The algebra's unit is
/// kept exactly when `N(1) = 1`.
pub fn deform(alg: &Algebra, n: &Operator) -> Result<Product> {
    let mut p = deform_unchecked(alg, n)?;
    p.check_associativity();
    Ok(p)
}

/// As [`deform`], leaving associativity unknown.
pub fn deform_unchecked(alg: &Algebra, n: &Operator) -> Result<Product> {
    check_operator(alg, n)?;
    let cochain = deform_cochain(alg.structure(), n);
    let unit = alg.unit().filter(|u| &n.apply(u) == *u).cloned();
    Ok(Product::with_flags(cochain, Associativity::Unknown, unit))
}

/// `T_N(a, b) = N(a ∘_N b) − N(a)N(b)` relative to the product `p`.
pub fn torsion_cochain(p: &Cochain, n: &Operator) -> Cochain {
    let deformed = deform_cochain(p, n);
    let d = p.dim();
    let mut acc = Accumulator::new(d);
    Cochain::from_fn(d, 2, |t| {
        let (i, j) = (t[0], t[1]);
        n.apply_into(&mut acc, &Scalar::ONE, deformed.get2(i, j));
        let (ni, nj) = (n.column(i), n.column(j));
        for (m, c) in ni.terms() {
            for (l, e) in nj.terms() {
                acc.sub_scaled(&(c * e), p.get2(*m, *l));
            }
        }
        acc.take()
    })
    .expect("arity-2 table of an existing product")
}

/// The Nijenhuis torsion `T_N(A,B) = N(A ∘_N B) − N(A)N(B)`.
pub fn torsion(alg: &Algebra, n: &Operator) -> Result<Cochain> {
    check_operator(alg, n)?;
    Ok(torsion_cochain(alg.structure(), n))
}

/// First basis pair with nonzero torsion.
pub fn torsion_witness(alg: &Algebra, n: &Operator) -> Result<Option<[usize; 2]>> {
    Ok(torsion(alg, n)?.first_nonzero().map(|t| [t[0], t[1]]))
}

pub fn is_nijenhuis(alg: &Algebra, n: &Operator) -> Result<bool> {
    Ok(torsion_witness(alg, n)?.is_none())
}

pub(crate) fn require_nijenhuis(alg: &Algebra, n: &Operator) -> Result<()> {
    match torsion_witness(alg, n)? {
        Some(witness) => Err(Error::NotNijenhuis { witness }),
        None => Ok(()),
    }
}

/// Both sides of the associativity criterion, computed independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub deformed_associative: bool,
    pub torsion_is_2cocycle: bool,
    /// Failing triple of the associator of `μ_N`.
    pub associator_witness: Option<[usize; 3]>,
    /// Failing triple of `δT_N`.
    pub cocycle_witness: Option<[usize; 3]>,
}

impl CriterionReport {
    pub fn agrees(&self) -> bool {
        self.deformed_associative == self.torsion_is_2cocycle
    }
}

/// `μ_N` is associative iff `T_N` is a Hochschild 2-cocycle; both sides are
/// evaluated so callers can confirm they agree.
pub fn associativity_criterion(alg: &Algebra, n: &Operator) -> Result<CriterionReport> {
    check_operator(alg, n)?;
    let deformed = deform_cochain(alg.structure(), n);
    let associator_witness = scan::associator_witness(&deformed);
    let dt = coboundary(alg, &torsion_cochain(alg.structure(), n))?;
    let cocycle_witness = dt.first_nonzero().map(|t| [t[0], t[1], t[2]]);
    Ok(CriterionReport {
        deformed_associative: associator_witness.is_none(),
        torsion_is_2cocycle: cocycle_witness.is_none(),
        associator_witness,
        cocycle_witness,
    })
}

/// First basis triple where the sum of mixed associators of `p1` and `p2` is nonzero.
pub fn mixed_associator_witness(p1: &Product, p2: &Product) -> Result<Option<[usize; 3]>> {
    if p1.dim() != p2.dim() {
        return Err(Error::DimensionMismatch { expected: p1.dim(), found: p2.dim() });
    }
    Ok(scan::mixed_associator_witness(p1.cochain(), p2.cochain()))
}

/// Compatibility of two products: every mixed associator sum vanishes, which
/// for associative products means every pencil `p1 + λp2` is associative.
pub fn mixed_associator_compatible(p1: &Product, p2: &Product) -> Result<bool> {
    Ok(mixed_associator_witness(p1, p2)?.is_none())
}

/// `μ_{N^k}`, with `N^0` the identity.
pub fn power_product(alg: &Algebra, n: &Operator, k: u32) -> Result<Product> {
    check_operator(alg, n)?;
    deform(alg, &n.pow(k))
}

/// Largest power accepted by [`verify_hierarchy`].
pub const MAX_HIERARCHY_POWER: u32 = 6;

/// Result of [`verify_hierarchy`]: one [`Check`] per relation instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HierarchyReport {
    pub max_power: u32,
    pub checks: Vec<Check>,
}

impl HierarchyReport {
    pub fn all_pass(&self) -> bool {
        crate::report::all_pass(&self.checks)
    }
}

fn first_difference(a: &Cochain, b: &Cochain) -> Option<Vec<usize>> {
    a.sub(b).first_nonzero()
}

/// Checks, for a Nijenhuis tensor `N` and all exponents with `i+k ≤ maxk`
/// and `r+k ≤ maxk`:
///
/// * `N^r(A ∘_{N^{k+r}} B) = N^r(A) ∘_{N^k} N^r(B)`,
/// * `(μ_{N^i})_{N^k} = μ_{N^{i+k}}`,
/// * associativity of every `μ_{N^k}`, and
/// * pairwise compatibility of the `μ_{N^k}`.
pub fn verify_hierarchy(alg: &Algebra, n: &Operator, maxk: u32) -> Result<HierarchyReport> {
    check_operator(alg, n)?;
    if maxk > MAX_HIERARCHY_POWER {
        return Err(Error::precondition(format!("max power {maxk} exceeds {MAX_HIERARCHY_POWER}")));
    }
    require_nijenhuis(alg, n)?;
    let d = alg.dim();
    let powers: Vec<Operator> = (0..=maxk).map(|k| n.pow(k)).collect();
    let products: Vec<Cochain> = powers.iter().map(|nk| deform_cochain(alg.structure(), nk)).collect();
    let mut checks = Vec::new();

    for r in 0..=maxk {
        for k in 0..=maxk - r {
            let nr = &powers[r as usize];
            let lhs = products[(k + r) as usize].map_values(|v| nr.apply(v));
            let rhs = Cochain::from_fn(d, 2, |t| {
                products[k as usize].mul(nr.column(t[0]), nr.column(t[1]))
            })?;
            checks.push(Check::from_witness(
                format!("N^{r}(A∘_{{N^{}}}B) = N^{r}(A)∘_{{N^{k}}}N^{r}(B)", k + r),
                first_difference(&lhs, &rhs),
            ));
        }
    }
    for i in 0..=maxk {
        for k in 0..=maxk - i {
            let iterated = deform_cochain(&products[i as usize], &powers[k as usize]);
            checks.push(Check::from_witness(
                format!("(μ_{{N^{i}}})_{{N^{k}}} = μ_{{N^{}}}", i + k),
                first_difference(&iterated, &products[(i + k) as usize]),
            ));
        }
    }
    for k in 0..=maxk {
        let w = scan::associator_witness(&products[k as usize]).map(|t| t.to_vec());
        checks.push(Check::from_witness(format!("μ_{{N^{k}}} associative"), w));
    }
    for k in 0..=maxk {
        for l in k + 1..=maxk {
            let w = scan::mixed_associator_witness(&products[k as usize], &products[l as usize]).map(|t| t.to_vec());
            checks.push(Check::from_witness(format!("μ_{{N^{k}}} compatible with μ_{{N^{l}}}"), w));
        }
    }
    Ok(HierarchyReport { max_power: maxk, checks })
}
