use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::algebra::{Accumulator, Element, Operator};
use crate::exactnum::{Scalar, SparseEchelon};
use crate::hochschild::scan;
use crate::nijenhuis::{Associativity, Product};
use crate::{Error, Result};

fn same_dim(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch { expected: a, found: b });
    }
    Ok(())
}

/// First basis pair with `D(a∘b) ≠ D(a)∘b + a∘D(b)`.
pub fn derivation_witness(d: &Operator, p: &Product) -> Result<Option<[usize; 2]>> {
    same_dim(p.dim(), d.dim())?;
    let c = p.cochain();
    let n = p.dim();
    let mut acc = Accumulator::new(n);
    for i in 0..n {
        for j in 0..n {
            d.apply_into(&mut acc, &Scalar::ONE, c.get2(i, j));
            c.left_into(&mut acc, true, d.column(i), j);
            c.right_into(&mut acc, true, i, d.column(j));
            if !acc.is_zero() {
                return Ok(Some([i, j]));
            }
            acc.clear();
        }
    }
    Ok(None)
}

pub fn is_derivation(d: &Operator, p: &Product) -> Result<bool> {
    Ok(derivation_witness(d, p)?.is_none())
}

/// `B ↦ h∘B − B∘h`.
pub fn commutator_derivation(h: &Element, p: &Product) -> Result<Operator> {
    same_dim(p.dim(), h.dim())?;
    let c = p.cochain();
    let n = p.dim();
    let mut acc = Accumulator::new(n);
    Ok(Operator::from_fn(n, |j| {
        c.left_into(&mut acc, false, h, j);
        c.right_into(&mut acc, true, j, h);
        acc.take()
    }))
}

/// Outcome of solving `h∘e_j − e_j∘h = D(e_j)` for a generator `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationReport {
    pub is_derivation: bool,
    /// Leibniz failure when `is_derivation` is false.
    pub witness: Option<[usize; 2]>,
    /// A particular generator, when `D` is inner.
    pub generator: Option<Element>,
    /// Basis of the center of the product: generators are unique modulo its span.
    pub generator_ambiguity: Vec<Element>,
}

impl DerivationReport {
    pub fn is_inner(&self) -> bool {
        self.generator.is_some()
    }
}

/// Decides whether `D` is inner for `p` by solving the exact linear system
/// `h∘e_j − e_j∘h = D(e_j)` in the coordinates of `h`.
pub fn inner_generator(d: &Operator, p: &Product) -> Result<DerivationReport> {
    let witness = derivation_witness(d, p)?;
    let c = p.cochain();
    let n = p.dim();
    // equation (j, k): the e_k coordinate of h∘e_j − e_j∘h equals that of D(e_j)
    let mut rows: BTreeMap<(usize, usize), Vec<(usize, Scalar)>> = BTreeMap::new();
    for m in 0..n {
        for j in 0..n {
            for (k, v) in c.get2(m, j).terms() {
                rows.entry((j, *k)).or_default().push((m, v.clone()));
            }
            for (k, v) in c.get2(j, m).terms() {
                rows.entry((j, *k)).or_default().push((m, -v));
            }
        }
    }
    for j in 0..n {
        for (k, v) in d.column(j).terms() {
            rows.entry((j, *k)).or_default().push((n, v.clone()));
        }
    }
    let mut system = SparseEchelon::new(n + 1);
    for (_, row) in rows {
        system.insert(row);
    }
    let (generator, kernel) = match system.solve_augmented() {
        Ok(sol) => (Some(Element::from_dense(&sol.particular)), sol.kernel),
        Err(_) => (None, system.kernel_basis(n)),
    };
    Ok(DerivationReport {
        is_derivation: witness.is_none(),
        witness,
        generator,
        generator_ambiguity: kernel.iter().map(|v| Element::from_dense(v)).collect(),
    })
}

/// Outcome of [`is_bi_hamiltonian`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiHamiltonianReport {
    /// `D` is inner for both products.
    pub inner_wrt_both: bool,
    /// The sum of the two commutator brackets satisfies Jacobi.
    pub brackets_compatible: bool,
    pub jacobi_witness: Option<[usize; 3]>,
    /// Mixed-associator compatibility of the two products.
    pub products_compatible: bool,
    pub compatibility_witness: Option<[usize; 3]>,
    /// Inner for both with compatible commutator brackets.
    pub weak: bool,
    /// Weak, and the products themselves are compatible.
    pub strong: bool,
    pub generators: (Option<Element>, Option<Element>),
}

fn require_associative(p: &Product) -> Result<()> {
    let status = match p.associativity() {
        Associativity::Unknown => match scan::associator_witness(p.cochain()) {
            Some(w) => Associativity::NonAssociative(w),
            None => Associativity::Associative,
        },
        known => known,
    };
    match status {
        Associativity::NonAssociative(witness) => Err(Error::NonAssociative { witness }),
        _ => Ok(()),
    }
}

/// Whether `D` defines a (weak) quantum bi-Hamiltonian system for the pair of
/// associative products `p1`, `p2`.
pub fn is_bi_hamiltonian(d: &Operator, p1: &Product, p2: &Product) -> Result<BiHamiltonianReport> {
    same_dim(p1.dim(), p2.dim())?;
    require_associative(p1)?;
    require_associative(p2)?;
    let r1 = inner_generator(d, p1)?;
    let r2 = inner_generator(d, p2)?;
    let inner_wrt_both = r1.is_inner() && r2.is_inner();
    let sum = scan::commutator(p1.cochain()).add(&scan::commutator(p2.cochain()));
    let jacobi_witness = scan::jacobi_witness(&sum);
    let compatibility_witness = scan::mixed_associator_witness(p1.cochain(), p2.cochain());
    let brackets_compatible = jacobi_witness.is_none();
    let products_compatible = compatibility_witness.is_none();
    let weak = inner_wrt_both && brackets_compatible;
    Ok(BiHamiltonianReport {
        inner_wrt_both,
        brackets_compatible,
        jacobi_witness,
        products_compatible,
        compatibility_witness,
        weak,
        strong: weak && products_compatible,
        generators: (r1.generator, r2.generator),
    })
}
