//! Bit-exact reproductions of the worked examples, each as a list of checks.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{commutator_derivation, inner_generator, is_bi_hamiltonian};
use crate::algebra::builders::{
    diagonal_element, diagonal_indices, element_to_matrix, matrix_to_element,
};
use crate::algebra::{
    banded_oscillator_algebra, find_unit, full_matrix_algebra, m2_iabc_algebra, upper_triangular_algebra, Algebra,
    Decomposition, Element, Operator,
};
use crate::exactnum::Scalar;
use crate::hochschild::{scan, Cochain};
use crate::nijenhuis::{
    contraction_product, deform, deform_unchecked, diagonal_left_multiplication, diagonal_part_multiplication,
    extend_tensor, lambda_tensor, projection_tensor, theorem5_product, torsion_witness, Product,
};
use crate::report::Check;
use crate::{Error, Result};

/// Identifiers accepted by [`example_check`].
pub const EXAMPLE_IDS: [u8; 6] = [1, 2, 3, 4, 5, 6];

/// Tunable sizes for the examples that have them.
#[derive(Clone, Debug, Default)]
pub struct ExampleOptions {
    /// Matrix size for examples 3 and 4 (default 3) and the oscillator
    /// truncation for examples 5 and 6 (default 16).
    pub dim: Option<usize>,
    /// The deformation parameter of example 5; by default `0, 1, 1/2, −2`.
    pub lambda: Option<Scalar>,
}

/// Runs every identity asserted by the example with the given id.
pub fn example_check(id: u8, opts: &ExampleOptions) -> Result<Vec<Check>> {
    match id {
        1 => example1(),
        2 => example2(),
        3 => example3(opts.dim.unwrap_or(3)),
        4 => example4(opts.dim.unwrap_or(3)),
        5 => {
            let lambdas = match &opts.lambda {
                Some(l) => vec![l.clone()],
                None => vec![Scalar::ZERO, Scalar::ONE, Scalar::ratio(1, 2), Scalar::int(-2)],
            };
            example5(opts.dim.unwrap_or(16), &lambdas)
        }
        6 => example6(opts.dim.unwrap_or(16)),
        _ => Err(Error::precondition(format!("unknown example id {id}"))),
    }
}

/// First basis pair where `product` differs from `expected`.
fn table_witness(product: &Cochain, expected: impl Fn(usize, usize) -> Element) -> Option<Vec<usize>> {
    let d = product.dim();
    (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .find(|&(i, j)| product.get2(i, j) != &expected(i, j))
        .map(|(i, j)| vec![i, j])
}

fn tuple_name(alg: &Algebra, w: &[usize]) -> String {
    let labels: Vec<&str> = w.iter().map(|&i| alg.basis_labels()[i].as_str()).collect();
    format!("({})", labels.join(", "))
}

/// Product of two elements of `M_n` computed with explicit matrices.
fn matmul(n: usize, x: &Element, y: &Element) -> Element {
    matrix_to_element(&element_to_matrix(n, x).mul(&element_to_matrix(n, y)))
}

/// Diagonal part in the matrix-unit basis of `M_n`.
fn diagonal_part(n: usize, x: &Element) -> Element {
    x.filter(|i| i / n == i % n)
}

fn int_diagonal(n: usize) -> Vec<Scalar> {
    (1..=n as i64).map(Scalar::int).collect()
}

fn unit_check(name: &str, p: &Product, alg: &Algebra) -> Check {
    Check::from_bool(name, p.unit().is_some() && p.unit() == alg.unit())
}

fn example1() -> Result<Vec<Check>> {
    let m2 = full_matrix_algebra(2)?;
    let idx = |l: &str| m2.index_of(l).expect("matrix unit");
    let dec = Decomposition::new(&m2, &[idx("E11"), idx("E12"), idx("E22")])?;
    let p1 = projection_tensor(&dec, &Scalar::ONE, &Scalar::ZERO)?;
    let p2 = projection_tensor(&dec, &Scalar::ZERO, &Scalar::ONE)?;
    let mut checks = vec![
        Check::from_witness("P1 is a Nijenhuis tensor", torsion_witness(&m2, &p1)?.map(|w| w.to_vec())),
        Check::from_witness("P2 is a Nijenhuis tensor", torsion_witness(&m2, &p2)?.map(|w| w.to_vec())),
    ];
    let coords = |i: usize| m2.basis_element(i).to_dense();
    let from = |v: [Scalar; 4]| Element::from_dense(&v);

    let circ = deform(&m2, &p1)?;
    checks.push(Check::from_witness(
        "A∘B = [[aa', ab'+bd'], [ca'+dc', dd']]",
        table_witness(circ.cochain(), |i, j| {
            let ([a, b, c, d], [a2, b2, c2, d2]) = (to4(coords(i)), to4(coords(j)));
            from([&a * &a2, &(&a * &b2) + &(&b * &d2), &(&c * &a2) + &(&d * &c2), &d * &d2])
        }),
    ));
    checks.push(Check::from_bool("A∘B is associative", circ.is_associative() == Some(true)));
    checks.push(unit_check("the unit matrix remains the unit for ∘", &circ, &m2));

    let comp = deform(&m2, &p2)?;
    checks.push(Check::from_witness(
        "A∘'B = [[bc', 0], [0, cb']]",
        table_witness(comp.cochain(), |i, j| {
            let ([_, b, c, _], [_, b2, c2, _]) = (to4(coords(i)), to4(coords(j)));
            from([&b * &c2, Scalar::ZERO, Scalar::ZERO, &c * &b2])
        }),
    ));
    checks.push(Check::from_bool("A∘'B is associative", comp.is_associative() == Some(true)));
    checks.push(Check::from_bool("A∘'B has no unit", find_unit(comp.cochain()).is_none()));

    let mu = Product::of_algebra(&m2);
    let mut differing = None;
    for h in diagonal_indices(2) {
        let e = m2.basis_element(h);
        if commutator_derivation(&e, &mu)? != commutator_derivation(&e, &circ)? {
            differing = Some(vec![h]);
            break;
        }
    }
    checks.push(Check::from_witness("inner derivations of diagonal matrices agree for μ and ∘", differing));
    Ok(checks)
}

fn to4(v: Vec<Scalar>) -> [Scalar; 4] {
    v.try_into().expect("four coordinates")
}

fn example2() -> Result<Vec<Check>> {
    let alg = m2_iabc_algebra();
    let [i, a, b, c] = ["I", "A", "B", "C"].map(|l| alg.e(l));
    let dec = Decomposition::new(&alg, &[0, 3])?;
    let circ = contraction_product(&alg, &dec)?;
    let zero = Element::zero(4);
    let relations: [(&str, &Element, &Element, Element); 9] = [
        ("A∘B = 0", &a, &b, zero.clone()),
        ("B∘A = 0", &b, &a, zero.clone()),
        ("A∘A = 0", &a, &a, zero.clone()),
        ("B∘B = 0", &b, &b, zero),
        ("A∘C = B", &a, &c, b.clone()),
        ("C∘A = -B", &c, &a, -&b),
        ("B∘C = -A", &b, &c, -&a),
        ("C∘B = A", &c, &b, a.clone()),
        ("C∘C = -I", &c, &c, -&i),
    ];
    let mut checks: Vec<Check> =
        relations.iter().map(|(name, x, y, want)| Check::from_bool(*name, &circ.mul(x, y) == want)).collect();
    checks.push(Check::from_witness(
        "∘ is associative",
        scan::associator_witness(circ.cochain()).map(|w| w.to_vec()),
    ));
    checks.push(unit_check("I remains the unit for ∘", &circ, &alg));
    let mu = Product::of_algebra(&alg);
    checks.push(Check::from_bool(
        "the inner derivation of C is the same for μ and ∘",
        commutator_derivation(&c, &mu)? == commutator_derivation(&c, &circ)?,
    ));
    Ok(checks)
}

/// The product `K·A·B` on diagonal pairs of `M_n`, zero elsewhere.
fn diagonal_twisted_product(alg: &Algebra, n: usize, k: &Element) -> Result<Cochain> {
    let d = alg.dim();
    let diag: Vec<bool> = (0..d).map(|i| i / n == i % n).collect();
    Cochain::from_fn(d, 2, |t| {
        if diag[t[0]] && diag[t[1]] {
            alg.mul(k, alg.structure().get2(t[0], t[1]))
        } else {
            Element::zero(d)
        }
    })
}

/// The example 3 product `KΔ(A)B + AKΔ(B) − KΔ(A)Δ(B)` on `M_n`, built
/// from the general splitting construction.
fn diagonal_theorem5(alg: &Algebra, n: usize, kdiag: &[Scalar]) -> Result<Product> {
    let dec = Decomposition::new(alg, &diagonal_indices(n))?;
    let k = diagonal_element(kdiag);
    let circ1 = diagonal_twisted_product(alg, n, &k)?;
    let n1 = diagonal_left_multiplication(n, kdiag);
    theorem5_product(alg, &dec, &circ1, &n1, &n1, &Operator::identity(alg.dim()))
}

fn example3(n: usize) -> Result<Vec<Check>> {
    let alg = full_matrix_algebra(n)?;
    let kdiag = int_diagonal(n);
    let k = diagonal_element(&kdiag);
    let circ = diagonal_theorem5(&alg, n, &kdiag)?;
    let mut checks = vec![Check::from_bool("A∘B is associative", circ.is_associative() == Some(true))];
    checks.push(Check::from_witness(
        "A∘B = KΔ(A)B + AKΔ(B) − KΔ(A)Δ(B)",
        table_witness(circ.cochain(), |i, j| {
            let (x, y) = (alg.basis_element(i), alg.basis_element(j));
            let kdx = matmul(n, &k, &diagonal_part(n, &x));
            let kdy = matmul(n, &k, &diagonal_part(n, &y));
            &(&matmul(n, &kdx, &y) + &matmul(n, &x, &kdy)) - &matmul(n, &kdx, &diagonal_part(n, &y))
        }),
    ));
    let kdelta = deform(&alg, &diagonal_part_multiplication(n, &kdiag))?;
    let separating = table_witness(circ.cochain(), |i, j| kdelta.cochain().get2(i, j).clone());
    checks.push(match separating {
        Some(w) => {
            let (x, y) = (alg.basis_element(w[0]), alg.basis_element(w[1]));
            let dd = matmul(n, &diagonal_part(n, &x), &diagonal_part(n, &y));
            let d_prod = diagonal_part(n, &alg.mul(&x, &y));
            Check::from_bool(format!("A∘B differs from μ_KΔ at {} where Δ(A)Δ(B) ≠ Δ(AB)", tuple_name(&alg, &w)), dd != d_prod)
        }
        None => Check::from_bool("A∘B differs from μ_KΔ", false),
    });
    Ok(checks)
}

fn example4(n: usize) -> Result<Vec<Check>> {
    let alg = upper_triangular_algebra(n)?;
    // position of E_pq (p ≤ q) in the triangular basis, and back
    let units: Vec<(usize, usize)> = (0..n).flat_map(|p| (p..n).map(move |q| (p, q))).collect();
    let to_full = |x: &Element| Element::from_terms(n * n, x.terms().iter().map(|(i, c)| (units[*i].0 * n + units[*i].1, c.clone())));
    let from_full = |x: &Element| {
        let mut terms = Vec::new();
        for (i, c) in x.terms() {
            let pos = units.iter().position(|&u| u == (i / n, i % n)).expect("upper-triangular result");
            terms.push((pos, c.clone()));
        }
        Element::from_terms(units.len(), terms)
    };
    let diag: Vec<usize> = (0..units.len()).filter(|&i| units[i].0 == units[i].1).collect();
    let dec = Decomposition::new(&alg, &diag)?;
    let kdiag = int_diagonal(n);
    let k = from_full(&diagonal_element(&kdiag));
    let n1 = Operator::left_multiplication(&alg, &k)?;
    let ext = extend_tensor(&alg, &dec, &n1)?;

    let ideal = dec.part2().iter().all(|&s| {
        (0..alg.dim()).all(|t| {
            let inside = |x: &Element| x.terms().iter().all(|(i, _)| !dec.in_part1(*i));
            inside(alg.structure().get2(s, t)) && inside(alg.structure().get2(t, s))
        })
    });
    let mut checks = vec![Check::from_bool("strictly upper-triangular part is a two-sided ideal", ideal)];
    let names = [
        "N1²((A₂B₂)₁) = 0",
        "N1((N1(A₁)B₂)₁ − N1((A₁B₂)₁)) = 0",
        "N1((A₂N1(B₁))₁ − N1((A₂B₁)₁)) = 0",
    ];
    for (name, w) in names.iter().zip(ext.witnesses.iter()) {
        checks.push(Check::from_witness(*name, w.map(|p| p.to_vec())));
    }
    checks.push(Check::from_bool("N(A) = KΔ(A) is a Nijenhuis tensor", ext.is_nijenhuis));
    let circ = deform(&alg, &ext.operator)?;
    let kf = diagonal_element(&kdiag);
    checks.push(Check::from_witness(
        "A∘_N B = KΔ(A)B + AKΔ(B) − KΔ(AB)",
        table_witness(circ.cochain(), |i, j| {
            let (x, y) = (to_full(&alg.basis_element(i)), to_full(&alg.basis_element(j)));
            let kdx = matmul(n, &kf, &diagonal_part(n, &x));
            let kdy = matmul(n, &kf, &diagonal_part(n, &y));
            let kdxy = matmul(n, &kf, &diagonal_part(n, &matmul(n, &x, &y)));
            from_full(&(&(&matmul(n, &kdx, &y) + &matmul(n, &x, &kdy)) - &kdxy))
        }),
    ));
    checks.push(Check::from_bool("A∘_N B is associative", circ.is_associative() == Some(true)));
    Ok(checks)
}

fn upper_split(alg: &Algebra, n: usize) -> Result<Decomposition> {
    let upper: Vec<usize> = (0..n * n).filter(|i| i / n <= i % n).collect();
    Decomposition::new(alg, &upper)
}

/// First `(A, B)` with `A` a diagonal basis element where `A∘B ≠ AB` or `B∘A ≠ BA`.
fn diagonal_factor_witness(alg: &Algebra, n: usize, p: &Product) -> Option<Vec<usize>> {
    for a in diagonal_indices(n) {
        for b in 0..alg.dim() {
            let mu = alg.structure();
            if p.cochain().get2(a, b) != mu.get2(a, b) || p.cochain().get2(b, a) != mu.get2(b, a) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

fn example5(dim: usize, lambdas: &[Scalar]) -> Result<Vec<Check>> {
    let osc = banded_oscillator_algebra(dim, 1)?;
    let alg = &osc.algebra;
    let dec = upper_split(alg, dim)?;
    let mu = Product::of_algebra(alg);
    let ad_h = commutator_derivation(&osc.h, &mu)?;
    let mut checks = Vec::new();
    for lambda in lambdas {
        let n = lambda_tensor(&dec, lambda)?;
        checks.push(Check::from_witness(
            format!("N_λ is a Nijenhuis tensor (λ = {lambda})"),
            torsion_witness(alg, &n)?.map(|w| w.to_vec()),
        ));
        let circ = deform_unchecked(alg, &n)?;
        checks.push(Check::from_bool(
            format!("a_dag∘a = ({lambda})·H"),
            circ.mul(&osc.adag, &osc.a) == osc.h.scale(lambda),
        ));
        checks.push(Check::from_witness(
            format!("A∘_λB = AB and B∘_λA = BA for diagonal A (λ = {lambda})"),
            diagonal_factor_witness(alg, dim, &circ),
        ));
        checks.push(Check::from_bool(
            format!("H generates the same derivation for μ and ∘_λ (λ = {lambda})"),
            commutator_derivation(&osc.h, &circ)? == ad_h,
        ));
    }
    Ok(checks)
}

fn example6(dim: usize) -> Result<Vec<Check>> {
    let osc = banded_oscillator_algebra(dim, 1)?;
    let alg = &osc.algebra;
    let kdiag = int_diagonal(dim);
    let k = diagonal_element(&kdiag);
    let circ = diagonal_theorem5(alg, dim, &kdiag)?;
    let mu = Product::of_algebra(alg);
    let mut checks = vec![Check::from_bool("A∘B is associative", circ.is_associative() == Some(true))];
    checks.push(Check::from_bool("a_dag∘a = 0", circ.mul(&osc.adag, &osc.a).is_zero()));

    let mut bracket_witness = None;
    'outer: for a in diagonal_indices(dim) {
        let ka = alg.mul(&k, &alg.basis_element(a));
        for b in 0..alg.dim() {
            let eb = alg.basis_element(b);
            let lhs = circ.cochain().get2(a, b) - circ.cochain().get2(b, a);
            if lhs != alg.commutator(&ka, &eb) {
                bracket_witness = Some(vec![a, b]);
                break 'outer;
            }
        }
    }
    checks.push(Check::from_witness("[A,B]_∘ = [KA,B] for diagonal A", bracket_witness));

    checks.push(match scan::mixed_associator_witness(mu.cochain(), circ.cochain()) {
        Some(w) => Check::from_bool(format!("∘ is not compatible with μ: mixed associator nonzero at {}", tuple_name(alg, &w)), true),
        None => Check::from_bool("∘ is not compatible with μ", false),
    });

    let ad_h = commutator_derivation(&osc.h, &mu)?;
    let kinv: Vec<Scalar> = kdiag.iter().map(|v| v.inv().expect("nonzero diagonal")).collect();
    let kinv_h = alg.mul(&diagonal_element(&kinv), &osc.h);
    let report = inner_generator(&ad_h, &circ)?;
    let recovered = match &report.generator {
        Some(g) => commutator_derivation(&(g - &kinv_h), &circ)?.is_zero(),
        None => false,
    };
    checks.push(Check::from_bool("the derivation of H is inner for ∘ with generator K⁻¹H modulo the ∘-center", recovered));
    checks.push(Check::from_bool("K⁻¹H generates the derivation of H for ∘", commutator_derivation(&kinv_h, &circ)? == ad_h));

    let bh = is_bi_hamiltonian(&ad_h, &mu, &circ)?;
    checks.push(Check::from_bool("the derivation of H is inner for both μ and ∘", bh.inner_wrt_both));
    checks.push(Check::from_bool("(μ, ∘) is not a strong bi-Hamiltonian pair", !bh.strong));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_example_is_an_error() {
        assert!(example_check(7, &ExampleOptions::default()).is_err());
    }

    #[test]
    fn small_examples_pass() {
        for id in [1, 2, 3, 4] {
            for c in example_check(id, &ExampleOptions::default()).unwrap() {
                assert!(c.pass, "example {id}: {} {:?}", c.name, c.witness);
            }
        }
    }

    #[test]
    fn small_oscillators_pass() {
        let opts = ExampleOptions { dim: Some(4), lambda: None };
        for id in [5, 6] {
            for c in example_check(id, &opts).unwrap() {
                assert!(c.pass, "example {id}: {} {:?}", c.name, c.witness);
            }
        }
    }
}
