mod common;

use common::{small_element, small_operator};
use nijenhuis_core::algebra::{dual_numbers, full_matrix_algebra, upper_triangular_algebra};
use nijenhuis_core::exactnum::{Matrix, Scalar};
use nijenhuis_core::hochschild::{coboundary, cohomology_dimension, gerstenhaber_bracket, is_cocycle, Tuples};
use nijenhuis_core::nijenhuis::{deform, torsion};
use nijenhuis_core::{Algebra, Cochain, Element};
use proptest::prelude::*;

fn algebras() -> Vec<Algebra> {
    vec![full_matrix_algebra(2).unwrap(), dual_numbers()]
}

/// Dense matrix of `δ_n`, one column per basis cochain, built from the
/// generic coboundary.
fn dense_coboundary(alg: &Algebra, n: usize) -> Matrix {
    let d = alg.dim();
    let inputs: Vec<(Vec<usize>, usize)> = Tuples::new(d, n).flat_map(|t| (0..d).map(move |k| (t.clone(), k))).collect();
    let rows = d.pow(n as u32 + 2);
    let mut m = Matrix::zeros(rows, inputs.len());
    for (col, (t, k)) in inputs.iter().enumerate() {
        let alpha = Cochain::from_fn(d, n, |s| if s == &t[..] { Element::basis(d, *k) } else { Element::zero(d) }).unwrap();
        let image: Vec<Scalar> = coboundary(alg, &alpha).unwrap().table().iter().flat_map(Element::to_dense).collect();
        for (r, v) in image.into_iter().enumerate() {
            m[(r, col)] = v;
        }
    }
    m
}

fn dense_cohomology(alg: &Algebra, n: usize) -> usize {
    let here = dense_coboundary(alg, n);
    let below = if n == 0 { 0 } else { dense_coboundary(alg, n - 1).rank() };
    here.cols() - here.rank() - below
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn coboundary_squares_to_zero_on_elements(h4 in small_element(4), h2 in small_element(2)) {
        for (alg, h) in algebras().into_iter().zip([h4, h2]) {
            let dh = coboundary(&alg, &Cochain::from_element(h)).unwrap();
            prop_assert!(coboundary(&alg, &dh).unwrap().is_zero());
        }
    }

    #[test]
    fn coboundary_squares_to_zero_on_operators(n4 in small_operator(4), n2 in small_operator(2)) {
        for (alg, n) in algebras().into_iter().zip([n4, n2]) {
            let dn = coboundary(&alg, &Cochain::from_operator(&n)).unwrap();
            prop_assert!(coboundary(&alg, &dn).unwrap().is_zero());
        }
    }

    #[test]
    fn coboundary_of_operator_is_deformed_product(n4 in small_operator(4), n2 in small_operator(2)) {
        for (alg, n) in algebras().into_iter().zip([n4, n2]) {
            let dn = coboundary(&alg, &Cochain::from_operator(&n)).unwrap();
            let p = deform(&alg, &n).unwrap();
            prop_assert_eq!(&dn, p.cochain());
        }
    }

    #[test]
    fn coboundary_evaluates_the_alternating_sum(n in small_operator(4), x in small_element(4), y in small_element(4)) {
        let m2 = full_matrix_algebra(2).unwrap();
        let dn = coboundary(&m2, &Cochain::from_operator(&n)).unwrap();
        let direct = &(&m2.mul(&x, &n.apply(&y)) - &n.apply(&m2.mul(&x, &y))) + &m2.mul(&n.apply(&x), &y);
        prop_assert_eq!(dn.eval(&[&x, &y]), direct);
    }

    #[test]
    fn deformed_products_are_cocycles(n in small_operator(4)) {
        let m2 = full_matrix_algebra(2).unwrap();
        prop_assert!(is_cocycle(&m2, deform(&m2, &n).unwrap().cochain()).unwrap());
    }

    #[test]
    fn bracket_with_product_gives_deformation(n in small_operator(4)) {
        let m2 = full_matrix_algebra(2).unwrap();
        let bracket = gerstenhaber_bracket(m2.structure(), &Cochain::from_operator(&n)).unwrap();
        let p = deform(&m2, &n).unwrap();
        prop_assert_eq!(&bracket, p.cochain());
    }

    #[test]
    fn twice_torsion_from_brackets(n in small_operator(4)) {
        let m2 = full_matrix_algebra(2).unwrap();
        let nc = Cochain::from_operator(&n);
        let inner = gerstenhaber_bracket(m2.structure(), &nc).unwrap();
        let lhs = gerstenhaber_bracket(&nc, &inner).unwrap()
            .add(&gerstenhaber_bracket(m2.structure(), &Cochain::from_operator(&n.pow(2))).unwrap());
        prop_assert_eq!(lhs, torsion(&m2, &n).unwrap().scale(&Scalar::int(2)));
    }

    #[test]
    fn bracket_with_product_is_signed_coboundary(h in small_element(4), n in small_operator(4), vals in prop::collection::vec(-2i64..=2, 64)) {
        let m2 = full_matrix_algebra(2).unwrap();
        let mu = m2.structure();
        let alpha = Cochain::from_table(4, 2, vals.chunks(4).map(common::int_element).collect()).unwrap();
        let minus = -Scalar::ONE;
        for (c, sign) in [
            (Cochain::from_element(h), &minus),
            (Cochain::from_operator(&n), &Scalar::ONE),
            (alpha, &minus),
        ] {
            prop_assert_eq!(gerstenhaber_bracket(mu, &c).unwrap(), coboundary(&m2, &c).unwrap().scale(sign));
        }
    }

    #[test]
    fn graded_antisymmetry(n in small_operator(4), h in small_element(4), vals in prop::collection::vec(-2i64..=2, 64)) {
        let alpha = Cochain::from_table(4, 2, vals.chunks(4).map(common::int_element).collect()).unwrap();
        let cochains = [Cochain::from_element(h), Cochain::from_operator(&n), alpha];
        for p in &cochains {
            for q in &cochains {
                if p.arity() + q.arity() == 0 || p.arity() + q.arity() > 4 {
                    continue;
                }
                let odd = ((p.arity() as i64 - 1) * (q.arity() as i64 - 1)).rem_euclid(2) == 1;
                let sign = if odd { Scalar::ONE } else { -Scalar::ONE };
                prop_assert_eq!(gerstenhaber_bracket(p, q).unwrap(), gerstenhaber_bracket(q, p).unwrap().scale(&sign));
            }
        }
    }
}

#[test]
fn product_brackets_to_zero() {
    for alg in algebras() {
        assert!(gerstenhaber_bracket(alg.structure(), alg.structure()).unwrap().is_zero());
    }
}

#[test]
fn cohomology_matches_dense_oracle() {
    let cases = [
        (full_matrix_algebra(2).unwrap(), 2),
        (dual_numbers(), 2),
        (upper_triangular_algebra(2).unwrap(), 2),
    ];
    for (alg, top) in cases {
        for n in 0..=top {
            assert_eq!(cohomology_dimension(&alg, n).unwrap(), dense_cohomology(&alg, n), "{} H^{n}", alg.name());
        }
    }
}

#[test]
fn matrix_algebra_cohomology_vanishes_above_degree_zero() {
    let m2 = full_matrix_algebra(2).unwrap();
    assert_eq!(dense_cohomology(&m2, 0), 1);
    assert_eq!(cohomology_dimension(&m2, 0).unwrap(), 1);
    assert_eq!(cohomology_dimension(&m2, 1).unwrap(), 0);
    assert_eq!(cohomology_dimension(&m2, 2).unwrap(), 0);
    assert_eq!(cohomology_dimension(&dual_numbers(), 1).unwrap(), 1);
    assert_eq!(dense_cohomology(&dual_numbers(), 1), 1);
}
