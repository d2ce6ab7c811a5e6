mod common;

use common::{int_diag, small_element, small_operator, small_scalar};
use nijenhuis_core::algebra::{dual_numbers, full_matrix_algebra, upper_triangular_algebra};
use nijenhuis_core::exactnum::Scalar;
use nijenhuis_core::hochschild::scan;
use nijenhuis_core::nijenhuis::*;
use nijenhuis_core::{Algebra, Cochain, Decomposition, Element, Operator, Product};
use proptest::prelude::*;

fn m2() -> Algebra {
    full_matrix_algebra(2).unwrap()
}

fn upper_split(alg: &Algebra) -> Decomposition {
    let part1: Vec<usize> = ["E11", "E12", "E22"].iter().map(|l| alg.index_of(l).unwrap()).collect();
    Decomposition::new(alg, &part1).unwrap()
}

/// Brute-force Jacobi identity of the commutator of `p` on basis triples.
fn jacobi_holds(p: &Cochain) -> bool {
    let d = p.dim();
    let br = |x: &Element, y: &Element| &p.mul(x, y) - &p.mul(y, x);
    let e = |i| Element::basis(d, i);
    (0..d).all(|i| {
        (0..d).all(|j| {
            (0..d).all(|k| {
                let s = &(&br(&br(&e(i), &e(j)), &e(k)) + &br(&br(&e(j), &e(k)), &e(i))) + &br(&br(&e(k), &e(i)), &e(j));
                s.is_zero()
            })
        })
    })
}

fn random_cochain(d: usize) -> impl Strategy<Value = Cochain> {
    prop::collection::vec(-2i64..=2, d * d * d)
        .prop_map(move |v| Cochain::from_table(d, 2, v.chunks(d).map(common::int_element).collect()).unwrap())
}

/// Diagonal-multiplication style Nijenhuis tensors on `M_2`: left
/// multiplication by a diagonal matrix, or a combination of the upper/lower
/// triangular projections.
fn diagonal_tensor() -> impl Strategy<Value = Operator> {
    prop_oneof![
        (-3i64..=3, -3i64..=3).prop_map(|(a, b)| diagonal_left_multiplication(2, &int_diag(&[a, b]))),
        (-3i64..=3, -3i64..=3).prop_map(|(a, b)| projection_tensor(&upper_split(&m2()), &Scalar::int(a), &Scalar::int(b)).unwrap()),
        (-3i64..=3).prop_map(|a| Operator::scalar(4, &Scalar::int(a))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn criterion_sides_agree(n4 in small_operator(4), n2 in small_operator(2)) {
        for (alg, n) in [(m2(), n4), (dual_numbers(), n2)] {
            let report = associativity_criterion(&alg, &n).unwrap();
            prop_assert!(report.agrees(), "{report:?}");
            prop_assert_eq!(report.associator_witness.is_none(), report.deformed_associative);
        }
    }

    #[test]
    fn deformation_is_automatically_compatible(n4 in small_operator(4), n2 in small_operator(2)) {
        for (alg, n) in [(m2(), n4), (dual_numbers(), n2)] {
            let p = deform_unchecked(&alg, &n).unwrap();
            prop_assert!(mixed_associator_compatible(&Product::of_algebra(&alg), &p).unwrap());
        }
    }

    #[test]
    fn deformed_commutator_is_lie_deformation(n4 in small_operator(4), n2 in small_operator(2)) {
        for (alg, n) in [(m2(), n4), (dual_numbers(), n2)] {
            let p = deform_unchecked(&alg, &n).unwrap();
            prop_assert_eq!(lie_bracket_of(&p), lie_deformed_bracket(&alg, &n).unwrap());
        }
    }

    #[test]
    fn unit_law(n4 in small_operator(4), keep in any::<bool>()) {
        let alg = m2();
        let one = alg.unit().unwrap().clone();
        // force N(1) = 1 on half the samples by correcting the image of E11
        let n = if keep {
            let e11 = alg.index_of("E11").unwrap();
            let e22 = alg.index_of("E22").unwrap();
            let fixed = &one - n4.column(e22);
            Operator::from_fn(4, |j| if j == e11 { fixed.clone() } else { n4.column(j).clone() })
        } else {
            n4
        };
        let p = deform(&alg, &n).unwrap();
        let preserves = n.apply(&one) == one;
        prop_assert_eq!(p.unit() == Some(&one), preserves);
        for j in 0..4 {
            let b = alg.basis_element(j);
            prop_assert_eq!(p.mul(&one, &b), alg.mul(&n.apply(&one), &b));
        }
    }

    #[test]
    fn left_multiplication_is_nijenhuis_homomorphism(k in small_element(4)) {
        let alg = m2();
        let n = left_multiplication_tensor(&alg, &k).unwrap();
        prop_assert!(is_nijenhuis(&alg, &n).unwrap());
        let p = deform(&alg, &n).unwrap();
        prop_assert_eq!(p.is_associative(), Some(true));
        for i in 0..4 {
            for j in 0..4 {
                let (a, b) = (alg.basis_element(i), alg.basis_element(j));
                prop_assert_eq!(n.apply(&p.mul(&a, &b)), alg.mul(&n.apply(&a), &n.apply(&b)));
                // A∘B = AKB
                prop_assert_eq!(p.mul(&a, &b), alg.mul(&alg.mul(&a, &k), &b));
            }
        }
        prop_assert!(lie_nijenhuis_check(&alg, &n).unwrap());
    }

    #[test]
    fn nijenhuis_operators_give_associative_homomorphic_products(n in small_operator(4)) {
        let alg = m2();
        if is_nijenhuis(&alg, &n).unwrap() {
            let p = deform(&alg, &n).unwrap();
            prop_assert_eq!(p.is_associative(), Some(true));
            for i in 0..4 {
                for j in 0..4 {
                    let (a, b) = (alg.basis_element(i), alg.basis_element(j));
                    prop_assert_eq!(n.apply(&p.mul(&a, &b)), alg.mul(&n.apply(&a), &n.apply(&b)));
                }
            }
        }
    }

    #[test]
    fn compatibility_is_nijenhuis_sum(n1 in diagonal_tensor(), n2 in diagonal_tensor()) {
        let alg = m2();
        prop_assert_eq!(tensors_compatible(&alg, &n1, &n2).unwrap(), is_nijenhuis(&alg, &n1.add(&n2)).unwrap());
    }

    #[test]
    fn projection_tensors_are_nijenhuis(l1 in small_scalar(), l2 in small_scalar()) {
        let alg = m2();
        prop_assert!(is_nijenhuis(&alg, &projection_tensor(&upper_split(&alg), &l1, &l2).unwrap()).unwrap());
        let t3 = upper_triangular_algebra(3).unwrap();
        let diag: Vec<usize> = ["E11", "E22", "E33"].iter().map(|l| t3.index_of(l).unwrap()).collect();
        let dec = Decomposition::new(&t3, &diag).unwrap();
        prop_assert!(is_nijenhuis(&t3, &projection_tensor(&dec, &l1, &l2).unwrap()).unwrap());
    }

    #[test]
    fn extension_conditions_match_nijenhuis_m2(k in prop::collection::vec(-3i64..=3, 2)) {
        let alg = m2();
        let dec = diagonal_split(&alg, 2).unwrap();
        let n1 = diagonal_left_multiplication(2, &int_diag(&k));
        let ext = extend_tensor(&alg, &dec, &n1).unwrap();
        prop_assert_eq!(ext.conditions_hold(), ext.is_nijenhuis);
        prop_assert_eq!(ext.is_nijenhuis, is_nijenhuis(&alg, &ext.operator).unwrap());
    }

    #[test]
    fn extension_conditions_match_nijenhuis_t3(k in prop::collection::vec(-3i64..=3, 3), part in 0usize..2) {
        let t3 = upper_triangular_algebra(3).unwrap();
        let diag: Vec<usize> = ["E11", "E22", "E33"].iter().map(|l| t3.index_of(l).unwrap()).collect();
        // the diagonal, or the diagonal with E12 added
        let mut part1 = diag.clone();
        if part == 1 {
            part1.push(t3.index_of("E12").unwrap());
        }
        let dec = Decomposition::new(&t3, &part1).unwrap();
        prop_assume!(dec.is_subalgebra(nijenhuis_core::Part::First));
        let k = int_diag(&k);
        let mut coords = vec![Scalar::ZERO; t3.dim()];
        for (p, &i) in diag.iter().enumerate() {
            coords[i] = k[p].clone();
        }
        if part == 1 {
            coords[t3.index_of("E12").unwrap()] = k[0].clone();
        }
        let n1 = Operator::diagonal(&coords);
        match extend_tensor(&t3, &dec, &n1) {
            Ok(ext) => {
                prop_assert_eq!(ext.conditions_hold(), ext.is_nijenhuis);
                prop_assert_eq!(ext.is_nijenhuis, is_nijenhuis(&t3, &ext.operator).unwrap());
            }
            Err(nijenhuis_core::Error::NotNijenhuis { .. }) => {}
            Err(e) => prop_assert!(false, "{e:?}"),
        }
    }

    #[test]
    fn skew_associator_detects_jacobi(c in random_cochain(2)) {
        let p = Product::unchecked(c.clone()).unwrap();
        let skew = total_skew_associator(&p).unwrap();
        prop_assert_eq!(skew.is_zero(), jacobi_holds(&c));
        prop_assert_eq!(scan::jacobi_witness(&scan::commutator(&c)).is_none(), jacobi_holds(&c));
    }

    #[test]
    fn hierarchy_holds_for_left_multiplication(k in small_element(4)) {
        let alg = m2();
        let n = left_multiplication_tensor(&alg, &k).unwrap();
        let report = verify_hierarchy(&alg, &n, 3).unwrap();
        prop_assert!(report.all_pass(), "{:?}", report.checks.iter().find(|c| !c.pass));
        for a in 0..=3 {
            for b in 0..=3 {
                prop_assert!(tensors_compatible(&alg, &n.pow(a), &n.pow(b)).unwrap());
            }
        }
    }
}

#[test]
fn hierarchy_holds_for_projections() {
    let alg = m2();
    let dec = upper_split(&alg);
    for (l1, l2) in [(1, 0), (0, 1), (2, -1), (3, 5)] {
        let n = projection_tensor(&dec, &Scalar::int(l1), &Scalar::int(l2)).unwrap();
        assert!(verify_hierarchy(&alg, &n, 4).unwrap().all_pass());
    }
}

#[test]
fn hierarchy_refuses_non_nijenhuis_and_large_powers() {
    let alg = m2();
    let t = nijenhuis_core::algebra::builders::transpose_operator(2);
    assert!(verify_hierarchy(&alg, &t, 2).is_err());
    assert!(verify_hierarchy(&alg, &Operator::identity(4), MAX_HIERARCHY_POWER + 1).is_err());
}

#[test]
fn contraction_limit_equals_contraction_product() {
    let alg = m2();
    let idx = |ls: &[&str]| ls.iter().map(|l| alg.index_of(l).unwrap()).collect::<Vec<_>>();
    for part1 in [idx(&["E11", "E12", "E22"]), idx(&["E11", "E22"]), idx(&["E11"]), idx(&["E11", "E12"])] {
        let dec = Decomposition::new(&alg, &part1).unwrap();
        let limit = contraction_limit(&alg, &dec).unwrap();
        assert_eq!(&limit, contraction_product(&alg, &dec).unwrap().cochain(), "{part1:?}");
    }
    let t3 = upper_triangular_algebra(3).unwrap();
    let dec = Decomposition::new(&t3, &[t3.index_of("E11").unwrap(), t3.index_of("E13").unwrap()]).unwrap();
    assert_eq!(&contraction_limit(&t3, &dec).unwrap(), contraction_product(&t3, &dec).unwrap().cochain());
}

#[test]
fn contraction_of_twilled_split_is_projection_deformation() {
    let alg = m2();
    let dec = upper_split(&alg);
    let p1 = projection_tensor(&dec, &Scalar::ONE, &Scalar::ZERO).unwrap();
    assert_eq!(contraction_product(&alg, &dec).unwrap().cochain(), deform(&alg, &p1).unwrap().cochain());
}

#[test]
fn torsion_errors_for_non_nijenhuis_inputs() {
    let alg = m2();
    let t = nijenhuis_core::algebra::builders::transpose_operator(2);
    assert!(tensors_compatible(&alg, &t, &Operator::identity(4)).is_err());
    assert!(!is_nijenhuis(&alg, &t).unwrap());
    let w = torsion_witness(&alg, &t).unwrap().unwrap();
    assert!(!torsion(&alg, &t).unwrap().get2(w[0], w[1]).is_zero());
}

#[test]
fn skew_associator_of_transpose_deformation_matches_jacobi() {
    let alg = m2();
    let p = deform(&alg, &nijenhuis_core::algebra::builders::transpose_operator(2)).unwrap();
    assert_eq!(total_skew_associator(&p).unwrap().is_zero(), jacobi_holds(p.cochain()));
    assert!(total_skew_associator(&Product::of_algebra(&alg)).unwrap().is_zero());
}
