#![allow(dead_code)]

use nijenhuis_core::exactnum::{Matrix, Rational, Scalar};
use nijenhuis_core::{Element, Operator};
use proptest::prelude::*;

pub fn int_operator(d: usize, vals: &[i64]) -> Operator {
    Operator::from_matrix(&Matrix::from_i64(d, d, vals)).unwrap()
}

pub fn int_element(vals: &[i64]) -> Element {
    Element::from_dense(&vals.iter().map(|&v| Scalar::int(v)).collect::<Vec<_>>())
}

pub fn int_diag(vals: &[i64]) -> Vec<Scalar> {
    vals.iter().map(|&v| Scalar::int(v)).collect()
}

/// Operators on a `d`-dimensional space with integer entries in `[-3, 3]`.
pub fn small_operator(d: usize) -> impl Strategy<Value = Operator> {
    prop::collection::vec(-3i64..=3, d * d).prop_map(move |v| int_operator(d, &v))
}

pub fn small_element(d: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec(-3i64..=3, d).prop_map(|v| int_element(&v))
}

pub fn rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        (-20i64..=20, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d).unwrap()),
        // large enough to leave the machine-word fast path under products
        (any::<i64>(), 1i64..=i64::MAX).prop_map(|(n, d)| Rational::new(n.max(-i64::MAX), d).unwrap()),
    ]
}

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (rational(), rational()).prop_map(|(re, im)| Scalar::new(re, im))
}

pub fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3, -2i64..=2).prop_map(|(n, d, im)| Scalar::new(Rational::new(n, d).unwrap(), Rational::from_integer(im)))
}

pub fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(small_scalar(), r * c).prop_map(move |v| Matrix::from_vec(r, c, v))
    })
}
