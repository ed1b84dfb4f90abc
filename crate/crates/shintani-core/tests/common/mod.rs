#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use shintani_core::numfield::{FieldElement, FieldSpec};
use shintani_core::exact::PolyQ;
use shintani_core::shintani::TieBreak;

pub fn r(s: &str) -> BigRational {
    s.parse().unwrap()
}

pub fn rs(xs: &[&str]) -> Vec<BigRational> {
    xs.iter().map(|s| r(s)).collect()
}

fn el(c: &[i64]) -> FieldElement {
    FieldElement::from_ints(c)
}

/// The maximal real subfield of the 7th cyclotomic field.
pub fn example_one() -> FieldSpec {
    FieldSpec::new(
        "Q(zeta7 + zeta7^-1)",
        PolyQ::from_ints(&[1, -2, -1, 1]),
        BigInt::from(49),
        None,
        Some(vec![el(&[0, 1, 0]), el(&[1, -1, 0])]),
        vec![el(&[0, 0, 1]), el(&[1, -2, 1])],
    )
    .unwrap()
    .with_tie_break(TieBreak::MinusLast)
}

/// The cubic field of discriminant 361.
pub fn example_two() -> FieldSpec {
    FieldSpec::new(
        "x^3 - x^2 - 6x + 7",
        PolyQ::from_ints(&[7, -6, -1, 1]),
        BigInt::from(361),
        None,
        Some(vec![el(&[-1, 1, 0]), el(&[-4, 1, 1])]),
        vec![el(&[-5, 3, 2]), el(&[1, -2, 1])],
    )
    .unwrap()
}

/// `Q` itself, presented as `Q[x]/(x)`.
pub fn rationals() -> FieldSpec {
    FieldSpec::new("Q", PolyQ::from_ints(&[0, 1]), BigInt::from(1), None, Some(vec![]), vec![]).unwrap()
}

/// `Q(sqrt 5)` with the golden ratio as generator.
pub fn golden_field() -> FieldSpec {
    FieldSpec::new(
        "Q(sqrt 5)",
        PolyQ::from_ints(&[-1, -1, 1]),
        BigInt::from(5),
        None,
        Some(vec![el(&[0, 1])]),
        vec![el(&[1, 1])],
    )
    .unwrap()
}
