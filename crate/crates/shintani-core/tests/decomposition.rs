mod common;

use std::collections::BTreeMap;

use common::*;
use num_bigint::BigInt;
use shintani_core::lfun::{decompose, real_quadratic_skeleton, RootOfUnity};
use shintani_core::realalg::PrecisionBudget;

#[test]
fn quadratic_character_on_example_one() {
    let terms = decompose(&example_one(), 3, 1, 2, PrecisionBudget::default()).unwrap();
    assert_eq!(terms.len(), 52);
    for t in &terms {
        let expected = if (3 + t.m) % 2 == 0 { RootOfUnity { numerator: 0, order: 1 } } else { RootOfUnity { numerator: 1, order: 2 } };
        assert_eq!(t.character_value, expected);
        assert_eq!(t.tuples.len(), if t.tau.label() == "id" { 3 } else { 1 });
    }
    let minus = terms.iter().filter(|t| t.character_value.order == 2).count();
    assert_eq!(minus, 26);
}

#[test]
fn order_thirteen_and_full_order() {
    let terms = decompose(&example_one(), 3, 1, 13, PrecisionBudget::default()).unwrap();
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for t in &terms {
        *counts.entry(t.character_value.numerator * 13 / t.character_value.order).or_default() += 1;
    }
    assert_eq!(counts.len(), 13);
    assert!(counts.values().all(|&c| c == 4));

    let full = decompose(&example_one(), 3, 1, 26, PrecisionBudget::default()).unwrap();
    let distinct: std::collections::BTreeSet<_> = full.iter().map(|t| t.character_value).collect();
    assert_eq!((full.len(), distinct.len()), (52, 26));
}

#[test]
fn rational_field_terms() {
    let terms = decompose(&rationals(), 7, 1, 2, PrecisionBudget::default()).unwrap();
    assert_eq!(terms.len(), 6);
    for t in &terms {
        assert_eq!(t.character_value.order, if (1 + t.m) % 2 == 0 { 1 } else { 2 });
    }
}

#[test]
fn skeleton_for_rational_field() {
    let s = real_quadratic_skeleton(&rationals(), 5, PrecisionBudget::default()).unwrap();
    assert_eq!(s.terms.len(), 2);
    assert_eq!((s.terms[0].derivative, s.terms[0].coefficient.clone(), s.terms[0].log.power), (0, BigInt::from(1), 1));
    assert_eq!((s.terms[1].derivative, s.terms[1].coefficient.clone(), s.terms[1].log.power), (1, BigInt::from(-1), 0));
    assert!(s.terms.iter().all(|t| t.log.prime == 5 && t.log.norm_exponent == 1));
    assert_eq!(s.slots_per_term(), 4);
    assert_eq!(s.slots.iter().map(|x| x.sign).sum::<i32>(), 0);
}

#[test]
fn skeleton_for_example_one_at_five() {
    let s = real_quadratic_skeleton(&example_one(), 5, PrecisionBudget::default()).unwrap();
    assert_eq!(s.terms.iter().map(|t| t.coefficient.clone()).collect::<Vec<_>>(), [1, -3, 3, -1].map(BigInt::from));
    // two frames with kernels of size 3 and 1
    assert_eq!(s.slots_per_term(), 124 * (3 + 1));
}
