mod common;

use common::*;
use shintani_core::lfun::{class_number_cm, decompose, real_quadratic_skeleton, ClassNumberParams, LFunError};
use shintani_core::realalg::{sign_decide, Dyadic, DyadicInterval, PrecisionBudget, RealAlgError};

#[test]
fn ramified_prime_is_rejected() {
    let err = class_number_cm(&example_one(), &ClassNumberParams::new(7, 6)).unwrap_err();
    assert!(err.is_hypothesis(), "{err}");
}

#[test]
fn split_prime_is_rejected() {
    // 13 = -1 mod 7 splits completely in the cubic field of conductor 7
    let err = decompose(&example_one(), 13, 1, 2, PrecisionBudget::default()).unwrap_err();
    assert!(err.is_hypothesis());
}

#[test]
fn bad_character_order() {
    for (k, d) in [(1, 4), (1, 1), (2, 26), (13, 26)] {
        let err = decompose(&example_one(), 3, k, d, PrecisionBudget::default()).unwrap_err();
        assert!(err.is_hypothesis(), "k = {k}, d = {d}");
    }
}

#[test]
fn congruence_conditions() {
    assert!(class_number_cm(&rationals(), &ClassNumberParams::new(5, 2)).unwrap_err().is_hypothesis());
    assert!(real_quadratic_skeleton(&rationals(), 3, PrecisionBudget::default()).unwrap_err().is_hypothesis());
    for w in [5u64, 10, 0] {
        assert!(class_number_cm(&example_one(), &ClassNumberParams::new(3, w)).unwrap_err().is_hypothesis());
    }
}

#[test]
fn wrong_prefactor_is_reported_not_rounded() {
    match class_number_cm(&example_one(), &ClassNumberParams::new(3, 2)) {
        Err(LFunError::NonIntegral(rep)) => {
            assert_eq!(rep.h_k, r("1/3"));
            assert!(!rep.integral);
            assert_eq!(rep.frames[0].s.len(), 26);
        }
        other => panic!("expected a non-integral report, got {other:?}"),
    }
}

#[test]
fn missing_units_need_explicit_q1() {
    let mut spec = example_one();
    spec.fundamental_units = None;
    assert!(class_number_cm(&spec, &ClassNumberParams::new(3, 6)).unwrap_err().is_hypothesis());
    let params = ClassNumberParams { q1: Some(8), ..ClassNumberParams::new(3, 6) };
    assert_eq!(class_number_cm(&spec, &params).unwrap().h_k, r("1"));
}

#[test]
fn exact_zero_is_never_given_a_sign() {
    let mut calls = Vec::new();
    let res = sign_decide(
        "a forced zero",
        |bits| {
            calls.push(bits);
            Ok(DyadicInterval::point(Dyadic::zero()))
        },
        PrecisionBudget::new(128, 1024).unwrap(),
    );
    assert!(matches!(res, Err(RealAlgError::SignUndecided { bits: 1024, .. })));
    assert_eq!(calls, [128, 256, 512, 1024]);
}

#[test]
fn non_primitive_rho_is_rejected() {
    let params = ClassNumberParams { rho: Some(vec![1, 0, 0]), ..ClassNumberParams::new(3, 6) };
    assert!(class_number_cm(&example_one(), &params).unwrap_err().is_hypothesis());
}
