mod common;

use std::time::Instant;

use common::*;
use num_bigint::BigInt;
use shintani_core::lfun::{
    class_number_cm, dirichlet_oracle, girstmair_oracle, smallest_primitive_root, ClassNumberParams,
};

#[test]
fn rational_field_battery() {
    let start = Instant::now();
    let q = rationals();
    for p in [7u64, 11, 19, 23, 31, 43, 47] {
        let rep = class_number_cm(&q, &ClassNumberParams::new(p, 2)).unwrap();
        assert_eq!(rep.q1, 2);
        let h = rep.class_number().unwrap();
        let g = smallest_primitive_root(p).unwrap();
        assert_eq!(h, BigInt::from(dirichlet_oracle(p).unwrap()), "p = {p}");
        assert_eq!(h, BigInt::from(girstmair_oracle(p, g).unwrap()), "p = {p}");
    }
    assert!(start.elapsed().as_secs_f64() < 1.0);
}

#[test]
fn rational_field_at_three() {
    let rep = class_number_cm(&rationals(), &ClassNumberParams::new(3, 6)).unwrap();
    assert_eq!(rep.h_k, r("1"));
    assert_eq!(dirichlet_oracle(3).unwrap(), 1);
}

#[test]
fn known_imaginary_quadratic_values() {
    assert_eq!(dirichlet_oracle(7).unwrap(), 1);
    assert_eq!(dirichlet_oracle(11).unwrap(), 1);
    assert_eq!(dirichlet_oracle(23).unwrap(), 3);
    assert_eq!(dirichlet_oracle(47).unwrap(), 5);
    assert_eq!(dirichlet_oracle(71).unwrap(), 7);
    assert_eq!(girstmair_oracle(7, 3).unwrap(), 1);
    assert_eq!(girstmair_oracle(23, 5).unwrap(), 3);
    assert_eq!(girstmair_oracle(11, 2).unwrap(), 1);
}

/// For `K = Q(sqrt 5, sqrt -p)` with unit index 1, `h_K = h(-p) h(-5p) / 2`.
#[test]
fn biquadratic_fields_over_golden_field() {
    let f = golden_field();
    for (p, w, expected) in [(3u64, 6u64, 1i64), (7, 2, 1), (23, 2, 3), (43, 2, 7)] {
        let rep = class_number_cm(&f, &ClassNumberParams::new(p, w)).unwrap();
        assert_eq!(rep.q1, 4);
        assert_eq!(rep.class_number(), Some(BigInt::from(expected)), "p = {p}");
    }
}
