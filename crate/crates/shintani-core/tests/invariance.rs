mod common;

use common::*;
use num_rational::BigRational;
use shintani_core::lfun::{class_number_cm, ClassNumberParams, ClassNumberReport};
use shintani_core::numfield::FieldElement;
use shintani_core::shintani::prime_setup;

fn sorted_values(rep: &ClassNumberReport, frame: usize) -> Vec<BigRational> {
    let mut v: Vec<BigRational> = rep.frames[frame].s.iter().flatten().cloned().collect();
    v.sort();
    v
}

#[test]
fn other_primitive_element() {
    let spec = example_one();
    let base = class_number_cm(&spec, &ClassNumberParams::new(3, 6)).unwrap();
    let rho = vec![1, 1, 0];
    let setup = prime_setup(&spec, 3, Some(&rho)).unwrap();
    assert_ne!(setup.h, *spec.min_poly(), "rho must give a nontrivial change of basis");
    let params = ClassNumberParams { rho: Some(rho), ..ClassNumberParams::new(3, 6) };
    let other = class_number_cm(&spec, &params).unwrap();
    assert_eq!(other.h_k, base.h_k);
    assert_ne!(other.frames[0].s, base.frames[0].s);
    for i in 0..2 {
        assert_eq!(sorted_values(&other, i), sorted_values(&base, i));
    }
}

#[test]
fn swapped_units() {
    for spec in [example_one(), example_two()] {
        let base = class_number_cm(&spec, &ClassNumberParams::new(3, 6)).unwrap();
        let mut units: Vec<FieldElement> = spec.totally_positive_units.clone();
        units.swap(0, 1);
        let swapped = spec.clone().with_totally_positive_units(units).unwrap();
        let rep = class_number_cm(&swapped, &ClassNumberParams::new(3, 6)).unwrap();
        assert_eq!(rep.h_k, base.h_k);
        assert_eq!(rep.weighted_total, base.weighted_total);
    }
}
