use num_rational::BigRational;
use shintani_cli::selftest::{selftest, SelftestOptions};
use shintani_cli::CliError;
use shintani_core::exact::{BernoulliTable, PolyQ};
use shintani_core::shintani::TieBreak;

#[test]
fn perturbed_bernoulli_fails_at_an_s_cell() {
    let mut polys: Vec<PolyQ> = (0..=3).map(|l| BernoulliTable::new(3).poly(l).clone()).collect();
    polys[2] = &polys[2] + &PolyQ::constant(BigRational::new(1.into(), 100.into()));
    let opts = SelftestOptions { bernoulli: Some(BernoulliTable::from_polys(polys)), ..Default::default() };
    match selftest(&opts) {
        Err(CliError::Mismatch(path)) => assert!(path.starts_with("example1.frames[0].s["), "{path}"),
        other => panic!("expected a mismatch, got {other:?}"),
    }
}

#[test]
fn perturbed_interval_kinds_fail_at_frame_comparison() {
    let opts = SelftestOptions { tie_break: Some(TieBreak::PlusLast), ..Default::default() };
    match selftest(&opts) {
        Err(CliError::Mismatch(path)) => assert!(path.starts_with("example1.frames[0]."), "{path}"),
        other => panic!("expected a mismatch, got {other:?}"),
    }
}

#[test]
fn unperturbed_selftest_passes() {
    assert_eq!(selftest(&SelftestOptions::default()).unwrap().len(), 3);
}
