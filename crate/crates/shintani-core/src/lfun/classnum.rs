use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::trace::TraceTable;
use super::{hyp, LFunError};
use crate::exact::{BernoulliTable, PolyQ};
use crate::numfield::{unit_sign_index, FieldElement, FieldSpec};
use crate::realalg::PrecisionBudget;
use crate::shintani::{build_frames, full_set, prime_setup, IntervalKind, Perm, PrimeSetup, ShintaniPoint};

/// Inputs to [`class_number_cm`] besides the field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassNumberParams {
    pub p: u64,
    pub w_k: u64,
    /// Computed from the fundamental units when absent.
    pub q1: Option<u64>,
    /// Taken from the field file when absent.
    pub q2: Option<u64>,
    /// Coordinates of a primitive element of `O_F / pO_F`; the class of `theta` (or the
    /// first primitive element in scan order) when absent.
    pub rho: Option<Vec<u64>>,
    pub budget: PrecisionBudget,
}

impl ClassNumberParams {
    pub fn new(p: u64, w_k: u64) -> Self {
        ClassNumberParams { p, w_k, q1: None, q2: None, rho: None, budget: PrecisionBudget::default() }
    }
}

/// One permutation's contribution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameReport {
    pub tau: Perm,
    pub weight: i32,
    pub f: Vec<FieldElement>,
    pub kinds: Vec<IntervalKind>,
    pub kernel: Vec<ShintaniPoint>,
    /// `|R^tau(pO_F)|`; zero for a degenerate frame.
    pub set_size: usize,
    /// `points[m - 1][i - 1] = x~_tau(i, m)`.
    pub points: Vec<Vec<ShintaniPoint>>,
    /// `s[m - 1][i - 1] = S_tau(i, m)`.
    pub s: Vec<Vec<BigRational>>,
    pub column_totals: Vec<BigRational>,
    /// Unweighted sum of every `S_tau(i, m)`.
    pub total: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassNumberReport {
    pub field: String,
    pub degree: usize,
    pub p: u64,
    pub w_k: u64,
    pub q1: u64,
    pub q2: u64,
    pub rho: Vec<u64>,
    pub h_rho: PolyQ,
    /// `xbar(m)` for `m = 1, ..., p^n - 1`.
    pub residues: Vec<Vec<u64>>,
    pub frames: Vec<FrameReport>,
    /// `sum_tau w_tau sum_{i,m} S_tau(i, m)`.
    pub weighted_total: BigRational,
    pub h_k: BigRational,
    pub integral: bool,
    pub warnings: Vec<String>,
}

fn euler_phi(mut m: u64) -> u64 {
    let mut out = m;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            while m.is_multiple_of(d) {
                m /= d;
            }
            out -= out / d;
        }
        d += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

pub(super) fn check_wk(w_k: u64, n: usize) -> Result<(), LFunError> {
    if w_k < 2 || !w_k.is_multiple_of(2) {
        return Err(hyp(format!("w_K = {w_k} must be even and at least 2")));
    }
    if !(2 * n as u64).is_multiple_of(euler_phi(w_k)) {
        return Err(hyp(format!("phi(w_K) = {} does not divide 2n = {}", euler_phi(w_k), 2 * n)));
    }
    Ok(())
}

/// Evaluates the class number formula with the standard Bernoulli polynomials.
pub fn class_number_cm(spec: &FieldSpec, params: &ClassNumberParams) -> Result<ClassNumberReport, LFunError> {
    class_number_cm_with(spec, params, &BernoulliTable::new(spec.degree()))
}

/// As [`class_number_cm`], with the Bernoulli polynomials supplied by the caller.
pub fn class_number_cm_with(
    spec: &FieldSpec,
    params: &ClassNumberParams,
    bern: &BernoulliTable,
) -> Result<ClassNumberReport, LFunError> {
    let n = spec.degree();
    let p = params.p;
    if p % 4 != 3 {
        return Err(hyp(format!("p = {p} is not 3 mod 4")));
    }
    check_wk(params.w_k, n)?;
    let mut warnings = Vec::new();
    let q1 = match params.q1 {
        Some(0) => return Err(hyp("Q1 must be positive")),
        Some(q) => q,
        None => unit_sign_index(spec, params.budget)
            .map_err(|_| hyp("Q1 is needed when the field file has no fundamental units"))?,
    };
    let q2 = params.q2.unwrap_or(spec.q2);
    if q2 == 0 {
        return Err(hyp("Q2 must be positive"));
    }
    if params.q2.is_none() && q2 == 1 {
        warnings.push(String::from("Q2 = 1 assumed"));
    }
    warnings.push(String::from("narrow class number 1 of F is assumed, not verified"));

    let setup: PrimeSetup = prime_setup(spec, p, params.rho.as_deref())?;
    let frames = build_frames(spec, params.budget)?;
    let mut reports = Vec::with_capacity(frames.len());
    let mut weighted_total = BigRational::zero();
    for frame in &frames {
        if frame.is_degenerate() {
            reports.push(FrameReport {
                tau: frame.tau.clone(),
                weight: 0,
                f: frame.f.clone(),
                kinds: Vec::new(),
                kernel: Vec::new(),
                set_size: 0,
                points: Vec::new(),
                s: Vec::new(),
                column_totals: Vec::new(),
                total: BigRational::zero(),
            });
            continue;
        }
        let set = full_set(frame, spec, &setup)?;
        let table = TraceTable::new(spec.field(), frame)?;
        let k = set.kernel.len();
        let mut column_totals = alloc::vec![BigRational::zero(); k];
        let mut s = Vec::with_capacity(set.rows.len());
        for (idx, row) in set.rows.iter().enumerate() {
            let m = idx + 1;
            let vals: Vec<BigRational> = row
                .iter()
                .map(|x| {
                    let v = table.sum(bern, &x.coords);
                    if m % 2 == 0 { v } else { -v }
                })
                .collect();
            for (c, v) in column_totals.iter_mut().zip(&vals) {
                *c += v;
            }
            s.push(vals);
        }
        let total: BigRational = column_totals.iter().cloned().sum();
        weighted_total += BigRational::from_integer(frame.weight.into()) * &total;
        reports.push(FrameReport {
            tau: frame.tau.clone(),
            weight: frame.weight,
            f: frame.f.clone(),
            kinds: frame.kinds.clone(),
            set_size: set.len(),
            kernel: set.kernel,
            points: set.rows,
            s,
            column_totals,
            total,
        });
    }
    let h_k = &weighted_total * BigRational::new(BigInt::from(params.w_k), BigInt::from(n as u64 * q1 * q2));
    let integral = h_k.is_integer() && h_k.is_positive();
    let report = ClassNumberReport {
        field: spec.name.clone(),
        degree: n,
        p,
        w_k: params.w_k,
        q1,
        q2,
        rho: setup.rho.coeffs().to_vec(),
        h_rho: setup.h.clone(),
        residues: setup.residues[1..].to_vec(),
        frames: reports,
        weighted_total,
        h_k,
        integral,
        warnings,
    };
    if !report.integral {
        return Err(LFunError::NonIntegral(Box::new(report)));
    }
    Ok(report)
}

impl ClassNumberReport {
    /// `h_K` as an integer; only meaningful when [`Self::integral`] holds.
    pub fn class_number(&self) -> Option<BigInt> {
        self.integral.then(|| self.h_k.to_integer())
    }

    /// Sizes `|R^tau(pO_F)|` per frame, in frame order.
    pub fn set_sizes(&self) -> Vec<usize> {
        self.frames.iter().map(|f| f.set_size).collect()
    }

}
