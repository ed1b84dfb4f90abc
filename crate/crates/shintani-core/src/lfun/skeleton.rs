use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{hyp, LFunError};
use crate::exact::binomial;
use crate::numfield::{FieldElement, FieldSpec};
use crate::realalg::PrecisionBudget;
use crate::shintani::{build_frames, full_set, prime_setup, Perm, ShintaniPoint};

/// `(ln N(pO_F))^power = (ln p^norm_exponent)^power`, kept symbolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LogFactor {
    pub prime: u64,
    pub norm_exponent: usize,
    pub power: usize,
}

/// `coefficient * log * sum_slots w_tau (-1)^m zeta^{(derivative)}(0, A^tau, x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonTerm {
    pub derivative: usize,
    /// `(-1)^k binom(n, k)`.
    pub coefficient: BigInt,
    pub log: LogFactor,
}

/// One unevaluated `zeta^{(k)}(0, A^tau, x)` argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonSlot {
    pub tau: Perm,
    pub weight: i32,
    pub m: usize,
    pub sign: i32,
    pub f: Vec<FieldElement>,
    pub x: ShintaniPoint,
}

/// The derivative formula for `p = 1 (mod 4)`, with every transcendental factor symbolic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skeleton {
    pub degree: usize,
    pub p: u64,
    pub terms: Vec<SkeletonTerm>,
    /// Shared by every term.
    pub slots: Vec<SkeletonSlot>,
}

impl Skeleton {
    pub fn slots_per_term(&self) -> usize {
        self.slots.len()
    }
}

pub fn real_quadratic_skeleton(spec: &FieldSpec, p: u64, budget: PrecisionBudget) -> Result<Skeleton, LFunError> {
    if p % 4 != 1 {
        return Err(hyp(format!("p = {p} is not 1 mod 4")));
    }
    let n = spec.degree();
    let setup = prime_setup(spec, p, None)?;
    let mut slots = Vec::new();
    for frame in build_frames(spec, budget)?.iter().filter(|f| !f.is_degenerate()) {
        let set = full_set(frame, spec, &setup)?;
        for (idx, row) in set.rows.into_iter().enumerate() {
            let m = idx + 1;
            for x in row {
                slots.push(SkeletonSlot {
                    tau: frame.tau.clone(),
                    weight: frame.weight,
                    m,
                    sign: if m % 2 == 0 { 1 } else { -1 },
                    f: frame.f.clone(),
                    x,
                });
            }
        }
    }
    let terms = (0..=n)
        .map(|k| {
            let c = binomial(n as u64, k as u64);
            SkeletonTerm {
                derivative: k,
                coefficient: if k % 2 == 0 { c } else { -c },
                log: LogFactor { prime: p, norm_exponent: n, power: n - k },
            }
        })
        .collect();
    Ok(Skeleton { degree: n, p, terms, slots })
}
