use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;

use super::{hyp, LFunError};
use crate::numfield::{FieldElement, FieldSpec};
use crate::realalg::PrecisionBudget;
use crate::shintani::{build_frames, full_set, prime_setup, Perm, ShintaniPoint};

/// `exp(2 pi i numerator / order)` with `gcd(numerator, order) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    pub numerator: u64,
    pub order: u64,
}

impl RootOfUnity {
    pub fn new(numerator: u64, order: u64) -> Self {
        let a = numerator % order;
        let g = a.gcd(&order);
        RootOfUnity { numerator: a / g, order: order / g }
    }
}

/// One summand `chi * w_tau * sum_i zeta(s, A^tau, x~_tau(i, m))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTerm {
    pub tau: Perm,
    pub weight: i32,
    pub m: usize,
    /// The character value, a power of a primitive `d`-th root of unity.
    pub character_value: RootOfUnity,
    pub tuples: Vec<ShintaniPoint>,
    /// `f_{tau,1}, ..., f_{tau,n}`; `A^tau` is their embedding matrix.
    pub f: Vec<FieldElement>,
}

/// Terms for the character sending `rho` to `zeta_d^k`, over every frame with nonzero weight.
pub fn decompose(spec: &FieldSpec, p: u64, k: u64, d: u64, budget: PrecisionBudget) -> Result<Vec<DecompositionTerm>, LFunError> {
    let n = spec.degree();
    let setup = prime_setup(spec, p, None)?;
    let order = setup.ctx.group_order();
    if d <= 1 || order % u128::from(d) != 0 {
        return Err(hyp(format!("d = {d} must exceed 1 and divide p^n - 1 = {order}")));
    }
    if k.gcd(&d) != 1 {
        return Err(hyp(format!("gcd(k, d) = gcd({k}, {d}) is not 1")));
    }
    let frames = build_frames(spec, budget)?;
    let mut terms = Vec::new();
    for frame in frames.iter().filter(|f| !f.is_degenerate()) {
        let set = full_set(frame, spec, &setup)?;
        for (idx, row) in set.rows.into_iter().enumerate() {
            let m = idx + 1;
            let num = (u128::from(k % d) * ((n + m) as u128 % u128::from(d))) % u128::from(d);
            terms.push(DecompositionTerm {
                tau: frame.tau.clone(),
                weight: frame.weight,
                m,
                character_value: RootOfUnity::new(num as u64, d),
                tuples: row,
                f: frame.f.clone(),
            });
        }
    }
    Ok(terms)
}
