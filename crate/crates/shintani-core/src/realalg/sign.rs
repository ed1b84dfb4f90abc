use super::{DyadicInterval, RealAlgError};

pub const DEFAULT_START_BITS: u32 = 128;
pub const DEFAULT_CAP_BITS: u32 = 4096;

/// Working precision schedule for adaptive sign determination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionBudget {
    current: u32,
    cap: u32,
}

impl PrecisionBudget {
    pub fn new(current: u32, cap: u32) -> Result<Self, RealAlgError> {
        if current == 0 || current > cap {
            return Err(RealAlgError::BadBudget { current, cap });
        }
        Ok(PrecisionBudget { current, cap })
    }

    /// Default start with the given cap; the start is lowered if the cap is below it.
    pub fn with_cap(cap: u32) -> Result<Self, RealAlgError> {
        Self::new(DEFAULT_START_BITS.min(cap), cap)
    }

    pub fn current(&self) -> u32 {
        self.current
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }
}

impl Default for PrecisionBudget {
    fn default() -> Self {
        PrecisionBudget { current: DEFAULT_START_BITS, cap: DEFAULT_CAP_BITS }
    }
}

/// Determines the sign of a nonzero real given by enclosures at increasing precision.
///
/// The producer is called with doubling precision from `budget.current()` up to
/// `budget.cap()`; the first enclosure that excludes zero decides.
pub fn sign_decide<F>(what: &str, mut producer: F, budget: PrecisionBudget) -> Result<i32, RealAlgError>
where
    F: FnMut(u32) -> Result<DyadicInterval, RealAlgError>,
{
    let mut bits = budget.current;
    loop {
        let enc = producer(bits)?;
        if let Some(s) = enc.sign() {
            return Ok(s);
        }
        if bits >= budget.cap {
            return Err(RealAlgError::SignUndecided { what: what.into(), bits });
        }
        bits = bits.saturating_mul(2).min(budget.cap);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::realalg::Dyadic;

    #[test]
    fn constant_third() {
        let s = sign_decide("1/3", |b| Ok(DyadicInterval::from_rational(&rat(1, 3), b)), PrecisionBudget::default());
        assert_eq!(s.unwrap(), 1);
    }

    #[test]
    fn exact_zero_is_undecided() {
        let mut calls = alloc::vec::Vec::new();
        let r = sign_decide(
            "zero",
            |b| {
                calls.push(b);
                Ok(DyadicInterval::point(Dyadic::zero()))
            },
            PrecisionBudget::default(),
        );
        assert!(matches!(r, Err(RealAlgError::SignUndecided { bits: 4096, .. })));
        assert_eq!(calls, [128, 256, 512, 1024, 2048, 4096]);
    }

    #[test]
    fn tiny_value_needs_refinement() {
        // 2^-300 is indistinguishable from zero at 128 bits of absolute precision
        let tiny = rat(1, 1) / num_rational::BigRational::from_integer(num_bigint::BigInt::from(1) << 300);
        let s = sign_decide("tiny", |b| Ok(DyadicInterval::from_rational(&-&tiny, b)), PrecisionBudget::default());
        assert_eq!(s.unwrap(), -1);
    }

    #[test]
    fn budget_validation() {
        assert!(PrecisionBudget::new(0, 10).is_err());
        assert!(PrecisionBudget::new(20, 10).is_err());
        assert_eq!(PrecisionBudget::with_cap(64).unwrap().current(), 64);
    }
}
