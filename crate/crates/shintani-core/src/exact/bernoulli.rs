use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{binomial, PolyQ};

/// B_0..=B_max with B_1 = -1/2, from sum_{k<=m} C(m+1, k) B_k = 0.
pub fn bernoulli_numbers(max: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(max + 1);
    b.push(BigRational::from_integer(1.into()));
    for m in 1..=max {
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += BigRational::from_integer(binomial(m as u64 + 1, k as u64)) * bk;
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// B_l(x) = sum_k C(l, k) B_k x^{l-k}.
pub fn bernoulli_poly(l: usize) -> PolyQ {
    BernoulliTable::new(l).poly(l).clone()
}

/// Bernoulli polynomials B_0..=B_max, computed once and shared.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    polys: Vec<PolyQ>,
}

impl BernoulliTable {
    pub fn new(max: usize) -> Self {
        let nums = bernoulli_numbers(max);
        let polys = (0..=max)
            .map(|l| {
                let mut c = alloc::vec![BigRational::zero(); l + 1];
                for (k, bk) in nums.iter().enumerate().take(l + 1) {
                    c[l - k] = BigRational::from_integer(binomial(l as u64, k as u64)) * bk;
                }
                PolyQ::new(c)
            })
            .collect();
        BernoulliTable { polys }
    }

    /// Builds a table from explicit polynomials; used to inject alternative implementations.
    pub fn from_polys(polys: Vec<PolyQ>) -> Self {
        BernoulliTable { polys }
    }

    pub fn max_index(&self) -> usize {
        self.polys.len().saturating_sub(1)
    }

    pub fn poly(&self, l: usize) -> &PolyQ {
        &self.polys[l]
    }

    pub fn eval(&self, l: usize, x: &BigRational) -> BigRational {
        self.polys[l].eval(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use alloc::vec;

    #[test]
    fn small_cases() {
        assert_eq!(bernoulli_poly(0), PolyQ::one());
        assert_eq!(bernoulli_poly(1), PolyQ::new(vec![rat(-1, 2), int(1)]));
        assert_eq!(
            bernoulli_poly(3),
            PolyQ::new(vec![int(0), rat(1, 2), rat(-3, 2), int(1)])
        );
        let b = bernoulli_numbers(12);
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[12], rat(-691, 2730));
        assert!(b[11].is_zero());
    }
}
