use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;

use super::Dyadic;
use crate::exact::PolyQ;

/// Closed interval with dyadic endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyadicInterval {
    lo: Dyadic,
    hi: Dyadic,
}

impl DyadicInterval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        DyadicInterval { lo, hi }
    }

    pub fn point(x: Dyadic) -> Self {
        DyadicInterval { lo: x.clone(), hi: x }
    }

    /// Tightest enclosure of `r` by multiples of `2^-bits`.
    pub fn from_rational(r: &BigRational, bits: u32) -> Self {
        let b = i64::from(bits);
        DyadicInterval { lo: Dyadic::floor_rational(r, b), hi: Dyadic::ceil_rational(r, b) }
    }

    pub fn lower(&self) -> &Dyadic {
        &self.lo
    }

    pub fn upper(&self) -> &Dyadic {
        &self.hi
    }

    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Dyadic {
        self.lo.midpoint(&self.hi)
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo.to_rational() <= x && x <= &self.hi.to_rational()
    }

    pub fn is_subset_of(&self, o: &DyadicInterval) -> bool {
        o.lo <= self.lo && self.hi <= o.hi
    }

    /// `+1` or `-1` if the whole interval lies strictly on one side of zero.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.signum() > 0 {
            Some(1)
        } else if self.hi.signum() < 0 {
            Some(-1)
        } else {
            None
        }
    }

    /// Outward rounding to `prec` significant bits per endpoint.
    pub fn rounded(&self, prec: u32) -> Self {
        DyadicInterval { lo: self.lo.round_down(prec), hi: self.hi.round_up(prec) }
    }

    pub fn add(&self, o: &Self) -> Self {
        DyadicInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Self) -> Self {
        DyadicInterval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn neg(&self) -> Self {
        DyadicInterval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let cands = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = cands.iter().min().expect("nonempty").clone();
        let hi = cands.iter().max().expect("nonempty").clone();
        DyadicInterval { lo, hi }
    }

    pub fn abs(&self) -> Self {
        if self.lo.signum() >= 0 {
            self.clone()
        } else if self.hi.signum() <= 0 {
            self.neg()
        } else {
            let hi = core::cmp::max(self.lo.abs(), self.hi.clone());
            DyadicInterval { lo: Dyadic::zero(), hi }
        }
    }

    /// Smallest interval containing both.
    pub fn hull(&self, o: &Self) -> Self {
        DyadicInterval {
            lo: core::cmp::min(self.lo.clone(), o.lo.clone()),
            hi: core::cmp::max(self.hi.clone(), o.hi.clone()),
        }
    }
}

impl fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo.to_f64_lossy(), self.hi.to_f64_lossy())
    }
}

/// Horner evaluation with outward rounding to `prec` bits after every step.
pub fn interval_eval(p: &PolyQ, x: &DyadicInterval, prec: u32) -> DyadicInterval {
    let mut acc = DyadicInterval::point(Dyadic::zero());
    for c in p.coeffs().iter().rev() {
        let c = DyadicInterval::from_rational(c, prec);
        acc = acc.mul(x).add(&c).rounded(prec);
    }
    acc
}

/// Determinant of a square interval matrix by expansion over column subsets,
/// which needs no division and so stays sound for enclosures containing zero.
pub fn interval_det(m: &[Vec<DyadicInterval>], prec: u32) -> DyadicInterval {
    let n = m.len();
    assert!(n <= 20, "interval determinant limited to n <= 20");
    let zero = DyadicInterval::point(Dyadic::zero());
    let mut dp = vec![zero.clone(); 1usize << n];
    dp[0] = DyadicInterval::point(Dyadic::from_int(1));
    for mask in 1usize..(1 << n) {
        let row = mask.count_ones() as usize - 1;
        let mut acc = zero.clone();
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let above = (mask >> (j + 1)).count_ones();
            let term = m[row][j].mul(&dp[mask ^ (1 << j)]);
            acc = if above % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        dp[mask] = acc.rounded(prec);
    }
    dp[(1 << n) - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn iv(a: i64, b: i64) -> DyadicInterval {
        DyadicInterval::new(Dyadic::from_int(a), Dyadic::from_int(b))
    }

    #[test]
    fn constant_and_square() {
        let c = interval_eval(&PolyQ::from_ints(&[5]), &iv(-3, 7), 64);
        assert_eq!(c, DyadicInterval::point(Dyadic::from_int(5)));
        let sq = interval_eval(&PolyQ::from_ints(&[0, 0, 1]), &iv(1, 2), 64);
        assert!(iv(1, 4).is_subset_of(&sq));
    }

    #[test]
    fn determinant_signs() {
        let pt = |x: i64| DyadicInterval::point(Dyadic::from_int(x));
        let m = vec![vec![pt(1), pt(0), pt(1)], vec![pt(0), pt(0), pt(-3)], vec![pt(0), pt(1), pt(2)]];
        assert_eq!(interval_det(&m, 64), pt(3));
    }

    #[test]
    fn rational_enclosure() {
        let r = rat(-22, 7);
        let e = DyadicInterval::from_rational(&r, 40);
        assert!(e.contains(&r));
        assert!(e.width().to_rational() <= rat(1, 1 << 30));
        assert!(DyadicInterval::from_rational(&int(3), 8).sign() == Some(1));
    }
}
