use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The exact value `mant * 2^exp`, normalized so that `mant` is odd (or zero with `exp = 0`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        if mant.is_zero() {
            return Dyadic { mant, exp: 0 };
        }
        let tz = mant.trailing_zeros().unwrap_or(0);
        Dyadic { mant: mant >> tz, exp: exp + tz as i64 }
    }

    pub fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), exp: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigInt::from(n), 0)
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::new(n, 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> i32 {
        if self.mant.is_positive() {
            1
        } else if self.mant.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as usize)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    /// Largest multiple of `2^-bits` that is `<= r`.
    pub fn floor_rational(r: &BigRational, bits: i64) -> Self {
        Self::new(scale_pow2(r, bits).floor().to_integer(), -bits)
    }

    /// Smallest multiple of `2^-bits` that is `>= r`.
    pub fn ceil_rational(r: &BigRational, bits: i64) -> Self {
        Self::new(scale_pow2(r, bits).ceil().to_integer(), -bits)
    }

    /// `floor(log2 |x|)` for nonzero `x`.
    pub fn log2_floor(&self) -> i64 {
        self.mant.bits() as i64 - 1 + self.exp
    }

    /// Rounds toward minus infinity keeping `prec` significant bits.
    pub fn round_down(&self, prec: u32) -> Self {
        self.round(prec, false)
    }

    /// Rounds toward plus infinity keeping `prec` significant bits.
    pub fn round_up(&self, prec: u32) -> Self {
        self.round(prec, true)
    }

    fn round(&self, prec: u32, up: bool) -> Self {
        let bits = self.mant.bits();
        let prec = u64::from(prec.max(2));
        if bits <= prec {
            return self.clone();
        }
        let shift = bits - prec;
        let divisor = BigInt::one() << shift;
        let (q, r) = self.mant.div_mod_floor(&divisor);
        let q = if up && !r.is_zero() { q + 1 } else { q };
        Self::new(q, self.exp + shift as i64)
    }

    pub fn midpoint(&self, o: &Dyadic) -> Dyadic {
        let s = self + o;
        Dyadic::new(s.mant, s.exp - 1)
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    /// `self * 2^k`
    pub fn shl(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            self.clone()
        } else {
            Dyadic { mant: self.mant.clone(), exp: self.exp + k }
        }
    }

    /// Nearest `f64`, for display only.
    pub fn to_f64_lossy(&self) -> f64 {
        let r = self.round_down(60);
        let m: i64 = (&r.mant).try_into().unwrap_or(0);
        let mut v = m as f64;
        let mut e = r.exp;
        while e > 0 {
            v *= 2.0;
            e -= 1;
        }
        while e < 0 {
            v *= 0.5;
            e += 1;
        }
        v
    }
}

fn scale_pow2(r: &BigRational, bits: i64) -> BigRational {
    if bits >= 0 {
        r * BigRational::from_integer(BigInt::one() << bits as usize)
    } else {
        r / BigRational::from_integer(BigInt::one() << (-bits) as usize)
    }
}

fn align(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt, i64) {
    let e = a.exp.min(b.exp);
    (&a.mant << (a.exp - e) as usize, &b.mant << (b.exp - e) as usize, e)
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, o: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let (a, b, e) = align(self, o);
        Dyadic::new(a + b, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, o: &Dyadic) -> Dyadic {
        self + &(-o)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, o: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mant * &o.mant, self.exp + o.exp)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, o: &Self) -> Ordering {
        let (a, b, _) = align(self, o);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mant, self.exp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn normalization_and_order() {
        let a = Dyadic::new(BigInt::from(12), 0);
        assert_eq!(a.mantissa(), &BigInt::from(3));
        assert_eq!(a.exponent(), 2);
        assert!(Dyadic::from_int(-3) < Dyadic::new(BigInt::from(-5), -1));
        assert_eq!(&Dyadic::new(1.into(), -1) + &Dyadic::new(1.into(), -1), Dyadic::from_int(1));
    }

    #[test]
    fn directed_rounding() {
        let x = Dyadic::new(BigInt::from(-0b10111), 0);
        assert_eq!(x.round_down(2).to_rational(), rat(-24, 1));
        assert_eq!(x.round_up(2).to_rational(), rat(-16, 1));
        let third = rat(1, 3);
        let lo = Dyadic::floor_rational(&third, 10).to_rational();
        let hi = Dyadic::ceil_rational(&third, 10).to_rational();
        assert!(lo < third && third < hi);
        assert_eq!(&hi - &lo, rat(1, 1024));
    }
}
