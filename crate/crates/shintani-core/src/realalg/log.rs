use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Dyadic, DyadicInterval, RealAlgError};

/// Fixed-point value `v * 2^-p`, rounded in a chosen direction.
fn div_round(num: &BigInt, den: &BigInt, up: bool) -> BigInt {
    let (q, r) = num.div_mod_floor(den);
    if up && !r.is_zero() {
        q + 1
    } else {
        q
    }
}

/// Directed bound on `atanh(t) = sum t^{2j+1}/(2j+1)` for `0 <= t <= 1/2`, where `t = tn * 2^-p`.
/// The upper bound includes the tail `t^{2N+1} / ((2N+1)(1-t^2)) <= 2 t^{2N+1}`.
fn atanh_fixed(tn: &BigInt, p: u64, up: bool) -> BigInt {
    let one = BigInt::one() << p;
    let t2 = div_round(&(tn * tn), &one, up);
    let mut power = tn.clone();
    let mut sum = BigInt::zero();
    let mut j: u64 = 0;
    while !power.is_zero() {
        sum += div_round(&power, &BigInt::from(2 * j + 1), up);
        power = div_round(&(&power * &t2), &one, up);
        j += 1;
        if up && power <= BigInt::one() {
            // remaining tail is below 2 ulps
            sum += 2;
            break;
        }
    }
    if up {
        sum += 2 * power;
    }
    sum
}

/// Bound on `log(m)` for `1 <= m < 2` given exactly as a dyadic, in units of `2^-p`.
fn log_mantissa(m: &Dyadic, p: u64, up: bool) -> BigInt {
    let one = BigInt::one() << p;
    // t = (m - 1)/(m + 1) is increasing in m; compute it with directed rounding.
    let r = m.to_rational();
    let num = (&r - BigInt::one()) * &one;
    let den = &r + BigInt::one();
    let t = num / den;
    let tn = if up { t.ceil() } else { t.floor() }.to_integer();
    2 * atanh_fixed(&tn, p, up)
}

fn log2_fixed(p: u64, up: bool) -> BigInt {
    let one = BigInt::one() << p;
    let tn = div_round(&one, &BigInt::from(3), up);
    2 * atanh_fixed(&tn, p, up)
}

/// Directed bound on `log(x)` for a positive dyadic `x`, as a dyadic.
fn log_bound(x: &Dyadic, prec: u32, up: bool) -> Dyadic {
    let k = x.log2_floor();
    let m = x.shl(-k);
    let guard = 16 + 64 - (k.unsigned_abs().leading_zeros() as u64);
    let p = u64::from(prec) + guard;
    let lm = log_mantissa(&m, p, up);
    // k * log 2 with the rounding direction matching the sign of k
    let l2 = log2_fixed(p, if k >= 0 { up } else { !up });
    let total = lm + BigInt::from(k) * l2;
    let d = Dyadic::new(total, -(p as i64));
    if up {
        d.round_up(prec)
    } else {
        d.round_down(prec)
    }
}

/// Rigorous enclosure of `log` over a positive interval, endpoints rounded outward to `prec` bits.
pub fn interval_log(x: &DyadicInterval, prec: u32) -> Result<DyadicInterval, RealAlgError> {
    if x.lower().signum() <= 0 {
        return Err(RealAlgError::NonPositiveLog);
    }
    let lo = log_bound(x.lower(), prec, false);
    let hi = log_bound(x.upper(), prec, true);
    Ok(DyadicInterval::new(lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use num_rational::BigRational;

    #[test]
    fn log_one_is_tight() {
        let one = DyadicInterval::point(Dyadic::from_int(1));
        let l = interval_log(&one, 64).unwrap();
        assert!(l.contains_zero());
        assert!(l.width().to_rational() <= rat(1, 1 << 60));
    }

    #[test]
    fn log_two() {
        let two = DyadicInterval::point(Dyadic::from_int(2));
        let l = interval_log(&two, 64).unwrap();
        assert!(l.width().to_rational() < rat(1, 1_000_000));
        assert!((l.midpoint().to_f64_lossy() - core::f64::consts::LN_2).abs() < 1e-15);
    }

    #[test]
    fn log_e_contains_one() {
        // e enclosed by partial sums of 1/k! plus a geometric tail bound
        let mut s = BigRational::zero();
        let mut term = BigRational::one();
        for k in 1..40 {
            s += &term;
            term /= BigRational::from_integer(k.into());
        }
        let e = DyadicInterval::new(
            Dyadic::floor_rational(&s, 120),
            Dyadic::ceil_rational(&(&s + &term * BigRational::from_integer(2.into())), 120),
        );
        let l = interval_log(&e, 100).unwrap();
        assert!(l.contains(&BigRational::one()));
        assert!(l.width().to_rational() < rat(1, 1 << 50));
    }

    #[test]
    fn small_and_large_arguments() {
        for (n, d) in [(1i64, 1000i64), (12345, 1), (3, 7)] {
            let x = DyadicInterval::from_rational(&rat(n, d), 80);
            let l = interval_log(&x, 64).unwrap();
            let f = (n as f64 / d as f64).ln();
            assert!((l.midpoint().to_f64_lossy() - f).abs() < 1e-12);
        }
        let neg = DyadicInterval::point(Dyadic::from_int(-1));
        assert!(interval_log(&neg, 64).is_err());
    }
}
