use alloc::format;

use super::{hyp, LFunError};
use crate::numfield::is_prime;

fn powmod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u128;
    let mut x = u128::from(b % m);
    let m128 = u128::from(m);
    while e > 0 {
        if e & 1 == 1 {
            r = r * x % m128;
        }
        x = x * x % m128;
        e >>= 1;
    }
    r as u64
}

fn is_primitive_root(g: u64, p: u64) -> bool {
    if g.is_multiple_of(p) {
        return false;
    }
    let mut m = p - 1;
    let mut q = 2;
    while q * q <= m {
        if m.is_multiple_of(q) {
            if powmod(g, (p - 1) / q, p) == 1 {
                return false;
            }
            while m.is_multiple_of(q) {
                m /= q;
            }
        }
        q += 1;
    }
    m == 1 || powmod(g, (p - 1) / m, p) != 1
}

pub fn smallest_primitive_root(p: u64) -> Option<u64> {
    if !is_prime(p) {
        return None;
    }
    (1..p.max(2)).find(|&g| is_primitive_root(g, p)).or((p == 2).then_some(1))
}

fn check_p(p: u64) -> Result<(), LFunError> {
    if !is_prime(p) || p % 4 != 3 {
        return Err(hyp(format!("{p} is not a prime congruent to 3 mod 4")));
    }
    Ok(())
}

/// `h(Q(sqrt(-p)))` from the alternating digit sum of `1/p` in base `g`.
pub fn girstmair_oracle(p: u64, g: u64) -> Result<i64, LFunError> {
    check_p(p)?;
    if p < 7 {
        return Err(hyp("the digit formula needs p >= 7"));
    }
    if !is_primitive_root(g, p) {
        return Err(hyp(format!("{g} is not a primitive root mod {p}")));
    }
    let mut r = 1u128;
    let (g128, p128) = (u128::from(g), u128::from(p));
    let mut sum: i128 = 0;
    for k in 1..p {
        let t = g128 * r;
        let digit = (t / p128) as i128;
        r = t % p128;
        sum += if k % 2 == 0 { digit } else { -digit };
    }
    let den = i128::from(g) + 1;
    if sum % den != 0 {
        return Err(hyp(format!("digit sum {sum} is not divisible by g + 1 = {den}")));
    }
    Ok((sum / den) as i64)
}

/// `-(w / 2p) * sum_{r=1}^{p-1} (r | p) r`, with `w = 6` for `p = 3` and `2` otherwise.
pub fn dirichlet_oracle(p: u64) -> Result<i64, LFunError> {
    check_p(p)?;
    let w: i128 = if p == 3 { 6 } else { 2 };
    let mut s: i128 = 0;
    for r in 1..p {
        let leg = if powmod(r, (p - 1) / 2, p) == 1 { 1 } else { -1 };
        s += leg * i128::from(r);
    }
    let num = -w * s;
    let den = 2 * i128::from(p);
    if num % den != 0 {
        return Err(hyp(format!("Dirichlet sum {s} gives a non-integral value")));
    }
    Ok((num / den) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(girstmair_oracle(7, 3).unwrap(), 1);
        assert_eq!(girstmair_oracle(23, 5).unwrap(), 3);
        assert_eq!(girstmair_oracle(11, 2).unwrap(), 1);
        assert_eq!(dirichlet_oracle(7).unwrap(), 1);
        assert_eq!(dirichlet_oracle(23).unwrap(), 3);
        assert_eq!(dirichlet_oracle(3).unwrap(), 1);
        assert_eq!(smallest_primitive_root(23), Some(5));
        assert!(girstmair_oracle(7, 2).is_err());
        assert!(dirichlet_oracle(13).is_err());
    }
}
