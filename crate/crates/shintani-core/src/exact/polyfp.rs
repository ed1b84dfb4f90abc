use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{ExactError, PolyQ};

/// Dense polynomial over F_p, coefficients in ascending degree and reduced into `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyFp {
    p: u64,
    coeffs: Vec<u64>,
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

pub(crate) fn reduce_bigint(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

impl PolyFp {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyFp { p, coeffs }
    }

    pub fn from_i64s(p: u64, coeffs: &[i64]) -> Self {
        let pi = p as i128;
        Self::new(
            p,
            coeffs.iter().map(|&c| (c as i128).rem_euclid(pi) as u64).collect(),
        )
    }

    /// Reduction of an integral polynomial; `None` if some coefficient is not an integer.
    pub fn reduce(poly: &PolyQ, p: u64) -> Option<Self> {
        let ints = poly.integer_coeffs()?;
        Some(Self::new(p, ints.iter().map(|c| reduce_bigint(c, p)).collect()))
    }

    pub fn zero(p: u64) -> Self {
        PolyFp { p, coeffs: Vec::new() }
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, o: &PolyFp) -> PolyFp {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(self.p, (0..n).map(|k| (self.coeff(k) + o.coeff(k)) % self.p).collect())
    }

    pub fn sub(&self, o: &PolyFp) -> PolyFp {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            self.p,
            (0..n).map(|k| (self.coeff(k) + self.p - o.coeff(k)) % self.p).collect(),
        )
    }

    pub fn mul(&self, o: &PolyFp) -> PolyFp {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, p)) % p;
            }
        }
        Self::new(p, out)
    }

    pub fn div_rem(&self, d: &PolyFp) -> Result<(PolyFp, PolyFp), ExactError> {
        let p = self.p;
        let dd = d.degree().ok_or(ExactError::DivisionByZero)?;
        let inv = invmod(d.coeffs[dd], p);
        let Some(sd) = self.degree().filter(|&s| s >= dd) else {
            return Ok((Self::zero(p), self.clone()));
        };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let q = mulmod(rem[k + dd], inv, p);
            if q != 0 {
                for (j, &c) in d.coeffs.iter().enumerate() {
                    rem[k + j] = (rem[k + j] + p - mulmod(q, c, p)) % p;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(p, quot), Self::new(p, rem)))
    }

    pub fn rem(&self, d: &PolyFp) -> Result<PolyFp, ExactError> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn monic(&self) -> PolyFp {
        match self.coeffs.last() {
            Some(&l) => {
                let inv = invmod(l, self.p);
                Self::new(self.p, self.coeffs.iter().map(|&c| mulmod(c, inv, self.p)).collect())
            }
            None => self.clone(),
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &PolyFp) -> PolyFp {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &PolyFp) -> Result<PolyFp, ExactError> {
        let mut base = self.rem(m)?;
        let mut acc = Self::new(self.p, vec![1]).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            base = base.mul(&base).rem(m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Irreducibility of a polynomial of degree `n` via gcd(x^{p^k} - x, f) = 1 for k <= n/2.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        let f = self.monic();
        let x = Self::x(self.p);
        let mut xpk = x.rem(&f).expect("nonzero modulus");
        for _ in 1..=n / 2 {
            xpk = xpk.pow_mod(self.p as u128, &f).expect("nonzero modulus");
            if f.gcd(&xpk.sub(&x)).degree() != Some(0) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_modulus_is_irreducible_mod_3() {
        let g = PolyFp::from_i64s(3, &[1, -2, -1, 1]);
        assert_eq!(g.coeffs(), &[1, 1, 2, 1]);
        assert!(g.is_irreducible());
    }

    #[test]
    fn ramified_prime_is_reducible() {
        // x^3 - x^2 - 2x + 1 = (x - 5)^3 mod 7
        let g = PolyFp::from_i64s(7, &[1, -2, -1, 1]);
        assert!(!g.is_irreducible());
        let r = PolyFp::from_i64s(7, &[-5, 1]);
        assert_eq!(g, r.mul(&r).mul(&r));
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = PolyFp::from_i64s(5, &[3, 1, 4, 1, 5, 9, 2]);
        let b = PolyFp::from_i64s(5, &[2, 0, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
    }
}
