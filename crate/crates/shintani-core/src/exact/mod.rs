//! Exact integer, rational, polynomial and matrix arithmetic.

mod bernoulli;
mod mat;
mod poly;
pub(crate) mod polyfp;
mod ratfun;

pub use bernoulli::{bernoulli_numbers, bernoulli_poly, BernoulliTable};
pub use mat::{hnf, MatQ, MatZ};
pub use poly::PolyQ;
pub use polyfp::PolyFp;
pub use ratfun::RationalFunction;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(&'static str),
    #[error("denominator vanishes at z = 0")]
    DenominatorVanishesAtZero,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn checked_div(a: &BigRational, b: &BigRational) -> Result<BigRational, ExactError> {
    if b.is_zero() {
        Err(ExactError::DivisionByZero)
    } else {
        Ok(a / b)
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a BigRational>>(xs: I) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// `x - floor(x)`, always in `[0, 1)`.
pub fn frac(x: &BigRational) -> BigRational {
    x - x.floor()
}

pub fn is_integer(x: &BigRational) -> bool {
    x.denom().is_one()
}

/// Extended gcd with `g >= 0` and `s*a + t*b = g`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
