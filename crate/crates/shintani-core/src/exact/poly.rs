use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// Dense polynomial over Q, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyQ {
    coeffs: Vec<BigRational>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    pub fn div_rem(&self, d: &PolyQ) -> Result<(PolyQ, PolyQ), ExactError> {
        let dd = d.degree().ok_or(ExactError::DivisionByZero)?;
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree().filter(|&s| s >= dd) else {
            return Ok((PolyQ::zero(), self.clone()));
        };
        let mut quot = vec![BigRational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let q = &rem[k + dd] / &lead;
            if !q.is_zero() {
                for (j, c) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &q * c;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((PolyQ::new(quot), PolyQ::new(rem)))
    }

    pub fn rem(&self, d: &PolyQ) -> Result<PolyQ, ExactError> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact quotient; errors if `d` does not divide `self`.
    pub fn exact_div(&self, d: &PolyQ) -> Result<PolyQ, ExactError> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ExactError::Dimension("polynomial division is not exact"))
        }
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &PolyQ) -> PolyQ {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn pow(&self, e: u32) -> PolyQ {
        let mut acc = PolyQ::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Discriminant of a monic polynomial, via the resultant with its derivative.
    pub fn discriminant(&self) -> BigRational {
        let Some(n) = self.degree() else {
            return BigRational::zero();
        };
        if n == 0 {
            return BigRational::one();
        }
        let r = resultant(self, &self.derivative());
        let lead = self.coeffs[n].clone();
        let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
        r * BigRational::from_integer(sign.into()) / lead
    }
}

/// Resultant via the Euclidean algorithm over Q.
pub fn resultant(a: &PolyQ, b: &PolyQ) -> BigRational {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return BigRational::zero();
    };
    if db == 0 {
        return num_traits::pow(b.coeffs[0].clone(), da);
    }
    let r = a.rem(b).expect("nonzero divisor");
    let Some(dr) = r.degree() else {
        return BigRational::zero();
    };
    let sign = if (da * db) % 2 == 0 { 1 } else { -1 };
    let lb = num_traits::pow(b.coeffs[db].clone(), da - dr);
    resultant(b, &r) * lb * BigRational::from_integer(sign.into())
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyQ::new(out)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl PolyQ {
    /// Human-readable form such as `x^3 - x^2 - 2*x + 1`.
    pub fn render(&self, var: &str) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let unit = mag.is_one();
            if !unit || k == 0 {
                let _ = write!(s, "{mag}");
            }
            if k > 0 {
                if !unit {
                    s.push('*');
                }
                s.push_str(var);
                if k > 1 {
                    let _ = write!(s, "^{k}");
                }
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use alloc::string::ToString;

    #[test]
    fn division_roundtrip() {
        let a = PolyQ::from_ints(&[1, -2, -1, 1]);
        let b = PolyQ::from_ints(&[-1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert_eq!(r, PolyQ::constant(int(-1)));
    }

    #[test]
    fn discriminants_of_example_fields() {
        assert_eq!(PolyQ::from_ints(&[1, -2, -1, 1]).discriminant(), int(49));
        assert_eq!(PolyQ::from_ints(&[7, -6, -1, 1]).discriminant(), int(361));
        assert_eq!(PolyQ::from_ints(&[-2, 0, 1]).discriminant(), int(8));
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = PolyQ::from_ints(&[1, -2, 1]);
        assert!(!a.is_squarefree());
        assert!(PolyQ::from_ints(&[-2, 0, 1]).is_squarefree());
        assert_eq!(a.gcd(&PolyQ::from_ints(&[-1, 1])), PolyQ::from_ints(&[-1, 1]));
    }

    #[test]
    fn render() {
        assert_eq!(PolyQ::from_ints(&[1, -2, -1, 1]).to_string(), "x^3 - x^2 - 2*x + 1");
        assert_eq!(PolyQ::new(vec![rat(-1, 2), int(1)]).to_string(), "x - 1/2");
    }
}
