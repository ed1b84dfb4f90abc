use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use super::{ExactError, PolyQ};

/// Quotient of two polynomials, not necessarily in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    pub numerator: PolyQ,
    pub denominator: PolyQ,
}

impl RationalFunction {
    pub fn new(numerator: PolyQ, denominator: PolyQ) -> Result<Self, ExactError> {
        if denominator.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(RationalFunction { numerator, denominator })
    }

    /// Taylor coefficients at 0 from `den * f = num`, solved term by term.
    pub fn series_coefficients(&self, count: usize) -> Result<Vec<BigRational>, ExactError> {
        let q0 = self.denominator.coeff(0);
        if q0.is_zero() {
            return Err(ExactError::DenominatorVanishesAtZero);
        }
        let q = self.denominator.coeffs();
        let mut out: Vec<BigRational> = Vec::with_capacity(count);
        for m in 0..count {
            let mut acc = self.numerator.coeff(m);
            for (j, qj) in q.iter().enumerate().skip(1).take(m) {
                acc -= qj * &out[m - j];
            }
            out.push(acc / &q0);
        }
        Ok(out)
    }

    /// Structural equality as functions: `a/b == c/d` iff `a*d == b*c`.
    pub fn equals(&self, other: &RationalFunction) -> bool {
        &self.numerator * &other.denominator == &self.denominator * &other.numerator
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use alloc::vec;

    fn ints(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn example_series() {
        let d = PolyQ::from_ints(&[1, -1, -2, 1]);
        let x1 = RationalFunction::new(PolyQ::from_ints(&[-1]), d.clone()).unwrap();
        assert_eq!(x1.series_coefficients(4).unwrap(), ints(&[-1, -1, -3, -4]));
        let x2 = RationalFunction::new(PolyQ::from_ints(&[2, -1]), d).unwrap();
        assert_eq!(x2.series_coefficients(3).unwrap(), ints(&[2, 1, 5]));
    }

    #[test]
    fn geometric() {
        let f = RationalFunction::new(PolyQ::from_ints(&[3]), PolyQ::from_ints(&[1, -3])).unwrap();
        assert_eq!(f.series_coefficients(4).unwrap(), ints(&[3, 9, 27, 81]));
    }

    #[test]
    fn vanishing_denominator() {
        let f = RationalFunction::new(PolyQ::one(), PolyQ::from_ints(&[0, 1])).unwrap();
        assert_eq!(f.series_coefficients(2), Err(ExactError::DenominatorVanishesAtZero));
        assert!(RationalFunction::new(PolyQ::one(), PolyQ::new(vec![])).is_err());
    }
}
