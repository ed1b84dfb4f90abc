use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::exact::{factorial, BernoulliTable};
use crate::numfield::NumberField;
use crate::shintani::{ShintaniError, ShintaniFrame, ShintaniPoint};

/// For one frame: every composition `l` of `n` into `n` nonnegative parts together with
/// `Tr(prod f_k^{l_k - 1}) / prod l_k!`.
#[derive(Debug, Clone)]
pub struct TraceTable {
    n: usize,
    entries: Vec<(Vec<usize>, BigRational)>,
}

fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { alloc::vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl TraceTable {
    pub fn new(field: &NumberField, frame: &ShintaniFrame) -> Result<Self, ShintaniError> {
        let n = frame.degree();
        let inverses: Vec<_> = frame.f.iter().map(|f| field.inverse(f)).collect::<Result<_, _>>()?;
        let mut entries = Vec::new();
        for l in compositions(n, n) {
            let mut prod = field.one();
            let mut fact = BigInt::from(1);
            for (k, &lk) in l.iter().enumerate() {
                fact *= factorial(lk as u64);
                if lk == 0 {
                    prod = field.mul(&prod, &inverses[k]);
                } else {
                    for _ in 1..lk {
                        prod = field.mul(&prod, &frame.f[k]);
                    }
                }
            }
            let coef = field.trace(&prod) / BigRational::from_integer(fact);
            if !coef.is_zero() {
                entries.push((l, coef));
            }
        }
        Ok(TraceTable { n, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `sum_l prod_k B_{l_k}(x_k) / l_k! * Tr(prod_k f_k^{l_k - 1})`.
    pub fn sum(&self, bern: &BernoulliTable, x: &[BigRational]) -> BigRational {
        assert!(bern.max_index() >= self.n, "Bernoulli table too short");
        let vals: Vec<Vec<BigRational>> =
            x.iter().map(|xk| (0..=self.n).map(|l| bern.eval(l, xk)).collect()).collect();
        let mut acc = BigRational::zero();
        for (l, coef) in &self.entries {
            let mut t = coef.clone();
            for (k, &lk) in l.iter().enumerate() {
                t *= &vals[k][lk];
            }
            acc += t;
        }
        acc
    }
}

/// The inner sum of the class number formula at one point, without the sign `(-1)^m`.
pub fn bernoulli_trace_sum(field: &NumberField, frame: &ShintaniFrame, x: &ShintaniPoint) -> Result<BigRational, ShintaniError> {
    let table = TraceTable::new(field, frame)?;
    Ok(table.sum(&BernoulliTable::new(frame.degree()), &x.coords))
}

/// `zeta(0, A^tau, x) = (-1)^n / n * bernoulli_trace_sum`.
pub fn zeta_at_zero(field: &NumberField, frame: &ShintaniFrame, x: &ShintaniPoint) -> Result<BigRational, ShintaniError> {
    let n = frame.degree();
    let s = bernoulli_trace_sum(field, frame, x)? / BigRational::from_integer(BigInt::from(n));
    Ok(if n.is_multiple_of(2) { s } else { -s })
}

#[cfg(test)]
mod tests {
    use super::compositions;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(1, 1), [[1]]);
        assert_eq!(compositions(4, 4).len(), 35);
    }
}
