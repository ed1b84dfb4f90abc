use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ShintaniError;
use crate::exact::{PolyQ, RationalFunction};
use crate::exact::polyfp::reduce_bigint;

/// The system `A(z) X = v` whose solution generates the coordinates of `rho^{n+m}` in the
/// basis `1, rho, ..., rho^{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFunSystem {
    /// `p_0, ..., p_{n-1}` with `h = x^n + p_{n-1} x^{n-1} + ... + p_0`.
    pub coeffs: Vec<BigInt>,
    pub x: Vec<RationalFunction>,
    /// `1 + p_{n-1} z + ... + p_0 z^n`.
    pub denominator: PolyQ,
}

fn z_times(c: &BigInt) -> PolyQ {
    PolyQ::monomial(BigRational::from_integer(c.clone()), 1)
}

/// The polynomial matrix `A(z)`: `1` on the diagonal, `-z` below it, `z p_i` added in the
/// last column.
pub fn system_matrix(coeffs: &[BigInt]) -> Vec<Vec<PolyQ>> {
    let n = coeffs.len();
    let mut a = vec![vec![PolyQ::zero(); n]; n];
    for i in 0..n {
        a[i][i] = PolyQ::one();
        if i > 0 {
            a[i][i - 1] = PolyQ::monomial(-BigRational::one(), 1);
        }
        a[i][n - 1] = &a[i][n - 1] + &z_times(&coeffs[i]);
    }
    a
}

/// Fraction-free (Bareiss) determinant over `Q[z]`, with row pivoting.
pub fn poly_det(mut a: Vec<Vec<PolyQ>>) -> PolyQ {
    let n = a.len();
    if n == 0 {
        return PolyQ::one();
    }
    let mut sign = false;
    let mut prev = PolyQ::one();
    for k in 0..n - 1 {
        let Some(piv) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return PolyQ::zero();
        };
        if piv != k {
            a.swap(piv, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign { -&d } else { d }
}

/// Solves the system for a monic `h` of degree `n` with `h(0) != 0`.
pub fn build_genfun(h: &PolyQ) -> Result<GenFunSystem, ShintaniError> {
    let n = h.degree().unwrap_or(0);
    if n == 0 || !h.is_monic() {
        return Err(ShintaniError::Hypothesis("h must be monic of positive degree".into()));
    }
    let coeffs = h
        .integer_coeffs()
        .ok_or_else(|| ShintaniError::Hypothesis("h must have integer coefficients".into()))?;
    let coeffs: Vec<BigInt> = coeffs[..n].to_vec();
    if coeffs[0].is_zero() {
        return Err(ShintaniError::Consistency("h(0) = 0, so h is not irreducible".into()));
    }
    let denominator = PolyQ::from_bigints(&coeffs.iter().rev().cloned().collect::<Vec<_>>());
    let denominator = &PolyQ::one() + &(&denominator * &PolyQ::x());
    let a = system_matrix(&coeffs);
    let det = poly_det(a.clone());
    if det != denominator {
        return Err(ShintaniError::Consistency("det A(z) differs from 1 + p_{n-1} z + ... + p_0 z^n".into()));
    }
    let v: Vec<PolyQ> = coeffs.iter().map(|c| PolyQ::constant(BigRational::from_integer(-c))).collect();
    let mut x = Vec::with_capacity(n);
    for i in 0..n {
        let mut ai = a.clone();
        for (row, vi) in ai.iter_mut().zip(&v) {
            row[i] = vi.clone();
        }
        x.push(RationalFunction::new(poly_det(ai), denominator.clone())?);
    }
    Ok(GenFunSystem { coeffs, x, denominator })
}

impl GenFunSystem {
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    fn step(&self, c: &[BigInt]) -> Vec<BigInt> {
        let n = c.len();
        let last = &c[n - 1];
        (0..n)
            .map(|i| {
                let t = -(last * &self.coeffs[i]);
                if i == 0 { t } else { t + &c[i - 1] }
            })
            .collect()
    }

    /// Exact series coefficients `x(0), ..., x(count - 1)` via the companion recurrence.
    pub fn coefficients(&self, count: usize) -> Vec<Vec<BigInt>> {
        let mut out: Vec<Vec<BigInt>> = Vec::with_capacity(count);
        if count == 0 {
            return out;
        }
        out.push(self.coeffs.iter().map(|c| -c).collect());
        while out.len() < count {
            let next = self.step(out.last().expect("nonempty"));
            out.push(next);
        }
        out
    }

    /// `xbar(0), ..., xbar(count - 1)`: the coefficients reduced into `[0, p)`, computed
    /// entirely mod `p`.
    pub fn residues(&self, p: u64, count: usize) -> Vec<Vec<u64>> {
        let pc: Vec<u64> = self.coeffs.iter().map(|c| reduce_bigint(c, p)).collect();
        let n = pc.len();
        let p128 = u128::from(p);
        let mut out: Vec<Vec<u64>> = Vec::with_capacity(count);
        if count == 0 {
            return out;
        }
        out.push(pc.iter().map(|&c| (p - c) % p).collect());
        while out.len() < count {
            let c = out.last().expect("nonempty");
            let last = u128::from(c[n - 1]);
            let next = (0..n)
                .map(|i| {
                    let t = (p128 - last * u128::from(pc[i]) % p128) % p128;
                    let t = if i == 0 { t } else { (t + u128::from(c[i - 1])) % p128 };
                    t as u64
                })
                .collect();
            out.push(next);
        }
        out
    }
}
