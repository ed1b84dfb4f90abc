use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::NumberFieldError;
use crate::exact::{MatQ, PolyQ};

/// Element of `Q(theta)` as coordinates in the power basis `1, theta, ..., theta^{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coords: Vec<BigRational>,
}

impl FieldElement {
    pub fn new(coords: Vec<BigRational>) -> Self {
        FieldElement { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigRational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn as_poly(&self) -> PolyQ {
        PolyQ::new(self.coords.clone())
    }

    pub fn render(&self) -> String {
        self.as_poly().render("t")
    }
}

/// The number field `Q[x]/(g)` for a monic irreducible `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberField {
    g: PolyQ,
    n: usize,
    /// `theta^{n+k}` reduced, for `k = 0..n-1`.
    high_powers: Vec<Vec<BigRational>>,
    /// `Tr(theta^k)` for `k = 0..n-1`.
    power_traces: Vec<BigRational>,
}

impl NumberField {
    pub fn new(g: PolyQ) -> Result<Self, NumberFieldError> {
        let n = match g.degree() {
            Some(n) if n >= 1 => n,
            _ => return Err(NumberFieldError::Degree),
        };
        if !g.is_monic() {
            return Err(NumberFieldError::NotMonic);
        }
        let mut high_powers: Vec<Vec<BigRational>> = Vec::with_capacity(n);
        // theta^n = -(g_0 + g_1 theta + ... + g_{n-1} theta^{n-1})
        let mut cur: Vec<BigRational> = (0..n).map(|k| -g.coeff(k)).collect();
        for _ in 0..n {
            high_powers.push(cur.clone());
            // multiply by theta
            let top = cur[n - 1].clone();
            let mut next = vec![BigRational::zero(); n];
            next[1..n].clone_from_slice(&cur[..n - 1]);
            for k in 0..n {
                next[k] += &top * &high_powers[0][k];
            }
            cur = next;
        }
        // Newton identities for monic g = x^n + c_{n-1} x^{n-1} + ... + c_0
        let c = |k: usize| g.coeff(k);
        let mut s: Vec<BigRational> = vec![BigRational::from_integer(n.into())];
        for k in 1..n {
            let mut acc = BigRational::from_integer(k.into()) * c(n - k);
            for i in 1..k {
                acc += c(n - i) * &s[k - i];
            }
            s.push(-acc);
        }
        Ok(NumberField { g, n, high_powers, power_traces: s })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn min_poly(&self) -> &PolyQ {
        &self.g
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::new(vec![BigRational::zero(); self.n])
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(&self, c: BigRational) -> FieldElement {
        let mut v = vec![BigRational::zero(); self.n];
        v[0] = c;
        FieldElement::new(v)
    }

    /// The generator `theta`.
    pub fn theta(&self) -> FieldElement {
        self.reduce_poly(&PolyQ::x())
    }

    pub fn check(&self, a: &FieldElement) -> Result<(), NumberFieldError> {
        if a.coords.len() == self.n {
            Ok(())
        } else {
            Err(NumberFieldError::Length { expected: self.n, found: a.coords.len() })
        }
    }

    /// Reduces an arbitrary polynomial in `theta` to coordinates.
    pub fn reduce_poly(&self, p: &PolyQ) -> FieldElement {
        let mut out = vec![BigRational::zero(); self.n];
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < self.n {
                out[k] += c;
            } else {
                // theta^k for k >= 2n is folded by repeated reduction
                let v = self.theta_pow(k);
                for (o, x) in out.iter_mut().zip(v.iter()) {
                    *o += c * x;
                }
            }
        }
        FieldElement::new(out)
    }

    fn theta_pow(&self, k: usize) -> Vec<BigRational> {
        if k < self.n {
            let mut v = vec![BigRational::zero(); self.n];
            v[k] = BigRational::one();
            return v;
        }
        if k < 2 * self.n {
            return self.high_powers[k - self.n].clone();
        }
        let half = self.theta_pow(k / 2);
        let rest = self.theta_pow(k - k / 2);
        self.mul(&FieldElement::new(half), &FieldElement::new(rest)).coords
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement::new(a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement::new(a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect())
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement::new(a.coords.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, a: &FieldElement, c: &BigRational) -> FieldElement {
        FieldElement::new(a.coords.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let n = self.n;
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        let mut out: Vec<BigRational> = prod[..n].to_vec();
        for (k, c) in prod[n..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, h) in out.iter_mut().zip(&self.high_powers[k]) {
                *o += c * h;
            }
        }
        FieldElement::new(out)
    }

    /// Matrix of multiplication by `a`: column `j` holds `a * theta^j`.
    pub fn mul_matrix(&self, a: &FieldElement) -> MatQ {
        let cols: Vec<Vec<BigRational>> =
            (0..self.n).map(|j| self.mul(a, &FieldElement::new(self.theta_pow(j))).coords).collect();
        MatQ::from_cols(cols).expect("square")
    }

    pub fn trace(&self, a: &FieldElement) -> BigRational {
        a.coords.iter().zip(&self.power_traces).map(|(x, t)| x * t).sum()
    }

    pub fn norm(&self, a: &FieldElement) -> BigRational {
        self.mul_matrix(a).det().expect("square")
    }

    pub fn inverse(&self, a: &FieldElement) -> Result<FieldElement, NumberFieldError> {
        if a.is_zero() {
            return Err(NumberFieldError::ZeroInverse);
        }
        let e1 = self.one().coords;
        let x = self.mul_matrix(a).solve(&e1).map_err(|_| NumberFieldError::ZeroInverse)?;
        Ok(FieldElement::new(x))
    }

    pub fn is_unit_norm(&self, a: &FieldElement) -> bool {
        self.norm(a).abs().is_one()
    }

    /// `a^e`; negative exponents require `a` to have norm `+-1`.
    pub fn pow(&self, a: &FieldElement, e: i64) -> Result<FieldElement, NumberFieldError> {
        let base = if e < 0 {
            if !self.is_unit_norm(a) {
                return Err(NumberFieldError::NotAUnit);
            }
            self.inverse(a)?
        } else {
            a.clone()
        };
        let mut k = e.unsigned_abs();
        let mut acc = self.one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            sq = self.mul(&sq, &sq);
            k >>= 1;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn ex1() -> NumberField {
        NumberField::new(PolyQ::from_ints(&[1, -2, -1, 1])).unwrap()
    }

    #[test]
    fn multiplication() {
        let k = ex1();
        let t = k.theta();
        assert_eq!(k.mul(&t, &t), FieldElement::from_ints(&[0, 0, 1]));
        let a = FieldElement::from_ints(&[3, -1, 4]);
        assert_eq!(k.mul(&a, &k.one()), a);
        // theta^3 = theta^2 + 2 theta - 1
        assert_eq!(k.pow(&t, 3).unwrap(), FieldElement::from_ints(&[-1, 2, 1]));
    }

    #[test]
    fn traces() {
        let k = ex1();
        assert_eq!(k.trace(&k.one()), int(3));
        assert_eq!(k.trace(&k.theta()), int(1));
        assert_eq!(k.trace(&FieldElement::from_ints(&[0, 0, 1])), int(5));
        let a = FieldElement::from_ints(&[2, -7, 3]);
        let m = k.mul_matrix(&a);
        let tr: BigRational = (0..3).map(|i| m[(i, i)].clone()).sum();
        assert_eq!(tr, k.trace(&a));
    }

    #[test]
    fn unit_inverse() {
        let k = ex1();
        let e1 = FieldElement::from_ints(&[0, 0, 1]);
        let inv = k.pow(&e1, -1).unwrap();
        assert_eq!(k.mul(&e1, &inv), k.one());
        assert_eq!(k.norm(&e1), int(1));
        assert!(k.pow(&FieldElement::from_ints(&[2, 0, 0]), -1).is_err());
        assert!(k.inverse(&k.zero()).is_err());
    }

    #[test]
    fn high_power_reduction() {
        let k = ex1();
        let t = k.theta();
        let direct = k.pow(&t, 11).unwrap();
        assert_eq!(k.reduce_poly(&PolyQ::monomial(int(1), 11)), direct);
    }
}
