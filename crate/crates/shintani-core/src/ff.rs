//! The residue field `F_{p^n} = F_p[x]/(g mod p)`: arithmetic, element orders, primitive
//! elements and the integral lift of their minimal polynomials.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exact::polyfp::{invmod, mulmod};
use crate::exact::{MatQ, PolyFp, PolyQ};

/// Largest multiplicative group order we factor by trial division.
pub const ORDER_CAP: u128 = 1 << 48;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FFError {
    #[error("modulus is not irreducible mod {0}")]
    Reducible(u64),
    #[error("p^n - 1 exceeds the factorization cap 2^48")]
    TooLarge,
    #[error("zero has no multiplicative order")]
    Zero,
    #[error("element has minimal polynomial of degree {found}, expected {expected}")]
    DegreeTooSmall { expected: usize, found: usize },
    #[error("element has coefficients outside the field")]
    Malformed,
}

/// Element of `F_{p^n}` in the basis `1, x, ..., x^{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FFElement {
    coeffs: Vec<u64>,
}

impl FFElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FFContext {
    p: u64,
    n: usize,
    modulus: PolyFp,
    order: u128,
    factors: Vec<(u128, u32)>,
}

fn factor(mut m: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            let mut e = 0;
            while m.is_multiple_of(d) {
                m /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

impl FFContext {
    pub fn new(modulus: &PolyFp) -> Result<Self, FFError> {
        let p = modulus.modulus();
        let n = modulus.degree().ok_or(FFError::Reducible(p))?;
        if !modulus.is_irreducible() {
            return Err(FFError::Reducible(p));
        }
        let mut q: u128 = 1;
        for _ in 0..n {
            q = q.checked_mul(u128::from(p)).ok_or(FFError::TooLarge)?;
        }
        let order = q - 1;
        if order > ORDER_CAP {
            return Err(FFError::TooLarge);
        }
        Ok(FFContext { p, n, modulus: modulus.monic(), order, factors: factor(order) })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> &PolyFp {
        &self.modulus
    }

    /// `p^n - 1`.
    pub fn group_order(&self) -> u128 {
        self.order
    }

    pub fn factorization(&self) -> &[(u128, u32)] {
        &self.factors
    }

    pub fn element(&self, coeffs: &[u64]) -> Result<FFElement, FFError> {
        if coeffs.len() > self.n || coeffs.iter().any(|&c| c >= self.p) {
            return Err(FFError::Malformed);
        }
        let mut c = coeffs.to_vec();
        c.resize(self.n, 0);
        Ok(FFElement { coeffs: c })
    }

    fn element_of(&self, f: &PolyFp) -> FFElement {
        let r = f.rem(&self.modulus).expect("nonzero modulus");
        FFElement { coeffs: (0..self.n).map(|k| r.coeff(k)).collect() }
    }

    fn to_poly(&self, a: &FFElement) -> PolyFp {
        PolyFp::new(self.p, a.coeffs.clone())
    }

    pub fn zero(&self) -> FFElement {
        FFElement { coeffs: vec![0; self.n] }
    }

    pub fn one(&self) -> FFElement {
        self.element_of(&PolyFp::new(self.p, vec![1]))
    }

    /// The class of `x`, i.e. the reduction of `theta`.
    pub fn generator(&self) -> FFElement {
        self.element_of(&PolyFp::x(self.p))
    }

    pub fn add(&self, a: &FFElement, b: &FFElement) -> FFElement {
        FFElement { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| (x + y) % self.p).collect() }
    }

    pub fn mul(&self, a: &FFElement, b: &FFElement) -> FFElement {
        self.element_of(&self.to_poly(a).mul(&self.to_poly(b)))
    }

    pub fn pow(&self, a: &FFElement, e: u128) -> FFElement {
        let r = self.to_poly(a).pow_mod(e, &self.modulus).expect("nonzero modulus");
        self.element_of(&r)
    }

    /// Multiplicative order, by removing prime factors from `p^n - 1` while the power stays 1.
    pub fn element_order(&self, a: &FFElement) -> Result<u128, FFError> {
        if a.is_zero() {
            return Err(FFError::Zero);
        }
        let one = self.one();
        let mut ord = self.order;
        for &(q, e) in &self.factors {
            for _ in 0..e {
                if self.pow(a, ord / q) == one {
                    ord /= q;
                } else {
                    break;
                }
            }
        }
        Ok(ord)
    }

    /// Monic minimal polynomial over `F_p`.
    pub fn minimal_polynomial(&self, a: &FFElement) -> PolyFp {
        let p = self.p;
        let mut powers = vec![self.one()];
        for d in 1..=self.n {
            let next = self.mul(&powers[d - 1], a);
            if let Some(c) = solve_mod_p(&powers, &next, p) {
                let mut coeffs: Vec<u64> = c.iter().map(|&x| (p - x) % p).collect();
                coeffs.push(1);
                return PolyFp::new(p, coeffs);
            }
            powers.push(next);
        }
        unreachable!("n + 1 vectors in an n-dimensional space are dependent")
    }

    fn is_primitive(&self, a: &FFElement) -> bool {
        !a.is_zero()
            && self.element_order(a) == Ok(self.order)
            && self.minimal_polynomial(a).degree() == Some(self.n)
    }

    /// `prefer` if it generates the multiplicative group, otherwise the first generator
    /// in the scan order `k = 1, 2, ...` with base-`p` digits of `k` as coefficients
    /// (constant term least significant).
    pub fn find_primitive(&self, prefer: Option<&FFElement>) -> FFElement {
        if let Some(a) = prefer {
            if self.is_primitive(a) {
                return a.clone();
            }
        }
        let mut k: u128 = 1;
        loop {
            let mut digits = Vec::with_capacity(self.n);
            let mut t = k;
            for _ in 0..self.n {
                digits.push((t % u128::from(self.p)) as u64);
                t /= u128::from(self.p);
            }
            let a = FFElement { coeffs: digits };
            if self.is_primitive(&a) {
                return a;
            }
            k += 1;
        }
    }

    /// Monic integral `h_rho` reducing to the minimal polynomial of `rho`: `g` itself when
    /// `rho` is the class of `theta`, balanced residues in `(-p/2, p/2]` otherwise.
    pub fn minimal_polynomial_lift(&self, rho: &FFElement, g: &PolyQ) -> Result<PolyQ, FFError> {
        let m = self.minimal_polynomial(rho);
        let d = m.degree().unwrap_or(0);
        if d != self.n {
            return Err(FFError::DegreeTooSmall { expected: self.n, found: d });
        }
        if *rho == self.generator() && PolyFp::reduce(g, self.p).is_some_and(|r| r.monic() == m) {
            return Ok(g.clone());
        }
        let p = self.p as i128;
        let coeffs: Vec<BigInt> = (0..=d)
            .map(|k| {
                let c = m.coeff(k) as i128;
                BigInt::from(if 2 * c > p { c - p } else { c })
            })
            .collect();
        Ok(PolyQ::from_bigints(&coeffs))
    }

    /// Matrix whose column `j` is `rho^j` in the basis `1, x, ..., x^{n-1}`, entries in `[0, p)`.
    pub fn power_basis_change(&self, rho: &FFElement) -> MatQ {
        let mut cols = Vec::with_capacity(self.n);
        let mut cur = self.one();
        for _ in 0..self.n {
            cols.push(cur.coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect());
            cur = self.mul(&cur, rho);
        }
        MatQ::from_cols(cols).expect("square")
    }

    /// Reduces integral coordinates into `[0, p)`.
    pub fn reduce_coords(&self, c: &[BigInt]) -> FFElement {
        FFElement { coeffs: c.iter().map(|x| crate::exact::polyfp::reduce_bigint(x, self.p)).collect() }
    }

    pub fn inverse(&self, a: &FFElement) -> Result<FFElement, FFError> {
        if a.is_zero() {
            return Err(FFError::Zero);
        }
        Ok(self.pow(a, self.order - 1))
    }
}

/// Coefficients `c` with `sum c_i v_i = t` over `F_p`, if any.
fn solve_mod_p(vs: &[FFElement], t: &FFElement, p: u64) -> Option<Vec<u64>> {
    let n = t.coeffs.len();
    let k = vs.len();
    let mut a: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut row: Vec<u64> = vs.iter().map(|v| v.coeffs[i]).collect();
            row.push(t.coeffs[i]);
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(pr) = (r..n).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, pr);
        let inv = invmod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = mulmod(*x, inv, p);
        }
        for i in 0..n {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..=k {
                    a[i][j] = (a[i][j] + p - mulmod(f, a[r][j], p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if (r..n).any(|i| a[i][k] != 0) {
        return None;
    }
    let mut sol = vec![0u64; k];
    for (row, &c) in pivots.iter().enumerate() {
        sol[c] = a[row][k];
    }
    Some(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn f27() -> FFContext {
        FFContext::new(&PolyFp::from_i64s(3, &[1, -2, -1, 1])).unwrap()
    }

    #[test]
    fn arithmetic_in_f27() {
        let k = f27();
        let x = k.generator();
        assert_eq!(k.pow(&x, 1), x);
        assert_eq!(k.mul(&x, &x).coeffs(), &[0, 0, 1]);
        assert_eq!(k.pow(&x, 26), k.one());
        assert_eq!(k.element_order(&k.one()), Ok(1));
        assert_eq!(k.element_order(&x), Ok(26));
        assert_eq!(k.element_order(&k.zero()), Err(FFError::Zero));
    }

    #[test]
    fn powers_enumerate_the_group() {
        let k = f27();
        let x = k.generator();
        let seen: BTreeSet<FFElement> = (1..=26).map(|m| k.pow(&x, m)).collect();
        assert_eq!(seen.len(), 26);
        assert!(!seen.contains(&k.zero()));
    }

    #[test]
    fn primitive_search() {
        let k = f27();
        assert_eq!(k.find_primitive(Some(&k.generator())), k.generator());
        let f7 = FFContext::new(&PolyFp::from_i64s(7, &[0, 1])).unwrap();
        assert_eq!(f7.find_primitive(None).coeffs(), &[3]);
        let two = f7.element(&[2]).unwrap();
        assert_eq!(f7.find_primitive(Some(&two)).coeffs(), &[3]);
    }

    #[test]
    fn lifts() {
        let g = PolyQ::from_ints(&[1, -2, -1, 1]);
        let k = f27();
        assert_eq!(k.minimal_polynomial_lift(&k.generator(), &g).unwrap(), g);
        let f7 = FFContext::new(&PolyFp::from_i64s(7, &[0, 1])).unwrap();
        let three = f7.element(&[3]).unwrap();
        assert_eq!(f7.minimal_polynomial_lift(&three, &PolyQ::from_ints(&[0, 1])).unwrap(), PolyQ::from_ints(&[-3, 1]));
    }

    #[test]
    fn basis_change() {
        let k = f27();
        assert_eq!(k.power_basis_change(&k.generator()), MatQ::identity(3));
        let rho = k.element(&[1, 1]).unwrap();
        let t = k.power_basis_change(&rho);
        let ints = |v: &[i64]| v.iter().map(|&x| BigRational::from_integer(x.into())).collect::<Vec<_>>();
        assert_eq!(t.col(0), ints(&[1, 0, 0]));
        assert_eq!(t.col(1), ints(&[1, 1, 0]));
        assert_eq!(t.col(2), ints(&[1, 2, 1]));
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert_eq!(FFContext::new(&PolyFp::from_i64s(7, &[1, -2, -1, 1])), Err(FFError::Reducible(7)));
    }
}
