use alloc::sync::Arc;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{Dyadic, DyadicInterval, RealAlgError};
use crate::exact::PolyQ;

/// A real root of a squarefree polynomial together with an isolating interval.
///
/// Either `lo == hi` (the root is that dyadic number) or `p(lo)` and `p(hi)` are
/// nonzero with opposite signs and no other root lies in `[lo, hi]`.
#[derive(Debug, Clone)]
pub struct IsolatedRoot {
    poly: Arc<PolyQ>,
    lo: Dyadic,
    hi: Dyadic,
}

fn sign_at(p: &PolyQ, x: &Dyadic) -> i32 {
    let v = p.eval(&x.to_rational());
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

fn sturm_chain(p: &PolyQ) -> Vec<PolyQ> {
    let mut chain = alloc::vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn variations(chain: &[PolyQ], x: &Dyadic) -> usize {
    let x = x.to_rational();
    let mut last = 0i32;
    let mut count = 0;
    for q in chain {
        let v = q.eval(&x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of roots in the half-open interval `(a, b]`.
fn count(chain: &[PolyQ], a: &Dyadic, b: &Dyadic) -> usize {
    variations(chain, a) - variations(chain, b)
}

/// Cauchy bound rounded up to a power of two.
fn root_bound(p: &PolyQ) -> Dyadic {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let mut m = BigRational::zero();
    for c in &p.coeffs()[..p.coeffs().len() - 1] {
        let r = c.abs() / &lead;
        if r > m {
            m = r;
        }
    }
    let bound = m + BigRational::from_integer(1.into());
    let mut d = Dyadic::from_int(1);
    while d.to_rational() <= bound {
        d = d.shl(1);
    }
    d
}

/// All real roots of a squarefree polynomial, sorted ascending, with isolating intervals.
pub fn isolate_real_roots(p: &PolyQ) -> Result<Vec<IsolatedRoot>, RealAlgError> {
    match p.degree() {
        None | Some(0) => return Err(RealAlgError::Constant),
        _ => {}
    }
    if !p.is_squarefree() {
        return Err(RealAlgError::NotSquarefree);
    }
    let chain = sturm_chain(p);
    let b = root_bound(p);
    let poly = Arc::new(p.clone());
    let mut out = Vec::new();
    let mut stack = alloc::vec![(-&b, b)];
    while let Some((a, c)) = stack.pop() {
        match count(&chain, &a, &c) {
            0 => {}
            1 => out.push(settle(&poly, &chain, a, c)),
            _ => {
                let m = a.midpoint(&c);
                stack.push((m.clone(), c));
                stack.push((a, m));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    // Neighbouring intervals may share a bisection point; shrink until disjoint.
    for i in 1..out.len() {
        while out[i - 1].hi >= out[i].lo {
            out[i - 1] = out[i - 1].bisect();
            out[i] = out[i].bisect();
        }
    }
    Ok(out)
}

/// Turns a count-one interval `(a, c]` into an isolating interval with a strict sign change.
fn settle(poly: &Arc<PolyQ>, chain: &[PolyQ], mut a: Dyadic, mut c: Dyadic) -> IsolatedRoot {
    loop {
        if sign_at(poly, &c) == 0 {
            return IsolatedRoot { poly: poly.clone(), lo: c.clone(), hi: c };
        }
        if sign_at(poly, &a) != 0 {
            return IsolatedRoot { poly: poly.clone(), lo: a, hi: c };
        }
        let m = a.midpoint(&c);
        if count(chain, &a, &m) == 1 {
            c = m;
        } else {
            a = m;
        }
    }
}

impl IsolatedRoot {
    pub fn poly(&self) -> &PolyQ {
        &self.poly
    }

    pub fn interval(&self) -> DyadicInterval {
        DyadicInterval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    fn bisect(&self) -> IsolatedRoot {
        if self.is_exact() {
            return self.clone();
        }
        let m = self.lo.midpoint(&self.hi);
        let s = sign_at(&self.poly, &m);
        let (lo, hi) = if s == 0 {
            (m.clone(), m)
        } else if s == sign_at(&self.poly, &self.lo) {
            (m, self.hi.clone())
        } else {
            (self.lo.clone(), m)
        };
        IsolatedRoot { poly: self.poly.clone(), lo, hi }
    }

    /// Bisects until the width is at most `2^-bits`.
    pub fn refine(&self, bits: u32) -> IsolatedRoot {
        let target = Dyadic::new(1.into(), -i64::from(bits));
        let (mut lo, mut hi) = (self.lo.clone(), self.hi.clone());
        if lo == hi {
            return self.clone();
        }
        let slo = sign_at(&self.poly, &lo);
        while &hi - &lo > target {
            let m = lo.midpoint(&hi);
            let s = sign_at(&self.poly, &m);
            if s == 0 {
                lo = m.clone();
                hi = m;
                break;
            }
            if s == slo {
                lo = m;
            } else {
                hi = m;
            }
        }
        IsolatedRoot { poly: self.poly.clone(), lo, hi }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn sqrt_two() {
        let p = PolyQ::from_ints(&[-2, 0, 1]);
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        let r = roots[1].refine(64);
        assert!(r.interval().width().to_rational() <= rat(1, 1) / BigRational::from_integer(num_bigint::BigInt::from(1u128 << 64)));
        let lo = r.interval().lower().to_rational();
        assert!(&lo * &lo < int(2));
        let again = r.refine(64);
        assert!(again.interval().is_subset_of(&r.interval()));
    }

    #[test]
    fn cubic_example_fields() {
        for g in [[1, -2, -1, 1], [7, -6, -1, 1]] {
            let roots = isolate_real_roots(&PolyQ::from_ints(&g)).unwrap();
            assert_eq!(roots.len(), 3);
            for w in roots.windows(2) {
                assert!(w[0].interval().upper() < w[1].interval().lower());
            }
        }
        let top = isolate_real_roots(&PolyQ::from_ints(&[1, -2, -1, 1])).unwrap()[2].refine(40);
        let mid = top.interval().midpoint().to_f64_lossy();
        assert!((mid - 1.80194).abs() < 1e-5);
    }

    #[test]
    fn exact_rational_roots() {
        // x (x - 1/2) (x + 3)
        let p = &(&PolyQ::from_ints(&[0, 1]) * &PolyQ::new(alloc::vec![rat(-1, 2), int(1)]))
            * &PolyQ::from_ints(&[3, 1]);
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 3);
        for (r, v) in roots.iter().zip([int(-3), int(0), rat(1, 2)]) {
            assert!(r.refine(30).interval().contains(&v));
        }
    }

    #[test]
    fn rejects_repeated_roots() {
        assert!(matches!(
            isolate_real_roots(&PolyQ::from_ints(&[1, -2, 1])),
            Err(RealAlgError::NotSquarefree)
        ));
    }
}
