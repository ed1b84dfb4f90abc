use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::frame::{kernel_size_consistent, modified_frac, ShintaniFrame};
use super::genfun::{build_genfun, GenFunSystem};
use super::{IntervalKind, Perm, ShintaniError};
use crate::exact::{hnf, MatQ, PolyFp, PolyQ};
use crate::ff::{FFContext, FFElement};
use crate::numfield::{is_inert, FieldSpec};

/// A point of `R^tau(pO_F)` in the basis `f_{tau,1}, ..., f_{tau,n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShintaniPoint {
    pub tau: Perm,
    pub coords: Vec<BigRational>,
}

impl ShintaniPoint {
    fn reduced(frame: &ShintaniFrame, raw: &[BigRational]) -> Self {
        ShintaniPoint {
            tau: frame.tau.clone(),
            coords: raw.iter().zip(&frame.kinds).map(|(x, &k)| modified_frac(x, k)).collect(),
        }
    }

    pub fn in_box(&self, kinds: &[IntervalKind]) -> bool {
        self.coords.len() == kinds.len() && self.coords.iter().zip(kinds).all(|(x, k)| k.contains(x))
    }
}

fn require_nondegenerate(frame: &ShintaniFrame) -> Result<&MatQ, ShintaniError> {
    frame.t_tau.as_ref().ok_or_else(|| ShintaniError::DegenerateFrame(frame.label()))
}

/// The additive identity: `0` on `[0,1)` coordinates, `1` on `(0,1]` coordinates.
pub fn identity_point(frame: &ShintaniFrame) -> Result<ShintaniPoint, ShintaniError> {
    require_nondegenerate(frame)?;
    let coords = frame
        .kinds
        .iter()
        .map(|k| match k {
            IntervalKind::HalfOpenLow => BigRational::zero(),
            IntervalKind::HalfOpenHigh => BigRational::from_integer(1.into()),
        })
        .collect();
    Ok(ShintaniPoint { tau: frame.tau.clone(), coords })
}

/// The group law: coordinatewise sum folded back into the box.
pub fn oplus(frame: &ShintaniFrame, a: &ShintaniPoint, b: &ShintaniPoint) -> Result<ShintaniPoint, ShintaniError> {
    if a.tau != frame.tau || b.tau != frame.tau || a.coords.len() != frame.kinds.len() || b.coords.len() != frame.kinds.len() {
        return Err(ShintaniError::FrameMismatch);
    }
    let sum: Vec<BigRational> = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
    Ok(ShintaniPoint::reduced(frame, &sum))
}

/// Inverse for the group law.
pub fn ominus(frame: &ShintaniFrame, a: &ShintaniPoint) -> Result<ShintaniPoint, ShintaniError> {
    let id = identity_point(frame)?;
    let raw: Vec<BigRational> = a.coords.iter().zip(&id.coords).map(|(x, e)| e + e - x).collect();
    Ok(ShintaniPoint::reduced(frame, &raw))
}

/// Algebraic integers in the box: one representative per class of `O_F / sum Z f_{tau,i}`,
/// identity first, then ordered by coordinates compared from the last one backwards.
pub fn kernel_enumerate(frame: &ShintaniFrame, spec: &FieldSpec) -> Result<Vec<ShintaniPoint>, ShintaniError> {
    let t = require_nondegenerate(frame)?;
    let n = frame.degree();
    let (h, _) = hnf(&frame.m_tau.transpose())?;
    let diag: Vec<u64> = (0..n)
        .map(|i| h[(i, i)].to_u64().ok_or_else(|| ShintaniError::Consistency("kernel index too large".into())))
        .collect::<Result<_, _>>()?;
    let ib_t = spec.integral_basis.transpose();
    let id = identity_point(frame)?;
    let mut seen = BTreeSet::new();
    let mut rest = Vec::new();
    let mut v = alloc::vec![0u64; n];
    loop {
        let vq: Vec<BigRational> = v.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        let power = ib_t.mul_vec(&vq)?;
        let pt = ShintaniPoint::reduced(frame, &t.mul_vec(&power)?);
        if !seen.insert(pt.coords.clone()) {
            return Err(ShintaniError::Consistency(format!("kernel representative repeated in frame {}", frame.label())));
        }
        if pt != id {
            rest.push(pt);
        }
        // odometer over the box 0 <= v_i < H_ii
        let mut i = 0;
        while i < n {
            v[i] += 1;
            if v[i] < diag[i] {
                break;
            }
            v[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    if !seen.contains(&id.coords) {
        return Err(ShintaniError::Consistency(format!("kernel of frame {} misses the identity", frame.label())));
    }
    if BigInt::from(seen.len()) != frame.kernel_index {
        return Err(ShintaniError::Consistency(format!(
            "kernel of frame {} has {} points, expected {}",
            frame.label(),
            seen.len(),
            frame.kernel_index
        )));
    }
    if !kernel_size_consistent(spec, frame, 64)? {
        return Err(ShintaniError::Consistency(format!(
            "det(A^tau)^2 enclosure excludes k^2 d_F in frame {}",
            frame.label()
        )));
    }
    rest.sort_by(|a, b| a.coords.iter().rev().cmp(b.coords.iter().rev()));
    let mut out = alloc::vec![id];
    out.extend(rest);
    Ok(out)
}

/// Data attached to the inert prime `p`: the residue field, the primitive `rho`, the lift
/// `h_rho`, the matrix `T_ff` (columns `rho^j` in the power basis) and the series residues.
#[derive(Debug, Clone)]
pub struct PrimeSetup {
    pub p: u64,
    pub ctx: FFContext,
    pub rho: FFElement,
    pub h: PolyQ,
    pub t_ff: MatQ,
    pub genfun: GenFunSystem,
    /// `xbar(m)` for `m = 0, ..., p^n - 1`.
    pub residues: Vec<Vec<u64>>,
}

impl PrimeSetup {
    /// `p^n - 1`.
    pub fn count(&self) -> usize {
        self.residues.len() - 1
    }
}

/// Checks that `p` is inert and builds the residue-field data; `rho` defaults to the class
/// of `theta` when that is primitive.
pub fn prime_setup(spec: &FieldSpec, p: u64, rho: Option<&[u64]>) -> Result<PrimeSetup, ShintaniError> {
    if !is_inert(spec, p)? {
        return Err(ShintaniError::Hypothesis(format!("{p} is not inert in {}", spec.name)));
    }
    let g = PolyFp::reduce(spec.min_poly(), p).ok_or_else(|| ShintaniError::Hypothesis("min_poly is not integral".into()))?;
    let ctx = FFContext::new(&g)?;
    let rho = match rho {
        Some(c) => {
            let r = ctx.element(c)?;
            let chosen = ctx.find_primitive(Some(&r));
            if chosen != r {
                return Err(ShintaniError::Hypothesis("the requested rho is not primitive".into()));
            }
            r
        }
        None => ctx.find_primitive(Some(&ctx.generator())),
    };
    let h = ctx.minimal_polynomial_lift(&rho, spec.min_poly())?;
    let t_ff = ctx.power_basis_change(&rho);
    let genfun = build_genfun(&h)?;
    let count = usize::try_from(ctx.group_order()).map_err(|_| ShintaniError::Consistency("p^n too large".into()))?;
    let residues = genfun.residues(p, count + 1);
    Ok(PrimeSetup { p, ctx, rho, h, t_ff, genfun, residues })
}

/// `x~_tau(1, m)`: the box reduction of `T_tau T_ff xbar(m) / p`.
pub fn coset_rep(frame: &ShintaniFrame, setup: &PrimeSetup, m: usize) -> Result<ShintaniPoint, ShintaniError> {
    let t = require_nondegenerate(frame)?;
    if m == 0 || m > setup.count() {
        return Err(ShintaniError::Hypothesis(format!("m = {m} outside 1..={}", setup.count())));
    }
    let xbar: Vec<BigRational> = setup.residues[m].iter().map(|&c| BigRational::from_integer(c.into())).collect();
    let power = setup.t_ff.mul_vec(&xbar)?;
    let p = BigRational::from_integer(setup.p.into());
    let raw: Vec<BigRational> = t.mul_vec(&power)?.into_iter().map(|x| x / &p).collect();
    Ok(ShintaniPoint::reduced(frame, &raw))
}

/// `R^tau(pO_F)` as the kernel plus the rows `x~_tau(i, m)`, `m = 1, ..., p^n - 1`.
#[derive(Debug, Clone)]
pub struct FullSet {
    pub kernel: Vec<ShintaniPoint>,
    /// `rows[m - 1][i - 1] = x~_tau(i, m)`.
    pub rows: Vec<Vec<ShintaniPoint>>,
}

impl FullSet {
    pub fn len(&self) -> usize {
        self.kernel.len() * (self.rows.len() + 1)
    }

    pub fn is_empty(&self) -> bool {
        self.kernel.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ShintaniPoint> {
        self.kernel.iter().chain(self.rows.iter().flatten())
    }
}

pub fn full_set(frame: &ShintaniFrame, spec: &FieldSpec, setup: &PrimeSetup) -> Result<FullSet, ShintaniError> {
    let kernel = kernel_enumerate(frame, spec)?;
    let mut seen: BTreeSet<Vec<BigRational>> = kernel.iter().map(|w| w.coords.clone()).collect();
    let mut rows = Vec::with_capacity(setup.count());
    for m in 1..=setup.count() {
        let c = coset_rep(frame, setup, m)?;
        let row: Vec<ShintaniPoint> = kernel.iter().map(|w| oplus(frame, &c, w)).collect::<Result<_, _>>()?;
        for pt in &row {
            if !pt.in_box(&frame.kinds) || !seen.insert(pt.coords.clone()) {
                return Err(ShintaniError::Consistency(format!(
                    "point x~({m}) of frame {} is repeated or outside the box",
                    frame.label()
                )));
            }
        }
        rows.push(row);
    }
    Ok(FullSet { kernel, rows })
}

/// `p * sum x_i f_{tau,i}` in the integral basis, reduced mod `p`.
pub fn pi_map(point: &ShintaniPoint, frame: &ShintaniFrame, spec: &FieldSpec, p: u64) -> Result<Vec<u64>, ShintaniError> {
    require_nondegenerate(frame)?;
    let pq = BigRational::from_integer(p.into());
    let scaled: Vec<BigRational> = point.coords.iter().map(|x| x * &pq).collect();
    let power = frame.power_matrix().mul_vec(&scaled)?;
    let elt = crate::numfield::FieldElement::new(power);
    spec.integral_coords(&elt)
        .iter()
        .map(|c| {
            if !c.is_integer() {
                return Err(ShintaniError::Consistency("pi image is not integral".into()));
            }
            let r = c.to_integer() % BigInt::from(p);
            let r = if r < BigInt::zero() { r + p } else { r };
            Ok(r.to_u64().expect("reduced mod p"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::numfield::FieldElement;
    use crate::realalg::PrecisionBudget;
    use crate::shintani::{build_frame, TieBreak};
    use alloc::vec;

    fn example_one() -> FieldSpec {
        FieldSpec::new(
            "ex1",
            PolyQ::from_ints(&[1, -2, -1, 1]),
            BigInt::from(49),
            None,
            Some(vec![FieldElement::from_ints(&[0, 1, 0]), FieldElement::from_ints(&[1, -1, 0])]),
            vec![FieldElement::from_ints(&[0, 0, 1]), FieldElement::from_ints(&[1, -2, 1])],
        )
        .unwrap()
        .with_tie_break(TieBreak::MinusLast)
    }

    fn pt(xs: &[(i64, i64)]) -> Vec<BigRational> {
        xs.iter().map(|&(a, b)| rat(a, b)).collect()
    }

    #[test]
    fn example_one_identity_frame() {
        let spec = example_one();
        let frame = build_frame(&spec, &Perm::identity(2), PrecisionBudget::default()).unwrap();
        assert_eq!(frame.weight, 1);
        assert_eq!(frame.kinds, [IntervalKind::HalfOpenLow, IntervalKind::HalfOpenHigh, IntervalKind::HalfOpenLow]);
        let ker: Vec<Vec<BigRational>> = kernel_enumerate(&frame, &spec).unwrap().into_iter().map(|p| p.coords).collect();
        assert_eq!(ker, [pt(&[(0, 1), (1, 1), (0, 1)]), pt(&[(2, 3), (1, 3), (1, 3)]), pt(&[(1, 3), (2, 3), (2, 3)])]);
        let setup = prime_setup(&spec, 3, None).unwrap();
        assert_eq!(coset_rep(&frame, &setup, 1).unwrap().coords, pt(&[(7, 9), (2, 9), (8, 9)]));
        let fs = full_set(&frame, &spec, &setup).unwrap();
        assert_eq!(fs.len(), 81);
        assert_eq!(fs.rows[0][1].coords, pt(&[(4, 9), (5, 9), (2, 9)]));
        let mut fibers = alloc::collections::BTreeMap::new();
        for x in fs.iter() {
            *fibers.entry(pi_map(x, &frame, &spec, 3).unwrap()).or_insert(0) += 1;
        }
        assert_eq!(fibers.len(), 27);
        assert!(fibers.values().all(|&c| c == 3));
    }

    #[test]
    fn example_one_transposition_frame() {
        let spec = example_one();
        let tau = Perm::parse("(12)", 2).unwrap();
        let frame = build_frame(&spec, &tau, PrecisionBudget::default()).unwrap();
        assert_eq!(frame.weight, 1);
        assert_eq!(frame.kinds, [IntervalKind::HalfOpenHigh, IntervalKind::HalfOpenLow, IntervalKind::HalfOpenHigh]);
        let setup = prime_setup(&spec, 3, None).unwrap();
        assert_eq!(coset_rep(&frame, &setup, 10).unwrap().coords, pt(&[(2, 3), (0, 1), (1, 1)]));
        assert_eq!(full_set(&frame, &spec, &setup).unwrap().len(), 27);
    }
}
