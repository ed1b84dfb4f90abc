use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Perm, ShintaniError, TieBreak};
use crate::exact::{MatQ, MatZ};
use crate::numfield::{log_regulator_sign, FieldElement, FieldSpec, RefinedEmbeddings};
use crate::realalg::{interval_det, sign_decide, DyadicInterval, PrecisionBudget};

/// The half-open unit interval used for one coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntervalKind {
    /// `[0, 1)`
    HalfOpenLow,
    /// `(0, 1]`
    HalfOpenHigh,
}

impl IntervalKind {
    pub fn as_str(self) -> &'static str {
        match self {
            IntervalKind::HalfOpenLow => "[0,1)",
            IntervalKind::HalfOpenHigh => "(0,1]",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "[0,1)" => Some(IntervalKind::HalfOpenLow),
            "(0,1]" => Some(IntervalKind::HalfOpenHigh),
            _ => None,
        }
    }

    pub fn contains(self, x: &BigRational) -> bool {
        match self {
            IntervalKind::HalfOpenLow => !x.is_negative() && x < &BigRational::one(),
            IntervalKind::HalfOpenHigh => x.is_positive() && x <= &BigRational::one(),
        }
    }
}

/// `x - floor(x)`, except that integers map to 1 on `(0, 1]`.
pub fn modified_frac(x: &BigRational, kind: IntervalKind) -> BigRational {
    let f = x - x.floor();
    if kind == IntervalKind::HalfOpenHigh && f.is_zero() {
        BigRational::one()
    } else {
        f
    }
}

/// Everything attached to one permutation `tau`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShintaniFrame {
    pub tau: Perm,
    /// `f_1 = 1`, `f_j = prod_{i<j} eps_{tau(i)}`.
    pub f: Vec<FieldElement>,
    pub weight: i32,
    /// Empty for a degenerate frame.
    pub kinds: Vec<IntervalKind>,
    /// Power-basis coordinates to `B_tau` coordinates; `None` for a degenerate frame.
    pub t_tau: Option<MatQ>,
    /// Column `j` holds the integral-basis coordinates of `f_j`.
    pub m_tau: MatZ,
    /// `|det M_tau|`, the number of algebraic integers in the box.
    pub kernel_index: BigInt,
}

impl ShintaniFrame {
    pub fn is_degenerate(&self) -> bool {
        self.weight == 0
    }

    pub fn label(&self) -> alloc::string::String {
        self.tau.label()
    }

    pub fn degree(&self) -> usize {
        self.f.len()
    }

    /// Matrix with columns `f_j` in the power basis.
    pub fn power_matrix(&self) -> MatQ {
        MatQ::from_cols(self.f.iter().map(|e| e.coords().to_vec()).collect()).expect("square")
    }
}

fn embedding_matrix(r: &RefinedEmbeddings, f: &[FieldElement]) -> Vec<Vec<DyadicInterval>> {
    let n = f.len();
    (0..n).map(|i| f.iter().map(|e| r.eval(e, i)).collect()).collect()
}

/// Builds the frame for `tau`; signs come from adaptive interval arithmetic.
pub fn build_frame(spec: &FieldSpec, tau: &Perm, budget: PrecisionBudget) -> Result<ShintaniFrame, ShintaniError> {
    let n = spec.degree();
    let nf = spec.field();
    if tau.len() != n - 1 {
        return Err(ShintaniError::Hypothesis(alloc::format!(
            "permutation {} does not act on {} units",
            tau.label(),
            n - 1
        )));
    }
    let eps = &spec.totally_positive_units;
    let mut f = Vec::with_capacity(n);
    f.push(nf.one());
    for j in 1..n {
        let next = nf.mul(&f[j - 1], &eps[tau.images()[j - 1]]);
        f.push(next);
    }
    let cols: Vec<Vec<BigRational>> = f.iter().map(|e| spec.integral_coords(e)).collect();
    let m_q = MatQ::from_cols(cols).expect("square");
    let m_tau = m_q.to_int().ok_or_else(|| {
        ShintaniError::Hypothesis("a product of the given units is not an algebraic integer".into())
    })?;
    let det_m = m_tau.det().expect("square");
    if det_m.is_zero() {
        return Ok(ShintaniFrame {
            tau: tau.clone(),
            f,
            weight: 0,
            kinds: Vec::new(),
            t_tau: None,
            m_tau,
            kernel_index: BigInt::zero(),
        });
    }
    let p_mat = MatQ::from_cols(f.iter().map(|e| e.coords().to_vec()).collect()).expect("square");
    let t_tau = p_mat.inverse().expect("nonsingular frame");

    let emb = spec.embeddings()?;
    let det_sign = sign_decide(
        "det A^tau",
        |bits| Ok(interval_det(&embedding_matrix(&emb.refined(bits), &f), bits + 32)),
        budget,
    )?;
    let reg_sign = log_regulator_sign(spec, &emb, eps, budget)?;
    let parity = if (n - 1).is_multiple_of(2) { 1 } else { -1 };
    let weight = parity * tau.sign() * det_sign * reg_sign;

    // A c = e_n: c_i = cofactor_{n,i} / det A
    let mut kinds = Vec::with_capacity(n);
    for i in 0..n {
        let s = if n == 1 {
            1
        } else {
            let cof = sign_decide(
                "a coefficient c_i of e_n",
                |bits| {
                    let a = embedding_matrix(&emb.refined(bits), &f);
                    let minor: Vec<Vec<DyadicInterval>> = a[..n - 1]
                        .iter()
                        .map(|row| row.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()).collect())
                        .collect();
                    let d = interval_det(&minor, bits + 32);
                    Ok(if (n - 1 + i).is_multiple_of(2) { d } else { d.neg() })
                },
                budget,
            )?;
            cof * det_sign
        };
        let low = match spec.tie_break {
            TieBreak::PlusLast => s > 0,
            TieBreak::MinusLast => s < 0,
        };
        kinds.push(if low { IntervalKind::HalfOpenLow } else { IntervalKind::HalfOpenHigh });
    }
    Ok(ShintaniFrame { tau: tau.clone(), f, weight, kinds, t_tau: Some(t_tau), m_tau, kernel_index: det_m.abs() })
}

/// All frames, one per permutation of the units, in lexicographic order.
pub fn build_frames(spec: &FieldSpec, budget: PrecisionBudget) -> Result<Vec<ShintaniFrame>, ShintaniError> {
    Perm::all(spec.degree() - 1).iter().map(|t| build_frame(spec, t, budget)).collect()
}

/// `det(A^tau)^2` enclosure contains `k^2 d_F`: a numeric cross-check of the kernel size.
pub fn kernel_size_consistent(spec: &FieldSpec, frame: &ShintaniFrame, bits: u32) -> Result<bool, ShintaniError> {
    let emb = spec.embeddings()?;
    let r = emb.refined(bits);
    let d = interval_det(&embedding_matrix(&r, &frame.f), bits + 32);
    let sq = d.mul(&d);
    let k = BigRational::from_integer(&frame.kernel_index * &frame.kernel_index * &spec.discriminant);
    Ok(sq.contains(&k))
}
