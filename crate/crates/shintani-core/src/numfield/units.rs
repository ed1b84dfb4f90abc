use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{Embeddings, FieldElement, FieldSpec, NumberFieldError};
use crate::exact::{hnf, MatZ};
use crate::realalg::{interval_log, PrecisionBudget};

/// Rank over F_2 of a set of sign vectors (`true` = negative).
fn f2_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else { continue };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] {
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn sign_vector(spec: &FieldSpec, emb: &Embeddings, u: &FieldElement, budget: PrecisionBudget) -> Result<Vec<bool>, NumberFieldError> {
    Ok(spec.signs(emb, u, budget).map_err(NumberFieldError::RealAlg)?.iter().map(|&s| s < 0).collect())
}

/// `[O_F^x : O_F^{x,+}] = 2^rank` of the sign vectors of `-1, u_1, ..., u_{n-1}`.
pub fn unit_sign_index(spec: &FieldSpec, budget: PrecisionBudget) -> Result<u64, NumberFieldError> {
    let units = spec.fundamental_units.as_ref().ok_or(NumberFieldError::MissingFundamentalUnits)?;
    let emb = spec.embeddings()?;
    let mut rows = vec![vec![true; spec.degree()]];
    for u in units {
        rows.push(sign_vector(spec, &emb, u, budget)?);
    }
    Ok(1u64 << f2_rank(rows))
}

/// Generators of the totally positive units inside `<-1, u_1, ..., u_{n-1}>`.
///
/// An exponent vector `e` gives a totally positive unit `+-u^e` exactly when the sign
/// vector of `u^e` is all-positive or all-negative; those `e` form a lattice containing
/// `2Z^{n-1}`, whose Hermite basis determines the returned products.
pub fn derive_totally_positive_generators(
    spec: &FieldSpec,
    units: &[FieldElement],
    budget: PrecisionBudget,
) -> Result<Vec<FieldElement>, NumberFieldError> {
    let nf = spec.field();
    let n = spec.degree();
    let r = units.len();
    for u in units {
        nf.check(u)?;
        if !nf.is_unit_norm(u) || !spec.is_algebraic_integer(u) {
            return Err(NumberFieldError::NotAUnit);
        }
    }
    if r == 0 {
        return Ok(Vec::new());
    }
    let emb = spec.embeddings()?;
    let signs: Vec<Vec<bool>> = units
        .iter()
        .map(|u| sign_vector(spec, &emb, u, budget))
        .collect::<Result<_, _>>()?;
    assert!(r <= 24, "too many units for exhaustive sign enumeration");
    // lattice generators: 2 e_i plus every 0/1 vector whose sign sum is 0 or all-ones
    let mut gens: Vec<Vec<BigInt>> = (0..r)
        .map(|i| (0..r).map(|j| BigInt::from(if i == j { 2 } else { 0 })).collect())
        .collect();
    for mask in 1u32..(1 << r) {
        let mut s = vec![false; n];
        for (i, sv) in signs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                for (a, b) in s.iter_mut().zip(sv) {
                    *a ^= b;
                }
            }
        }
        if s.iter().all(|&x| !x) || s.iter().all(|&x| x) {
            gens.push((0..r).map(|i| BigInt::from((mask >> i) & 1)).collect());
        }
    }
    let basis = lattice_basis(&gens, r)?;
    basis
        .iter()
        .map(|e| {
            let mut acc = nf.one();
            for (u, k) in units.iter().zip(e) {
                let k = k.to_i64().ok_or(NumberFieldError::Shape("exponent overflow"))?;
                acc = nf.mul(&acc, &nf.pow(u, k)?);
            }
            if spec.signs(&emb, &acc, budget).map_err(NumberFieldError::RealAlg)?[0] < 0 {
                acc = nf.neg(&acc);
            }
            Ok(acc)
        })
        .collect()
}

/// Hermite basis of the full-rank lattice spanned by `gens` in `Z^r`.
fn lattice_basis(gens: &[Vec<BigInt>], r: usize) -> Result<Vec<Vec<BigInt>>, NumberFieldError> {
    // Reduce generators pairwise into an r x r triangular basis, then normalize.
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for g in gens {
        rows.push(g.clone());
        rows = triangularize(rows, r);
    }
    let m = MatZ::from_rows(rows).map_err(|_| NumberFieldError::Shape("unit lattice"))?;
    let (h, _) = hnf(&m).map_err(|_| NumberFieldError::Shape("unit lattice is not full rank"))?;
    Ok(h.to_rows())
}

/// Row-reduces a generating set to at most `r` independent rows spanning the same lattice.
fn triangularize(mut rows: Vec<Vec<BigInt>>, r: usize) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for c in 0..r {
        loop {
            let nz: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if nz.len() <= 1 {
                if let Some(&i) = nz.first() {
                    out.push(rows.swap_remove(i));
                }
                break;
            }
            let piv = *nz
                .iter()
                .min_by_key(|&&i| rows[i][c].magnitude().clone())
                .expect("nonempty");
            let prow = rows[piv].clone();
            for &i in &nz {
                if i != piv {
                    let q = &rows[i][c] / &prow[c];
                    for k in 0..r {
                        let t = &q * &prow[k];
                        rows[i][k] -= t;
                    }
                }
            }
        }
    }
    out
}

/// Exponents `a` with `target = prod basis_j^{a_j}` if the target lies in the group
/// generated by `basis` (modulo nothing: the identity is checked exactly).
///
/// Candidate exponents come from a floating approximation of the logarithm vectors;
/// membership is then verified by exact field arithmetic, so a `Some` result is certain.
pub fn express_in_units(
    spec: &FieldSpec,
    target: &FieldElement,
    basis: &[FieldElement],
    budget: PrecisionBudget,
) -> Result<Option<Vec<i64>>, NumberFieldError> {
    let nf = spec.field();
    let n = spec.degree();
    let r = basis.len();
    if r == 0 {
        return Ok((*target == nf.one()).then(Vec::new));
    }
    let emb = spec.embeddings()?;
    let refined = emb.refined(budget.current());
    let prec = refined.precision();
    let logv = |u: &FieldElement| -> Result<Vec<f64>, NumberFieldError> {
        (0..n - 1)
            .map(|i| {
                let v = refined.eval(u, i).abs();
                interval_log(&v, prec)
                    .map(|l| l.midpoint().to_f64_lossy())
                    .map_err(NumberFieldError::RealAlg)
            })
            .collect()
    };
    let cols: Vec<Vec<f64>> = basis.iter().map(&logv).collect::<Result<_, _>>()?;
    let rhs = logv(target)?;
    let Some(sol) = solve_f64(&cols, &rhs) else { return Ok(None) };
    let cand: Vec<i64> = sol.iter().map(|x| libm_round(*x)).collect();
    let mut acc = nf.one();
    for (u, &k) in basis.iter().zip(&cand) {
        acc = nf.mul(&acc, &nf.pow(u, k)?);
    }
    Ok((acc == *target).then_some(cand))
}

fn libm_round(x: f64) -> i64 {
    let t = x as i64;
    let f = x - t as f64;
    if f >= 0.5 {
        t + 1
    } else if f <= -0.5 {
        t - 1
    } else {
        t
    }
}

/// Solves `sum_j cols[j] * x_j = rhs` by Gaussian elimination with partial pivoting.
fn solve_f64(cols: &[Vec<f64>], rhs: &[f64]) -> Option<Vec<f64>> {
    let n = rhs.len();
    if cols.len() != n {
        return None;
    }
    let mut a: Vec<Vec<f64>> = (0..n).map(|i| {
        let mut row: Vec<f64> = cols.iter().map(|c| c[i]).collect();
        row.push(rhs[i]);
        row
    }).collect();
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))?;
        if a[p][c].abs() < 1e-12 {
            return None;
        }
        a.swap(c, p);
        for i in 0..n {
            if i != c {
                let f = a[i][c] / a[c][c];
                for k in c..=n {
                    a[i][k] -= f * a[c][k];
                }
            }
        }
    }
    Some((0..n).map(|i| a[i][n] / a[i][i]).collect())
}
