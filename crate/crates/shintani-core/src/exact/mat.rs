use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ext_gcd, ExactError};

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type MatQ = Mat<BigRational>;
pub type MatZ = Mat<BigInt>;

impl<T: Clone> Mat<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::Dimension("ragged rows"));
        }
        Ok(Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_cols(cols: Vec<Vec<T>>) -> Result<Self, ExactError> {
        Ok(Self::from_rows(cols)?.transpose())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

macro_rules! ring_ops {
    ($t:ty) => {
        impl Mat<$t> {
            pub fn zeros(rows: usize, cols: usize) -> Self {
                Self::from_fn(rows, cols, |_, _| <$t>::zero())
            }

            pub fn identity(n: usize) -> Self {
                Self::from_fn(n, n, |i, j| if i == j { <$t>::one() } else { <$t>::zero() })
            }

            pub fn mul(&self, o: &Self) -> Result<Self, ExactError> {
                if self.cols != o.rows {
                    return Err(ExactError::Dimension("matrix product"));
                }
                Ok(Self::from_fn(self.rows, o.cols, |i, j| {
                    (0..self.cols).fold(<$t>::zero(), |acc, k| acc + &self[(i, k)] * &o[(k, j)])
                }))
            }

            pub fn mul_vec(&self, v: &[$t]) -> Result<Vec<$t>, ExactError> {
                if self.cols != v.len() {
                    return Err(ExactError::Dimension("matrix-vector product"));
                }
                Ok((0..self.rows)
                    .map(|i| self.row(i).iter().zip(v).fold(<$t>::zero(), |acc, (a, b)| acc + a * b))
                    .collect())
            }
        }
    };
}

ring_ops!(BigRational);
ring_ops!(BigInt);

impl MatQ {
    pub fn from_int(m: &MatZ) -> Self {
        m.map(|x| BigRational::from_integer(x.clone()))
    }

    /// `Some` if every entry is an integer.
    pub fn to_int(&self) -> Option<MatZ> {
        self.data
            .iter()
            .all(BigRational::is_integer)
            .then(|| self.map(BigRational::to_integer))
    }

    /// Row echelon form by Gaussian elimination; returns (echelon, rank, sign of permutation).
    fn echelon(&self) -> (Self, usize, bool) {
        let mut a = self.clone();
        let mut rank = 0;
        let mut flipped = false;
        for j in 0..a.cols {
            let Some(piv) = (rank..a.rows).find(|&i| !a[(i, j)].is_zero()) else {
                continue;
            };
            if piv != rank {
                a.swap_rows(piv, rank);
                flipped = !flipped;
            }
            for i in rank + 1..a.rows {
                if a[(i, j)].is_zero() {
                    continue;
                }
                let f = &a[(i, j)] / &a[(rank, j)];
                for k in j..a.cols {
                    let t = &f * &a[(rank, k)];
                    a[(i, k)] -= t;
                }
            }
            rank += 1;
            if rank == a.rows {
                break;
            }
        }
        (a, rank, flipped)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1
    }

    pub fn det(&self) -> Result<BigRational, ExactError> {
        if !self.is_square() {
            return Err(ExactError::Dimension("determinant of non-square matrix"));
        }
        let (e, rank, flipped) = self.echelon();
        if rank < self.rows {
            return Ok(BigRational::zero());
        }
        let d = (0..self.rows).fold(BigRational::one(), |acc, i| acc * &e[(i, i)]);
        Ok(if flipped { -d } else { d })
    }

    /// Solves `self * X = B` by Gauss-Jordan elimination.
    pub fn solve_mat(&self, b: &MatQ) -> Result<MatQ, ExactError> {
        let n = self.rows;
        if !self.is_square() || b.rows != n {
            return Err(ExactError::Dimension("linear system"));
        }
        let w = n + b.cols;
        let mut a = Self::from_fn(n, w, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else {
                b[(i, j - n)].clone()
            }
        });
        for j in 0..n {
            let piv = (j..n).find(|&i| !a[(i, j)].is_zero()).ok_or(ExactError::Singular)?;
            a.swap_rows(piv, j);
            let inv = a[(j, j)].recip();
            for k in j..w {
                a[(j, k)] *= &inv;
            }
            for i in 0..n {
                if i == j || a[(i, j)].is_zero() {
                    continue;
                }
                let f = a[(i, j)].clone();
                for k in j..w {
                    let t = &f * &a[(j, k)];
                    a[(i, k)] -= t;
                }
            }
        }
        Ok(Self::from_fn(n, b.cols, |i, j| a[(i, n + j)].clone()))
    }

    pub fn solve(&self, b: &[BigRational]) -> Result<Vec<BigRational>, ExactError> {
        let rhs = Self::from_fn(b.len(), 1, |i, _| b[i].clone());
        Ok(self.solve_mat(&rhs)?.col(0))
    }

    pub fn inverse(&self) -> Result<MatQ, ExactError> {
        self.solve_mat(&Self::identity(self.rows))
    }
}

impl MatZ {
    pub fn det(&self) -> Result<BigInt, ExactError> {
        Ok(MatQ::from_int(self).det()?.to_integer())
    }
}

/// Hermite normal form by unimodular row operations: returns `(H, U)` with `H = U * M`,
/// `H` upper triangular, positive pivots, and entries above each pivot reduced into `[0, pivot)`.
pub fn hnf(m: &MatZ) -> Result<(MatZ, MatZ), ExactError> {
    if !m.is_square() {
        return Err(ExactError::Dimension("hnf of non-square matrix"));
    }
    let n = m.rows;
    let mut h = m.clone();
    let mut u = MatZ::identity(n);
    for j in 0..n {
        for i in j + 1..n {
            if h[(i, j)].is_zero() {
                continue;
            }
            let (g, s, t) = ext_gcd(&h[(j, j)], &h[(i, j)]);
            let a = &h[(j, j)] / &g;
            let b = &h[(i, j)] / &g;
            // [s t; -b a] has determinant s*a + t*b = 1.
            for mat in [&mut h, &mut u] {
                for k in 0..n {
                    let rj = mat[(j, k)].clone();
                    let ri = mat[(i, k)].clone();
                    mat[(j, k)] = &s * &rj + &t * &ri;
                    mat[(i, k)] = &a * &ri - &b * &rj;
                }
            }
        }
        if h[(j, j)].is_zero() {
            return Err(ExactError::Singular);
        }
        if h[(j, j)].is_negative() {
            for mat in [&mut h, &mut u] {
                for k in 0..n {
                    mat[(j, k)] = -mat[(j, k)].clone();
                }
            }
        }
        for i in 0..j {
            let q = h[(i, j)].div_floor(&h[(j, j)]);
            if q.is_zero() {
                continue;
            }
            for mat in [&mut h, &mut u] {
                for k in 0..n {
                    let t = &q * &mat[(j, k)];
                    mat[(i, k)] -= t;
                }
            }
        }
    }
    Ok((h, u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::exact::{int, rat};

    fn mz(rows: &[&[i64]]) -> MatZ {
        MatZ::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
            .unwrap()
    }

    fn mq(rows: &[&[BigRational]]) -> MatQ {
        MatQ::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn solve_small() {
        let a = MatQ::from_int(&mz(&[&[1, 1], &[0, 1]]));
        assert_eq!(a.solve(&[int(3), int(1)]).unwrap(), vec![int(2), int(1)]);
        let i3 = MatQ::identity(3);
        let b = vec![rat(1, 2), int(-4), rat(7, 9)];
        assert_eq!(i3.solve(&b).unwrap(), b);
    }

    #[test]
    fn example_change_of_basis() {
        // Columns are f_{id,j} = 1, theta^2, theta^2 (1-theta)^2 in the power basis.
        let m = MatQ::from_int(&mz(&[&[1, 0, 1], &[0, 0, -3], &[0, 1, 2]]));
        let t = m.inverse().unwrap();
        assert_eq!(t.col(1), vec![rat(1, 3), rat(2, 3), rat(-1, 3)]);
        assert_eq!(m.det().unwrap(), int(3));
    }

    #[test]
    fn singular_detected() {
        let a = MatQ::from_int(&mz(&[&[1, 2], &[2, 4]]));
        assert_eq!(a.solve(&[int(1), int(1)]), Err(ExactError::Singular));
        assert_eq!(a.det().unwrap(), int(0));
        assert_eq!(a.rank(), 1);
        assert_eq!(hnf(&mz(&[&[1, 2], &[2, 4]])), Err(ExactError::Singular));
    }

    #[test]
    fn det_sign_with_swaps() {
        let a = mq(&[&[int(0), int(1)], &[int(1), int(0)]]);
        assert_eq!(a.det().unwrap(), int(-1));
    }

    #[test]
    fn hnf_trivial_cases() {
        let (h, u) = hnf(&MatZ::identity(3)).unwrap();
        assert_eq!(h, MatZ::identity(3));
        assert_eq!(u, MatZ::identity(3));
        let (h, _) = hnf(&mz(&[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(h, mz(&[&[2, 0], &[0, 3]]));
        let (h, u) = hnf(&mz(&[&[2, 1], &[1, 1]])).unwrap();
        assert_eq!(h, MatZ::identity(2));
        assert_eq!(u.mul(&mz(&[&[2, 1], &[1, 1]])).unwrap(), h);
    }
}
