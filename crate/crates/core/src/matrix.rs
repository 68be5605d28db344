//! Dense integer matrices with exact fraction-free inversion.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::tree::Tree;

/// Square integer matrix. Serializes as an array of rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "Vec<Vec<i64>>")]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl From<IntMatrix> for Vec<Vec<i64>> {
    fn from(m: IntMatrix) -> Self {
        m.rows()
    }
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn adjacency(tree: &Tree) -> Self {
        let mut m = Self::zeros(tree.n());
        for e in tree.edges() {
            m.set(e.0, e.1, 1);
            m.set(e.1, e.0, 1);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.n + j] = x;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    /// Exact inverse by fraction-free Gauss-Jordan elimination over the
    /// integers.
    ///
    /// Every intermediate entry is a minor of the augmented matrix, so each
    /// division by the previous pivot is exact. On completion the left block
    /// is `d * I` and the right block is `d * A^{-1}`, with `d = ±det A`.
    /// Fails with [`Error::Singular`] for a zero determinant, and also when
    /// the inverse is not integral.
    pub fn inverse(&self) -> Result<IntMatrix> {
        let n = self.n;
        let width = 2 * n;
        let mut aug: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..width)
                    .map(|j| {
                        if j < n {
                            BigInt::from(self.get(i, j))
                        } else if j - n == i {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let mut prev = BigInt::one();
        for k in 0..n {
            let pivot_row = (k..n)
                .find(|&r| !aug[r][k].is_zero())
                .ok_or(Error::Singular)?;
            aug.swap(k, pivot_row);
            let pivot_row = aug[k].clone();
            let pivot = pivot_row[k].clone();
            for (i, row) in aug.iter_mut().enumerate() {
                if i == k {
                    continue;
                }
                let factor = row[k].clone();
                for j in 0..width {
                    if j == k {
                        continue;
                    }
                    let num = &pivot * &row[j] - &factor * &pivot_row[j];
                    debug_assert!(num.is_multiple_of(&prev));
                    row[j] = num / &prev;
                }
                row[k] = BigInt::zero();
            }
            prev = pivot;
        }
        let det = prev;
        let mut out = Self::zeros(n);
        for (i, row) in aug.iter().enumerate() {
            debug_assert_eq!(row[i], det);
            for j in 0..n {
                let (q, r) = row[n + j].div_rem(&det);
                if !r.is_zero() {
                    return Err(Error::Singular);
                }
                out.set(i, j, q.to_i64().ok_or(Error::Singular)?);
            }
        }
        Ok(out)
    }

    /// Characteristic polynomial `det(tI - A)` by the Faddeev-LeVerrier
    /// recurrence. Divisions by `k` are exact for integer matrices.
    pub fn char_poly(&self) -> IntPoly {
        let n = self.n;
        let a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(self.get(i, j))).collect())
            .collect();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        // m holds M_k, starting from M_0 = 0
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = vec![vec![BigInt::zero(); n]; n];
            for i in 0..n {
                for l in 0..n {
                    if a[i][l].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        next[i][j] += &a[i][l] * &m[l][j];
                    }
                }
                next[i][i] += &coeffs[n - k + 1];
            }
            m = next;
            // c_{n-k} = -tr(A M_k) / k
            let mut trace = BigInt::zero();
            for i in 0..n {
                for l in 0..n {
                    trace += &a[i][l] * &m[l][i];
                }
            }
            coeffs[n - k] = -(trace / BigInt::from(k));
        }
        IntPoly::new(coeffs)
    }

    pub fn max_abs(&self) -> i64 {
        self.data.iter().map(|x| x.abs()).max().unwrap_or(0)
    }
}

/// `det m = ±1`, read off the constant term of the characteristic polynomial.
pub fn is_unimodular(m: &IntMatrix) -> bool {
    let c = m.char_poly();
    let c0 = c.coeff(0);
    c0.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_p2() {
        let a = IntMatrix::adjacency(&Tree::path(2));
        assert_eq!(a.inverse().unwrap().rows(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn inverse_of_p4() {
        let a = IntMatrix::adjacency(&Tree::path(4));
        let inv = a.inverse().unwrap();
        let expected = vec![
            vec![0, 1, 0, -1],
            vec![1, 0, 0, 0],
            vec![0, 0, 0, 1],
            vec![-1, 0, 1, 0],
        ];
        assert_eq!(inv.rows(), expected);
        assert_eq!(a.mul(&inv), IntMatrix::identity(4));
    }

    #[test]
    fn star_is_singular() {
        let a = IntMatrix::adjacency(&Tree::star(4));
        assert_eq!(a.inverse(), Err(Error::Singular));
    }

    #[test]
    fn non_integral_inverse_rejected() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]);
        assert_eq!(m.inverse(), Err(Error::Singular));
    }

    #[test]
    fn general_unimodular_inverse() {
        let m = IntMatrix::from_rows(&[vec![2, 3, 1], vec![1, 2, 1], vec![0, 1, 1]]);
        // det = 2(2-1) - 3(1-0) + 1(1-0) = 0 -> adjust
        assert_eq!(m.inverse(), Err(Error::Singular));
        let m = IntMatrix::from_rows(&[vec![2, 3, 1], vec![1, 2, 1], vec![0, 1, 2]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), IntMatrix::identity(3));
    }

    #[test]
    fn pivoting_needed() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.inverse().unwrap(), m);
    }

    #[test]
    fn faddeev_leverrier_p4() {
        let c = IntMatrix::adjacency(&Tree::path(4)).char_poly();
        assert_eq!(c, IntPoly::from_i64(&[1, 0, -3, 0, 1]));
        assert!(is_unimodular(&IntMatrix::adjacency(&Tree::path(4))));
        assert!(!is_unimodular(&IntMatrix::adjacency(&Tree::star(4))));
    }

    #[test]
    fn serializes_as_rows() {
        let a = IntMatrix::adjacency(&Tree::path(2));
        assert_eq!(serde_json::to_string(&a).unwrap(), "[[0,1],[1,0]]");
    }
}
