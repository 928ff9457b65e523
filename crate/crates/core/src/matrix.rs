//! Small dense square integer matrices.
//!
//! Used for Cartan matrices, Coxeter elements acting on the root lattice and
//! exchange matrices. Every matrix in scope is at most a few dozen rows, so a
//! flat row-major `Vec<i64>` is all we need.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
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

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::input(format!(
                    "matrix row {} has length {}, expected {}",
                    i,
                    row.len(),
                    n
                )));
            }
            data.extend(row);
        }
        Ok(IntMatrix { n, data })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        IntMatrix {
            n: self.n,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out.data[idx] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == i64::from(i == j)))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..=i).all(|j| self.get(i, j) == -self.get(j, i)))
    }

    /// True when `diag(d) * self` is skew-symmetric.
    pub fn is_skew_symmetrized_by(&self, d: &[u64]) -> bool {
        if d.len() != self.n {
            return false;
        }
        (0..self.n).all(|i| {
            (0..=i).all(|j| d[i] as i64 * self.get(i, j) == -(d[j] as i64) * self.get(j, i))
        })
    }

    /// Fomin-Zelevinsky matrix mutation at `k`.
    ///
    /// `b'_ij = -b_ij` if `i == k` or `j == k`, otherwise
    /// `b'_ij = b_ij + sgn(b_ik) * max(0, b_ik * b_kj)`.
    pub fn mutate(&self, k: usize) -> IntMatrix {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            let bik = self.get(i, k);
            for j in 0..n {
                if i == k || j == k {
                    out.set(i, j, -self.get(i, j));
                } else if bik != 0 {
                    let prod = bik * self.get(k, j);
                    if prod > 0 {
                        out.set(i, j, self.get(i, j) + bik.signum() * prod);
                    }
                }
            }
        }
        out
    }

    /// Principal submatrix on the given index list, in that order.
    pub fn submatrix(&self, idx: &[usize]) -> IntMatrix {
        let mut out = Self::zeros(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out.set(a, b, self.get(i, j));
            }
        }
        out
    }
}

impl TryFrom<Vec<Vec<i64>>> for IntMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        IntMatrix::from_rows(rows)
    }
}

impl From<IntMatrix> for Vec<Vec<i64>> {
    fn from(m: IntMatrix) -> Self {
        m.rows()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|v| format!("{v:>3}")).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_mutation_flips_sign() {
        let b = IntMatrix::from_rows(vec![vec![0, 2], vec![-2, 0]]).unwrap();
        let m = b.mutate(0);
        assert_eq!(m.rows(), vec![vec![0, -2], vec![2, 0]]);
    }

    #[test]
    fn mutation_adds_composite_arrow() {
        // 0 -> 1 -> 2, mutate at 1 gives 0 -> 2 and reverses both arrows.
        let b = IntMatrix::from_rows(vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]]).unwrap();
        let m = b.mutate(1);
        assert_eq!(
            m.rows(),
            vec![vec![0, -1, 1], vec![1, 0, -1], vec![-1, 1, 0]]
        );
        assert_eq!(m.mutate(1), b);
    }

    #[test]
    fn ragged_rows_are_rejected() {
        assert!(IntMatrix::from_rows(vec![vec![0, 1], vec![0]]).is_err());
    }
}
