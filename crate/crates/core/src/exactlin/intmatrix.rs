use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::Prime;
use super::fpmatrix::FpMatrix;
use super::LinAlgError;

/// Dense matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.data[i * cols + j] = BigInt::from(v);
            }
        }
        m
    }

    pub fn from_triplets(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, BigInt)>,
    ) -> Result<Self, LinAlgError> {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(LinAlgError::IndexOutOfRange { row: r, col: c, rows, cols });
            }
            m.data[r * cols + c] += v;
        }
        Ok(m)
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c] = v;
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        let cols = self.cols;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / cols, k % cols, v))
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows) && self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entrywise reduction mod p.
    pub fn reduce_mod(&self, p: Prime) -> FpMatrix {
        let modulus = BigInt::from(p.get());
        let mut m = FpMatrix::zeros(p, self.rows, self.cols);
        for (r, c, v) in self.entries() {
            let red = v.mod_floor(&modulus);
            let small = u32::try_from(red).expect("residue fits in u32");
            m.set(r, c, small);
        }
        m
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> =
            (0..n).map(|r| (0..n).map(|c| self.get(r, c).clone()).collect()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(pr) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap(k, pr);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    /// Rank over the rationals via fraction-free row reduction.
    pub fn rank_rational(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(pr) = (rank..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(rank, pr);
            for i in rank + 1..self.rows {
                if a[i][c].is_zero() {
                    continue;
                }
                let (f, g) = (a[rank][c].clone(), a[i][c].clone());
                for j in c..self.cols {
                    let v = &a[i][j] * &f - &a[rank][j] * &g;
                    a[i][j] = v;
                }
                let content = a[i].iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
                if !content.is_zero() && !content.is_one() {
                    for x in a[i].iter_mut() {
                        *x = &*x / &content;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Exact inverse of a matrix with determinant +1 or -1.
    ///
    /// Runs a Euclidean row reduction on `[m | I]`; every pivot must come out
    /// as a unit, otherwise the matrix is not unimodular.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|r| {
                let mut row: Vec<BigInt> = (0..n).map(|c| self.get(r, c).clone()).collect();
                row.extend((0..n).map(|c| if c == r { BigInt::one() } else { BigInt::zero() }));
                row
            })
            .collect();
        for c in 0..n {
            loop {
                // smallest nonzero |entry| at or below the diagonal becomes the pivot
                let Some(pr) = (c..n)
                    .filter(|&i| !a[i][c].is_zero())
                    .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()).then(i.cmp(&j)))
                else {
                    return Err(LinAlgError::NotUnimodular);
                };
                a.swap(c, pr);
                let mut done = true;
                for i in c + 1..n {
                    if a[i][c].is_zero() {
                        continue;
                    }
                    let q = a[i][c].div_floor(&a[c][c]);
                    for j in c..2 * n {
                        let v = &a[c][j] * &q;
                        a[i][j] -= v;
                    }
                    if !a[i][c].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if !a[c][c].abs().is_one() {
                return Err(LinAlgError::NotUnimodular);
            }
            if a[c][c].is_negative() {
                for x in a[c].iter_mut() {
                    *x = -&*x;
                }
            }
        }
        for c in (0..n).rev() {
            for i in 0..c {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].clone();
                for j in c..2 * n {
                    let v = &a[c][j] * &q;
                    a[i][j] -= v;
                }
            }
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.data[r * n + c] = a[r][n + c].clone();
            }
        }
        Ok(inv)
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.data.iter().map(|v| v.abs()).max().unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix({}x{})", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_small() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![7, 4]]);
        assert_eq!(m.determinant().unwrap(), BigInt::from(1));
        let m = IntMatrix::from_rows(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        assert_eq!(m.determinant().unwrap(), BigInt::from(-1));
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(m.determinant().unwrap(), BigInt::from(0));
        assert_eq!(IntMatrix::zeros(0, 0).determinant().unwrap(), BigInt::from(1));
    }

    #[test]
    fn unimodular_inverse_examples() {
        let id = IntMatrix::identity(3);
        assert_eq!(id.inverse_unimodular().unwrap(), id);
        let t = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(
            t.inverse_unimodular().unwrap(),
            IntMatrix::from_rows(&[vec![1, -1], vec![0, 1]])
        );
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(swap.inverse_unimodular().unwrap(), swap);
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![7, 4]]);
        let inv = m.inverse_unimodular().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());
    }

    #[test]
    fn non_unimodular_rejected() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]);
        assert_eq!(m.inverse_unimodular(), Err(LinAlgError::NotUnimodular));
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.inverse_unimodular(), Err(LinAlgError::NotUnimodular));
    }

    #[test]
    fn rational_rank() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![1, 2]]);
        assert_eq!(m.rank_rational(), 1);
        // rank 2 over Q although it is singular mod 2
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 2]]);
        assert_eq!(m.rank_rational(), 2);
        assert_eq!(m.reduce_mod(Prime::new(2).unwrap()).rank(), 0);
    }
}
