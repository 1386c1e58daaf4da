use std::collections::BTreeMap;
use std::fmt;

use super::field::Prime;
use super::LinAlgError;

/// Below this many entries elimination runs on a dense copy.
const DENSE_LIMIT: usize = 64 * 64;

/// Dense vector over GF(p).
pub type FpVector = Vec<u32>;

/// Matrix over GF(p) stored as sparse rows; zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, u32>>,
}

/// Output of [`FpMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub reduced: FpMatrix,
}

impl FpMatrix {
    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing mod p.
    pub fn from_rows(p: Prime, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(p, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, p.reduce(v));
            }
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated positions add.
    pub fn from_triplets(
        p: Prime,
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<Self, LinAlgError> {
        let mut m = Self::zeros(p, rows, cols);
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(LinAlgError::IndexOutOfRange { row: r, col: c, rows, cols });
            }
            let cur = m.get(r, c);
            m.set(r, c, p.add(cur, p.reduce(v)));
        }
        Ok(m)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(p: Prime, rows: usize, columns: &[FpVector]) -> Self {
        let mut m = Self::zeros(p, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v % p.get());
            }
        }
        m
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
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
    pub fn get(&self, r: usize, c: usize) -> u32 {
        assert!(c < self.cols, "column {c} out of range");
        self.data[r].get(&c).copied().unwrap_or(0)
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        let v = v % self.p.get();
        if v == 0 {
            self.data[r].remove(&c);
        } else {
            self.data[r].insert(c, v);
        }
    }

    /// Nonzero entries of row `r`, by increasing column.
    pub fn row_entries(&self, r: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.data[r].iter().map(|(&c, &v)| (c, v))
    }

    /// All nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(&c, &v)| (r, c, v)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, c: usize) -> FpVector {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<u32>> {
        let mut out = vec![vec![0u32; self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            out[r][c] = v;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for (r, c, v) in self.entries() {
            t.data[c].insert(r, v);
        }
        t
    }

    /// Submatrix on the given row and column index lists (in that order).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut col_pos = BTreeMap::new();
        for (k, &c) in cols.iter().enumerate() {
            col_pos.insert(c, k);
        }
        let mut m = Self::zeros(self.p, rows.len(), cols.len());
        for (k, &r) in rows.iter().enumerate() {
            for (c, v) in self.row_entries(r) {
                if let Some(&kc) = col_pos.get(&c) {
                    m.data[k].insert(kc, v);
                }
            }
        }
        m
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.select(&rows, cols)
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let p = self.p;
        let mut out = Self::zeros(p, self.rows, other.cols);
        for r in 0..self.rows {
            let mut acc: BTreeMap<usize, u32> = BTreeMap::new();
            for (k, a) in self.row_entries(r) {
                for (c, b) in other.row_entries(k) {
                    let e = acc.entry(c).or_insert(0);
                    *e = p.add(*e, p.mul(a, b));
                }
            }
            acc.retain(|_, v| *v != 0);
            out.data[r] = acc;
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u32]) -> FpVector {
        assert_eq!(v.len(), self.cols);
        let p = self.p;
        (0..self.rows)
            .map(|r| self.row_entries(r).fold(0, |acc, (c, a)| p.add(acc, p.mul(a, v[c]))))
            .collect()
    }

    /// Reduced row-echelon form.
    pub fn rref(&self) -> Rref {
        if self.rows * self.cols <= DENSE_LIMIT {
            self.rref_dense()
        } else {
            self.rref_sparse()
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub(crate) fn rref_dense(&self) -> Rref {
        let p = self.p;
        let mut a = self.to_dense();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| a[i][c] != 0) else {
                continue;
            };
            a.swap(r, pr);
            let inv = p.inv(a[r][c]).expect("nonzero pivot");
            for v in a[r].iter_mut() {
                *v = p.mul(*v, inv);
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || row[c] == 0 {
                    continue;
                }
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    if y != 0 {
                        *x = p.sub(*x, p.mul(f, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let mut reduced = Self::zeros(p, self.rows, self.cols);
        for (i, row) in a.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    reduced.data[i].insert(j, v);
                }
            }
        }
        Rref { rank: pivots.len(), pivots, reduced }
    }

    pub(crate) fn rref_sparse(&self) -> Rref {
        let p = self.p;
        let mut rows: Vec<BTreeMap<usize, u32>> = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| rows[i].contains_key(&c)) else {
                continue;
            };
            rows.swap(r, pr);
            let inv = p.inv(rows[r][&c]).expect("nonzero pivot");
            for v in rows[r].values_mut() {
                *v = p.mul(*v, inv);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r {
                    continue;
                }
                let Some(&f) = row.get(&c) else { continue };
                for (&k, &y) in &pivot_row {
                    let e = row.entry(k).or_insert(0);
                    *e = p.sub(*e, p.mul(f, y));
                    if *e == 0 {
                        row.remove(&k);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let reduced = FpMatrix { p, rows: self.rows, cols: self.cols, data: rows };
        Rref { rank: pivots.len(), pivots, reduced }
    }

    /// Basis of the right kernel, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<FpVector> {
        let p = self.p;
        let Rref { pivots, reduced, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = p.neg(reduced.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    pub fn determinant(&self) -> Result<u32, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let p = self.p;
        let n = self.rows;
        let mut a = self.to_dense();
        let mut det = 1u32;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| a[i][c] != 0) else {
                return Ok(0);
            };
            if pr != c {
                a.swap(pr, c);
                det = p.neg(det);
            }
            det = p.mul(det, a[c][c]);
            let inv = p.inv(a[c][c]).expect("nonzero pivot");
            for i in c + 1..n {
                if a[i][c] == 0 {
                    continue;
                }
                let f = p.mul(a[i][c], inv);
                for j in c..n {
                    let y = a[c][j];
                    a[i][j] = p.sub(a[i][j], p.mul(f, y));
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<FpMatrix, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        let mut aug = Self::zeros(self.p, n, 2 * n);
        for (r, c, v) in self.entries() {
            aug.data[r].insert(c, v);
        }
        for i in 0..n {
            aug.data[i].insert(n + i, 1);
        }
        let Rref { pivots, reduced, .. } = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(LinAlgError::SingularMatrix);
        }
        let right: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Ok(reduced.select(&rows, &right))
    }

    /// Some `x` with `self * x = b`, or `None` when `b` is outside the column space.
    pub fn solve(&self, b: &[u32]) -> Option<FpVector> {
        assert_eq!(b.len(), self.rows);
        let mut aug = self.clone();
        aug.cols += 1;
        for (r, &v) in b.iter().enumerate() {
            if v % self.p.get() != 0 {
                aug.data[r].insert(self.cols, v % self.p.get());
            }
        }
        let Rref { pivots, reduced, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = reduced.get(r, self.cols);
        }
        Some(x)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.data.iter().enumerate().all(|(r, row)| row.len() == 1 && row.get(&r) == Some(&1))
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix({}x{} mod {})", self.rows, self.cols, self.p)?;
        for row in self.to_dense() {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}
