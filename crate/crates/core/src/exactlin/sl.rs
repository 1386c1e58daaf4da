//! Transvection factorization in SL_n(GF(p)) and lifting to SL_n(Z).

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::field::Prime;
use super::fpmatrix::FpMatrix;
use super::intmatrix::IntMatrix;
use super::LinAlgError;

/// Elementary matrix `I + scalar * e_{row,col}` with `row != col` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transvection {
    pub row: usize,
    pub col: usize,
    pub scalar: u32,
}

impl Transvection {
    pub fn to_matrix(self, p: Prime, n: usize) -> FpMatrix {
        let mut m = FpMatrix::identity(p, n);
        m.set(self.row, self.col, self.scalar);
        m
    }
}

/// Writes `m` (determinant 1) as an ordered product `E_1 * E_2 * ... * E_k` of
/// transvections.
///
/// The matrix is driven to the identity with row operations "add a multiple
/// of one row to another" only; the recorded operations are then inverted and
/// reversed.
pub fn factor_sl_transvections(m: &FpMatrix) -> Result<Vec<Transvection>, LinAlgError> {
    if !m.is_square() {
        return Err(LinAlgError::NotSquare { rows: m.nrows(), cols: m.ncols() });
    }
    let p = m.prime();
    match m.determinant()? {
        0 => return Err(LinAlgError::SingularMatrix),
        1 => {}
        d => return Err(LinAlgError::NotSL { det: d }),
    }
    let n = m.nrows();
    let mut a = m.to_dense();
    // ops[k] = (target, source, f): row[target] += f * row[source]
    let mut ops: Vec<(usize, usize, u32)> = Vec::new();
    let mut add_row = |a: &mut Vec<Vec<u32>>, target: usize, source: usize, f: u32| {
        if f == 0 {
            return;
        }
        for j in 0..n {
            let y = a[source][j];
            a[target][j] = p.add(a[target][j], p.mul(f, y));
        }
        ops.push((target, source, f));
    };

    for c in 0..n {
        if c + 1 < n {
            if a[c][c] == 0 {
                let r = (c + 1..n).find(|&r| a[r][c] != 0).ok_or(LinAlgError::SingularMatrix)?;
                add_row(&mut a, c, r, 1);
            }
            if a[c][c] != 1 {
                let r = match (c + 1..n).find(|&r| a[r][c] != 0) {
                    Some(r) => r,
                    None => {
                        add_row(&mut a, c + 1, c, 1);
                        c + 1
                    }
                };
                // a[c][c] + f * a[r][c] = 1
                let f = p.mul(p.sub(1, a[c][c]), p.inv(a[r][c]).expect("nonzero"));
                add_row(&mut a, c, r, f);
            }
        }
        debug_assert_eq!(a[c][c], 1, "last pivot is forced by det = 1");
        for r in 0..n {
            if r != c && a[r][c] != 0 {
                let f = p.neg(a[r][c]);
                add_row(&mut a, r, c, f);
            }
        }
    }

    // L_k ... L_1 m = I  =>  m = L_1^{-1} ... L_k^{-1}
    Ok(ops
        .into_iter()
        .map(|(target, source, f)| Transvection { row: target, col: source, scalar: p.neg(f) })
        .collect())
}

/// Multiplies transvections back together over GF(p).
pub fn multiply_transvections(p: Prime, n: usize, factors: &[Transvection]) -> FpMatrix {
    let mut m = FpMatrix::identity(p, n);
    for t in factors {
        // right multiplication adds scalar * column `row` to column `col`
        for r in 0..n {
            let v = m.get(r, t.row);
            if v != 0 {
                let cur = m.get(r, t.col);
                m.set(r, t.col, p.add(cur, p.mul(v, t.scalar)));
            }
        }
    }
    m
}

/// Integer matrix of determinant exactly 1 reducing to `m` mod p.
///
/// Each factor lifts to the integer transvection whose entry is the canonical
/// representative in `0..p`.
pub fn lift_sl(m: &FpMatrix) -> Result<IntMatrix, LinAlgError> {
    let factors = factor_sl_transvections(m)?;
    let n = m.nrows();
    let mut lifted = IntMatrix::identity(n);
    for t in factors {
        let s = BigInt::from(t.scalar);
        for r in 0..n {
            let v = lifted.get(r, t.row).clone();
            if v != BigInt::from(0) {
                let cur = lifted.get(r, t.col) + &v * &s;
                lifted.set(r, t.col, cur);
            }
        }
    }
    Ok(lifted)
}
