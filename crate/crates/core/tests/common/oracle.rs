//! Brute-force oracles shared by integration tests. Everything here works by
//! enumeration and avoids the elimination code it is checking.
#![allow(dead_code)]

use cellres::cwposet::{BasedBasis, FpChainComplex};
use cellres::monoid::Multidegree;

/// Largest search space (`p^n`) an oracle will enumerate.
pub const ENUMERATION_LIMIT: u64 = 1 << 20;

pub fn space_size(p: u32, n: usize) -> u64 {
    (p as u64).checked_pow(n as u32).unwrap_or(u64::MAX)
}

/// All vectors in `GF(p)^n`, in lexicographic order.
pub fn all_vectors(p: u32, n: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = space_size(p, n);
    (0..total).map(move |mut k| {
        let mut v = vec![0u32; n];
        for slot in v.iter_mut().rev() {
            *slot = (k % p as u64) as u32;
            k /= p as u64;
        }
        v
    })
}

fn mat_vec(rows: &[Vec<u32>], v: &[u32], p: u32) -> Vec<u32> {
    rows.iter()
        .map(|r| (r.iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>() % p as u64) as u32)
        .collect()
}

/// `d_i` as dense rows, with `d_0` the augmentation.
fn dense_boundary(complex: &FpChainComplex, i: usize) -> Vec<Vec<u32>> {
    if i == 0 {
        return vec![vec![1; complex.dim_at(0)]];
    }
    complex.differentials[i - 1].to_dense()
}

/// Minimal-support test by enumeration; `None` when the space is too big.
pub fn brute_minimal_support(
    z: &[u32],
    complex: &FpChainComplex,
    i: usize,
    basis: &BasedBasis,
    alpha: Option<&Multidegree>,
) -> Option<bool> {
    let p = complex.p.get();
    if z.iter().all(|&v| v == 0) {
        return Some(false);
    }
    if i + 1 >= complex.cells.len() {
        return Some(false);
    }
    // image membership over the allowed columns
    let cols: Vec<usize> = complex.cells[i + 1]
        .iter()
        .enumerate()
        .filter(|(_, c)| match (alpha, &c.mdeg) {
            (Some(a), Some(m)) => m.divides(a),
            _ => true,
        })
        .map(|(k, _)| k)
        .collect();
    if space_size(p, cols.len()) > ENUMERATION_LIMIT {
        return None;
    }
    let next = dense_boundary(complex, i + 1);
    let hit = all_vectors(p, cols.len()).any(|w| {
        let mut full = vec![0u32; complex.dim_at(i + 1)];
        for (k, &c) in cols.iter().enumerate() {
            full[c] = w[k];
        }
        mat_vec(&next, &full, p) == z
    });
    if !hit {
        return Some(false);
    }
    // basis coordinates of z: the unique c with P c = z, found by enumeration
    let n = complex.dim_at(i);
    if space_size(p, n) > ENUMERATION_LIMIT {
        return None;
    }
    let pm: Vec<Vec<u32>> = (0..n).map(|r| basis.degree(i).iter().map(|e| e.coords[r]).collect()).collect();
    let c = all_vectors(p, n).find(|c| mat_vec(&pm, c, p) == z)?;
    let s: Vec<usize> = (0..n).filter(|&k| c[k] != 0).collect();
    let d = dense_boundary(complex, i);
    // any nonzero cycle supported strictly inside s?
    let smaller = all_vectors(p, s.len()).any(|y| {
        let nz = y.iter().filter(|&&v| v != 0).count();
        if nz == 0 || nz == s.len() {
            return false;
        }
        let mut coords = vec![0u32; n];
        for (k, &pos) in s.iter().enumerate() {
            coords[pos] = y[k];
        }
        let standard = mat_vec(&pm, &coords, p);
        mat_vec(&d, &standard, p).iter().all(|&v| v == 0)
    });
    Some(!smaller)
}
