//! Multigraded free complexes in frame form.
//!
//! A [`GradedFreeComplex`] stores, per homological degree, the list of basis
//! generators with their multidegrees, and for each differential only the
//! scalar coefficients over GF(p). The monomial factor of the entry
//! `(tau, sigma)` is always `x^(mdeg(sigma) - mdeg(tau))`, so the scalars and
//! degrees determine the complex completely.
//!
//! Exactness and the complex property are checked strand by strand: the
//! degree-`alpha` strand keeps the generators whose degree divides `alpha`,
//! and its matrices are the corresponding scalar submatrices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactlin::{FpMatrix, LinAlgError, Prime};
use crate::monoid::{lcm_closure, lcm_lattice, MonoidError, MonomialIdeal, Multidegree};
use crate::wire::FpMatrixWire;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("differential {index} is {rows}x{cols}, frames need {want_rows}x{want_cols}")]
    Shape { index: usize, rows: usize, cols: usize, want_rows: usize, want_cols: usize },
    #[error("expected {expected} differentials for {frames} frames, got {got}")]
    DifferentialCount { frames: usize, expected: usize, got: usize },
    #[error("D_{degree}[{row},{col}] is nonzero but the row degree does not divide the column degree")]
    DegreeIncompatible { degree: usize, row: usize, col: usize },
    #[error("duplicate generator id `{id}` in frame {degree}")]
    DuplicateId { degree: usize, id: String },
    #[error("generator `{id}` has {got} exponents, expected {expected}")]
    MdegLength { id: String, got: usize, expected: usize },
    #[error("complex has no frames")]
    NoFrames,
    #[error("complex is not exact")]
    NotExact,
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub id: String,
    pub mdeg: Multidegree,
}

impl Generator {
    pub fn new(id: impl Into<String>, mdeg: Multidegree) -> Self {
        Generator { id: id.into(), mdeg }
    }
}

/// Chain complex of multigraded free modules; `differentials[i - 1]` is
/// `D_i : F_i -> F_{i-1}` with rows indexed by frame `i - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ComplexWire", into = "ComplexWire")]
pub struct GradedFreeComplex {
    p: Prime,
    variables: Vec<String>,
    frames: Vec<Vec<Generator>>,
    differentials: Vec<FpMatrix>,
}

#[derive(Serialize, Deserialize)]
struct ComplexWire {
    p: u32,
    variables: Vec<String>,
    frames: Vec<Vec<Generator>>,
    differentials: Vec<FpMatrixWire>,
}

impl TryFrom<ComplexWire> for GradedFreeComplex {
    type Error = ComplexError;

    fn try_from(w: ComplexWire) -> Result<Self, Self::Error> {
        let p = Prime::new(w.p)?;
        let diffs = w
            .differentials
            .iter()
            .map(|d| d.to_matrix(p))
            .collect::<Result<Vec<_>, _>>()?;
        GradedFreeComplex::new(p, w.variables, w.frames, diffs)
    }
}

impl From<GradedFreeComplex> for ComplexWire {
    fn from(c: GradedFreeComplex) -> Self {
        ComplexWire {
            p: c.p.get(),
            variables: c.variables,
            frames: c.frames,
            differentials: c.differentials.iter().map(FpMatrixWire::from_matrix).collect(),
        }
    }
}

/// The degree-`alpha` strand: a chain complex of GF(p) vector spaces.
#[derive(Clone, Debug)]
pub struct Strand {
    pub alpha: Multidegree,
    /// Per homological degree, positions in the frame of the generators kept.
    pub basis: Vec<Vec<usize>>,
    /// `maps[i - 1]` restricts `D_i`.
    pub maps: Vec<FpMatrix>,
}

impl Strand {
    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.maps.iter().map(FpMatrix::rank).collect()
    }

    /// `dim H_i` of the strand for every `i`.
    pub fn homology_dims(&self) -> Vec<usize> {
        let dims = self.dims();
        let ranks = self.ranks();
        (0..dims.len())
            .map(|i| {
                let out = if i == 0 { 0 } else { ranks[i - 1] };
                let inc = ranks.get(i).copied().unwrap_or(0);
                dims[i] - out - inc
            })
            .collect()
    }

    pub fn is_complex(&self) -> bool {
        self.maps
            .windows(2)
            .all(|w| w[0].mul(&w[1]).map(|m| m.is_zero()).unwrap_or(false))
    }
}

impl GradedFreeComplex {
    pub fn new(
        p: Prime,
        variables: Vec<String>,
        frames: Vec<Vec<Generator>>,
        differentials: Vec<FpMatrix>,
    ) -> Result<Self, ComplexError> {
        if frames.is_empty() {
            return Err(ComplexError::NoFrames);
        }
        if differentials.len() != frames.len() - 1 {
            return Err(ComplexError::DifferentialCount {
                frames: frames.len(),
                expected: frames.len() - 1,
                got: differentials.len(),
            });
        }
        let n = variables.len();
        for (degree, frame) in frames.iter().enumerate() {
            let mut ids = BTreeSet::new();
            for g in frame {
                if g.mdeg.len() != n {
                    return Err(ComplexError::MdegLength {
                        id: g.id.clone(),
                        got: g.mdeg.len(),
                        expected: n,
                    });
                }
                if !ids.insert(&g.id) {
                    return Err(ComplexError::DuplicateId { degree, id: g.id.clone() });
                }
            }
        }
        for (k, d) in differentials.iter().enumerate() {
            let (want_rows, want_cols) = (frames[k].len(), frames[k + 1].len());
            if d.nrows() != want_rows || d.ncols() != want_cols || d.prime() != p {
                return Err(ComplexError::Shape {
                    index: k + 1,
                    rows: d.nrows(),
                    cols: d.ncols(),
                    want_rows,
                    want_cols,
                });
            }
            for (r, c, _) in d.entries() {
                if !frames[k][r].mdeg.divides(&frames[k + 1][c].mdeg) {
                    return Err(ComplexError::DegreeIncompatible { degree: k + 1, row: r, col: c });
                }
            }
        }
        Ok(GradedFreeComplex { p, variables, frames, differentials })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn frames(&self) -> &[Vec<Generator>] {
        &self.frames
    }

    pub fn frame(&self, i: usize) -> &[Generator] {
        self.frames.get(i).map_or(&[], Vec::as_slice)
    }

    /// `D_i` for `1 <= i < frames.len()`.
    pub fn differential(&self, i: usize) -> Option<&FpMatrix> {
        i.checked_sub(1).and_then(|k| self.differentials.get(k))
    }

    pub fn differentials(&self) -> &[FpMatrix] {
        &self.differentials
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.frames.iter().map(Vec::len).collect()
    }

    /// Homological length: index of the last frame.
    pub fn length(&self) -> usize {
        self.frames.len() - 1
    }

    pub fn all_degrees(&self) -> Vec<Multidegree> {
        self.frames.iter().flatten().map(|g| g.mdeg.clone()).collect()
    }

    /// The ideal generated by the degrees of frame 0.
    pub fn ideal(&self) -> Result<MonomialIdeal, MonoidError> {
        MonomialIdeal::new(
            self.variables.clone(),
            self.frames[0].iter().map(|g| g.mdeg.clone()).collect(),
        )
    }

    pub fn restrict_at_degree(&self, alpha: &Multidegree) -> Strand {
        let basis: Vec<Vec<usize>> = self
            .frames
            .iter()
            .map(|f| (0..f.len()).filter(|&k| f[k].mdeg.divides(alpha)).collect())
            .collect();
        let maps = self
            .differentials
            .iter()
            .enumerate()
            .map(|(k, d)| d.select(&basis[k], &basis[k + 1]))
            .collect();
        Strand { alpha: alpha.clone(), basis, maps }
    }

    /// Lcms of all generator degrees, the finite set of strands to check.
    pub fn degree_lattice(&self) -> BTreeSet<Multidegree> {
        lcm_closure(&self.all_degrees())
    }

    /// `D_{i-1} D_i = 0` in every strand of the degree lattice.
    pub fn is_complex(&self) -> bool {
        self.degree_lattice().iter().all(|a| self.restrict_at_degree(a).is_complex())
    }

    /// Exactness of `F -> I -> 0` at one degree.
    pub fn is_exact_at(&self, ideal: &MonomialIdeal, alpha: &Multidegree) -> bool {
        let h = self.restrict_at_degree(alpha).homology_dims();
        let expected_h0 = usize::from(ideal.contains(alpha));
        h[0] == expected_h0 && h[1..].iter().all(|&d| d == 0)
    }

    /// Resolution check against `ideal`: the augmentation kills the image of
    /// `D_1` and every lattice strand has the homology of `I` in that degree.
    pub fn is_exact(&self, ideal: &MonomialIdeal) -> bool {
        self.augmentation_is_chain_map()
            && self.is_complex()
            && lcm_lattice(ideal).iter().all(|a| self.is_exact_at(ideal, a))
    }

    /// Every generator maps to its monomial, so `eps . D_1 = 0` means each
    /// column of `D_1` sums to zero.
    fn augmentation_is_chain_map(&self) -> bool {
        let Some(d1) = self.differential(1) else { return true };
        let ones = vec![1u32; d1.nrows()];
        let p = self.p;
        (0..d1.ncols()).all(|c| {
            (0..d1.nrows()).fold(0, |acc, r| p.add(acc, p.mul(ones[r], d1.get(r, c)))) == 0
        })
    }

    /// Positions `(i, row, col)` of unit entries: nonzero scalars between
    /// generators of equal degree.
    pub fn unit_entries(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (k, d) in self.differentials.iter().enumerate() {
            for (r, c, _) in d.entries() {
                if self.frames[k][r].mdeg == self.frames[k + 1][c].mdeg {
                    out.push((k + 1, r, c));
                }
            }
        }
        out
    }

    pub fn is_minimal(&self) -> bool {
        self.unit_entries().is_empty()
    }

    /// Cancels unit entries until none remain.
    ///
    /// Each step removes the pair `(sigma, tau)` behind the unit entry with
    /// the smallest `(i, row, col)` and updates
    /// `D_i <- D_i - D_i[., sigma] a^{-1} D_i[tau, .]` on the remaining
    /// generators; `D_{i+1}` loses row `sigma` and `D_{i-1}` column `tau`.
    /// Surviving generators keep their ids.
    pub fn minimize(&self) -> Result<GradedFreeComplex, ComplexError> {
        let ideal = self.ideal()?;
        if !self.is_exact(&ideal) {
            return Err(ComplexError::NotExact);
        }
        let mut cur = self.clone();
        while let Some(&(i, tau, sigma)) = cur.unit_entries().first() {
            cur = cur.cancel(i, tau, sigma);
        }
        Ok(cur)
    }

    fn cancel(&self, i: usize, tau: usize, sigma: usize) -> GradedFreeComplex {
        let p = self.p;
        let d = &self.differentials[i - 1];
        let a_inv = p.inv(d.get(tau, sigma)).expect("unit entry");
        let keep_rows: Vec<usize> = (0..d.nrows()).filter(|&r| r != tau).collect();
        let keep_cols: Vec<usize> = (0..d.ncols()).filter(|&c| c != sigma).collect();

        let mut reduced = d.select(&keep_rows, &keep_cols);
        let col_sigma: Vec<(usize, u32)> = keep_rows
            .iter()
            .enumerate()
            .filter_map(|(k, &r)| Some((k, d.get(r, sigma))).filter(|&(_, v)| v != 0))
            .collect();
        let row_tau: Vec<(usize, u32)> = keep_cols
            .iter()
            .enumerate()
            .filter_map(|(k, &c)| Some((k, d.get(tau, c))).filter(|&(_, v)| v != 0))
            .collect();
        for &(r, x) in &col_sigma {
            for &(c, y) in &row_tau {
                let corr = p.mul(p.mul(x, a_inv), y);
                let v = reduced.get(r, c);
                reduced.set(r, c, p.sub(v, corr));
            }
        }

        let mut frames = self.frames.clone();
        frames[i].remove(sigma);
        frames[i - 1].remove(tau);
        let mut diffs = self.differentials.clone();
        diffs[i - 1] = reduced;
        if i >= 2 {
            let prev = &self.differentials[i - 2];
            let rows: Vec<usize> = (0..prev.nrows()).collect();
            diffs[i - 2] = prev.select(&rows, &keep_rows);
        }
        if i < self.differentials.len() {
            let next = &self.differentials[i];
            let cols: Vec<usize> = (0..next.ncols()).collect();
            diffs[i] = next.select(&keep_cols, &cols);
        }
        GradedFreeComplex::new(p, self.variables.clone(), frames, diffs)
            .expect("cancellation preserves degree compatibility")
    }

    pub fn betti_table(&self) -> BettiTable {
        let mut t = BettiTable::default();
        for (i, frame) in self.frames.iter().enumerate() {
            for g in frame {
                t.add(i, g.mdeg.clone(), 1);
            }
        }
        t
    }

    /// Same generators and degrees, new scalar differentials.
    pub fn with_differentials(&self, differentials: Vec<FpMatrix>) -> Result<Self, ComplexError> {
        GradedFreeComplex::new(self.p, self.variables.clone(), self.frames.clone(), differentials)
    }

    pub fn with_frames(&self, frames: Vec<Vec<Generator>>) -> Result<Self, ComplexError> {
        GradedFreeComplex::new(self.p, self.variables.clone(), frames, self.differentials.clone())
    }
}

/// Taylor resolution: frame `i` holds the `(i+1)`-subsets of generators in
/// lexicographic order, each with degree the lcm of the subset; the boundary
/// of `{s_0 < ... < s_i}` is `sum_k (-1)^k {.. omit s_k ..}`.
pub fn taylor_complex(ideal: &MonomialIdeal, p: Prime) -> GradedFreeComplex {
    let gens = ideal.generators();
    let q = gens.len();
    let mut subsets_by_size: Vec<Vec<Vec<usize>>> = vec![Vec::new(); q];
    for mask in 1u64..(1u64 << q) {
        let s: Vec<usize> = (0..q).filter(|&k| mask & (1 << k) != 0).collect();
        subsets_by_size[s.len() - 1].push(s);
    }
    for level in subsets_by_size.iter_mut() {
        level.sort();
    }
    let frames: Vec<Vec<Generator>> = subsets_by_size
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|s| {
                    let mdeg = s[1..]
                        .iter()
                        .fold(gens[s[0]].clone(), |acc, &k| acc.lcm(&gens[k]).expect("same n"));
                    Generator::new(subset_id(s), mdeg)
                })
                .collect()
        })
        .collect();
    let mut diffs = Vec::with_capacity(q.saturating_sub(1));
    for i in 1..q {
        let rows = &subsets_by_size[i - 1];
        let index: BTreeMap<&Vec<usize>, usize> = rows.iter().enumerate().map(|(k, s)| (s, k)).collect();
        let cols = &subsets_by_size[i];
        let mut d = FpMatrix::zeros(p, rows.len(), cols.len());
        for (c, s) in cols.iter().enumerate() {
            for k in 0..s.len() {
                let mut face = s.clone();
                face.remove(k);
                let sign = if k % 2 == 0 { 1 } else { -1 };
                d.set(index[&face], c, p.reduce(sign));
            }
        }
        diffs.push(d);
    }
    GradedFreeComplex::new(p, ideal.variables().to_vec(), frames, diffs)
        .expect("taylor complex is well formed")
}

fn subset_id(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// Multigraded Betti numbers `beta_{i,alpha}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Multidegree), usize>,
}

#[derive(Serialize, Deserialize)]
struct BettiEntry {
    i: usize,
    mdeg: Multidegree,
    beta: usize,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<BettiEntry> = self
            .iter()
            .map(|(i, mdeg, beta)| BettiEntry { i, mdeg: mdeg.clone(), beta })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<BettiEntry>::deserialize(d)?;
        let mut t = BettiTable::default();
        for e in v {
            t.add(e.i, e.mdeg, e.beta);
        }
        Ok(t)
    }
}

impl BettiTable {
    pub fn add(&mut self, i: usize, alpha: Multidegree, count: usize) {
        if count > 0 {
            *self.entries.entry((i, alpha)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, alpha: &Multidegree) -> usize {
        self.entries.get(&(i, alpha.clone())).copied().unwrap_or(0)
    }

    /// Nonzero entries sorted by `(i, alpha)` with `alpha` in lex order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Multidegree, usize)> + '_ {
        self.entries.iter().map(|((i, a), &b)| (*i, a, b))
    }

    /// `sum_alpha beta_{i,alpha}` for each `i` up to the last nonzero one.
    pub fn totals(&self) -> Vec<usize> {
        let len = self.entries.keys().map(|(i, _)| i + 1).max().unwrap_or(0);
        let mut t = vec![0; len];
        for ((i, _), b) in &self.entries {
            t[*i] += b;
        }
        t
    }

    pub fn render_text(&self, ideal: Option<&MonomialIdeal>) -> String {
        let mut s = String::new();
        for (i, a, b) in self.iter() {
            let label = match ideal {
                Some(id) => format!("{} {}", a, id.render_monomial(a)),
                None => a.to_string(),
            };
            let _ = writeln!(s, "beta[{i}, {label}] = {b}");
        }
        let totals: Vec<String> = self.totals().iter().map(usize::to_string).collect();
        let _ = writeln!(s, "totals: {}", totals.join(" "));
        s
    }
}

/// Betti numbers from the lcm-lattice formula
/// `beta_{i,alpha} = dim H~_{i-1}(K_{<alpha}; GF(p))`, where `K_{<alpha}` is
/// the simplicial complex of generator subsets whose lcm strictly divides
/// `alpha` (the empty face included). Independent of [`taylor_complex`] and
/// [`GradedFreeComplex::minimize`]; meant as a test oracle.
pub fn betti_oracle(ideal: &MonomialIdeal, p: Prime) -> BettiTable {
    let gens = ideal.generators();
    let mut table = BettiTable::default();
    for alpha in lcm_lattice(ideal) {
        let below: Vec<usize> = (0..gens.len()).filter(|&k| gens[k].divides(&alpha)).collect();
        // faces by size; the empty face has size 0
        let mut faces: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
        for mask in 1u64..(1u64 << below.len()) {
            let s: Vec<usize> = (0..below.len()).filter(|&k| mask & (1 << k) != 0).map(|k| below[k]).collect();
            let l = s[1..].iter().fold(gens[s[0]].clone(), |acc, &k| acc.lcm(&gens[k]).expect("same n"));
            if l != alpha {
                if faces.len() <= s.len() {
                    faces.resize(s.len() + 1, Vec::new());
                }
                faces[s.len()].push(s);
            }
        }
        for level in faces.iter_mut() {
            level.sort();
        }
        // rank of boundary from size k to size k - 1
        let mut ranks = vec![0usize; faces.len() + 1];
        for k in 1..faces.len() {
            let index: BTreeMap<&Vec<usize>, usize> =
                faces[k - 1].iter().enumerate().map(|(j, s)| (s, j)).collect();
            let mut d = FpMatrix::zeros(p, faces[k - 1].len(), faces[k].len());
            for (c, s) in faces[k].iter().enumerate() {
                for j in 0..s.len() {
                    let mut f = s.clone();
                    f.remove(j);
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    d.set(index[&f], c, p.reduce(sign));
                }
            }
            ranks[k] = d.rank();
        }
        for (k, level) in faces.iter().enumerate() {
            let h = level.len() - ranks[k] - ranks[k + 1];
            table.add(k, alpha.clone(), h);
        }
    }
    table
}
