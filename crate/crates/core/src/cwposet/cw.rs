use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::CwError;
use crate::exactlin::{FpMatrix, IntMatrix, Prime};
use crate::monoid::Multidegree;
use crate::rescomplex::{GradedFreeComplex, Generator};
use crate::wire::IntMatrixWire;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mdeg: Option<Multidegree>,
}

impl Cell {
    pub fn new(id: impl Into<String>, mdeg: Option<Multidegree>) -> Self {
        Cell { id: id.into(), mdeg }
    }
}

/// Combinatorial CW data: cells by dimension and integer incidence matrices.
/// `boundaries[d - 1]` is `B_d` with rows the `(d-1)`-cells and columns the
/// `d`-cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CwWire", into = "CwWire")]
pub struct CWChainData {
    cells: Vec<Vec<Cell>>,
    boundaries: Vec<IntMatrix>,
}

#[derive(Serialize, Deserialize)]
struct CwWire {
    cells: Vec<Vec<Cell>>,
    boundaries: Vec<IntMatrixWire>,
}

impl TryFrom<CwWire> for CWChainData {
    type Error = CwError;

    fn try_from(w: CwWire) -> Result<Self, Self::Error> {
        let boundaries = w
            .boundaries
            .iter()
            .map(|b| b.to_matrix().map_err(CwError::Format))
            .collect::<Result<Vec<_>, _>>()?;
        CWChainData::new(w.cells, boundaries)
    }
}

impl From<CWChainData> for CwWire {
    fn from(d: CWChainData) -> Self {
        CwWire {
            boundaries: d.boundaries.iter().map(IntMatrixWire::from_matrix).collect(),
            cells: d.cells,
        }
    }
}

impl CWChainData {
    /// Checks only that the matrix shapes fit the cell counts; the remaining
    /// invariants are reported by [`validate_cw`].
    pub fn new(cells: Vec<Vec<Cell>>, boundaries: Vec<IntMatrix>) -> Result<Self, CwError> {
        let expected = cells.len().saturating_sub(1);
        if boundaries.len() != expected {
            return Err(CwError::Shape(format!(
                "{} cell dimensions need {expected} boundary matrices, got {}",
                cells.len(),
                boundaries.len()
            )));
        }
        for (k, b) in boundaries.iter().enumerate() {
            let (r, c) = (cells[k].len(), cells[k + 1].len());
            if b.nrows() != r || b.ncols() != c {
                return Err(CwError::Shape(format!(
                    "B_{} is {}x{}, cells need {r}x{c}",
                    k + 1,
                    b.nrows(),
                    b.ncols()
                )));
            }
        }
        Ok(CWChainData { cells, boundaries })
    }

    pub fn cells(&self) -> &[Vec<Cell>] {
        &self.cells
    }

    pub fn cells_in_dim(&self, d: usize) -> &[Cell] {
        self.cells.get(d).map_or(&[], Vec::as_slice)
    }

    /// `B_d`, for `1 <= d <= dim`.
    pub fn boundary(&self, d: usize) -> Option<&IntMatrix> {
        d.checked_sub(1).and_then(|k| self.boundaries.get(k))
    }

    pub fn boundaries(&self) -> &[IntMatrix] {
        &self.boundaries
    }

    /// Top dimension, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.cells.len().checked_sub(1)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn is_graded(&self) -> bool {
        self.cells.iter().flatten().all(|c| c.mdeg.is_some())
    }

    /// Same cells, new boundary matrices.
    pub fn with_boundaries(&self, boundaries: Vec<IntMatrix>) -> Result<Self, CwError> {
        CWChainData::new(self.cells.clone(), boundaries)
    }

    pub fn with_cells(&self, cells: Vec<Vec<Cell>>) -> Result<Self, CwError> {
        CWChainData::new(cells, self.boundaries.clone())
    }
}

/// One failed invariant of [`validate_cw`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CwIssue {
    /// `(B_{d-1} B_d)[row, col] != 0`.
    BoundarySquare { d: usize, row: usize, col: usize },
    /// A column of `B_1` that is neither `+1, -1` nor zero.
    EdgeColumn { col: usize },
    /// Some cells carry a multidegree and some do not.
    PartialGrading { dim: usize, index: usize },
    MdegLength { dim: usize, index: usize },
    DuplicateId { dim: usize, id: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CwValidation {
    pub issues: Vec<CwIssue>,
}

impl CwValidation {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

pub fn validate_cw(data: &CWChainData) -> CwValidation {
    let mut issues = Vec::new();
    for (dim, cells) in data.cells.iter().enumerate() {
        let mut ids = BTreeSet::new();
        for c in cells {
            if !ids.insert(&c.id) {
                issues.push(CwIssue::DuplicateId { dim, id: c.id.clone() });
            }
        }
    }
    let any_graded = data.cells.iter().flatten().any(|c| c.mdeg.is_some());
    if any_graded {
        let n = data.cells.iter().flatten().find_map(|c| c.mdeg.as_ref()).map_or(0, Multidegree::len);
        for (dim, cells) in data.cells.iter().enumerate() {
            for (index, c) in cells.iter().enumerate() {
                match &c.mdeg {
                    None => issues.push(CwIssue::PartialGrading { dim, index }),
                    Some(m) if m.len() != n => issues.push(CwIssue::MdegLength { dim, index }),
                    _ => {}
                }
            }
        }
    }
    if let Some(b1) = data.boundary(1) {
        for col in 0..b1.ncols() {
            if edge_endpoints(b1, col).is_none() && !column_is_zero(b1, col) {
                issues.push(CwIssue::EdgeColumn { col });
            }
        }
    }
    for d in 2..data.cells.len() {
        let prod = data.boundaries[d - 2].mul(&data.boundaries[d - 1]).expect("shapes checked");
        for (row, col, _) in prod.entries() {
            issues.push(CwIssue::BoundarySquare { d, row, col });
        }
    }
    CwValidation { issues }
}

fn column_is_zero(m: &IntMatrix, col: usize) -> bool {
    (0..m.nrows()).all(|r| m.get(r, col).is_zero())
}

/// `(tail, head)` when the column is `-1` at `tail`, `+1` at `head`, zero elsewhere.
fn edge_endpoints(b1: &IntMatrix, col: usize) -> Option<(usize, usize)> {
    let mut plus = None;
    let mut minus = None;
    for r in 0..b1.nrows() {
        let v = b1.get(r, col);
        if v.is_zero() {
            continue;
        }
        if v.is_one() && plus.is_none() {
            plus = Some(r);
        } else if (-v).is_one() && minus.is_none() {
            minus = Some(r);
        } else {
            return None;
        }
    }
    match (minus, plus) {
        (Some(t), Some(h)) => Some((t, h)),
        _ => None,
    }
}

/// Reasons the 1- and 2-cells fail the combinatorial regularity test; empty
/// when the test passes.
///
/// Edges need two distinct endpoints with coefficients `+1` and `-1`. Each
/// 2-cell needs unit coefficients whose edges form one simple closed cycle:
/// connected, every vertex on it meeting exactly two of its edges. This is a
/// chain-level stand-in for "the closure of every cell of dimension <= 2 is a
/// closed ball".
pub fn regularity_violations(data: &CWChainData) -> Vec<String> {
    let mut out = Vec::new();
    let mut endpoints = Vec::new();
    if let Some(b1) = data.boundary(1) {
        for col in 0..b1.ncols() {
            match edge_endpoints(b1, col) {
                Some(e) => endpoints.push(e),
                None => {
                    out.push(format!("edge {} lacks two distinct endpoints", data.cells[1][col].id));
                    return out;
                }
            }
        }
    }
    let Some(b2) = data.boundary(2) else { return out };
    for col in 0..b2.ncols() {
        let id = &data.cells[2][col].id;
        let mut support = Vec::new();
        for r in 0..b2.nrows() {
            let v = b2.get(r, col);
            if v.is_zero() {
                continue;
            }
            if !v.abs().is_one() {
                out.push(format!("2-cell {id} meets edge {} with coefficient {v}", data.cells[1][r].id));
            }
            support.push(r);
        }
        if support.is_empty() {
            out.push(format!("2-cell {id} has empty boundary"));
            continue;
        }
        let mut valence: BTreeMap<usize, usize> = BTreeMap::new();
        for &e in &support {
            let (t, h) = endpoints[e];
            *valence.entry(t).or_default() += 1;
            *valence.entry(h).or_default() += 1;
        }
        if let Some((&v, &k)) = valence.iter().find(|(_, &k)| k != 2) {
            out.push(format!(
                "2-cell {id}: vertex {} meets {k} boundary edges",
                data.cells[0][v].id
            ));
            continue;
        }
        // connectivity of the support graph
        let mut seen = BTreeSet::from([endpoints[support[0]].0]);
        let mut stack = vec![endpoints[support[0]].0];
        while let Some(v) = stack.pop() {
            for &e in &support {
                let (t, h) = endpoints[e];
                for (a, b) in [(t, h), (h, t)] {
                    if a == v && seen.insert(b) {
                        stack.push(b);
                    }
                }
            }
        }
        if seen.len() != valence.len() {
            out.push(format!("2-cell {id}: boundary edges form more than one cycle"));
        }
    }
    out
}

pub fn check_regular_two_skeleton(data: &CWChainData) -> bool {
    regularity_violations(data).is_empty()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainCell {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mdeg: Option<Multidegree>,
}

/// Based chain complex of GF(p) vector spaces; `differentials[i - 1]` is
/// `d_i` in the standard bases. The augmentation `C_0 -> GF(p)` sends every
/// basis element to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpChainComplex {
    pub p: Prime,
    pub cells: Vec<Vec<ChainCell>>,
    pub differentials: Vec<FpMatrix>,
}

impl FpChainComplex {
    pub fn dim_at(&self, i: usize) -> usize {
        self.cells.get(i).map_or(0, Vec::len)
    }

    /// `d_i`; `d_0` is the augmentation row.
    pub fn differential(&self, i: usize) -> Option<FpMatrix> {
        if i == 0 {
            let n = self.dim_at(0);
            let ones = vec![vec![1i64; n]];
            return Some(if n == 0 { FpMatrix::zeros(self.p, 1, 0) } else { FpMatrix::from_rows(self.p, &ones) });
        }
        self.differentials.get(i - 1).cloned()
    }

    pub fn forget_grading(&self) -> FpChainComplex {
        let cells = self
            .cells
            .iter()
            .map(|cs| cs.iter().map(|c| ChainCell { id: c.id.clone(), mdeg: None }).collect())
            .collect();
        FpChainComplex { p: self.p, cells, differentials: self.differentials.clone() }
    }
}

pub fn cellular_chain_complex(data: &CWChainData, p: Prime) -> FpChainComplex {
    let cells = data
        .cells
        .iter()
        .map(|cs| cs.iter().map(|c| ChainCell { id: c.id.clone(), mdeg: c.mdeg.clone() }).collect())
        .collect();
    let differentials = data.boundaries.iter().map(|b| b.reduce_mod(p)).collect();
    FpChainComplex { p, cells, differentials }
}

/// Attaches the cell degrees to the mod-p cellular complex.
pub fn homogenize(
    data: &CWChainData,
    p: Prime,
    variables: &[String],
) -> Result<GradedFreeComplex, CwError> {
    if data.cells.is_empty() {
        return Err(CwError::Shape("complex has no cells".into()));
    }
    let mut frames = Vec::with_capacity(data.cells.len());
    for (dim, cells) in data.cells.iter().enumerate() {
        let mut frame = Vec::with_capacity(cells.len());
        for (index, c) in cells.iter().enumerate() {
            let m = c.mdeg.clone().ok_or(CwError::NotGraded { dim, index })?;
            if m.len() != variables.len() {
                return Err(CwError::MdegLength { dim, index, got: m.len(), expected: variables.len() });
            }
            frame.push(Generator::new(c.id.clone(), m));
        }
        frames.push(frame);
    }
    let diffs: Vec<FpMatrix> = data.boundaries.iter().map(|b| b.reduce_mod(p)).collect();
    for (k, d) in diffs.iter().enumerate() {
        for (row, col, _) in d.entries() {
            if !frames[k][row].mdeg.divides(&frames[k + 1][col].mdeg) {
                return Err(CwError::GradingViolation { dim: k + 1, row, col });
            }
        }
    }
    Ok(GradedFreeComplex::new(p, variables.to_vec(), frames, diffs)?)
}

/// Drops the degrees of a frame-form complex.
pub fn dehomogenize(res: &GradedFreeComplex) -> FpChainComplex {
    let cells = res
        .frames()
        .iter()
        .map(|f| f.iter().map(|g| ChainCell { id: g.id.clone(), mdeg: None }).collect())
        .collect();
    FpChainComplex { p: res.prime(), cells, differentials: res.differentials().to_vec() }
}

/// Frame-form complex as a based complex, keeping degrees.
pub fn graded_chain_complex(res: &GradedFreeComplex) -> FpChainComplex {
    let cells = res
        .frames()
        .iter()
        .map(|f| f.iter().map(|g| ChainCell { id: g.id.clone(), mdeg: Some(g.mdeg.clone()) }).collect())
        .collect();
    FpChainComplex { p: res.prime(), cells, differentials: res.differentials().to_vec() }
}

/// Integer boundary column helper for building data by hand.
pub(crate) fn int(v: i64) -> BigInt {
    BigInt::from(v)
}
