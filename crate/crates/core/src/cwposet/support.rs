use serde::{Deserialize, Serialize};

use super::cw::CWChainData;
use crate::exactlin::FpMatrix;
use crate::rescomplex::GradedFreeComplex;

/// Cap on backtracking nodes; reached only by inputs with many cells of equal
/// degree and no consistent matching.
pub const MATCH_NODE_LIMIT: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum SupportFailure {
    /// The cell data carries no multidegrees.
    NotGraded,
    Cardinality { degree: usize, generators: usize, cells: usize },
    /// Same counts, different multisets of degrees.
    Degree { degree: usize },
    /// No degree-respecting bijection makes the incidences agree mod p.
    Incidence { degree: usize },
    SearchLimit { nodes: usize },
}

/// Outcome of [`check_supports_cw`]. `eta[i][k]` is the index of the
/// `i`-cell matched to generator `k` of frame `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SupportReport {
    pub supported: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<SupportFailure>,
}

impl SupportReport {
    fn fail(f: SupportFailure) -> Self {
        SupportReport { supported: false, eta: None, failure: Some(f) }
    }
}

/// Looks for bijections between frames and cells preserving multidegrees and
/// with `D_i[tau, sigma] = B_i[eta(tau), eta(sigma)] mod p`. Generators are
/// assigned in frame order, each to the smallest cell index that still
/// extends to a full match, so the reported `eta` is the lexicographically
/// first one.
pub fn check_supports_cw(data: &CWChainData, res: &GradedFreeComplex) -> SupportReport {
    if !data.is_graded() {
        return SupportReport::fail(SupportFailure::NotGraded);
    }
    let frames = res.frames();
    let top = frames.len().max(data.cells().len());
    for degree in 0..top {
        let generators = frames.get(degree).map_or(0, Vec::len);
        let cells = data.cells_in_dim(degree).len();
        if generators != cells {
            return SupportReport::fail(SupportFailure::Cardinality { degree, generators, cells });
        }
    }
    for (degree, frame) in frames.iter().enumerate() {
        let mut a: Vec<_> = frame.iter().map(|g| &g.mdeg).collect();
        let mut b: Vec<_> = data.cells_in_dim(degree).iter().map(|c| c.mdeg.as_ref().expect("graded")).collect();
        a.sort();
        b.sort();
        if a != b {
            return SupportReport::fail(SupportFailure::Degree { degree });
        }
    }

    let p = res.prime();
    let reduced: Vec<FpMatrix> = data.boundaries().iter().map(|b| b.reduce_mod(p)).collect();
    let slots: Vec<(usize, usize)> =
        frames.iter().enumerate().flat_map(|(i, f)| (0..f.len()).map(move |k| (i, k))).collect();
    let mut search = Matcher {
        res,
        data,
        reduced: &reduced,
        eta: frames.iter().map(|f| vec![usize::MAX; f.len()]).collect(),
        used: frames.iter().map(|f| vec![false; f.len()]).collect(),
        nodes: 0,
        deepest: 0,
    };
    match search.run(&slots, 0) {
        Some(true) => SupportReport { supported: true, eta: Some(search.eta), failure: None },
        Some(false) => SupportReport::fail(SupportFailure::Incidence { degree: search.deepest }),
        None => SupportReport::fail(SupportFailure::SearchLimit { nodes: search.nodes }),
    }
}

struct Matcher<'a> {
    res: &'a GradedFreeComplex,
    data: &'a CWChainData,
    reduced: &'a [FpMatrix],
    eta: Vec<Vec<usize>>,
    used: Vec<Vec<bool>>,
    nodes: usize,
    deepest: usize,
}

impl Matcher<'_> {
    /// `None` when the node limit is hit.
    fn run(&mut self, slots: &[(usize, usize)], at: usize) -> Option<bool> {
        let Some(&(i, k)) = slots.get(at) else { return Some(true) };
        self.deepest = self.deepest.max(i);
        let mdeg = &self.res.frame(i)[k].mdeg;
        for c in 0..self.data.cells_in_dim(i).len() {
            if self.used[i][c] || self.data.cells_in_dim(i)[c].mdeg.as_ref() != Some(mdeg) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > MATCH_NODE_LIMIT {
                return None;
            }
            if i > 0 && !self.column_agrees(i, k, c) {
                continue;
            }
            self.eta[i][k] = c;
            self.used[i][c] = true;
            match self.run(slots, at + 1) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.used[i][c] = false;
            self.eta[i][k] = usize::MAX;
        }
        Some(false)
    }

    fn column_agrees(&self, i: usize, k: usize, c: usize) -> bool {
        let d = self.res.differential(i).expect("frame i > 0 has a differential");
        let b = &self.reduced[i - 1];
        (0..d.nrows()).all(|tau| d.get(tau, k) == b.get(self.eta[i - 1][tau], c))
    }
}
