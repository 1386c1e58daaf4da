//! From a monomial ideal and a CW complex supporting its minimal resolution
//! to a complex `Y` whose face poset supports the resolution.
//!
//! The stages run in order and stop at the first failure:
//!
//! 1. `resolve`: minimize the Taylor complex of the ideal.
//! 2. `regularity`: combinatorial test on the 1- and 2-cells of `X`.
//! 3. `support`: match cells of `X` with generators of the resolution.
//! 4. `basis`: minimal-support basis of the homogenized cellular complex.
//! 5. `poset-support`: minimal support, homogeneity and degree monotonicity
//!    of that basis, and its incidence poset.
//! 6. `normalize`: rescale so every change-of-basis matrix has determinant 1.
//! 7. `lift`: lift the inverse basis matrices to integer matrices of
//!    determinant 1.
//! 8. `conjugate`: `B'_d = T_{d-1} B_d T_d^{-1}`.
//! 9. `verify`: re-check `Y` and compare its face poset with the incidence
//!    poset of stage 5.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::cwposet::{
    check_poset_support, check_regular_two_skeleton, check_supports_cw, face_poset, find_minimal_support_basis,
    graded_chain_complex, homogenize, regularity_violations, validate_cw, BasedBasis, CWChainData, CwError,
    PosetSupportVerdict, SearchOptions, SearchRecord, SupportReport,
};
use crate::exactlin::{lift_sl, FpMatrix, IntMatrix, LinAlgError, Prime};
use crate::monoid::MonomialIdeal;
use crate::rescomplex::{taylor_complex, BettiTable, GradedFreeComplex};
use crate::wire::{FpMatrixWire, IntMatrixWire};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("degree {degree}: expected size {expected}, got {got}")]
    SizeMismatch { degree: usize, expected: usize, got: usize },
    #[error("degree {degree}: integer matrix is not unimodular")]
    NotUnimodular { degree: usize },
    #[error("degree {degree}: change of basis must be the identity below degree 3")]
    LowDegreeChange { degree: usize },
    #[error("degree {degree}: integer matrix does not reduce to the field matrix")]
    Reduction { degree: usize },
    #[error("degree {degree}: {source}")]
    Lift { degree: usize, source: LinAlgError },
    #[error(transparent)]
    Cw(#[from] CwError),
}

/// Change of basis in one homological degree: `m_bar` sends standard
/// coordinates to coordinates in the new basis, and `t` is an integer matrix
/// of determinant 1 reducing to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeChange {
    pub m_bar: FpMatrix,
    pub t: IntMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BasisChangeWire", into = "BasisChangeWire")]
pub struct BasisChange {
    p: Prime,
    degrees: Vec<DegreeChange>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct DegreeChangeWire {
    m_bar: FpMatrixWire,
    t: IntMatrixWire,
}

#[derive(Serialize, Deserialize)]
struct BasisChangeWire {
    p: u32,
    degrees: Vec<DegreeChangeWire>,
}

impl TryFrom<BasisChangeWire> for BasisChange {
    type Error = String;

    fn try_from(w: BasisChangeWire) -> Result<Self, Self::Error> {
        let p = Prime::new(w.p).map_err(|e| e.to_string())?;
        let mut degrees = Vec::new();
        for d in w.degrees {
            let m_bar = d.m_bar.to_matrix(p).map_err(|e| e.to_string())?;
            degrees.push(DegreeChange { m_bar, t: d.t.to_matrix()? });
        }
        BasisChange::new(p, degrees).map_err(|e| e.to_string())
    }
}

impl From<BasisChange> for BasisChangeWire {
    fn from(b: BasisChange) -> Self {
        BasisChangeWire {
            p: b.p.get(),
            degrees: b
                .degrees
                .iter()
                .map(|d| DegreeChangeWire { m_bar: FpMatrixWire::from_matrix(&d.m_bar), t: IntMatrixWire::from_matrix(&d.t) })
                .collect(),
        }
    }
}

impl BasisChange {
    /// Checks sizes, `det(t) = 1`, `t = m_bar mod p`, and identities below
    /// degree 3.
    pub fn new(p: Prime, degrees: Vec<DegreeChange>) -> Result<Self, PipelineError> {
        for (degree, d) in degrees.iter().enumerate() {
            let n = d.m_bar.nrows();
            for got in [d.m_bar.ncols(), d.t.nrows(), d.t.ncols()] {
                if got != n {
                    return Err(PipelineError::SizeMismatch { degree, expected: n, got });
                }
            }
            if d.t.determinant().map_or(true, |v| v != 1.into()) {
                return Err(PipelineError::NotUnimodular { degree });
            }
            if d.t.reduce_mod(p) != d.m_bar {
                return Err(PipelineError::Reduction { degree });
            }
            if degree <= 2 && !d.t.is_identity() {
                return Err(PipelineError::LowDegreeChange { degree });
            }
        }
        Ok(BasisChange { p, degrees })
    }

    pub fn identity(p: Prime, ranks: &[usize]) -> Self {
        let degrees =
            ranks.iter().map(|&n| DegreeChange { m_bar: FpMatrix::identity(p, n), t: IntMatrix::identity(n) }).collect();
        BasisChange { p, degrees }
    }

    /// `m_bar_i = P_i^{-1}` and `t_i = lift_sl(m_bar_i)` from degree 3 on.
    /// The basis must be standard below degree 3 and have determinant-one
    /// basis matrices (see [`normalize_det`]).
    pub fn from_basis(basis: &BasedBasis) -> Result<Self, PipelineError> {
        let mut degrees = Vec::new();
        for degree in 0..basis.degrees().len() {
            let m_bar = basis.inverse_matrix(degree);
            let t = if degree <= 2 {
                if !m_bar.is_identity() {
                    return Err(PipelineError::LowDegreeChange { degree });
                }
                IntMatrix::identity(m_bar.nrows())
            } else {
                lift_sl(&m_bar).map_err(|source| PipelineError::Lift { degree, source })?
            };
            degrees.push(DegreeChange { m_bar, t });
        }
        Ok(BasisChange { p: basis.prime(), degrees })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn degrees(&self) -> &[DegreeChange] {
        &self.degrees
    }

    pub fn is_identity(&self) -> bool {
        self.degrees.iter().all(|d| d.t.is_identity())
    }
}

/// Boundaries of `Y`: `B'_d = T_{d-1} B_d T_d^{-1}`, computed over Z. Cells
/// and their labels are kept.
pub fn conjugate_boundaries(x: &CWChainData, t: &BasisChange) -> Result<CWChainData, PipelineError> {
    let counts = x.counts();
    if t.degrees.len() != counts.len() {
        return Err(PipelineError::SizeMismatch { degree: counts.len(), expected: counts.len(), got: t.degrees.len() });
    }
    for (degree, (d, &n)) in t.degrees.iter().zip(&counts).enumerate() {
        if d.t.nrows() != n {
            return Err(PipelineError::SizeMismatch { degree, expected: n, got: d.t.nrows() });
        }
        if degree <= 2 && !d.t.is_identity() {
            return Err(PipelineError::LowDegreeChange { degree });
        }
    }
    let inverses = t
        .degrees
        .iter()
        .enumerate()
        .map(|(degree, d)| d.t.inverse_unimodular().map_err(|_| PipelineError::NotUnimodular { degree }))
        .collect::<Result<Vec<_>, _>>()?;
    let mut boundaries = Vec::with_capacity(x.boundaries().len());
    for (k, b) in x.boundaries().iter().enumerate() {
        let d = k + 1;
        if t.degrees[d - 1].t.is_identity() && t.degrees[d].t.is_identity() {
            boundaries.push(b.clone());
            continue;
        }
        let left = t.degrees[d - 1].t.mul(b).expect("sizes checked");
        boundaries.push(left.mul(&inverses[d]).expect("sizes checked"));
    }
    Ok(x.with_boundaries(boundaries)?)
}

/// Rescales the last element of each degree `i >= 3` so that its basis
/// matrix has determinant 1. Supports and incidences only change by units.
pub fn normalize_det(e: &BasedBasis) -> BasedBasis {
    let p = e.prime();
    let mut out = e.clone();
    for i in 3..e.degrees().len() {
        let n = e.degree(i).len();
        if n == 0 {
            continue;
        }
        let d = out.matrix(i).determinant().expect("square");
        if d != 1 {
            out = out.with_element_scaled(i, n - 1, p.inv(d).expect("basis matrices are invertible"));
        }
    }
    out
}

/// Normalizes `basis`, lifts it, and conjugates the boundaries of `x`.
pub fn transform_with_basis(
    x: &CWChainData,
    basis: &BasedBasis,
) -> Result<(BasedBasis, BasisChange, CWChainData), PipelineError> {
    let normalized = normalize_det(basis);
    let change = BasisChange::from_basis(&normalized)?;
    let y = conjugate_boundaries(x, &change)?;
    Ok((normalized, change, y))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    Input,
    Resolve,
    Regularity,
    Support,
    Basis,
    PosetSupport,
    Normalize,
    Lift,
    Conjugate,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AbortKind {
    InvalidInput,
    NotSupported,
    NotRegular,
    SearchExhausted,
    NotSl,
    PosetMismatch,
    Internal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Abort {
    pub kind: AbortKind,
    pub stage: Stage,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityVerdict {
    pub regular: bool,
    pub violations: Vec<String>,
}

/// Record of one run. Every boolean is the result of a check listed in
/// `checks` by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Certificate {
    pub inputs_digest: String,
    pub p: u32,
    pub ideal: String,
    pub furthest_stage: Stage,
    pub success: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abort: Option<Abort>,
    pub checks: Vec<NamedCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regularity: Option<RegularityVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support: Option<SupportReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis_provenance: Option<Vec<SearchRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poset_support: Option<PosetSupportVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis_change: Option<BasisChange>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<CWChainData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y_equals_x: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poset_equality: Option<bool>,
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.passed)
    }
}

const NOTE_REGULARITY: &str =
    "regularity is tested combinatorially: unit-coefficient edges with distinct ends and 2-cells bounded by one simple edge cycle";
const NOTE_POSET: &str =
    "poset support is certified through its sufficient condition: a homogeneous basis with minimal-support boundaries whose degrees increase along covers";
const NOTE_DET: &str =
    "bases from degree 3 on are rescaled to determinant 1 before lifting; this changes neither supports nor covers";

#[derive(Serialize)]
struct DigestInput<'a> {
    ideal: &'a MonomialIdeal,
    cw: &'a CWChainData,
    p: u32,
    options: &'a SearchOptions,
}

pub fn inputs_digest(ideal: &MonomialIdeal, x: &CWChainData, p: Prime, opts: &SearchOptions) -> String {
    let json = serde_json::to_vec(&DigestInput { ideal, cw: x, p: p.get(), options: opts })
        .expect("inputs serialize");
    hex::encode(Sha256::digest(&json))
}

struct Run {
    cert: Certificate,
}

impl Run {
    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> bool {
        self.cert.checks.push(NamedCheck { name: name.into(), passed, detail: detail.into() });
        passed
    }

    fn reach(&mut self, stage: Stage) {
        self.cert.furthest_stage = stage;
    }

    fn abort(mut self, kind: AbortKind, message: impl Into<String>) -> Certificate {
        self.cert.abort = Some(Abort { kind, stage: self.cert.furthest_stage, message: message.into() });
        self.cert
    }
}

/// Runs every stage on `(ideal, x, p)`. Failures end the run and are
/// recorded in the certificate; this function itself never fails.
pub fn run_pipeline(ideal: &MonomialIdeal, x: &CWChainData, p: Prime, opts: &SearchOptions) -> Certificate {
    let mut run = Run {
        cert: Certificate {
            inputs_digest: inputs_digest(ideal, x, p, opts),
            p: p.get(),
            ideal: ideal.render(),
            furthest_stage: Stage::Input,
            success: false,
            abort: None,
            checks: Vec::new(),
            betti: None,
            regularity: None,
            support: None,
            basis_provenance: None,
            poset_support: None,
            basis_change: None,
            y: None,
            y_equals_x: None,
            poset_equality: None,
            notes: vec![NOTE_REGULARITY.into(), NOTE_POSET.into(), NOTE_DET.into()],
        },
    };

    let validation = validate_cw(&x);
    let detail = serde_json::to_string(&validation.issues).expect("issues serialize");
    if !run.check("x.validate_cw", validation.is_valid(), detail) {
        return run.abort(AbortKind::InvalidInput, "X fails the CW invariants");
    }
    let h = match homogenize(x, p, ideal.variables()) {
        Ok(h) => h,
        Err(e) => {
            run.check("x.homogenize", false, e.to_string());
            return run.abort(AbortKind::InvalidInput, e.to_string());
        }
    };
    run.check("x.homogenize", true, "");

    run.reach(Stage::Resolve);
    let taylor = taylor_complex(ideal, p);
    let f = match taylor.minimize() {
        Ok(f) => f,
        Err(e) => return run.abort(AbortKind::Internal, e.to_string()),
    };
    run.check("f.is_complex", f.is_complex(), "");
    run.check("f.is_exact", f.is_exact(ideal), "");
    run.check("f.is_minimal", f.is_minimal(), "");
    run.cert.betti = Some(f.betti_table());
    if !(f.is_complex() && f.is_exact(ideal) && f.is_minimal()) {
        return run.abort(AbortKind::Internal, "minimized Taylor complex is not a minimal resolution");
    }

    run.reach(Stage::Regularity);
    let violations = regularity_violations(x);
    let regular = violations.is_empty();
    run.cert.regularity = Some(RegularityVerdict { regular, violations: violations.clone() });
    if !run.check("x.regular_two_skeleton", regular, violations.join("; ")) {
        return run.abort(AbortKind::NotRegular, "X fails the regular 2-skeleton test");
    }

    run.reach(Stage::Support);
    let support = check_supports_cw(x, &f);
    let supported = support.supported;
    let detail = support.failure.as_ref().map(|f| format!("{f:?}")).unwrap_or_default();
    run.cert.support = Some(support);
    if !run.check("x.supports_f", supported, detail) {
        return run.abort(AbortKind::NotSupported, "X does not support the minimal resolution");
    }

    run.reach(Stage::Basis);
    let found = match find_minimal_support_basis(&h, opts) {
        Ok(found) => found,
        Err(e @ CwError::SearchExhausted { .. }) => {
            run.check("basis.search", false, e.to_string());
            return run.abort(AbortKind::SearchExhausted, e.to_string());
        }
        Err(e) => return run.abort(AbortKind::Internal, e.to_string()),
    };
    run.check("basis.search", true, format!("{} degree groups searched", found.provenance.len()));
    run.cert.basis_provenance = Some(found.provenance.clone());

    run.reach(Stage::PosetSupport);
    let verdict = match check_poset_support(&h, &found.basis) {
        Ok(v) => v,
        Err(e) => return run.abort(AbortKind::Internal, e.to_string()),
    };
    run.check("basis.homogeneous", verdict.homogeneous, "");
    run.check("basis.minimal_support", verdict.minimal_support, verdict.failures.join(", "));
    run.check("poset.degree_morphism", verdict.deg_morphism, "");
    let poset = verdict.poset.clone();
    let supports = verdict.poset_supports;
    run.cert.poset_support = Some(verdict);
    if !supports {
        return run.abort(AbortKind::PosetMismatch, "the basis does not meet the poset-support hypotheses");
    }

    run.reach(Stage::Normalize);
    let normalized = normalize_det(&found.basis);
    for i in 3..normalized.degrees().len() {
        let det = normalized.matrix(i).determinant().expect("square");
        run.check(&format!("normalize.det_one[{i}]"), det == 1, format!("det = {det}"));
    }
    let chain = graded_chain_complex(&h);
    let before = crate::cwposet::incidence_poset_of_based_complex(&chain, &found.basis);
    let after = crate::cwposet::incidence_poset_of_based_complex(&chain, &normalized);
    run.check("normalize.poset_unchanged", before.is_ok() && before == after, "");

    run.reach(Stage::Lift);
    let change = match BasisChange::from_basis(&normalized) {
        Ok(c) => c,
        Err(e @ PipelineError::Lift { .. }) => return run.abort(AbortKind::NotSl, e.to_string()),
        Err(e) => return run.abort(AbortKind::Internal, e.to_string()),
    };
    for (i, d) in change.degrees().iter().enumerate() {
        let det = d.t.determinant().expect("square");
        run.check(&format!("lift.det_one[{i}]"), det == 1.into(), format!("det = {det}"));
        run.check(&format!("lift.reduces[{i}]"), d.t.reduce_mod(p) == d.m_bar, "");
    }

    run.reach(Stage::Conjugate);
    let y = match conjugate_boundaries(x, &change) {
        Ok(y) => y,
        Err(e) => return run.abort(AbortKind::Internal, e.to_string()),
    };
    run.cert.basis_change = Some(change);

    run.reach(Stage::Verify);
    let mut ok = run.check("y.validate_cw", validate_cw(&y).is_valid(), "");
    let rebased = normalized.rebase(&h);
    let reduces = rebased.as_ref().is_ok_and(|r| {
        y.boundaries().iter().zip(r.differentials()).all(|(b, d)| &b.reduce_mod(p) == d)
    });
    ok &= run.check("y.reduces_to_rebased_resolution", reduces, "");
    let rebased_ok = rebased.as_ref().is_ok_and(|r| {
        r.is_complex() && r.is_exact(ideal) && r.is_minimal() && r.betti_table() == f.betti_table()
    });
    ok &= run.check("rebased_resolution.is_minimal_resolution", rebased_ok, "");
    let y_supports = rebased.as_ref().is_ok_and(|r| check_supports_cw(&y, r).supported);
    ok &= run.check("y.supports_rebased_resolution", y_supports, "");
    let equal = face_poset(&y, p) == poset;
    run.cert.poset_equality = Some(equal);
    ok &= run.check("y.face_poset_equals_incidence_poset", equal, "");
    let same = &y == x;
    run.cert.y_equals_x = Some(same);
    let low = x.dim().is_none_or(|d| d <= 2);
    if low {
        ok &= run.check("y.equals_x_in_low_dimension", same, "");
    }
    ok &= run.check("y.regular_two_skeleton", check_regular_two_skeleton(&y), "");
    run.cert.y = Some(y);
    if !equal {
        return run.abort(AbortKind::PosetMismatch, "face poset of Y differs from the incidence poset");
    }
    if !ok {
        return run.abort(AbortKind::Internal, "a verification check on Y failed");
    }
    run.cert.success = true;
    run.cert
}

/// Frame-form resolution used by the pipeline.
pub fn minimal_resolution(ideal: &MonomialIdeal, p: Prime) -> Result<GradedFreeComplex, crate::rescomplex::ComplexError> {
    taylor_complex(ideal, p).minimize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cwposet::shapes::*;
    use crate::monoid::{parse_ideal, Multidegree};
    use num_bigint::BigInt;

    fn p(n: u32) -> Prime {
        Prime::new(n).unwrap()
    }

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn unit_labels(n: usize) -> Vec<Multidegree> {
        (0..n).map(|k| Multidegree::new((0..n).map(|j| u32::from(j == k)).collect())).collect()
    }

    #[test]
    fn koszul_on_triangle_keeps_x() {
        let ideal = parse_ideal("x, y, z", &vars(&["x", "y", "z"])).unwrap();
        let x = simplex(2, Some(&unit_labels(3)));
        let cert = run_pipeline(&ideal, &x, p(2), &SearchOptions::default());
        assert!(cert.success, "{:?}", cert.abort);
        assert_eq!(cert.y.as_ref(), Some(&x));
        assert_eq!(cert.poset_equality, Some(true));
        assert!(cert.checks.iter().all(|c| c.passed), "{:?}", cert.checks);
    }

    #[test]
    fn loop_edge_is_not_regular() {
        let ideal = parse_ideal("x", &vars(&["x"])).unwrap();
        let x = loop_edge(Some(Multidegree::new(vec![1])));
        let cert = run_pipeline(&ideal, &x, p(2), &SearchOptions::default());
        assert_eq!(cert.abort.as_ref().map(|a| a.kind), Some(AbortKind::NotRegular));
        assert_eq!(cert.furthest_stage, Stage::Regularity);
        assert!(cert.basis_provenance.is_none());
    }

    #[test]
    fn wrong_complex_is_not_supported() {
        let ideal = parse_ideal("x, y, z", &vars(&["x", "y", "z"])).unwrap();
        let x = hollow_triangle(Some(&unit_labels(3)));
        let cert = run_pipeline(&ideal, &x, p(3), &SearchOptions::default());
        assert_eq!(cert.abort.map(|a| a.kind), Some(AbortKind::NotSupported));
    }

    #[test]
    fn identity_change_is_a_no_op() {
        let x = twin_tetrahedra();
        let t = BasisChange::identity(p(5), &x.counts());
        assert_eq!(conjugate_boundaries(&x, &t).unwrap(), x);
    }

    #[test]
    fn sl2_change_on_top_degree_matches_field_change() {
        let x = twin_tetrahedra();
        let prime = p(5);
        let mut t = BasisChange::identity(prime, &x.counts());
        let t3 = IntMatrix::from_rows(&[vec![2, 3], vec![1, 2]]);
        t.degrees[3] = DegreeChange { m_bar: t3.reduce_mod(prime), t: t3.clone() };
        let t = BasisChange::new(prime, t.degrees).unwrap();
        let y = conjugate_boundaries(&x, &t).unwrap();
        let b3 = y.boundary(3).unwrap();
        assert!(y.boundary(2).unwrap().mul(b3).unwrap().is_zero());
        // over GF(p): D' = D * P where P = m_bar^{-1}
        let direct = x.boundary(3).unwrap().reduce_mod(prime).mul(&t3.reduce_mod(prime).inverse().unwrap()).unwrap();
        assert_eq!(b3.reduce_mod(prime), direct);
        assert_eq!(b3.rank_rational(), x.boundary(3).unwrap().rank_rational());
    }

    #[test]
    fn basis_change_rejects_bad_input() {
        let prime = p(3);
        let two = IntMatrix::from_rows(&[vec![2]]);
        let bad = vec![DegreeChange { m_bar: two.reduce_mod(prime), t: two }];
        assert_eq!(BasisChange::new(prime, bad), Err(PipelineError::NotUnimodular { degree: 0 }));
        let swap = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]);
        let low = vec![DegreeChange { m_bar: swap.reduce_mod(prime), t: swap }];
        assert_eq!(BasisChange::new(prime, low), Err(PipelineError::LowDegreeChange { degree: 0 }));
        let x = labeled_segment();
        let t = BasisChange::identity(prime, &[2]);
        assert!(matches!(conjugate_boundaries(&x, &t), Err(PipelineError::SizeMismatch { .. })));
    }

    #[test]
    fn normalize_det_scales_last_element() {
        let x = twin_tetrahedra();
        let chain = crate::cwposet::cellular_chain_complex(&x, p(5));
        let std = BasedBasis::standard(&chain);
        assert_eq!(normalize_det(&std), std);
        let scaled = std.with_element_scaled(3, 0, 2);
        let fixed = normalize_det(&scaled);
        assert_eq!(fixed.matrix(3).determinant().unwrap(), 1);
        // 2 * 3 = 6 = 1 mod 5
        assert_eq!(fixed.degree(3)[1].coords, vec![0, 3]);
        let before = crate::cwposet::incidence_poset_of_based_complex(&chain, &scaled).unwrap();
        let after = crate::cwposet::incidence_poset_of_based_complex(&chain, &fixed).unwrap();
        assert_eq!(before, after);
    }

    #[test]
    fn fabricated_basis_gives_y_with_smaller_top_boundary() {
        let x = twin_tetrahedra();
        let names: Vec<String> = (0..8).map(|k| format!("x{k}")).collect();
        for prime in [2, 3] {
            let h = homogenize(&x, p(prime), &names).unwrap();
            let found = find_minimal_support_basis(&h, &SearchOptions::default()).unwrap();
            let (normalized, change, y) = transform_with_basis(&x, &found.basis).unwrap();
            assert!(!change.is_identity());
            assert!(validate_cw(&y).is_valid());
            // both new 3-cells are glued along a single sphere
            let b3 = y.boundary(3).unwrap();
            for c in 0..2 {
                let support = (0..b3.nrows()).filter(|&r| b3.get(r, c) != &BigInt::from(0)).count();
                assert_eq!(support, 4);
            }
            let chain = graded_chain_complex(&h);
            let incidence = crate::cwposet::incidence_poset_of_based_complex(&chain, &normalized).unwrap();
            assert_eq!(face_poset(&y, p(prime)), incidence);
        }
    }

    #[test]
    fn certificate_serializes_deterministically() {
        let ideal = parse_ideal("x, y", &vars(&["x", "y"])).unwrap();
        let x = labeled_segment();
        let a = serde_json::to_string(&run_pipeline(&ideal, &x, p(3), &SearchOptions::default())).unwrap();
        let b = serde_json::to_string(&run_pipeline(&ideal, &x, p(3), &SearchOptions::default())).unwrap();
        assert_eq!(a, b);
        let back: Certificate = serde_json::from_str(&a).unwrap();
        assert!(back.success);
    }
}
