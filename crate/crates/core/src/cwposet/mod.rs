//! CW complexes as chain data, their face posets, the supported-on-CW check,
//! and bases with minimal support.

mod basis;
mod cw;
mod poset;
pub mod shapes;
mod support;

pub use basis::{
    check_poset_support, find_minimal_support_basis, incidence_poset_of_based_complex, is_minimal_support,
    is_minimal_support_at, support, support_positions, BasedBasis, BasisElement, BasisSearch,
    PosetSupportVerdict, SearchOptions, SearchRecord, DEFAULT_SEARCH_BOUND,
};
pub use cw::{
    cellular_chain_complex, check_regular_two_skeleton, dehomogenize, graded_chain_complex, homogenize,
    regularity_violations, validate_cw, CWChainData, Cell, ChainCell, CwIssue, CwValidation, FpChainComplex,
};
pub use poset::{chain_incidence_poset, face_poset, LabeledPoset, PosetElement};
pub use support::{check_supports_cw, SupportFailure, SupportReport, MATCH_NODE_LIMIT};

use thiserror::Error;

use crate::exactlin::LinAlgError;
use crate::monoid::{MonoidError, Multidegree};
use crate::rescomplex::ComplexError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CwError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("bad matrix: {0}")]
    Format(String),
    #[error("bad poset: {0}")]
    Poset(String),
    #[error("cell {index} of dimension {dim} has no multidegree")]
    NotGraded { dim: usize, index: usize },
    #[error("cell {index} of dimension {dim} has {got} exponents, expected {expected}")]
    MdegLength { dim: usize, index: usize, got: usize, expected: usize },
    #[error("B_{dim}[{row},{col}] is nonzero but the face degree does not divide the cell degree")]
    GradingViolation { dim: usize, row: usize, col: usize },
    #[error("bad basis: {0}")]
    Basis(String),
    #[error("complex is not a minimal free resolution")]
    NotMinimalResolution,
    #[error("no minimal-support basis in degree {degree} at {mdeg} within {bound} candidates (stage 2 {})", if *.stage2 { "included" } else { "disabled" })]
    SearchExhausted { degree: usize, mdeg: Multidegree, bound: usize, stage2: bool },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}
