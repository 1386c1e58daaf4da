//! Bundled examples: small monomial ideals and CW complexes with their
//! expected pipeline outcomes, and a deterministic runner over them.

use serde::{Deserialize, Serialize};

use crate::cwposet::shapes::{
    bowtie_disk, double_disk, hollow_triangle, labeled_segment, loop_edge, simplex, solid_square, square,
    twin_tetrahedra,
};
use crate::cwposet::{check_regular_two_skeleton, CWChainData, SearchOptions};
use crate::exactlin::Prime;
use crate::monoid::{parse_ideal, MonomialIdeal, Multidegree};
use crate::pipeline::{run_pipeline, AbortKind, Stage};
use crate::rescomplex::{betti_oracle, taylor_complex, BettiTable};

#[derive(Clone, Debug)]
pub struct IdealCase {
    pub name: &'static str,
    pub ideal: MonomialIdeal,
    pub p: Prime,
}

fn vars(names: &str) -> Vec<String> {
    names.chars().map(String::from).collect()
}

fn prime(p: u32) -> Prime {
    Prime::new(p).expect("corpus primes are prime")
}

const IDEALS: &[(&str, &str, &str, u32)] = &[
    ("principal", "x", "x", 2),
    ("koszul-2", "x, y", "xy", 2),
    ("koszul-3", "x, y, z", "xyz", 3),
    ("koszul-4", "a, b, c, d", "abcd", 2),
    ("triangle-edges", "x*y, y*z, x*z", "xyz", 2),
    ("triangle-edges-p5", "x*y, y*z, x*z", "xyz", 5),
    ("quadrics-2", "x^2, x*y, y^2", "xy", 3),
    ("squares-3", "x^2, y^2, z^2", "xyz", 5),
    ("four-cycle", "a*b, b*c, c*d, a*d", "abcd", 2),
    ("generic-4", "a*b^2, b*c^2, c*d^2, a^2*d", "abcd", 2),
    ("generic-4-p3", "a*b^2, b*c^2, c*d^2, a^2*d", "abcd", 3),
    ("cubics-2", "x^3, x^2*y, x*y^2, y^3", "xy", 2),
    ("mixed-3", "x*y*z, x^2, y^2", "xyz", 3),
    ("disjoint-pair", "a*b, c*d", "abcd", 5),
    ("mixed-powers", "x^2*y, x*y^2, z^3", "xyz", 3),
    ("five-edges", "a*b, a*c, a*d, b*c, b*d", "abcd", 2),
    ("cycle-chord", "x*y, y*z, z*w, w*x, x*z", "xyzw", 3),
    ("powers-and-product", "x^2, y^3, z^4, x*y*z", "xyz", 5),
    ("tetra-faces", "a*b*c, b*c*d, a*c*d, a*b*d", "abcd", 2),
    ("quartic-gaps", "x^2*y^2, x^3, y^3", "xy", 5),
    ("triangle-plus-square", "x*y, x*z, y*z, w^2", "xyzw", 3),
    ("quartics-5", "x^4, x^3*y, x^2*y^2, x*y^3, y^4", "xy", 2),
    ("cyclic-3", "a^2*b, b^2*c, c^2*a", "abc", 5),
    ("uneven-3", "x*y^2*z, x^2*y, z^2", "xyz", 2),
];

pub fn ideal_cases() -> Vec<IdealCase> {
    IDEALS
        .iter()
        .map(|&(name, text, names, p)| IdealCase {
            name,
            ideal: parse_ideal(text, &vars(names)).expect("corpus ideals parse"),
            p: prime(p),
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct PipelineCase {
    pub name: &'static str,
    pub ideal: MonomialIdeal,
    pub cw: CWChainData,
    pub p: Prime,
    /// `None` for a successful run.
    pub expected_abort: Option<AbortKind>,
}

fn monomials(ideal: &MonomialIdeal) -> Vec<Multidegree> {
    ideal.generators().to_vec()
}

/// Generators in the order the vertices of a shape should carry them.
fn labels(text: &str, names: &str) -> (MonomialIdeal, Vec<Multidegree>) {
    let v = vars(names);
    let ideal = parse_ideal(text, &v).expect("corpus ideals parse");
    let order: Vec<Multidegree> = text
        .split(',')
        .map(|g| parse_ideal(g, &v).expect("generator parses").generators()[0].clone())
        .collect();
    (ideal, order)
}

pub fn pipeline_cases() -> Vec<PipelineCase> {
    let mut out = Vec::new();
    let (xyz, _) = labels("x, y, z", "xyz");
    let tri = simplex(2, Some(&monomials(&xyz)));
    for p in [2, 3] {
        out.push(PipelineCase {
            name: "koszul-3-on-triangle",
            ideal: xyz.clone(),
            cw: tri.clone(),
            p: prime(p),
            expected_abort: None,
        });
    }
    let (xy, _) = labels("x, y", "xy");
    out.push(PipelineCase {
        name: "koszul-2-on-segment",
        ideal: xy,
        cw: labeled_segment(),
        p: prime(3),
        expected_abort: None,
    });
    // simplices carry the generators in the ideal's own order, so that the
    // simplicial orientation matches the Taylor signs
    let (generic, _) = labels("a*b^2, b*c^2, c*d^2, a^2*d", "abcd");
    for p in [2, 3] {
        out.push(PipelineCase {
            name: "generic-4-on-scarf-tetrahedron",
            ideal: generic.clone(),
            cw: simplex(3, Some(&monomials(&generic))),
            p: prime(p),
            expected_abort: None,
        });
    }
    let (abcd, _) = labels("a, b, c, d", "abcd");
    out.push(PipelineCase {
        name: "koszul-4-on-tetrahedron",
        ideal: abcd.clone(),
        cw: simplex(3, Some(&monomials(&abcd))),
        p: prime(5),
        expected_abort: None,
    });
    let (cycle, order) = labels("a*b, b*c, c*d, a*d", "abcd");
    for p in [2, 3] {
        out.push(PipelineCase {
            name: "four-cycle-on-square",
            ideal: cycle.clone(),
            cw: square(Some(&order)),
            p: prime(p),
            expected_abort: None,
        });
    }
    let (x, _) = labels("x", "x");
    out.push(PipelineCase {
        name: "loop-edge",
        ideal: x,
        cw: loop_edge(Some(Multidegree::new(vec![1]))),
        p: prime(2),
        expected_abort: Some(AbortKind::NotRegular),
    });
    out.push(PipelineCase {
        name: "hollow-triangle-for-koszul-3",
        ideal: xyz.clone(),
        cw: hollow_triangle(Some(&monomials(&xyz))),
        p: prime(3),
        expected_abort: Some(AbortKind::NotSupported),
    });
    let (edges, order) = labels("x*y, y*z, x*z", "xyz");
    out.push(PipelineCase {
        name: "taylor-simplex-for-triangle-edges",
        ideal: edges,
        cw: simplex(2, Some(&order)),
        p: prime(2),
        expected_abort: Some(AbortKind::NotSupported),
    });
    out.push(PipelineCase {
        name: "ungraded-square",
        ideal: cycle,
        cw: solid_square(),
        p: prime(2),
        expected_abort: Some(AbortKind::InvalidInput),
    });
    out
}

/// Named CW inputs, graded or not, for checks on the standard basis.
pub fn cw_shapes() -> Vec<(&'static str, CWChainData)> {
    let mut out: Vec<(&'static str, CWChainData)> = vec![
        ("triangle", simplex(2, None)),
        ("tetrahedron", simplex(3, None)),
        ("hollow-triangle", hollow_triangle(None)),
        ("square", solid_square()),
        ("segment", labeled_segment()),
        ("twin-tetrahedra", twin_tetrahedra()),
        ("loop-edge", loop_edge(None)),
        ("double-disk", double_disk()),
        ("bowtie-disk", bowtie_disk()),
    ];
    out.extend(pipeline_cases().into_iter().map(|c| (c.name, c.cw)));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IdealOutcome {
    pub name: String,
    pub ideal: String,
    pub p: u32,
    pub betti: BettiTable,
    pub totals: Vec<usize>,
    pub oracle_agrees: bool,
    pub is_complex: bool,
    pub is_exact: bool,
    pub is_minimal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PipelineOutcome {
    pub name: String,
    pub p: u32,
    pub regular: bool,
    pub success: bool,
    pub abort: Option<AbortKind>,
    pub expected_abort: Option<AbortKind>,
    pub as_expected: bool,
    pub furthest_stage: Stage,
    pub inputs_digest: String,
    pub y_equals_x: Option<bool>,
    pub poset_equality: Option<bool>,
    pub basis_stages: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub ideals: Vec<IdealOutcome>,
    pub pipeline: Vec<PipelineOutcome>,
}

impl CorpusReport {
    pub fn all_pass(&self) -> bool {
        self.ideals.iter().all(|o| o.oracle_agrees && o.is_complex && o.is_exact && o.is_minimal)
            && self.pipeline.iter().all(|o| o.as_expected)
    }
}

pub fn run_ideal(case: &IdealCase) -> IdealOutcome {
    let res = taylor_complex(&case.ideal, case.p).minimize().expect("Taylor complexes are exact");
    let betti = res.betti_table();
    IdealOutcome {
        name: case.name.into(),
        ideal: case.ideal.render(),
        p: case.p.get(),
        totals: betti.totals(),
        oracle_agrees: betti == betti_oracle(&case.ideal, case.p),
        is_complex: res.is_complex(),
        is_exact: res.is_exact(&case.ideal),
        is_minimal: res.is_minimal(),
        betti,
    }
}

pub fn run_case(case: &PipelineCase, opts: &SearchOptions) -> PipelineOutcome {
    let cert = run_pipeline(&case.ideal, &case.cw, case.p, opts);
    let abort = cert.abort.as_ref().map(|a| a.kind);
    PipelineOutcome {
        name: case.name.into(),
        p: case.p.get(),
        regular: check_regular_two_skeleton(&case.cw),
        success: cert.success,
        abort,
        expected_abort: case.expected_abort,
        as_expected: abort == case.expected_abort && cert.success == case.expected_abort.is_none(),
        furthest_stage: cert.furthest_stage,
        inputs_digest: cert.inputs_digest,
        y_equals_x: cert.y_equals_x,
        poset_equality: cert.poset_equality,
        basis_stages: cert.basis_provenance.unwrap_or_default().iter().map(|r| r.stage).collect(),
    }
}

pub fn run_corpus(opts: &SearchOptions) -> CorpusReport {
    CorpusReport {
        ideals: ideal_cases().iter().map(run_ideal).collect(),
        pipeline: pipeline_cases().iter().map(|c| run_case(c, opts)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_meets_its_bounds() {
        let cases = ideal_cases();
        assert!(cases.len() >= 20);
        for c in &cases {
            assert!(c.ideal.generators().len() <= 5, "{}", c.name);
            assert!(c.ideal.nvars() <= 4, "{}", c.name);
            assert!([2, 3, 5].contains(&c.p.get()));
        }
    }

    #[test]
    fn whole_corpus_passes() {
        let report = run_corpus(&SearchOptions::default());
        for o in &report.pipeline {
            assert!(o.as_expected, "{o:?}");
        }
        assert!(report.all_pass());
    }
}
