use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::cw::{graded_chain_complex, ChainCell, FpChainComplex};
use super::poset::{chain_incidence_poset, LabeledPoset};
use super::CwError;
use crate::exactlin::{FpMatrix, FpVector, Prime};
use crate::monoid::Multidegree;
use crate::rescomplex::{GradedFreeComplex, Generator};

pub const DEFAULT_SEARCH_BOUND: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisElement {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mdeg: Option<Multidegree>,
    /// Coordinates in the standard basis of its degree.
    pub coords: FpVector,
}

/// A basis of every chain group, as vectors in standard coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BasisWire", into = "BasisWire")]
pub struct BasedBasis {
    p: Prime,
    degrees: Vec<Vec<BasisElement>>,
}

#[derive(Serialize, Deserialize)]
struct BasisWire {
    p: u32,
    degrees: Vec<Vec<BasisElement>>,
}

impl TryFrom<BasisWire> for BasedBasis {
    type Error = CwError;

    fn try_from(w: BasisWire) -> Result<Self, Self::Error> {
        BasedBasis::new(Prime::new(w.p)?, w.degrees)
    }
}

impl From<BasedBasis> for BasisWire {
    fn from(b: BasedBasis) -> Self {
        BasisWire { p: b.p.get(), degrees: b.degrees }
    }
}

impl BasedBasis {
    /// Checks that each degree holds `n` vectors of length `n` forming an
    /// invertible matrix over GF(p).
    pub fn new(p: Prime, degrees: Vec<Vec<BasisElement>>) -> Result<Self, CwError> {
        let mut degrees = degrees;
        for (i, elems) in degrees.iter_mut().enumerate() {
            let n = elems.len();
            for e in elems.iter_mut() {
                if e.coords.len() != n {
                    return Err(CwError::Basis(format!(
                        "degree {i}: element {} has {} coordinates, expected {n}",
                        e.id,
                        e.coords.len()
                    )));
                }
                for v in e.coords.iter_mut() {
                    *v %= p.get();
                }
            }
        }
        let b = BasedBasis { p, degrees };
        for i in 0..b.degrees.len() {
            if b.matrix(i).rank() != b.degrees[i].len() {
                return Err(CwError::Basis(format!("degree {i}: vectors are linearly dependent")));
            }
        }
        Ok(b)
    }

    pub fn standard(complex: &FpChainComplex) -> Self {
        let degrees = complex
            .cells
            .iter()
            .map(|cells| {
                let n = cells.len();
                cells
                    .iter()
                    .enumerate()
                    .map(|(k, c)| {
                        let mut coords = vec![0; n];
                        coords[k] = 1;
                        BasisElement { id: c.id.clone(), mdeg: c.mdeg.clone(), coords }
                    })
                    .collect()
            })
            .collect();
        BasedBasis { p: complex.p, degrees }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn degrees(&self) -> &[Vec<BasisElement>] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> &[BasisElement] {
        self.degrees.get(i).map_or(&[], Vec::as_slice)
    }

    /// `P_i`: column `j` is element `j` in standard coordinates.
    pub fn matrix(&self, i: usize) -> FpMatrix {
        let elems = self.degree(i);
        let cols: Vec<FpVector> = elems.iter().map(|e| e.coords.clone()).collect();
        FpMatrix::from_columns(self.p, elems.len(), &cols)
    }

    /// `P_i^{-1}`: standard coordinates to basis coordinates.
    pub fn inverse_matrix(&self, i: usize) -> FpMatrix {
        self.matrix(i).inverse().expect("basis matrices are invertible")
    }

    pub fn is_standard_at(&self, i: usize) -> bool {
        self.matrix(i).is_identity()
    }

    pub fn is_standard(&self) -> bool {
        (0..self.degrees.len()).all(|i| self.is_standard_at(i))
    }

    /// Same basis with element `j` of degree `i` multiplied by the unit `c`.
    pub fn with_element_scaled(&self, i: usize, j: usize, c: u32) -> Self {
        let mut out = self.clone();
        for v in out.degrees[i][j].coords.iter_mut() {
            *v = self.p.mul(*v, c);
        }
        out
    }

    fn fits(&self, complex: &FpChainComplex) -> Result<(), CwError> {
        let a: Vec<usize> = self.degrees.iter().map(Vec::len).collect();
        let b: Vec<usize> = complex.cells.iter().map(Vec::len).collect();
        if a != b || self.p != complex.p {
            return Err(CwError::Basis(format!("basis ranks {a:?} do not match complex ranks {b:?}")));
        }
        Ok(())
    }

    /// Every element only uses standard generators of degree dividing its
    /// own, and for each degree `alpha` the block of same-degree coordinates
    /// of the same-degree elements is invertible.
    pub fn is_homogeneous_for(&self, complex: &FpChainComplex) -> bool {
        if self.fits(complex).is_err() {
            return false;
        }
        for (i, elems) in self.degrees.iter().enumerate() {
            let cells = &complex.cells[i];
            let mut groups: BTreeMap<&Multidegree, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
            for (k, c) in cells.iter().enumerate() {
                let Some(m) = &c.mdeg else { return false };
                groups.entry(m).or_default().0.push(k);
            }
            for (j, e) in elems.iter().enumerate() {
                let Some(m) = &e.mdeg else { return false };
                let used = e.coords.iter().enumerate().filter(|(_, &v)| v != 0);
                if !used.clone().all(|(k, _)| cells[k].mdeg.as_ref().is_some_and(|d| d.divides(m))) {
                    return false;
                }
                groups.entry(m).or_default().1.push(j);
            }
            let m = self.matrix(i);
            for (rows, cols) in groups.values() {
                if rows.len() != cols.len() || m.select(rows, cols).rank() != rows.len() {
                    return false;
                }
            }
        }
        true
    }

    /// The boundary `d_i` written in this basis: `P_{i-1}^{-1} D_i P_i`.
    /// For `i = 0` this is the augmentation row `(1,...,1) P_0`.
    pub fn boundary_in_basis(&self, complex: &FpChainComplex, i: usize) -> Option<FpMatrix> {
        let d = complex.differential(i)?;
        let right = d.mul(&self.matrix(i)).expect("shapes agree");
        if i == 0 {
            return Some(right);
        }
        Some(self.inverse_matrix(i - 1).mul(&right).expect("shapes agree"))
    }

    /// The complex with this basis as its standard basis.
    pub fn rebase_chain(&self, complex: &FpChainComplex) -> Result<FpChainComplex, CwError> {
        self.fits(complex)?;
        let cells = self
            .degrees
            .iter()
            .map(|es| es.iter().map(|e| ChainCell { id: e.id.clone(), mdeg: e.mdeg.clone() }).collect())
            .collect();
        let differentials = (1..self.degrees.len())
            .map(|i| self.boundary_in_basis(complex, i).expect("i >= 1 in range"))
            .collect();
        Ok(FpChainComplex { p: self.p, cells, differentials })
    }

    /// The frame-form complex in this basis; needs a homogeneous basis.
    pub fn rebase(&self, res: &GradedFreeComplex) -> Result<GradedFreeComplex, CwError> {
        let chain = graded_chain_complex(res);
        if !self.is_homogeneous_for(&chain) {
            return Err(CwError::Basis("basis is not homogeneous".into()));
        }
        let rebased = self.rebase_chain(&chain)?;
        let frames = rebased
            .cells
            .iter()
            .map(|cs| cs.iter().map(|c| Generator::new(c.id.clone(), c.mdeg.clone().expect("graded"))).collect())
            .collect();
        Ok(GradedFreeComplex::new(self.p, res.variables().to_vec(), frames, rebased.differentials)?)
    }
}

/// Positions of the basis elements of degree `i` with nonzero coefficient
/// in `z` (given in standard coordinates).
pub fn support_positions(z: &[u32], basis: &BasedBasis, i: usize) -> Vec<usize> {
    let c = basis.inverse_matrix(i).mul_vec(z);
    c.iter().enumerate().filter(|(_, &v)| v != 0).map(|(k, _)| k).collect()
}

/// Ids of the basis elements of degree `i` with nonzero coefficient in `z`.
pub fn support(z: &[u32], basis: &BasedBasis, i: usize) -> BTreeSet<String> {
    support_positions(z, basis, i).into_iter().map(|k| basis.degree(i)[k].id.clone()).collect()
}

/// Whether a vector supported on `s` (in basis coordinates) can shrink its
/// support inside the kernel of `b`: for each `e` in `s` the columns
/// `s \ {e}` must be independent.
fn no_smaller_kernel_support(b: &FpMatrix, s: &[usize]) -> bool {
    (0..s.len()).all(|skip| {
        let cols: Vec<usize> = s.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &c)| c).collect();
        b.select_columns(&cols).rank() == cols.len()
    })
}

/// Minimal-support test for `z` in degree `i` (standard coordinates).
///
/// `z` must be nonzero and lie in the image of `d_{i+1}`; with `alpha` the
/// image is taken inside the degree-`alpha` strand. Then no nonzero cycle may
/// have support strictly inside `supp(z)`. Degree 0 uses the augmentation,
/// so cycles there are the vectors with coordinate sum zero.
pub fn is_minimal_support_at(
    z: &[u32],
    complex: &FpChainComplex,
    i: usize,
    basis: &BasedBasis,
    alpha: Option<&Multidegree>,
) -> bool {
    if z.iter().all(|&v| v == 0) {
        return false;
    }
    let Some(next) = complex.differential(i + 1) else { return false };
    let cols: Vec<usize> = match alpha {
        Some(a) => complex.cells[i + 1]
            .iter()
            .enumerate()
            .filter(|(_, c)| c.mdeg.as_ref().is_none_or(|m| m.divides(a)))
            .map(|(k, _)| k)
            .collect(),
        None => (0..next.ncols()).collect(),
    };
    if next.select_columns(&cols).solve(z).is_none() {
        return false;
    }
    let s = support_positions(z, basis, i);
    let b = basis.boundary_in_basis(complex, i).expect("degree in range");
    no_smaller_kernel_support(&b, &s)
}

pub fn is_minimal_support(z: &[u32], complex: &FpChainComplex, i: usize, basis: &BasedBasis) -> bool {
    is_minimal_support_at(z, complex, i, basis, None)
}

pub fn incidence_poset_of_based_complex(
    complex: &FpChainComplex,
    basis: &BasedBasis,
) -> Result<LabeledPoset, CwError> {
    Ok(chain_incidence_poset(&basis.rebase_chain(complex)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub stage2: bool,
    pub bound: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { stage2: false, bound: DEFAULT_SEARCH_BOUND }
    }
}

/// How the basis elements of one degree `alpha` in frame `degree` were found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchRecord {
    pub degree: usize,
    pub mdeg: Multidegree,
    /// 1 for same-degree combinations, 2 when lower degrees were needed.
    pub stage: u8,
    pub kept_standard: bool,
    pub candidates: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisSearch {
    pub basis: BasedBasis,
    pub provenance: Vec<SearchRecord>,
}

/// Homogeneous basis whose boundaries all have minimal support.
///
/// Degrees 0, 1 and 2 keep the standard basis. From degree 3 on, each
/// multidegree `alpha` of the frame is handled separately: candidate vectors
/// are enumerated by support size, then support positions, then coefficients
/// (first nonzero coefficient 1), and accepted greedily when their boundary
/// has minimal support and their same-degree part is independent of earlier
/// picks. Stage 1 uses only generators of degree `alpha`; stage 2, when
/// enabled, also mixes in generators of strictly smaller degree. Accepted
/// standard vectors keep their position and the others fill the remaining
/// positions of the group in order.
pub fn find_minimal_support_basis(
    res: &GradedFreeComplex,
    opts: &SearchOptions,
) -> Result<BasisSearch, CwError> {
    let chain = graded_chain_complex(res);
    let mut basis = BasedBasis::standard(&chain);
    let mut provenance = Vec::new();
    let p = res.prime();
    for i in 3..chain.cells.len() {
        let prev = basis.boundary_in_basis(&chain, i - 1).expect("i - 1 >= 2");
        let to_prev = basis.inverse_matrix(i - 1).mul(&chain.differential(i).expect("i >= 1")).expect("shapes");
        let cells = &chain.cells[i];
        let mut groups: BTreeMap<Multidegree, Vec<usize>> = BTreeMap::new();
        for (k, c) in cells.iter().enumerate() {
            groups.entry(c.mdeg.clone().expect("graded")).or_default().push(k);
        }
        for (alpha, group) in &groups {
            let lower: Vec<usize> = (0..cells.len())
                .filter(|&k| cells[k].mdeg.as_ref().expect("graded").strictly_divides(alpha))
                .collect();
            let mut s = GroupSearch {
                p,
                n: cells.len(),
                group,
                prev: &prev,
                to_prev: &to_prev,
                picked: Vec::new(),
                count: 0,
                bound: opts.bound,
            };
            let exhausted = |stage2| CwError::SearchExhausted {
                degree: i,
                mdeg: alpha.clone(),
                bound: opts.bound,
                stage2,
            };
            let mut stage = 1;
            match s.run(group, None) {
                Some(true) => {}
                Some(false) if opts.stage2 => {
                    stage = 2;
                    let mut coords: Vec<usize> = lower.iter().chain(group.iter()).copied().collect();
                    coords.sort_unstable();
                    if s.run(&coords, Some(&lower)) != Some(true) {
                        return Err(exhausted(true));
                    }
                }
                _ => return Err(exhausted(false)),
            }
            let picked = std::mem::take(&mut s.picked);
            let kept_standard = picked.iter().enumerate().all(|(k, v)| is_unit_at(v, group[k]));
            place(&mut basis.degrees[i], group, picked, alpha);
            provenance.push(SearchRecord {
                degree: i,
                mdeg: alpha.clone(),
                stage,
                kept_standard,
                candidates: s.count,
            });
        }
    }
    Ok(BasisSearch { basis, provenance })
}

fn is_unit_at(v: &[u32], k: usize) -> bool {
    v.iter().enumerate().all(|(j, &x)| x == u32::from(j == k))
}

fn unit_position(v: &[u32]) -> Option<usize> {
    let nz: Vec<usize> = v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, _)| j).collect();
    (nz.len() == 1 && v[nz[0]] == 1).then(|| nz[0])
}

fn place(elems: &mut [BasisElement], group: &[usize], picked: Vec<FpVector>, alpha: &Multidegree) {
    let mut free: BTreeSet<usize> = group.iter().copied().collect();
    let mut rest = Vec::new();
    for v in picked {
        match unit_position(&v) {
            Some(k) if free.remove(&k) => elems[k].coords = v,
            _ => rest.push(v),
        }
    }
    for (k, v) in free.into_iter().zip(rest) {
        elems[k].coords = v;
        elems[k].mdeg = Some(alpha.clone());
    }
}

struct GroupSearch<'a> {
    p: Prime,
    n: usize,
    group: &'a [usize],
    prev: &'a FpMatrix,
    to_prev: &'a FpMatrix,
    picked: Vec<FpVector>,
    count: usize,
    bound: usize,
}

impl GroupSearch<'_> {
    /// Enumerates vectors on `coords`; with `lower`, only vectors touching
    /// both the group and `lower` are new. Returns whether the group is full,
    /// or `None` once the bound is passed.
    fn run(&mut self, coords: &[usize], lower: Option<&[usize]>) -> Option<bool> {
        let p = self.p.get();
        for size in 1..=coords.len() {
            for support in coords.iter().copied().combinations(size) {
                if let Some(lower) = lower {
                    let touches_lower = support.iter().any(|k| lower.contains(k));
                    let touches_group = support.iter().any(|k| self.group.contains(k));
                    if !touches_lower || !touches_group {
                        continue;
                    }
                }
                let tails: Box<dyn Iterator<Item = Vec<u32>>> = if size == 1 {
                    Box::new(std::iter::once(Vec::new()))
                } else {
                    Box::new((0..size - 1).map(|_| 1..p).multi_cartesian_product())
                };
                for tail in tails {
                    self.count += 1;
                    if self.count > self.bound {
                        return None;
                    }
                    let mut v = vec![0u32; self.n];
                    v[support[0]] = 1;
                    for (k, &c) in support[1..].iter().zip(&tail) {
                        v[*k] = c;
                    }
                    if self.accept(&v) {
                        self.picked.push(v);
                        if self.picked.len() == self.group.len() {
                            return Some(true);
                        }
                    }
                }
            }
        }
        Some(false)
    }

    fn accept(&self, v: &[u32]) -> bool {
        let project = |w: &[u32]| -> FpVector { self.group.iter().map(|&k| w[k]).collect() };
        let mut cols: Vec<FpVector> = self.picked.iter().map(|w| project(w)).collect();
        cols.push(project(v));
        if FpMatrix::from_columns(self.p, self.group.len(), &cols).rank() != cols.len() {
            return false;
        }
        let c = self.to_prev.mul_vec(v);
        let s: Vec<usize> = c.iter().enumerate().filter(|(_, &x)| x != 0).map(|(k, _)| k).collect();
        !s.is_empty() && no_smaller_kernel_support(self.prev, &s)
    }
}

/// Outcome of [`check_poset_support`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PosetSupportVerdict {
    pub poset_supports: bool,
    pub poset: LabeledPoset,
    pub deg_morphism: bool,
    pub minimal_support: bool,
    pub homogeneous: bool,
    /// Ids of basis elements whose boundary fails the minimal-support test.
    pub failures: Vec<String>,
}

/// Checks that `basis` is a homogeneous basis of the minimal resolution
/// `res` in which every boundary has minimal support, and builds its
/// incidence poset. Under those hypotheses the poset, labeled by degrees,
/// supports `res`; the verdict certifies the hypotheses only.
pub fn check_poset_support(res: &GradedFreeComplex, basis: &BasedBasis) -> Result<PosetSupportVerdict, CwError> {
    let ideal = res.ideal()?;
    if !res.is_minimal() || !res.is_exact(&ideal) {
        return Err(CwError::NotMinimalResolution);
    }
    let chain = graded_chain_complex(res);
    let homogeneous = basis.is_homogeneous_for(&chain);
    let poset = incidence_poset_of_based_complex(&chain, basis)?;
    let mut failures = Vec::new();
    for i in 1..chain.cells.len() {
        let d = chain.differential(i).expect("in range");
        for e in basis.degree(i) {
            let z = d.mul_vec(&e.coords);
            if !is_minimal_support_at(&z, &chain, i - 1, basis, e.mdeg.as_ref()) {
                failures.push(e.id.clone());
            }
        }
    }
    let minimal_support = failures.is_empty();
    let deg_morphism = poset.degrees_order_preserving();
    Ok(PosetSupportVerdict {
        poset_supports: homogeneous && minimal_support && deg_morphism,
        poset,
        deg_morphism,
        minimal_support,
        homogeneous,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cwposet::cw::cellular_chain_complex;
    use crate::cwposet::{face_poset, CWChainData, Cell};
    use crate::exactlin::IntMatrix;
    use crate::cwposet::shapes::*;
    use crate::monoid::parse_ideal_infer;
    use crate::rescomplex::taylor_complex;

    fn p(n: u32) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn support_basics() {
        let c = cellular_chain_complex(&hollow_triangle(None), p(3));
        let b = BasedBasis::standard(&c);
        assert!(support(&[0, 0, 0], &b, 1).is_empty());
        assert_eq!(support(&[0, 1, 0], &b, 1), BTreeSet::from(["{0,2}".to_string()]));
        assert_eq!(support(&[1, 1, 0], &b, 0).len(), 2);
    }

    #[test]
    fn zero_is_never_minimal() {
        let c = cellular_chain_complex(&simplex(2, None), p(2));
        let b = BasedBasis::standard(&c);
        assert!(!is_minimal_support(&[0, 0, 0], &c, 1, &b));
    }

    #[test]
    fn solid_triangle_boundary_is_minimal() {
        let c = cellular_chain_complex(&simplex(2, None), p(3));
        let b = BasedBasis::standard(&c);
        let z = c.differentials[1].column(0);
        assert!(is_minimal_support(&z, &c, 1, &b));
    }

    #[test]
    fn sum_of_two_triangle_boundaries_is_not_minimal() {
        let x = simplicial_cw(&[vec![0, 1, 2], vec![3, 4, 5]], None);
        let c = cellular_chain_complex(&x, p(3));
        let b = BasedBasis::standard(&c);
        let d2 = &c.differentials[1];
        let z: Vec<u32> = d2.column(0).iter().zip(d2.column(1)).map(|(a, b)| (a + b) % 3).collect();
        assert!(!is_minimal_support(&z, &c, 1, &b));
        assert!(is_minimal_support(&d2.column(1), &c, 1, &b));
    }

    #[test]
    fn standard_basis_poset_is_face_poset() {
        for x in [hollow_triangle(None), solid_square(), double_disk()] {
            let c = cellular_chain_complex(&x, p(2));
            let b = BasedBasis::standard(&c);
            assert_eq!(incidence_poset_of_based_complex(&c, &b).unwrap(), face_poset(&x, p(2)));
        }
    }

    #[test]
    fn basis_change_kills_a_cover() {
        // edges e0 = v0 -> v1 and e1 = v0 -> v2; over GF(3) the element
        // e0 - e1 has boundary v1 - v2, so v0 is no longer below it
        let x = simplicial_cw(&[vec![0, 1], vec![0, 2]], None);
        let c = cellular_chain_complex(&x, p(3));
        let std = BasedBasis::standard(&c);
        let mut degrees = std.degrees().to_vec();
        degrees[1][0].coords = vec![1, 2];
        let changed = BasedBasis::new(p(3), degrees).unwrap();
        let before = incidence_poset_of_based_complex(&c, &std).unwrap();
        let after = incidence_poset_of_based_complex(&c, &changed).unwrap();
        assert_eq!(before.covers().len(), 4);
        assert_eq!(after.covers().len(), 4);
        assert!(after.covers().contains(&(2, 3)));
        assert!(!after.covers().contains(&(0, 3)));
    }

    #[test]
    fn zero_differential_gives_antichain_by_rank() {
        let cells = vec![vec![Cell::new("a", None), Cell::new("b", None)], vec![Cell::new("e", None)]];
        let x = CWChainData::new(cells, vec![IntMatrix::zeros(2, 1)]).unwrap();
        let c = cellular_chain_complex(&x, p(2));
        let poset = incidence_poset_of_based_complex(&c, &BasedBasis::standard(&c)).unwrap();
        assert!(poset.covers().is_empty());
        assert_eq!(poset.elements().iter().map(|e| e.rank).collect::<Vec<_>>(), vec![0, 0, 1]);
    }

    #[test]
    fn low_dimensional_complexes_keep_standard_basis() {
        let ideal = parse_ideal_infer("x, y, z").unwrap();
        let res = taylor_complex(&ideal, p(2));
        let found = find_minimal_support_basis(&res, &SearchOptions::default()).unwrap();
        assert!(found.basis.is_standard());
        assert!(found.provenance.is_empty());
    }

    #[test]
    fn koszul_in_three_variables_satisfies_poset_support() {
        let ideal = parse_ideal_infer("x, y, z").unwrap();
        let res = taylor_complex(&ideal, p(5));
        let chain = graded_chain_complex(&res);
        let v = check_poset_support(&res, &BasedBasis::standard(&chain)).unwrap();
        assert!(v.poset_supports && v.minimal_support && v.deg_morphism && v.homogeneous);
        assert_eq!(v.poset.len(), 7);
    }

    #[test]
    fn redundant_combination_breaks_minimal_support() {
        let ideal = parse_ideal_infer("x, y, z").unwrap();
        let res = taylor_complex(&ideal, p(3));
        let chain = graded_chain_complex(&res);
        // {0,1} + {0,2} has boundary -2{0} + {1} + {2}, which contains the
        // smaller cycle {1} - {2} in its support
        let mut degrees = BasedBasis::standard(&chain).degrees().to_vec();
        degrees[1][0].coords = vec![1, 1, 0];
        let b = BasedBasis::new(p(3), degrees).unwrap();
        let v = check_poset_support(&res, &b).unwrap();
        assert!(!v.minimal_support);
        assert!(!v.poset_supports);
        assert_eq!(v.failures, vec!["{0,1}".to_string()]);
    }

    #[test]
    fn length_zero_resolution_is_vacuous() {
        let ideal = parse_ideal_infer("x*y").unwrap();
        let res = taylor_complex(&ideal, p(2));
        let chain = graded_chain_complex(&res);
        let v = check_poset_support(&res, &BasedBasis::standard(&chain)).unwrap();
        assert!(v.poset_supports);
        assert_eq!(v.poset.len(), 1);
    }

    #[test]
    fn non_minimal_resolution_is_rejected() {
        let ideal = parse_ideal_infer("x*y, y*z, x*z").unwrap();
        let res = taylor_complex(&ideal, p(2));
        let chain = graded_chain_complex(&res);
        assert_eq!(
            check_poset_support(&res, &BasedBasis::standard(&chain)).unwrap_err(),
            CwError::NotMinimalResolution
        );
    }

    #[test]
    fn dependent_vectors_rejected() {
        let e = |id: &str, coords: Vec<u32>| BasisElement { id: id.into(), mdeg: None, coords };
        let r = BasedBasis::new(p(2), vec![vec![e("a", vec![1, 1]), e("b", vec![1, 1])]]);
        assert!(matches!(r, Err(CwError::Basis(_))));
    }
}
