mod common;

use cellres::cwposet::shapes::*;
use cellres::cwposet::*;
use cellres::exactlin::{IntMatrix, Prime};
use cellres::monoid::Multidegree;
use common::oracle::brute_minimal_support;
use num_bigint::BigInt;
use proptest::prelude::*;

fn p(n: u32) -> Prime {
    Prime::new(n).unwrap()
}

fn eight_vars() -> Vec<String> {
    (0..8).map(|k| format!("x{k}")).collect()
}

fn check_all_boundaries(res: &cellres::rescomplex::GradedFreeComplex, basis: &BasedBasis) {
    let chain = graded_chain_complex(res);
    for i in 1..chain.cells.len() {
        let d = chain.differential(i).unwrap();
        for e in basis.degree(i) {
            let z = d.mul_vec(&e.coords);
            let fast = is_minimal_support_at(&z, &chain, i - 1, basis, e.mdeg.as_ref());
            assert!(fast, "degree {i} element {}", e.id);
            if let Some(slow) = brute_minimal_support(&z, &chain, i - 1, basis, e.mdeg.as_ref()) {
                assert_eq!(fast, slow, "degree {i} element {}", e.id);
            }
        }
    }
}

#[test]
fn twin_tetrahedra_needs_a_combination_over_gf2() {
    let res = homogenize(&twin_tetrahedra(), p(2), &eight_vars()).unwrap();
    let found = find_minimal_support_basis(&res, &SearchOptions::default()).unwrap();
    let top: Vec<_> = found.basis.degree(3).iter().map(|e| e.coords.clone()).collect();
    assert_eq!(top, vec![vec![1, 1], vec![0, 1]]);
    assert_eq!(found.provenance.len(), 1);
    assert_eq!(found.provenance[0].stage, 1);
    assert!(!found.provenance[0].kept_standard);
    check_all_boundaries(&res, &found.basis);

    // the standard boundary of c0 is not minimal, by both methods
    let chain = graded_chain_complex(&res);
    let std = BasedBasis::standard(&chain);
    let z = chain.differential(3).unwrap().column(0);
    assert!(!is_minimal_support(&z, &chain, 2, &std));
    assert_eq!(brute_minimal_support(&z, &chain, 2, &std, None), Some(false));
}

#[test]
fn twin_tetrahedra_over_gf3_uses_difference() {
    let res = homogenize(&twin_tetrahedra(), p(3), &eight_vars()).unwrap();
    let found = find_minimal_support_basis(&res, &SearchOptions::default()).unwrap();
    let top: Vec<_> = found.basis.degree(3).iter().map(|e| e.coords.clone()).collect();
    assert_eq!(top, vec![vec![1, 2], vec![0, 1]]);
    check_all_boundaries(&res, &found.basis);
}

#[test]
fn search_bound_is_reported() {
    let res = homogenize(&twin_tetrahedra(), p(2), &eight_vars()).unwrap();
    let err = find_minimal_support_basis(&res, &SearchOptions { stage2: false, bound: 2 }).unwrap_err();
    assert_eq!(
        err,
        CwError::SearchExhausted { degree: 3, mdeg: Multidegree::new(vec![1; 8]), bound: 2, stage2: false }
    );
}

#[test]
fn standard_boundary_kept_when_already_minimal() {
    // a lone filled tetrahedron: its 3-cell boundary is already minimal
    let labels: Vec<Multidegree> =
        (0..4).map(|k| Multidegree::new((0..4).map(|j| u32::from(j == k)).collect())).collect();
    let x = simplex(3, Some(&labels));
    let vars: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
    let res = homogenize(&x, p(2), &vars).unwrap();
    let found = find_minimal_support_basis(&res, &SearchOptions::default()).unwrap();
    assert!(found.basis.is_standard());
    assert!(found.provenance.iter().all(|r| r.kept_standard && r.stage == 1));
}

#[test]
fn regular_shapes_have_minimal_standard_boundaries_in_low_degrees() {
    let shapes = [simplex(2, None), simplex(3, None), hollow_triangle(None), solid_square(), twin_tetrahedra()];
    for x in shapes {
        assert!(check_regular_two_skeleton(&x));
        for prime in [2, 3] {
            let c = cellular_chain_complex(&x, p(prime));
            let b = BasedBasis::standard(&c);
            for i in 1..c.cells.len().min(3) {
                let d = c.differential(i).unwrap();
                for k in 0..c.dim_at(i) {
                    let z = d.column(k);
                    let fast = is_minimal_support(&z, &c, i - 1, &b);
                    if let Some(slow) = brute_minimal_support(&z, &c, i - 1, &b, None) {
                        assert_eq!(fast, slow, "cell {k} of degree {i}");
                    }
                    assert!(fast, "cell {k} of degree {i}");
                }
            }
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for slot in 0..=rest.len() {
            let mut v = rest.clone();
            v.insert(slot, n - 1);
            out.push(v);
        }
    }
    out
}

/// Supported iff some pair of permutations of vertices and edges matches all
/// incidences mod p.
fn brute_supported(data: &CWChainData, res: &cellres::rescomplex::GradedFreeComplex) -> bool {
    let p = res.prime();
    let b = data.boundary(1).unwrap().reduce_mod(p);
    let d = res.differential(1).unwrap();
    let (nv, ne) = (data.cells_in_dim(0).len(), data.cells_in_dim(1).len());
    if res.frame(0).len() != nv || res.frame(1).len() != ne {
        return false;
    }
    for pv in permutations(nv) {
        for pe in permutations(ne) {
            let degrees_ok = (0..nv).all(|k| data.cells_in_dim(0)[pv[k]].mdeg.as_ref() == Some(&res.frame(0)[k].mdeg))
                && (0..ne).all(|k| data.cells_in_dim(1)[pe[k]].mdeg.as_ref() == Some(&res.frame(1)[k].mdeg));
            if degrees_ok && (0..nv).all(|r| (0..ne).all(|c| d.get(r, c) == b.get(pv[r], pe[c]))) {
                return true;
            }
        }
    }
    false
}

fn signed_graph(signs: &[i64], perm_v: &[usize], perm_e: &[usize]) -> CWChainData {
    // four edges on four vertices, all with the same degree so that any
    // matching respects degrees
    let ends = [(0usize, 1usize), (1, 2), (2, 3), (0, 3)];
    let deg = Some(Multidegree::new(vec![1]));
    let cells = vec![
        (0..4).map(|k| Cell::new(format!("v{}", perm_v[k]), deg.clone())).collect(),
        (0..4).map(|k| Cell::new(format!("e{}", perm_e[k]), deg.clone())).collect(),
    ];
    let mut b = IntMatrix::zeros(4, 4);
    for (e, &(t, h)) in ends.iter().enumerate() {
        b.set(perm_v[t], perm_e[e], BigInt::from(-signs[e]));
        b.set(perm_v[h], perm_e[e], BigInt::from(signs[e]));
    }
    CWChainData::new(cells, vec![b]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn support_matching_agrees_with_permutation_search(
        signs in proptest::collection::vec(prop_oneof![Just(1i64), Just(-1i64)], 4),
        flip in proptest::collection::vec(prop_oneof![Just(1i64), Just(-1i64)], 4),
        pv in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
        pe in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
        prime in prop_oneof![Just(2u32), Just(3u32)],
    ) {
        let identity: Vec<usize> = (0..4).collect();
        let vars = vec!["t".to_string()];
        let res = homogenize(&signed_graph(&signs, &identity, &identity), p(prime), &vars).unwrap();
        let other: Vec<i64> = signs.iter().zip(&flip).map(|(a, b)| a * b).collect();
        let data = signed_graph(&other, &pv, &pe);
        let fast = check_supports_cw(&data, &res);
        prop_assert_eq!(fast.supported, brute_supported(&data, &res));
        if let Some(eta) = fast.eta {
            let b = data.boundary(1).unwrap().reduce_mod(p(prime));
            let d = res.differential(1).unwrap();
            for r in 0..4 {
                for c in 0..4 {
                    prop_assert_eq!(d.get(r, c), b.get(eta[0][r], eta[1][c]));
                }
            }
        }
    }

    #[test]
    fn minimal_support_agrees_with_enumeration(
        coeffs in proptest::collection::vec(0u32..3, 5),
        prime in prop_oneof![Just(2u32), Just(3u32)],
    ) {
        // degree-1 chains on the square with one face, and on two triangles
        // sharing an edge
        for x in [solid_square(), simplicial_cw(&[vec![0, 1, 2], vec![1, 2, 3]], None)] {
            let c = cellular_chain_complex(&x, p(prime));
            let b = BasedBasis::standard(&c);
            let n = c.dim_at(1);
            let z: Vec<u32> = (0..n).map(|k| coeffs[k % 5] % prime).collect();
            let slow = brute_minimal_support(&z, &c, 1, &b, None).unwrap();
            prop_assert_eq!(is_minimal_support(&z, &c, 1, &b), slow);
        }
    }
}
