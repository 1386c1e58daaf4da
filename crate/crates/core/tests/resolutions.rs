use proptest::prelude::*;

use cellres::exactlin::Prime;
use cellres::monoid::{MonomialIdeal, Multidegree};
use cellres::rescomplex::{betti_oracle, taylor_complex};

fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=2, n), 1..=4).prop_filter_map("nonzero", move |gens| {
            let gens: Vec<Multidegree> =
                gens.into_iter().filter(|g| g.iter().any(|&e| e > 0)).map(Multidegree::new).collect();
            let vars = (0..n).map(|k| format!("x{k}")).collect();
            MonomialIdeal::new(vars, gens).ok()
        })
    })
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

#[test]
fn koszul_betti_numbers_are_binomial() {
    for n in 1..=4 {
        let vars: Vec<String> = (0..n).map(|k| format!("x{k}")).collect();
        let gens = (0..n).map(|k| Multidegree::new((0..n).map(|j| u32::from(j == k)).collect())).collect();
        let ideal = MonomialIdeal::new(vars, gens).unwrap();
        let res = taylor_complex(&ideal, Prime::new(3).unwrap()).minimize().unwrap();
        assert_eq!(res.betti_table().totals(), (1..=n).map(|k| binomial(n, k)).collect::<Vec<_>>());
    }
}

#[test]
fn taylor_of_a_non_generic_ideal_is_not_minimal() {
    let ideal = cellres::monoid::parse_ideal_infer("x*y, y*z, x*z").unwrap();
    let t = taylor_complex(&ideal, Prime::new(2).unwrap());
    assert!(!t.is_minimal());
    assert_eq!(t.ranks(), vec![3, 3, 1]);
    assert_eq!(t.minimize().unwrap().betti_table().totals(), vec![3, 2]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimized_taylor_matches_lattice_homology(ideal in arb_ideal(), p in prop::sample::select(vec![2u32, 3, 5])) {
        let p = Prime::new(p).unwrap();
        let res = taylor_complex(&ideal, p).minimize().unwrap();
        prop_assert!(res.is_complex());
        prop_assert!(res.is_exact(&ideal));
        prop_assert!(res.is_minimal());
        prop_assert_eq!(res.betti_table(), betti_oracle(&ideal, p));
        prop_assert_eq!(res.frame(0).len(), ideal.generators().len());
    }

    #[test]
    fn resolution_json_round_trips(ideal in arb_ideal()) {
        let res = taylor_complex(&ideal, Prime::new(2).unwrap()).minimize().unwrap();
        let text = serde_json::to_string(&res).unwrap();
        let back: cellres::rescomplex::GradedFreeComplex = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, res);
    }
}
