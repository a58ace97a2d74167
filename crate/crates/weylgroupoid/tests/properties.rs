mod common;

use proptest::prelude::*;

use common::scan_n;
use weylgroupoid::catalog::cartan_bicharacter;
use weylgroupoid::exactnum::{parse_scalar, solve_pow_eq, CycRing};
use weylgroupoid::graph::AdjGraph;
use weylgroupoid::groupoid::{enumerate, Caps};
use weylgroupoid::hamilton::{
    backtrack_search, check_walk, find_circuit, transform, verify, FindOptions, Method, Require,
};
use weylgroupoid::{Bicharacter, CycInteger, CycScalar, Exec, LabeledGraph};

fn poly() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..20, 0..14)
}

fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    (0..a.len().max(b.len()))
        .map(|k| a.get(k).unwrap_or(&0) + b.get(k).unwrap_or(&0))
        .collect()
}

fn scalar() -> impl Strategy<Value = (u32, i64, Vec<i32>)> {
    (1u32..13).prop_flat_map(|m| (Just(m), 0..m as i64, prop::collection::vec(-3i32..4, 2)))
}

/// Rank-2 bicharacter `q_11 = ζ^a p^x`, `q_22 = ζ^b`, `q_12 = ζ^c`, `q_21 = 1`.
fn rank_two() -> impl Strategy<Value = Bicharacter> {
    (2u32..13).prop_flat_map(|m| {
        (Just(m), 0..m as i64, 0..m as i64, 0..m as i64, -1i32..2).prop_map(|(m, a, b, c, x)| {
            let s = |t: i64, e: i32| CycScalar::new(m, t, vec![e]);
            Bicharacter::new(
                m,
                vec!["q".into()],
                vec![vec![s(a, x), s(c, 0)], vec![s(0, 0), s(b, 0)]],
            )
            .unwrap()
        })
    })
}

/// Random graph on `2k` vertices, each label a perfect matching.
fn matchings() -> impl Strategy<Value = AdjGraph> {
    (1usize..5, 2usize..4).prop_flat_map(|(k, rank)| {
        let perm = Just((0..2 * k).collect::<Vec<_>>()).prop_shuffle();
        prop::collection::vec(perm, rank).prop_map(move |perms| {
            let mut g = AdjGraph::new(2 * k, rank);
            for (i, p) in perms.iter().enumerate() {
                for pair in p.chunks(2) {
                    g.connect(pair[0], pair[1], i);
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_ring_laws(m in 1u32..25, a in poly(), b in poly(), c in poly()) {
        let ring = CycRing::get(m);
        let (x, y, z) = (CycInteger::from_poly(&ring, &a), CycInteger::from_poly(&ring, &b), CycInteger::from_poly(&ring, &c));
        prop_assert_eq!(&x * &y, CycInteger::from_poly(&ring, &convolve(&a, &b)));
        prop_assert_eq!(&x + &y, CycInteger::from_poly(&ring, &add(&a, &b)));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &CycInteger::one(&ring), x.clone());
    }

    #[test]
    fn scalar_group_laws(a in scalar(), t in 0i64..50, f in prop::collection::vec(-3i32..4, 2)) {
        let (m, ta, fa) = a;
        let x = CycScalar::new(m, ta, fa);
        let y = CycScalar::new(m, t, f);
        prop_assert!((&x * &x.inv()).is_one());
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(x.pow(3), &(&x * &x) * &x);
        let names = vec!["q".to_string(), "r".to_string()];
        prop_assert_eq!(parse_scalar(&x.to_literal(&names), m, &names).unwrap(), x);
    }

    #[test]
    fn pow_equation_matches_scan(a in scalar(), b in scalar()) {
        let x = CycScalar::new(a.0, a.1, a.2);
        let y = CycScalar::new(a.0, b.1, b.2);
        let brute = (0..=40u64).find(|&k| (&x.pow(k as i64) * &y).is_one());
        prop_assert_eq!(solve_pow_eq(&x, &y, 40), brute);
    }

    #[test]
    fn n_matches_direct_scan(chi in rank_two()) {
        for (i, j) in [(0, 1), (1, 0)] {
            prop_assert_eq!(chi.n_ij(i, j).finite(), scan_n(&chi, i, j, 64));
        }
    }

    #[test]
    fn rank_two_groupoids_are_consistent(chi in rank_two()) {
        let caps = Caps { vertices: 400, objects: 50 };
        if let Ok(g) = enumerate(&chi, caps) {
            prop_assert_eq!(g.vertex_count() % 2, 0);
            let t = g.objects();
            for a in 0..t.len() {
                for i in 0..2 {
                    prop_assert_eq!(t.tau(t.tau(a, i), i), a);
                }
            }
            let r = g.verify_axioms(Exec::Sequential);
            prop_assert!(r.passed(), "{:?}", r.failures);
        }
    }

    #[test]
    fn search_modes_agree(g in matchings()) {
        let seq = backtrack_search(&g, Require::None, u64::MAX, Exec::Sequential);
        let par = backtrack_search(&g, Require::None, u64::MAX, Exec::Parallel);
        prop_assert_eq!(&seq, &par);
        if let weylgroupoid::hamilton::SearchOutcome::Found(w) = seq {
            prop_assert!(check_walk(&g, 0, &w).is_ok());
            prop_assert_eq!(w.len(), g.vertex_count());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rotation_and_reflection_keep_circuits(
        label in prop::sample::select(vec!["A2", "A3", "B3", "G2", "C3"]),
        at in any::<prop::sample::Index>(),
        reflect in any::<bool>(),
    ) {
        let (g, c, _) = find_circuit(&cartan_bicharacter(label).unwrap(), &FindOptions::default()).unwrap();
        let v = at.index(g.vertex_count());
        let moved = transform(&g, &c, v, reflect).unwrap();
        prop_assert!(verify(&g, &moved, Method::File).unwrap().valid);
    }

    #[test]
    fn changed_letter_is_rejected(
        label in prop::sample::select(vec!["A3", "B3", "A2xA1"]),
        at in any::<prop::sample::Index>(),
        shift in 1usize..3,
    ) {
        let (g, mut c, _) = find_circuit(&cartan_bicharacter(label).unwrap(), &FindOptions::default()).unwrap();
        let k = at.index(c.word.len());
        c.word[k] = (c.word[k] + shift) % g.rank();
        let rejected = match verify(&g, &c, Method::File) {
            Ok(r) => !r.valid,
            Err(_) => true,
        };
        prop_assert!(rejected);
    }
}
