mod common;

use common::{brute_force_chi, brute_force_k_liec, random_graph, rng};
use liec::graph::*;
use liec::solver::*;
use liec::Error;
use proptest::prelude::*;

/// chi'_irr of `C_n` from first principles: cut the cycle into consecutive
/// segments that are locally irregular paths, then properly color the cyclic
/// sequence of segments (equal neighbors would merge into one longer path).
fn cycle_chi_by_segments(n: usize) -> Option<usize> {
    let path_ok = |len: usize| {
        let g = gen_path(len).unwrap();
        is_locally_irregular(&g)
    };
    let mut best: Option<usize> = None;
    // Cut points are edge boundaries 0..n; at least two cuts make a cyclic sequence.
    for mask in 1u32..1 << n {
        let cuts: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let lens: Vec<usize> = (0..cuts.len())
            .map(|i| (cuts[(i + 1) % cuts.len()] + n - cuts[i] - 1) % n + 1)
            .collect();
        if cuts.len() < 2 || !lens.iter().all(|&l| path_ok(l)) {
            continue;
        }
        let s = lens.len();
        let colors = (1..=s)
            .find(|&k| {
                let mut c = vec![0usize; s];
                loop {
                    if (0..s).all(|i| c[i] != c[(i + 1) % s]) {
                        return true;
                    }
                    let mut i = 0;
                    loop {
                        if i == s {
                            return false;
                        }
                        c[i] += 1;
                        if c[i] < k {
                            break;
                        }
                        c[i] = 0;
                        i += 1;
                    }
                }
            })
            .unwrap();
        best = Some(best.map_or(colors, |b: usize| b.min(colors)));
    }
    best
}

#[test]
fn cycles_match_segment_oracle() {
    for n in 3..=12 {
        let oracle = cycle_chi_by_segments(n);
        assert_eq!(chi_irr(&gen_cycle(n).unwrap(), 4), oracle, "C_{n}");
    }
    assert_eq!(cycle_chi_by_segments(4), Some(2));
    assert_eq!(cycle_chi_by_segments(6), Some(3));
    assert_eq!(cycle_chi_by_segments(8), Some(2));
    assert_eq!(cycle_chi_by_segments(5), None);
}

#[test]
fn c4_against_all_sixteen_colorings() {
    let c4 = gen_cycle(4).unwrap();
    let edges = c4.edge_vec();
    let valid = (0..16u32)
        .filter(|bits| {
            let mut col = EdgeColoring::new(2);
            for (i, e) in edges.iter().enumerate() {
                col.set(*e, 1 + (bits >> i & 1) as u8);
            }
            is_liec(&c4, &col)
        })
        .count();
    assert!(valid > 0);
    assert!(exists_k_liec(&c4, 2).is_some());
    assert!(exists_k_liec(&c4, 1).is_none());
}

#[test]
fn spider_with_legs_one_two_two() {
    // Center 0; legs 0-1, 0-2-3, 0-4-5.
    let g = Graph::from_edges(6, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
    assert!(brute_force_k_liec(&g, 2));
    let col = exists_k_liec(&g, 2).unwrap();
    assert!(verify_liec(&g, &col).unwrap().is_empty());
}

#[test]
fn verifier_rejects_foreign_edges_and_colors() {
    let k3 = gen_complete(3);
    let mut col = EdgeColoring::monochromatic(&k3, 1, 1);
    let violations = verify_liec(&k3, &col).unwrap();
    assert_eq!(violations.len(), 3);
    col.set(Edge::new(0, 1), 2);
    assert!(verify_liec(&k3, &col).is_err());
    let mut foreign = EdgeColoring::monochromatic(&gen_path(2).unwrap(), 1, 1);
    foreign.set(Edge::new(0, 2), 1);
    assert!(verify_liec(&gen_path(2).unwrap(), &foreign).is_err());
}

#[test]
fn coloring_json_round_trip() {
    let g = builtin_named("K33").unwrap();
    let col = exists_k_liec(&g, 3).unwrap();
    let back = EdgeColoring::from_json(&col.to_json()).unwrap();
    assert_eq!(back, col);
    assert!(EdgeColoring::from_json("{\"k\":2,\"edges\":[{\"u\":0,\"v\":0,\"c\":1}]}").is_err());
}

#[test]
fn budget_exhaustion_is_not_a_no() {
    let g = builtin_named("GP_11_2").unwrap();
    match exists_k_liec_budget(&g, 2, Some(10)) {
        Err(Error::BudgetExceeded { .. }) => {}
        other => panic!("expected budget error, got {other:?}"),
    }
    assert!(exists_k_liec_budget(&g, 2, None).unwrap().is_none());
}

#[test]
fn exact_on_small_named_graphs() {
    assert_eq!(chi_irr(&gen_complete(4), 4), brute_force_chi(&gen_complete(4), 4));
    assert_eq!(chi_irr(&builtin_named("K33").unwrap(), 4), brute_force_chi(&builtin_named("K33").unwrap(), 4));
    assert_eq!(chi_irr(&gen_star(3), 3), Some(1));
    assert_eq!(chi_irr(&Graph::empty(4), 3), Some(0));
}

#[test]
fn oracle_matches_brute_force_on_random_graphs() {
    let mut r = rng(11);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut r, 2..=7);
        let g = random_graph(&mut r, n, 0.4);
        if g.m() > 9 {
            continue;
        }
        let brute = brute_force_chi(&g, 3).is_some() || brute_force_k_liec(&g, g.m().max(1));
        assert_eq!(is_decomposable_oracle(&g).unwrap(), brute, "{}", emit_graph6(&g).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn returned_colorings_verify(seed in any::<u64>(), n in 1usize..=10, k in 1usize..=3) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.35);
        if let Some(col) = exists_k_liec(&g, k) {
            prop_assert!(verify_liec(&g, &col).unwrap().is_empty());
            prop_assert!(col.colors_used() as usize <= k);
        }
    }

    #[test]
    fn more_colors_never_hurt(seed in any::<u64>(), n in 1usize..=9, k in 1usize..=3) {
        let g = random_graph(&mut rng(seed), n, 0.4);
        if exists_k_liec(&g, k).is_some() {
            prop_assert!(exists_k_liec(&g, k + 1).is_some());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn search_matches_exhaustive_colorings(seed in any::<u64>(), n in 2usize..=7) {
        let g = random_graph(&mut rng(seed), n, 0.45);
        prop_assume!(g.m() <= 9);
        for k in 1..=3 {
            prop_assert_eq!(exists_k_liec(&g, k).is_some(), brute_force_k_liec(&g, k));
        }
    }
}
