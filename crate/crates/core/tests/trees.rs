mod common;

use common::{brute_force_k_liec, random_tree, rng};
use liec::graph::*;
use liec::solver::{is_liec, verify_liec};
use liec::trees::*;
use rand::Rng;

/// Every pendant odd path ending at a degree-3 vertex, one per leaf.
pub fn all_pendant_odd_paths(t: &Graph) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    for leaf in (0..t.n()).filter(|&u| t.degree(u) == 1) {
        let mut path = vec![leaf];
        let (mut prev, mut cur) = (leaf, t.neighbors(leaf)[0]);
        path.push(cur);
        while t.degree(cur) == 2 {
            let next = *t.neighbors(cur).iter().find(|&&w| w != prev).unwrap();
            prev = cur;
            cur = next;
            path.push(cur);
        }
        if t.degree(cur) == 3 && path.len() % 2 == 0 {
            out.push(path);
        }
    }
    out
}

/// Every maximal odd thread between two degree-3 vertices, in both directions.
pub fn all_odd_threads(t: &Graph) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    for u in (0..t.n()).filter(|&u| t.degree(u) == 3) {
        for &start in t.neighbors(u) {
            let mut thread = Vec::new();
            let (mut prev, mut cur) = (u, start);
            while t.degree(cur) == 2 {
                thread.push(cur);
                let next = *t.neighbors(cur).iter().find(|&&w| w != prev).unwrap();
                prev = cur;
                cur = next;
            }
            if !thread.is_empty() && t.degree(cur) == 3 && thread.len() % 2 == 1 {
                out.push(thread);
            }
        }
    }
    out
}

#[test]
fn shrub_examples() {
    let edge = gen_path(1).unwrap();
    for r in 0..2 {
        let res = shrub_2aliec(&Shrub::new(edge.clone(), r).unwrap());
        assert!(res.almost);
    }
    let p2 = gen_path(2).unwrap();
    let res = shrub_2aliec(&Shrub::new(p2.clone(), 0).unwrap());
    assert!(!res.almost);
    assert_eq!(res.coloring.colors_used(), 1);
    assert!(Shrub::new(p2, 1).is_err());
    assert!(Shrub::new(gen_cycle(4).unwrap(), 0).is_err());
}

#[test]
fn almost_flag_is_exact_on_small_trees() {
    // The search prefers a genuine 2-LIEC, so `almost` means none exists.
    let mut r = rng(3);
    for _ in 0..400 {
        let n = r.gen_range(2..=9);
        let t = random_tree(&mut r, n, 3);
        let leaf = (0..n).find(|&v| t.degree(v) == 1).unwrap();
        let res = shrub_2aliec(&Shrub::new(t.clone(), leaf).unwrap());
        assert_eq!(res.almost, !brute_force_k_liec(&t, 2), "{}", emit_graph6(&t).unwrap());
    }
}

#[test]
fn star_and_spider() {
    let star = gen_star(3);
    let col = tree_2liec_pendant_deg3(&star, 1, 0).unwrap();
    assert!(is_liec(&star, &col));
    let spider = Graph::from_edges(6, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
    let col = tree_2liec_pendant_deg3(&spider, 1, 0).unwrap();
    assert!(verify_liec(&spider, &col).unwrap().is_empty());
    assert!(tree_2liec_pendant_deg3(&spider, 3, 2).is_err());
}

#[test]
fn pendant_path_examples() {
    // Leaf 0, path 0-1-2-3, 3 has two more leaves.
    let t = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap();
    let col = tree_2liec_pendant_oddpath(&t, &[0, 1, 2, 3]).unwrap();
    assert!(is_liec(&t, &col));
    assert_ne!(col.color_of(1, 2), col.color_of(2, 3));
    assert!(tree_2liec_pendant_oddpath(&t, &[0, 1, 2]).is_err());
    assert!(tree_2liec_pendant_oddpath(&gen_path(3).unwrap(), &[0, 1, 2, 3]).is_err());
}

#[test]
fn thread_examples() {
    // Two claws whose centers 0 and 4 are joined through vertex 3.
    let t = Graph::from_edges(8, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6), (6, 7)]).unwrap();
    assert!(brute_force_k_liec(&t, 2));
    let col = tree_2liec_odd_thread(&t, &[3]).unwrap();
    assert!(is_liec(&t, &col));
    assert_ne!(col.color_of(0, 3), col.color_of(3, 4));
    let long = Graph::from_edges(
        10,
        [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (6, 7), (6, 8), (8, 9)],
    )
    .unwrap();
    let col = tree_2liec_odd_thread(&long, &[3, 4, 5]).unwrap();
    assert!(is_liec(&long, &col));
    assert!(tree_2liec_odd_thread(&long, &[3, 4]).is_err());
}

#[test]
fn even_paths_and_dispatch() {
    assert!(even_path_2liec(&Graph::empty(1)).unwrap().is_empty());
    for len in [2, 4, 6] {
        let p = gen_path(len).unwrap();
        assert!(is_liec(&p, &even_path_2liec(&p).unwrap()));
        assert_eq!(tree_2liec(&p).unwrap().0, TreeRule::EvenPath);
    }
    assert!(tree_2liec(&gen_path(3).unwrap()).is_err());
    assert_eq!(tree_2liec(&gen_star(3)).unwrap().0, TreeRule::PendantDegreeThree);
}

#[test]
fn random_shrubs_up_to_fifty() {
    let mut r = rng(17);
    for i in 0..10_000 {
        let n = r.gen_range(2..=50);
        let t = random_tree(&mut r, n, if i % 2 == 0 { 3 } else { 5 });
        let leaves: Vec<Vertex> = (0..n).filter(|&v| t.degree(v) == 1).collect();
        let root = leaves[r.gen_range(0..leaves.len())];
        let s = Shrub::new(t, root).unwrap();
        let res = shrub_2aliec(&s);
        assert!(is_2aliec(&s, &res.coloring));
    }
}

#[test]
fn every_lemma_instance_on_random_trees() {
    let mut r = rng(23);
    let mut hits = [0usize; 3];
    let mut trees = 0;
    while hits.iter().any(|&h| h < 1000) {
        trees += 1;
        let n = r.gen_range(3..=30);
        let max_deg = if trees % 3 == 0 { 4 } else { 3 };
        let t = random_tree(&mut r, n, max_deg);
        let mut found = [false; 3];
        for u in (0..n).filter(|&u| t.degree(u) == 1) {
            let v = t.neighbors(u)[0];
            if t.degree(v) == 3 {
                assert!(is_liec(&t, &tree_2liec_pendant_deg3(&t, u, v).unwrap()));
                found[0] = true;
            }
        }
        for p in all_pendant_odd_paths(&t) {
            assert!(is_liec(&t, &tree_2liec_pendant_oddpath(&t, &p).unwrap()));
            found[1] = true;
        }
        for th in all_odd_threads(&t) {
            assert!(is_liec(&t, &tree_2liec_odd_thread(&t, &th).unwrap()));
            found[2] = true;
        }
        for (h, f) in hits.iter_mut().zip(found) {
            *h += usize::from(f);
        }
        assert!(trees < 200_000, "hypotheses too rare: {hits:?}");
    }
}

#[test]
fn finders_agree_with_exhaustive_lists() {
    let mut r = rng(29);
    for _ in 0..500 {
        let n = r.gen_range(2..=20);
        let t = random_tree(&mut r, n, 3);
        assert_eq!(find_pendant_odd_path(&t).is_some(), !all_pendant_odd_paths(&t).is_empty());
        assert_eq!(find_odd_thread(&t).is_some(), !all_odd_threads(&t).is_empty());
        if let Ok((_, col)) = tree_2liec(&t) {
            assert!(is_liec(&t, &col));
        }
    }
}
