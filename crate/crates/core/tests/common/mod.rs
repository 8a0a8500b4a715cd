//! Random inputs and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use liec::graph::{Edge, Graph, Vertex};
use liec::solver::{is_liec, EdgeColoring};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// G(n, p) with vertices `0..n`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// A random tree with maximum degree at most `max_deg`, grown by attaching
/// each new vertex to a uniformly chosen vertex that still has room.
pub fn random_tree(rng: &mut impl Rng, n: usize, max_deg: usize) -> Graph {
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let open: Vec<Vertex> = (0..v).filter(|&u| deg[u] < max_deg).collect();
        let &u = open.choose(rng).unwrap();
        deg[u] += 1;
        deg[v] += 1;
        edges.push((u, v));
    }
    let g = Graph::from_edges(n, edges).unwrap();
    shuffle_labels(rng, &g)
}

pub fn shuffle_labels(rng: &mut impl Rng, g: &Graph) -> Graph {
    let mut perm: Vec<Vertex> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.relabel(&perm).unwrap()
}

/// Every assignment of colors `1..=k` to the edges, checked directly.
pub fn brute_force_k_liec(g: &Graph, k: usize) -> bool {
    let edges: Vec<Edge> = g.edge_vec();
    if edges.is_empty() {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut digits = vec![0usize; edges.len()];
    loop {
        let mut col = EdgeColoring::new(k as u8);
        for (e, &d) in edges.iter().zip(&digits) {
            col.set(*e, d as u8 + 1);
        }
        if is_liec(g, &col) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                return false;
            }
            digits[i] += 1;
            if digits[i] < k {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

pub fn brute_force_chi(g: &Graph, k_max: usize) -> Option<usize> {
    (0..=k_max).find(|&k| brute_force_k_liec(g, k))
}
