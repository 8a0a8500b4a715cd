use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};

/// Length of a shortest cycle, or `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            // Any cycle found from here on is at least 2*dist[x] long.
            if 2 * dist[x] >= best {
                break;
            }
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// No edge joins two vertices of equal degree. Edgeless graphs qualify.
pub fn is_locally_irregular(g: &Graph) -> bool {
    g.edges().all(|e| g.degree(e.u) != g.degree(e.v))
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![u8::MAX; g.n()];
    for s in 0..g.n() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if side[y] == u8::MAX {
                    side[y] = 1 - side[x];
                    queue.push_back(y);
                } else if side[y] == side[x] {
                    return false;
                }
            }
        }
    }
    true
}

/// No vertex has three pairwise non-adjacent neighbors (no induced `K_{1,3}`).
pub fn is_claw_free(g: &Graph) -> bool {
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if g.has_edge(nb[i], nb[j]) {
                    continue;
                }
                for &c in &nb[j + 1..] {
                    if !g.has_edge(nb[i], c) && !g.has_edge(nb[j], c) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Two vertex-disjoint diamonds joined by the edge `u[0] v[0]`.
///
/// In each diamond `x[0]` and `x[3]` are the non-adjacent pair; `x[1]` and
/// `x[2]` are adjacent to everything else in the diamond.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiamondPair {
    pub u: [Vertex; 4],
    pub v: [Vertex; 4],
}

impl DiamondPair {
    pub fn vertices(&self) -> [Vertex; 8] {
        let mut out = [0; 8];
        out[..4].copy_from_slice(&self.u);
        out[4..].copy_from_slice(&self.v);
        out
    }
}

/// Diamonds with tip `tip` avoiding `avoid`: `(tip, a, b, far)` with `a b`,
/// `tip a`, `tip b`, `a far`, `b far` all edges.
fn diamonds_at(g: &Graph, tip: Vertex, avoid: &[Vertex]) -> Vec<[Vertex; 4]> {
    let mut out = Vec::new();
    let nb: Vec<Vertex> = g
        .neighbors(tip)
        .iter()
        .copied()
        .filter(|x| !avoid.contains(x))
        .collect();
    for i in 0..nb.len() {
        for j in i + 1..nb.len() {
            let (a, b) = (nb[i], nb[j]);
            if !g.has_edge(a, b) {
                continue;
            }
            for &far in g.neighbors(a) {
                if far != tip && far != b && !avoid.contains(&far) && g.has_edge(b, far) {
                    out.push([tip, a, b, far]);
                }
            }
        }
    }
    out
}

/// Finds two diamonds joined by an edge, as a (not necessarily induced)
/// subgraph. The first witness in edge order is returned.
pub fn find_diamond_pair(g: &Graph) -> Option<DiamondPair> {
    for e in g.edges() {
        for (x, y) in [(e.u, e.v), (e.v, e.u)] {
            for dx in diamonds_at(g, x, &[y]) {
                let mut avoid = dx.to_vec();
                avoid.retain(|&w| w != y);
                for dy in diamonds_at(g, y, &avoid) {
                    if dy.iter().all(|w| !dx.contains(w)) {
                        return Some(DiamondPair { u: dx, v: dy });
                    }
                }
            }
        }
    }
    None
}
