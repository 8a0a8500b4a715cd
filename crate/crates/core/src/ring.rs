//! A constructive 3-LIEC of ring permutation graphs.
//!
//! Color 1 is a locally irregular spanning subgraph `S'` built from the
//! inner 2-regular graph `R`, a few spokes and one outer edge. What remains,
//! `T' = G - E(S')`, is a tree (plus isolated vertices) and gets a 2-LIEC in
//! colors 2 and 3 from the tree constructions.
//!
//! Vertex ids follow [`gen_ring_permutation`]: outer vertex `v_{i+1}` is `i`,
//! and the `j`-th vertex (1-based) of inner cycle `c` is `n + offset_c + j - 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{gen_ring_permutation, is_locally_irregular, Edge, RingPermutationSpec, Vertex};
use crate::solver::{is_liec, EdgeColoring};
use crate::trees::{tree_2liec, TreeRule};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpokeSwap {
    pub removed: Edge,
    pub added: Edge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningPlan {
    /// Edges of `S` before the swap and before the outer edge is added.
    pub s: Vec<Edge>,
    pub x1: Vec<Vertex>,
    pub x2: Vec<Vertex>,
    pub x3: Vec<Vertex>,
    /// Outer edge `uv` added to `S`, with `u` the endpoint outside `X3`.
    pub chosen_edge: (Vertex, Vertex),
    pub swap: Option<SpokeSwap>,
}

impl SpanningPlan {
    /// Edge set of `S'`.
    pub fn s_prime(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self.s.clone();
        if let Some(sw) = self.swap {
            out.retain(|&e| e != sw.removed);
            out.push(sw.added);
        }
        out.push(Edge::new(self.chosen_edge.0, self.chosen_edge.1));
        out.sort_unstable();
        out
    }
}

fn inverse(phi: &[usize]) -> Vec<Vertex> {
    let mut inv = vec![0; phi.len()];
    for (i, &r) in phi.iter().enumerate() {
        inv[r] = i;
    }
    inv
}

pub fn build_spanning_plan(spec: &RingPermutationSpec) -> Result<SpanningPlan> {
    spec.validate()?;
    let n = spec.n;
    let inv = inverse(&spec.phi);
    let spoke = |r: usize| Edge::new(inv[r], n + r);
    let mut s = Vec::new();
    let mut spoked = vec![false; n];
    let mut x2 = Vec::new();
    // For each odd cycle: the X2 vertex and the swap it would need.
    let mut odd_swaps = Vec::new();
    for (&o, &l) in spec.offsets().iter().zip(&spec.cycle_lengths) {
        let vx = |j: usize| o + j - 1;
        for j in 1..l {
            s.push(Edge::new(n + vx(j), n + vx(j + 1)));
        }
        if l % 2 == 0 {
            s.push(Edge::new(n + vx(l), n + vx(1)));
        }
        for j in (2..=l).step_by(2) {
            s.push(spoke(vx(j)));
            spoked[inv[vx(j)]] = true;
        }
        if l % 2 == 1 {
            s.push(spoke(vx(l)));
            spoked[inv[vx(l)]] = true;
            x2.push(inv[vx(l)]);
            odd_swaps.push((
                inv[vx(l)],
                SpokeSwap {
                    removed: spoke(vx(l)),
                    added: spoke(vx(1)),
                },
            ));
        }
    }
    s.sort_unstable();
    let x1: Vec<Vertex> = (0..n).filter(|&v| !spoked[v]).collect();
    let x3: Vec<Vertex> = (0..n).filter(|&v| spoked[v] && !x2.contains(&v)).collect();
    x2.sort_unstable();

    let class = |v: Vertex| {
        if !spoked[v] {
            1
        } else if x2.contains(&v) {
            2
        } else {
            3
        }
    };
    let outer_edges = (0..n).map(|i| (i, (i + 1) % n));
    let pick = |want: u8| {
        outer_edges.clone().find_map(|(a, b)| match (class(a), class(b)) {
            (x, 3) if x == want => Some((a, b)),
            (3, x) if x == want => Some((b, a)),
            _ => None,
        })
    };
    let (chosen_edge, swap) = if let Some(e) = pick(1) {
        (e, None)
    } else if let Some(e) = pick(2) {
        let sw = odd_swaps
            .iter()
            .find(|(u, _)| *u == e.0)
            .map(|&(_, sw)| sw)
            .expect("X2 vertex has a swap");
        (e, Some(sw))
    } else {
        return Err(Error::Internal("no outer edge leaves X3".into()));
    };
    let plan = SpanningPlan {
        s,
        x1,
        x2,
        x3,
        chosen_edge,
        swap,
    };
    let g = gen_ring_permutation(spec)?;
    let s_prime = g.spanning_subgraph(plan.s_prime().iter())?;
    if !is_locally_irregular(&s_prime) {
        return Err(Error::Internal("S' is not locally irregular".into()));
    }
    Ok(plan)
}

/// The coloring together with the plan and the tree step that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingColoring {
    pub plan: SpanningPlan,
    pub tree_rule: TreeRule,
    pub coloring: EdgeColoring,
}

pub fn color_ring_permutation_detailed(spec: &RingPermutationSpec) -> Result<RingColoring> {
    let plan = build_spanning_plan(spec)?;
    let g = gen_ring_permutation(spec)?;
    let s_prime = plan.s_prime();
    let rest: Vec<Edge> = g.edges().filter(|e| s_prime.binary_search(e).is_err()).collect();
    let t_full = g.spanning_subgraph(rest.iter())?;
    let keep: Vec<Vertex> = (0..g.n()).filter(|&v| t_full.degree(v) > 0).collect();
    let (t, map) = t_full.induced_subgraph(&keep);
    if !t.is_tree() {
        return Err(Error::Internal("G - E(S') is not a tree".into()));
    }
    let (tree_rule, tree_col) = tree_2liec(&t)
        .map_err(|e| Error::Internal(format!("residual tree has no 2-LIEC construction: {e}")))?;
    let mut coloring = EdgeColoring::new(3);
    for e in &s_prime {
        coloring.set(*e, 1);
    }
    for (e, c) in tree_col.relabel(&map).iter() {
        coloring.set(e, c + 1);
    }
    if !is_liec(&g, &coloring) {
        return Err(Error::Internal("ring coloring failed verification".into()));
    }
    Ok(RingColoring {
        plan,
        tree_rule,
        coloring,
    })
}

/// A 3-LIEC of the ring permutation graph; color 1 is `S'`.
pub fn color_ring_permutation(spec: &RingPermutationSpec) -> Result<EdgeColoring> {
    Ok(color_ring_permutation_detailed(spec)?.coloring)
}

