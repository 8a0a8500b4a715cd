//! Structural recognition of the graphs that admit no LIEC at all.
//!
//! A connected graph fails to be decomposable exactly when it is an odd path,
//! an odd cycle, or a member of the recursive triangle family `T`: the
//! triangle, and anything obtained from a member by hanging an appendage on a
//! degree-2 triangle vertex. An appendage is an even path, or an odd path whose
//! far end is glued to a fresh triangle. Membership in `T` is recognized by
//! peeling appendages off until a bare triangle remains.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::enumerate_subcubic_connected;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, emit_graph6, CanonicalForm, Graph, Vertex};
use crate::solver::is_decomposable_oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AppendageShape {
    EvenPath,
    OddPathTriangle,
}

/// One peeled appendage, in the input graph's labels.
///
/// `vertices` lists the appendage's vertices other than `attach`, walking
/// away from it: the path vertices, then (for a triangle appendage) the two
/// remaining triangle vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Peel {
    pub attach: Vertex,
    pub shape: AppendageShape,
    /// Path length in edges, measured from `attach`.
    pub length: usize,
    pub parity: Parity,
    pub vertices: Vec<Vertex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

/// How a member of `T` decomposes: the triangle left at the end, and the
/// appendages in the order they were peeled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyTWitness {
    pub base: [Vertex; 3],
    pub peels: Vec<Peel>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum DecomposabilityVerdict {
    Decomposable,
    OddPath,
    OddCycle,
    FamilyT { witness: FamilyTWitness },
}

impl DecomposabilityVerdict {
    pub fn is_decomposable(&self) -> bool {
        matches!(self, DecomposabilityVerdict::Decomposable)
    }

    pub fn tag(&self) -> &'static str {
        match self {
            DecomposabilityVerdict::Decomposable => "Decomposable",
            DecomposabilityVerdict::OddPath => "OddPath",
            DecomposabilityVerdict::OddCycle => "OddCycle",
            DecomposabilityVerdict::FamilyT { .. } => "FamilyT",
        }
    }
}

/// Classifies a connected graph. Edgeless graphs count as decomposable.
pub fn classify(g: &Graph) -> Result<DecomposabilityVerdict> {
    if !g.is_connected() {
        return Err(Error::Precondition("classification needs a connected graph".into()));
    }
    let m = g.m();
    if g.n() == 3 && m == 3 {
        // The triangle is the odd cycle that also seeds `T`.
        return Ok(DecomposabilityVerdict::FamilyT {
            witness: FamilyTWitness {
                base: [0, 1, 2],
                peels: Vec::new(),
            },
        });
    }
    if g.max_degree() <= 2 && m > 0 {
        let odd = m % 2 == 1;
        return Ok(match (g.is_tree(), odd) {
            (true, true) => DecomposabilityVerdict::OddPath,
            (false, true) => DecomposabilityVerdict::OddCycle,
            _ => DecomposabilityVerdict::Decomposable,
        });
    }
    if g.max_degree() != 3 {
        return Ok(DecomposabilityVerdict::Decomposable);
    }
    let alive = vec![true; g.n()];
    let mut failed = HashSet::new();
    let mut peels = Vec::new();
    Ok(match peel(g, alive, &mut peels, &mut failed) {
        Some(base) => DecomposabilityVerdict::FamilyT {
            witness: FamilyTWitness { base, peels },
        },
        None => DecomposabilityVerdict::Decomposable,
    })
}

/// Degree of `v` counting only live neighbors.
fn live_degree(g: &Graph, alive: &[bool], v: Vertex) -> usize {
    g.neighbors(v).iter().filter(|&&w| alive[w]).count()
}

fn live_neighbors<'a>(g: &'a Graph, alive: &'a [bool], v: Vertex) -> impl Iterator<Item = Vertex> + 'a {
    g.neighbors(v).iter().copied().filter(move |&w| alive[w])
}

/// Appendage hanging from `x` through its neighbor `y`, if the walk from
/// `x` via `y` has one of the two allowed shapes.
fn appendage(g: &Graph, alive: &[bool], x: Vertex, y: Vertex) -> Option<Peel> {
    let mut vertices = vec![y];
    let (mut prev, mut cur) = (x, y);
    while live_degree(g, alive, cur) == 2 {
        let next = live_neighbors(g, alive, cur).find(|&w| w != prev)?;
        if next == x {
            return None;
        }
        prev = cur;
        cur = next;
        vertices.push(cur);
    }
    let length = vertices.len();
    match live_degree(g, alive, cur) {
        1 if length % 2 == 0 => Some(Peel {
            attach: x,
            shape: AppendageShape::EvenPath,
            length,
            parity: Parity::Even,
            vertices,
        }),
        3 if length % 2 == 1 => {
            let others: Vec<Vertex> = live_neighbors(g, alive, cur).filter(|&w| w != prev).collect();
            let (p, q) = (others[0], others[1]);
            let closes = g.has_edge(p, q)
                && live_degree(g, alive, p) == 2
                && live_degree(g, alive, q) == 2;
            closes.then(|| {
                vertices.extend([p, q]);
                Peel {
                    attach: x,
                    shape: AppendageShape::OddPathTriangle,
                    length,
                    parity: Parity::Odd,
                    vertices,
                }
            })
        }
        _ => None,
    }
}

/// Candidate appendages: `x` has live degree 3, its other two neighbors form
/// a triangle with it, and the walk through the third neighbor is an
/// appendage. Ordered by attachment vertex.
fn candidates(g: &Graph, alive: &[bool]) -> Vec<Peel> {
    let mut out = Vec::new();
    for x in (0..g.n()).filter(|&x| alive[x] && live_degree(g, alive, x) == 3) {
        let nb: Vec<Vertex> = live_neighbors(g, alive, x).collect();
        for i in 0..3 {
            let y = nb[i];
            let (a, b) = (nb[(i + 1) % 3], nb[(i + 2) % 3]);
            if g.has_edge(a, b) {
                out.extend(appendage(g, alive, x, y));
            }
        }
    }
    out
}

fn live_form(g: &Graph, alive: &[bool]) -> CanonicalForm {
    let keep: Vec<Vertex> = (0..g.n()).filter(|&v| alive[v]).collect();
    canonical_form(&g.induced_subgraph(&keep).0)
}

/// Peels appendages until a triangle remains; returns the triangle. Failed
/// residual graphs are memoized by canonical form.
fn peel(
    g: &Graph,
    alive: Vec<bool>,
    peels: &mut Vec<Peel>,
    failed: &mut HashSet<CanonicalForm>,
) -> Option<[Vertex; 3]> {
    let live: Vec<Vertex> = (0..g.n()).filter(|&v| alive[v]).collect();
    if live.len() == 3 {
        let [a, b, c] = [live[0], live[1], live[2]];
        return (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)).then_some([a, b, c]);
    }
    let form = live_form(g, &alive);
    if failed.contains(&form) {
        return None;
    }
    for cand in candidates(g, &alive) {
        let mut rest = alive.clone();
        for &v in &cand.vertices {
            rest[v] = false;
        }
        peels.push(cand);
        if let Some(base) = peel(g, rest, peels, failed) {
            return Some(base);
        }
        peels.pop();
    }
    failed.insert(form);
    None
}

/// Rebuilds the graph described by a witness on `n` vertices by attaching
/// the peeled appendages to the base triangle in reverse order. Each attach
/// step is checked against the construction rules.
pub fn replay_witness(n: usize, w: &FamilyTWitness) -> Result<Graph> {
    let [a, b, c] = w.base;
    let mut edges = vec![(a, b), (a, c), (b, c)];
    let mut present = vec![false; n];
    for v in w.base {
        *present.get_mut(v).ok_or_else(|| Error::InvalidSpec(format!("vertex {v} out of range")))? = true;
    }
    for p in w.peels.iter().rev() {
        let partial = Graph::from_edges(n, edges.iter().copied())?;
        let on_triangle = {
            let nb = partial.neighbors(p.attach);
            nb.len() == 2 && partial.has_edge(nb[0], nb[1])
        };
        if !present[p.attach] || !on_triangle {
            return Err(Error::InvalidSpec(format!(
                "vertex {} is not a degree-2 triangle vertex when attaching",
                p.attach
            )));
        }
        let path_len = match p.shape {
            AppendageShape::EvenPath => p.vertices.len(),
            AppendageShape::OddPathTriangle => p.vertices.len().saturating_sub(2),
        };
        let parity_ok = match p.shape {
            AppendageShape::EvenPath => path_len % 2 == 0 && path_len >= 2,
            AppendageShape::OddPathTriangle => path_len % 2 == 1,
        };
        if !parity_ok || path_len != p.length {
            return Err(Error::InvalidSpec("appendage length does not match its shape".into()));
        }
        let mut prev = p.attach;
        for &v in &p.vertices[..path_len] {
            if std::mem::replace(&mut present[v], true) {
                return Err(Error::InvalidSpec(format!("vertex {v} reused")));
            }
            edges.push((prev, v));
            prev = v;
        }
        if p.shape == AppendageShape::OddPathTriangle {
            let (x, y) = (p.vertices[path_len], p.vertices[path_len + 1]);
            for v in [x, y] {
                if std::mem::replace(&mut present[v], true) {
                    return Err(Error::InvalidSpec(format!("vertex {v} reused")));
                }
            }
            edges.extend([(prev, x), (prev, y), (x, y)]);
        }
    }
    Graph::from_edges(n, edges)
}

pub const CLASSIFY_SMALL_MAX_N: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallClassReport {
    pub n_max: usize,
    pub total_graphs: usize,
    pub decomposable: usize,
    pub odd_path: usize,
    pub odd_cycle: usize,
    /// graph6 strings of the members of `T`.
    pub family_t: Vec<String>,
    /// graph6 strings where [`classify`] and the partition oracle disagree.
    pub disagreements: Vec<String>,
}

/// Classifies every connected graph with maximum degree at most 3 on at most
/// `n_max` vertices and compares each verdict with the partition oracle.
pub fn classify_all_small(n_max: usize) -> Result<SmallClassReport> {
    if n_max > CLASSIFY_SMALL_MAX_N {
        return Err(Error::InvalidSpec(format!(
            "classify_all_small supports n_max <= {CLASSIFY_SMALL_MAX_N}, got {n_max}"
        )));
    }
    let graphs = enumerate_subcubic_connected(n_max)?;
    let results: Vec<(DecomposabilityVerdict, bool)> = graphs
        .par_iter()
        .map(|g| Ok((classify(g)?, is_decomposable_oracle(g)?)))
        .collect::<Result<_>>()?;
    let mut report = SmallClassReport {
        n_max,
        total_graphs: graphs.len(),
        decomposable: 0,
        odd_path: 0,
        odd_cycle: 0,
        family_t: Vec::new(),
        disagreements: Vec::new(),
    };
    for (g, (verdict, oracle)) in graphs.iter().zip(results) {
        match verdict {
            DecomposabilityVerdict::Decomposable => report.decomposable += 1,
            DecomposabilityVerdict::OddPath => report.odd_path += 1,
            DecomposabilityVerdict::OddCycle => report.odd_cycle += 1,
            DecomposabilityVerdict::FamilyT { .. } => report.family_t.push(emit_graph6(g)?),
        }
        if verdict.is_decomposable() != oracle {
            report.disagreements.push(emit_graph6(g)?);
        }
    }
    Ok(report)
}
