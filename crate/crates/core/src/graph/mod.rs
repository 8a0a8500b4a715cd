//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built: every constructor validates that the
//! edge set is simple, and the per-vertex neighbor lists are kept sorted so
//! that lookups and iteration order are deterministic.

mod canon;
mod generators;
mod io;
mod named;
mod structure;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use generators::*;
pub use io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
pub use named::{builtin_named, BUILTIN_NAMES};
pub use structure::{
    find_diamond_pair, girth, is_bipartite, is_claw_free, is_locally_irregular, DiamondPair,
};

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    /// Builds the canonical orientation of `{a, b}`.
    ///
    /// Panics on a self-loop.
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        assert_ne!(a, b, "self-loop {a}-{a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            debug_assert_eq!(x, self.v);
            self.u
        }
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {a}-{b} has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            adj[a].push(b);
            adj[b].push(a);
            m += 1;
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!(
                    "parallel edge {}-{}",
                    v.min(w[0]),
                    v.max(w[0])
                )));
            }
        }
        Ok(Graph { adj, m })
    }

    /// Like [`Graph::from_edges`], for edge lists produced by this crate's own
    /// constructions where simplicity holds by construction.
    pub(crate) fn from_edges_unchecked<I>(n: usize, edges: I) -> Graph
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Graph::from_edges(n, edges).expect("construction produced a non-simple graph")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n() && b < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges in lexicographic order of `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| Edge { u, v })
        })
    }

    pub fn edge_vec(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|l| l.len() == d)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.m + self.components().len() == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    /// Subgraph induced by `keep`, relabeled densely in increasing order.
    /// Returns the subgraph and the map from new ids to old ids.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut old_to_new = vec![usize::MAX; self.n()];
        let mut new_to_old: Vec<Vertex> = keep.to_vec();
        new_to_old.sort_unstable();
        new_to_old.dedup();
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = i;
        }
        let edges = self
            .edges()
            .filter(|e| old_to_new[e.u] != usize::MAX && old_to_new[e.v] != usize::MAX)
            .map(|e| (old_to_new[e.u], old_to_new[e.v]));
        (
            Graph::from_edges_unchecked(new_to_old.len(), edges),
            new_to_old,
        )
    }

    /// Spanning subgraph on the same vertex set containing only `edges`.
    pub fn spanning_subgraph<'a, I>(&self, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut list = Vec::new();
        for e in edges {
            if !self.has_edge(e.u, e.v) {
                return Err(Error::InvalidGraph(format!("{e} is not an edge of the host")));
            }
            list.push((e.u, e.v));
        }
        Graph::from_edges(self.n(), list)
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidSpec("relabeling is not a permutation".into()));
        }
        Ok(Graph::from_edges_unchecked(
            n,
            self.edges().map(|e| (perm[e.u], perm[e.v])),
        ))
    }

    /// Disjoint union, with `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        Graph::from_edges_unchecked(
            off + other.n(),
            self.edges()
                .map(|e| (e.u, e.v))
                .chain(other.edges().map(|e| (e.u + off, e.v + off))),
        )
    }

    /// Shortest-path distances from `s`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, s: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}
