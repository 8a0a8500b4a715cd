use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

/// Colors are `1..=k`.
pub type Color = u8;

/// An assignment of colors `1..=k` to edges.
///
/// The map may be partial while a coloring is being assembled; the verifier
/// insists on totality with respect to the host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ColoringJson", try_from = "ColoringJson")]
pub struct EdgeColoring {
    k: Color,
    colors: BTreeMap<Edge, Color>,
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    k: Color,
    edges: Vec<ColoredEdge>,
}

#[derive(Serialize, Deserialize)]
struct ColoredEdge {
    u: Vertex,
    v: Vertex,
    c: Color,
}

impl From<EdgeColoring> for ColoringJson {
    fn from(col: EdgeColoring) -> Self {
        ColoringJson {
            k: col.k,
            edges: col
                .colors
                .iter()
                .map(|(e, &c)| ColoredEdge { u: e.u, v: e.v, c })
                .collect(),
        }
    }
}

impl TryFrom<ColoringJson> for EdgeColoring {
    type Error = Error;

    fn try_from(j: ColoringJson) -> Result<Self> {
        let mut col = EdgeColoring::new(j.k);
        for ColoredEdge { u, v, c } in j.edges {
            if u == v {
                return Err(Error::InvalidColoring(format!("self-loop {u}-{v}")));
            }
            if col.colors.insert(Edge::new(u, v), c).is_some() {
                return Err(Error::InvalidColoring(format!("edge {u}-{v} listed twice")));
            }
        }
        Ok(col)
    }
}

impl EdgeColoring {
    pub fn new(k: Color) -> EdgeColoring {
        EdgeColoring {
            k,
            colors: BTreeMap::new(),
        }
    }

    /// Colors every edge of `g` with `c`.
    pub fn monochromatic(g: &Graph, k: Color, c: Color) -> EdgeColoring {
        let mut col = EdgeColoring::new(k);
        for e in g.edges() {
            col.set(e, c);
        }
        col
    }

    pub fn k(&self) -> Color {
        self.k
    }

    pub fn set_k(&mut self, k: Color) {
        self.k = k;
    }

    pub fn set(&mut self, e: Edge, c: Color) {
        self.colors.insert(e, c);
    }

    pub fn get(&self, e: Edge) -> Option<Color> {
        self.colors.get(&e).copied()
    }

    pub fn color_of(&self, a: Vertex, b: Vertex) -> Option<Color> {
        self.get(Edge::new(a, b))
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.colors.iter().map(|(&e, &c)| (e, c))
    }

    /// Edges carrying color `c`.
    pub fn class(&self, c: Color) -> Vec<Edge> {
        self.iter().filter(|&(_, x)| x == c).map(|(e, _)| e).collect()
    }

    /// Largest color actually used (0 when empty).
    pub fn colors_used(&self) -> Color {
        self.colors.values().copied().max().unwrap_or(0)
    }

    /// Copies the colors of `other` into `self`, overwriting shared edges.
    pub fn absorb(&mut self, other: &EdgeColoring) {
        for (e, c) in other.iter() {
            self.set(e, c);
        }
    }

    /// Applies `map[c]` to every color `c`.
    pub fn recolor(&mut self, map: impl Fn(Color) -> Color) {
        for c in self.colors.values_mut() {
            *c = map(*c);
        }
    }

    /// Renames vertices through `map` (old id -> new id).
    pub fn relabel(&self, map: &[Vertex]) -> EdgeColoring {
        EdgeColoring {
            k: self.k,
            colors: self
                .iter()
                .map(|(e, c)| (Edge::new(map[e.u], map[e.v]), c))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serializes")
    }

    pub fn from_json(text: &str) -> Result<EdgeColoring> {
        serde_json::from_str(text).map_err(|e| Error::InvalidColoring(e.to_string()))
    }
}

/// Per-vertex, per-color edge counts `d^c(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorDegreeTable {
    k: usize,
    counts: Vec<u32>,
}

impl ColorDegreeTable {
    /// Counts every colored edge of `col`; edges of `col` must lie in `g`
    /// and colors must be in `1..=k`.
    pub fn build(g: &Graph, col: &EdgeColoring) -> Result<ColorDegreeTable> {
        let k = col.k() as usize;
        let mut counts = vec![0u32; g.n() * (k + 1)];
        for (e, c) in col.iter() {
            if !g.has_edge(e.u, e.v) {
                return Err(Error::InvalidColoring(format!("{e} is not an edge of the graph")));
            }
            if c == 0 || c as usize > k {
                return Err(Error::InvalidColoring(format!(
                    "edge {e} has color {c} outside 1..={k}"
                )));
            }
            counts[e.u * (k + 1) + c as usize] += 1;
            counts[e.v * (k + 1) + c as usize] += 1;
        }
        Ok(ColorDegreeTable { k, counts })
    }

    pub fn get(&self, v: Vertex, c: Color) -> u32 {
        self.counts[v * (self.k + 1) + c as usize]
    }
}

/// An edge `uv` of color `c` whose endpoints have the same `c`-degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub u: Vertex,
    pub v: Vertex,
    pub c: Color,
    pub degree: u32,
}

/// Lists every edge whose color class fails local irregularity at it.
///
/// Errors if the coloring is not total on `g`, names a non-edge, or uses a
/// color outside `1..=k`.
pub fn verify_liec(g: &Graph, col: &EdgeColoring) -> Result<Vec<Violation>> {
    let table = ColorDegreeTable::build(g, col)?;
    if col.len() != g.m() {
        let missing = g.edges().find(|&e| col.get(e).is_none());
        return Err(Error::InvalidColoring(match missing {
            Some(e) => format!("edge {e} is uncolored"),
            None => "coloring size does not match the graph".into(),
        }));
    }
    Ok(violations(&table, col))
}

pub(crate) fn violations(table: &ColorDegreeTable, col: &EdgeColoring) -> Vec<Violation> {
    col.iter()
        .filter_map(|(e, c)| {
            let (du, dv) = (table.get(e.u, c), table.get(e.v, c));
            (du == dv).then_some(Violation {
                u: e.u,
                v: e.v,
                c,
                degree: du,
            })
        })
        .collect()
}

/// Convenience: a total coloring with no violations.
pub fn is_liec(g: &Graph, col: &EdgeColoring) -> bool {
    matches!(verify_liec(g, col), Ok(v) if v.is_empty())
}
