//! Backtracking search for k-LIECs.
//!
//! Edges are colored in an order that completes vertices as early as
//! possible. Once every edge at a vertex is colored its color degrees are
//! final, which is when the local irregularity condition can be checked. A
//! forward check additionally rejects partial colorings in which some vertex
//! has no way to distribute its remaining edges without clashing with an
//! already completed neighbor. Colors are introduced in first-use order.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

use super::coloring::{is_liec, Color, EdgeColoring};

/// Forward checks enumerate distributions of at most this many open edges.
const LOOKAHEAD_REMAINING: u8 = 3;

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Kernel {
    k: usize,
    ends: Vec<(usize, usize)>,
    inc: Vec<Vec<usize>>,
    color: Vec<u8>,
    /// `d[v * (k + 1) + c]`
    d: Vec<u8>,
    rem: Vec<u8>,
    nodes: u64,
    budget: Option<u64>,
    scratch: Vec<u8>,
}

impl Kernel {
    fn new(n: usize, ends: Vec<(usize, usize)>, k: usize, budget: Option<u64>) -> Kernel {
        let mut inc = vec![Vec::new(); n];
        for (i, &(a, b)) in ends.iter().enumerate() {
            inc[a].push(i);
            inc[b].push(i);
        }
        let rem = inc.iter().map(|l| l.len() as u8).collect();
        Kernel {
            k,
            color: vec![0; ends.len()],
            ends,
            inc,
            d: vec![0; n * (k + 1)],
            rem,
            nodes: 0,
            budget,
            scratch: vec![0; k + 1],
        }
    }

    fn deg(&self, v: usize, c: usize) -> u8 {
        self.d[v * (self.k + 1) + c]
    }

    fn assign(&mut self, i: usize, c: u8) {
        let (a, b) = self.ends[i];
        self.color[i] = c;
        let w = self.k + 1;
        self.d[a * w + c as usize] += 1;
        self.d[b * w + c as usize] += 1;
        self.rem[a] -= 1;
        self.rem[b] -= 1;
    }

    fn unassign(&mut self, i: usize) {
        let (a, b) = self.ends[i];
        let c = self.color[i] as usize;
        self.color[i] = 0;
        let w = self.k + 1;
        self.d[a * w + c] -= 1;
        self.d[b * w + c] -= 1;
        self.rem[a] += 1;
        self.rem[b] += 1;
    }

    /// Local consistency around a completed vertex `x`: every colored edge to
    /// another completed vertex separates color degrees.
    fn complete_ok(&self, x: usize) -> bool {
        self.inc[x].iter().all(|&j| {
            let (a, b) = self.ends[j];
            let y = if a == x { b } else { a };
            let c = self.color[j] as usize;
            self.rem[y] != 0 || self.deg(x, c) != self.deg(y, c)
        })
    }

    /// Can `y` still finish without clashing with completed neighbors?
    fn open_ok(&mut self, y: usize) -> bool {
        let r = self.rem[y];
        if r == 0 || r > LOOKAHEAD_REMAINING {
            return true;
        }
        self.scratch.iter_mut().for_each(|s| *s = 0);
        self.distribute(y, 1, r)
    }

    /// Tries every way to add `left` more edges to colors `c..=k` at `y`.
    fn distribute(&mut self, y: usize, c: usize, left: u8) -> bool {
        if c == self.k {
            self.scratch[c] = left;
            let ok = self.inc[y].iter().all(|&j| {
                let col = self.color[j] as usize;
                if col == 0 {
                    return true;
                }
                let (a, b) = self.ends[j];
                let z = if a == y { b } else { a };
                self.rem[z] != 0 || self.deg(y, col) + self.scratch[col] != self.deg(z, col)
            });
            self.scratch[c] = 0;
            return ok;
        }
        for take in 0..=left {
            self.scratch[c] = take;
            if self.distribute(y, c + 1, left - take) {
                self.scratch[c] = 0;
                return true;
            }
        }
        self.scratch[c] = 0;
        false
    }

    fn consistent(&mut self, i: usize) -> bool {
        let (a, b) = self.ends[i];
        for x in [a, b] {
            if self.rem[x] == 0 {
                if !self.complete_ok(x) {
                    return false;
                }
                for jj in 0..self.inc[x].len() {
                    let j = self.inc[x][jj];
                    let (p, q) = self.ends[j];
                    let y = if p == x { q } else { p };
                    if !self.open_ok(y) {
                        return false;
                    }
                }
            } else if !self.open_ok(x) {
                return false;
            }
        }
        true
    }

    fn run(&mut self, i: usize, used: usize) -> Step {
        if i == self.ends.len() {
            return Step::Found;
        }
        self.nodes += 1;
        if matches!(self.budget, Some(b) if self.nodes > b) {
            return Step::OutOfBudget;
        }
        let top = (used + 1).min(self.k);
        for c in 1..=top {
            self.assign(i, c as u8);
            if self.consistent(i) {
                match self.run(i + 1, used.max(c)) {
                    Step::Exhausted => {}
                    done => return done,
                }
            }
            self.unassign(i);
        }
        Step::Exhausted
    }
}

/// Vertex order by maximum cardinality search from a highest-degree vertex;
/// each vertex's edges to earlier vertices follow it.
fn edge_order(g: &Graph, comp: &[Vertex]) -> Vec<Edge> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(comp.len());
    let start = *comp
        .iter()
        .max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v)))
        .expect("non-empty component");
    let mut next = Some(start);
    while let Some(v) = next {
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            weight[w] += 1;
        }
        next = comp
            .iter()
            .copied()
            .filter(|&w| !placed[w] && weight[w] > 0)
            .max_by_key(|&w| (weight[w], g.degree(w), std::cmp::Reverse(w)));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut edges = Vec::with_capacity(g.m());
    for &v in &order {
        let mut earlier: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] < pos[v])
            .collect();
        earlier.sort_by_key(|&w| pos[w]);
        edges.extend(earlier.into_iter().map(|w| Edge::new(v, w)));
    }
    edges
}

/// Searches one connected component; `nodes` accumulates work across calls.
fn solve_component(
    g: &Graph,
    comp: &[Vertex],
    k: usize,
    budget: Option<u64>,
    nodes: &mut u64,
) -> Result<Option<Vec<(Edge, Color)>>> {
    let edges = edge_order(g, comp);
    if edges.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let ends = edges.iter().map(|e| (e.u, e.v)).collect();
    let remaining = budget.map(|b| b.saturating_sub(*nodes));
    let mut kernel = Kernel::new(g.n(), ends, k, remaining);
    let step = kernel.run(0, 0);
    *nodes += kernel.nodes;
    match step {
        Step::Found => Ok(Some(
            edges.into_iter().zip(kernel.color.iter().copied()).collect(),
        )),
        Step::Exhausted => Ok(None),
        Step::OutOfBudget => Err(Error::BudgetExceeded {
            nodes: budget.unwrap_or(u64::MAX),
        }),
    }
}

/// Exact k-LIEC search with an optional node budget. `Ok(None)` means no
/// k-LIEC exists; running out of budget is an error, never a "no".
pub fn exists_k_liec_budget(
    g: &Graph,
    k: usize,
    budget: Option<u64>,
) -> Result<Option<EdgeColoring>> {
    exists_k_liec_counted(g, k, budget).map(|(c, _)| c)
}

/// As [`exists_k_liec_budget`], also reporting the number of search nodes.
pub fn exists_k_liec_counted(
    g: &Graph,
    k: usize,
    budget: Option<u64>,
) -> Result<(Option<EdgeColoring>, u64)> {
    if k == 0 {
        return Ok(((g.m() == 0).then(|| EdgeColoring::new(0)), 0));
    }
    let k = k.min(g.m().max(1)).min(Color::MAX as usize);
    let mut col = EdgeColoring::new(k as Color);
    let mut nodes = 0;
    for comp in g.components() {
        match solve_component(g, &comp, k, budget, &mut nodes)? {
            Some(part) => part.into_iter().for_each(|(e, c)| col.set(e, c)),
            None => return Ok((None, nodes)),
        }
    }
    assert!(is_liec(g, &col), "search returned an invalid coloring");
    Ok((Some(col), nodes))
}

pub fn exists_k_liec(g: &Graph, k: usize) -> Option<EdgeColoring> {
    exists_k_liec_budget(g, k, None).expect("unbounded search cannot run out of budget")
}

/// Least `k <= k_max` admitting a k-LIEC, with the witness coloring.
pub fn chi_irr_with_witness(
    g: &Graph,
    k_max: usize,
    budget: Option<u64>,
) -> Result<Option<(usize, EdgeColoring)>> {
    for k in 0..=k_max {
        if let Some(col) = exists_k_liec_budget(g, k, budget)? {
            return Ok(Some((k, col)));
        }
    }
    Ok(None)
}

pub fn chi_irr_budget(g: &Graph, k_max: usize, budget: Option<u64>) -> Result<Option<usize>> {
    Ok(chi_irr_with_witness(g, k_max, budget)?.map(|(k, _)| k))
}

pub fn chi_irr(g: &Graph, k_max: usize) -> Option<usize> {
    chi_irr_budget(g, k_max, None).expect("unbounded search cannot run out of budget")
}
