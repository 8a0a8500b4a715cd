//! Canonical labeling by minimal breadth-first code.
//!
//! For a connected graph every breadth-first labeling (root gets label 0,
//! unlabeled neighbors of the vertex with label `t` receive the next labels
//! when `t` is processed) yields a code: the sequence of sorted neighbor-label
//! rows. The lexicographically least code over all such labelings is an
//! isomorphism invariant that determines the graph. Roots and sibling orders
//! are restricted by a color refinement, which keeps the search small without
//! affecting canonicity since the refinement itself is invariant.

use std::cmp::Ordering;

use super::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    edges: Vec<(u32, u32)>,
}

impl CanonicalForm {
    pub fn graph(&self) -> Graph {
        Graph::from_edges_unchecked(
            self.n,
            self.edges.iter().map(|&(a, b)| (a as usize, b as usize)),
        )
    }
}

/// Stable color refinement starting from degrees. Colors are numbered by the
/// sorted order of their signatures, so the result is invariant.
fn refine_colors(g: &Graph, verts: &[Vertex]) -> Vec<u32> {
    let mut color = vec![0u32; g.n()];
    for &v in verts {
        color[v] = g.degree(v) as u32;
    }
    let mut classes = 0;
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, Vertex)> = verts
            .iter()
            .map(|&v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb, v)
            })
            .collect();
        sigs.sort();
        let mut next = 0u32;
        for i in 0..sigs.len() {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                next += 1;
            }
            color[sigs[i].2] = next;
        }
        let count = if sigs.is_empty() { 0 } else { next as usize + 1 };
        if count == classes {
            return color;
        }
        classes = count;
    }
}

struct MinCode<'a> {
    g: &'a Graph,
    color: &'a [u32],
    label: Vec<u32>,
    order: Vec<Vertex>,
    rows: Vec<Vec<u32>>,
    best: Option<(Vec<Vec<u32>>, Vec<Vertex>)>,
    size: usize,
}

impl MinCode<'_> {
    /// Returns true when `best` was replaced somewhere below this call.
    fn step(&mut self, t: usize, next: u32, mut tracking: bool) -> bool {
        if t == self.size {
            self.best = Some((self.rows.clone(), self.order.clone()));
            return true;
        }
        let x = self.order[t];
        let mut fresh: Vec<Vertex> = self
            .g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&y| self.label[y] == u32::MAX)
            .collect();
        fresh.sort_by_key(|&y| self.color[y]);

        let mut row: Vec<u32> = self
            .g
            .neighbors(x)
            .iter()
            .filter(|&&y| self.label[y] != u32::MAX)
            .map(|&y| self.label[y])
            .chain(next..next + fresh.len() as u32)
            .collect();
        row.sort_unstable();

        if tracking {
            if let Some((best_rows, _)) = &self.best {
                match row.cmp(&best_rows[t]) {
                    Ordering::Greater => return false,
                    Ordering::Less => tracking = false,
                    Ordering::Equal => {}
                }
            } else {
                tracking = false;
            }
        }

        self.rows.push(row);
        let mut replaced = false;
        let mut perm = fresh.clone();
        loop {
            for (i, &y) in perm.iter().enumerate() {
                self.label[y] = next + i as u32;
                self.order.push(y);
            }
            if self.step(t + 1, next + perm.len() as u32, tracking) {
                replaced = true;
                tracking = true;
            }
            for &y in &perm {
                self.label[y] = u32::MAX;
                self.order.pop();
            }
            if !next_permutation_within_colors(&mut perm, self.color) {
                break;
            }
        }
        self.rows.pop();
        replaced
    }
}

/// Advances `perm` to the next arrangement that permutes only inside runs of
/// equal color; returns false after the last one. Runs must be contiguous and
/// each run is enumerated in lexicographic order of vertex ids.
fn next_permutation_within_colors(perm: &mut [Vertex], color: &[u32]) -> bool {
    let mut runs = Vec::new();
    let mut start = 0;
    for i in 1..=perm.len() {
        if i == perm.len() || color[perm[i]] != color[perm[start]] {
            runs.push(start..i);
            start = i;
        }
    }
    // Odometer over runs, last run varies fastest.
    for r in runs.into_iter().rev() {
        if next_permutation(&mut perm[r.clone()]) {
            return true;
        }
        // `next_permutation` wrapped the run back to sorted order.
    }
    false
}

fn next_permutation(s: &mut [Vertex]) -> bool {
    if s.len() < 2 {
        return false;
    }
    let mut i = s.len() - 1;
    while i > 0 && s[i - 1] >= s[i] {
        i -= 1;
    }
    if i == 0 {
        s.reverse();
        return false;
    }
    let mut j = s.len() - 1;
    while s[j] <= s[i - 1] {
        j -= 1;
    }
    s.swap(i - 1, j);
    s[i..].reverse();
    true
}

/// Minimal code and the corresponding vertex order of one connected component.
fn component_code(g: &Graph, comp: &[Vertex]) -> (Vec<Vec<u32>>, Vec<Vertex>) {
    let color = refine_colors(g, comp);
    // Root class: the smallest color class, ties broken by color value.
    let mut counts = std::collections::BTreeMap::<u32, usize>::new();
    for &v in comp {
        *counts.entry(color[v]).or_default() += 1;
    }
    let (&root_color, _) = counts
        .iter()
        .min_by_key(|&(&c, &k)| (k, c))
        .expect("component is non-empty");

    let mut search = MinCode {
        g,
        color: &color,
        label: vec![u32::MAX; g.n()],
        order: Vec::with_capacity(comp.len()),
        rows: Vec::with_capacity(comp.len()),
        best: None,
        size: comp.len(),
    };
    for &r in comp.iter().filter(|&&v| color[v] == root_color) {
        search.label[r] = 0;
        search.order.push(r);
        search.step(0, 1, true);
        search.order.pop();
        search.label[r] = u32::MAX;
    }
    search.best.expect("at least one root")
}

/// Canonical relabeling `old -> new`. Components are laid out consecutively,
/// ordered by (size, code).
pub fn canonical_labeling(g: &Graph) -> Vec<Vertex> {
    let mut codes: Vec<(usize, Vec<Vec<u32>>, Vec<Vertex>)> = g
        .components()
        .into_iter()
        .map(|comp| {
            let (rows, order) = component_code(g, &comp);
            (comp.len(), rows, order)
        })
        .collect();
    codes.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let mut perm = vec![0; g.n()];
    let mut base = 0;
    for (size, _, order) in codes {
        for (i, v) in order.into_iter().enumerate() {
            perm[v] = base + i;
        }
        base += size;
    }
    perm
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let perm = canonical_labeling(g);
    let mut edges: Vec<(u32, u32)> = g
        .edges()
        .map(|e| {
            let (a, b) = (perm[e.u] as u32, perm[e.v] as u32);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    CanonicalForm { n: g.n(), edges }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.m() == b.m()
        && {
            let mut da = a.degrees();
            let mut db = b.degrees();
            da.sort_unstable();
            db.sort_unstable();
            da == db
        }
        && canonical_form(a) == canonical_form(b)
}
