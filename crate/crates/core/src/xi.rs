//! Transfer codes for the graphs `XI_n`.
//!
//! `XI_n` splits into `n` blocks on `v_{3i}, u_{3i}, v_{3i+1}, u_{3i+1},
//! v_{3i+2}, u_{3i+2}` with seven internal edges and four half-edges leaving
//! through `v_{3i}, u_{3i}` (left) and `v_{3i+2}, u_{3i+2}` (right). A
//! 2-LIEC of a block is summarized by its code: for each of the four boundary
//! vertices, the half-edge color and the number of edges of that color there.
//! Consecutive blocks fit together when the codes agree across the junction,
//! which turns 2-LIECs of `XI_n` into closed walks of length `n` in a small
//! digraph on codes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Edge;
use crate::solver::EdgeColoring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Hue {
    A,
    B,
}

/// Half-edge color and color degree at one boundary vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slot {
    pub hue: Hue,
    pub mult: u8,
}

impl Slot {
    /// Position in `a3 > a2 > a1 > b1 > b2 > b3`.
    fn rank(self) -> u8 {
        match self.hue {
            Hue::A => 3 + self.mult,
            Hue::B => 4 - self.mult,
        }
    }

    /// Two half-edges glued into one edge: same color, different degree.
    pub fn joins(self, other: Slot) -> bool {
        self.hue == other.hue && self.mult != other.mult
    }
}

impl PartialOrd for Slot {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Slot {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.hue {
            Hue::A => 'a',
            Hue::B => 'b',
        };
        write!(f, "{c}{}", self.mult)
    }
}

/// Slots at `v_{3i}, u_{3i}, v_{3i+2}, u_{3i+2}`, in that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct XiCode(pub [Slot; 4]);

impl XiCode {
    pub fn left(&self) -> [Slot; 2] {
        [self.0[0], self.0[1]]
    }

    pub fn right(&self) -> [Slot; 2] {
        [self.0[2], self.0[3]]
    }

    /// `p >= q` and `r >= s`.
    pub fn is_ordered(&self) -> bool {
        self.0[0] >= self.0[1] && self.0[2] >= self.0[3]
    }

    /// The representative with both pairs sorted in decreasing order.
    pub fn ordered(&self) -> XiCode {
        let [p, q, r, s] = self.0;
        XiCode([p.max(q), p.min(q), r.max(s), r.min(s)])
    }

    /// Can a block with this code be followed by one with code `next`?
    /// Either pairing of the junction half-edges is allowed, since each
    /// pair can be swapped independently by a symmetry of the block.
    pub fn connects_to(&self, next: &XiCode) -> bool {
        let [r, s] = self.right();
        let [p, q] = next.left();
        (r.joins(p) && s.joins(q)) || (r.joins(q) && s.joins(p))
    }

    /// Parses `(a3,a3,a1,b3)`.
    pub fn parse(text: &str) -> Option<XiCode> {
        let inner = text.trim().strip_prefix('(')?.strip_suffix(')')?;
        let slots: Vec<Slot> = inner
            .split(',')
            .map(|t| {
                let t = t.trim().replace('_', "");
                let mut ch = t.chars();
                let hue = match ch.next()? {
                    'a' => Hue::A,
                    'b' => Hue::B,
                    _ => return None,
                };
                let mult: u8 = ch.as_str().parse().ok()?;
                (1..=3).contains(&mult).then_some(Slot { hue, mult })
            })
            .collect::<Option<_>>()?;
        Some(XiCode(slots.try_into().ok()?))
    }
}

impl fmt::Display for XiCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q, r, s] = self.0;
        write!(f, "({p},{q},{r},{s})")
    }
}

/// Local vertex order: `v_{3i}, u_{3i}, v_{3i+1}, u_{3i+1}, v_{3i+2}, u_{3i+2}`.
pub const BLOCK_EDGES: [(usize, usize); 7] = [
    (0, 2),
    (2, 4),
    (1, 3),
    (3, 5),
    (0, 3),
    (2, 1),
    (4, 5),
];

/// Local vertices carrying the half-edges, in code order.
pub const BLOCK_PORTS: [usize; 4] = [0, 1, 4, 5];

/// A 2-LIEC of one block, colors in `{1, 2}` (1 is `a`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockColoring {
    pub internal: [u8; 7],
    pub half: [u8; 4],
}

impl BlockColoring {
    fn from_bits(bits: u32) -> BlockColoring {
        let mut internal = [0; 7];
        let mut half = [0; 4];
        for (i, c) in internal.iter_mut().enumerate() {
            *c = 1 + (bits >> i & 1) as u8;
        }
        for (i, c) in half.iter_mut().enumerate() {
            *c = 1 + (bits >> (7 + i) & 1) as u8;
        }
        BlockColoring { internal, half }
    }

    fn color_degrees(&self) -> [[u8; 3]; 6] {
        let mut d = [[0u8; 3]; 6];
        for (&(x, y), &c) in BLOCK_EDGES.iter().zip(&self.internal) {
            d[x][c as usize] += 1;
            d[y][c as usize] += 1;
        }
        for (&x, &c) in BLOCK_PORTS.iter().zip(&self.half) {
            d[x][c as usize] += 1;
        }
        d
    }

    /// Every internal edge joins vertices of different degree in its color.
    pub fn is_valid(&self) -> bool {
        let d = self.color_degrees();
        BLOCK_EDGES
            .iter()
            .zip(&self.internal)
            .all(|(&(x, y), &c)| d[x][c as usize] != d[y][c as usize])
    }

    pub fn code(&self) -> XiCode {
        let d = self.color_degrees();
        let mut slots = [Slot {
            hue: Hue::A,
            mult: 0,
        }; 4];
        for (i, (&x, &c)) in BLOCK_PORTS.iter().zip(&self.half).enumerate() {
            slots[i] = Slot {
                hue: if c == 1 { Hue::A } else { Hue::B },
                mult: d[x][c as usize],
            };
        }
        XiCode(slots)
    }
}

/// Every valid block coloring, keyed by its (unordered) code; one witness each.
pub fn block_codes() -> BTreeMap<XiCode, BlockColoring> {
    let mut out = BTreeMap::new();
    for bits in 0..1u32 << 11 {
        let b = BlockColoring::from_bits(bits);
        if b.is_valid() {
            out.entry(b.code()).or_insert(b);
        }
    }
    out
}

/// The distinct ordered codes of block 2-LIECs, in decreasing order.
pub fn enumerate_xi_codes() -> Vec<XiCode> {
    let set: BTreeSet<XiCode> = block_codes().keys().map(XiCode::ordered).collect();
    set.into_iter().rev().collect()
}

/// Ordered codes that can actually occur in a 2-LIEC of `XI_n`: those whose
/// left pair is not two equal slots of multiplicity 2. (Equal left slots force
/// the previous block to end in two equal slots, and no code does.)
pub fn usable_xi_codes() -> Vec<XiCode> {
    let two = |s: Slot| s.mult == 2;
    enumerate_xi_codes()
        .into_iter()
        .filter(|c| !(c.0[0] == c.0[1] && two(c.0[0])))
        .collect()
}

/// The code labels `c_1 .. c_16` in their customary order.
pub const CODE_LABELS: [&str; 16] = [
    "(a3,a3,a1,b3)",
    "(a2,b2,b1,b2)",
    "(a2,b2,a2,a1)",
    "(b3,b3,a3,b1)",
    "(a3,b2,a3,b2)",
    "(a2,b1,a2,b3)",
    "(a1,b2,a3,b2)",
    "(a2,b3,a2,b3)",
    "(a2,b1,b2,b3)",
    "(a3,b2,b2,b3)",
    "(a2,b3,a3,a2)",
    "(a1,b2,a3,a2)",
    "(b1,b1,a2,b2)",
    "(a3,b3,a3,a2)",
    "(a3,b3,b2,b3)",
    "(a1,a1,a2,b2)",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDigraph {
    /// `codes[i]` is `c_{i+1}`.
    pub codes: Vec<XiCode>,
    /// `arcs[i]` lists the `j` with an arc `c_{i+1} -> c_{j+1}`.
    pub arcs: Vec<Vec<usize>>,
    /// Strong components, each sorted, ordered by smallest member.
    pub scc: Vec<Vec<usize>>,
}

/// The digraph on the usable codes, labeled `c_1 .. c_16`.
pub fn build_code_digraph() -> CodeDigraph {
    let codes: Vec<XiCode> = CODE_LABELS
        .iter()
        .map(|s| XiCode::parse(s).expect("label parses"))
        .collect();
    let arcs: Vec<Vec<usize>> = codes
        .iter()
        .map(|a| (0..codes.len()).filter(|&j| a.connects_to(&codes[j])).collect())
        .collect();
    let scc = strong_components(&arcs);
    CodeDigraph { codes, arcs, scc }
}

fn strong_components(arcs: &[Vec<usize>]) -> Vec<Vec<usize>> {
    struct Tarjan<'a> {
        arcs: &'a [Vec<usize>],
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        out: Vec<Vec<usize>>,
    }
    impl Tarjan<'_> {
        fn visit(&mut self, v: usize) {
            self.index[v] = Some(self.next);
            self.low[v] = self.next;
            self.next += 1;
            self.stack.push(v);
            self.on_stack[v] = true;
            for &w in &self.arcs[v] {
                match self.index[w] {
                    None => {
                        self.visit(w);
                        self.low[v] = self.low[v].min(self.low[w]);
                    }
                    Some(iw) if self.on_stack[w] => self.low[v] = self.low[v].min(iw),
                    Some(_) => {}
                }
            }
            if Some(self.low[v]) == self.index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = self.stack.pop().expect("v is on the stack");
                    self.on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                self.out.push(comp);
            }
        }
    }
    let n = arcs.len();
    let mut t = Tarjan {
        arcs,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        out: Vec::new(),
    };
    for v in 0..n {
        if t.index[v].is_none() {
            t.visit(v);
        }
    }
    t.out.sort();
    t.out
}

impl CodeDigraph {
    /// Is the underlying undirected graph of the component (arcs inside it
    /// only, loops included) bipartite?
    pub fn component_is_bipartite(&self, comp: &[usize]) -> bool {
        let inside: BTreeSet<usize> = comp.iter().copied().collect();
        let mut side: BTreeMap<usize, bool> = BTreeMap::new();
        for &start in comp {
            if side.contains_key(&start) {
                continue;
            }
            side.insert(start, false);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                let sx = side[&x];
                let nbrs = self.arcs[x]
                    .iter()
                    .copied()
                    .chain((0..self.codes.len()).filter(|&y| self.arcs[y].contains(&x)));
                for y in nbrs.filter(|y| inside.contains(y)) {
                    match side.get(&y) {
                        Some(&sy) if sy == sx => return false,
                        Some(_) => {}
                        None => {
                            side.insert(y, !sx);
                            stack.push(y);
                        }
                    }
                }
            }
        }
        true
    }

    fn matrix(&self) -> Vec<u32> {
        self.arcs
            .iter()
            .map(|row| row.iter().fold(0u32, |m, &j| m | 1 << j))
            .collect()
    }

    /// Is there a closed walk with exactly `len` arcs?
    pub fn has_closed_walk(&self, len: usize) -> bool {
        let k = self.codes.len();
        let mul = |a: &[u32], b: &[u32]| -> Vec<u32> {
            a.iter()
                .map(|&row| {
                    (0..k)
                        .filter(|&j| row >> j & 1 == 1)
                        .fold(0u32, |m, j| m | b[j])
                })
                .collect()
        };
        let mut result: Vec<u32> = (0..k).map(|i| 1u32 << i).collect();
        let mut base = self.matrix();
        let mut e = len;
        while e > 0 {
            if e & 1 == 1 {
                result = mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = mul(&base, &base);
            }
            if result.iter().all(|&r| r == 0) {
                return false;
            }
        }
        (0..k).any(|i| result[i] >> i & 1 == 1)
    }

    /// A closed walk with exactly `len` arcs, as the list of visited codes.
    pub fn closed_walk(&self, len: usize) -> Option<Vec<usize>> {
        let k = self.codes.len();
        let m = self.matrix();
        for start in 0..k {
            // reach[t]: codes reachable from start in t steps.
            let mut reach = vec![1u32 << start];
            for _ in 0..len {
                let cur = *reach.last().expect("nonempty");
                let next = (0..k)
                    .filter(|&i| cur >> i & 1 == 1)
                    .fold(0u32, |acc, i| acc | m[i]);
                reach.push(next);
            }
            if reach[len] >> start & 1 == 0 {
                continue;
            }
            let mut walk = vec![start; len + 1];
            for t in (1..len).rev() {
                let after = walk[t + 1];
                walk[t] = (0..k)
                    .find(|&i| reach[t] >> i & 1 == 1 && m[i] >> after & 1 == 1)
                    .expect("predecessor exists");
            }
            walk.pop();
            return Some(walk);
        }
        None
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph D {\n");
        for (i, c) in self.codes.iter().enumerate() {
            s.push_str(&format!("  c{} [label=\"c{}\\n{}\"];\n", i + 1, i + 1, c));
        }
        for (i, row) in self.arcs.iter().enumerate() {
            for &j in row {
                s.push_str(&format!("  c{} -> c{};\n", i + 1, j + 1));
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let label = |i: usize| format!("c{}", i + 1);
        serde_json::json!({
            "codes": self.codes.iter().enumerate()
                .map(|(i, c)| (label(i), c.to_string()))
                .collect::<BTreeMap<_, _>>(),
            "adjacency": self.arcs.iter().enumerate()
                .map(|(i, row)| (label(i), row.iter().map(|&j| label(j)).collect::<Vec<_>>()))
                .collect::<BTreeMap<_, _>>(),
            "scc": self.scc.iter()
                .map(|c| c.iter().map(|&j| label(j)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Does `XI_n` have a 2-LIEC? Decided on the code digraph.
pub fn xi_two_liec_exists(n: usize) -> bool {
    build_code_digraph().has_closed_walk(n)
}

/// A 2-LIEC of `XI_n` assembled from a closed walk in the code digraph, with
/// the vertex ids of [`crate::graph::gen_xi`].
pub fn xi_two_liec(n: usize) -> Option<EdgeColoring> {
    let d = build_code_digraph();
    let walk = d.closed_walk(n)?;
    let witnesses = block_codes();
    // For each junction after block t, the orientation of block t's right
    // pair and block t+1's left pair that glues.
    let mut right_flip = vec![false; n];
    let mut left_flip = vec![false; n];
    for t in 0..n {
        let a = d.codes[walk[t]];
        let b = d.codes[walk[(t + 1) % n]];
        let [r, s] = a.right();
        let [p, q] = b.left();
        let (rf, lf) = [(false, false), (true, false), (false, true), (true, true)]
            .into_iter()
            .find(|&(rf, lf)| {
                let (r, s) = if rf { (s, r) } else { (r, s) };
                let (p, q) = if lf { (q, p) } else { (p, q) };
                r.joins(p) && s.joins(q)
            })?;
        right_flip[t] = rf;
        left_flip[(t + 1) % n] = lf;
    }
    let len = 3 * n;
    let v = |j: usize| j % len;
    let u = |j: usize| len + j % len;
    let mut col = EdgeColoring::new(2);
    for t in 0..n {
        let [p, q, r, s] = d.codes[walk[t]].0;
        let (p, q) = if left_flip[t] { (q, p) } else { (p, q) };
        let (r, s) = if right_flip[t] { (s, r) } else { (r, s) };
        let block = witnesses.get(&XiCode([p, q, r, s]))?;
        let base = 3 * t;
        let local = [v(base), u(base), v(base + 1), u(base + 1), v(base + 2), u(base + 2)];
        for (&(x, y), &c) in BLOCK_EDGES.iter().zip(&block.internal) {
            col.set(Edge::new(local[x], local[y]), c);
        }
        col.set(Edge::new(v(base + 2), v(base + 3)), block.half[2]);
        col.set(Edge::new(u(base + 2), u(base + 3)), block.half[3]);
    }
    Some(col)
}
