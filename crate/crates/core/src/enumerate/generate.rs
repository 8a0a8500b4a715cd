//! Orderly generation of connected graphs with maximum degree 3.
//!
//! Graphs are built directly in breadth-first labeled form: vertex 0 is the
//! root, and processing vertex `t` fixes all of its remaining edges, either to
//! already labeled vertices `j > t` or to brand new vertices that take the
//! next free labels. Every breadth-first labeling of every connected graph is
//! reachable this way exactly once. A labeling is emitted only if its code
//! (the sorted neighbor rows in label order) is the least among all
//! breadth-first labelings of the graph, so each isomorphism class appears
//! once. Partial labelings are discarded as soon as some other labeling,
//! determined entirely by the finished rows, already has a smaller prefix.

use std::ops::ControlFlow;

use crate::graph::Graph;

pub(crate) const MAX_DEG: usize = 3;
const NONE: u8 = u8::MAX;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Params {
    pub n: usize,
    /// Every vertex has degree exactly 3.
    pub cubic: bool,
    pub girth_min: usize,
}

#[derive(Clone)]
pub(crate) struct State {
    adj: Vec<[u8; MAX_DEG]>,
    deg: Vec<u8>,
    labeled: usize,
    /// Vertices `0..processed` have all their edges.
    processed: usize,
}

impl State {
    fn root(n: usize) -> State {
        State {
            adj: vec![[NONE; MAX_DEG]; n],
            deg: vec![0; n],
            labeled: 1,
            processed: 0,
        }
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a][self.deg[a] as usize] = b as u8;
        self.deg[a] += 1;
        self.adj[b][self.deg[b] as usize] = a as u8;
        self.deg[b] += 1;
    }

    fn remove_edge(&mut self, a: usize, b: usize) {
        for (x, y) in [(a, b), (b, a)] {
            let d = self.deg[x] as usize;
            let pos = self.adj[x][..d].iter().position(|&w| w as usize == y).unwrap();
            self.adj[x][pos] = self.adj[x][d - 1];
            self.adj[x][d - 1] = NONE;
            self.deg[x] -= 1;
        }
    }

    fn neighbors(&self, v: usize) -> &[u8] {
        &self.adj[v][..self.deg[v] as usize]
    }

    fn has_edge(&self, a: usize, b: usize) -> bool {
        self.neighbors(a).iter().any(|&w| w as usize == b)
    }

    fn row(&self, v: usize) -> Row {
        let mut r = Row::default();
        for &w in self.neighbors(v) {
            r.push(w);
        }
        r.sort();
        r
    }

    /// Is `dist(a, b) < limit`? Breadth-first search over labeled vertices.
    fn closer_than(&self, a: usize, b: usize, limit: usize) -> bool {
        if limit == 0 {
            return false;
        }
        let mut dist = vec![usize::MAX; self.labeled];
        let mut queue = std::collections::VecDeque::from([a]);
        dist[a] = 0;
        while let Some(x) = queue.pop_front() {
            if x == b {
                return true;
            }
            if dist[x] + 1 >= limit {
                continue;
            }
            for &y in self.neighbors(x) {
                let y = y as usize;
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        false
    }

    fn to_graph(&self) -> Graph {
        let edges = (0..self.labeled).flat_map(|v| {
            self.neighbors(v)
                .iter()
                .filter(move |&&w| (w as usize) > v)
                .map(move |&w| (v, w as usize))
        });
        Graph::from_edges_unchecked(self.labeled, edges)
    }
}

/// A sorted neighbor-label row of length at most 3.
#[derive(Clone, Copy, Default, PartialEq, Eq)]
struct Row {
    len: u8,
    v: [u8; MAX_DEG],
}

impl Row {
    fn push(&mut self, x: u8) {
        self.v[self.len as usize] = x;
        self.len += 1;
    }

    fn sort(&mut self) {
        self.v[..self.len as usize].sort_unstable();
    }

    fn as_slice(&self) -> &[u8] {
        &self.v[..self.len as usize]
    }
}

impl PartialOrd for Row {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Row {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.as_slice().cmp(other.as_slice())
    }
}

/// Looks for a breadth-first labeling whose code beats the identity
/// labeling's, using only the rows of vertices `0..known`.
struct Challenger<'a> {
    s: &'a State,
    known: usize,
    target: Vec<Row>,
    label: Vec<u8>,
    order: Vec<u8>,
}

impl<'a> Challenger<'a> {
    fn new(s: &'a State, known: usize) -> Self {
        Challenger {
            s,
            known,
            target: (0..known).map(|v| s.row(v)).collect(),
            label: vec![NONE; s.labeled],
            order: Vec::with_capacity(s.labeled),
        }
    }

    fn beaten(&mut self) -> bool {
        for r in 0..self.known {
            self.label[r] = 0;
            self.order.push(r as u8);
            let found = self.step(0, 1);
            self.order.pop();
            self.label[r] = NONE;
            if found {
                return true;
            }
        }
        false
    }

    fn step(&mut self, t: usize, next: u8) -> bool {
        if t >= self.known {
            return false;
        }
        let x = self.order[t] as usize;
        if x >= self.known {
            return false;
        }
        let mut fresh = [0u8; MAX_DEG];
        let mut nf = 0;
        let mut row = Row::default();
        for &y in self.s.neighbors(x) {
            let l = self.label[y as usize];
            if l == NONE {
                fresh[nf] = y;
                nf += 1;
            } else {
                row.push(l);
            }
        }
        for i in 0..nf {
            row.push(next + i as u8);
        }
        row.sort();
        match row.cmp(&self.target[t]) {
            std::cmp::Ordering::Less => return true,
            std::cmp::Ordering::Greater => return false,
            std::cmp::Ordering::Equal => {}
        }
        let fresh = &mut fresh[..nf];
        fresh.sort_unstable();
        loop {
            for (i, &y) in fresh.iter().enumerate() {
                self.label[y as usize] = next + i as u8;
                self.order.push(y);
            }
            let found = self.step(t + 1, next + nf as u8);
            for &y in fresh.iter() {
                self.label[y as usize] = NONE;
                self.order.pop();
            }
            if found {
                return true;
            }
            if !next_perm(fresh) {
                return false;
            }
        }
    }
}

fn next_perm(s: &mut [u8]) -> bool {
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

pub(crate) struct Generator<'f> {
    p: Params,
    visit: &'f mut dyn FnMut(&Graph) -> ControlFlow<()>,
}

impl<'f> Generator<'f> {
    pub(crate) fn new(p: Params, visit: &'f mut dyn FnMut(&Graph) -> ControlFlow<()>) -> Self {
        Generator { p, visit }
    }

    pub(crate) fn run(&mut self) -> ControlFlow<()> {
        if self.p.n == 0 {
            return ControlFlow::Continue(());
        }
        if self.p.n == 1 {
            return if self.p.cubic {
                ControlFlow::Continue(())
            } else {
                (self.visit)(&Graph::empty(1))
            };
        }
        let mut s = State::root(self.p.n);
        self.process(&mut s)
    }

    /// Runs the subtree below one of the first-level states.
    pub(crate) fn run_from(&mut self, s: &mut State) -> ControlFlow<()> {
        self.process(s)
    }

    /// States after vertex 0 has been processed; their subtrees partition
    /// the whole search.
    pub(crate) fn first_level(p: Params) -> Vec<State> {
        let mut out = Vec::new();
        if p.n < 2 {
            return out;
        }
        let mut collect = |s: &State| out.push(s.clone());
        let root = State::root(p.n);
        expand_vertex(&p, root, &mut collect);
        out
    }

    fn process(&mut self, s: &mut State) -> ControlFlow<()> {
        let t = s.processed;
        if t == s.labeled {
            // Only complete graphs get here; they passed the full check when
            // their last vertex was processed.
            return (self.visit)(&s.to_graph());
        }
        let p = self.p;
        let mut children = Vec::new();
        expand_vertex(&p, s.clone(), &mut |c: &State| children.push(c.clone()));
        for mut c in children {
            self.process(&mut c)?;
        }
        ControlFlow::Continue(())
    }
}

/// All ways to finish vertex `s.processed`, each child passing the partial
/// minimality check.
fn expand_vertex(p: &Params, mut s: State, emit: &mut dyn FnMut(&State)) {
    let t = s.processed;
    let cur = s.deg[t] as usize;
    let targets: Vec<usize> = if p.cubic {
        vec![MAX_DEG]
    } else {
        (cur.max(1)..=MAX_DEG).collect()
    };
    let cands: Vec<usize> = (t + 1..s.labeled)
        .filter(|&j| (s.deg[j] as usize) < MAX_DEG && !s.has_edge(t, j))
        .collect();
    for target in targets {
        if target < cur {
            continue;
        }
        let need = target - cur;
        // Choose `old` edges to labeled candidates, the rest go to new vertices.
        for old in 0..=need.min(cands.len()) {
            let fresh = need - old;
            if s.labeled + fresh > p.n {
                continue;
            }
            let mut pick = Vec::with_capacity(old);
            choose(&cands, old, 0, &mut pick, &mut |chosen: &[usize]| {
                let mut added = Vec::new();
                for &j in chosen {
                    if p.girth_min > 3 && s.closer_than(t, j, p.girth_min - 1) {
                        for &(a, b) in added.iter().rev() {
                            s.remove_edge(a, b);
                        }
                        return;
                    }
                    s.add_edge(t, j);
                    added.push((t, j));
                }
                let base = s.labeled;
                for i in 0..fresh {
                    s.add_edge(t, base + i);
                }
                s.labeled += fresh;
                s.processed += 1;
                let connected_so_far = s.processed < s.labeled || s.labeled == p.n;
                if connected_so_far && !Challenger::new(&s, s.processed).beaten() {
                    emit(&s);
                }
                s.processed -= 1;
                s.labeled -= fresh;
                for i in (0..fresh).rev() {
                    s.remove_edge(t, base + i);
                }
                for &(a, b) in added.iter().rev() {
                    s.remove_edge(a, b);
                }
            });
        }
    }
}

fn choose(items: &[usize], k: usize, from: usize, pick: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if pick.len() == k {
        f(pick);
        return;
    }
    for i in from..items.len() {
        if items.len() - i < k - pick.len() {
            break;
        }
        pick.push(items[i]);
        choose(items, k, i + 1, pick, f);
        pick.pop();
    }
}
