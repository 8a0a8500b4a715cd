//! Two-colorings of trees.
//!
//! [`shrub_2aliec`] computes an almost locally irregular 2-coloring of any
//! shrub by dynamic programming; the three `tree_2liec_*` constructions turn
//! it into genuine 2-LIECs for trees carrying one of three local features: a
//! leaf next to a degree-3 vertex, a pendant path of odd length ending at a
//! degree-3 vertex, or an odd thread between two degree-3 vertices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::solver::{is_liec, Color, EdgeColoring};

/// A tree rooted at a leaf `root`, whose only neighbor is `root_plus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shrub {
    tree: Graph,
    root: Vertex,
    root_plus: Vertex,
}

impl Shrub {
    pub fn new(tree: Graph, root: Vertex) -> Result<Shrub> {
        if !tree.is_tree() {
            return Err(Error::Precondition("a shrub must be a tree".into()));
        }
        if root >= tree.n() || tree.degree(root) != 1 {
            return Err(Error::Precondition(format!("root {root} is not a leaf")));
        }
        let root_plus = tree.neighbors(root)[0];
        Ok(Shrub {
            tree,
            root,
            root_plus,
        })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn root_plus(&self) -> Vertex {
        self.root_plus
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AliecResult {
    pub coloring: EdgeColoring,
    /// The root edge is the only edge of its color at `root_plus`, and the
    /// coloring is a 2-LIEC only after removing the root.
    pub almost: bool,
}

/// Checks the defining property of a 2-ALIEC.
pub fn is_2aliec(s: &Shrub, col: &EdgeColoring) -> bool {
    if col.k() > 2 || col.len() != s.tree.m() {
        return false;
    }
    if is_liec(&s.tree, col) {
        return true;
    }
    let root_edge = Edge::new(s.root, s.root_plus);
    let Some(c) = col.get(root_edge) else {
        return false;
    };
    let unique = s
        .tree
        .neighbors(s.root_plus)
        .iter()
        .all(|&w| w == s.root || col.color_of(s.root_plus, w) != Some(c));
    if !unique {
        return false;
    }
    let rest = EdgeColoring::from_iter_k(col.k(), col.iter().filter(|&(e, _)| e != root_edge));
    let keep: Vec<Vertex> = (0..s.tree.n()).filter(|&v| v != s.root).collect();
    let (sub, map) = s.tree.induced_subgraph(&keep);
    let mut inv = vec![usize::MAX; s.tree.n()];
    for (i, &v) in map.iter().enumerate() {
        inv[v] = i;
    }
    is_liec(&sub, &rest.relabel(&inv))
}

impl EdgeColoring {
    pub(crate) fn from_iter_k(k: Color, it: impl IntoIterator<Item = (Edge, Color)>) -> EdgeColoring {
        let mut col = EdgeColoring::new(k);
        for (e, c) in it {
            col.set(e, c);
        }
        col
    }
}

/// Feasible parent-edge states of every vertex below the root.
///
/// `feasible[v]` is a bitmask over `k`: with the edge to `v`'s parent in some
/// color `c`, the subtree of `v` can be finished so that `v` ends up with
/// exactly `k` edges of color `c` and every edge below is satisfied.
struct ShrubDp<'a> {
    t: &'a Graph,
    children: Vec<Vec<Vertex>>,
    feasible: Vec<u32>,
}

impl<'a> ShrubDp<'a> {
    fn new(t: &'a Graph, root: Vertex) -> ShrubDp<'a> {
        let n = t.n();
        let mut parent = vec![usize::MAX; n];
        let mut children = vec![Vec::new(); n];
        let mut order = vec![root];
        parent[root] = root;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &w in t.neighbors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    children[v].push(w);
                    order.push(w);
                }
            }
        }
        let mut dp = ShrubDp {
            t,
            children,
            feasible: vec![0; n],
        };
        for &v in order.iter().rev() {
            if v != root {
                dp.feasible[v] = dp.states(v);
            }
        }
        dp
    }

    /// Split of `v`'s children into "same color as the parent edge" and
    /// "other color" realizing `k = 1 + same`, if any.
    fn split(&self, v: Vertex, k: usize) -> Option<Vec<bool>> {
        let m = self.children[v].len();
        let same = k.checked_sub(1)?;
        if same > m {
            return None;
        }
        let other = m - same;
        let mut only_same = Vec::new();
        let mut both = Vec::new();
        let mut assignment = vec![false; m];
        for (i, &w) in self.children[v].iter().enumerate() {
            let f = self.feasible[w];
            let can_same = f & !(1 << k) != 0;
            let can_other = f & !(1 << other) != 0;
            match (can_same, can_other) {
                (true, true) => both.push(i),
                (true, false) => only_same.push(i),
                (false, true) => {}
                (false, false) => return None,
            }
        }
        if only_same.len() > same || only_same.len() + both.len() < same {
            return None;
        }
        for &i in &only_same {
            assignment[i] = true;
        }
        for &i in both.iter().take(same - only_same.len()) {
            assignment[i] = true;
        }
        Some(assignment)
    }

    fn states(&self, v: Vertex) -> u32 {
        let mut mask = 0;
        for k in 1..=self.children[v].len() + 1 {
            if self.split(v, k).is_some() {
                mask |= 1 << k;
            }
        }
        mask
    }

    /// Colors the subtree of `v` given its parent edge color and target `k`.
    fn build(&self, v: Vertex, c: Color, k: usize, col: &mut EdgeColoring) {
        let assignment = self.split(v, k).expect("state was feasible");
        let other_count = self.children[v].len() + 1 - k;
        for (i, &w) in self.children[v].iter().enumerate() {
            let f = self.feasible[w];
            let (cw, avoid) = if assignment[i] { (c, k) } else { (3 - c, other_count) };
            let kw = (1..=self.t.degree(w))
                .find(|&x| f >> x & 1 == 1 && x != avoid)
                .expect("child state exists");
            col.set(Edge::new(v, w), cw);
            self.build(w, cw, kw, col);
        }
    }
}

/// A 2-ALIEC of the shrub. A genuine 2-LIEC is preferred whenever one
/// exists; the root edge always gets color 1.
pub fn shrub_2aliec(s: &Shrub) -> AliecResult {
    let dp = ShrubDp::new(&s.tree, s.root);
    let f = dp.feasible[s.root_plus];
    let mut col = EdgeColoring::new(2);
    col.set(Edge::new(s.root, s.root_plus), 1);
    // The root has one edge of the root color, so a full 2-LIEC needs k != 1.
    let full = (2..=s.tree.degree(s.root_plus)).find(|&k| f >> k & 1 == 1);
    let (k, almost) = match full {
        Some(k) => (k, false),
        None => {
            assert!(f & 0b10 != 0, "every shrub has a 2-ALIEC");
            (1, true)
        }
    };
    dp.build(s.root_plus, 1, k, &mut col);
    debug_assert!(is_2aliec(s, &col));
    AliecResult {
        coloring: col,
        almost,
    }
}

/// Vertices of the component of `t - cut` containing `start`.
fn side_of(t: &Graph, start: Vertex, cut: Vertex) -> Vec<bool> {
    let mut seen = vec![false; t.n()];
    seen[cut] = true;
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in t.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen[cut] = false;
    seen
}

fn swap_colors(c: Color) -> Color {
    3 - c
}

fn ensure_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::Precondition("input is not a tree".into()))
    }
}

fn checked(t: &Graph, col: EdgeColoring) -> Result<EdgeColoring> {
    if is_liec(t, &col) {
        Ok(col)
    } else {
        Err(Error::Internal("tree construction produced an invalid coloring".into()))
    }
}

/// 2-LIEC of a tree with an edge `uv`, `d(u) = 1`, `d(v) = 3`.
///
/// Take a 2-ALIEC of the shrub rooted at `u`. If it is only almost valid, the
/// root edge has color 1 and both other edges at `v` color 2. Recoloring the
/// root edge is tried first; otherwise some branch neighbor `v_i` has three
/// edges of color 2, and swapping the colors of its branch (including `v v_i`)
/// fixes everything except possibly the root edge, which is then recolored.
pub fn tree_2liec_pendant_deg3(t: &Graph, u: Vertex, v: Vertex) -> Result<EdgeColoring> {
    ensure_tree(t)?;
    if !t.has_edge(u, v) || t.degree(u) != 1 || t.degree(v) != 3 {
        return Err(Error::Precondition(format!(
            "need an edge {u}-{v} with d({u}) = 1 and d({v}) = 3"
        )));
    }
    let shrub = Shrub::new(t.clone(), u)?;
    let AliecResult {
        coloring: mut col,
        almost,
    } = shrub_2aliec(&shrub);
    if !almost {
        return checked(t, col);
    }
    let root_edge = Edge::new(u, v);
    col.set(root_edge, 2);
    if is_liec(t, &col) {
        return checked(t, col);
    }
    col.set(root_edge, 1);

    let branch: Vec<Vertex> = t.neighbors(v).iter().copied().filter(|&w| w != u).collect();
    let three_of_two = |w: Vertex, col: &EdgeColoring| {
        t.neighbors(w).iter().filter(|&&x| col.color_of(w, x) == Some(2)).count() == 3
    };
    let v1 = *branch
        .iter()
        .find(|&&w| three_of_two(w, &col))
        .ok_or_else(|| Error::Internal("no monochromatic branch vertex".into()))?;
    let side = side_of(t, v1, v);
    let in_branch = |e: Edge| (side[e.u] && side[e.v]) || e == Edge::new(v, v1);
    let swapped: Vec<(Edge, Color)> = col.iter().filter(|&(e, _)| in_branch(e)).collect();
    for (e, c) in swapped {
        col.set(e, swap_colors(c));
    }
    if !is_liec(t, &col) {
        col.set(root_edge, 2);
    }
    checked(t, col)
}

/// 2-LIEC of a tree with a pendant path `path = v_1 .. v_{2k}`: `d(v_1) = 1`,
/// interior vertices of degree 2, `d(v_{2k}) = 3`, odd length `2k - 1`.
///
/// The shrub beyond `v_{2k-1}` is colored by [`tree_2liec_pendant_deg3`];
/// the even path `v_1 .. v_{2k-1}` is cut into 2-edge segments of
/// alternating colors, the last differing from `v_{2k-1} v_{2k}`.
pub fn tree_2liec_pendant_oddpath(t: &Graph, path: &[Vertex]) -> Result<EdgeColoring> {
    ensure_tree(t)?;
    check_pendant_path(t, path)?;
    let len = path.len();
    if len == 2 {
        return tree_2liec_pendant_deg3(t, path[0], path[1]);
    }
    let cut = &path[..len - 2];
    let keep: Vec<Vertex> = (0..t.n()).filter(|v| !cut.contains(v)).collect();
    let (sub, map) = t.induced_subgraph(&keep);
    let pos = |x: Vertex| map.iter().position(|&y| y == x).expect("kept vertex");
    let sub_col = tree_2liec_pendant_deg3(&sub, pos(path[len - 2]), pos(path[len - 1]))?;
    let mut col = sub_col.relabel(&map);
    col.set_k(2);
    let junction = col
        .color_of(path[len - 2], path[len - 1])
        .expect("junction edge colored");
    // Segments walking back from v_{2k-1}: edges (i-1, i) for i = len-2 .. 1.
    let mut c = swap_colors(junction);
    let mut i = len - 2;
    while i >= 2 {
        col.set(Edge::new(path[i], path[i - 1]), c);
        col.set(Edge::new(path[i - 1], path[i - 2]), c);
        c = swap_colors(c);
        i -= 2;
    }
    checked(t, col)
}

fn check_pendant_path(t: &Graph, path: &[Vertex]) -> Result<()> {
    let bad = |why: &str| Err(Error::Precondition(format!("not a pendant odd path: {why}")));
    if path.len() < 2 || path.len() % 2 == 1 {
        return bad("needs an even number of vertices");
    }
    if path.windows(2).any(|w| !t.has_edge(w[0], w[1])) {
        return bad("consecutive vertices must be adjacent");
    }
    if t.degree(path[0]) != 1 {
        return bad("first vertex must be a leaf");
    }
    if path[1..path.len() - 1].iter().any(|&v| t.degree(v) != 2) {
        return bad("interior vertices must have degree 2");
    }
    if t.degree(path[path.len() - 1]) != 3 {
        return bad("last vertex must have degree 3");
    }
    Ok(())
}

/// 2-LIEC of a tree with an odd thread `thread = v_1 .. v_{2k+1}` of degree-2
/// vertices whose outer neighbors `u_1` (next to `v_1`) and `u_2` both have
/// degree 3.
///
/// Cutting at `v_1`'s inner neighbor gives a shrub rooted at `v_1` hanging
/// from `u_1` and a tree in which `v_1 .. v_{2k+1} u_2` is a pendant odd path;
/// the two colorings are joined with different colors at `v_1`.
pub fn tree_2liec_odd_thread(t: &Graph, thread: &[Vertex]) -> Result<EdgeColoring> {
    ensure_tree(t)?;
    let (u1, u2) = thread_ends(t, thread)?;
    let v1 = thread[0];
    let inner = if thread.len() > 1 { thread[1] } else { u2 };

    // T1: the side of u1 when v1's inner edge is removed, with v1 as a leaf.
    let side = side_of(t, u1, v1);
    let t1_vertices: Vec<Vertex> = (0..t.n()).filter(|&x| side[x] || x == v1).collect();
    let (t1, map1) = t.induced_subgraph(&t1_vertices);
    let idx1 = |x: Vertex| map1.iter().position(|&y| y == x).expect("in T1");
    let col1 = tree_2liec_pendant_deg3(&t1, idx1(v1), idx1(u1))?.relabel(&map1);

    // T2: everything else, where v1 is now a leaf.
    let t2_vertices: Vec<Vertex> = (0..t.n()).filter(|&x| !side[x]).collect();
    let (t2, map2) = t.induced_subgraph(&t2_vertices);
    let idx2 = |x: Vertex| map2.iter().position(|&y| y == x).expect("in T2");
    let mut path: Vec<Vertex> = thread.iter().map(|&x| idx2(x)).collect();
    path.push(idx2(u2));
    let mut col2 = tree_2liec_pendant_oddpath(&t2, &path)?.relabel(&map2);

    if col1.color_of(u1, v1) == col2.color_of(v1, inner) {
        col2.recolor(swap_colors);
    }
    let mut col = col1;
    col.absorb(&col2);
    checked(t, col)
}

fn thread_ends(t: &Graph, thread: &[Vertex]) -> Result<(Vertex, Vertex)> {
    let bad = |why: &str| Err(Error::Precondition(format!("not an odd thread: {why}")));
    if thread.len().is_multiple_of(2) {
        return bad("needs an odd number of vertices");
    }
    if thread.iter().any(|&v| t.degree(v) != 2) {
        return bad("thread vertices must have degree 2");
    }
    if thread.windows(2).any(|w| !t.has_edge(w[0], w[1])) {
        return bad("consecutive vertices must be adjacent");
    }
    let outer = |end: Vertex, toward: Option<Vertex>| {
        t.neighbors(end).iter().copied().find(|&w| Some(w) != toward)
    };
    let first = thread[0];
    let last = thread[thread.len() - 1];
    let (u1, u2) = if thread.len() == 1 {
        let nb = t.neighbors(first);
        (nb[0], nb[1])
    } else {
        (
            outer(first, Some(thread[1])).expect("degree 2"),
            outer(last, Some(thread[thread.len() - 2])).expect("degree 2"),
        )
    };
    if t.degree(u1) != 3 || t.degree(u2) != 3 {
        return bad("both ends must attach to degree-3 vertices");
    }
    Ok((u1, u2))
}

/// A leaf adjacent to a degree-3 vertex, as `(leaf, neighbor)`, smallest leaf first.
pub fn find_pendant_deg3_edge(t: &Graph) -> Option<(Vertex, Vertex)> {
    (0..t.n())
        .filter(|&u| t.degree(u) == 1)
        .map(|u| (u, t.neighbors(u)[0]))
        .find(|&(_, v)| t.degree(v) == 3)
}

/// A pendant path of odd length ending at a degree-3 vertex, listed from
/// the leaf. Leaves are tried in increasing order.
pub fn find_pendant_odd_path(t: &Graph) -> Option<Vec<Vertex>> {
    for leaf in (0..t.n()).filter(|&u| t.degree(u) == 1) {
        let mut path = vec![leaf];
        let (mut prev, mut cur) = (leaf, t.neighbors(leaf)[0]);
        path.push(cur);
        while t.degree(cur) == 2 {
            let next = t.neighbors(cur).iter().copied().find(|&w| w != prev)?;
            prev = cur;
            cur = next;
            path.push(cur);
        }
        if t.degree(cur) == 3 && path.len() % 2 == 0 {
            return Some(path);
        }
    }
    None
}

/// A maximal thread with an odd number of vertices between two degree-3
/// vertices, listed from the end nearer the smaller degree-3 vertex.
pub fn find_odd_thread(t: &Graph) -> Option<Vec<Vertex>> {
    for u in (0..t.n()).filter(|&u| t.degree(u) == 3) {
        for &start in t.neighbors(u) {
            if t.degree(start) != 2 {
                continue;
            }
            let mut thread = vec![start];
            let (mut prev, mut cur) = (u, start);
            loop {
                let next = t.neighbors(cur).iter().copied().find(|&w| w != prev)?;
                if t.degree(next) != 2 {
                    if t.degree(next) == 3 && thread.len() % 2 == 1 {
                        return Some(thread);
                    }
                    break;
                }
                thread.push(next);
                prev = cur;
                cur = next;
            }
        }
    }
    None
}

/// Which construction [`tree_2liec`] used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TreeRule {
    PendantDegreeThree,
    PendantOddPath,
    OddThread,
    EvenPath,
}

/// 2-LIEC of a path with an even number of edges: consecutive pairs of
/// edges, alternating colors.
pub fn even_path_2liec(t: &Graph) -> Result<EdgeColoring> {
    ensure_tree(t)?;
    if t.max_degree() > 2 || t.m() % 2 == 1 {
        return Err(Error::Precondition("not a path of even length".into()));
    }
    let mut col = EdgeColoring::new(2);
    let Some(start) = (0..t.n()).find(|&v| t.degree(v) == 1) else {
        return Ok(col);
    };
    let (mut prev, mut cur) = (start, t.neighbors(start)[0]);
    col.set(Edge::new(prev, cur), 1);
    let mut i = 1;
    while let Some(&next) = t.neighbors(cur).iter().find(|&&w| w != prev) {
        col.set(Edge::new(cur, next), (i / 2 % 2 + 1) as Color);
        prev = cur;
        cur = next;
        i += 1;
    }
    checked(t, col)
}

/// Tries the constructions in order: leaf next to a degree-3 vertex, pendant
/// odd path, odd thread, and finally a bare even path.
pub fn tree_2liec(t: &Graph) -> Result<(TreeRule, EdgeColoring)> {
    if let Some((u, v)) = find_pendant_deg3_edge(t) {
        return Ok((TreeRule::PendantDegreeThree, tree_2liec_pendant_deg3(t, u, v)?));
    }
    if let Some(p) = find_pendant_odd_path(t) {
        return Ok((TreeRule::PendantOddPath, tree_2liec_pendant_oddpath(t, &p)?));
    }
    if let Some(th) = find_odd_thread(t) {
        return Ok((TreeRule::OddThread, tree_2liec_odd_thread(t, &th)?));
    }
    if t.max_degree() <= 2 && t.m().is_multiple_of(2) {
        return Ok((TreeRule::EvenPath, even_path_2liec(t)?));
    }
    Err(Error::Precondition("tree has none of the three features".into()))
}
