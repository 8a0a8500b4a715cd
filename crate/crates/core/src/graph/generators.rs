//! Generators for the graph families used throughout the crate.
//!
//! Every generator documents its vertex labeling so that colorings computed
//! on its output are reproducible.

use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Cycle `0-1-...-(n-1)-0`.
pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidSpec(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(Graph::from_edges_unchecked(n, (0..n).map(|i| (i, (i + 1) % n))))
}

/// Path with `edges` edges on vertices `0..=edges`, in order.
pub fn gen_path(edges: usize) -> Result<Graph> {
    if edges < 1 {
        return Err(Error::InvalidSpec("path needs at least one edge".into()));
    }
    Ok(Graph::from_edges_unchecked(edges + 1, (0..edges).map(|i| (i, i + 1))))
}

pub fn gen_complete(n: usize) -> Graph {
    Graph::from_edges_unchecked(
        n,
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))),
    )
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn gen_complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges_unchecked(a + b, (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))))
}

/// Star `K_{1,leaves}` centered at vertex 0.
pub fn gen_star(leaves: usize) -> Graph {
    gen_complete_bipartite(1, leaves)
}

/// Parameters of the generalized Petersen graph `P(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GPSpec {
    pub n: usize,
    pub k: usize,
}

impl GPSpec {
    pub fn new(n: usize, k: usize) -> Result<GPSpec> {
        if k < 1 || 2 * k >= n {
            return Err(Error::InvalidSpec(format!(
                "generalized Petersen P({n},{k}) needs 1 <= k < n/2"
            )));
        }
        Ok(GPSpec { n, k })
    }

    /// The same graph described as a ring permutation graph: outer cycle
    /// `u_i`, inner 2-regular graph made of the `gcd(n,k)` cycles of the
    /// skip-`k` relation, spokes `u_i v_i`.
    pub fn as_ring_spec(&self) -> RingPermutationSpec {
        let (n, k) = (self.n, self.k);
        let d = gcd(n, k);
        let len = n / d;
        let mut phi = vec![0; n];
        for c in 0..d {
            for t in 0..len {
                let v = (c + t * k) % n;
                phi[v] = c * len + t;
            }
        }
        RingPermutationSpec {
            n,
            cycle_lengths: vec![len; d],
            phi,
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `P(n,k)`: outer vertices `u_i = i`, inner vertices `v_i = n + i`, edges
/// `u_i u_{i+1}`, `u_i v_i`, `v_i v_{i+k}` (indices mod n).
pub fn gen_generalized_petersen(spec: GPSpec) -> Result<Graph> {
    let GPSpec { n, k } = GPSpec::new(spec.n, spec.k)?;
    let edges = (0..n).flat_map(|i| {
        [
            (i, (i + 1) % n),
            (i, n + i),
            (n + i, n + (i + k) % n),
        ]
    });
    Ok(Graph::from_edges_unchecked(2 * n, edges))
}

/// A cycle `C_n`, a 2-regular graph `R` on `n` vertices given by its cycle
/// lengths, and a bijection `phi` from the cycle onto `R`.
///
/// `R`'s vertices are indexed cycle by cycle: cycle `i` occupies the indices
/// `offset_i .. offset_i + l_i`, consecutive indices being adjacent and the
/// last closing back to the first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingPermutationSpec {
    pub n: usize,
    pub cycle_lengths: Vec<usize>,
    pub phi: Vec<usize>,
}

impl RingPermutationSpec {
    pub fn new(n: usize, cycle_lengths: Vec<usize>, phi: Vec<usize>) -> Result<Self> {
        let spec = RingPermutationSpec {
            n,
            cycle_lengths,
            phi,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Identity bijection onto a single `n`-cycle: the prism `C_n x K_2`.
    pub fn prism(n: usize) -> Result<Self> {
        RingPermutationSpec::new(n, vec![n], (0..n).collect())
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::InvalidSpec(format!("ring needs n >= 3, got {}", self.n)));
        }
        if let Some(l) = self.cycle_lengths.iter().find(|&&l| l < 3) {
            return Err(Error::InvalidSpec(format!("cycle length {l} < 3")));
        }
        let total: usize = self.cycle_lengths.iter().sum();
        if total != self.n {
            return Err(Error::InvalidSpec(format!(
                "cycle lengths sum to {total}, expected {}",
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        if self.phi.len() != self.n {
            return Err(Error::InvalidSpec("phi must have exactly n entries".into()));
        }
        for &p in &self.phi {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidSpec("phi is not a bijection".into()));
            }
        }
        Ok(())
    }

    /// Start index of each cycle of `R`.
    pub fn offsets(&self) -> Vec<usize> {
        self.cycle_lengths
            .iter()
            .scan(0, |acc, &l| {
                let o = *acc;
                *acc += l;
                Some(o)
            })
            .collect()
    }

    /// Edges of `R` in its own index space.
    pub fn r_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n);
        for (&o, &l) in self.offsets().iter().zip(&self.cycle_lengths) {
            for t in 0..l {
                out.push((o + t, o + (t + 1) % l));
            }
        }
        out
    }

    /// Graph vertex id of `R`'s vertex with index `r`.
    pub fn r_vertex(&self, r: usize) -> Vertex {
        self.n + r
    }
}

/// Ring permutation graph: outer cycle on `0..n`, `R` on `n..2n` (index `r`
/// at vertex `n + r`), spokes `i - (n + phi[i])`.
pub fn gen_ring_permutation(spec: &RingPermutationSpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.n;
    let edges = (0..n)
        .map(|i| (i, (i + 1) % n))
        .chain(spec.r_edges().into_iter().map(|(a, b)| (n + a, n + b)))
        .chain((0..n).map(|i| (i, n + spec.phi[i])));
    Graph::from_edges(2 * n, edges)
}

/// Cycle permutation description of `XI_n`: outer cycle `v_0..v_{3n-1}`,
/// inner cycle `u_0..u_{3n-1}`, spokes `v_{3i} u_{3i+1}`, `v_{3i+1} u_{3i}`,
/// `v_{3i+2} u_{3i+2}`.
pub fn xi_ring_spec(n: usize) -> Result<RingPermutationSpec> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!("XI_n needs n >= 2, got {n}")));
    }
    let len = 3 * n;
    let mut phi = vec![0; len];
    for i in 0..n {
        phi[3 * i] = 3 * i + 1;
        phi[3 * i + 1] = 3 * i;
        phi[3 * i + 2] = 3 * i + 2;
    }
    RingPermutationSpec::new(len, vec![len], phi)
}

/// `XI_n` with `v_j = j` and `u_j = 3n + j`.
pub fn gen_xi(n: usize) -> Result<Graph> {
    gen_ring_permutation(&xi_ring_spec(n)?)
}

/// Two adjacent vertices `0` and `1` joined additionally by `k` internally
/// disjoint paths of length `4t + 1`. Internal vertices of path `p` are
/// `2 + p*4t .. 2 + (p+1)*4t`, walking from vertex 0 to vertex 1.
pub fn gen_theta_family(k: usize, t: usize) -> Result<Graph> {
    if k < 2 || t < 1 {
        return Err(Error::InvalidSpec(format!(
            "theta family needs k >= 2 and t >= 1, got k={k}, t={t}"
        )));
    }
    let inner = 4 * t;
    let n = 2 + k * inner;
    let mut edges = vec![(0, 1)];
    for p in 0..k {
        let base = 2 + p * inner;
        edges.push((0, base));
        for j in 0..inner - 1 {
            edges.push((base + j, base + j + 1));
        }
        edges.push((base + inner - 1, 1));
    }
    Ok(Graph::from_edges_unchecked(n, edges))
}

/// Two diamonds joined by an edge between their degree-2 tips, with the two
/// remaining tips joined as well, giving a cubic graph on eight vertices.
///
/// Labels: `u1..u4 = 0..3`, `v1..v4 = 4..7`; each diamond is `K_4` minus the
/// edge `x1 x4`; the joining edges are `u1 v1` and `u4 v4`.
pub fn gen_double_diamond_cubic() -> Graph {
    let diamond = |o: usize| {
        [
            (o, o + 1),
            (o, o + 2),
            (o + 1, o + 2),
            (o + 1, o + 3),
            (o + 2, o + 3),
        ]
    };
    let edges = diamond(0)
        .into_iter()
        .chain(diamond(4))
        .chain([(0, 4), (3, 7)]);
    Graph::from_edges_unchecked(8, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, is_bipartite};

    #[test]
    fn cycles_and_paths() {
        let c4 = gen_cycle(4).unwrap();
        assert_eq!((c4.n(), c4.m()), (4, 4));
        assert_eq!(girth(&c4), Some(4));
        let c7 = gen_cycle(7).unwrap();
        assert!(c7.is_regular(2) && c7.is_connected());
        assert_eq!(gen_path(2).unwrap().degrees(), vec![1, 2, 1]);
        assert!(gen_cycle(2).is_err());
        assert!(gen_path(0).is_err());
    }

    #[test]
    fn generalized_petersen_basic() {
        let p = gen_generalized_petersen(GPSpec { n: 5, k: 2 }).unwrap();
        assert!(p.is_regular(3));
        assert_eq!((p.n(), p.m()), (10, 15));
        assert_eq!(girth(&p), Some(5));
        let g72 = gen_generalized_petersen(GPSpec { n: 7, k: 2 }).unwrap();
        assert_eq!((g72.n(), g72.m(), girth(&g72)), (14, 21, Some(5)));
        let g41 = gen_generalized_petersen(GPSpec { n: 4, k: 1 }).unwrap();
        assert!(g41.is_regular(3));
        assert_eq!(girth(&g41), Some(4));
        assert!(GPSpec::new(6, 3).is_err());
        assert!(GPSpec::new(6, 0).is_err());
    }

    #[test]
    fn every_gp_is_cubic_with_3n_edges() {
        for n in 3..=20 {
            for k in 1..n {
                if 2 * k >= n {
                    continue;
                }
                let g = gen_generalized_petersen(GPSpec { n, k }).unwrap();
                assert!(g.is_regular(3), "P({n},{k})");
                assert_eq!(g.m(), 3 * n);
            }
        }
    }

    #[test]
    fn ring_permutation_prism_and_errors() {
        let g = gen_ring_permutation(&RingPermutationSpec::prism(3).unwrap()).unwrap();
        assert!(g.is_regular(3));
        assert_eq!(g.n(), 6);
        assert_eq!(girth(&g), Some(3));
        let s = RingPermutationSpec::new(6, vec![3, 3], vec![5, 0, 3, 1, 4, 2]).unwrap();
        let g = gen_ring_permutation(&s).unwrap();
        assert!(g.is_regular(3));
        assert_eq!(g.n(), 12);
        assert!(RingPermutationSpec::new(6, vec![3, 2, 1], (0..6).collect()).is_err());
        assert!(RingPermutationSpec::new(6, vec![3, 4], (0..6).collect()).is_err());
        assert!(RingPermutationSpec::new(4, vec![4], vec![0, 1, 1, 2]).is_err());
    }

    #[test]
    fn xi_graphs() {
        let g = gen_xi(2).unwrap();
        assert_eq!((g.n(), g.m(), girth(&g)), (12, 18, Some(4)));
        let g = gen_xi(3).unwrap();
        assert_eq!(g.n(), 18);
        assert!(g.is_regular(3));
        assert!(gen_xi(1).is_err());
    }

    #[test]
    fn theta_family_shape() {
        let h = gen_theta_family(2, 1).unwrap();
        assert_eq!(h.n(), 10);
        assert_eq!(h.min_degree(), 2);
        assert!(is_bipartite(&h));
        assert_eq!(girth(&h), Some(6));
        let h3 = gen_theta_family(3, 1).unwrap();
        let mut d = h3.degrees();
        d.sort_unstable();
        assert_eq!(&d[d.len() - 2..], &[4, 4]);
        assert!(d[..d.len() - 2].iter().all(|&x| x == 2));
        assert!(gen_theta_family(1, 1).is_err());
        assert!(gen_theta_family(2, 0).is_err());
        for (k, t) in [(2, 2), (3, 2), (4, 1)] {
            let g = gen_theta_family(k, t).unwrap();
            assert!(is_bipartite(&g));
            assert_eq!(girth(&g), Some(4 * t + 2));
        }
    }

    #[test]
    fn double_diamond_is_cubic() {
        let g = gen_double_diamond_cubic();
        assert!(g.is_regular(3));
        assert_eq!(g.n(), 8);
    }
}
