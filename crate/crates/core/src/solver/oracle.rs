//! Brute-force decomposability check over edge-set partitions.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest edge count the partition oracle accepts.
pub const ORACLE_MAX_EDGES: usize = 16;

/// True iff the edge set splits into locally irregular subgraphs.
///
/// Dynamic programming over edge subsets: a subset is good if it is empty or
/// some locally irregular part containing its lowest edge leaves a good rest.
pub fn is_decomposable_oracle(g: &Graph) -> Result<bool> {
    let edges = g.edge_vec();
    let m = edges.len();
    if m > ORACLE_MAX_EDGES {
        return Err(Error::TooLarge(format!(
            "partition oracle handles at most {ORACLE_MAX_EDGES} edges, got {m}"
        )));
    }
    let full = (1u32 << m) - 1;
    let mut irregular = vec![false; 1 << m];
    let mut deg = vec![0u8; g.n()];
    for mask in 1..=full {
        for (i, e) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[e.u] += 1;
                deg[e.v] += 1;
            }
        }
        irregular[mask as usize] = edges
            .iter()
            .enumerate()
            .all(|(i, e)| mask >> i & 1 == 0 || deg[e.u] != deg[e.v]);
        for e in &edges {
            deg[e.u] = 0;
            deg[e.v] = 0;
        }
    }

    let mut good = vec![false; 1 << m];
    good[0] = true;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // Enumerate subsets of `rest`, each joined with the lowest edge.
        let mut sub = rest;
        loop {
            let part = sub | low;
            if irregular[part as usize] && good[(mask ^ part) as usize] {
                good[mask as usize] = true;
                break;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(good[full as usize])
}
