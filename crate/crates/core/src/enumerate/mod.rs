//! Isomorph-free enumeration of small cubic and subcubic graphs, and the
//! harnesses built on it.

mod generate;

use std::fmt::Write as _;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    are_isomorphic, emit_graph6, gen_generalized_petersen, girth, GPSpec, Graph,
};
use crate::solver::exists_k_liec;

use generate::{Generator, Params};

pub const CUBIC_MAX_N: usize = 16;
pub const SUBCUBIC_MAX_N: usize = 11;

fn generate_all(p: Params) -> Vec<Graph> {
    // Subtrees below the first processed vertex are independent; results are
    // concatenated in subtree order, so the output is deterministic.
    Generator::first_level(p)
        .into_par_iter()
        .map(|mut s| {
            let mut out = Vec::new();
            let mut push = |g: &Graph| {
                out.push(g.clone());
                ControlFlow::Continue(())
            };
            let _ = Generator::new(p, &mut push).run_from(&mut s);
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn check_cubic_args(n: usize) -> Result<()> {
    if n % 2 == 1 {
        return Err(Error::InvalidSpec(format!("no cubic graph has odd order {n}")));
    }
    if !(4..=CUBIC_MAX_N).contains(&n) {
        return Err(Error::InvalidSpec(format!(
            "cubic enumeration supports 4 <= n <= {CUBIC_MAX_N}, got {n}"
        )));
    }
    Ok(())
}

/// One graph per isomorphism class of connected cubic graphs on `n`
/// vertices with girth at least `girth_min`.
pub fn enumerate_cubic(n: usize, girth_min: usize) -> Result<Vec<Graph>> {
    check_cubic_args(n)?;
    Ok(generate_all(Params {
        n,
        cubic: true,
        girth_min,
    }))
}

/// Streams the same graphs as [`enumerate_cubic`] to `visit`, single
/// threaded, stopping when `visit` breaks.
pub fn for_each_cubic(
    n: usize,
    girth_min: usize,
    visit: &mut dyn FnMut(&Graph) -> ControlFlow<()>,
) -> Result<()> {
    check_cubic_args(n)?;
    let _ = Generator::new(
        Params {
            n,
            cubic: true,
            girth_min,
        },
        visit,
    )
    .run();
    Ok(())
}

/// Connected graphs with maximum degree at most 3 on exactly `n` vertices.
pub fn subcubic_connected_on(n: usize) -> Result<Vec<Graph>> {
    if n > SUBCUBIC_MAX_N {
        return Err(Error::InvalidSpec(format!(
            "subcubic enumeration supports n <= {SUBCUBIC_MAX_N}, got {n}"
        )));
    }
    let p = Params {
        n,
        cubic: false,
        girth_min: 3,
    };
    if n == 1 {
        let mut out = Vec::new();
        let _ = Generator::new(p, &mut |g: &Graph| {
            out.push(g.clone());
            ControlFlow::Continue(())
        })
        .run();
        return Ok(out);
    }
    Ok(generate_all(p))
}

/// Connected graphs with maximum degree at most 3 on `1..=n_max` vertices,
/// ordered by vertex count.
pub fn enumerate_subcubic_connected(n_max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(subcubic_connected_on(n)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub n: usize,
    pub girth_min: usize,
    pub total_graphs: usize,
    /// Graphs with no 2-LIEC.
    pub non_two_liec_count: usize,
    /// Among those, the ones with a 3-LIEC.
    pub chi_three_count: usize,
    /// graph6 strings of the graphs with no 2-LIEC.
    pub witnesses: Vec<String>,
}

/// Counts connected cubic graphs of the given order and girth bound that
/// have no 2-LIEC.
pub fn table1_row(n: usize, girth_min: usize) -> Result<EnumerationReport> {
    let graphs = enumerate_cubic(n, girth_min)?;
    let verdicts: Vec<Option<bool>> = graphs
        .par_iter()
        .map(|g| match exists_k_liec(g, 2) {
            Some(_) => None,
            None => Some(exists_k_liec(g, 3).is_some()),
        })
        .collect();
    let mut witnesses = Vec::new();
    let mut chi_three_count = 0;
    for (g, v) in graphs.iter().zip(&verdicts) {
        if let Some(three) = v {
            witnesses.push(emit_graph6(g)?);
            chi_three_count += usize::from(*three);
        }
    }
    Ok(EnumerationReport {
        n,
        girth_min,
        total_graphs: graphs.len(),
        non_two_liec_count: witnesses.len(),
        chi_three_count,
        witnesses,
    })
}

/// Renders reports as a grid: one line per girth bound, one column per order.
/// A dash marks orders with no graph of that girth at all.
pub fn render_table(reports: &[EnumerationReport]) -> String {
    let mut ns: Vec<usize> = reports.iter().map(|r| r.n).collect();
    ns.sort_unstable();
    ns.dedup();
    let mut girths: Vec<usize> = reports.iter().map(|r| r.girth_min).collect();
    girths.sort_unstable();
    girths.dedup();
    let mut s = String::new();
    let _ = write!(s, "{:<8}", "g \\ n");
    for n in &ns {
        let _ = write!(s, "{n:>6}");
    }
    s.push('\n');
    for gm in girths {
        let _ = write!(s, "{:<8}", format!(">= {gm}"));
        for &n in &ns {
            match reports.iter().find(|r| r.n == n && r.girth_min == gm) {
                Some(r) if r.total_graphs > 0 => {
                    let _ = write!(s, "{:>6}", r.non_two_liec_count);
                }
                _ => {
                    let _ = write!(s, "{:>6}", "-");
                }
            }
        }
        s.push('\n');
    }
    s
}

/// Generalized Petersen graphs `P(n,k)` with `n <= n_max` and girth at
/// least 5 that have no 2-LIEC, one spec per isomorphism class (smallest
/// `k` kept).
pub fn scan_gp(n_max: usize) -> Result<Vec<GPSpec>> {
    let mut specs = Vec::new();
    for n in 5..=n_max {
        for k in 1..n.div_ceil(2) {
            if 2 * k < n {
                specs.push(GPSpec { n, k });
            }
        }
    }
    let graphs: Vec<(GPSpec, Graph)> = specs
        .into_iter()
        .map(|s| Ok((s, gen_generalized_petersen(s)?)))
        .collect::<Result<_>>()?;
    let hits: Vec<(GPSpec, Graph)> = graphs
        .into_par_iter()
        .filter(|(_, g)| girth(g).is_some_and(|x| x >= 5) && exists_k_liec(g, 2).is_none())
        .collect();
    let mut kept: Vec<(GPSpec, Graph)> = Vec::new();
    for (s, g) in hits {
        if !kept.iter().any(|(_, h)| are_isomorphic(h, &g)) {
            kept.push((s, g));
        }
    }
    Ok(kept.into_iter().map(|(s, _)| s).collect())
}
