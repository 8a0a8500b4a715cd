use super::{gen_complete, gen_complete_bipartite, gen_generalized_petersen, GPSpec, Graph};
use crate::error::{Error, Result};

pub const BUILTIN_NAMES: &[&str] = &["H0", "GP_7_2", "GP_11_2", "petersen", "K4", "K33"];

pub fn builtin_named(name: &str) -> Result<Graph> {
    match name {
        "H0" => Ok(h0()),
        "GP_7_2" => gen_generalized_petersen(GPSpec { n: 7, k: 2 }),
        "GP_11_2" => gen_generalized_petersen(GPSpec { n: 11, k: 2 }),
        "petersen" => gen_generalized_petersen(GPSpec { n: 5, k: 2 }),
        "K4" => Ok(gen_complete(4)),
        "K33" => Ok(gen_complete_bipartite(3, 3)),
        _ => Err(Error::UnknownBuiltin(name.to_string())),
    }
}

/// Two bow-ties whose centers are joined by an edge. Centers are 0 and 1;
/// the triangles are `0 2 3`, `0 4 5`, `1 6 7`, `1 8 9`.
fn h0() -> Graph {
    Graph::from_edges_unchecked(
        10,
        [
            (0, 1),
            (0, 2),
            (0, 3),
            (2, 3),
            (0, 4),
            (0, 5),
            (4, 5),
            (1, 6),
            (1, 7),
            (6, 7),
            (1, 8),
            (1, 9),
            (8, 9),
        ],
    )
}
