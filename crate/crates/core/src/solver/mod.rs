//! Verification and exact computation of locally irregular edge-colorings.

mod coloring;
mod oracle;
mod search;

pub use coloring::{is_liec, verify_liec, Color, ColorDegreeTable, EdgeColoring, Violation};
pub use oracle::{is_decomposable_oracle, ORACLE_MAX_EDGES};
pub use search::{
    chi_irr, chi_irr_budget, chi_irr_with_witness, exists_k_liec, exists_k_liec_budget,
    exists_k_liec_counted,
};
