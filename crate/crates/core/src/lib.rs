//! Locally irregular edge-colorings of graphs.
//!
//! A graph is locally irregular when no edge joins two vertices of equal
//! degree. An edge-coloring is a LIEC when every color class, taken as a
//! spanning subgraph, is locally irregular; the least number of colors needed
//! is the locally irregular chromatic index `chi'_irr`.

pub mod decompose;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod ring;
pub mod solver;
pub mod trees;
pub mod xi;

pub use error::{Error, Result};
