//! Exact treewidth by a layered dynamic program over elimination orderings.
//!
//! The search decides `tw(G) <= k` for increasing `k`, keeping one layer of
//! feasible eliminated prefixes at a time. Duplicate prefixes are filtered
//! with a concurrent Bloom filter (or an exact set), and layers can be pruned
//! with a minor-min-width lower bound computed without materialising the
//! eliminated graph.

pub mod bloom;
pub mod cli;
pub mod decomposition;
pub mod dp;
pub mod error;
pub mod graph;
pub mod io;
pub mod mmw;
pub mod oracle;
pub mod preprocess;
pub mod report;
pub mod vertex_set;

pub use dp::{
    solve, solve_observed, Decision, DedupMode, LayerEvent, SearchState, SolveConfig, SolveResult,
    Status,
};
pub use error::{Error, Result};
pub use graph::{EliminationOrder, Graph};
pub use vertex_set::VertexSet;
