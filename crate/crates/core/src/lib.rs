//! Blocker problems on graphs: how few contractions, vertex deletions or edge
//! deletions lower α, ω or χ by a given amount.

pub mod bipartite;
pub mod blocker;
pub mod cotree;
pub mod error;
pub mod generate;
pub mod graph;
pub mod mono;
pub mod oracle;
pub mod params;
pub mod reductions;
pub mod report;
pub mod subsets;

pub use blocker::{BlockerQuery, BlockerSet, Operation};
pub use cotree::Cotree;
pub use error::{Error, Result};
pub use graph::{Edge, EdgeSet, Graph, VertexSet};
pub use params::ParameterKind;
