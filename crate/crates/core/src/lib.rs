//! Minimum doubly resolving sets of graphs and their line graphs.
//!
//! * [`graph`]: graphs, the text format, BFS distances, line graphs, blocks.
//! * [`resolving`]: resolving / doubly resolving set predicates.
//! * [`solvers`]: exact exhaustive and block-decomposition solvers.
//! * [`tree_line`]: bounds on Ψ(L(G)) and the linear-time tree construction.
//! * [`families`]: A_k, T_k, classic families and seeded random graphs.
//! * [`reduction`]: the 3-dimensional matching gadget.

pub mod error;
pub mod families;
pub mod graph;
pub mod reduction;
pub mod resolving;
pub mod solvers;
pub mod tree_line;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, VertexSet};
