//! Exhaustive-search laboratory for cubic bipartite graphs.
//!
//! The crate provides isomorph-free generation of connected cubic
//! bipartite graphs under girth constraints, two independent 2-factor
//! enumeration routes with the pseudo-2-factor-isomorphism and
//! 2-factor-hamiltonicity predicates, edge-connectivity invariants,
//! canonical forms with automorphism groups, star products, and the named
//! graphs the analyses revolve around.

pub mod codec;
pub mod connectivity;
pub mod constructions;
pub mod factors;
pub mod generator;
pub mod graph;
pub mod oracle;
pub mod symmetry;

pub use graph::{Bipartition, Edge, Girth, Graph, GraphError};
