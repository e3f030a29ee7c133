//! Lattice bases of perfect matching lattices.
//!
//! Given a matching covered multigraph, this crate constructs a basis of the
//! perfect matching lattice (the set of integer combinations of perfect
//! matching incidence vectors) consisting entirely of perfect matchings.
//! The construction is polyhedral: a facet-descent walk over the bipartite
//! relaxation collects matchings on graphs whose matching polytope equals the
//! relaxation, and fractional LP vertices on other graphs are turned into
//! separating odd cuts along which the problem decomposes.
//!
//! All arithmetic is exact: LP solving uses rational simplex, lattice
//! reasoning uses Hermite normal forms over arbitrary-precision integers.

pub mod basis;
pub mod bvn;
pub mod corpus;
pub mod cutsearch;
pub mod exact;
pub mod graph;
pub mod tightcut;
pub mod verify;

mod blossom;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("graph is not matching covered; uncovered edges: {uncovered:?}")]
    NotMatchingCovered { uncovered: Vec<EdgeId> },
    #[error("perfect matching count exceeds cap {cap}")]
    CapExceeded { cap: usize },
    #[error("invalid request: {0}")]
    InvalidRequest(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("unsupported instance: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
