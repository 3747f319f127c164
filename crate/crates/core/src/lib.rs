//! Exact computation of the k-truncated metric dimension `dim_k(G)` and its
//! fractional relaxation `dim_{k,f}(G)`, together with family generators,
//! closed-form values, structural characterizations and a verification
//! harness that checks all of them against each other.
//!
//! ```
//! use truncdim::{generators, solvers, rational};
//!
//! let c8 = generators::cycle(8).unwrap();
//! let w = solvers::dim_kf(&c8, 1).unwrap();
//! assert_eq!(rational::format(&w.total), "2/1");
//! assert_eq!(solvers::dim_k_exact(&c8, 1).unwrap().size, 3);
//! ```

pub mod characterize;
pub mod formulas;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod rational;
pub mod resolve;
pub mod solvers;
pub mod vset;

pub use graph::{DistanceMatrix, Graph, GraphError};
pub use rational::Rational;
pub use vset::VertexSet;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Generator(#[from] generators::GenError),
    #[error("a pair needs two distinct vertices, got ({0}, {0})")]
    SamePair(usize),
    #[error("dimension is defined for order at least 2, got {0}")]
    TooSmall(usize),
    #[error("truncation parameter k must be at least 1")]
    InvalidK,
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("value {value} at vertex {vertex} lies outside [0, 1]")]
    ValueOutOfRange { vertex: usize, value: String },
    #[error("order {n} exceeds the exact-search limit {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("not a tree")]
    NotATree,
    #[error("{0}")]
    Precondition(String),
    #[error("witness failed re-verification: {0}")]
    Verification(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}
