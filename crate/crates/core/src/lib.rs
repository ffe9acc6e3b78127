//! Exact vertex cover solving by branch-and-reduce above the Lovász–Plummer
//! bound `2LP(G) - MM(G)`.
//!
//! The crate is organised around the quantities that drive the search:
//!
//! * [`graph`] — a simple undirected graph with stable vertex identifiers
//!   and the mutation primitives the reductions need (deletion, set
//!   identification, induced subgraphs).
//! * [`matching`] — maximum matching in general graphs (blossom algorithm)
//!   and in bipartite graphs with König cover extraction.
//! * [`lpvc`] — exact half-integral optima of the relaxed vertex cover LP,
//!   surplus queries over independent sets, and extreme-optimum computation.
//! * [`gallai`] — the Gallai–Edmonds decomposition and the structural
//!   queries the branching rules rely on.
//! * [`reduce`] — the three answer-preserving reduction rules, applied
//!   exhaustively with a trace that lifts covers back to the original graph.
//! * [`solver`] — the recursive branch-and-reduce decision procedure with
//!   certificate extraction and per-node measure accounting.
//! * [`oracle`] — deliberately naive brute-force references for every
//!   quantity above, used by the test suites and the `verify` command.

pub mod gallai;
pub mod graph;
pub mod lpvc;
pub mod matching;
pub mod oracle;
pub mod reduce;
pub mod solver;

mod dense;

pub use gallai::GallaiEdmonds;
pub use graph::{Graph, VertexId};
pub use lpvc::{GraphSurplus, HalfInt, HalfIntegralSolution, SurplusWitness};
pub use matching::Matching;
pub use reduce::{Budget, ReductionStep, ReductionTrace};
pub use solver::{ParamMode, SolveReport};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A queried vertex is not present in the graph.
    #[error("vertex {0} is not in the graph")]
    MissingVertex(VertexId),
    /// Self-loops are rejected everywhere, including at parse time.
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    /// A documented precondition of an operation does not hold.
    #[error("contract violation: {0}")]
    ContractViolation(String),
    /// A brute-force oracle refused an instance larger than its cap.
    #[error("instance has {n} vertices, oracle cap is {cap}")]
    CapExceeded { n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
