//! Algorithms for quasi-chain bipartite graphs.
//!
//! A bipartite graph is *quasi-chain* when it has no induced copy of 2P3
//! whose bipartition puts both path centers in the same part (the unbalanced
//! orientation); equivalently, each part admits a *good ordering* in which
//! every later vertex has at most one private neighbor with respect to each
//! earlier one. The class sits just above chain (2P2-free) bipartite graphs
//! and keeps several of their algorithmic properties.
//!
//! The crate provides:
//!
//! - [`recognition`]: linear-algebraic recognition with positive (good
//!   orderings) and negative (witness) certificates;
//! - [`letterrep`]: enhanced letter representations — words over `{a, b}`
//!   with a top and a bottom matching — including the constructive encoder,
//!   and the induced decomposition into a chain graph plus two matchings;
//! - [`permute`]: the permutation ↔ quasi-permutation-graph bijection, its
//!   order-faithful variant, pattern containment, and the star-gadget
//!   reduction from colored to uncolored containment;
//! - [`implicitrep`]: O(log n)-bit adjacency labels and contiguity-3 layouts;
//! - [`optimize`]: exact polynomial solvers for maximum edge biclique,
//!   balanced biclique, and minimum independent dominating set;
//! - [`generators`] and [`oracles`]: named graph families, seeded random
//!   instances, exhaustive catalogs, and brute-force reference solvers.
//!
//! With the default `parallel` feature the batch helpers in [`batch`] fan
//! work out over rayon; without it they run sequentially with the same API.

pub mod batch;
pub mod bitset;
pub mod generators;
pub mod graph;
pub mod implicitrep;
pub mod letterrep;
pub mod optimize;
pub mod oracles;
pub mod permute;
pub mod recognition;

pub use graph::{
    is_chain_graph, two_p2, BipartiteGraph, ChainVerdict, EdgeList, EmbedMode, Embedding, Side,
    SubgraphMap, TwoP2Witness, VertexRef,
};
pub use recognition::{
    extract_witness, good_ordering, is_quasi_chain, FailingPair, GoodOrdering, QuasiChainVerdict,
    Unbalanced2P3Witness,
};

/// Crate-wide error type. The CLI maps [`Error::NotQuasiChain`] to exit code
/// 1 and everything else to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("input graph is not quasi-chain; witness centers on side {} at {:?}",
            .0.center_side, .0.centers)]
    NotQuasiChain(Unbalanced2P3Witness),

    #[error("part sizes differ: ({},{}) vs ({},{})", left.0, left.1, right.0, right.1)]
    PartSizeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("vertex {0:?} out of range (part size {1})")]
    InvalidVertex(VertexRef, usize),

    #[error("duplicate edge ({0},{1})")]
    DuplicateEdge(usize, usize),

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("{what} exceeds budget: {actual} > {limit}")]
    Budget {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("input graph is disconnected")]
    Disconnected,

    #[error("not a quasi-permutation graph: {0}")]
    NotQuasiPermutation(String),

    #[error("word rewrite failed: {0}")]
    RewriteFailure(String),

    #[error("sampling budget exhausted after {0} rejections")]
    SamplingExhausted(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
