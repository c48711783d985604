//! Exact counting of forbidden-orientation-free orientations of small
//! graphs, the decomposition-family machinery behind the extremal bounds,
//! brute-force extremal search, and a registry of finite claims verified by
//! exhaustive enumeration over exact rational arithmetic.
//!
//! Everything is sized for desk-scale instances: graphs live on at most 64
//! vertices so vertex sets and adjacency rows are single machine words, all
//! values are immutable after construction, and every public operation is
//! pure and safe to call from concurrent tasks.
//!
//! ```
//! use dfree_core::{count_hfree, named_digraph, named_graph};
//!
//! let g = named_graph("complete:4").unwrap();
//! let h = named_digraph("triangle:cyclic").unwrap();
//! let r = count_hfree(&g, &h).unwrap();
//! assert_eq!(r.hfree.to_string(), "24");
//! assert_eq!(format!("{}", r.p_contains), "5/8");
//! ```

pub mod claims;
pub mod decomp;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod orient;
pub mod text;

pub use embed::{contains_directed, contains_directed_flexible, embeddings_undirected, Embedding};
pub use error::{CapacityError, DecompError, GraphError, ParseError};
pub use graph::{
    canonical_form, chromatic_number, h_of_k, join, make_digraph, make_graph, optimal_partition,
    turan_count, Digraph, Graph, Partition, PartialOrientation,
};
pub use orient::{
    count_hfree, count_hfree_conditioned, count_hfree_naive, count_hfree_with, forbidden_patterns,
    mc_estimate, CountResult, EngineConfig, ForbiddenPattern, Orientation,
};
pub use text::{named_digraph, named_graph, parse_text, TextItem};
