//! Fitch graphs of `{0,1}`-edge-labeled trees.
//!
//! Given a tree whose edges are labeled 0 or 1, its undirected Fitch graph
//! joins two leaves whenever the path between them crosses a 1-edge, and
//! its directed Fitch graph has an arc `(x, y)` whenever a 1-edge lies
//! between `lca(x, y)` and `y`. The undirected Fitch graphs are exactly the
//! complete multipartite graphs, so this crate also recognizes those
//! (with a `K1 ∪ K2` witness on failure) and builds explaining trees.
//!
//! ```
//! use fitch_core::{explain, recognize, undirected_fitch, Explanation, Partition, TreeMode};
//!
//! let graph = Partition::from_sizes(&[2, 2, 1]).unwrap().to_graph();
//! let Explanation::Tree(tree) = explain(&graph, TreeMode::Minimal).unwrap() else {
//!     unreachable!()
//! };
//! assert_eq!(tree.vertex_count(), 7);
//! assert_eq!(undirected_fitch(&tree).unwrap(), graph);
//! assert!(recognize(&graph).unwrap().is_multipartite());
//! ```

pub mod fitch;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod recognition;
mod rooted;
pub mod synthesis;
pub mod tree;

pub use fitch::{directed_fitch, underlying_undirected, undirected_fitch};
pub use graph::{DirectedGraph, GraphError, SimpleGraph};
pub use recognition::{
    recognize, recognize_bruteforce, ForbiddenWitness, Partition, Recognition, RecognitionError,
};
pub use synthesis::{
    canonical_tree, explain, explains, is_least_resolved, minimal_tree, Explanation,
    SynthesisError, TreeMode,
};
pub use tree::{EdgeRef, Label, LabeledTree, TreeError, VertexId, Violation};
