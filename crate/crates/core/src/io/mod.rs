//! Text formats: labeled Newick for trees, edge lists for graphs, and DOT
//! export.

mod dot;
mod edgelist;
mod newick;

pub use dot::{digraph_to_dot, graph_to_dot, tree_to_dot};
pub use edgelist::{
    parse_edgelist, serialize_arclist, serialize_edgelist, EdgeListError, EdgeListErrorKind,
};
pub use newick::{parse_newick, serialize_newick, NewickError, NewickErrorKind, NewickWriteError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Newick,
    EdgeList,
}

/// Tells the formats apart by the first token: edge lists open with
/// `vertices:` (after any comment or blank lines), anything else is taken
/// as Newick. `None` for input with no content.
pub fn detect_format(text: &str) -> Option<Format> {
    let first = text
        .lines()
        .map(str::trim_start)
        .find(|l| !l.is_empty() && !l.starts_with('#'))?;
    if first.starts_with("vertices:") {
        Some(Format::EdgeList)
    } else {
        Some(Format::Newick)
    }
}
