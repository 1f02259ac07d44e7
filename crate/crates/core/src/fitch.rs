//! Undirected and directed Fitch graphs of an edge-labeled tree.
//!
//! Both are computed from one rooted traversal: with `ones(v)` the number
//! of 1-edges between the root and `v`, the path `lca(x, y) -> y` carries a
//! 1-edge iff `ones(y) > ones(lca)`, and the whole `x`–`y` path does iff
//! `ones(x) + ones(y) > 2 ones(lca)`. All leaf pairs are visited, so the
//! cost is quadratic in the number of leaves.

use crate::graph::{DirectedGraph, SimpleGraph};
use crate::rooted::RootedIndex;
use crate::tree::{LabeledTree, TreeError, VertexId};

/// Leaves sorted by name, with their names, and a rooted index.
fn prepare(tree: &LabeledTree, root: VertexId) -> (Vec<String>, Vec<usize>, RootedIndex) {
    let mut leaves: Vec<(String, VertexId)> = tree
        .leaves()
        .map(|v| (tree.name(v).expect("validated leaf").to_owned(), v))
        .collect();
    leaves.sort_unstable();
    let index = RootedIndex::at(tree, root);
    let dense = leaves.iter().map(|&(_, v)| index.dense(v)).collect();
    let names = leaves.into_iter().map(|(n, _)| n).collect();
    (names, dense, index)
}

/// Graph on the leaf names with `{x, y}` an edge iff the tree path between
/// `x` and `y` contains a 1-edge.
pub fn undirected_fitch(tree: &LabeledTree) -> Result<SimpleGraph, TreeError> {
    tree.validate()?;
    // Any vertex works as a root here; prefer the tree's own, else an inner one.
    let root = tree
        .root()
        .or_else(|| tree.vertices().find(|&v| !tree.is_leaf(v)))
        .or_else(|| tree.vertices().next())
        .expect("validated tree is non-empty");
    let (names, leaves, index) = prepare(tree, root);

    let n = leaves.len();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (leaves[i], leaves[j]);
            let top = index.lca(x, y);
            if index.ones(x) + index.ones(y) > 2 * index.ones(top) {
                adj[i].push(j as u32);
                adj[j].push(i as u32);
            }
        }
    }
    Ok(SimpleGraph::from_parts(names, adj))
}

/// Digraph on the leaf names with an arc `(x, y)` iff the path from
/// `lca(x, y)` down to `y` contains a 1-edge.
pub fn directed_fitch(tree: &LabeledTree) -> Result<DirectedGraph, TreeError> {
    tree.validate()?;
    let root = tree.root().ok_or(TreeError::Unrooted)?;
    let (names, leaves, index) = prepare(tree, root);

    let n = leaves.len();
    let out = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| {
                    j != i && {
                        let top = index.lca(leaves[i], leaves[j]);
                        index.ones(leaves[j]) > index.ones(top)
                    }
                })
                .map(|j| j as u32)
                .collect()
        })
        .collect();
    Ok(DirectedGraph::from_parts(names, out))
}

/// Forgets arc directions.
pub fn underlying_undirected(d: &DirectedGraph) -> SimpleGraph {
    let n = d.vertex_count();
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    for i in 0..n {
        for &j in d.successors(i) {
            adj[i].push(j);
            adj[j as usize].push(i as u32);
        }
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    SimpleGraph::from_parts(d.names().to_vec(), adj)
}
