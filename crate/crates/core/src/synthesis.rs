//! Explaining trees for complete multipartite graphs.

use thiserror::Error;

use crate::fitch::undirected_fitch;
use crate::graph::SimpleGraph;
use crate::recognition::{recognize, ForbiddenWitness, Partition, Recognition, RecognitionError};
use crate::tree::{EdgeRef, Label, LabeledTree, TreeError, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SynthesisError {
    #[error("tree does not explain graph")]
    NotExplained,
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Recognition(#[from] RecognitionError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TreeMode {
    #[default]
    Canonical,
    Minimal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Explanation {
    Tree(LabeledTree),
    Forbidden(ForbiddenWitness),
}

fn attach_leaf(tree: &mut LabeledTree, parent: VertexId, name: &str, label: Label) -> VertexId {
    let v = tree.add_vertex();
    tree.set_name(v, name).expect("fresh vertex");
    tree.add_edge(parent, v, label).expect("fresh edge");
    v
}

/// The tree `T[n1, …, nk]` with its canonical labeling, rooted at `r`.
///
/// With one block the result is the all-0 star on its members (a single
/// vertex for one member). Otherwise the root gets one child per block:
/// the member itself for a singleton block, else an inner vertex carrying
/// the members as leaves. Root edges are labeled 1, all others 0.
///
/// Vertex ids: the root is `v0`, then each block's child followed by its
/// leaves, in canonical block order.
pub fn canonical_tree(p: &Partition) -> LabeledTree {
    let blocks = p.blocks();
    if let [only] = blocks {
        if let [name] = only.as_slice() {
            return LabeledTree::single_leaf(name.as_str());
        }
        let mut tree = LabeledTree::new();
        let center = tree.add_vertex();
        for name in only {
            attach_leaf(&mut tree, center, name, Label::Zero);
        }
        tree.set_root(Some(center));
        return tree;
    }

    let mut tree = LabeledTree::new();
    let root = tree.add_vertex();
    for block in blocks {
        if let [name] = block.as_slice() {
            attach_leaf(&mut tree, root, name, Label::One);
        } else {
            let child = tree.add_vertex();
            tree.add_edge(root, child, Label::One).expect("fresh edge");
            for name in block {
                attach_leaf(&mut tree, child, name, Label::Zero);
            }
        }
    }
    tree.set_root(Some(root));
    tree
}

/// A vertex-minimum explaining tree.
///
/// Two-vertex graphs get the single edge (label 0 for `K̄2`, 1 for `K2`),
/// rooted at the smaller name. Stars are returned unchanged. Otherwise the
/// root edge to the inner child of the first (largest) block is contracted
/// and the merged vertex stays the root.
pub fn minimal_tree(p: &Partition) -> LabeledTree {
    let names: Vec<&String> = p.blocks().iter().flatten().collect();
    if let [x, y] = names.as_slice() {
        let (a, b) = if x <= y { (x, y) } else { (y, x) };
        let mut tree = LabeledTree::new();
        let root = tree.add_vertex();
        tree.set_name(root, a.as_str()).expect("fresh vertex");
        attach_leaf(&mut tree, root, b, Label::from(p.block_count() == 2));
        tree.set_root(Some(root));
        return tree;
    }

    let tree = canonical_tree(p);
    if p.block_count() == 1 || p.sizes().iter().all(|&n| n == 1) {
        return tree;
    }
    // canonical order puts the largest block first and its child at v1
    let root = VertexId(0);
    let child = VertexId(1);
    debug_assert!(!tree.is_leaf(child));
    tree.contract_edge(EdgeRef::new(root, child))
        .expect("root edge to an inner child is contractible")
}

pub fn explains(tree: &LabeledTree, g: &SimpleGraph) -> Result<bool, TreeError> {
    Ok(undirected_fitch(tree)? == *g)
}

/// True iff contracting any inner edge of `tree` changes its Fitch graph.
pub fn is_least_resolved(tree: &LabeledTree, g: &SimpleGraph) -> Result<bool, SynthesisError> {
    if !explains(tree, g)? {
        return Err(SynthesisError::NotExplained);
    }
    for e in tree.inner_edges() {
        if undirected_fitch(&tree.contract_edge(e)?)? == *g {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Recognizes `g` and builds an explaining tree, or returns the obstruction.
pub fn explain(g: &SimpleGraph, mode: TreeMode) -> Result<Explanation, SynthesisError> {
    Ok(match recognize(g)? {
        Recognition::Multipartite(p) => Explanation::Tree(match mode {
            TreeMode::Canonical => canonical_tree(&p),
            TreeMode::Minimal => minimal_tree(&p),
        }),
        Recognition::Forbidden(w) => Explanation::Forbidden(w),
    })
}
