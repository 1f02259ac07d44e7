//! `{0,1}`-edge-labeled trees.
//!
//! A [`LabeledTree`] is an arbitrary tree whose degree-one vertices carry
//! unique names and whose edges carry a [`Label`]. The tree may optionally
//! be rooted at any of its vertices. Construction is unchecked; call
//! [`LabeledTree::validate`] (every operation in this module does so) to
//! confirm the tree invariants.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

use crate::rooted::RootedIndex;

/// Opaque vertex identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// Edge label. A `One` edge marks a transfer event.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Label {
    #[default]
    Zero,
    One,
}

impl Label {
    pub fn is_one(self) -> bool {
        self == Label::One
    }

    /// `One` if either operand is `One`.
    #[must_use]
    pub fn or(self, other: Label) -> Label {
        if self.is_one() || other.is_one() {
            Label::One
        } else {
            Label::Zero
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Label::Zero => '0',
            Label::One => '1',
        }
    }
}

impl From<bool> for Label {
    fn from(one: bool) -> Self {
        if one {
            Label::One
        } else {
            Label::Zero
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// An unordered vertex pair naming an edge. The endpoints are stored in
/// increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    lo: VertexId,
    hi: VertexId,
}

impl EdgeRef {
    pub fn new(u: VertexId, v: VertexId) -> Self {
        if u <= v {
            EdgeRef { lo: u, hi: v }
        } else {
            EdgeRef { lo: v, hi: u }
        }
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.lo, self.hi)
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.lo, self.hi)
    }
}

/// The first tree invariant that a [`LabeledTree`] breaks.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("empty tree")]
    Empty,
    #[error("not connected")]
    NotConnected,
    #[error("contains a cycle")]
    Cycle,
    #[error("unnamed leaf {0}")]
    UnnamedLeaf(VertexId),
    #[error("inner vertex {0} carries a leaf name")]
    NamedInnerVertex(VertexId),
    #[error("empty leaf name at {0}")]
    EmptyLeafName(VertexId),
    #[error("duplicate leaf name `{0}`")]
    DuplicateLeafName(String),
    #[error("root {0} is not a vertex of the tree")]
    RootNotInTree(VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("invalid tree: {0}")]
    Invalid(#[from] Violation),
    #[error("vertex {0} is not in the tree")]
    UnknownVertex(VertexId),
    #[error("edge {0} is not in the tree")]
    UnknownEdge(EdgeRef),
    #[error("edge {0} already present")]
    DuplicateEdge(EdgeRef),
    #[error("self-loop at {0}")]
    SelfLoop(VertexId),
    #[error("unknown leaf name `{0}`")]
    UnknownLeaf(String),
    #[error("expected two distinct leaves, got `{0}` twice")]
    SameLeaf(String),
    #[error("tree is not rooted")]
    Unrooted,
    #[error("leaf root not allowed")]
    LeafRoot,
    #[error("cannot contract leaf edge")]
    LeafEdge,
    #[error("leaf restriction must keep at least one leaf")]
    EmptyRestriction,
    #[error("one label per edge expected, got {got} for {expected} edges")]
    LabelCount { expected: usize, got: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabeledTree {
    adjacency: BTreeMap<VertexId, BTreeMap<VertexId, Label>>,
    names: BTreeMap<VertexId, String>,
    root: Option<VertexId>,
}

impl LabeledTree {
    pub fn new() -> Self {
        Self::default()
    }

    /// The one-vertex tree whose Fitch graph is `K1`.
    pub fn single_leaf(name: impl Into<String>) -> Self {
        let mut tree = Self::new();
        let v = tree.add_vertex();
        tree.names.insert(v, name.into());
        tree.root = Some(v);
        tree
    }

    /// Adds a fresh vertex with the next unused id.
    pub fn add_vertex(&mut self) -> VertexId {
        let id = self.adjacency.keys().next_back().map_or(0, |v| v.0 + 1);
        let v = VertexId(id);
        self.adjacency.insert(v, BTreeMap::new());
        v
    }

    /// Adds a vertex with a caller-chosen id; does nothing if it exists.
    pub fn insert_vertex(&mut self, v: VertexId) {
        self.adjacency.entry(v).or_default();
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, label: Label) -> Result<(), TreeError> {
        if u == v {
            return Err(TreeError::SelfLoop(u));
        }
        for w in [u, v] {
            if !self.adjacency.contains_key(&w) {
                return Err(TreeError::UnknownVertex(w));
            }
        }
        if self.adjacency[&u].contains_key(&v) {
            return Err(TreeError::DuplicateEdge(EdgeRef::new(u, v)));
        }
        self.adjacency.get_mut(&u).unwrap().insert(v, label);
        self.adjacency.get_mut(&v).unwrap().insert(u, label);
        Ok(())
    }

    pub fn set_name(&mut self, v: VertexId, name: impl Into<String>) -> Result<(), TreeError> {
        if !self.adjacency.contains_key(&v) {
            return Err(TreeError::UnknownVertex(v));
        }
        self.names.insert(v, name.into());
        Ok(())
    }

    /// Sets the root without checks; [`validate`](Self::validate) reports a
    /// root outside the tree.
    pub fn set_root(&mut self, root: Option<VertexId>) {
        self.root = root;
    }

    /// Overwrites the label of an existing edge.
    pub fn set_label(&mut self, e: EdgeRef, label: Label) -> Result<(), TreeError> {
        let (u, v) = e.endpoints();
        match self.adjacency.get_mut(&u).and_then(|n| n.get_mut(&v)) {
            Some(l) => *l = label,
            None => return Err(TreeError::UnknownEdge(e)),
        }
        *self.adjacency.get_mut(&v).unwrap().get_mut(&u).unwrap() = label;
        Ok(())
    }

    pub fn root(&self) -> Option<VertexId> {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.values().map(BTreeMap::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency.keys().copied()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.adjacency.contains_key(&v)
    }

    /// All edges with their labels, in increasing [`EdgeRef`] order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeRef, Label)> + '_ {
        self.adjacency.iter().flat_map(|(&u, nbrs)| {
            nbrs.iter()
                .filter(move |(&v, _)| u < v)
                .map(move |(&v, &l)| (EdgeRef::new(u, v), l))
        })
    }

    /// Edges whose endpoints are both non-leaves.
    pub fn inner_edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        self.edges()
            .map(|(e, _)| e)
            .filter(|e| !self.is_leaf(e.lo) && !self.is_leaf(e.hi))
    }

    pub fn label(&self, e: EdgeRef) -> Option<Label> {
        self.adjacency.get(&e.lo)?.get(&e.hi).copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency.get(&v).map_or(0, BTreeMap::len)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, Label)> + '_ {
        self.adjacency
            .get(&v)
            .into_iter()
            .flat_map(|n| n.iter().map(|(&w, &l)| (w, l)))
    }

    /// Vertices of degree at most one. The lone vertex of a one-vertex tree
    /// counts as a leaf.
    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.contains_vertex(v) && self.degree(v) <= 1
    }

    pub fn leaves(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|&v| self.degree(v) <= 1)
    }

    pub fn name(&self, v: VertexId) -> Option<&str> {
        self.names.get(&v).map(String::as_str)
    }

    /// Leaf names in lexicographic order.
    pub fn leaf_names(&self) -> Vec<&str> {
        let mut names: Vec<&str> = self.leaves().filter_map(|v| self.name(v)).collect();
        names.sort_unstable();
        names
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves().count()
    }

    pub fn find_leaf(&self, name: &str) -> Option<VertexId> {
        self.names
            .iter()
            .find(|(_, n)| n.as_str() == name)
            .map(|(&v, _)| v)
            .filter(|&v| self.is_leaf(v))
    }

    fn leaf_or_err(&self, name: &str) -> Result<VertexId, TreeError> {
        self.find_leaf(name)
            .ok_or_else(|| TreeError::UnknownLeaf(name.to_owned()))
    }

    /// Checks every tree invariant and reports the first one that fails.
    pub fn validate(&self) -> Result<(), Violation> {
        let Some(&start) = self.adjacency.keys().next() else {
            return Err(Violation::Empty);
        };

        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in self.adjacency[&u].keys() {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen.len() != self.adjacency.len() {
            return Err(Violation::NotConnected);
        }
        if self.edge_count() + 1 != self.vertex_count() {
            return Err(Violation::Cycle);
        }

        for (&v, nbrs) in &self.adjacency {
            match (nbrs.len() <= 1, self.names.get(&v)) {
                (true, None) => return Err(Violation::UnnamedLeaf(v)),
                (false, Some(_)) => return Err(Violation::NamedInnerVertex(v)),
                (true, Some(name)) if name.is_empty() => return Err(Violation::EmptyLeafName(v)),
                _ => {}
            }
        }
        let mut names = HashSet::new();
        for name in self.names.values() {
            if !names.insert(name.as_str()) {
                return Err(Violation::DuplicateLeafName(name.clone()));
            }
        }

        if let Some(root) = self.root {
            if !self.contains_vertex(root) {
                return Err(Violation::RootNotInTree(root));
            }
        }
        Ok(())
    }

    /// Returns a copy with the edge labels replaced, in [`edges`](Self::edges)
    /// order.
    pub fn with_labels(&self, labels: &[Label]) -> Result<Self, TreeError> {
        let edges: Vec<EdgeRef> = self.edges().map(|(e, _)| e).collect();
        if edges.len() != labels.len() {
            return Err(TreeError::LabelCount {
                expected: edges.len(),
                got: labels.len(),
            });
        }
        let mut out = self.clone();
        for (e, &l) in edges.into_iter().zip(labels) {
            out.set_label(e, l)?;
        }
        Ok(out)
    }

    /// Replaces every maximal chain of degree-2 vertices by a single edge
    /// labeled with the OR of the chain's labels.
    ///
    /// A suppressed root moves to the nearest surviving chain end that is
    /// not a leaf (the smaller id on ties); if the whole tree was a path the
    /// root moves to the smaller end.
    pub fn suppress_degree2(&self) -> Result<Self, TreeError> {
        self.validate()?;

        let mut out = LabeledTree {
            adjacency: BTreeMap::new(),
            names: self.names.clone(),
            root: self.root,
        };
        for v in self.vertices().filter(|&v| self.degree(v) != 2) {
            out.insert_vertex(v);
        }

        let mut root_replacement: Option<(bool, usize, VertexId)> = None;
        for u in self.vertices().filter(|&v| self.degree(v) != 2) {
            for (first, first_label) in self.neighbors(u) {
                let mut prev = u;
                let mut cur = first;
                let mut label = first_label;
                let mut chain = Vec::new();
                while self.degree(cur) == 2 {
                    chain.push(cur);
                    let (next, l) = self
                        .neighbors(cur)
                        .find(|&(w, _)| w != prev)
                        .expect("degree-2 vertex has a second neighbor");
                    label = label.or(l);
                    prev = cur;
                    cur = next;
                }
                if u < cur {
                    out.add_edge(u, cur, label)?;
                }
                if let Some(pos) = self.root.and_then(|r| chain.iter().position(|&c| c == r)) {
                    // prefer inner ends, then the end nearer the suppressed root
                    let key = (self.is_leaf(u), pos + 1, u);
                    if root_replacement.is_none_or(|best| key < best) {
                        root_replacement = Some(key);
                    }
                }
            }
        }
        if let Some((_, _, v)) = root_replacement {
            out.root = Some(v);
        }
        Ok(out)
    }

    pub fn reroot(&self, v: VertexId) -> Result<Self, TreeError> {
        self.validate()?;
        if !self.contains_vertex(v) {
            return Err(TreeError::UnknownVertex(v));
        }
        if self.vertex_count() >= 3 && self.is_leaf(v) {
            return Err(TreeError::LeafRoot);
        }
        let mut out = self.clone();
        out.root = Some(v);
        Ok(out)
    }

    /// Merges the endpoints of an inner edge. The merged vertex keeps the
    /// smaller id and inherits every other incident edge with its label.
    pub fn contract_edge(&self, e: EdgeRef) -> Result<Self, TreeError> {
        self.validate()?;
        if self.label(e).is_none() {
            return Err(TreeError::UnknownEdge(e));
        }
        let (keep, gone) = e.endpoints();
        if self.is_leaf(keep) || self.is_leaf(gone) {
            return Err(TreeError::LeafEdge);
        }

        let mut out = self.clone();
        let moved = out.adjacency.remove(&gone).unwrap();
        out.adjacency.get_mut(&keep).unwrap().remove(&gone);
        for (w, l) in moved {
            if w == keep {
                continue;
            }
            let nbrs = out.adjacency.get_mut(&w).unwrap();
            nbrs.remove(&gone);
            nbrs.insert(keep, l);
            out.adjacency.get_mut(&keep).unwrap().insert(w, l);
        }
        if out.root == Some(gone) {
            out.root = Some(keep);
        }
        Ok(out)
    }

    /// Splits edge `e` by a new vertex. `near` labels the half incident to
    /// the smaller endpoint of `e`, `far` the other half.
    pub fn subdivide_edge(
        &self,
        e: EdgeRef,
        near: Label,
        far: Label,
    ) -> Result<(Self, VertexId), TreeError> {
        if self.label(e).is_none() {
            return Err(TreeError::UnknownEdge(e));
        }
        let (lo, hi) = e.endpoints();
        let mut out = self.clone();
        out.adjacency.get_mut(&lo).unwrap().remove(&hi);
        out.adjacency.get_mut(&hi).unwrap().remove(&lo);
        let mid = out.add_vertex();
        out.add_edge(lo, mid, near)?;
        out.add_edge(mid, hi, far)?;
        Ok((out, mid))
    }

    /// Restricts the tree to the named leaves: every other leaf is deleted,
    /// unnamed leaves left behind are pruned, and degree-2 vertices are
    /// suppressed. A rooted tree is re-rooted at the last common ancestor of
    /// the kept leaves before suppression.
    pub fn restrict(&self, keep: &[&str]) -> Result<Self, TreeError> {
        self.validate()?;
        if keep.is_empty() {
            return Err(TreeError::EmptyRestriction);
        }
        let kept: BTreeSet<VertexId> = keep
            .iter()
            .map(|name| self.leaf_or_err(name))
            .collect::<Result<_, _>>()?;

        let new_root = match self.root {
            Some(_) => {
                let index = RootedIndex::new(self)?;
                let mut it = kept.iter().map(|&v| index.dense(v));
                let first = it.next().unwrap();
                Some(index.id(it.fold(first, |acc, v| index.lca(acc, v))))
            }
            None => None,
        };

        let mut out = self.clone();
        out.root = new_root;
        let mut stack: Vec<VertexId> = self.leaves().filter(|v| !kept.contains(v)).collect();
        while let Some(v) = stack.pop() {
            if kept.contains(&v) || out.degree(v) > 1 || !out.contains_vertex(v) {
                continue;
            }
            if out.vertex_count() == 1 {
                break;
            }
            let nbrs = out.adjacency.remove(&v).unwrap();
            out.names.remove(&v);
            for w in nbrs.into_keys() {
                out.adjacency.get_mut(&w).unwrap().remove(&v);
                stack.push(w);
            }
        }
        if kept.len() == 1 {
            let only = *kept.iter().next().unwrap();
            out.root = self.root.map(|_| only);
        }
        out.suppress_degree2()
    }

    /// OR of the labels on the unique path between two distinct leaves.
    pub fn path_label_or(&self, x: &str, y: &str) -> Result<Label, TreeError> {
        self.validate()?;
        let from = self.leaf_or_err(x)?;
        let to = self.leaf_or_err(y)?;
        if from == to {
            return Err(TreeError::SameLeaf(x.to_owned()));
        }
        let mut stack = vec![(from, from, Label::Zero)];
        while let Some((v, parent, acc)) = stack.pop() {
            if v == to {
                return Ok(acc);
            }
            for (w, l) in self.neighbors(v).filter(|&(w, _)| w != parent) {
                stack.push((w, v, acc.or(l)));
            }
        }
        unreachable!("validated trees are connected")
    }

    /// Last common ancestor of two leaves of a rooted tree.
    pub fn lca(&self, x: &str, y: &str) -> Result<VertexId, TreeError> {
        self.validate()?;
        if self.root.is_none() {
            return Err(TreeError::Unrooted);
        }
        let a = self.leaf_or_err(x)?;
        let b = self.leaf_or_err(y)?;
        let index = RootedIndex::new(self)?;
        Ok(index.id(index.lca(index.dense(a), index.dense(b))))
    }
}
