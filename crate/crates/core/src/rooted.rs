//! Dense rooted view of a [`LabeledTree`] answering LCA and
//! "1-edges above" queries.

use std::collections::HashMap;

use crate::tree::{LabeledTree, TreeError, VertexId};

pub(crate) struct RootedIndex {
    ids: Vec<VertexId>,
    dense: HashMap<VertexId, usize>,
    depth: Vec<usize>,
    /// Number of `One` edges on the path from the root.
    ones: Vec<usize>,
    /// `up[k][v]` is the 2^k-th ancestor of `v` (the root maps to itself).
    up: Vec<Vec<usize>>,
}

impl RootedIndex {
    /// Indexes a validated tree at its own root.
    pub(crate) fn new(tree: &LabeledTree) -> Result<Self, TreeError> {
        let root = tree.root().ok_or(TreeError::Unrooted)?;
        Ok(Self::at(tree, root))
    }

    pub(crate) fn at(tree: &LabeledTree, root: VertexId) -> Self {
        let n = tree.vertex_count();
        let mut ids = Vec::with_capacity(n);
        let mut dense = HashMap::with_capacity(n);
        let mut parent = Vec::with_capacity(n);
        let mut depth = Vec::with_capacity(n);
        let mut ones = Vec::with_capacity(n);

        dense.insert(root, 0);
        ids.push(root);
        parent.push(0);
        depth.push(0);
        ones.push(0);
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            let v = ids[i];
            for (w, label) in tree.neighbors(v) {
                if dense.contains_key(&w) {
                    continue;
                }
                let j = ids.len();
                dense.insert(w, j);
                ids.push(w);
                parent.push(i);
                depth.push(depth[i] + 1);
                ones.push(ones[i] + usize::from(label.is_one()));
                stack.push(j);
            }
        }

        let levels = (usize::BITS - n.max(1).leading_zeros()) as usize;
        let mut up = vec![parent];
        for k in 1..levels.max(1) {
            let prev = &up[k - 1];
            let next = (0..n).map(|v| prev[prev[v]]).collect();
            up.push(next);
        }

        RootedIndex {
            ids,
            dense,
            depth,
            ones,
            up,
        }
    }

    pub(crate) fn dense(&self, v: VertexId) -> usize {
        self.dense[&v]
    }

    pub(crate) fn id(&self, i: usize) -> VertexId {
        self.ids[i]
    }

    pub(crate) fn ones(&self, i: usize) -> usize {
        self.ones[i]
    }

    pub(crate) fn lca(&self, mut a: usize, mut b: usize) -> usize {
        if self.depth[a] < self.depth[b] {
            std::mem::swap(&mut a, &mut b);
        }
        let mut diff = self.depth[a] - self.depth[b];
        let mut k = 0;
        while diff > 0 {
            if diff & 1 == 1 {
                a = self.up[k][a];
            }
            diff >>= 1;
            k += 1;
        }
        if a == b {
            return a;
        }
        for level in self.up.iter().rev() {
            if level[a] != level[b] {
                a = level[a];
                b = level[b];
            }
        }
        self.up[0][a]
    }
}
