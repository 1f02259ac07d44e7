//! Complete multipartite recognition.
//!
//! A graph is complete multipartite iff it has no induced `K1 ∪ K2`. On
//! acceptance we return the partition into independent sets; on rejection
//! a three-vertex witness.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::graph::SimpleGraph;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("empty graph")]
    EmptyGraph,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition has no blocks")]
    NoBlocks,
    #[error("empty block")]
    EmptyBlock,
    #[error("`{0}` appears in more than one block")]
    Overlap(String),
}

/// Ordered independent sets `V1, …, Vk` of a complete multipartite graph.
///
/// Canonical order: members sorted within each block; blocks by decreasing
/// size, ties broken by the smallest member.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    blocks: Vec<Vec<String>>,
}

impl Partition {
    pub fn new<B, S>(blocks: impl IntoIterator<Item = B>) -> Result<Self, PartitionError>
    where
        B: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let blocks: Vec<Vec<String>> = blocks
            .into_iter()
            .map(|b| b.into_iter().map(Into::into).collect())
            .collect();
        if blocks.is_empty() {
            return Err(PartitionError::NoBlocks);
        }
        if blocks.iter().any(Vec::is_empty) {
            return Err(PartitionError::EmptyBlock);
        }
        let mut all: Vec<&String> = blocks.iter().flatten().collect();
        all.sort_unstable();
        if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
            return Err(PartitionError::Overlap(w[0].clone()));
        }
        Ok(Self::canonical(blocks))
    }

    fn canonical(mut blocks: Vec<Vec<String>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x[0].cmp(&y[0])));
        Partition { blocks }
    }

    /// Blocks of the given sizes over generated names (see
    /// [`default_names`]), assigned in order.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self, PartitionError> {
        let names = default_names(sizes.iter().sum());
        let mut it = names.into_iter();
        Self::new(
            sizes
                .iter()
                .map(|&s| it.by_ref().take(s).collect::<Vec<_>>()),
        )
    }

    pub fn blocks(&self) -> &[Vec<String>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// `Σ_{i<j} n_i n_j`, the edge count of the complete multipartite graph.
    pub fn cross_pair_count(&self) -> u64 {
        cross_pairs(self.blocks.iter().map(|b| b.len() as u64))
    }

    /// The complete multipartite graph with these blocks as its independent
    /// sets.
    pub fn to_graph(&self) -> SimpleGraph {
        let mut names: Vec<(String, usize)> = self
            .blocks
            .iter()
            .enumerate()
            .flat_map(|(b, members)| members.iter().map(move |m| (m.clone(), b)))
            .collect();
        names.sort_unstable();
        let block_of: Vec<usize> = names.iter().map(|&(_, b)| b).collect();
        // every member of a block has the same neighbourhood: all other blocks
        let outside: Vec<Vec<u32>> = (0..self.blocks.len())
            .map(|b| {
                (0..names.len() as u32)
                    .filter(|&j| block_of[j as usize] != b)
                    .collect()
            })
            .collect();
        let adj = block_of.iter().map(|&b| outside[b].clone()).collect();
        SimpleGraph::from_parts(names.into_iter().map(|(n, _)| n).collect(), adj)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{{{}}}", b.join(" "))?;
        }
        Ok(())
    }
}

fn cross_pairs(sizes: impl Iterator<Item = u64>) -> u64 {
    let (total, squares) = sizes.fold((0u64, 0u64), |(t, s), n| (t + n, s + n * n));
    (total * total - squares) / 2
}

/// `a, b, …, z` for up to 26 vertices, `v0, v1, …` beyond.
pub fn default_names(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect()
    } else {
        (0..n).map(|i| format!("v{i}")).collect()
    }
}

/// Three vertices inducing `K1 ∪ K2`: `pair` is an edge and `isolated` is
/// adjacent to neither endpoint.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ForbiddenWitness {
    pub isolated: String,
    pub pair: (String, String),
}

impl ForbiddenWitness {
    fn new(isolated: &str, x: &str, y: &str) -> Self {
        let pair = if x <= y { (x, y) } else { (y, x) };
        ForbiddenWitness {
            isolated: isolated.to_owned(),
            pair: (pair.0.to_owned(), pair.1.to_owned()),
        }
    }

    /// True iff the three vertices are distinct and induce exactly the edge
    /// `pair` in `g`.
    pub fn holds_in(&self, g: &SimpleGraph) -> bool {
        let (x, y) = (&self.pair.0, &self.pair.1);
        let w = &self.isolated;
        w != x
            && w != y
            && x != y
            && g.contains_vertex(w)
            && g.has_edge(x, y)
            && !g.has_edge(w, x)
            && !g.has_edge(w, y)
    }
}

impl fmt::Display for ForbiddenWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}--{}", self.isolated, self.pair.0, self.pair.1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recognition {
    Multipartite(Partition),
    Forbidden(ForbiddenWitness),
}

impl Recognition {
    pub fn is_multipartite(&self) -> bool {
        matches!(self, Recognition::Multipartite(_))
    }

    pub fn partition(&self) -> Option<&Partition> {
        match self {
            Recognition::Multipartite(p) => Some(p),
            Recognition::Forbidden(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&ForbiddenWitness> {
        match self {
            Recognition::Forbidden(w) => Some(w),
            Recognition::Multipartite(_) => None,
        }
    }
}

fn partition_from_indices(g: &SimpleGraph, mut blocks: Vec<Vec<usize>>) -> Partition {
    // indices follow name order, so sorting by index sorts by name
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x[0].cmp(&y[0])));
    let names = g.names();
    Partition {
        blocks: blocks
            .into_iter()
            .map(|b| b.into_iter().map(|i| names[i].clone()).collect())
            .collect(),
    }
}

/// Decides whether `g` is complete multipartite.
///
/// Vertices are grouped by identical neighborhoods. The classes are
/// independent (two adjacent vertices with equal neighborhoods would need
/// self-loops), so every edge joins two classes, and `g` is complete
/// multipartite exactly when the edge count reaches `Σ_{i<j} n_i n_j`.
/// Runs in expected `O(|V| + |E|)`.
///
/// On rejection the witness is the lexicographically smallest
/// `(isolated, pair)` triple.
pub fn recognize(g: &SimpleGraph) -> Result<Recognition, RecognitionError> {
    if g.is_empty() {
        return Err(RecognitionError::EmptyGraph);
    }
    let n = g.vertex_count();
    let mut class_of: HashMap<&[u32], usize> = HashMap::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let next = blocks.len();
        let c = *class_of.entry(g.neighbors(v)).or_insert(next);
        if c == next {
            blocks.push(Vec::new());
        }
        blocks[c].push(v);
    }

    if cross_pairs(blocks.iter().map(|b| b.len() as u64)) == g.edge_count() as u64 {
        Ok(Recognition::Multipartite(partition_from_indices(g, blocks)))
    } else {
        Ok(Recognition::Forbidden(smallest_witness(g)))
    }
}

/// Smallest `(isolated, x, y)` with `x < y` adjacent and `isolated`
/// adjacent to neither. Only called on graphs known to contain one.
fn smallest_witness(g: &SimpleGraph) -> ForbiddenWitness {
    let n = g.vertex_count();
    let mut outside = vec![true; n];
    for w in 0..n {
        outside.fill(true);
        outside[w] = false;
        for &u in g.neighbors(w) {
            outside[u as usize] = false;
        }
        for x in (0..n).filter(|&x| outside[x]) {
            let hit = g
                .neighbors(x)
                .iter()
                .map(|&y| y as usize)
                .find(|&y| y > x && outside[y]);
            if let Some(y) = hit {
                let names = g.names();
                return ForbiddenWitness::new(&names[w], &names[x], &names[y]);
            }
        }
    }
    unreachable!("graph failed the edge-count test but has no K1 ∪ K2")
}

/// Cubic reference recognizer over a dense adjacency matrix.
///
/// Scans every vertex triple for an induced `K1 ∪ K2`. If there is none,
/// the blocks are the connected components of the complement.
pub fn recognize_bruteforce(g: &SimpleGraph) -> Result<Recognition, RecognitionError> {
    if g.is_empty() {
        return Err(RecognitionError::EmptyGraph);
    }
    let n = g.vertex_count();
    let words = n.div_ceil(64);
    let mut rows = vec![0u64; n * words];
    for i in 0..n {
        for &j in g.neighbors(i) {
            rows[i * words + j as usize / 64] |= 1 << (j % 64);
        }
    }
    let row = |i: usize| &rows[i * words..(i + 1) * words];
    let bit = |i: usize, j: usize| row(i)[j / 64] >> (j % 64) & 1 == 1;

    for w in 0..n {
        for x in (0..n).filter(|&x| x != w && !bit(w, x)) {
            // any y > x, y != w, adjacent to x and not to w
            for (k, (&rx, &rw)) in row(x).iter().zip(row(w)).enumerate() {
                let mut cand = rx & !rw;
                if k == w / 64 {
                    cand &= !(1u64 << (w % 64));
                }
                let lo = k * 64;
                if lo + 64 <= x + 1 {
                    continue;
                }
                if lo <= x {
                    let shift = x + 1 - lo;
                    cand &= if shift >= 64 { 0 } else { !0u64 << shift };
                }
                if cand != 0 {
                    let y = lo + cand.trailing_zeros() as usize;
                    let names = g.names();
                    return Ok(Recognition::Forbidden(ForbiddenWitness::new(
                        &names[w], &names[x], &names[y],
                    )));
                }
            }
        }
    }

    // union-find over non-edges
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for i in 0..n {
        for j in i + 1..n {
            if !bit(i, j) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        by_root.entry(r).or_default().push(v);
    }
    Ok(Recognition::Multipartite(partition_from_indices(
        g,
        by_root.into_values().collect(),
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(vertices: &[&str], edges: &[(&str, &str)]) -> SimpleGraph {
        SimpleGraph::from_edges(vertices.iter().copied(), edges.iter().copied()).unwrap()
    }

    fn both(g: &SimpleGraph) -> (Recognition, Recognition) {
        (recognize(g).unwrap(), recognize_bruteforce(g).unwrap())
    }

    #[test]
    fn p3_is_k21() {
        let g = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let expected = Partition::new([vec!["a", "c"], vec!["b"]]).unwrap();
        let (fast, slow) = both(&g);
        assert_eq!(fast, Recognition::Multipartite(expected.clone()));
        assert_eq!(slow, Recognition::Multipartite(expected));
    }

    #[test]
    fn k1_plus_k2_is_rejected() {
        let g = graph(&["a", "b", "c"], &[("b", "c")]);
        let expected = ForbiddenWitness::new("a", "b", "c");
        let (fast, slow) = both(&g);
        assert_eq!(fast, Recognition::Forbidden(expected.clone()));
        assert_eq!(slow, Recognition::Forbidden(expected));
        assert_eq!(fast.witness().unwrap().to_string(), "a | b--c");
    }

    #[test]
    fn k3211_sizes() {
        let p = Partition::from_sizes(&[3, 2, 1, 1]).unwrap();
        let g = p.to_graph();
        assert_eq!(g.vertex_count(), 7);
        let (fast, slow) = both(&g);
        assert_eq!(fast.partition().unwrap().sizes(), vec![3, 2, 1, 1]);
        assert_eq!(fast.partition(), Some(&p));
        assert_eq!(slow.partition(), Some(&p));
    }

    #[test]
    fn p4_smallest_witness() {
        let g = graph(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]);
        let (fast, slow) = both(&g);
        let expected = ForbiddenWitness::new("a", "c", "d");
        assert_eq!(fast.witness(), Some(&expected));
        assert_eq!(slow.witness(), Some(&expected));
    }

    #[test]
    fn edgeless_is_one_block() {
        let g = SimpleGraph::new(["d", "a", "c", "b"]).unwrap();
        let (fast, slow) = both(&g);
        let p = fast.partition().unwrap();
        assert_eq!(p.blocks(), [vec!["a", "b", "c", "d"]]);
        assert_eq!(slow.partition(), Some(p));
    }

    #[test]
    fn complete_graph_is_all_singletons() {
        let p = Partition::new([["a"], ["b"], ["c"], ["d"]]).unwrap();
        let g = p.to_graph();
        assert_eq!(g.edge_count(), 6);
        let (fast, slow) = both(&g);
        assert_eq!(fast.partition().unwrap().sizes(), vec![1; 4]);
        assert_eq!(slow.partition().unwrap().sizes(), vec![1; 4]);
    }

    #[test]
    fn c5_is_rejected() {
        let g = graph(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("a", "e")],
        );
        let (fast, slow) = both(&g);
        for r in [fast, slow] {
            assert!(r.witness().unwrap().holds_in(&g));
        }
    }

    #[test]
    fn empty_graph_errors() {
        let g = SimpleGraph::new(Vec::<String>::new()).unwrap();
        assert_eq!(recognize(&g), Err(RecognitionError::EmptyGraph));
        assert_eq!(recognize_bruteforce(&g), Err(RecognitionError::EmptyGraph));
        assert_eq!(RecognitionError::EmptyGraph.to_string(), "empty graph");
    }

    #[test]
    fn partition_validation() {
        assert_eq!(
            Partition::new([vec!["a"], vec!["a", "b"]]),
            Err(PartitionError::Overlap("a".into()))
        );
        assert_eq!(
            Partition::new([Vec::<String>::new()]),
            Err(PartitionError::EmptyBlock)
        );
        let p = Partition::new([vec!["z"], vec!["c", "b"], vec!["a"]]).unwrap();
        assert_eq!(p.to_string(), "{b c} {a} {z}");
        assert_eq!(p.cross_pair_count(), 5);
        assert_eq!(p.to_graph().edge_count(), 5);
    }

    #[test]
    fn bruteforce_handles_word_boundaries() {
        // 130 vertices: edge between 0 and 129 only, so witness is (1, 0, 129)
        let names = default_names(130);
        let g = SimpleGraph::from_edges(names.clone(), [(names[0].clone(), names[129].clone())])
            .unwrap();
        let (fast, slow) = both(&g);
        assert_eq!(fast, slow);
        assert!(slow.witness().unwrap().holds_in(&g));
    }
}
