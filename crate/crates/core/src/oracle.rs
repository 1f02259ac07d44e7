//! Exhaustive ground truth on few leaves.
//!
//! Enumerates every unrooted tree on `n` named leaves whose inner vertices
//! have degree at least three, together with every `{0,1}` edge labeling,
//! and collects the Fitch graphs they realize. The result is compared with
//! the graphs accepted by [`recognize`](crate::recognition::recognize).

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::fitch::{directed_fitch, underlying_undirected, undirected_fitch};
use crate::graph::SimpleGraph;
use crate::recognition::{default_names, recognize, Partition, RecognitionError};
use crate::tree::{EdgeRef, Label, LabeledTree, TreeError, VertexId};

/// Largest leaf count accepted by [`enumerate_trees`].
pub const MAX_TOPOLOGY_LEAVES: usize = 6;
/// Largest leaf count accepted by the realizability checks.
pub const MAX_REALIZABILITY_LEAVES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n out of supported range: {n} not in {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },
    #[error("graph is not complete multipartite")]
    NotMultipartite,
    #[error(transparent)]
    Recognition(#[from] RecognitionError),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

fn check_range(n: usize, min: usize, max: usize) -> Result<(), OracleError> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(OracleError::OutOfRange { n, min, max })
    }
}

/// Every tree topology on leaves `a, b, …` (all labels 0, unrooted).
pub fn enumerate_trees(n: usize) -> Result<Vec<LabeledTree>, OracleError> {
    check_range(n, 2, MAX_TOPOLOGY_LEAVES)?;
    Ok(enumerate_trees_on(&default_names(n)))
}

/// Edge list over leaves `0..n` and inner vertices `n..`.
type Topology = Vec<(usize, usize)>;

/// Splits (leaf sets on the side away from leaf 0) identify a topology.
fn split_signature(edges: &Topology, leaves: usize) -> Vec<u32> {
    let vertices = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0) + 1;
    let mut adj = vec![Vec::new(); vertices];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut splits: Vec<u32> = edges
        .iter()
        .map(|&(u, v)| {
            // leaves reachable from v without crossing (u, v)
            let mut mask = 0u32;
            let mut stack = vec![(v, u)];
            while let Some((x, from)) = stack.pop() {
                if x < leaves {
                    mask |= 1 << x;
                }
                stack.extend(adj[x].iter().filter(|&&y| y != from).map(|&y| (y, x)));
            }
            let all = (1u32 << leaves) - 1;
            if mask & 1 == 1 {
                all & !mask
            } else {
                mask
            }
        })
        .collect();
    splits.sort_unstable();
    splits
}

/// Topologies on the given leaf names, built by inserting leaves one at a
/// time: the new leaf either subdivides an edge or hangs off an existing
/// inner vertex.
pub fn enumerate_trees_on<S: AsRef<str>>(names: &[S]) -> Vec<LabeledTree> {
    let n = names.len();
    assert!((2..=32).contains(&n), "need between 2 and 32 leaves");

    let mut current: Vec<(Topology, usize)> = vec![(vec![(0, 1)], 0)];
    for leaf in 2..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for (edges, inner) in &current {
            let mut push = |t: Topology, inner: usize| {
                if seen.insert(split_signature(&t, leaf + 1)) {
                    next.push((t, inner));
                }
            };
            for (i, &(u, v)) in edges.iter().enumerate() {
                let w = n + inner;
                let mut t = edges.clone();
                t[i] = (u, w);
                t.extend([(w, v), (w, leaf)]);
                push(t, inner + 1);
            }
            for w in n..n + inner {
                let mut t = edges.clone();
                t.push((w, leaf));
                push(t, *inner);
            }
        }
        current = next;
    }

    current
        .into_iter()
        .map(|(edges, inner)| {
            let mut tree = LabeledTree::new();
            for v in 0..n + inner {
                tree.insert_vertex(VertexId(v));
            }
            for (i, name) in names.iter().enumerate() {
                tree.set_name(VertexId(i), name.as_ref())
                    .expect("leaf exists");
            }
            for (u, v) in edges {
                tree.add_edge(VertexId(u), VertexId(v), Label::Zero)
                    .expect("topology edges are distinct");
            }
            tree
        })
        .collect()
}

/// Every `{0,1}` labeling of `tree`'s edges, in binary counting order.
pub fn labelings(tree: &LabeledTree) -> impl Iterator<Item = LabeledTree> + '_ {
    let m = tree.edge_count();
    (0u64..1 << m).map(move |mask| {
        let labels: Vec<Label> = (0..m).map(|i| Label::from(mask >> i & 1 == 1)).collect();
        tree.with_labels(&labels).expect("label count matches")
    })
}

/// Bell number via the Bell triangle.
pub fn bell_number(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

/// All set partitions of `names`, via restricted growth strings.
pub fn set_partitions<S: AsRef<str>>(names: &[S]) -> Vec<Partition> {
    let n = names.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut growth = vec![0usize; n];
    loop {
        let k = growth.iter().max().unwrap() + 1;
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in growth.iter().enumerate() {
            blocks[b].push(names[i].as_ref().to_owned());
        }
        out.push(Partition::new(blocks).expect("growth string gives a partition"));

        // next growth string: bump the rightmost position that may grow
        let mut i = n - 1;
        loop {
            if i == 0 {
                return out;
            }
            let limit = growth[..i].iter().max().unwrap() + 1;
            if growth[i] < limit {
                growth[i] += 1;
                growth[i + 1..].fill(0);
                break;
            }
            i -= 1;
        }
    }
}

/// Every simple graph on the given vertex names.
pub fn all_graphs<S: AsRef<str>>(names: &[S]) -> Vec<SimpleGraph> {
    let n = names.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(b, _)| mask >> b & 1 == 1)
                .map(|(_, &(i, j))| (names[i].as_ref(), names[j].as_ref()));
            SimpleGraph::from_edges(names.iter().map(|s| s.as_ref()), edges)
                .expect("distinct names")
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    pub leaf_count: usize,
    pub topology_count: usize,
    /// Total number of (topology, labeling) pairs examined.
    pub labeling_count: usize,
    pub realizable_graphs: BTreeSet<SimpleGraph>,
    /// Bell number of `leaf_count`.
    pub expected_count: u64,
}

impl EnumerationReport {
    /// Plain `key: value` lines, optionally followed by one line per
    /// realizable graph.
    pub fn to_text(&self, list_graphs: bool) -> String {
        let mut s = String::new();
        writeln!(s, "leaf_count: {}", self.leaf_count).unwrap();
        writeln!(s, "topology_count: {}", self.topology_count).unwrap();
        writeln!(s, "labeling_count: {}", self.labeling_count).unwrap();
        writeln!(s, "realizable_count: {}", self.realizable_graphs.len()).unwrap();
        writeln!(s, "expected_count: {}", self.expected_count).unwrap();
        if list_graphs {
            for g in &self.realizable_graphs {
                let edges: Vec<String> = g.edges().map(|(a, b)| format!("{a}-{b}")).collect();
                writeln!(s, "graph: {}", edges.join(" ")).unwrap();
            }
        }
        s
    }
}

pub fn realizable_graphs(n: usize) -> Result<EnumerationReport, OracleError> {
    check_range(n, 2, MAX_REALIZABILITY_LEAVES)?;
    let topologies = enumerate_trees(n)?;
    let mut graphs = BTreeSet::new();
    let mut labeling_count = 0;
    for t in &topologies {
        for labeled in labelings(t) {
            graphs.insert(undirected_fitch(&labeled)?);
            labeling_count += 1;
        }
    }
    Ok(EnumerationReport {
        leaf_count: n,
        topology_count: topologies.len(),
        labeling_count,
        realizable_graphs: graphs,
        expected_count: bell_number(n),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureDirection {
    /// Some tree realizes a graph that recognition rejects.
    RealizableButRejected,
    /// Recognition accepts a graph no tree realizes.
    AcceptedButUnrealizable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Counterexample {
        graph: SimpleGraph,
        direction: FailureDirection,
    },
}

/// Compares the realizable graphs on `n` vertices with the graphs that
/// recognition accepts.
pub fn verify_characterization(n: usize) -> Result<Verdict, OracleError> {
    let report = realizable_graphs(n)?;
    check_report(&report)
}

pub fn check_report(report: &EnumerationReport) -> Result<Verdict, OracleError> {
    let names = default_names(report.leaf_count);
    let mut accepted = BTreeSet::new();
    for g in all_graphs(&names) {
        if recognize(&g)?.is_multipartite() {
            accepted.insert(g);
        }
    }
    if let Some(g) = report.realizable_graphs.difference(&accepted).next() {
        return Ok(Verdict::Counterexample {
            graph: g.clone(),
            direction: FailureDirection::RealizableButRejected,
        });
    }
    if let Some(g) = accepted.difference(&report.realizable_graphs).next() {
        return Ok(Verdict::Counterexample {
            graph: g.clone(),
            direction: FailureDirection::AcceptedButUnrealizable,
        });
    }
    Ok(Verdict::Pass)
}

/// Fewest vertices of any tree explaining `g`, by exhaustive search.
pub fn minimum_tree_size(g: &SimpleGraph) -> Result<usize, OracleError> {
    if !recognize(g)?.is_multipartite() {
        return Err(OracleError::NotMultipartite);
    }
    let n = g.vertex_count();
    check_range(n, 1, MAX_REALIZABILITY_LEAVES)?;
    if n == 1 {
        return Ok(1);
    }
    let mut topologies = enumerate_trees_on(g.names());
    topologies.sort_by_key(LabeledTree::vertex_count);
    for t in &topologies {
        for labeled in labelings(t) {
            if undirected_fitch(&labeled)? == *g {
                return Ok(t.vertex_count());
            }
        }
    }
    unreachable!("every complete multipartite graph has an explaining tree")
}

/// All explaining trees of `g` with the minimum vertex count.
pub fn minimum_trees(g: &SimpleGraph) -> Result<Vec<LabeledTree>, OracleError> {
    let size = minimum_tree_size(g)?;
    if size == 1 {
        return Ok(vec![LabeledTree::single_leaf(g.names()[0].as_str())]);
    }
    let mut out = Vec::new();
    for t in enumerate_trees_on(g.names()) {
        if t.vertex_count() != size {
            continue;
        }
        for labeled in labelings(&t) {
            if undirected_fitch(&labeled)? == *g {
                out.push(labeled);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub labeled_trees: usize,
    pub reroots: usize,
    pub subdivisions: usize,
    pub restrictions: usize,
}

/// A labeled tree on which one of the invariance checks failed.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SweepFailure {
    #[error("Fitch graph changes when rerooting at {root}")]
    RootDependence { tree: LabeledTree, root: VertexId },
    #[error("Fitch graph changes after subdividing and suppressing {edge}")]
    Suppression { tree: LabeledTree, edge: EdgeRef },
    #[error("restriction to {keep:?} does not commute with the Fitch graph")]
    Heredity {
        tree: LabeledTree,
        keep: Vec<String>,
    },
    #[error("directed and undirected Fitch graphs disagree when rooted at {root}")]
    DirectedMismatch { tree: LabeledTree, root: VertexId },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// Checks, for every labeled tree on `n` leaves: root independence, that
/// the underlying graph of the directed Fitch graph is the undirected one
/// at every inner root, invariance under subdividing any edge (with every
/// label split whose OR is the original) followed by degree-2
/// suppression, and heredity under every leaf restriction.
pub fn sweep_invariants(n: usize) -> Result<SweepSummary, SweepFailure> {
    check_range(n, 2, MAX_REALIZABILITY_LEAVES)?;
    let names = default_names(n);
    let subsets: Vec<Vec<&str>> = (1u32..1 << n)
        .map(|mask| {
            (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| names[i].as_str())
                .collect()
        })
        .collect();

    let mut summary = SweepSummary::default();
    for topology in enumerate_trees(n)? {
        for tree in labelings(&topology) {
            summary.labeled_trees += 1;
            let fitch = undirected_fitch(&tree)?;

            let roots: Vec<VertexId> = if tree.vertex_count() <= 2 {
                tree.vertices().collect()
            } else {
                tree.vertices().filter(|&v| !tree.is_leaf(v)).collect()
            };
            for root in roots {
                let rooted = tree.reroot(root)?;
                summary.reroots += 1;
                if undirected_fitch(&rooted)? != fitch {
                    return Err(SweepFailure::RootDependence { tree, root });
                }
                if underlying_undirected(&directed_fitch(&rooted)?) != fitch {
                    return Err(SweepFailure::DirectedMismatch { tree, root });
                }
            }

            let edges: Vec<(EdgeRef, Label)> = tree.edges().collect();
            for (edge, label) in edges {
                let splits: &[(Label, Label)] = match label {
                    Label::Zero => &[(Label::Zero, Label::Zero)],
                    Label::One => &[
                        (Label::One, Label::Zero),
                        (Label::Zero, Label::One),
                        (Label::One, Label::One),
                    ],
                };
                for &(near, far) in splits {
                    let (split, _) = tree.subdivide_edge(edge, near, far)?;
                    summary.subdivisions += 1;
                    if undirected_fitch(&split)? != fitch
                        || undirected_fitch(&split.suppress_degree2()?)? != fitch
                    {
                        return Err(SweepFailure::Suppression { tree, edge });
                    }
                }
            }

            for keep in &subsets {
                summary.restrictions += 1;
                let restricted = undirected_fitch(&tree.restrict(keep)?)?;
                let induced = fitch
                    .induced_subgraph(keep)
                    .expect("subset of the leaf names");
                if restricted != induced {
                    let keep = keep.iter().map(|s| s.to_string()).collect();
                    return Err(SweepFailure::Heredity { tree, keep });
                }
            }
        }
    }
    Ok(summary)
}
