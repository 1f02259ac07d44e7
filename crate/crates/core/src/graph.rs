//! Simple graphs and digraphs on named vertices.
//!
//! Vertices are kept in lexicographic name order and referred to internally
//! by their position in that order. Neighbor lists are sorted, so two graphs
//! are equal exactly when they have the same names and the same edges.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown endpoint `{0}`")]
    UnknownEndpoint(String),
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),
    #[error("vertex index {0} out of range")]
    IndexOutOfRange(usize),
}

fn sorted_names<I, S>(vertices: I) -> Result<Vec<String>, GraphError>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut names: Vec<String> = vertices.into_iter().map(Into::into).collect();
    names.sort_unstable();
    if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
        return Err(GraphError::DuplicateVertex(w[0].clone()));
    }
    Ok(names)
}

fn lookup(names: &[String], name: &str) -> Result<u32, GraphError> {
    names
        .binary_search_by(|n| n.as_str().cmp(name))
        .map(|i| i as u32)
        .map_err(|_| GraphError::UnknownEndpoint(name.to_owned()))
}

/// Undirected simple graph.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleGraph {
    names: Vec<String>,
    adj: Vec<Vec<u32>>,
}

impl SimpleGraph {
    /// Edge-less graph on the given vertices.
    pub fn new<I, S>(vertices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names = sorted_names(vertices)?;
        let adj = vec![Vec::new(); names.len()];
        Ok(SimpleGraph { names, adj })
    }

    pub fn from_edges<I, S, E, A, B>(vertices: I, edges: E) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let names = sorted_names(vertices)?;
        let pairs = edges
            .into_iter()
            .map(|(a, b)| Ok((lookup(&names, a.as_ref())?, lookup(&names, b.as_ref())?)))
            .collect::<Result<Vec<_>, GraphError>>()?;
        Self::from_index_edges(names, pairs)
    }

    /// Builds from names already in sorted order and index pairs into them.
    fn from_index_edges(names: Vec<String>, pairs: Vec<(u32, u32)>) -> Result<Self, GraphError> {
        let n = names.len();
        let mut pairs: Vec<(u32, u32)> = pairs
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        for &(a, b) in &pairs {
            if b as usize >= n {
                return Err(GraphError::IndexOutOfRange(b as usize));
            }
            if a == b {
                return Err(GraphError::SelfLoop(names[a as usize].clone()));
            }
        }
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
            let (a, b) = w[0];
            return Err(GraphError::DuplicateEdge(
                names[a as usize].clone(),
                names[b as usize].clone(),
            ));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &pairs {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(SimpleGraph { names, adj })
    }

    /// Trusted constructor: names sorted and unique, neighbor lists sorted
    /// and symmetric.
    pub(crate) fn from_parts(names: Vec<String>, adj: Vec<Vec<u32>>) -> Self {
        debug_assert!(names.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(adj.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        SimpleGraph { names, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Vertex names in sorted order; the position of a name is its index.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        lookup(&self.names, name).ok().map(|i| i as usize)
    }

    pub fn contains_vertex(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// Sorted neighbor indices of vertex `i`.
    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn has_edge_between(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&(j as u32)).is_ok()
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.has_edge_between(i, j),
            _ => false,
        }
    }

    /// Edges as name pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.adj.iter().enumerate().flat_map(move |(i, list)| {
            list.iter()
                .filter(move |&&j| j as usize > i)
                .map(move |&j| (self.names[i].as_str(), self.names[j as usize].as_str()))
        })
    }

    /// Subgraph induced by the named vertices. Unknown names are an error.
    pub fn induced_subgraph<S: AsRef<str>>(&self, keep: &[S]) -> Result<Self, GraphError> {
        let mut idx = keep
            .iter()
            .map(|s| lookup(&self.names, s.as_ref()).map(|i| i as usize))
            .collect::<Result<Vec<_>, _>>()?;
        idx.sort_unstable();
        if let Some(w) = idx.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(self.names[w[0]].clone()));
        }
        let mut position = vec![u32::MAX; self.names.len()];
        for (new, &old) in idx.iter().enumerate() {
            position[old] = new as u32;
        }
        let names = idx.iter().map(|&i| self.names[i].clone()).collect();
        let adj = idx
            .iter()
            .map(|&i| {
                self.adj[i]
                    .iter()
                    .map(|&j| position[j as usize])
                    .filter(|&p| p != u32::MAX)
                    .collect()
            })
            .collect();
        Ok(Self::from_parts(names, adj))
    }

    /// Graph on the same vertices whose edges are the non-edges of `self`.
    pub fn complement(&self) -> Self {
        let n = self.names.len();
        let adj = (0..n)
            .map(|i| {
                let own: HashSet<u32> = self.adj[i].iter().copied().collect();
                (0..n as u32)
                    .filter(|&j| j as usize != i && !own.contains(&j))
                    .collect()
            })
            .collect();
        Self::from_parts(self.names.clone(), adj)
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("vertices", &self.names)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Digraph without self-loops.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedGraph {
    names: Vec<String>,
    out: Vec<Vec<u32>>,
}

impl DirectedGraph {
    pub fn from_arcs<I, S, E, A, B>(vertices: I, arcs: E) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let names = sorted_names(vertices)?;
        let mut out = vec![Vec::new(); names.len()];
        for (a, b) in arcs {
            let i = lookup(&names, a.as_ref())?;
            let j = lookup(&names, b.as_ref())?;
            if i == j {
                return Err(GraphError::SelfLoop(names[i as usize].clone()));
            }
            out[i as usize].push(j);
        }
        for (i, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(
                    names[i].clone(),
                    names[w[0] as usize].clone(),
                ));
            }
        }
        Ok(DirectedGraph { names, out })
    }

    pub(crate) fn from_parts(names: Vec<String>, out: Vec<Vec<u32>>) -> Self {
        debug_assert!(out.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        DirectedGraph { names, out }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        lookup(&self.names, name).ok().map(|i| i as usize)
    }

    pub fn successors(&self, i: usize) -> &[u32] {
        &self.out[i]
    }

    pub fn has_arc(&self, from: &str, to: &str) -> bool {
        match (self.index_of(from), self.index_of(to)) {
            (Some(i), Some(j)) => self.out[i].binary_search(&(j as u32)).is_ok(),
            _ => false,
        }
    }

    /// Arcs `(from, to)` ordered by source name, then target name.
    pub fn arcs(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.out.iter().enumerate().flat_map(move |(i, list)| {
            list.iter()
                .map(move |&j| (self.names[i].as_str(), self.names[j as usize].as_str()))
        })
    }
}

impl fmt::Debug for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DirectedGraph")
            .field("vertices", &self.names)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_are_canonical() {
        let g = SimpleGraph::from_edges(["c", "a", "b"], [("c", "b"), ("b", "a")]).unwrap();
        assert_eq!(g.names(), ["a", "b", "c"]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![("a", "b"), ("b", "c")]);
        let h = SimpleGraph::from_edges(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(g, h);
        assert!(g.has_edge("c", "b"));
        assert!(!g.has_edge("a", "c"));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            SimpleGraph::new(["a", "a"]),
            Err(GraphError::DuplicateVertex("a".into()))
        );
        assert_eq!(
            SimpleGraph::from_edges(["a"], [("a", "a")]),
            Err(GraphError::SelfLoop("a".into()))
        );
        assert_eq!(
            SimpleGraph::from_edges(["a", "b"], [("a", "b"), ("b", "a")]),
            Err(GraphError::DuplicateEdge("a".into(), "b".into()))
        );
        assert_eq!(
            SimpleGraph::from_edges(["a", "b"], [("a", "z")]),
            Err(GraphError::UnknownEndpoint("z".into()))
        );
    }

    #[test]
    fn induced_and_complement() {
        let p4 =
            SimpleGraph::from_edges(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")])
                .unwrap();
        let sub = p4.induced_subgraph(&["a", "c", "d"]).unwrap();
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![("c", "d")]);
        let co = p4.complement();
        assert_eq!(
            co.edges().collect::<Vec<_>>(),
            vec![("a", "c"), ("a", "d"), ("b", "d")]
        );
    }

    #[test]
    fn digraph_arcs() {
        let d = DirectedGraph::from_arcs(["a", "b"], [("b", "a")]).unwrap();
        assert!(d.has_arc("b", "a"));
        assert!(!d.has_arc("a", "b"));
        assert_eq!(d.arc_count(), 1);
        assert!(DirectedGraph::from_arcs(["a", "b"], [("a", "b"), ("a", "b")]).is_err());
    }
}
