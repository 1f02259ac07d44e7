//! Graphviz DOT output.

use std::fmt::Write as _;

use crate::graph::{DirectedGraph, SimpleGraph};
use crate::tree::LabeledTree;

fn quote(id: &str) -> String {
    let mut out = String::with_capacity(id.len() + 2);
    out.push('"');
    for c in id.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

pub fn graph_to_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph {\n");
    for name in g.names() {
        writeln!(out, "  {};", quote(name)).unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {} -- {};", quote(a), quote(b)).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn digraph_to_dot(d: &DirectedGraph) -> String {
    let mut out = String::from("digraph {\n");
    for name in d.names() {
        writeln!(out, "  {};", quote(name)).unwrap();
    }
    for (a, b) in d.arcs() {
        writeln!(out, "  {} -> {};", quote(a), quote(b)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Vertices are written as `v<id>`; leaves are labeled with their names,
/// inner vertices drawn as points, the root boxed. Edge labels become
/// `label` attributes, with 1-edges drawn bold.
pub fn tree_to_dot(tree: &LabeledTree) -> String {
    let mut out = String::from("graph {\n");
    for v in tree.vertices() {
        let shape = if tree.root() == Some(v) {
            ", shape=box"
        } else if tree.name(v).is_none() {
            ", shape=point"
        } else {
            ""
        };
        let label = tree.name(v).map_or_else(|| "\"\"".to_owned(), quote);
        let attrs = format!("label={label}{shape}");
        writeln!(out, "  v{} [{attrs}];", v.0).unwrap();
    }
    for (e, label) in tree.edges() {
        let (u, w) = e.endpoints();
        let style = if label.is_one() { ", style=bold" } else { "" };
        writeln!(out, "  v{} -- v{} [label=\"{label}\"{style}];", u.0, w.0).unwrap();
    }
    out.push_str("}\n");
    out
}
