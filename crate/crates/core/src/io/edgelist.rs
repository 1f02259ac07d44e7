//! Line-oriented graph format.
//!
//! ```text
//! # P3
//! vertices: a b c
//! a b
//! b c
//! ```
//!
//! The first content line lists the vertices; every later line is one
//! edge. A token starting with `#` begins a comment running to the end of
//! the line. Both `\n` and `\r\n` line endings are accepted.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{DirectedGraph, SimpleGraph};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EdgeListErrorKind {
    #[error("missing `vertices:` header")]
    MissingHeader,
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("expected two endpoints, got {0} tokens")]
    BadEdgeLine(usize),
    #[error("unknown endpoint `{0}`")]
    UnknownEndpoint(String),
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),
}

/// Parse failure with a 1-based line number and 1-based column.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at line {line}, column {column}")]
pub struct EdgeListError {
    pub line: usize,
    pub column: usize,
    pub kind: EdgeListErrorKind,
}

/// Splits a line into `(column, token)` pairs, stopping at a comment.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut rest = line;
    let mut offset = 0;
    loop {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return out;
        }
        let len = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        out.push((line[..offset].chars().count() + 1, &trimmed[..len]));
        offset += len;
        rest = &trimmed[len..];
    }
}

pub fn parse_edgelist(text: &str) -> Result<SimpleGraph, EdgeListError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, tokens(l)));
    let err = |line, column, kind| EdgeListError { line, column, kind };

    let mut header = None;
    for (no, toks) in lines.by_ref() {
        if !toks.is_empty() {
            header = Some((no, toks));
            break;
        }
    }
    let Some((header_line, header)) = header else {
        return Err(err(1, 1, EdgeListErrorKind::MissingHeader));
    };
    let mut vertices = match header.split_first() {
        Some((&(_, "vertices:"), rest)) => rest.to_vec(),
        Some((&(col, tok), rest)) if tok.starts_with("vertices:") => {
            // `vertices:a b` with no space after the colon
            let first = &tok["vertices:".len()..];
            if first.starts_with('#') {
                Vec::new()
            } else {
                let mut v = vec![(col + "vertices:".len(), first)];
                v.extend_from_slice(rest);
                v
            }
        }
        _ => return Err(err(header_line, 1, EdgeListErrorKind::MissingHeader)),
    };
    let mut seen = HashSet::new();
    for &(col, name) in &vertices {
        if !seen.insert(name) {
            return Err(err(
                header_line,
                col,
                EdgeListErrorKind::DuplicateVertex(name.to_owned()),
            ));
        }
    }

    let mut edges: BTreeSet<(&str, &str)> = BTreeSet::new();
    for (no, toks) in lines {
        match toks.as_slice() {
            [] => {}
            [(ca, a), (cb, b)] => {
                for (col, name) in [(ca, a), (cb, b)] {
                    if !seen.contains(name) {
                        return Err(err(
                            no,
                            *col,
                            EdgeListErrorKind::UnknownEndpoint(name.to_string()),
                        ));
                    }
                }
                if a == b {
                    return Err(err(no, *ca, EdgeListErrorKind::SelfLoop(a.to_string())));
                }
                let key = if a < b { (*a, *b) } else { (*b, *a) };
                if !edges.insert(key) {
                    return Err(err(
                        no,
                        *ca,
                        EdgeListErrorKind::DuplicateEdge(key.0.to_owned(), key.1.to_owned()),
                    ));
                }
            }
            other => {
                return Err(err(
                    no,
                    other[0].0,
                    EdgeListErrorKind::BadEdgeLine(other.len()),
                ));
            }
        }
    }

    vertices.sort_unstable_by_key(|&(_, n)| n);
    Ok(
        SimpleGraph::from_edges(vertices.into_iter().map(|(_, n)| n), edges)
            .expect("endpoints and duplicates checked above"),
    )
}

/// Canonical text: sorted vertices, then edges in lexicographic order.
pub fn serialize_edgelist(g: &SimpleGraph) -> String {
    let mut out = String::from("vertices:");
    for name in g.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for (a, b) in g.edges() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

/// Arc list for digraphs: the same header, then one `x -> y` line per arc.
pub fn serialize_arclist(d: &DirectedGraph) -> String {
    let mut out = String::from("vertices:");
    for name in d.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for (a, b) in d.arcs() {
        writeln!(out, "{a} -> {b}").unwrap();
    }
    out
}
