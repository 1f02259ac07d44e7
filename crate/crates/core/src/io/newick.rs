//! Newick with `{0,1}` edge labels in the branch-length slot.
//!
//! ```text
//! ((a:0,b:0):1,(c:0,d:0):1,e:1)r;
//! ```
//!
//! Every non-root subtree carries exactly one `:0` or `:1`. Names may not
//! contain whitespace or any of `( ) , : ;`. Inner-node names are accepted
//! and dropped, except on a root with a single child, which is itself a
//! leaf and keeps its name.
//!
//! The outermost node becomes the root. A leading `[&U]` marks the tree
//! as unrooted; `[&R]` is accepted and changes nothing.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::tree::{Label, LabeledTree, TreeError, VertexId, Violation};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NewickErrorKind {
    #[error("unexpected character `{0}`")]
    Unexpected(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("missing leaf name")]
    MissingName,
    #[error("missing edge label")]
    MissingLabel,
    #[error("edge label must be 0 or 1, got `{0}`")]
    BadLabel(String),
    #[error("the root cannot carry an edge label")]
    RootLabel,
    #[error("duplicate leaf name `{0}`")]
    DuplicateName(String),
    #[error("trailing input after `;`")]
    TrailingInput,
    #[error("{0}")]
    InvalidTree(Violation),
}

/// A parse failure at a byte offset into the input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at byte {position}")]
pub struct NewickError {
    pub position: usize,
    pub kind: NewickErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NewickWriteError {
    #[error("Newick output requires a rooted tree")]
    Unrooted,
    #[error(transparent)]
    Tree(#[from] TreeError),
}

fn is_delimiter(c: char) -> bool {
    matches!(c, '(' | ')' | ',' | ':' | ';') || c.is_whitespace()
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    tree: LabeledTree,
    leaf_names: HashMap<String, usize>,
}

struct Frame {
    vertex: VertexId,
    children: Vec<(VertexId, Label)>,
}

impl<'a> Parser<'a> {
    fn err(&self, kind: NewickErrorKind) -> NewickError {
        NewickError {
            position: self.pos,
            kind,
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn token(&mut self) -> &'a str {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let len = rest.find(is_delimiter).unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn expect_char(&mut self) -> Result<char, NewickError> {
        match self.peek() {
            Some(c) => {
                self.pos += c.len_utf8();
                Ok(c)
            }
            None => Err(self.err(NewickErrorKind::UnexpectedEnd)),
        }
    }

    fn leaf(&mut self) -> Result<VertexId, NewickError> {
        self.skip_ws();
        let start = self.pos;
        let name = self.token();
        if name.is_empty() {
            return Err(match self.peek() {
                Some(c) => self.err(NewickErrorKind::Unexpected(c)),
                None => self.err(NewickErrorKind::UnexpectedEnd),
            });
        }
        if self.leaf_names.insert(name.to_owned(), start).is_some() {
            return Err(NewickError {
                position: start,
                kind: NewickErrorKind::DuplicateName(name.to_owned()),
            });
        }
        let v = self.tree.add_vertex();
        self.tree.set_name(v, name).expect("fresh vertex");
        Ok(v)
    }

    fn label(&mut self) -> Result<Label, NewickError> {
        match self.peek() {
            Some(':') => self.pos += 1,
            Some(_) | None => return Err(self.err(NewickErrorKind::MissingLabel)),
        }
        self.skip_ws();
        let start = self.pos;
        match self.token() {
            "0" => Ok(Label::Zero),
            "1" => Ok(Label::One),
            "" => Err(self.err(NewickErrorKind::MissingLabel)),
            other => Err(NewickError {
                position: start,
                kind: NewickErrorKind::BadLabel(other.to_owned()),
            }),
        }
    }

    /// Consumes an optional `[&R]` or `[&U]`; true for unrooted.
    fn rooting_prefix(&mut self) -> bool {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        for (tag, unrooted) in [("[&R]", false), ("[&U]", true)] {
            if rest.get(..4).is_some_and(|p| p.eq_ignore_ascii_case(tag)) {
                self.pos += 4;
                return unrooted;
            }
        }
        false
    }

    fn parse(mut self) -> Result<LabeledTree, NewickError> {
        let unrooted = self.rooting_prefix();
        let mut stack: Vec<Frame> = Vec::new();
        // name given to the root, if it is closed with a name
        let mut root_name: Option<(String, usize)> = None;

        let root = 'outer: loop {
            // start of a subtree
            let mut done = if self.peek() == Some('(') {
                self.pos += 1;
                let vertex = self.tree.add_vertex();
                stack.push(Frame {
                    vertex,
                    children: Vec::new(),
                });
                continue;
            } else {
                self.leaf()?
            };

            // a subtree just finished; attach it or close enclosing frames
            loop {
                let Some(frame) = stack.last_mut() else {
                    break 'outer done;
                };
                let label = self.label()?;
                frame.children.push((done, label));
                match self.expect_char()? {
                    ',' => continue 'outer,
                    ')' => {
                        let frame = stack.pop().unwrap();
                        for (child, label) in frame.children {
                            self.tree
                                .add_edge(frame.vertex, child, label)
                                .expect("fresh edge");
                        }
                        self.skip_ws();
                        let start = self.pos;
                        let name = self.token();
                        if stack.is_empty() && !name.is_empty() {
                            root_name = Some((name.to_owned(), start));
                        }
                        done = frame.vertex;
                    }
                    c => {
                        self.pos -= c.len_utf8();
                        return Err(self.err(NewickErrorKind::Unexpected(c)));
                    }
                }
            }
        };

        match self.peek() {
            Some(';') => self.pos += 1,
            Some(':') => return Err(self.err(NewickErrorKind::RootLabel)),
            Some(c) => return Err(self.err(NewickErrorKind::Unexpected(c))),
            None => return Err(self.err(NewickErrorKind::UnexpectedEnd)),
        }
        let end = self.pos;
        if self.peek().is_some() {
            return Err(self.err(NewickErrorKind::TrailingInput));
        }

        // a root with one child is a leaf and needs its name
        if self.tree.degree(root) == 1 {
            match root_name {
                Some((name, start)) => {
                    if self.leaf_names.contains_key(&name) {
                        return Err(NewickError {
                            position: start,
                            kind: NewickErrorKind::DuplicateName(name),
                        });
                    }
                    self.tree.set_name(root, name).expect("root exists");
                }
                None => {
                    return Err(NewickError {
                        position: end - 1,
                        kind: NewickErrorKind::MissingName,
                    })
                }
            }
        }
        self.tree.set_root((!unrooted).then_some(root));
        self.tree.validate().map_err(|v| NewickError {
            position: end - 1,
            kind: NewickErrorKind::InvalidTree(v),
        })?;
        Ok(self.tree)
    }
}

pub fn parse_newick(text: &str) -> Result<LabeledTree, NewickError> {
    let parser = Parser {
        text,
        pos: 0,
        tree: LabeledTree::new(),
        leaf_names: HashMap::new(),
    };
    parser.parse()
}

/// Canonical Newick: children ordered by their smallest descendant leaf
/// name, inner names omitted, and an inner root written as `r`.
pub fn serialize_newick(tree: &LabeledTree) -> Result<String, NewickWriteError> {
    tree.validate().map_err(TreeError::from)?;
    let root = tree.root().ok_or(NewickWriteError::Unrooted)?;

    // parent pointers and children lists from the root
    let mut children: BTreeMap<VertexId, Vec<(VertexId, Label)>> = BTreeMap::new();
    let mut order = vec![root];
    let mut parent = HashMap::from([(root, root)]);
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for (w, l) in tree.neighbors(v) {
            if parent.contains_key(&w) {
                continue;
            }
            parent.insert(w, v);
            children.entry(v).or_default().push((w, l));
            order.push(w);
        }
        i += 1;
    }

    // smallest leaf name below each vertex, bottom-up
    let mut smallest: HashMap<VertexId, &str> = HashMap::new();
    for &v in order.iter().rev() {
        let own = tree.name(v);
        let below = children
            .get(&v)
            .into_iter()
            .flatten()
            .map(|(c, _)| smallest[c]);
        let min = own.into_iter().chain(below).min().expect("leaf below");
        smallest.insert(v, min);
    }
    for list in children.values_mut() {
        list.sort_by_key(|(c, _)| smallest[c]);
    }

    // iterative writer: (vertex, label from parent, next child index)
    let mut out = String::new();
    let mut stack: Vec<(VertexId, Option<Label>, usize)> = vec![(root, None, 0)];
    while let Some((v, label, next)) = stack.pop() {
        let kids = children.get(&v).map_or(&[][..], Vec::as_slice);
        if kids.is_empty() {
            out.push_str(tree.name(v).expect("leaf"));
        } else if next < kids.len() {
            out.push(if next == 0 { '(' } else { ',' });
            stack.push((v, label, next + 1));
            let (c, l) = kids[next];
            stack.push((c, Some(l), 0));
            continue;
        } else {
            out.push(')');
            match tree.name(v) {
                Some(name) => out.push_str(name),
                None if v == root => out.push('r'),
                None => {}
            }
        }
        if let Some(l) = label {
            out.push(':');
            out.push(l.as_char());
        }
    }
    out.push(';');
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t221_text() {
        let t = parse_newick("((a:0,b:0):1,(c:0,d:0):1,e:1)r;").unwrap();
        assert_eq!(t.vertex_count(), 8);
        assert_eq!(t.leaf_names(), vec!["a", "b", "c", "d", "e"]);
        let root = t.root().unwrap();
        assert_eq!(t.degree(root), 3);
        assert!(t.neighbors(root).all(|(_, l)| l == Label::One));
        assert_eq!(t.edges().filter(|(_, l)| *l == Label::Zero).count(), 4);
    }

    #[test]
    fn zero_star() {
        let t = parse_newick("(a:0,b:0,c:0)r;").unwrap();
        assert_eq!(t.vertex_count(), 4);
        assert!(t.edges().all(|(_, l)| l == Label::Zero));
        assert_eq!(serialize_newick(&t).unwrap(), "(a:0,b:0,c:0)r;");
    }

    #[test]
    fn fractional_label_rejected() {
        let err = parse_newick("(a:0.5,b:0)r;").unwrap_err();
        assert_eq!(err.kind, NewickErrorKind::BadLabel("0.5".into()));
        assert_eq!(err.position, 3);
        assert!(err.to_string().starts_with("edge label must be 0 or 1"));
    }

    #[test]
    fn single_leaf() {
        let t = parse_newick("a;").unwrap();
        assert_eq!(t.vertex_count(), 1);
        assert_eq!(serialize_newick(&t).unwrap(), "a;");
    }

    #[test]
    fn leaf_rooted_edge() {
        let t = parse_newick("(b:1)a;").unwrap();
        assert_eq!(t.vertex_count(), 2);
        assert_eq!(t.name(t.root().unwrap()), Some("a"));
        assert_eq!(serialize_newick(&t).unwrap(), "(b:1)a;");
        assert_eq!(
            parse_newick("(b:1);").unwrap_err().kind,
            NewickErrorKind::MissingName
        );
    }

    #[test]
    fn canonical_child_order() {
        let t = parse_newick("(e:1,(d:0,c:0)x:1,(b:0,a:0):1);").unwrap();
        assert_eq!(
            serialize_newick(&t).unwrap(),
            "((a:0,b:0):1,(c:0,d:0):1,e:1)r;"
        );
    }

    #[test]
    fn whitespace_and_crlf() {
        let t = parse_newick(" ( a : 1 ,\r\n b:0 ) ;\r\n").unwrap();
        assert_eq!(serialize_newick(&t).unwrap(), "(a:1,b:0)r;");
    }

    #[test]
    fn diagnostics() {
        let cases: &[(&str, NewickErrorKind)] = &[
            ("(a:0,a:1)r;", NewickErrorKind::DuplicateName("a".into())),
            ("(a:0,b)r;", NewickErrorKind::MissingLabel),
            ("(a:0,b:2)r;", NewickErrorKind::BadLabel("2".into())),
            ("(a:0,b:1)r", NewickErrorKind::UnexpectedEnd),
            ("(a:0,b:1)r:1;", NewickErrorKind::RootLabel),
            ("(a:0,b:1)r;x", NewickErrorKind::TrailingInput),
            ("(a:0,b:1;", NewickErrorKind::Unexpected(';')),
            ("(,b:1);", NewickErrorKind::Unexpected(',')),
            ("", NewickErrorKind::UnexpectedEnd),
        ];
        for (text, kind) in cases {
            let err = parse_newick(text).unwrap_err();
            assert_eq!(&err.kind, kind, "{text}");
            assert!(err.position <= text.len());
        }
    }

    #[test]
    fn rooting_prefix() {
        let t = parse_newick("[&U] (a:0,b:1,c:0);").unwrap();
        assert_eq!(t.root(), None);
        assert_eq!(t.vertex_count(), 4);
        let t = parse_newick("[&r](a:0,b:1)r;").unwrap();
        assert!(t.root().is_some());
        let err = parse_newick("[&X](a:0,b:1);").unwrap_err();
        assert_eq!(err.position, 4);
    }

    #[test]
    fn unrooted_cannot_be_written() {
        let mut t = parse_newick("(a:0,b:1)r;").unwrap();
        t.set_root(None);
        assert_eq!(serialize_newick(&t), Err(NewickWriteError::Unrooted));
    }

    #[test]
    fn deep_nesting_does_not_overflow() {
        let depth = 50_000;
        let mut text = "(".repeat(depth);
        text.push_str("(a:0,b:0)");
        for i in 0..depth {
            text.push_str(&format!(":0,c{i}:0)"));
        }
        text.push_str("r;");
        let t = parse_newick(&text).unwrap();
        assert_eq!(t.leaf_count(), depth + 2);
        assert_eq!(serialize_newick(&t).unwrap(), text);
        assert!(parse_newick(&text[..text.len() - 3]).is_err());
    }
}
