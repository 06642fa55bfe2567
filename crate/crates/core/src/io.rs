//! Plain-text edge lists: a header line `n m` followed by `m` lines `u v`
//! with `0 <= u, v < n`. Blank lines are ignored.

use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    Malformed(String),
    SelfLoop(usize),
    DuplicateEdge(usize, usize),
    VertexOutOfRange(usize),
    EdgeCount { declared: usize, found: usize },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::MissingHeader => write!(f, "missing `n m` header"),
            ParseErrorKind::Malformed(text) => write!(f, "malformed line `{text}`"),
            ParseErrorKind::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            ParseErrorKind::DuplicateEdge(u, v) => write!(f, "duplicate edge {u} {v}"),
            ParseErrorKind::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            ParseErrorKind::EdgeCount { declared, found } => {
                write!(f, "header declares {declared} edges but {found} were listed")
            }
        }
    }
}

fn pair(line: &str) -> Option<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let a = fields.next()?.parse().ok()?;
    let b = fields.next()?.parse().ok()?;
    fields.next().is_none().then_some((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(ParseError {
        line: 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let (n, m) = pair(header).ok_or_else(|| ParseError {
        line: header_line,
        kind: ParseErrorKind::Malformed(header.to_string()),
    })?;

    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, text) in lines {
        last_line = line;
        let err = |kind| ParseError { line, kind };
        let (u, v) = pair(text).ok_or_else(|| err(ParseErrorKind::Malformed(text.to_string())))?;
        if edges.len() == m {
            return Err(err(ParseErrorKind::EdgeCount { declared: m, found: m + 1 }));
        }
        for w in [u, v] {
            if w >= n {
                return Err(err(ParseErrorKind::VertexOutOfRange(w)));
            }
        }
        if u == v {
            return Err(err(ParseErrorKind::SelfLoop(u)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(ParseErrorKind::DuplicateEdge(u, v)));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError {
            line: last_line,
            kind: ParseErrorKind::EdgeCount { declared: m, found: edges.len() },
        });
    }
    Ok(Graph::from_edges(n, &edges).expect("edges validated above"))
}

/// Canonical edge list: header, then edges `u v` with `u < v` sorted by `(u, v)`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
