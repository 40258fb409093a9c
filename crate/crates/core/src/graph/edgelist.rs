//! The plain-text edge-list interchange format.
//!
//! First line `n m`, then `m` lines `u v` with `0 <= u,v < n`, `u != v`,
//! no duplicates. UTF-8, LF line endings, decimal integers, single
//! spaces. Serialization emits edges as `u v` with `u < v`, sorted
//! lexicographically, so `parse(serialize(g)) == g` and serialization of
//! a parsed canonical text reproduces it byte for byte.

use super::Graph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeListErrorKind {
    MissingHeader,
    MalformedLine(String),
    VertexOutOfRange { vertex: usize, order: usize },
    SelfLoop(usize),
    DuplicateEdge(usize, usize),
    EdgeCountMismatch { declared: usize, found: usize },
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("line {line}: {}", self.describe())]
pub struct EdgeListError {
    pub line: usize,
    pub kind: EdgeListErrorKind,
}

impl EdgeListError {
    fn describe(&self) -> String {
        match &self.kind {
            EdgeListErrorKind::MissingHeader => "missing `n m` header line".into(),
            EdgeListErrorKind::MalformedLine(s) => format!("malformed line {s:?}"),
            EdgeListErrorKind::VertexOutOfRange { vertex, order } => {
                format!("vertex {vertex} out of range for order {order}")
            }
            EdgeListErrorKind::SelfLoop(v) => format!("self-loop at vertex {v}"),
            EdgeListErrorKind::DuplicateEdge(u, v) => format!("duplicate edge {u} {v}"),
            EdgeListErrorKind::EdgeCountMismatch { declared, found } => {
                format!("header declares {declared} edges, found {found}")
            }
        }
    }
}

fn err(line: usize, kind: EdgeListErrorKind) -> EdgeListError {
    EdgeListError { line, kind }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let mut it = text.split(' ');
    let bad = || err(line, EdgeListErrorKind::MalformedLine(text.to_string()));
    let a = it.next().ok_or_else(bad)?;
    let b = it.next().ok_or_else(bad)?;
    if it.next().is_some() {
        return Err(bad());
    }
    let a: usize = a.parse().map_err(|_| bad())?;
    let b: usize = b.parse().map_err(|_| bad())?;
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines
        .next()
        .ok_or_else(|| err(1, EdgeListErrorKind::MissingHeader))?;
    let (n, m) = parse_pair(1, header)?;
    if n == 0 {
        return Err(err(1, EdgeListErrorKind::MalformedLine(header.to_string())));
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut found = 0usize;
    for (lineno, line) in lines {
        if line.is_empty() {
            return Err(err(lineno, EdgeListErrorKind::MalformedLine(String::new())));
        }
        let (u, v) = parse_pair(lineno, line)?;
        for x in [u, v] {
            if x >= n {
                return Err(err(lineno, EdgeListErrorKind::VertexOutOfRange { vertex: x, order: n }));
            }
        }
        if u == v {
            return Err(err(lineno, EdgeListErrorKind::SelfLoop(u)));
        }
        found += 1;
        if found > m {
            return Err(err(lineno, EdgeListErrorKind::EdgeCountMismatch { declared: m, found }));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(lineno, EdgeListErrorKind::DuplicateEdge(u.min(v), u.max(v))));
        }
        edges.push((u.min(v), u.max(v)));
    }
    if found != m {
        return Err(err(
            found + 1,
            EdgeListErrorKind::EdgeCountMismatch { declared: m, found },
        ));
    }
    // from_edges cannot fail: every edge was validated above
    Ok(Graph::from_edges(n, edges).expect("validated edges"))
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(8 + 8 * g.m());
    out.push_str(&format!("{} {}\n", g.n(), g.m()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
