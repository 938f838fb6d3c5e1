//! The `msgraph 1` text format.
//!
//! ```text
//! msgraph 1
//! n=<n> m=<m>
//! <u> <v> <signs>      one line per pair u < v, in pairing-index order
//! ```
//!
//! Every line ends with a single `\n`. The parser also accepts `\r\n` and
//! edge lines in any order, but requires each pair exactly once.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{pair_count, pair_index, MultisignedCompleteGraph};
use crate::multisign::{Multisign, MAX_WIDTH};

pub const HEADER: &str = "msgraph 1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("line {line}: expected header `{HEADER}`, found `{found}`")]
    Header { line: usize, found: String },
    #[error("line {line}: malformed dimensions, expected `n=<n> m=<m>`")]
    Dimensions { line: usize },
    #[error("line {line}: n={n} is below 3")]
    TooFewVertices { line: usize, n: usize },
    #[error("line {line}: m={m} outside 1..=64")]
    Width { line: usize, m: usize },
    #[error("line {line}: malformed edge line, expected `<u> <v> <signs>`")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex {vertex} out of range for n={n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: edge endpoints must satisfy u < v, got {u} {v}")]
    UnorderedPair { line: usize, u: usize, v: usize },
    #[error("line {line}: sign string has length {found}, expected m={expected}")]
    SignWidth {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: invalid sign character at position {position}")]
    SignChar { line: usize, position: usize },
    #[error("line {line}: duplicate edge {u} {v} (first on line {first})")]
    DuplicateEdge {
        line: usize,
        u: usize,
        v: usize,
        first: usize,
    },
    #[error("line {line}: extra line after all {count} edges")]
    ExtraLine { line: usize, count: usize },
    #[error("line {line}: missing edge {u} {v} at end of input")]
    MissingEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: unexpected end of input")]
    Truncated { line: usize },
}

impl DocumentError {
    /// 1-based line the error refers to.
    pub fn line(&self) -> usize {
        match *self {
            DocumentError::Header { line, .. }
            | DocumentError::Dimensions { line }
            | DocumentError::TooFewVertices { line, .. }
            | DocumentError::Width { line, .. }
            | DocumentError::MalformedEdge { line }
            | DocumentError::VertexOutOfRange { line, .. }
            | DocumentError::UnorderedPair { line, .. }
            | DocumentError::SignWidth { line, .. }
            | DocumentError::SignChar { line, .. }
            | DocumentError::DuplicateEdge { line, .. }
            | DocumentError::ExtraLine { line, .. }
            | DocumentError::MissingEdge { line, .. }
            | DocumentError::Truncated { line } => line,
        }
    }
}

pub fn serialize_graph(graph: &MultisignedCompleteGraph) -> String {
    let mut out = String::with_capacity(16 + pair_count(graph.n()) * (8 + graph.width()));
    out.push_str(HEADER);
    out.push('\n');
    let _ = writeln!(out, "n={} m={}", graph.n(), graph.width());
    for (u, v, s) in graph.edges() {
        let _ = writeln!(out, "{u} {v} {s}");
    }
    out
}

fn parse_dimensions(line_no: usize, line: &str) -> Result<(usize, usize), DocumentError> {
    let bad = || DocumentError::Dimensions { line: line_no };
    let (n_part, m_part) = line.split_once(' ').ok_or_else(bad)?;
    let n = n_part
        .strip_prefix("n=")
        .and_then(|s| s.parse::<usize>().ok())
        .ok_or_else(bad)?;
    let m = m_part
        .strip_prefix("m=")
        .and_then(|s| s.parse::<usize>().ok())
        .ok_or_else(bad)?;
    if n < 3 {
        return Err(DocumentError::TooFewVertices { line: line_no, n });
    }
    if m == 0 || m > MAX_WIDTH {
        return Err(DocumentError::Width { line: line_no, m });
    }
    Ok((n, m))
}

fn parse_vertex(line_no: usize, token: &str) -> Result<usize, DocumentError> {
    let digits_only = !token.is_empty() && token.bytes().all(|b| b.is_ascii_digit());
    if !digits_only {
        return Err(DocumentError::MalformedEdge { line: line_no });
    }
    token
        .parse()
        .map_err(|_| DocumentError::MalformedEdge { line: line_no })
}

pub fn parse_graph(text: &str) -> Result<MultisignedCompleteGraph, DocumentError> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body
        .split('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .enumerate()
        .map(|(i, l)| (i + 1, l));

    let (_, header) = lines.next().expect("split yields at least one item");
    if header != HEADER {
        return Err(DocumentError::Header {
            line: 1,
            found: header.to_string(),
        });
    }
    let (line_no, dims) = lines.next().ok_or(DocumentError::Truncated { line: 2 })?;
    let (n, m) = parse_dimensions(line_no, dims)?;

    let count = pair_count(n);
    let mut seen_on: Vec<usize> = vec![0; count];
    let mut edges = vec![0u64; count];
    let mut filled = 0usize;
    let mut last_line = line_no;
    for (line_no, line) in lines {
        last_line = line_no;
        if filled == count {
            return Err(DocumentError::ExtraLine {
                line: line_no,
                count,
            });
        }
        let mut tokens = line.split(' ');
        let (Some(u), Some(v), Some(signs), None) =
            (tokens.next(), tokens.next(), tokens.next(), tokens.next())
        else {
            return Err(DocumentError::MalformedEdge { line: line_no });
        };
        let u = parse_vertex(line_no, u)?;
        let v = parse_vertex(line_no, v)?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(DocumentError::VertexOutOfRange {
                    line: line_no,
                    vertex,
                    n,
                });
            }
        }
        if u >= v {
            return Err(DocumentError::UnorderedPair {
                line: line_no,
                u,
                v,
            });
        }
        if signs.chars().count() != m {
            return Err(DocumentError::SignWidth {
                line: line_no,
                expected: m,
                found: signs.chars().count(),
            });
        }
        let sign = Multisign::parse(signs).map_err(|e| match e {
            crate::Error::SignText { position, .. } => DocumentError::SignChar {
                line: line_no,
                position,
            },
            _ => DocumentError::MalformedEdge { line: line_no },
        })?;
        let idx = pair_index(n, u, v);
        if seen_on[idx] != 0 {
            return Err(DocumentError::DuplicateEdge {
                line: line_no,
                u,
                v,
                first: seen_on[idx],
            });
        }
        seen_on[idx] = line_no;
        edges[idx] = sign.bits();
        filled += 1;
    }
    if filled < count {
        let missing = seen_on
            .iter()
            .position(|&l| l == 0)
            .expect("some edge unfilled");
        let (u, v) = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .nth(missing)
            .expect("index within pair count");
        return Err(DocumentError::MissingEdge {
            line: last_line + 1,
            u,
            v,
        });
    }
    Ok(MultisignedCompleteGraph::from_edge_bits(n, m, edges).expect("validated dimensions"))
}
