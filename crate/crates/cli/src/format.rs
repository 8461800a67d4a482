//! The plain-text graph format.
//!
//! ```text
//! c optional comment
//! p <n> <m>
//! e <u> <v>        1 <= u, v <= n, u != v, each pair once
//! w <v> <weight>   weight >= 1, at most once per vertex, default 1
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;

use oddcycle::{Graph, VertexWeights};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// A parsed graph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub weights: VertexWeights,
}

fn number<T: std::str::FromStr>(
    tok: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T, ParseError> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| {
        err(
            line,
            format!("{what} {tok:?} is not a non-negative integer"),
        )
    })
}

fn vertex(tok: Option<&str>, line: usize, n: usize) -> Result<usize, ParseError> {
    let v: usize = number(tok, line, "vertex")?;
    if v == 0 || v > n {
        return Err(err(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

pub fn parse_graph(text: &str) -> Result<GraphFile, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut weights: Vec<Option<u64>> = Vec::new();
    let mut last = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last = line;
        let mut toks = raw.split_whitespace();
        let Some(kind) = toks.next() else { continue };
        match kind {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(err(line, "duplicate header"));
                }
                let n = number(toks.next(), line, "vertex count")?;
                let m = number(toks.next(), line, "edge count")?;
                header = Some((n, m, line));
                weights = vec![None; n];
            }
            "e" => {
                let (n, _, _) = header.ok_or_else(|| err(line, "edge before header"))?;
                let u = vertex(toks.next(), line, n)?;
                let v = vertex(toks.next(), line, n)?;
                if u == v {
                    return Err(err(line, format!("self-loop at vertex {}", u + 1)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(err(line, format!("duplicate edge {} {}", u + 1, v + 1)));
                }
                edges.push((u, v));
            }
            "w" => {
                let (n, _, _) = header.ok_or_else(|| err(line, "weight before header"))?;
                let v = vertex(toks.next(), line, n)?;
                let w: u64 = number(toks.next(), line, "weight")?;
                if w == 0 {
                    return Err(err(line, "weights must be >= 1"));
                }
                if weights[v].replace(w).is_some() {
                    return Err(err(line, format!("second weight for vertex {}", v + 1)));
                }
            }
            other => return Err(err(line, format!("unknown line type {other:?}"))),
        }
        if let Some(extra) = toks.next() {
            return Err(err(line, format!("unexpected token {extra:?}")));
        }
    }

    let (n, m, header_line) =
        header.ok_or_else(|| err(last.max(1), "missing header `p <n> <m>`"))?;
    if edges.len() != m {
        return Err(err(
            header_line,
            format!("header declares {m} edges but {} were listed", edges.len()),
        ));
    }
    let graph = Graph::from_edges(n, edges).map_err(|e| err(header_line, e.to_string()))?;
    let weights = VertexWeights::new(weights.into_iter().map(|w| w.unwrap_or(1)).collect())
        .map_err(|e| err(header_line, e.to_string()))?;
    Ok(GraphFile { graph, weights })
}

/// Canonical text: header, edges sorted with `u < v`, then non-unit weights.
pub fn emit_graph(g: &Graph, w: Option<&VertexWeights>) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    if let Some(w) = w {
        for (v, &x) in w.as_slice().iter().enumerate().filter(|(_, &x)| x != 1) {
            let _ = writeln!(out, "w {} {x}", v + 1);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let f = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(f.graph, Graph::complete(3));
        assert!(f.weights.is_unit());
    }

    #[test]
    fn isolated_vertices() {
        let f = parse_graph("c two vertices\np 2 0\n").unwrap();
        assert_eq!(f.graph, Graph::new(2));
    }

    #[test]
    fn weights_and_emit() {
        let text = "c x\np 3 2\n\ne 3 2\nw 2 7\ne 1 2\n";
        let f = parse_graph(text).unwrap();
        assert_eq!(f.weights.as_slice(), &[1, 7, 1]);
        assert_eq!(
            emit_graph(&f.graph, Some(&f.weights)),
            "p 3 2\ne 1 2\ne 2 3\nw 2 7\n"
        );
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("e 1 2\np 2 1\n", 1),
            ("p 2 1\ne 1 3\n", 2),
            ("p 2 2\ne 1 2\ne 2 1\n", 3),
            ("p 2 1\ne 1 1\n", 2),
            ("p 2 2\ne 1 2\n", 1),
            ("p 2 0\nw 1 0\n", 2),
            ("p 2 0\nw 1 2\nw 1 3\n", 3),
            ("p 2 0\nx\n", 2),
            ("p 2 0\np 2 0\n", 2),
            ("p 2 0 9\n", 1),
            ("p two 0\n", 1),
            ("", 1),
        ];
        for (text, line) in cases {
            let e = parse_graph(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
        }
    }
}
