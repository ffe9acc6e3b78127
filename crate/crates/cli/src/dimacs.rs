//! DIMACS edge-format instances.
//!
//! A file is a `p edge <n> <m>` header, optionally preceded by `c` comment
//! lines, followed by `e <u> <v>` lines with 1-based endpoints in
//! `[1, n]`. Duplicate edge lines are collapsed; self-loops are rejected.
//! External label `i` maps to internal vertex `i - 1`.

use thiserror::Error;
use vcover::graph::{Graph, VertexId};

#[derive(Debug, Error)]
pub enum DimacsError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("missing `p edge <n> <m>` header")]
    MissingHeader,
    #[error("line {line}: vertex {label} outside [1, {n}]")]
    VertexOutOfRange { line: usize, label: i64, n: usize },
    #[error("line {line}: self-loops are not allowed")]
    SelfLoop { line: usize },
}

pub fn parse(input: &str) -> Result<Graph, DimacsError> {
    let mut graph: Option<Graph> = None;
    let mut n = 0usize;
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('c') {
            continue;
        }
        let mut parts = text.split_whitespace();
        match parts.next() {
            Some("p") => {
                if graph.is_some() {
                    return Err(DimacsError::Malformed {
                        line,
                        message: "duplicate problem line".into(),
                    });
                }
                let kind = parts.next().unwrap_or("");
                if kind != "edge" {
                    return Err(DimacsError::Malformed {
                        line,
                        message: format!("expected `p edge`, found `p {kind}`"),
                    });
                }
                let parse_num = |s: Option<&str>| {
                    s.and_then(|t| t.parse::<usize>().ok()).ok_or(DimacsError::Malformed {
                        line,
                        message: "expected `p edge <n> <m>`".into(),
                    })
                };
                n = parse_num(parts.next())?;
                let _m = parse_num(parts.next())?;
                graph = Some(Graph::with_vertices(n));
            }
            Some("e") => {
                let g = graph.as_mut().ok_or(DimacsError::MissingHeader)?;
                let mut endpoint = || {
                    parts
                        .next()
                        .and_then(|t| t.parse::<i64>().ok())
                        .ok_or(DimacsError::Malformed {
                            line,
                            message: "expected `e <u> <v>`".into(),
                        })
                };
                let u = endpoint()?;
                let v = endpoint()?;
                for label in [u, v] {
                    if label < 1 || label > n as i64 {
                        return Err(DimacsError::VertexOutOfRange { line, label, n });
                    }
                }
                if u == v {
                    return Err(DimacsError::SelfLoop { line });
                }
                // duplicates collapse silently
                g.add_edge(VertexId(u as u32 - 1), VertexId(v as u32 - 1))
                    .expect("endpoints validated above");
            }
            Some(other) => {
                return Err(DimacsError::Malformed {
                    line,
                    message: format!("unknown line type `{other}`"),
                });
            }
            None => unreachable!("blank lines are skipped"),
        }
    }
    graph.ok_or(DimacsError::MissingHeader)
}

/// Canonical serialization: header, then edges sorted ascending, one per
/// line, with vertices relabeled 1-based in ascending identifier order.
pub fn serialize(g: &Graph) -> String {
    let ids: Vec<VertexId> = g.vertices().collect();
    let label = |v: VertexId| ids.binary_search(&v).unwrap() + 1;
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", label(u), label(v)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_header_and_edges() {
        let g = parse("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn collapses_duplicate_edges() {
        let g = parse("p edge 2 3\ne 1 2\ne 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse(""), Err(DimacsError::MissingHeader)));
        assert!(matches!(parse("e 1 2\n"), Err(DimacsError::MissingHeader)));
        assert!(matches!(parse("p edge 2 1\ne 1 3\n"), Err(DimacsError::VertexOutOfRange { .. })));
        assert!(matches!(parse("p edge 2 1\ne 1 1\n"), Err(DimacsError::SelfLoop { .. })));
        assert!(matches!(parse("p col 2 1\n"), Err(DimacsError::Malformed { .. })));
        assert!(matches!(parse("x 1\n"), Err(DimacsError::Malformed { .. })));
    }

    #[test]
    fn round_trips_canonical_files() {
        let text = "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n";
        let g = parse(text).unwrap();
        let emitted = serialize(&g);
        assert_eq!(emitted, text);
        assert_eq!(parse(&emitted).unwrap(), g);
    }
}
