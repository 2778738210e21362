//! Edge-list text format: a header `p edge <n> <m>`, then `m` lines
//! `e <u> <v>` with 1-indexed endpoints. Lines starting with `c` are
//! comments and blank lines are skipped. Repeated edges are ignored.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            [c, ..] if c.starts_with('c') => {}
            ["p", rest @ ..] => {
                if header.is_some() {
                    return Err(parse_error(line, "second header"));
                }
                let ["edge", n, m] = rest else {
                    return Err(parse_error(line, "expected `p edge <n> <m>`"));
                };
                let n = number(n, line, "vertex count")?;
                let m = number(m, line, "edge count")?;
                header = Some((n, m));
            }
            ["e", rest @ ..] => {
                let Some((n, _)) = header else {
                    return Err(parse_error(line, "edge before the `p edge` header"));
                };
                let [u, v] = rest else {
                    return Err(parse_error(line, "expected `e <u> <v>`"));
                };
                let u = number(u, line, "endpoint")?;
                let v = number(v, line, "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(parse_error(line, format!("endpoint {x} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(parse_error(line, format!("self-loop on vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            [other, ..] => return Err(parse_error(line, format!("unknown line type `{other}`"))),
        }
    }
    let Some((n, m)) = header else {
        return Err(parse_error(last_line.max(1), "missing `p edge <n> <m>` header"));
    };
    if edges.len() != m {
        return Err(parse_error(last_line.max(1), format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges)
}

fn number(field: &str, line: usize, what: &str) -> Result<usize> {
    field.parse().map_err(|_| parse_error(line, format!("{what} `{field}` is not a non-negative integer")))
}

/// The format read by [`parse_graph`], edges in increasing order.
pub fn emit_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_small_graphs() {
        assert_eq!(parse_graph("p edge 3 2\ne 1 2\ne 2 3\n").unwrap(), Graph::path(3));
        let c4 = "c a square\np edge 4 4\ne 1 2\ne 2 3\n\ne 3 4\ne 4 1\n";
        assert_eq!(parse_graph(c4).unwrap(), Graph::cycle(4));
        assert_eq!(parse_graph("p edge 2 2\ne 1 2\ne 2 1\n").unwrap(), Graph::path(2));
    }

    #[test]
    fn reports_line_numbers() {
        let err = |t: &str| match parse_graph(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        };
        assert_eq!(err("p edge 2 1\ne 1\n"), 2);
        assert_eq!(err("p edge 2 1\ne 1 1\n"), 2);
        assert_eq!(err("p edge 2 1\ne 1 3\n"), 2);
        assert_eq!(err("e 1 2\n"), 1);
        assert_eq!(err("p edge 2 2\ne 1 2\n"), 2);
        assert_eq!(err("p edge x 0\n"), 1);
    }

    #[test]
    fn round_trip() {
        let g = Graph::cycle(5).disjoint_union(&Graph::star(3));
        assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
        assert_eq!(parse_graph(&emit_graph(&Graph::empty(0))).unwrap(), Graph::empty(0));
    }
}
