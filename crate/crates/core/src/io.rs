//! Readers and writers for PACE `.gr` and DIMACS `.col` graph files.

use crate::error::{Error, Result};
use crate::graph::{EliminationOrder, Graph};
use crate::vertex_set::MAX_VERTICES;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// `p tw <n> <m>` header, edges as `<u> <v>`.
    PaceGr,
    /// `p edge <n> <m>` header, edges as `e <u> <v>`.
    DimacsCol,
}

/// Parses a graph. With `format = None` the format is taken from the
/// `p` line.
///
/// Vertices are renumbered to 0-based, self-loops dropped and parallel
/// edges merged. Vertices that appear in no edge are kept.
pub fn parse_graph(text: &str, format: Option<GraphFormat>) -> Result<Graph> {
    let mut header: Option<(GraphFormat, usize)> = None;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_whitespace();
        let first = tok.next().unwrap();
        match first {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(lineno, "duplicate header"));
                }
                let kind = tok
                    .next()
                    .ok_or_else(|| Error::parse(lineno, "malformed header"))?;
                let found = match kind {
                    "tw" => GraphFormat::PaceGr,
                    "edge" | "col" => GraphFormat::DimacsCol,
                    other => {
                        return Err(Error::parse(
                            lineno,
                            format!("malformed header: unknown problem type '{other}'"),
                        ))
                    }
                };
                if let Some(want) = format {
                    if want != found {
                        return Err(Error::parse(
                            lineno,
                            format!("malformed header: expected {want:?}, found {found:?}"),
                        ));
                    }
                }
                let n = parse_count(tok.next(), lineno)?;
                parse_count(tok.next(), lineno)?;
                if tok.next().is_some() {
                    return Err(Error::parse(lineno, "malformed header: trailing tokens"));
                }
                if n > MAX_VERTICES {
                    return Err(Error::parse(
                        lineno,
                        format!("graph has {n} vertices, at most {MAX_VERTICES} are supported"),
                    ));
                }
                header = Some((found, n));
            }
            _ => {
                let (fmt, n) = header.ok_or_else(|| Error::parse(lineno, "edge before header"))?;
                let (a, b) = match fmt {
                    GraphFormat::PaceGr => (Some(first), tok.next()),
                    GraphFormat::DimacsCol => {
                        if first != "e" {
                            return Err(Error::parse(
                                lineno,
                                format!("unknown line type '{first}'"),
                            ));
                        }
                        (tok.next(), tok.next())
                    }
                };
                let u = parse_vertex(a, n, lineno)?;
                let v = parse_vertex(b, n, lineno)?;
                if tok.next().is_some() {
                    return Err(Error::parse(lineno, "trailing tokens after edge"));
                }
                edges.push((u, v));
            }
        }
    }

    let (_, n) = header.ok_or_else(|| Error::parse(0, "missing header"))?;
    Graph::from_edges(n, edges)
}

fn parse_count(tok: Option<&str>, lineno: usize) -> Result<usize> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(lineno, "malformed header"))
}

fn parse_vertex(tok: Option<&str>, n: usize, lineno: usize) -> Result<usize> {
    let t = tok.ok_or_else(|| Error::parse(lineno, "malformed edge"))?;
    let v: usize = t
        .parse()
        .map_err(|_| Error::parse(lineno, format!("malformed edge: '{t}' is not a vertex")))?;
    if v == 0 || v > n {
        return Err(Error::parse(
            lineno,
            format!("vertex index out of range: {v} not in 1..={n}"),
        ));
    }
    Ok(v - 1)
}

/// Writes a graph in PACE `.gr` format.
pub fn write_pace(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// Parses an order file: whitespace-separated, 1-indexed vertices.
pub fn parse_order(text: &str, n: usize) -> Result<EliminationOrder> {
    let mut order = Vec::with_capacity(n);
    for t in text.split_whitespace() {
        let v: usize = t
            .parse()
            .map_err(|_| Error::InvalidOrder(format!("'{t}' is not a vertex")))?;
        if v == 0 {
            return Err(Error::InvalidOrder("vertices are 1-indexed".into()));
        }
        order.push(v - 1);
    }
    EliminationOrder::new(order, n)
}

/// Writes an order as one line of 1-indexed vertices.
pub fn write_order(order: &EliminationOrder) -> String {
    let mut out = order
        .as_slice()
        .iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pace_path() {
        let g = parse_graph("p tw 3 2\n1 2\n2 3\n", None).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn dimacs_triangle() {
        let g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", None).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_clique(g.vertices()));
    }

    #[test]
    fn out_of_range_vertex() {
        let err = parse_graph("p tw 4 1\n5 6\n", None).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("vertex index out of range"), "{msg}");
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn comments_loops_isolated_vertices() {
        let g = parse_graph("c hello\np tw 5 3\nc mid\n1 1\n1 2\n2 1\n", None).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(4), 0);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            parse_graph("1 2\n", None),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("p tw x 1\n", None),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("p foo 3 1\n", None),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_graph("", None), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph("p edge 3 1\nx 1 2\n", None),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("p tw 3 1\n1 2\n", Some(GraphFormat::DimacsCol)),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("p tw 65 0\n", None),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn order_files() {
        let o = parse_order("3 1\n2", 3).unwrap();
        assert_eq!(o.as_slice(), &[2, 0, 1]);
        assert_eq!(write_order(&o), "3 1 2\n");
        assert!(parse_order("1 2 2", 3).is_err());
        assert!(parse_order("0 1 2", 3).is_err());
        assert!(parse_order("1 2", 3).is_err());
    }
}
