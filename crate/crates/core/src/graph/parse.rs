//! Edge-list and DIMACS readers and writers.
//!
//! Edge lists are lines `u v` with 0-based ids; lines starting with `#` are
//! comments, except `# vertices N`, which pins the vertex count so that
//! isolated trailing vertices survive a round trip.

use super::{Graph, Vertex};
use crate::error::{Error, Result};

const VERTICES_DIRECTIVE: &str = "vertices";

fn parse_id(tok: &str, line: usize) -> Result<Vertex> {
    if tok.starts_with('-') {
        return Err(Error::parse(line, format!("negative vertex id {tok}")));
    }
    tok.parse::<Vertex>()
        .map_err(|_| Error::parse(line, format!("bad vertex id {tok:?}")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut n = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut toks = comment.split_whitespace();
            if toks.next() == Some(VERTICES_DIRECTIVE) {
                let count = toks
                    .next()
                    .ok_or_else(|| Error::parse(lineno, "missing vertex count"))?;
                n = n.max(parse_id(count, lineno)?);
            }
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::parse(lineno, format!("expected `u v`, got {line:?}")));
        }
        let u = parse_id(toks[0], lineno)?;
        let v = parse_id(toks[1], lineno)?;
        if u == v {
            return Err(Error::parse(lineno, format!("loop edge {u} {v}")));
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if graph.is_some() {
                    return Err(Error::parse(lineno, "duplicate problem line"));
                }
                if toks.len() != 4 || !(toks[1] == "edge" || toks[1] == "col") {
                    return Err(Error::parse(lineno, "expected `p edge n m`"));
                }
                let n = parse_id(toks[2], lineno)?;
                parse_id(toks[3], lineno)?;
                graph = Some(Graph::empty(n));
            }
            "e" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| Error::parse(lineno, "edge before `p edge` header"))?;
                if toks.len() != 3 {
                    return Err(Error::parse(lineno, "expected `e u v`"));
                }
                let u = parse_id(toks[1], lineno)?;
                let v = parse_id(toks[2], lineno)?;
                if u == 0 || v == 0 || u > g.n() || v > g.n() {
                    return Err(Error::parse(
                        lineno,
                        format!("vertex id out of range 1..={}", g.n()),
                    ));
                }
                if u == v {
                    return Err(Error::parse(lineno, format!("loop edge {u} {v}")));
                }
                g.add_edge(u - 1, v - 1)?;
            }
            other => {
                return Err(Error::parse(lineno, format!("unknown line type {other:?}")));
            }
        }
    }
    graph.ok_or_else(|| Error::parse(0, "missing `p edge n m` header"))
}

/// Writes `g` as an edge list; [`parse_edge_list`] reads it back unchanged.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("# {VERTICES_DIRECTIVE} {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;
    use proptest::prelude::*;

    #[test]
    fn edge_list_examples() {
        let k3 = parse_edge_list("0 1\n1 2\n0 2").unwrap();
        assert!(k3.same_edges(&complete_graph(3).unwrap()));
        assert_eq!(parse_edge_list("").unwrap().n(), 0);
        let k2 = parse_edge_list("0 1\n1 0").unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert_eq!(k2.n(), 2);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list("0 1\n2 2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 -1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("0 1 2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("a b"), Err(Error::Parse { .. })));
    }

    #[test]
    fn comments_and_vertex_directive() {
        let g = parse_edge_list("# a comment\n0 1\n# vertices 4\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn dimacs_examples() {
        let k3 = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3").unwrap();
        assert!(k3.same_edges(&complete_graph(3).unwrap()));
        let k2 = parse_dimacs("c hello\np edge 2 1\ne 1 2").unwrap();
        assert!(k2.same_edges(&complete_graph(2).unwrap()));
        assert!(matches!(parse_dimacs("p edge 2 1\ne 1 3"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_dimacs("e 1 2").is_err());
        assert!(parse_dimacs("").is_err());
        assert!(parse_dimacs("p edge 2 1\ne 2 2").is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..12).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let m = pairs.len();
            proptest::collection::vec(any::<bool>(), m).prop_map(move |mask| {
                let edges = pairs.iter().zip(&mask).filter(|(_, &b)| b).map(|(&e, _)| e);
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn serialization_roundtrips(g in arb_graph()) {
            let text = to_edge_list(&g);
            prop_assert_eq!(&parse_edge_list(&text).unwrap(), &g);
            prop_assert_eq!(to_edge_list(&parse_edge_list(&text).unwrap()), text);
            let d = to_dimacs(&g);
            prop_assert_eq!(&parse_dimacs(&d).unwrap(), &g);
        }
    }
}
