use super::{Graph, Vertex};
use crate::error::{Error, Result};

pub fn complete_graph(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidArgument("complete graph needs m >= 1".into()));
    }
    Graph::from_edges(m, (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))))
}

pub fn cycle_graph(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("cycle needs k >= 3, got {k}")));
    }
    Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
}

fn merged_labels(parts: &[(&Graph, &[Vertex])]) -> Option<Vec<String>> {
    if parts.iter().all(|(g, _)| g.labels().is_none()) {
        return None;
    }
    Some(
        parts
            .iter()
            .flat_map(|(g, keep)| keep.iter().map(|&v| g.label(v)))
            .collect(),
    )
}

/// `g1 ⊔ g2`; vertices of `g2` are shifted by `g1.n()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    glue_vertices(g1, g2, &[]).expect("no identifications cannot fail")
}

/// Disjoint union of `g1` and `g2` with each `(v, w)` in `pairs` identified.
///
/// Vertices of `g1` keep their ids; the unglued vertices of `g2` follow in
/// increasing order.
pub fn glue_vertices(g1: &Graph, g2: &Graph, pairs: &[(Vertex, Vertex)]) -> Result<Graph> {
    let (n1, n2) = (g1.n(), g2.n());
    let mut target = vec![usize::MAX; n2];
    let mut used1 = vec![false; n1];
    for &(v, w) in pairs {
        if v >= n1 || w >= n2 {
            return Err(Error::InvalidArgument(format!("pair ({v}, {w}) out of range")));
        }
        if used1[v] {
            return Err(Error::InvalidArgument(format!("vertex {v} of the first graph repeated")));
        }
        if target[w] != usize::MAX {
            return Err(Error::InvalidArgument(format!("vertex {w} of the second graph repeated")));
        }
        used1[v] = true;
        target[w] = v;
    }
    let mut next = n1;
    let mut fresh = Vec::new();
    for (w, t) in target.iter_mut().enumerate() {
        if *t == usize::MAX {
            *t = next;
            next += 1;
            fresh.push(w);
        }
    }
    let mut g = Graph::empty(next);
    for (u, v) in g1.edges() {
        g.add_edge(u, v)?;
    }
    for (u, v) in g2.edges() {
        g.add_edge(target[u], target[v])?;
    }
    let all1: Vec<Vertex> = (0..n1).collect();
    if let Some(labels) = merged_labels(&[(g1, &all1), (g2, &fresh)]) {
        g = g.with_labels(labels)?;
    }
    Ok(g)
}

/// Adds a path with `interior` new vertices between `a` and `b`.
///
/// New vertices get ids `n, n+1, ..` in order from `a` to `b`, so the path
/// has `interior + 1` edges.
pub fn attach_path(g: &Graph, a: Vertex, b: Vertex, interior: usize) -> Result<Graph> {
    let n = g.n();
    if a >= n || b >= n {
        return Err(Error::InvalidArgument(format!("endpoint out of range for {n} vertices")));
    }
    if a == b {
        return Err(Error::InvalidArgument("path endpoints must differ".into()));
    }
    if interior == 0 {
        return Err(Error::InvalidArgument("path needs at least one interior vertex".into()));
    }
    let mut out = Graph::empty(n + interior);
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    let mut prev = a;
    for i in 0..interior {
        out.add_edge(prev, n + i)?;
        prev = n + i;
    }
    out.add_edge(prev, b)?;
    if let Some(labels) = g.labels() {
        let mut labels = labels.to_vec();
        labels.extend((1..=interior).map(|i| format!("p{i}")));
        out = out.with_labels(labels)?;
    }
    Ok(out)
}

/// `K4` with a path of `l + 1` edges attached at vertices 0 and 1.
///
/// Labels follow the usual drawing: the attachment vertices are `0` and
/// `l+1`, the path runs `1..=l`, and the other two `K4` vertices are `a`, `b`.
pub fn k4_with_path(l: usize) -> Result<Graph> {
    let g = attach_path(&complete_graph(4)?, 0, 1, l)?;
    let mut labels = vec!["0".to_string(), (l + 1).to_string(), "a".into(), "b".into()];
    labels.extend((1..=l).map(|i| i.to_string()));
    g.with_labels(labels)
}
