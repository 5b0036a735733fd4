//! Builders for the named graph families used as extremal candidates and
//! fixtures: complete bipartite and multipartite graphs, the windmill,
//! paths, cycles and disjoint unions. Part blocks are laid out in ascending
//! vertex order so canonical forms are reproducible across runs.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// K_{a,b} with parts {0..a-1} and {a..a+b-1}.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    complete_multipartite(&[a, b].into_iter().filter(|&p| p > 0).collect::<Vec<_>>())
}

/// Complete multipartite graph with the given part sizes (each >= 1).
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::Construction("multipartite spec has no parts".into()));
    }
    if parts.contains(&0) {
        return Err(Error::Construction(
            "multipartite parts must be nonempty".into(),
        ));
    }
    let n: usize = parts.iter().sum();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut edges = Vec::new();
    let mut start = 0;
    let mut bounds = Vec::new();
    for &p in parts {
        bounds.push((start, start + p));
        start += p;
    }
    for (i, &(a0, a1)) in bounds.iter().enumerate() {
        for &(b0, b1) in &bounds[i + 1..] {
            for u in a0..a1 {
                for v in b0..b1 {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// The conjectured total-count maximizer: q parts of size n-delta plus one
/// part of size x, where n = q(n-delta) + x and 0 <= x < n-delta.
pub fn conjecture_multipartite(n: usize, delta: usize) -> Result<Graph> {
    if n < delta + 1 {
        return Err(Error::Construction(format!(
            "need n >= delta + 1, got n={} delta={}",
            n, delta
        )));
    }
    let size = n - delta;
    let q = n / size;
    let x = n % size;
    let mut parts = vec![size; q];
    if x > 0 {
        parts.push(x);
    }
    complete_multipartite(&parts)
}

/// K_{delta,n-delta} plus the listed edges inside the partite set of size
/// delta (vertices 0..delta). With delta=2 and the single inside edge this
/// is K'_{2,n-2}.
pub fn extremal_plus_inside_edges(
    delta: usize,
    n: usize,
    inside_edges: &[(usize, usize)],
) -> Result<Graph> {
    if n <= delta {
        return Err(Error::Construction(format!(
            "need n > delta, got n={} delta={}",
            n, delta
        )));
    }
    let mut g = complete_bipartite(delta, n - delta)?;
    for &(u, v) in inside_edges {
        if u >= delta || v >= delta {
            return Err(Error::Construction(format!(
                "inside edge ({},{}) leaves the partite set of size {}",
                u, v, delta
            )));
        }
        if !g.has_edge(u, v) {
            g = g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// (n-1)/2 triangles sharing vertex 0 and otherwise disjoint.
pub fn windmill(n: usize) -> Result<Graph> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(Error::Construction(format!(
            "windmill needs odd n >= 3, got {}",
            n
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((0, v));
    }
    let mut v = 1;
    while v + 1 < n {
        edges.push((v, v + 1));
        v += 2;
    }
    Graph::from_edge_list(n, &edges)
}

/// Path on k >= 1 vertices.
pub fn path(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Construction("path needs k >= 1".into()));
    }
    let edges: Vec<(usize, usize)> = (0..k.saturating_sub(1)).map(|v| (v, v + 1)).collect();
    Graph::from_edge_list(k, &edges)
}

/// Cycle on k >= 3 vertices.
pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::Construction(format!(
            "cycle needs k >= 3, got {}",
            k
        )));
    }
    let mut edges: Vec<(usize, usize)> = (0..k - 1).map(|v| (v, v + 1)).collect();
    edges.push((k - 1, 0));
    Graph::from_edge_list(k, &edges)
}

/// Edgeless graph on k >= 1 vertices. The zero-vertex graph is only
/// reachable through induced subgraphs, so k = 0 is rejected.
pub fn empty_graph(k: usize) -> Result<Graph> {
    Graph::edgeless(k)
}

/// Disjoint union with block-diagonal adjacency; g's vertices come first.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.vertex_count() + h.vertex_count();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut edges = g.edges();
    let off = g.vertex_count();
    for (u, v) in h.edges() {
        edges.push((u + off, v + off));
    }
    Graph::from_edge_list(n, &edges)
}
