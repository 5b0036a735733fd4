//! Criticality analysis for a given minimum degree: edge- and
//! vertex-criticality with witnesses, the degree partition, the structural
//! decomposition of connected critical graphs at delta = 2, and the
//! triangle-rewiring transformation used for delta = 3.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Criticality verdicts with witnesses of failure. A witness edge/vertex is
/// one whose deletion keeps the minimum degree at `delta` or above.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CriticalityReport {
    pub delta: usize,
    pub edge_critical: bool,
    pub vertex_critical: bool,
    pub edge_witness: Option<(usize, usize)>,
    pub vertex_witness: Option<usize>,
}

impl CriticalityReport {
    pub fn is_critical(&self) -> bool {
        self.edge_critical && self.vertex_critical
    }
}

/// Partition of V into V_{=delta} and V_{>delta}, as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreePartition {
    pub exactly_delta: u64,
    pub above_delta: u64,
}

impl DegreePartition {
    /// h = |V_{>delta}|.
    pub fn h(&self) -> usize {
        self.above_delta.count_ones() as usize
    }

    /// l = |V_{=delta}|.
    pub fn l(&self) -> usize {
        self.exactly_delta.count_ones() as usize
    }
}

/// Structure of a connected critical graph with minimum degree 2: either a
/// cycle, or a path Y_1 attached to a minimum-degree-2 remainder Y_2 by a
/// single edge at each path end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition2 {
    Cycle,
    PathSplit {
        /// Vertices of Y_1 in path order.
        y1: Vec<usize>,
        /// Bitmask of Y_2 = V minus Y_1.
        y2: u64,
        /// Y_2 endpoint of the edge leaving the first path vertex.
        v1: usize,
        /// Y_2 endpoint of the edge leaving the last path vertex.
        v2: usize,
    },
}

/// The seven-vertex configuration of two triangles hung off a high-degree
/// vertex, together with the role assignment used by the rewiring.
#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Section5Pattern {
    pub w1: usize,
    pub v: usize,
    pub x: usize,
    pub w2: usize,
    pub w3: usize,
    pub y2: usize,
    pub y3: usize,
}

fn require_min_degree(g: &Graph, delta: usize) -> Result<()> {
    let found = g.min_degree();
    if found != delta {
        return Err(Error::MinDegreeMismatch {
            expected: delta,
            found,
        });
    }
    Ok(())
}

/// Minimum degree of a graph that may have zero vertices; vacuously large
/// when empty, so deleting the last vertex never certifies criticality.
fn min_degree_or_max(g: &Graph) -> usize {
    g.min_degree()
}

/// Literal deletion-based edge-criticality check.
pub fn is_edge_critical(g: &Graph, delta: usize) -> Result<(bool, Option<(usize, usize)>)> {
    require_min_degree(g, delta)?;
    for (u, v) in g.edges() {
        if g.delete_edge(u, v)?.min_degree() >= delta {
            return Ok((false, Some((u, v))));
        }
    }
    Ok((true, None))
}

/// Literal deletion-based vertex-criticality check.
pub fn is_vertex_critical(g: &Graph, delta: usize) -> Result<(bool, Option<usize>)> {
    require_min_degree(g, delta)?;
    for v in g.vertices() {
        if min_degree_or_max(&g.delete_vertex(v)?) >= delta {
            return Ok((false, Some(v)));
        }
    }
    Ok((true, None))
}

pub fn criticality(g: &Graph, delta: usize) -> Result<CriticalityReport> {
    let (edge_critical, edge_witness) = is_edge_critical(g, delta)?;
    let (vertex_critical, vertex_witness) = is_vertex_critical(g, delta)?;
    Ok(CriticalityReport {
        delta,
        edge_critical,
        vertex_critical,
        edge_witness,
        vertex_witness,
    })
}

/// Degree-based equivalent of edge-criticality: every edge has an endpoint
/// of degree exactly delta. Kept separate so tests can assert the
/// equivalence against the deletion-based definition.
pub fn edge_critical_by_degree(g: &Graph, delta: usize) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| g.degree(u) == delta || g.degree(v) == delta)
}

/// Degree-based equivalent of vertex-criticality: every vertex has a
/// neighbor of degree exactly delta.
pub fn vertex_critical_by_degree(g: &Graph, delta: usize) -> bool {
    g.vertices()
        .all(|v| g.neighbors(v).any(|u| g.degree(u) == delta))
}

pub fn degree_partition(g: &Graph, delta: usize) -> Result<DegreePartition> {
    require_min_degree(g, delta)?;
    let mut exactly = 0u64;
    let mut above = 0u64;
    for v in g.vertices() {
        if g.degree(v) == delta {
            exactly |= 1 << v;
        } else {
            above |= 1 << v;
        }
    }
    Ok(DegreePartition {
        exactly_delta: exactly,
        above_delta: above,
    })
}

/// Checks every PathSplit invariant; used both on the way out of
/// `decompose_critical_2` and directly by tests.
pub fn verify_path_split(g: &Graph, d: &Decomposition2) -> Result<()> {
    let Decomposition2::PathSplit { y1, y2, v1, v2 } = d else {
        return Err(Error::Internal(
            "verify_path_split needs a PathSplit".into(),
        ));
    };
    let n = g.vertex_count();
    let k = y1.len();
    let fail = |msg: &str| Err(Error::Internal(format!("path split invariant: {}", msg)));
    if !(2..=n.saturating_sub(3)).contains(&k) {
        return fail("|Y1| out of range");
    }
    let y1_mask: u64 = y1.iter().map(|&v| 1u64 << v).sum();
    if y1_mask.count_ones() as usize != k {
        return fail("Y1 has repeated vertices");
    }
    if y1_mask | y2 != g.full_mask() || y1_mask & y2 != 0 {
        return fail("Y1, Y2 do not partition V");
    }
    // Y1 induces a path in the listed order
    for (i, &a) in y1.iter().enumerate() {
        for (j, &b) in y1.iter().enumerate().skip(i + 1) {
            let adjacent = g.has_edge(a, b);
            if adjacent != (j == i + 1) {
                return fail("Y1 does not induce a path in order");
            }
        }
    }
    if g.induced_subgraph(*y2)?.min_degree() < 2 {
        return fail("Y2 has minimum degree below 2");
    }
    let ends = [(y1[0], *v1), (y1[k - 1], *v2)];
    for (end, vi) in ends {
        let out = g.neighbor_mask(end) & y2;
        if out != 1u64 << vi {
            return fail("path endvertex does not have exactly its one Y2 edge");
        }
    }
    if v1 != v2 && g.has_edge(*v1, *v2) {
        return fail("v1 and v2 are distinct but adjacent");
    }
    for &u in &y1[1..k - 1] {
        if g.neighbor_mask(u) & y2 != 0 {
            return fail("interior path vertex touches Y2");
        }
    }
    Ok(())
}

/// Structural decomposition of a connected critical graph with minimum
/// degree 2: a cycle, or the deterministic lowest-numbered PathSplit.
pub fn decompose_critical_2(g: &Graph) -> Result<Decomposition2> {
    require_min_degree(g, 2)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let report = criticality(g, 2)?;
    if !report.is_critical() {
        return Err(Error::NotCritical(2));
    }
    if g.max_degree() == 2 {
        return Ok(Decomposition2::Cycle);
    }
    let high: Vec<usize> = g.vertices().filter(|&v| g.degree(v) > 2).collect();
    let split = if high.len() == 1 {
        single_high_vertex_split(g, high[0])
    } else {
        shortest_interior_path_split(g, &high)
    }?;
    verify_path_split(g, &split)?;
    Ok(split)
}

/// Exactly one vertex of degree > 2: its degree is even, the edge set
/// decomposes into cycles through it; peel the cycle starting at the lowest
/// neighbor and drop the vertex itself to obtain the path.
fn single_high_vertex_split(g: &Graph, center: usize) -> Result<Decomposition2> {
    let start = g
        .neighbors(center)
        .next()
        .ok_or_else(|| Error::Internal("high-degree vertex with no neighbors".into()))?;
    let mut path = vec![start];
    let mut prev = center;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .find(|&u| u != prev)
            .ok_or_else(|| Error::Internal("walk stuck peeling a cycle".into()))?;
        if next == center {
            break;
        }
        path.push(next);
        prev = cur;
        cur = next;
    }
    let y1_mask: u64 = path.iter().map(|&v| 1u64 << v).sum();
    Ok(Decomposition2::PathSplit {
        y1: path,
        y2: g.full_mask() & !y1_mask,
        v1: center,
        v2: center,
    })
}

/// At least two vertices of degree > 2: take the interior of a shortest path
/// joining two of them (ties broken toward lowest vertex numbers). Interior
/// vertices all have degree 2 by minimality, and criticality forces at
/// least two of them.
fn shortest_interior_path_split(g: &Graph, high: &[usize]) -> Result<Decomposition2> {
    let mut best: Option<(usize, usize, usize, Vec<usize>)> = None; // (dist, a, b, path)
    for &a in high {
        // BFS expanding only through degree-2 vertices, lowest parent first
        let mut parent = vec![usize::MAX; g.vertex_count()];
        let mut dist = vec![usize::MAX; g.vertex_count()];
        dist[a] = 0;
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            if u != a && g.degree(u) > 2 {
                continue; // terminal, do not expand
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        for &b in high {
            if b == a || dist[b] == usize::MAX {
                continue;
            }
            let better = match &best {
                None => true,
                Some((d, ba, bb, _)) => (dist[b], a, b) < (*d, *ba, *bb),
            };
            if better {
                let mut path = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                best = Some((dist[b], a, b, path));
            }
        }
    }
    let (_, a, b, path) =
        best.ok_or_else(|| Error::Internal("no path between high-degree vertices".into()))?;
    let y1: Vec<usize> = path[1..path.len() - 1].to_vec();
    let y1_mask: u64 = y1.iter().map(|&v| 1u64 << v).sum();
    Ok(Decomposition2::PathSplit {
        y1,
        y2: g.full_mask() & !y1_mask,
        v1: a,
        v2: b,
    })
}

/// Validates every invariant of a pattern against `g`.
pub fn verify_pattern(g: &Graph, p: &Section5Pattern) -> Result<()> {
    let fail = |msg: &str| Err(Error::InvalidPattern(msg.into()));
    let all = [p.w1, p.v, p.x, p.w2, p.w3, p.y2, p.y3];
    for &u in &all {
        if u >= g.vertex_count() {
            return Err(Error::VertexOutOfRange(u, g.vertex_count()));
        }
    }
    let mut sorted = all.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != 7 {
        return fail("the seven vertices are not distinct");
    }
    if g.degree(p.w1) <= 3 {
        return fail("w1 must have degree greater than 3");
    }
    for &u in &[p.v, p.x, p.w2, p.w3, p.y2, p.y3] {
        if g.degree(u) != 3 {
            return fail("all vertices except w1 must have degree 3");
        }
    }
    let required = [
        (p.w1, p.v),
        (p.w1, p.x),
        (p.v, p.w2),
        (p.v, p.w3),
        (p.w2, p.w3),
        (p.x, p.y2),
        (p.x, p.y3),
        (p.y2, p.y3),
    ];
    if required.iter().any(|&(a, b)| !g.has_edge(a, b)) {
        return fail("required adjacency missing");
    }
    if g.has_edge(p.w2, p.y2) || g.has_edge(p.w3, p.y3) {
        return fail("matched pairs must be non-adjacent");
    }
    Ok(())
}

/// Finds every two-triangle configuration around high-degree vertices,
/// deduplicated up to the symmetries that leave the rewiring unchanged.
/// Both valid role assignments of a triangle pair are emitted.
pub fn find_section5_patterns(g: &Graph) -> Result<Vec<Section5Pattern>> {
    require_min_degree(g, 3)?;
    let mut out = Vec::new();
    for w1 in g.vertices().filter(|&v| g.degree(v) > 3) {
        // candidate triangles hung off w1, one per qualifying neighbor
        let mut triangles: Vec<(usize, usize, usize)> = Vec::new();
        for a in g.neighbors(w1) {
            if g.degree(a) != 3 {
                continue;
            }
            let others: Vec<usize> = g.neighbors(a).filter(|&u| u != w1).collect();
            let [b, c] = others[..] else { continue };
            if g.has_edge(b, c) && g.degree(b) == 3 && g.degree(c) == 3 && b != w1 && c != w1 {
                triangles.push((a, b.min(c), b.max(c)));
            }
        }
        for (i, &(v, vb, vc)) in triangles.iter().enumerate() {
            for &(x, xb, xc) in &triangles[i + 1..] {
                let s1 = [v, vb, vc];
                let s2 = [x, xb, xc];
                if s1.iter().any(|u| s2.contains(u)) {
                    continue;
                }
                // two distinct matchings of the triangle partners
                for (y2, y3) in [(xb, xc), (xc, xb)] {
                    let p = Section5Pattern {
                        w1,
                        v,
                        x,
                        w2: vb,
                        w3: vc,
                        y2,
                        y3,
                    };
                    if verify_pattern(g, &p).is_ok() {
                        out.push(p);
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Removes the triangle edges w2w3 and y2y3 and adds the matching edges
/// w2y2 and w3y3; all degrees are preserved.
pub fn triangle_rewire(g: &Graph, p: &Section5Pattern) -> Result<Graph> {
    verify_pattern(g, p)?;
    g.delete_edge(p.w2, p.w3)?
        .delete_edge(p.y2, p.y3)?
        .add_edge(p.w2, p.y2)?
        .add_edge(p.w3, p.y3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::counting::count_independent_sets_of_size;

    #[test]
    fn cycles_are_critical() {
        for n in [3, 5, 8] {
            let c = constructions::cycle(n).unwrap();
            let r = criticality(&c, 2).unwrap();
            assert!(r.is_critical(), "C_{} should be critical", n);
            assert!(r.edge_witness.is_none() && r.vertex_witness.is_none());
        }
    }

    #[test]
    fn k23_is_edge_but_not_vertex_critical() {
        let k23 = constructions::complete_bipartite(2, 3).unwrap();
        let r = criticality(&k23, 2).unwrap();
        assert!(r.edge_critical);
        assert!(!r.vertex_critical);
        // the witness really does keep minimum degree 2 when deleted
        let w = r.vertex_witness.unwrap();
        assert!(k23.delete_vertex(w).unwrap().min_degree() >= 2);
    }

    #[test]
    fn kprime23_is_not_edge_critical() {
        let kp = constructions::extremal_plus_inside_edges(2, 5, &[(0, 1)]).unwrap();
        let r = criticality(&kp, 2).unwrap();
        assert!(!r.edge_critical);
        assert_eq!(r.edge_witness, Some((0, 1)));
    }

    #[test]
    fn wrong_delta_is_rejected() {
        let c5 = constructions::cycle(5).unwrap();
        assert!(matches!(
            criticality(&c5, 3),
            Err(Error::MinDegreeMismatch {
                expected: 3,
                found: 2
            })
        ));
    }

    #[test]
    fn degree_partitions() {
        let w7 = constructions::windmill(7).unwrap();
        let p = degree_partition(&w7, 2).unwrap();
        assert_eq!((p.l(), p.h()), (6, 1));
        let c5 = constructions::cycle(5).unwrap();
        let p = degree_partition(&c5, 2).unwrap();
        assert_eq!((p.l(), p.h()), (5, 0));
        let k34 = constructions::complete_bipartite(3, 4).unwrap();
        let p = degree_partition(&k34, 3).unwrap();
        assert_eq!((p.l(), p.h()), (4, 3));
    }

    #[test]
    fn cycle_decomposition() {
        let c9 = constructions::cycle(9).unwrap();
        assert_eq!(decompose_critical_2(&c9).unwrap(), Decomposition2::Cycle);
    }

    #[test]
    fn bowtie_decomposition() {
        let bowtie = constructions::windmill(5).unwrap();
        let d = decompose_critical_2(&bowtie).unwrap();
        let Decomposition2::PathSplit { ref y1, v1, v2, .. } = d else {
            panic!("bowtie should yield a path split");
        };
        assert_eq!(y1.len(), 2);
        assert_eq!((v1, v2), (0, 0));
        verify_path_split(&bowtie, &d).unwrap();
    }

    #[test]
    fn non_critical_input_is_rejected() {
        let k23 = constructions::complete_bipartite(2, 3).unwrap();
        assert!(matches!(
            decompose_critical_2(&k23),
            Err(Error::NotCritical(2))
        ));
    }

    #[test]
    fn two_high_vertex_decomposition() {
        // two triangles joined by a 2-chain at each "corner":
        // high vertices 0 and 3, chains 0-1-2-3 and 0-4-5-3, plus a pendant
        // triangle on each to push degrees above 2
        let g = Graph::from_edge_list(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 4),
                (4, 5),
                (5, 3),
                (0, 6),
                (6, 7),
                (7, 0),
                (3, 8),
                (8, 9),
                (9, 3),
            ],
        )
        .unwrap();
        let d = decompose_critical_2(&g).unwrap();
        verify_path_split(&g, &d).unwrap();
        let Decomposition2::PathSplit { v1, v2, .. } = d else {
            unreachable!()
        };
        assert_ne!(v1, v2);
        assert!(!g.has_edge(v1, v2));
    }

    #[test]
    fn no_patterns_without_triangles_or_high_degree() {
        let k34 = constructions::complete_bipartite(3, 4).unwrap();
        assert!(find_section5_patterns(&k34).unwrap().is_empty());
        // prism: 3-regular, no vertex of degree > 3
        let prism = Graph::from_edge_list(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert!(find_section5_patterns(&prism).unwrap().is_empty());
    }

    /// The two-triangle host configuration: w1 of degree 4, triangles
    /// {v,w2,w3} and {x,y2,y3}, remaining degrees topped up by two extra
    /// vertices.
    fn figure_host() -> Graph {
        // v=0 w1=1 w2=2 w3=3 x=4 y2=5 y3=6 extras=7,8
        Graph::from_edge_list(
            9,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (2, 3),
                (1, 4),
                (4, 5),
                (4, 6),
                (5, 6),
                (1, 7),
                (1, 8),
                (2, 7),
                (3, 8),
                (5, 8),
                (6, 7),
                (7, 8),
            ],
        )
        .unwrap()
    }

    #[test]
    fn detects_the_figure_configuration() {
        let g = figure_host();
        assert_eq!(g.min_degree(), 3);
        let patterns = find_section5_patterns(&g).unwrap();
        assert!(!patterns.is_empty());
        for p in &patterns {
            verify_pattern(&g, p).unwrap();
        }
    }

    #[test]
    fn rewire_preserves_degrees_and_reverses() {
        let g = figure_host();
        for p in find_section5_patterns(&g).unwrap() {
            let h = triangle_rewire(&g, &p).unwrap();
            for v in g.vertices() {
                assert_eq!(g.degree(v), h.degree(v));
            }
            assert_eq!(h.min_degree(), 3);
            assert!(
                count_independent_sets_of_size(&g, 3).unwrap()
                    <= count_independent_sets_of_size(&h, 3).unwrap()
            );
            // manual reverse: undo the four edge changes
            let back = h
                .delete_edge(p.w2, p.y2)
                .unwrap()
                .delete_edge(p.w3, p.y3)
                .unwrap()
                .add_edge(p.w2, p.w3)
                .unwrap()
                .add_edge(p.y2, p.y3)
                .unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn invalid_pattern_is_rejected() {
        let g = figure_host();
        let mut p = find_section5_patterns(&g).unwrap()[0];
        p.w1 = p.w2; // duplicate vertex
        assert!(triangle_rewire(&g, &p).is_err());
    }

    #[test]
    fn degree_characterizations_agree_on_small_graphs() {
        let samples = [
            constructions::cycle(6).unwrap(),
            constructions::complete_bipartite(2, 4).unwrap(),
            constructions::windmill(7).unwrap(),
            constructions::extremal_plus_inside_edges(2, 6, &[(0, 1)]).unwrap(),
        ];
        for g in samples {
            let delta = g.min_degree();
            let r = criticality(&g, delta).unwrap();
            assert_eq!(r.edge_critical, edge_critical_by_degree(&g, delta));
            assert_eq!(r.vertex_critical, vertex_critical_by_degree(&g, delta));
        }
    }
}
