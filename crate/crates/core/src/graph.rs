//! Immutable simple-graph representation over bit-row adjacency.
//!
//! Vertices are `0..n` dense labels; each row is a `u64` neighbor bitset.
//! Every edit produces a fresh graph, so values can be shared freely across
//! threads. The zero-vertex graph exists only as the result of induced
//! subgraphs or vertex deletion, where it serves as the counting base case.

use crate::error::{Error, Result};

/// Hard cap on the supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph on `n` labeled vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterator over the set bits of a word, ascending.
#[derive(Clone)]
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Iterate the vertices in a bitmask, ascending.
pub fn bits(mask: u64) -> BitIter {
    BitIter(mask)
}

impl Graph {
    /// Builds the edgeless graph on `n >= 1` vertices.
    pub fn edgeless(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::edgeless(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.rows[u] |= 1 << v;
            g.rows[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Internal constructor from raw rows; callers guarantee symmetry.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Graph {
        debug_assert!(rows.len() <= MAX_VERTICES);
        let n = rows.len();
        debug_assert!(rows
            .iter()
            .enumerate()
            .all(|(v, &r)| { r & (1 << v) == 0 && (n == 64 || r >> n == 0) }));
        Graph { n, rows }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// All-vertices bitmask.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Neighbor bitset of `v`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        assert!(v < self.n, "vertex {} out of range for n={}", v, self.n);
        self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> BitIter {
        bits(self.neighbor_mask(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbor_mask(v).count_ones() as usize
    }

    /// Minimum degree over all vertices; 0 for the edgeless graph.
    /// The zero-vertex graph has no vertices, so the minimum is reported
    /// as `usize::MAX` (every degree bound holds vacuously).
    pub fn min_degree(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .unwrap_or(usize::MAX)
    }

    pub fn max_degree(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n);
        self.rows[u] & (1 << v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.rows[u]) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Sum of `degree(v)` over all vertices; equals `2 * edge_count()`.
    pub fn degree_sum(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// New graph with `v` removed; remaining vertices are compacted to
    /// `0..n-1` preserving relative order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v, self.n));
        }
        Ok(self.induced_by_mask(self.full_mask() & !(1 << v)))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut rows = self.rows.clone();
        rows[u] &= !(1 << v);
        rows[v] &= !(1 << u);
        Ok(Graph { n: self.n, rows })
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u, v));
        }
        let mut rows = self.rows.clone();
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
        Ok(Graph { n: self.n, rows })
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        Ok(())
    }

    /// Subgraph induced by the vertex set `s` (given as a bitmask).
    /// May produce the zero-vertex graph.
    pub fn induced_subgraph(&self, s: u64) -> Result<Graph> {
        if s & !self.full_mask() != 0 {
            let bad = bits(s & !self.full_mask()).next().unwrap();
            return Err(Error::VertexOutOfRange(bad, self.n));
        }
        Ok(self.induced_by_mask(s))
    }

    fn induced_by_mask(&self, s: u64) -> Graph {
        let keep: Vec<usize> = bits(s).collect();
        let mut rows = vec![0u64; keep.len()];
        for (new_u, &u) in keep.iter().enumerate() {
            for (new_v, &v) in keep.iter().enumerate() {
                if self.rows[u] & (1 << v) != 0 {
                    rows[new_u] |= 1 << new_v;
                }
            }
        }
        Graph {
            n: keep.len(),
            rows,
        }
    }

    /// Removes `v` together with its neighborhood; used by the counting
    /// recursion `i_t(G) = i_t(G-v) + i_{t-1}(G-v-N(v))`.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v, self.n));
        }
        Ok(self.induced_by_mask(self.full_mask() & !(self.rows[v] | (1 << v))))
    }

    /// Connected components as bitmasks, ordered by their lowest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen: u64 = 0;
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen & (1 << start) != 0 {
                continue;
            }
            let mut comp: u64 = 1 << start;
            let mut frontier: u64 = 1 << start;
            while frontier != 0 {
                let mut next: u64 = 0;
                for v in bits(frontier) {
                    next |= self.rows[v];
                }
                frontier = next & !comp;
                comp |= frontier;
            }
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Relabels vertices: `perm[old]` is the new label of `old`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidSpec(format!(
                "permutation length {} does not match n={}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::InvalidSpec("not a permutation".into()));
            }
            seen[p] = true;
        }
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.rows[u]) {
                rows[perm[u]] |= 1 << perm[v];
            }
        }
        Ok(Graph { n: self.n, rows })
    }

    /// True iff `s` (a bitmask) spans no edge.
    pub fn is_independent(&self, s: u64) -> bool {
        bits(s).all(|v| self.rows[v] & s == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_on_three_vertices() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!((g.degree(0), g.degree(1), g.degree(2)), (1, 2, 1));
        assert_eq!(g.min_degree(), 1);
    }

    #[test]
    fn single_isolated_vertex() {
        let g = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.min_degree(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 1), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange(3, 3))
        ));
        assert!(matches!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(Error::LoopEdge(1))
        ));
        assert!(matches!(
            Graph::edgeless(65),
            Err(Error::TooManyVertices(65))
        ));
        assert!(matches!(Graph::edgeless(0), Err(Error::EmptyGraph)));
    }

    #[test]
    fn edge_edit_errors() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert!(matches!(g.delete_edge(1, 2), Err(Error::MissingEdge(1, 2))));
        assert!(matches!(g.add_edge(0, 1), Err(Error::DuplicateEdge(0, 1))));
        assert!(matches!(g.add_edge(0, 0), Err(Error::LoopEdge(0))));
    }

    #[test]
    fn delete_then_add_is_identity() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let h = g.delete_edge(0, 1).unwrap().add_edge(0, 1).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn vertex_deletion_compacts_labels() {
        // C_4 minus a vertex is P_3.
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p3 = c4.delete_vertex(0).unwrap();
        assert_eq!(p3.vertex_count(), 3);
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn induced_subgraphs() {
        let c6 =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let p3 = c6.induced_subgraph(0b111).unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        let empty = c6.induced_subgraph(0).unwrap();
        assert_eq!(empty.vertex_count(), 0);
        assert!(matches!(
            c6.induced_subgraph(1 << 6),
            Err(Error::VertexOutOfRange(6, 6))
        ));
    }

    #[test]
    fn components_partition_the_vertices() {
        // C_3 + C_4
        let g = Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)])
            .unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].count_ones(), 3);
        assert_eq!(comps[1].count_ones(), 4);
        assert_eq!(comps[0] | comps[1], g.full_mask());
        assert_eq!(comps[0] & comps[1], 0);
        assert!(!g.is_connected());
        assert!(g.induced_subgraph(comps[1]).unwrap().is_connected());
        let e3 = Graph::edgeless(3).unwrap();
        assert_eq!(e3.components().len(), 3);
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(g.degree_sum(), 2 * g.edge_count());
    }
}
