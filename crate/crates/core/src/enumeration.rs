//! Isomorphism-free enumeration of graphs with a minimum-degree constraint.
//!
//! Generation proceeds level by level: the classes on m+1 vertices are the
//! canonical forms of parent-plus-one-vertex extensions, where the parent
//! ranges over the classes on m vertices and the new vertex over every
//! neighborhood subset. Deduplication by canonical form at each level keeps
//! exactly one representative per class. Every prune applied below the final
//! level is hereditary (preserved by deleting the newest vertex) and
//! isomorphism-invariant, which together with induction on m gives
//! completeness; non-hereditary filters run post hoc on the final level.
//!
//! The workloads stop at n = 10, so a canonical form fits in one u64 word
//! (45 upper-triangle bits); levels are manipulated as sorted word lists.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::canon::canonical_form;
use crate::criticality::{is_edge_critical, is_vertex_critical};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap without the explicit budget flag.
pub const MAX_ENUM_VERTICES: usize = 9;
/// Absolute cap even with the flag.
pub const MAX_ENUM_VERTICES_LARGE: usize = 10;

/// What to enumerate: the family G(n, min_degree) plus optional filters.
///
/// `min_degree` is a lower bound by default; set `exact_min_degree` to
/// require equality. `critical_only` asks for edge- and vertex-critical
/// graphs (which forces minimum degree exactly `min_degree`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EnumSpec {
    pub n: usize,
    pub min_degree: usize,
    pub exact_min_degree: bool,
    pub connected_only: bool,
    pub critical_only: bool,
    pub vertex_critical_only: bool,
    pub max_edges: Option<usize>,
    /// Opt-in for n = 10, which takes minutes rather than seconds.
    pub allow_large: bool,
}

impl EnumSpec {
    pub fn new(n: usize, min_degree: usize) -> Self {
        EnumSpec {
            n,
            min_degree,
            exact_min_degree: false,
            connected_only: false,
            critical_only: false,
            vertex_critical_only: false,
            max_edges: None,
            allow_large: false,
        }
    }

    fn check_budget(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidSpec("enumeration needs n >= 1".into()));
        }
        let cap = if self.allow_large {
            MAX_ENUM_VERTICES_LARGE
        } else {
            MAX_ENUM_VERTICES
        };
        if self.n > cap {
            return Err(Error::BudgetExceeded(format!(
                "n = {} exceeds the enumeration cap of {}{}",
                self.n,
                cap,
                if self.allow_large {
                    ""
                } else {
                    " (pass the large-budget flag for 10)"
                }
            )));
        }
        Ok(())
    }

    /// The edge-criticality prune below: only sound when every surviving
    /// graph must be edge-critical.
    fn edge_prune(&self) -> bool {
        self.critical_only
    }
}

/// One slice of a sharded enumeration; see [`partition_work`].
#[derive(Clone, Debug)]
pub struct ShardSpec {
    pub spec: EnumSpec,
    pub index: usize,
    pub shards: usize,
}

/// All classes satisfying `spec`, exactly one representative each, sorted by
/// canonical form.
pub fn enumerate(spec: &EnumSpec) -> Result<Vec<Graph>> {
    spec.check_budget()?;
    let words = raw_classes(spec)?;
    finish(spec, words.iter().copied())
}

/// Number of classes satisfying `spec`.
pub fn enumerate_count(spec: &EnumSpec) -> Result<usize> {
    Ok(enumerate(spec)?.len())
}

/// Splits the final generation level into `shards` independent
/// sub-enumerations whose outputs are disjoint and together cover
/// `enumerate(spec)` exactly.
pub fn partition_work(spec: &EnumSpec, shards: usize) -> Result<Vec<ShardSpec>> {
    if shards == 0 {
        return Err(Error::InvalidSpec("shards must be >= 1".into()));
    }
    spec.check_budget()?;
    Ok((0..shards)
        .map(|index| ShardSpec {
            spec: spec.clone(),
            index,
            shards,
        })
        .collect())
}

/// Runs one shard. Every shard rebuilds the (cheap) levels below n and then
/// extends only its slice of the level-(n-1) parents; a graph belongs to the
/// shard owning the least canonical form over its one-vertex deletions, so
/// the shard outputs partition the class list.
pub fn enumerate_shard(shard: &ShardSpec) -> Result<Vec<Graph>> {
    let spec = &shard.spec;
    spec.check_budget()?;
    if shard.index >= shard.shards {
        return Err(Error::InvalidSpec(format!(
            "shard index {} out of range for {} shards",
            shard.index, shard.shards
        )));
    }
    if shard.shards == 1 {
        return enumerate(spec);
    }
    if spec.n == 1 {
        // single class; give it to shard 0
        return if shard.index == 0 {
            enumerate(spec)
        } else {
            Ok(Vec::new())
        };
    }
    let parents = levels_up_to(spec, spec.n - 1);
    let lo = shard.index * parents.len() / shard.shards;
    let hi = (shard.index + 1) * parents.len() / shard.shards;
    let mut words: Vec<u64> = parents[lo..hi]
        .par_iter()
        .flat_map_iter(|&pw| {
            let children = extend_parent(pw, spec.n - 1, spec);
            children
                .into_iter()
                .filter(|&cw| {
                    let idx = owner_index(cw, spec.n, &parents);
                    (lo..hi).contains(&idx)
                })
                .collect::<Vec<u64>>()
        })
        .collect();
    words.sort_unstable();
    words.dedup();
    finish(spec, words.into_iter())
}

/// Index into the sorted parent list of the least canonical one-vertex
/// deletion that survives the hereditary prunes. The generating parent
/// always qualifies, so the minimum exists.
fn owner_index(word: u64, n: usize, parents: &[u64]) -> usize {
    let g = word_to_graph(n, word);
    let mut best: Option<usize> = None;
    for v in 0..n {
        let d = g.delete_vertex(v).expect("vertex in range");
        let dw = canon_word(&d);
        if let Ok(idx) = parents.binary_search(&dw) {
            best = Some(match best {
                None => idx,
                Some(b) => b.min(idx),
            });
        }
    }
    best.expect("every emitted graph has a feasible deletion")
}

/// Cache of raw (pre-filter) class lists keyed by everything that shapes
/// generation; acceptance runs hit the same heavy levels repeatedly.
type RawKey = (usize, usize, bool, Option<usize>);

fn cache() -> &'static Mutex<HashMap<RawKey, Arc<Vec<u64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<RawKey, Arc<Vec<u64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Sorted canonical words of all classes on `spec.n` vertices with minimum
/// degree >= `spec.min_degree`, after hereditary prunes only.
fn raw_classes(spec: &EnumSpec) -> Result<Arc<Vec<u64>>> {
    let key: RawKey = (spec.n, spec.min_degree, spec.edge_prune(), spec.max_edges);
    if let Some(hit) = cache().lock().unwrap().get(&key) {
        return Ok(Arc::clone(hit));
    }
    // A run without the edge prune or an edge cap for a smaller minimum
    // degree is a superset; filtering it beats regenerating.
    if !spec.edge_prune() && spec.max_edges.is_none() {
        let superset = {
            let guard = cache().lock().unwrap();
            guard
                .iter()
                .find(|((n, d, prune, cap), _)| {
                    *n == spec.n && *d <= spec.min_degree && !prune && cap.is_none()
                })
                .map(|(_, v)| Arc::clone(v))
        };
        if let Some(list) = superset {
            let filtered: Vec<u64> = list
                .iter()
                .copied()
                .filter(|&w| word_to_graph(spec.n, w).min_degree() >= spec.min_degree)
                .collect();
            let arc = Arc::new(filtered);
            cache().lock().unwrap().insert(key, Arc::clone(&arc));
            return Ok(arc);
        }
    }
    let words = levels_up_to(spec, spec.n);
    let arc = Arc::new(words);
    cache().lock().unwrap().insert(key, Arc::clone(&arc));
    Ok(arc)
}

/// Generates the sorted class words at level `m` (graphs on m vertices that
/// can still grow into `spec`), starting from the single one-vertex class.
fn levels_up_to(spec: &EnumSpec, m: usize) -> Vec<u64> {
    let mut level: Vec<u64> = vec![0]; // the one-vertex graph
    for cur in 1..m {
        let mut next: Vec<u64> = level
            .par_iter()
            .flat_map_iter(|&pw| extend_parent(pw, cur, spec))
            .collect();
        next.sort_unstable();
        next.dedup();
        level = next;
    }
    level
}

/// All pruned-surviving extensions of one parent on `m` vertices, as
/// canonical words on m+1 vertices (unsorted, may repeat).
fn extend_parent(parent_word: u64, m: usize, spec: &EnumSpec) -> Vec<u64> {
    let parent = word_to_graph(m, parent_word);
    let remaining = spec.n - (m + 1); // vertices still to be added
    let delta = spec.min_degree;
    let mut out = Vec::new();
    'subset: for t in 0u64..(1 << m) {
        let child = parent.add_vertex_with_neighbors(t);
        if let Some(cap) = spec.max_edges {
            if child.edge_count() > cap {
                continue;
            }
        }
        for v in 0..=m {
            // each existing vertex can gain at most one edge per future vertex
            if child.degree(v) + remaining < delta {
                continue 'subset;
            }
        }
        if spec.edge_prune() {
            // an edge whose endpoints both exceed delta stays that way as
            // degrees only grow, killing edge-criticality
            for (u, v) in child.edges() {
                if child.degree(u) > delta && child.degree(v) > delta {
                    continue 'subset;
                }
            }
        }
        out.push(canon_word(&child));
    }
    out
}

/// Applies the post-hoc (non-hereditary) filters and decodes to graphs.
fn finish(spec: &EnumSpec, words: impl Iterator<Item = u64>) -> Result<Vec<Graph>> {
    let delta = spec.min_degree;
    let mut out = Vec::new();
    for w in words {
        let g = word_to_graph(spec.n, w);
        if g.min_degree() < delta {
            continue;
        }
        if (spec.exact_min_degree || spec.critical_only || spec.vertex_critical_only)
            && g.min_degree() != delta
        {
            continue;
        }
        if spec.connected_only && !g.is_connected() {
            continue;
        }
        if spec.critical_only
            && !(is_edge_critical(&g, delta)?.0 && is_vertex_critical(&g, delta)?.0)
        {
            continue;
        }
        if spec.vertex_critical_only && !is_vertex_critical(&g, delta)?.0 {
            continue;
        }
        out.push(g);
    }
    Ok(out)
}

fn canon_word(g: &Graph) -> u64 {
    canonical_form(g).first_word()
}

/// Inverse of `canon_word` for n <= 11: unpack the MSB-first upper-triangle
/// bit string in column order.
fn word_to_graph(n: usize, word: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if word & (1u64 << (63 - k)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges).expect("decoded word is a valid graph")
}

impl Graph {
    /// New highest-numbered vertex adjacent to the mask `neighbors`.
    fn add_vertex_with_neighbors(&self, neighbors: u64) -> Graph {
        let m = self.vertex_count();
        let mut rows: Vec<u64> = (0..m)
            .map(|v| {
                let mut row = self.neighbor_mask(v);
                if neighbors & (1 << v) != 0 {
                    row |= 1 << m;
                }
                row
            })
            .collect();
        rows.push(neighbors);
        Graph::from_rows(rows)
    }
}
