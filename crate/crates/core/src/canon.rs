//! Canonical labeling by degree refinement plus backtracking.
//!
//! The canonical form of a graph is the lexicographically least
//! upper-triangle adjacency bit string over all relabelings that respect the
//! refinement partition. The bit string uses graph6 column order: pair
//! `(i, j)` with `i < j` sits at index `j(j-1)/2 + i`, most significant bit
//! first within each word, so word-wise comparison equals bit-string
//! comparison. Exactness is what matters here; the workloads stay at n <= 10.

use crate::graph::Graph;

/// Relabeling-invariant representative of an isomorphism class.
///
/// Two graphs have equal `CanonicalForm` iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    words: Vec<u64>,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Upper-triangle bit at column-order index `k`.
    fn bit(&self, k: usize) -> bool {
        self.words[k / 64] & (1u64 << (63 - k % 64)) != 0
    }

    /// First word of the packed bit string; the whole form when n <= 11.
    pub(crate) fn first_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    /// Rebuilds the representative graph carrying this form.
    pub fn to_graph(&self) -> Graph {
        let mut rows = vec![0u64; self.n];
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bit(k) {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_rows(rows)
    }
}

/// Computes the canonical form of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.vertex_count();
    if n <= 1 {
        return CanonicalForm {
            n,
            words: Vec::new(),
        };
    }
    let nbits = n * (n - 1) / 2;
    let nwords = nbits.div_ceil(64);

    // Refinement-respecting target: position p may only receive vertices of
    // color pos_color[p].
    let color = refine(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (color[v], v));
    let pos_color: Vec<usize> = order.iter().map(|&v| color[v]).collect();

    let mut search = Search {
        g,
        n,
        color: &color,
        pos_color: &pos_color,
        perm: vec![usize::MAX; n],
        used: 0u64,
        cur: vec![0u64; nwords],
        best: None,
    };
    search.dfs(0, Status::Smaller);
    CanonicalForm {
        n,
        words: search.best.expect("canonical search found no labeling"),
    }
}

impl Graph {
    /// The canonical representative of this graph's isomorphism class.
    pub fn canonicalize(&self) -> Graph {
        canonical_form(self).to_graph()
    }
}

/// Relation of the current partial bit string to the best complete one.
#[derive(Clone, Copy, PartialEq)]
enum Status {
    Equal,
    Smaller,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    color: &'a [usize],
    pos_color: &'a [usize],
    /// perm[pos] = original vertex placed at that position.
    perm: Vec<usize>,
    used: u64,
    cur: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl Search<'_> {
    fn dfs(&mut self, pos: usize, status: Status) {
        if pos == self.n {
            if status == Status::Smaller {
                self.best = Some(self.cur.clone());
            }
            return;
        }
        let mut status = status;
        let mut tried: Vec<usize> = Vec::new();
        for u in 0..self.n {
            if self.used & (1 << u) != 0 || self.color[u] != self.pos_color[pos] {
                continue;
            }
            // Twins are swapped by an automorphism, so one representative per
            // twin class suffices at each node.
            if tried.iter().any(|&w| self.twins(u, w)) {
                continue;
            }
            tried.push(u);

            let col = self.column_bits(pos, u);
            let child_status = match status {
                Status::Smaller => Status::Smaller,
                Status::Equal => match self.compare_column(pos, col) {
                    std::cmp::Ordering::Greater => continue,
                    std::cmp::Ordering::Less => Status::Smaller,
                    std::cmp::Ordering::Equal => Status::Equal,
                },
            };
            self.write_column(pos, col);
            self.perm[pos] = u;
            self.used |= 1 << u;
            self.dfs(pos + 1, child_status);
            self.used &= !(1 << u);
            self.perm[pos] = usize::MAX;
            if child_status == Status::Smaller {
                // best now extends the current prefix exactly
                status = Status::Equal;
            }
        }
    }

    fn twins(&self, u: usize, w: usize) -> bool {
        let strip = !((1u64 << u) | (1u64 << w));
        self.g.neighbor_mask(u) & strip == self.g.neighbor_mask(w) & strip
    }

    /// Bits of column `pos` when vertex `u` lands there: bit i (ascending,
    /// packed from the LSB end of a word) is adjacency to perm[i].
    fn column_bits(&self, pos: usize, u: usize) -> u64 {
        let row = self.g.neighbor_mask(u);
        let mut col = 0u64;
        for i in 0..pos {
            if row & (1 << self.perm[i]) != 0 {
                col |= 1 << i;
            }
        }
        col
    }

    fn compare_column(&self, pos: usize, col: u64) -> std::cmp::Ordering {
        if pos == 0 {
            return std::cmp::Ordering::Equal;
        }
        let best = self.best.as_ref().expect("Equal status requires a best");
        let base = pos * (pos - 1) / 2;
        for i in 0..pos {
            let cur_bit = col & (1 << i) != 0;
            let k = base + i;
            let best_bit = best[k / 64] & (1u64 << (63 - k % 64)) != 0;
            if cur_bit != best_bit {
                return if best_bit {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                };
            }
        }
        std::cmp::Ordering::Equal
    }

    fn write_column(&mut self, pos: usize, col: u64) {
        if pos == 0 {
            return;
        }
        let base = pos * (pos - 1) / 2;
        for i in 0..pos {
            let k = base + i;
            let mask = 1u64 << (63 - k % 64);
            if col & (1 << i) != 0 {
                self.cur[k / 64] |= mask;
            } else {
                self.cur[k / 64] &= !mask;
            }
        }
    }
}

/// Iterated color refinement: start from degrees, then repeatedly split by
/// the multiset of neighbor colors. Color ids are assigned by sorting
/// signatures, so they are isomorphism-invariant.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    normalize(&mut color);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut uniq: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        uniq.sort();
        uniq.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| uniq.binary_search(&s).unwrap())
            .collect();
        if next == color {
            return color;
        }
        color = next;
        sigs.clear();
    }
}

fn normalize(color: &mut [usize]) {
    let mut uniq: Vec<usize> = color.to_vec();
    uniq.sort_unstable();
    uniq.dedup();
    for c in color.iter_mut() {
        *c = uniq.binary_search(c).unwrap();
    }
}
