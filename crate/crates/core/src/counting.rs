//! Exact counts of independent sets by size.
//!
//! The workhorse is `independence_vector`: branch on a maximum-degree vertex
//! with the recursion i_t(G) = i_t(G-v) + i_{t-1}(G-v-N(v)), switching to
//! binomials on edgeless remainders and factoring across connected
//! components via convolution. All arithmetic is checked; overflow is an
//! error, never a wrap.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Sequence (i_0, i_1, ..., i_alpha) of independent-set counts by size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountVector(Vec<u64>);

impl CountVector {
    /// i_t, with sizes past the independence number counting zero.
    pub fn get(&self, t: usize) -> u64 {
        self.0.get(t).copied().unwrap_or(0)
    }

    /// Independence number alpha(G): the largest t with i_t > 0.
    pub fn independence_number(&self) -> usize {
        self.0.len() - 1
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// i(G): the total number of independent sets including the empty one.
    pub fn total(&self) -> Result<u64> {
        self.0.iter().try_fold(0u64, |acc, &c| add(acc, c))
    }

    fn trimmed(mut v: Vec<u64>) -> CountVector {
        while v.len() > 1 && *v.last().unwrap() == 0 {
            v.pop();
        }
        CountVector(v)
    }
}

fn add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// C(n, k) with the convention C(n, k) = 0 for k > n; k is unconstrained.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        // exact at every step: acc holds C(n, i) * remaining structure
        acc = mul(acc, n - i)? / (i + 1);
    }
    Ok(acc)
}

/// Falling power x(x-1)...(x-(t-1)); the empty product is 1.
pub fn falling_power(x: u64, t: u64) -> Result<u64> {
    let mut acc: u64 = 1;
    for i in 0..t {
        if i >= x {
            return Ok(0);
        }
        acc = mul(acc, x - i)?;
    }
    Ok(acc)
}

pub fn factorial(t: u64) -> Result<u64> {
    falling_power(t, t)
}

/// Full independence vector of `g`; the zero-vertex graph yields (1).
pub fn independence_vector(g: &Graph) -> Result<CountVector> {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        let mut v = Vec::with_capacity(n + 1);
        for t in 0..=n {
            v.push(binomial(n as u64, t as u64)?);
        }
        return Ok(CountVector::trimmed(v));
    }
    let comps = g.components();
    if comps.len() > 1 {
        let mut acc = CountVector(vec![1]);
        for c in comps {
            let part = independence_vector(&g.induced_subgraph(c)?)?;
            acc = convolve(&acc, &part)?;
        }
        return Ok(acc);
    }
    // connected with at least one edge: branch on a maximum-degree vertex
    let v = (0..n).max_by_key(|&v| g.degree(v)).unwrap();
    let without = independence_vector(&g.delete_vertex(v)?)?;
    let with = independence_vector(&g.delete_closed_neighborhood(v)?)?;
    let len = without.0.len().max(with.0.len() + 1);
    let mut out = vec![0u64; len];
    for (t, &c) in without.0.iter().enumerate() {
        out[t] = add(out[t], c)?;
    }
    for (t, &c) in with.0.iter().enumerate() {
        out[t + 1] = add(out[t + 1], c)?;
    }
    Ok(CountVector::trimmed(out))
}

/// Convolution of two count vectors; the vector of a disjoint union.
pub fn convolve(a: &CountVector, b: &CountVector) -> Result<CountVector> {
    let mut out = vec![0u64; a.0.len() + b.0.len() - 1];
    for (i, &x) in a.0.iter().enumerate() {
        for (j, &y) in b.0.iter().enumerate() {
            out[i + j] = add(out[i + j], mul(x, y)?)?;
        }
    }
    Ok(CountVector::trimmed(out))
}

/// i_t(G): number of independent sets of size t.
pub fn count_independent_sets_of_size(g: &Graph, t: usize) -> Result<u64> {
    Ok(independence_vector(g)?.get(t))
}

/// i(G): total number of independent sets.
pub fn total_independent_sets(g: &Graph) -> Result<u64> {
    independence_vector(g)?.total()
}

/// Number of ordered independent sets of size t: i_t(G) * t!.
pub fn ordered_count(g: &Graph, t: usize) -> Result<u64> {
    mul(count_independent_sets_of_size(g, t)?, factorial(t as u64)?)
}

/// i_t(P_k) = C(k+1-t, t).
pub fn closed_form_path(k: usize, t: usize) -> Result<u64> {
    if k == 0 {
        return Err(Error::Construction("path needs k >= 1".into()));
    }
    binomial((k + 1).saturating_sub(t) as u64, t as u64)
}

/// i_t(C_k) = C(k-t, t) + C(k-t-1, t-1).
pub fn closed_form_cycle(k: usize, t: usize) -> Result<u64> {
    if k < 3 {
        return Err(Error::Construction("cycle needs k >= 3".into()));
    }
    if t == 0 {
        return Ok(1);
    }
    add(
        binomial(k.saturating_sub(t) as u64, t as u64)?,
        binomial(k.saturating_sub(t + 1) as u64, (t - 1) as u64)?,
    )
}

/// i_t(K_{delta,n-delta}) = C(n-delta, t) + C(delta, t) for t >= 1; 1 at t=0.
pub fn extremal_value(n: usize, delta: usize, t: usize) -> Result<u64> {
    if delta > n {
        return Err(Error::InvalidSpec(format!(
            "delta {} exceeds n {}",
            delta, n
        )));
    }
    if t == 0 {
        return Ok(1);
    }
    add(
        binomial((n - delta) as u64, t as u64)?,
        binomial(delta as u64, t as u64)?,
    )
}

/// Floor of n(n-(delta+1))...(n-(delta+t-1)) / t!, an upper bound on i_t
/// over every n-vertex graph of minimum degree delta.
pub fn easy_upper_bound(n: usize, delta: usize, t: usize) -> Result<u64> {
    if t == 0 {
        return Ok(1);
    }
    let mut prod: u128 = n as u128;
    for i in 1..t {
        let factor = n as i64 - (delta + i) as i64;
        if factor <= 0 {
            return Ok(0);
        }
        prod = prod.checked_mul(factor as u128).ok_or(Error::Overflow)?;
    }
    let fact = factorial(t as u64)? as u128;
    let out = prod / fact;
    u64::try_from(out).map_err(|_| Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::graph::Graph;

    #[test]
    fn size_counts_match_paper_examples() {
        let c5 = constructions::cycle(5).unwrap();
        assert_eq!(count_independent_sets_of_size(&c5, 2).unwrap(), 5);
        let k23 = constructions::complete_bipartite(2, 3).unwrap();
        assert_eq!(count_independent_sets_of_size(&k23, 3).unwrap(), 1);
        let e4 = Graph::edgeless(4).unwrap();
        assert_eq!(count_independent_sets_of_size(&e4, 2).unwrap(), 6);
        let w7 = constructions::windmill(7).unwrap();
        assert_eq!(count_independent_sets_of_size(&w7, 3).unwrap(), 8);
    }

    #[test]
    fn vectors_and_totals() {
        let p3 = constructions::path(3).unwrap();
        let v = independence_vector(&p3).unwrap();
        assert_eq!(v.counts(), &[1, 3, 1]);
        assert_eq!(v.total().unwrap(), 5);

        let c5 = constructions::cycle(5).unwrap();
        let v = independence_vector(&c5).unwrap();
        assert_eq!(v.counts(), &[1, 5, 5]);
        assert_eq!(v.total().unwrap(), 11);

        let k23 = constructions::complete_bipartite(2, 3).unwrap();
        assert_eq!(total_independent_sets(&k23).unwrap(), 11);
    }

    #[test]
    fn zero_vertex_base_case() {
        let g = Graph::edgeless(1).unwrap().induced_subgraph(0).unwrap();
        let v = independence_vector(&g).unwrap();
        assert_eq!(v.counts(), &[1]);
        assert_eq!(v.total().unwrap(), 1);
    }

    #[test]
    fn ordered_counts() {
        let k23 = constructions::complete_bipartite(2, 3).unwrap();
        assert_eq!(ordered_count(&k23, 3).unwrap(), 6);
        let e4 = Graph::edgeless(4).unwrap();
        assert_eq!(ordered_count(&e4, 2).unwrap(), 12);
        let c5 = constructions::cycle(5).unwrap();
        assert_eq!(ordered_count(&c5, 2).unwrap(), 10);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_path(4, 2).unwrap(), 3);
        assert_eq!(closed_form_cycle(6, 3).unwrap(), 2);
        for k in 1..20 {
            assert_eq!(closed_form_path(k, 0).unwrap(), 1);
        }
        assert!(closed_form_cycle(2, 1).is_err());
        // out-of-range t falls back to the zero-binomial convention
        assert_eq!(closed_form_path(3, 5).unwrap(), 0);
        assert_eq!(closed_form_cycle(5, 4).unwrap(), 0);
    }

    #[test]
    fn extremal_values() {
        assert_eq!(extremal_value(5, 2, 3).unwrap(), 1);
        assert_eq!(extremal_value(10, 3, 4).unwrap(), 35);
        for delta in 1..10 {
            assert_eq!(extremal_value(2 * delta, delta, delta).unwrap(), 2);
        }
        assert_eq!(extremal_value(7, 0, 0).unwrap(), 1);
        assert!(extremal_value(3, 4, 1).is_err());
    }

    #[test]
    fn easy_bound() {
        assert_eq!(easy_upper_bound(7, 2, 3).unwrap(), 14);
        for n in 3..12 {
            assert_eq!(easy_upper_bound(n, 2, 1).unwrap(), n as u64);
        }
    }

    #[test]
    fn falling_powers() {
        assert_eq!(falling_power(5, 3).unwrap(), 60);
        assert_eq!(falling_power(17, 0).unwrap(), 1);
        assert_eq!(falling_power(3, 5).unwrap(), 0);
        assert!(falling_power(u64::MAX, 3).is_err());
    }

    #[test]
    fn deletion_recurrence_holds() {
        let g = constructions::complete_bipartite(3, 4).unwrap();
        let v = independence_vector(&g).unwrap();
        for x in g.vertices() {
            let without = independence_vector(&g.delete_vertex(x).unwrap()).unwrap();
            let with = independence_vector(&g.delete_closed_neighborhood(x).unwrap()).unwrap();
            for t in 1..=8 {
                assert_eq!(v.get(t), without.get(t) + with.get(t - 1));
            }
        }
    }

    #[test]
    fn convolution_matches_disjoint_union() {
        let c3 = constructions::cycle(3).unwrap();
        let c4 = constructions::cycle(4).unwrap();
        let u = constructions::disjoint_union(&c3, &c4).unwrap();
        let conv = convolve(
            &independence_vector(&c3).unwrap(),
            &independence_vector(&c4).unwrap(),
        )
        .unwrap();
        assert_eq!(independence_vector(&u).unwrap(), conv);
    }
}
