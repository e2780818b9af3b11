//! Treewidth: exact values on tiny graphs by elimination-order search with
//! memoized failure states, and a min-fill upper bound everywhere else.
//! Results are labeled so audits can never mistake a bound for an exact
//! value.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// A treewidth estimate that knows whether it is exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreewidthBound {
    Exact(usize),
    UpperBound(usize),
}

impl TreewidthBound {
    pub fn value(&self) -> usize {
        match *self {
            TreewidthBound::Exact(w) | TreewidthBound::UpperBound(w) => w,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, TreewidthBound::Exact(_))
    }
}

/// Exact treewidth if `n <= exact_limit`, otherwise the min-fill upper
/// bound, labeled accordingly.
pub fn treewidth(g: &Graph, exact_limit: usize) -> TreewidthBound {
    if g.n() <= exact_limit && g.n() <= 26 {
        TreewidthBound::Exact(treewidth_exact(g))
    } else {
        TreewidthBound::UpperBound(min_fill_upper_bound(g))
    }
}

/// Exact treewidth for graphs with at most 26 vertices.
pub fn treewidth_exact(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 26, "exact treewidth is for tiny graphs");
    if n == 0 {
        return 0;
    }
    // Per-component, take the max.
    let mut best = 0;
    for comp in g.components() {
        let (sub, _) = g.induced(&comp);
        best = best.max(component_treewidth(&sub));
    }
    best
}

fn component_treewidth(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    let lb = crate::cliques::clique_number(g).size.saturating_sub(1);
    let ub = min_fill_upper_bound(g);
    for k in lb..=ub {
        let mut failed: std::collections::HashSet<u32> = Default::default();
        let adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
        if eliminate(&adj, 0, k, n, &mut failed) {
            return k;
        }
    }
    ub
}

/// Can all vertices be eliminated with fill-degree <= k? The graph after
/// eliminating a set depends only on the set, so failures memoize on the
/// eliminated-set bitmask.
fn eliminate(
    adj: &[VertexSet],
    eliminated: u32,
    k: usize,
    n: usize,
    failed: &mut std::collections::HashSet<u32>,
) -> bool {
    let remaining = n - eliminated.count_ones() as usize;
    if remaining <= k + 1 {
        return true;
    }
    if failed.contains(&eliminated) {
        return false;
    }
    for v in 0..n {
        if eliminated >> v & 1 == 1 {
            continue;
        }
        let live_deg = adj[v]
            .iter()
            .filter(|&u| eliminated >> u & 1 == 0)
            .count();
        if live_deg > k {
            continue;
        }
        // Eliminate v: its live neighbors become a clique.
        let nbrs: Vec<usize> = adj[v]
            .iter()
            .filter(|&u| eliminated >> u & 1 == 0)
            .collect();
        let mut next: Vec<VertexSet> = adj.to_vec();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                next[a].insert(b);
                next[b].insert(a);
            }
        }
        if eliminate(&next, eliminated | 1 << v, k, n, failed) {
            return true;
        }
    }
    failed.insert(eliminated);
    false
}

/// Min-fill elimination heuristic; returns the max elimination degree.
pub fn min_fill_upper_bound(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut alive = VertexSet::full(n);
    let mut width = 0;
    for _ in 0..n {
        // Pick the vertex whose elimination adds the fewest fill edges,
        // ties by degree then id.
        let v = alive
            .iter()
            .min_by_key(|&v| {
                let nbrs: Vec<usize> = adj[v].intersection(&alive).to_vec();
                let mut fill = 0usize;
                for (i, &a) in nbrs.iter().enumerate() {
                    for &b in &nbrs[i + 1..] {
                        if !adj[a].contains(b) {
                            fill += 1;
                        }
                    }
                }
                (fill, nbrs.len(), v)
            })
            .unwrap();
        let nbrs: Vec<usize> = adj[v].intersection(&alive).to_vec();
        width = width.max(nbrs.len());
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        alive.remove(v);
    }
    width
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    #[test]
    fn known_treewidths() {
        assert_eq!(treewidth_exact(&Graph::path(6)), 1);
        assert_eq!(treewidth_exact(&Graph::cycle(6)), 2);
        assert_eq!(treewidth_exact(&Graph::complete(5)), 4);
        assert_eq!(treewidth_exact(&Graph::petersen()), 4);
        assert_eq!(treewidth_exact(&Graph::empty(4)), 0);
        // 3x3 grid has treewidth 3.
        let idx = |r: usize, c: usize| r * 3 + c;
        let mut edges = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                if c + 1 < 3 {
                    edges.push((idx(r, c), idx(r, c + 1)));
                }
                if r + 1 < 3 {
                    edges.push((idx(r, c), idx(r + 1, c)));
                }
            }
        }
        assert_eq!(treewidth_exact(&Graph::from_edges(9, edges).unwrap()), 3);
    }

    #[test]
    fn upper_bound_dominates_exact() {
        let mut rng = SplitMix64::new(23);
        for n in 2..=9usize {
            for _ in 0..15 {
                let edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.next_bool(0.4))
                    .collect();
                let g = Graph::from_edges(n, edges).unwrap();
                let exact = treewidth_exact(&g);
                assert!(min_fill_upper_bound(&g) >= exact);
                assert_eq!(treewidth(&g, 20), TreewidthBound::Exact(exact));
            }
        }
    }
}
