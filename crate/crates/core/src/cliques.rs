//! Exact clique and independence oracles, triangle detection, and the
//! complete-bipartite subgraph test.
//!
//! The clique solver is a branch-and-bound over candidate bitsets with a
//! greedy-coloring upper bound, which comfortably handles the few-hundred
//! vertex graphs the constructions produce. The independence solver is a
//! separate branch-and-bound (not clique-on-complement), so the two can
//! cross-check each other.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Witnessed clique number.
#[derive(Debug, Clone)]
pub struct CliqueResult {
    pub size: usize,
    pub witness: Vec<usize>,
}

/// Exact maximum clique with witness. Requires `n >= 1`.
pub fn clique_number(g: &Graph) -> CliqueResult {
    assert!(g.n() >= 1, "clique_number needs at least one vertex");
    let mut best: Vec<usize> = Vec::new();
    for comp in g.components() {
        let (sub, back) = g.induced(&comp);
        let local = max_clique_connected(&sub);
        if local.len() > best.len() {
            best = local.into_iter().map(|v| back[v]).collect();
        }
    }
    best.sort_unstable();
    debug_assert!(best
        .iter()
        .enumerate()
        .all(|(i, &u)| best[i + 1..].iter().all(|&v| g.has_edge(u, v))));
    CliqueResult {
        size: best.len(),
        witness: best,
    }
}

fn max_clique_connected(g: &Graph) -> Vec<usize> {
    let n = g.n();
    // Degeneracy order tends to shrink the search tree.
    let order = degeneracy_order(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // Adjacency in position space.
    let mut adj = vec![VertexSet::new(n); n];
    for &(u, v) in g.edges() {
        adj[pos[u]].insert(pos[v]);
        adj[pos[v]].insert(pos[u]);
    }
    let mut best = Vec::new();
    let mut current = Vec::new();
    let cand = VertexSet::full(n);
    expand(&adj, &cand, &mut current, &mut best);
    best.into_iter().map(|p| order[p]).collect()
}

fn expand(adj: &[VertexSet], cand: &VertexSet, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cand.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    // Greedy coloring of the candidates, highest color class first.
    let (ordered, bounds) = color_sort(adj, cand);
    let mut cand = cand.clone();
    for i in (0..ordered.len()).rev() {
        if current.len() + bounds[i] <= best.len() {
            return;
        }
        let v = ordered[i];
        current.push(v);
        let next = cand.intersection(&adj[v]);
        expand(adj, &next, current, best);
        current.pop();
        cand.remove(v);
    }
}

/// Greedy color classes over `cand`; returns vertices ordered by color and
/// the color-count upper bound per prefix position.
fn color_sort(adj: &[VertexSet], cand: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut uncolored = cand.clone();
    while let Some(_) = uncolored.min() {
        let mut class = VertexSet::new(cand.capacity());
        let mut avail = uncolored.clone();
        while let Some(v) = avail.min() {
            class.insert(v);
            avail.remove(v);
            avail.subtract(&adj[v]);
        }
        uncolored.subtract(&class);
        classes.push(class);
    }
    let mut ordered = Vec::with_capacity(cand.len());
    let mut bounds = Vec::with_capacity(cand.len());
    for (c, class) in classes.iter().enumerate() {
        for v in class.iter() {
            ordered.push(v);
            bounds.push(c + 1);
        }
    }
    (ordered, bounds)
}

/// Smallest-last (degeneracy) vertex order, ties broken by lowest id.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        removed[v] = true;
        order.push(v);
        for u in g.neighbors(v).iter() {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    order.reverse();
    order
}

/// Degeneracy (max min-degree over the removal process).
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut worst = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        worst = worst.max(deg[v]);
        removed[v] = true;
        for u in g.neighbors(v).iter() {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    worst
}

/// Witnessed independence number.
#[derive(Debug, Clone)]
pub struct IndependenceResult {
    pub size: usize,
    pub witness: Vec<usize>,
}

/// Exact maximum independent set with witness. Requires `n >= 1`.
///
/// Branching: pick a highest-degree vertex v in the remaining graph and
/// branch on excluding v vs. taking v (dropping its neighborhood). This is
/// deliberately a different algorithm from the clique solver.
pub fn independence_number(g: &Graph) -> IndependenceResult {
    assert!(g.n() >= 1, "independence_number needs at least one vertex");
    let mut best = Vec::new();
    let mut current = Vec::new();
    let all = VertexSet::full(g.n());
    mis_branch(g, &all, &mut current, &mut best);
    best.sort_unstable();
    debug_assert!(best
        .iter()
        .enumerate()
        .all(|(i, &u)| best[i + 1..].iter().all(|&v| !g.has_edge(u, v))));
    IndependenceResult {
        size: best.len(),
        witness: best,
    }
}

fn mis_branch(g: &Graph, remaining: &VertexSet, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if current.len() + remaining.len() <= best.len() {
        return;
    }
    // Vertices of remaining-degree <= 1 are always safe to take.
    let mut remaining = remaining.clone();
    let depth_before = current.len();
    loop {
        let mut took = false;
        for v in remaining.to_vec() {
            if !remaining.contains(v) {
                continue;
            }
            if g.neighbors(v).intersection_len(&remaining) <= 1 {
                current.push(v);
                remaining.remove(v);
                remaining.subtract(g.neighbors(v));
                took = true;
            }
        }
        if !took {
            break;
        }
    }
    if remaining.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
    } else if current.len() + remaining.len() > best.len() {
        let v = remaining
            .iter()
            .max_by_key(|&v| {
                (
                    g.neighbors(v).intersection_len(&remaining),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        // Branch 1: take v.
        let mut with_v = remaining.clone();
        with_v.remove(v);
        with_v.subtract(g.neighbors(v));
        current.push(v);
        mis_branch(g, &with_v, current, best);
        current.pop();
        // Branch 2: exclude v.
        let mut without_v = remaining.clone();
        without_v.remove(v);
        mis_branch(g, &without_v, current, best);
    }
    current.truncate(depth_before);
}

/// True iff the graph contains no triangle.
pub fn is_triangle_free(g: &Graph) -> bool {
    first_triangle(g).is_none()
}

/// Lexicographically first triangle, if any.
pub fn first_triangle(g: &Graph) -> Option<(usize, usize, usize)> {
    for &(u, v) in g.edges() {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        if let Some(w) = common.min() {
            let mut t = [u, v, w];
            t.sort_unstable();
            return Some((t[0], t[1], t[2]));
        }
    }
    None
}

/// All triangles as sorted triples in lexicographic order.
pub fn all_triangles(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for &(u, v) in g.edges() {
        for w in g.neighbors(u).intersection(g.neighbors(v)).iter() {
            if w > v {
                out.push((u, v, w));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Decides whether `g` contains `K_{a,b}` as a (not necessarily induced)
/// subgraph, for `1 <= a <= b`. Enumerates candidate `a`-sides among vertex
/// subsets and checks the common neighborhood.
pub fn contains_complete_bipartite(g: &Graph, a: usize, b: usize) -> bool {
    assert!(1 <= a && a <= b, "need 1 <= a <= b");
    let n = g.n();
    if n < a + b {
        return false;
    }
    let mut side = Vec::with_capacity(a);
    kab_search(g, a, b, 0, &mut side, None)
}

fn kab_search(
    g: &Graph,
    a: usize,
    b: usize,
    from: usize,
    side: &mut Vec<usize>,
    common: Option<VertexSet>,
) -> bool {
    if side.len() == a {
        let mut c = common.unwrap();
        for &v in side.iter() {
            c.remove(v);
        }
        return c.len() >= b;
    }
    for v in from..g.n() {
        let next = match &common {
            None => g.neighbors(v).clone(),
            Some(c) => c.intersection(g.neighbors(v)),
        };
        // Even counting side vertices, the common neighborhood must stay large.
        if next.len() < b {
            continue;
        }
        side.push(v);
        if kab_search(g, a, b, v + 1, side, Some(next)) {
            return true;
        }
        side.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;
    use crate::rng::SplitMix64;

    #[test]
    fn clique_known_values() {
        assert_eq!(clique_number(&Graph::complete(5)).size, 5);
        assert_eq!(clique_number(&Graph::cycle(5)).size, 2);
        // Exhaustive enumeration pins the Petersen value.
        assert_eq!(brute::omega(&Graph::petersen()), 2);
        assert_eq!(clique_number(&Graph::petersen()).size, 2);
        assert_eq!(clique_number(&Graph::empty(3)).size, 1);
    }

    #[test]
    fn independence_known_values() {
        assert_eq!(independence_number(&Graph::complete(5)).size, 1);
        assert_eq!(independence_number(&Graph::cycle(5)).size, 2);
        // K_{3x4}: parts of size 4 are the maximum independent sets.
        let k3x4 = crate::construct::complete_multipartite(3, 4);
        assert_eq!(brute::alpha(&k3x4.graph), 4);
        assert_eq!(independence_number(&k3x4.graph).size, 4);
    }

    #[test]
    fn clique_complement_matches_independence() {
        // Cross-check of the two independent solvers on all tiny graphs.
        let mut rng = SplitMix64::new(11);
        for n in 1..=8usize {
            for _ in 0..40 {
                let edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.next_bool(0.5))
                    .collect();
                let g = Graph::from_edges(n, edges).unwrap();
                assert_eq!(
                    clique_number(&g.complement()).size,
                    independence_number(&g).size,
                    "mismatch on {g:?}"
                );
            }
        }
    }

    #[test]
    fn clique_bounds_invariant() {
        let mut rng = SplitMix64::new(5);
        for n in 1..=9usize {
            for _ in 0..20 {
                let edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.next_bool(0.4))
                    .collect();
                let g = Graph::from_edges(n, edges).unwrap();
                let w = clique_number(&g).size;
                assert!(w <= n);
                assert_eq!(w == 1, g.m() == 0);
                assert_eq!(w, brute::omega(&g));
            }
        }
    }

    #[test]
    fn triangle_detection() {
        assert!(is_triangle_free(&Graph::cycle(6)));
        assert!(!is_triangle_free(&Graph::complete(4)));
        assert_eq!(all_triangles(&Graph::complete(4)).len(), 4);
        assert_eq!(
            all_triangles(&Graph::complete(4)),
            brute::triangles(&Graph::complete(4))
        );
    }

    #[test]
    fn complete_bipartite_subgraphs() {
        assert!(contains_complete_bipartite(&Graph::cycle(4), 2, 2));
        assert!(!contains_complete_bipartite(&Graph::path(6), 2, 2));
        // Any 2+3 split of a 5-clique works.
        assert!(contains_complete_bipartite(&Graph::complete(5), 2, 3));
        assert!(!contains_complete_bipartite(&Graph::complete(4), 2, 3));
        assert!(contains_complete_bipartite(&Graph::petersen(), 1, 3));
        assert!(!contains_complete_bipartite(&Graph::petersen(), 2, 2));
    }
}
