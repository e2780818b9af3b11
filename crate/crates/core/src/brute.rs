//! Tiny reference implementations with no shared code paths to the
//! production oracles. The verification suites compare the fast oracles
//! against these on small instances; they enumerate, so keep inputs under
//! a couple dozen vertices.

use crate::graph::Graph;

/// Maximum clique size by enumerating all vertex subsets. `n <= ~20`.
pub fn omega(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 24, "brute omega is for tiny graphs");
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
        {
            best = size;
        }
    }
    best
}

/// Maximum independent set size by subset enumeration.
pub fn alpha(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 24, "brute alpha is for tiny graphs");
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
        {
            best = size;
        }
    }
    best
}

fn colorable_rec(g: &Graph, c: usize, colors: &mut Vec<usize>, v: usize) -> bool {
    if v == g.n() {
        return true;
    }
    for col in 0..c {
        if g.neighbors(v).iter().all(|u| u >= v || colors[u] != col) {
            colors[v] = col;
            if colorable_rec(g, c, colors, v + 1) {
                return true;
            }
        }
    }
    false
}

/// Chromatic number by plain lexicographic backtracking.
pub fn chi(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let mut colors = vec![0; g.n()];
    (1..).find(|&c| colorable_rec(g, c, &mut colors, 0)).unwrap()
}

/// All triangles as sorted triples, lexicographically ordered.
pub fn triangles(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for &(u, v) in g.edges() {
        for w in v + 1..g.n() {
            if g.has_edge(u, w) && g.has_edge(v, w) {
                out.push((u, v, w));
            }
        }
    }
    out
}

/// Planarity by enumerating all rotation systems of each component and
/// face-tracing for genus 0. Returns `None` when the number of rotation
/// systems exceeds `budget` (instead of running forever).
pub fn planar_by_rotations(g: &Graph, budget: u64) -> Option<bool> {
    use crate::surface::RotationEmbedding;
    for comp in g.components() {
        let (sub, _) = g.induced(&comp);
        if sub.n() <= 2 || sub.m() <= 2 {
            continue; // trees and tiny pieces are always planar
        }
        let mut count: u64 = 1;
        for v in 0..sub.n() {
            let d = sub.degree(v).max(1) as u64;
            count = count.saturating_mul((1..d).product::<u64>().max(1));
            if count > budget {
                return None;
            }
        }
        // Odometer over per-vertex permutations of the non-first neighbors.
        let neighbors: Vec<Vec<usize>> = (0..sub.n()).map(|v| sub.neighbors(v).to_vec()).collect();
        let mut found = false;
        let mut odometer: Vec<Vec<usize>> = neighbors
            .iter()
            .map(|ns| (0..ns.len()).collect())
            .collect();
        'outer: loop {
            let order: Vec<Vec<usize>> = (0..sub.n())
                .map(|v| odometer[v].iter().map(|&i| neighbors[v][i]).collect())
                .collect();
            let emb = RotationEmbedding::new(sub.clone(), order, &[]).unwrap();
            if emb.euler_genus().unwrap() == 0 {
                found = true;
                break;
            }
            // Advance: next permutation on some vertex (first element pinned,
            // which is sound because rotations are cyclic).
            for v in 0..sub.n() {
                if odometer[v].len() > 2 && next_permutation(&mut odometer[v][1..]) {
                    continue 'outer;
                }
            }
            break;
        }
        if !found {
            return Some(false);
        }
    }
    Some(true)
}

fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        xs.sort_unstable();
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Vertex connectivity by trying all separator subsets. `n <= ~16`.
pub fn connectivity(g: &Graph) -> usize {
    let n = g.n();
    assert!((2..=16).contains(&n));
    if g.edges().len() == n * (n - 1) / 2 {
        return n - 1;
    }
    for size in 0..n - 1 {
        let mut cut = Vec::new();
        if find_cut(g, size, 0, &mut cut) {
            return size;
        }
    }
    n - 1
}

fn find_cut(g: &Graph, size: usize, from: usize, cut: &mut Vec<usize>) -> bool {
    if cut.len() == size {
        let rest: Vec<usize> = (0..g.n()).filter(|v| !cut.contains(v)).collect();
        if rest.len() < 2 {
            return false;
        }
        let (sub, _) = g.induced(&rest);
        return !sub.is_connected();
    }
    for v in from..g.n() {
        cut.push(v);
        if find_cut(g, size, v + 1, cut) {
            return true;
        }
        cut.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_known_values() {
        assert_eq!(omega(&Graph::complete(5)), 5);
        assert_eq!(omega(&Graph::cycle(5)), 2);
        assert_eq!(alpha(&Graph::complete(5)), 1);
        assert_eq!(alpha(&Graph::cycle(5)), 2);
        assert_eq!(chi(&Graph::cycle(5)), 3);
        assert_eq!(chi(&Graph::petersen()), 3);
        assert_eq!(triangles(&Graph::complete(4)).len(), 4);
        assert!(triangles(&Graph::cycle(6)).is_empty());
        assert_eq!(connectivity(&Graph::complete(5)), 4);
        assert_eq!(connectivity(&Graph::path(4)), 1);
        assert_eq!(connectivity(&Graph::cycle(5)), 2);
    }
}
