//! Exact vertex connectivity via unit-capacity max-flow between vertex
//! pairs on the split digraph.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConnectivityError {
    #[error("connectivity requires at least 2 vertices, got {0}")]
    TooSmall(usize),
}

/// Vertex connectivity of `g`. Disconnected graphs return 0; complete
/// graphs return `n - 1`. Runs a max-flow for every non-adjacent pair, so
/// it is meant for spot checks, not bulk use.
pub fn connectivity(g: &Graph) -> Result<usize, ConnectivityError> {
    let n = g.n();
    if n < 2 {
        return Err(ConnectivityError::TooSmall(n));
    }
    if !g.is_connected() {
        return Ok(0);
    }
    if g.m() == n * (n - 1) / 2 {
        return Ok(n - 1);
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(vertex_max_flow(g, s, t));
            }
        }
    }
    Ok(best)
}

/// Max number of internally vertex-disjoint s-t paths (s, t non-adjacent),
/// via BFS augmentation on the vertex-split digraph.
fn vertex_max_flow(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.n();
    // Node 2v = "in" copy, 2v+1 = "out" copy. Arc capacity is implicit:
    // each arc has capacity 1 and we store residual direction flags.
    let node_count = 2 * n;
    let mut arcs: Vec<(usize, usize)> = Vec::new(); // (from, to), forward cap 1
    let mut head: Vec<Vec<usize>> = vec![Vec::new(); node_count];
    let add_arc = |arcs: &mut Vec<(usize, usize)>,
                   head: &mut Vec<Vec<usize>>,
                   from: usize,
                   to: usize| {
        let id = arcs.len();
        arcs.push((from, to));
        head[from].push(id);
        head[to].push(id); // residual
    };
    for v in 0..n {
        add_arc(&mut arcs, &mut head, 2 * v, 2 * v + 1);
    }
    for &(u, v) in g.edges() {
        add_arc(&mut arcs, &mut head, 2 * u + 1, 2 * v);
        add_arc(&mut arcs, &mut head, 2 * v + 1, 2 * u);
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow_on = vec![false; arcs.len()];
    let mut total = 0;
    loop {
        // BFS over residual arcs.
        let mut prev: Vec<Option<(usize, bool)>> = vec![None; node_count]; // (arc, forward?)
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(source);
        let mut seen = vec![false; node_count];
        seen[source] = true;
        'bfs: while let Some(u) = queue.pop_front() {
            for &a in &head[u] {
                let (from, to) = arcs[a];
                let (next, forward) = if from == u && !flow_on[a] {
                    (to, true)
                } else if to == u && flow_on[a] {
                    (from, false)
                } else {
                    continue;
                };
                if !seen[next] {
                    seen[next] = true;
                    prev[next] = Some((a, forward));
                    if next == sink {
                        break 'bfs;
                    }
                    queue.push_back(next);
                }
            }
        }
        if !seen[sink] {
            break;
        }
        let mut u = sink;
        while u != source {
            let (a, forward) = prev[u].unwrap();
            flow_on[a] = forward;
            u = if forward { arcs[a].0 } else { arcs[a].1 };
        }
        total += 1;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;
    use crate::rng::SplitMix64;

    #[test]
    fn known_values() {
        assert_eq!(connectivity(&Graph::complete(5)).unwrap(), 4);
        assert_eq!(connectivity(&Graph::path(4)).unwrap(), 1);
        assert_eq!(connectivity(&Graph::cycle(5)).unwrap(), 2);
        assert_eq!(connectivity(&Graph::petersen()).unwrap(), 3);
        assert_eq!(connectivity(&Graph::empty(3)).unwrap(), 0);
        assert!(connectivity(&Graph::empty(1)).is_err());
    }

    #[test]
    fn matches_cut_enumeration() {
        let mut rng = SplitMix64::new(99);
        for n in 2..=7usize {
            for _ in 0..25 {
                let edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.next_bool(0.55))
                    .collect();
                let g = Graph::from_edges(n, edges).unwrap();
                assert_eq!(
                    connectivity(&g).unwrap(),
                    brute::connectivity(&g),
                    "mismatch on {g:?}"
                );
            }
        }
    }
}
