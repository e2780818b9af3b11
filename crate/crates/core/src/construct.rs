//! Graph families built by the crate: the level-indexed tree product
//! T(G, H), blowups, complete multipartite graphs, universal-vertex
//! extensions, the Grotzsch graph, and the edge-replacement gadget.
//!
//! Vertex id layouts are pinned so tests can address specific vertices:
//! every constructor documents its layout.

use crate::graph::{Graph, OrderedGraph};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("tree product would have {predicted} vertices, over the limit {limit}")]
    BudgetExceeded { predicted: u128, limit: usize },
    #[error("factor graphs must be non-empty")]
    EmptyFactor,
}

/// The tree product T(G, H) together with its tree bookkeeping.
///
/// Layout: the host tree has one materialized node per non-leaf vertex of
/// the n-ary tree of depth k+1, indexed in breadth-first order (root = 0,
/// depth-d nodes contiguous). The copy of G at tree node `x` occupies
/// product vertices `x*n .. x*n + n`, base vertex `v` at `x*n + v`. The
/// child of node `x` reached through base vertex `v` is deterministic, so
/// progenitor queries are pure arithmetic plus parent walks.
#[derive(Clone)]
pub struct TreeProduct {
    pub product: Graph,
    /// Number of levels (= |V(H)|).
    pub k: usize,
    /// |V(G)|.
    pub n: usize,
    g: Graph,
    h: OrderedGraph,
    /// Start index of each depth's node range; `offset[d]` is the first
    /// node of depth d+1 (0-based), `offset[k]` is the total node count.
    offset: Vec<usize>,
}

impl TreeProduct {
    pub fn g(&self) -> &Graph {
        &self.g
    }

    pub fn h(&self) -> &OrderedGraph {
        &self.h
    }

    pub fn tree_node_count(&self) -> usize {
        self.offset[self.k]
    }

    /// Depth of a tree node (1-based: the root has depth 1).
    pub fn node_depth(&self, x: usize) -> usize {
        (0..self.k).find(|&d| x < self.offset[d + 1]).unwrap() + 1
    }

    /// Parent of a non-root tree node.
    pub fn node_parent(&self, x: usize) -> Option<usize> {
        if x == 0 {
            return None;
        }
        let d = self.node_depth(x); // >= 2
        let r = x - self.offset[d - 1];
        Some(self.offset[d - 2] + r / self.n)
    }

    /// Child of tree node `x` through base vertex `v` (θ_x). For depth-k
    /// nodes the child is a tree leaf, which has no materialized index, so
    /// `None` is returned.
    pub fn node_child(&self, x: usize, v: usize) -> Option<usize> {
        let d = self.node_depth(x);
        if d == self.k {
            return None;
        }
        let r = x - self.offset[d - 1];
        Some(self.offset[d] + r * self.n + v)
    }

    /// Tree node and base vertex of a product vertex.
    pub fn copy_of(&self, pv: usize) -> (usize, usize) {
        (pv / self.n, pv % self.n)
    }

    pub fn product_vertex(&self, node: usize, base: usize) -> usize {
        node * self.n + base
    }

    /// Level of a product vertex = depth of its tree node.
    pub fn level(&self, pv: usize) -> usize {
        self.node_depth(pv / self.n)
    }

    /// The unique progenitor of `pv` at level `target < level(pv)`.
    pub fn progenitor(&self, pv: usize, target: usize) -> usize {
        let mut x = pv / self.n;
        let mut depth = self.node_depth(x);
        assert!(
            (1..depth).contains(&target),
            "progenitor level must satisfy 1 <= target < level"
        );
        loop {
            let d = self.node_depth(x);
            let r = x - self.offset[d - 1];
            let parent = self.offset[d - 2] + r / self.n;
            let via_base = r % self.n;
            depth -= 1;
            if depth == target {
                return self.product_vertex(parent, via_base);
            }
            x = parent;
        }
    }

    /// Predicted product size for given factors (exact, in u128).
    pub fn predicted_size(n: usize, k: usize) -> u128 {
        let n = n as u128;
        let mut nodes: u128 = 0;
        let mut pow: u128 = 1;
        for _ in 0..k {
            nodes += pow;
            pow = pow.saturating_mul(n);
        }
        nodes.saturating_mul(n)
    }

    pub fn to_json(&self) -> TreeProductJson {
        let nv = self.product.n();
        TreeProductJson {
            n: self.n,
            k: self.k,
            tree: (0..self.tree_node_count())
                .map(|x| TreeNodeJson {
                    id: x,
                    parent: self.node_parent(x),
                    depth: self.node_depth(x),
                })
                .collect(),
            copy_of: (0..nv).map(|pv| self.copy_of(pv)).collect(),
            level: (0..nv).map(|pv| self.level(pv)).collect(),
            progenitors: (0..nv)
                .map(|pv| (1..self.level(pv)).map(|l| self.progenitor(pv, l)).collect())
                .collect(),
            h_order: self.h.order().to_vec(),
            h_edges: self.h.graph.edges().to_vec(),
            g_edges: self.g.edges().to_vec(),
        }
    }
}

/// Serialized tree-product manifest (the product graph itself is written
/// separately in the DIMACS format).
#[derive(Serialize, Deserialize)]
pub struct TreeProductJson {
    pub n: usize,
    pub k: usize,
    pub tree: Vec<TreeNodeJson>,
    pub copy_of: Vec<(usize, usize)>,
    pub level: Vec<usize>,
    pub progenitors: Vec<Vec<usize>>,
    pub h_order: Vec<usize>,
    pub h_edges: Vec<(usize, usize)>,
    pub g_edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
pub struct TreeNodeJson {
    pub id: usize,
    pub parent: Option<usize>,
    pub depth: usize,
}

/// Builds T(g, h). Level i (1-based) corresponds to position i-1 of h's
/// vertex order. Fails before allocating anything if the predicted vertex
/// count exceeds `size_limit`.
pub fn tree_product(
    g: &Graph,
    h: &OrderedGraph,
    size_limit: usize,
) -> Result<TreeProduct, ConstructError> {
    let n = g.n();
    let k = h.len();
    if n == 0 || k == 0 {
        return Err(ConstructError::EmptyFactor);
    }
    let predicted = TreeProduct::predicted_size(n, k);
    if predicted > size_limit as u128 {
        return Err(ConstructError::BudgetExceeded {
            predicted,
            limit: size_limit,
        });
    }

    let mut offset = Vec::with_capacity(k + 1);
    let mut total = 0usize;
    let mut width = 1usize;
    for _ in 0..k {
        offset.push(total);
        total += width;
        width *= n;
    }
    offset.push(total);

    let mut tp = TreeProduct {
        product: Graph::empty(0), // replaced below
        k,
        n,
        g: g.clone(),
        h: h.clone(),
        offset,
    };

    let nv = total * n;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // Copies of G inside every tree node.
    for x in 0..total {
        for &(u, v) in g.edges() {
            edges.push((x * n + u, x * n + v));
        }
    }
    // Progenitor edges: for each H-edge between positions i < j, every
    // level-(j+1) vertex connects to its progenitor at level i+1.
    let mut h_pairs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if h.adjacent_positions(i, j) {
                h_pairs.push((i + 1, j + 1)); // 1-based levels
            }
        }
    }
    for pv in 0..nv {
        let level = tp.level(pv);
        for &(li, lj) in &h_pairs {
            if lj == level {
                edges.push((pv, tp.progenitor(pv, li)));
            }
        }
    }
    tp.product = Graph::from_edges(nv, edges).expect("layout produces valid edges");
    Ok(tp)
}

/// p-blowup: each vertex u of `h0` becomes an independent block of p
/// vertices `u*p .. u*p + p`, and blocks of adjacent vertices are joined
/// completely. Blocks are consecutive in the returned order (identity).
pub fn p_blowup(h0: &Graph, p: usize) -> OrderedGraph {
    assert!(p >= 1);
    let k = h0.n() * p;
    let mut edges = Vec::new();
    for &(u, v) in h0.edges() {
        for a in 0..p {
            for b in 0..p {
                edges.push((u * p + a, v * p + b));
            }
        }
    }
    OrderedGraph::identity(Graph::from_edges(k, edges).unwrap())
}

/// Strong p-blowup: the p-blowup with each block completed into a clique.
pub fn strong_p_blowup(h0: &Graph, p: usize) -> Graph {
    assert!(p >= 1);
    let blowup = p_blowup(h0, p);
    let extra = (0..h0.n()).flat_map(move |u| {
        (0..p).flat_map(move |a| (a + 1..p).map(move |b| (u * p + a, u * p + b)))
    });
    blowup.graph.with_extra_edges(extra)
}

/// K_{k x p}: the complete k-partite graph with parts of size p, parts
/// consecutive in the order. The last p vertices form an independent set.
pub fn complete_multipartite(k: usize, p: usize) -> OrderedGraph {
    assert!(k >= 1 && p >= 1);
    p_blowup(&Graph::complete(k), p)
}

/// Adds `t` universal vertices (ids n..n+t) adjacent to everything else.
pub fn add_universal(g: &Graph, t: usize) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for i in 0..t {
        for v in 0..n + i {
            edges.push((v, n + i));
        }
    }
    Graph::from_edges(n + t, edges).unwrap()
}

/// The Grotzsch graph, realized as the Mycielskian of C5.
///
/// Layout: 0..5 the cycle (i adjacent to i±1 mod 5), 5..10 the shadow
/// vertices (5+i adjacent to the cycle neighbors of i), vertex 10 the apex
/// adjacent to every shadow vertex. 11 vertices, 20 edges, triangle-free,
/// chromatic number 4.
pub fn grotzsch_graph() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5usize {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, (i + 1) % 5));
        edges.push((5 + i, (i + 4) % 5));
        edges.push((5 + i, 10));
    }
    Graph::from_edges(11, edges).unwrap()
}

/// The canonical deleted edge of the gadget: the lexicographically first
/// edge of `grotzsch_graph()`, namely (0, 1). `u = 0` is the end that gets
/// identified with a host vertex; `v = 1` receives the fresh edge.
pub const GADGET_U: usize = 0;
pub const GADGET_V: usize = 1;

/// The gadget R: the Grotzsch graph minus its canonical edge. R is
/// 3-colorable and forces equal colors on `GADGET_U` and `GADGET_V` in
/// every proper 3-coloring.
pub fn gadget_graph() -> Graph {
    let g = grotzsch_graph();
    let removed: std::collections::BTreeSet<(usize, usize)> =
        [(GADGET_U, GADGET_V)].into_iter().collect();
    g.without_edges(&removed)
}

/// Where the copies of the gadget live inside an expanded graph.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GadgetProvenance {
    /// One entry per input edge (in the input's sorted edge order):
    /// `map[r]` is the output id of gadget vertex `r`; `map[GADGET_U]` is
    /// the host vertex the copy was identified with.
    pub per_edge: Vec<GadgetCopy>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GadgetCopy {
    pub host_edge: (usize, usize),
    pub map: Vec<usize>,
}

/// Replaces every edge xy of `g1` by a fresh copy of the gadget R with its
/// `u` end identified with x and a new edge from its `v` end to y.
///
/// Layout: host vertices keep their ids; the copy for the i-th edge (in
/// sorted edge order) occupies ids `n + 10*i .. n + 10*(i+1)`, in the
/// gadget's own id order skipping `GADGET_U`.
pub fn gadget_expand(g1: &Graph) -> (Graph, GadgetProvenance) {
    let r = gadget_graph();
    let rn = r.n();
    let n = g1.n();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut per_edge = Vec::new();
    for (i, &(x, y)) in g1.edges().iter().enumerate() {
        let base = n + 10 * i;
        // Map gadget ids to output ids: u -> x, others -> fresh block.
        let mut map = vec![0usize; rn];
        let mut next = base;
        for rv in 0..rn {
            if rv == GADGET_U {
                map[rv] = x;
            } else {
                map[rv] = next;
                next += 1;
            }
        }
        for &(a, b) in r.edges() {
            edges.push((map[a], map[b]));
        }
        edges.push((map[GADGET_V], y));
        per_edge.push(GadgetCopy {
            host_edge: (x, y),
            map,
        });
    }
    let out = Graph::from_edges(n + 10 * g1.m(), edges).unwrap();
    (out, GadgetProvenance { per_edge })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;
    use crate::cliques;

    #[test]
    fn tree_product_disjoint_copies() {
        // Edgeless H: the product is plain disjoint copies of G.
        let g = Graph::complete(2);
        let h = OrderedGraph::identity(Graph::empty(2));
        let tp = tree_product(&g, &h, 1000).unwrap();
        assert_eq!(tp.product.n(), 6);
        assert_eq!(tp.product.m(), 3);
        assert_eq!(tp.product.components().len(), 3);
    }

    #[test]
    fn tree_product_k2_k2() {
        let g = Graph::complete(2);
        let h = OrderedGraph::identity(Graph::complete(2));
        let tp = tree_product(&g, &h, 1000).unwrap();
        assert_eq!(tp.product.n(), 6);
        assert_eq!(tp.product.m(), 7); // 3 copy edges + 4 progenitor edges
        assert_eq!(cliques::clique_number(&tp.product).size, 3);
        assert_eq!(brute::omega(&tp.product), 3);
    }

    #[test]
    fn tree_product_size_formula() {
        let g = Graph::complete(4);
        let h = OrderedGraph::identity(Graph::empty(4)); // K_{1x4}
        let tp = tree_product(&g, &h, 100_000).unwrap();
        assert_eq!(tp.product.n(), 340); // 4 * (1 + 4 + 16 + 64)
        assert_eq!(TreeProduct::predicted_size(4, 4), 340);
    }

    #[test]
    fn budget_refuses_before_allocating() {
        let g = Graph::complete(10);
        let h = OrderedGraph::identity(Graph::empty(12));
        match tree_product(&g, &h, 1_000_000) {
            Err(ConstructError::BudgetExceeded { predicted, .. }) => {
                assert!(predicted > 1_000_000);
            }
            other => panic!("expected budget error, got {:?}", other.map(|t| t.product)),
        }
    }

    #[test]
    fn progenitor_uniqueness_and_levels() {
        let g = Graph::cycle(3);
        let h = OrderedGraph::identity(Graph::complete(3));
        let tp = tree_product(&g, &h, 10_000).unwrap();
        for pv in 0..tp.product.n() {
            let j = tp.level(pv);
            for i in 1..j {
                let p = tp.progenitor(pv, i);
                assert_eq!(tp.level(p), i);
            }
        }
        // Every vertex at level j has exactly one progenitor per lower level,
        // which `progenitor` returns by construction; spot-check an edge:
        // level-2 vertices are adjacent to their level-1 progenitors (H=K3).
        for pv in 0..tp.product.n() {
            if tp.level(pv) == 2 {
                assert!(tp.product.has_edge(pv, tp.progenitor(pv, 1)));
            }
        }
    }

    #[test]
    fn blowups() {
        let b = p_blowup(&Graph::complete(3), 2);
        assert_eq!((b.graph.n(), b.graph.m()), (6, 12));
        let s = strong_p_blowup(&Graph::complete(3), 2);
        assert_eq!(s, Graph::complete(6));
        let one = p_blowup(&Graph::petersen(), 1);
        assert_eq!(one.graph, Graph::petersen());
        assert_eq!(one.order(), (0..10).collect::<Vec<_>>());
        // Blowup of a triangle-free graph stays triangle-free.
        let c5b = p_blowup(&Graph::cycle(5), 2);
        assert_eq!((c5b.graph.n(), c5b.graph.m()), (10, 20));
        assert!(cliques::is_triangle_free(&c5b.graph));
        let s3 = strong_p_blowup(&Graph::empty(3), 2);
        assert_eq!((s3.n(), s3.m()), (6, 3));
    }

    #[test]
    fn multipartite() {
        let k1x4 = complete_multipartite(1, 4);
        assert_eq!((k1x4.graph.n(), k1x4.graph.m()), (4, 0));
        // K_{2x2} is a 4-cycle: 0-2-1-3-0 under the part layout.
        let k2x2 = complete_multipartite(2, 2).graph;
        assert_eq!((k2x2.n(), k2x2.m()), (4, 4));
        assert!((0..4).all(|v| k2x2.degree(v) == 2));
        assert!(cliques::is_triangle_free(&k2x2));
        let k3x4 = complete_multipartite(3, 4);
        assert_eq!((k3x4.graph.n(), k3x4.graph.m()), (12, 48));
        assert_eq!(cliques::clique_number(&k3x4.graph).size, 3);
        // The last p vertices form an independent set.
        for u in 8..12 {
            for v in u + 1..12 {
                assert!(!k3x4.graph.has_edge(u, v));
            }
        }
    }

    #[test]
    fn universal_vertices() {
        assert_eq!(add_universal(&Graph::cycle(5), 0), Graph::cycle(5));
        assert_eq!(add_universal(&Graph::complete(3), 2), Graph::complete(5));
        let w5 = add_universal(&Graph::cycle(5), 1);
        assert_eq!(brute::chi(&w5), 4);
    }

    #[test]
    fn grotzsch_properties() {
        let g = grotzsch_graph();
        assert_eq!((g.n(), g.m()), (11, 20));
        assert!(cliques::is_triangle_free(&g));
        assert_eq!(brute::chi(&g), 4);
        // Vertex-criticality: dropping any vertex leaves a 3-colorable graph.
        for v in 0..11 {
            let rest: Vec<usize> = (0..11).filter(|&u| u != v).collect();
            let (sub, _) = g.induced(&rest);
            assert_eq!(brute::chi(&sub), 3, "G - {v} should be 3-colorable");
        }
        // Edge-criticality: dropping any edge leaves a 3-colorable graph
        // (this is the stronger fact the gadget relies on).
        for &(u, v) in g.edges() {
            let removed = [(u, v)].into_iter().collect();
            assert_eq!(brute::chi(&g.without_edges(&removed)), 3);
        }
    }

    #[test]
    fn gadget_counts() {
        let (g2, prov) = gadget_expand(&Graph::complete(2));
        assert_eq!(g2.n(), 12);
        assert_eq!(prov.per_edge.len(), 1);
        assert_eq!(prov.per_edge[0].map[GADGET_U], 0);
        let (g2, _) = gadget_expand(&Graph::complete(3));
        assert_eq!(g2.n(), 33);
        assert!(cliques::is_triangle_free(&g2));
        assert_eq!(brute::chi(&g2), 3);
        // Triangle inputs still come out triangle-free.
        let (g2, _) = gadget_expand(&Graph::complete(4));
        assert_eq!(g2.n(), 64); // 4 + 10 * 6
        assert!(cliques::is_triangle_free(&g2));
    }
}
