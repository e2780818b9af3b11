//! Simple undirected graphs over dense integer vertex ids, plus the
//! DIMACS-like text format used by the CLI.
//!
//! Graphs are immutable after construction: every algorithm in the crate
//! takes `&Graph` and never mutates shared state, so values can be handed
//! to concurrent verification trials freely.

use crate::bitset::VertexSet;
use serde::{Deserialize, Serialize};
use std::io::{BufRead, Write};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("loop edge {0}-{0} not allowed")]
    LoopEdge(usize),
    #[error("edge endpoint {0} out of range (n = {1})")]
    EndpointOutOfRange(usize, usize),
    #[error("order is not a permutation of 0..{0}")]
    BadOrder(usize),
}

#[derive(Debug, Error)]
pub enum DimacsError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {0}: {1}")]
    Parse(usize, String),
    #[error("missing `p edge` header")]
    MissingHeader,
    #[error("{0}")]
    Graph(#[from] GraphError),
}

/// Simple undirected graph. Vertices are `0..n`; no loops or parallel edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse silently;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut adj = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if u >= n {
                return Err(GraphError::EndpointOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::EndpointOutOfRange(v, n));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in adj[u].iter() {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        Ok(Graph { n, adj, edges })
    }

    pub fn empty(n: usize) -> Self {
        Graph::from_edges(n, std::iter::empty()).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// The Petersen graph: outer cycle 0..5, inner pentagram 5..10, spokes.
    pub fn petersen() -> Self {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((5 + i, 5 + (i + 2) % 5));
            e.push((i, 5 + i));
        }
        Graph::from_edges(10, e).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn complement(&self) -> Graph {
        Graph::from_edges(
            self.n,
            (0..self.n)
                .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
                .filter(|&(u, v)| !self.has_edge(u, v)),
        )
        .unwrap()
    }

    /// Induced subgraph on `vertices`, relabelled `0..k` in the order given.
    /// Returns the subgraph and the map from new ids back to old ids.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        (
            Graph::from_edges(vertices.len(), edges).unwrap(),
            vertices.to_vec(),
        )
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                for v in self.adj[u].iter() {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Graph with the same vertices plus extra edges.
    pub fn with_extra_edges(&self, extra: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        Graph::from_edges(self.n, self.edges.iter().copied().chain(extra)).unwrap()
    }

    /// Graph with the given edges removed.
    pub fn without_edges(&self, removed: &std::collections::BTreeSet<(usize, usize)>) -> Graph {
        Graph::from_edges(
            self.n,
            self.edges
                .iter()
                .copied()
                .filter(|&(u, v)| !removed.contains(&(u, v)) && !removed.contains(&(v, u))),
        )
        .unwrap()
    }

    /// Reads the `p edge <n> <m>` / `e <u> <v>` format (1-indexed on disk).
    pub fn read_dimacs<R: BufRead>(reader: R) -> Result<Graph, DimacsError> {
        let mut n = None;
        let mut edges = Vec::new();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let fields: Vec<&str> = line.split_ascii_whitespace().collect();
            match fields[0] {
                "p" => {
                    if fields.len() < 4 || fields[1] != "edge" {
                        return Err(DimacsError::Parse(
                            lineno + 1,
                            format!("bad problem line: {line}"),
                        ));
                    }
                    let nv: usize = fields[2].parse().map_err(|_| {
                        DimacsError::Parse(lineno + 1, format!("bad vertex count: {}", fields[2]))
                    })?;
                    n = Some(nv);
                }
                "e" => {
                    if fields.len() != 3 {
                        return Err(DimacsError::Parse(
                            lineno + 1,
                            format!("bad edge line: {line}"),
                        ));
                    }
                    let u: usize = fields[1].parse().map_err(|_| {
                        DimacsError::Parse(lineno + 1, format!("bad endpoint: {}", fields[1]))
                    })?;
                    let v: usize = fields[2].parse().map_err(|_| {
                        DimacsError::Parse(lineno + 1, format!("bad endpoint: {}", fields[2]))
                    })?;
                    if u == 0 || v == 0 {
                        return Err(DimacsError::Parse(
                            lineno + 1,
                            "endpoints are 1-indexed on disk".into(),
                        ));
                    }
                    edges.push((u - 1, v - 1));
                }
                _ => {
                    return Err(DimacsError::Parse(
                        lineno + 1,
                        format!("unknown record: {line}"),
                    ));
                }
            }
        }
        let n = n.ok_or(DimacsError::MissingHeader)?;
        Ok(Graph::from_edges(n, edges)?)
    }

    pub fn write_dimacs<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "p edge {} {}", self.n, self.edges.len())?;
        for &(u, v) in &self.edges {
            writeln!(w, "e {} {}", u + 1, v + 1)?;
        }
        Ok(())
    }

    pub fn to_dimacs_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_dimacs(&mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m(), self.edges)
    }
}

/// JSON-friendly form of a graph, used when a graph is embedded in a larger
/// manifest rather than stored as a standalone `.col` file.
#[derive(Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.clone(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;
    fn try_from(j: GraphJson) -> Result<Self, GraphError> {
        Graph::from_edges(j.n, j.edges)
    }
}

/// A graph together with a fixed vertex ordering `u_1, ..., u_k`.
///
/// The ordering matters wherever level-indexed constructions consume the
/// graph; `order[i]` is the vertex at position `i`.
#[derive(Clone, Debug)]
pub struct OrderedGraph {
    pub graph: Graph,
    order: Vec<usize>,
}

impl OrderedGraph {
    pub fn new(graph: Graph, order: Vec<usize>) -> Result<Self, GraphError> {
        let n = graph.n();
        if order.len() != n {
            return Err(GraphError::BadOrder(n));
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(GraphError::BadOrder(n));
            }
            seen[v] = true;
        }
        Ok(OrderedGraph { graph, order })
    }

    pub fn identity(graph: Graph) -> Self {
        let order = (0..graph.n()).collect();
        OrderedGraph { graph, order }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Vertex at position `i` (0-based).
    pub fn at(&self, i: usize) -> usize {
        self.order[i]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// True iff positions `i` and `j` carry adjacent vertices.
    pub fn adjacent_positions(&self, i: usize, j: usize) -> bool {
        self.graph.has_edge(self.order[i], self.order[j])
    }
}

#[derive(Serialize, Deserialize)]
pub struct OrderedGraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub order: Vec<usize>,
}

impl From<&OrderedGraph> for OrderedGraphJson {
    fn from(g: &OrderedGraph) -> Self {
        OrderedGraphJson {
            n: g.graph.n(),
            edges: g.graph.edges().to_vec(),
            order: g.order.clone(),
        }
    }
}

impl TryFrom<OrderedGraphJson> for OrderedGraph {
    type Error = GraphError;
    fn try_from(j: OrderedGraphJson) -> Result<Self, GraphError> {
        OrderedGraph::new(Graph::from_edges(j.n, j.edges)?, j.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_invariants() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.m(), 3); // duplicate collapsed
        assert!(g.has_edge(2, 1));
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(GraphError::LoopEdge(1))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::EndpointOutOfRange(3, 3))
        ));
    }

    #[test]
    fn named_graphs() {
        assert_eq!(Graph::complete(5).m(), 10);
        assert_eq!(Graph::cycle(5).m(), 5);
        assert_eq!(Graph::path(4).m(), 3);
        let p = Graph::petersen();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!(p.neighbors(0).len() == 3);
    }

    #[test]
    fn dimacs_round_trip() {
        let g = Graph::petersen();
        let text = g.to_dimacs_string();
        let h = Graph::read_dimacs(text.as_bytes()).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn dimacs_rejects_garbage() {
        assert!(Graph::read_dimacs("e 1 2\n".as_bytes()).is_err());
        assert!(Graph::read_dimacs("p edge 2 1\ne 0 1\n".as_bytes()).is_err());
        assert!(Graph::read_dimacs("p edge 2 1\nq 1 2\n".as_bytes()).is_err());
    }

    #[test]
    fn components_and_induced() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        let comps = g.components();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3], vec![4]]);
        let (sub, back) = g.induced(&[2, 3, 4]);
        assert_eq!(sub.m(), 1);
        assert_eq!(back, vec![2, 3, 4]);
    }

    #[test]
    fn ordered_graph_validation() {
        let g = Graph::cycle(4);
        assert!(OrderedGraph::new(g.clone(), vec![0, 1, 2, 3]).is_ok());
        assert!(OrderedGraph::new(g.clone(), vec![0, 1, 2, 2]).is_err());
        assert!(OrderedGraph::new(g, vec![0, 1, 2]).is_err());
    }
}
