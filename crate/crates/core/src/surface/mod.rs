//! Combinatorial surface embeddings: rotation systems with edge
//! signatures, face tracing, and Euler genus.
//!
//! An embedding is a cyclic order of edge-ends around every vertex plus a
//! sign per edge (-1 marks an orientation-reversing band, so non-orientable
//! surfaces are covered). Faces are traced as orbits over (dart, sense)
//! states: crossing a negative edge flips the sense, and the sense decides
//! whether the walk turns with or against the rotation.
//!
//! Darts: edge `e = (a, b)` owns darts `2e` (a to b) and `2e + 1` (b to a);
//! `d ^ 1` reverses a dart.

pub mod reduce;

use crate::graph::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EmbeddingError {
    #[error("rotation of vertex {0} is not a permutation of its neighbors")]
    BadRotation(usize),
    #[error("signature entry {0}-{1} is not an edge")]
    SignatureNotAnEdge(usize, usize),
    #[error("signature value must be +1 or -1, got {0}")]
    BadSignatureValue(i8),
    #[error("graph is disconnected; faces and genus are per-component notions")]
    Disconnected,
    #[error("graph error: {0}")]
    Graph(#[from] GraphError),
}

/// A face walk: the cyclic sequence of `(dart, sense)` states visited.
#[derive(Debug, Clone)]
pub struct Face {
    pub states: Vec<(u32, i8)>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn darts(&self) -> impl Iterator<Item = u32> + '_ {
        self.states.iter().map(|&(d, _)| d)
    }

    /// Edge ids traversed, in walk order (each edge appears once or twice).
    pub fn edge_walk(&self) -> Vec<usize> {
        self.states.iter().map(|&(d, _)| (d / 2) as usize).collect()
    }
}

/// Immutable embedding of a graph given by rotations and signatures.
#[derive(Clone)]
pub struct RotationEmbedding {
    graph: Graph,
    rotation: Vec<Vec<u32>>,
    rot_pos: Vec<u32>,
    signature: Vec<i8>,
}

impl RotationEmbedding {
    /// Builds an embedding from per-vertex cyclic neighbor orders and a
    /// list of negative edges (all others get signature +1).
    pub fn new(
        graph: Graph,
        neighbor_order: Vec<Vec<usize>>,
        negative_edges: &[(usize, usize)],
    ) -> Result<Self, EmbeddingError> {
        let n = graph.n();
        assert_eq!(neighbor_order.len(), n, "one rotation per vertex");
        let edge_id = edge_index(&graph);
        let mut rotation = vec![Vec::new(); n];
        for v in 0..n {
            if neighbor_order[v].len() != graph.degree(v) {
                return Err(EmbeddingError::BadRotation(v));
            }
            let mut seen = std::collections::BTreeSet::new();
            for &u in &neighbor_order[v] {
                if !graph.has_edge(u, v) || !seen.insert(u) {
                    return Err(EmbeddingError::BadRotation(v));
                }
                let e = edge_id[&key(u, v)];
                let dart = if v < u { 2 * e } else { 2 * e + 1 };
                rotation[v].push(dart as u32);
            }
        }
        let mut signature = vec![1i8; graph.m()];
        for &(u, v) in negative_edges {
            let e = *edge_id
                .get(&key(u, v))
                .ok_or(EmbeddingError::SignatureNotAnEdge(u, v))?;
            signature[e] = -1;
        }
        Ok(Self::from_darts(graph, rotation, signature))
    }

    pub(crate) fn from_darts(graph: Graph, rotation: Vec<Vec<u32>>, signature: Vec<i8>) -> Self {
        let mut rot_pos = vec![0u32; 2 * graph.m()];
        for rot in &rotation {
            for (i, &d) in rot.iter().enumerate() {
                rot_pos[d as usize] = i as u32;
            }
        }
        RotationEmbedding {
            graph,
            rotation,
            rot_pos,
            signature,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn signature(&self, edge: usize) -> i8 {
        self.signature[edge]
    }

    pub fn dart_tail(&self, d: u32) -> usize {
        let (a, b) = self.graph.edges()[(d / 2) as usize];
        if d % 2 == 0 {
            a
        } else {
            b
        }
    }

    pub fn dart_head(&self, d: u32) -> usize {
        self.dart_tail(d ^ 1)
    }

    /// Cyclic neighbor order at `v` (dart heads in rotation order).
    pub fn neighbor_order(&self, v: usize) -> Vec<usize> {
        self.rotation[v].iter().map(|&d| self.dart_head(d)).collect()
    }

    fn step(&self, d: u32, pos_delta: i64) -> u32 {
        let v = self.dart_tail(d);
        let rot = &self.rotation[v];
        let len = rot.len() as i64;
        let pos = self.rot_pos[d as usize] as i64;
        rot[((pos + pos_delta).rem_euclid(len)) as usize]
    }

    /// One face-trace transition from state `(dart, sense)`.
    pub fn next_state(&self, d: u32, sense: i8) -> (u32, i8) {
        let s = sense * self.signature[(d / 2) as usize];
        let r = d ^ 1;
        let nd = if s > 0 {
            self.step(r, 1)
        } else {
            self.step(r, -1)
        };
        (nd, s)
    }

    /// All faces, deterministically ordered by lowest starting state. Each
    /// boundary walk is reported exactly once (its reverse traversal is
    /// suppressed).
    pub fn trace_faces(&self) -> Vec<Face> {
        let m = self.graph.m();
        let mut visited = vec![false; 4 * m];
        let mut faces = Vec::new();
        for start in 0..4 * m as u32 {
            if visited[start as usize] {
                continue;
            }
            let (d0, s0) = (start / 2, if start % 2 == 0 { 1i8 } else { -1 });
            let mut states = Vec::new();
            let (mut d, mut s) = (d0, s0);
            loop {
                let idx = state_index(d, s);
                assert!(!visited[idx], "face walk re-entered a visited state");
                visited[idx] = true;
                let mirror = mirror_index(d, s, self.signature[(d / 2) as usize]);
                visited[mirror] = true;
                states.push((d, s));
                let (nd, ns) = self.next_state(d, s);
                if (nd, ns) == (d0, s0) {
                    break;
                }
                (d, s) = (nd, ns);
            }
            faces.push(Face { states });
        }
        debug_assert!(visited.iter().all(|&v| v));
        faces
    }

    /// Euler genus `2 - V + E - F` of a connected embedded graph.
    pub fn euler_genus(&self) -> Result<usize, EmbeddingError> {
        if !self.graph.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        if self.graph.n() == 0 {
            return Ok(0);
        }
        let f = if self.graph.m() == 0 {
            1
        } else {
            self.trace_faces().len()
        };
        let euler = 2i64 - self.graph.n() as i64 + self.graph.m() as i64 - f as i64;
        assert!(euler >= 0, "negative Euler genus: broken embedding");
        Ok(euler as usize)
    }

    /// Relabels vertices according to `perm` (new id = perm[old id]).
    pub fn relabel(&self, perm: &[usize]) -> RotationEmbedding {
        let g2 = Graph::from_edges(
            self.graph.n(),
            self.graph.edges().iter().map(|&(u, v)| (perm[u], perm[v])),
        )
        .unwrap();
        let mut order = vec![Vec::new(); self.graph.n()];
        for v in 0..self.graph.n() {
            order[perm[v]] = self.neighbor_order(v).into_iter().map(|u| perm[u]).collect();
        }
        let neg: Vec<(usize, usize)> = self
            .graph
            .edges()
            .iter()
            .enumerate()
            .filter(|&(e, _)| self.signature[e] == -1)
            .map(|(_, &(u, v))| (perm[u], perm[v]))
            .collect();
        RotationEmbedding::new(g2, order, &neg).unwrap()
    }

    pub fn to_json(&self) -> EmbeddingJson {
        EmbeddingJson {
            n: self.graph.n(),
            rotation: (0..self.graph.n()).map(|v| self.neighbor_order(v)).collect(),
            signature: self
                .graph
                .edges()
                .iter()
                .enumerate()
                .filter(|&(e, _)| self.signature[e] == -1)
                .map(|(_, &(u, v))| (u, v, -1))
                .collect(),
        }
    }

    pub fn from_json(j: &EmbeddingJson) -> Result<Self, EmbeddingError> {
        let mut edges = Vec::new();
        for (v, neighbors) in j.rotation.iter().enumerate() {
            for &u in neighbors {
                if v < u {
                    edges.push((v, u));
                }
            }
        }
        let graph = Graph::from_edges(j.n, edges)?;
        let mut negative = Vec::new();
        for &(u, v, s) in &j.signature {
            match s {
                -1 => negative.push((u, v)),
                1 => {}
                other => return Err(EmbeddingError::BadSignatureValue(other)),
            }
        }
        RotationEmbedding::new(graph, j.rotation.clone(), &negative)
    }
}

/// On-disk embedding: cyclic neighbor lists plus explicit `-1` signatures
/// (unlisted edges are `+1`). The edge set is implied by the rotations.
#[derive(Serialize, Deserialize, Clone)]
pub struct EmbeddingJson {
    pub n: usize,
    pub rotation: Vec<Vec<usize>>,
    #[serde(default)]
    pub signature: Vec<(usize, usize, i8)>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

pub(crate) fn edge_index(g: &Graph) -> std::collections::HashMap<(usize, usize), usize> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect()
}

fn state_index(d: u32, s: i8) -> usize {
    (d as usize) * 2 + if s > 0 { 0 } else { 1 }
}

/// Reverse traversal of the same band side.
fn mirror_index(d: u32, s: i8, sig: i8) -> usize {
    state_index(d ^ 1, -s * sig)
}

/// Mutable rotation-system under construction. Edges keep stable ids;
/// removal frees the darts from the rotations.
pub struct MapBuilder {
    n: usize,
    ends: Vec<(usize, usize)>,
    sig: Vec<i8>,
    alive: Vec<bool>,
    rot: Vec<Vec<u32>>,
}

/// Where to splice a new dart into a rotation.
#[derive(Clone, Copy, Debug)]
pub enum Splice {
    /// Append at the end (fine for isolated or degree-<2 vertices).
    Anywhere,
    /// Immediately after the given dart (which must leave the same vertex).
    After(u32),
    /// Immediately before the given dart.
    Before(u32),
}

impl MapBuilder {
    pub fn new(n: usize) -> Self {
        MapBuilder {
            n,
            ends: Vec::new(),
            sig: Vec::new(),
            alive: Vec::new(),
            rot: vec![Vec::new(); n],
        }
    }

    pub fn from_embedding(e: &RotationEmbedding) -> Self {
        let mut b = MapBuilder::new(e.graph().n());
        b.ends = e.graph().edges().to_vec();
        b.sig = (0..e.graph().m()).map(|i| e.signature(i)).collect();
        b.alive = vec![true; e.graph().m()];
        b.rot = e.rotation.clone();
        b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dart_tail(&self, d: u32) -> usize {
        let (a, b) = self.ends[(d / 2) as usize];
        if d % 2 == 0 {
            a
        } else {
            b
        }
    }

    pub fn dart_head(&self, d: u32) -> usize {
        self.dart_tail(d ^ 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    pub fn live_edges(&self) -> impl Iterator<Item = (usize, (usize, usize))> + '_ {
        self.ends
            .iter()
            .enumerate()
            .filter(|&(e, _)| self.alive[e])
            .map(|(e, &uv)| (e, uv))
    }

    pub fn add_edge(&mut self, u: usize, at_u: Splice, v: usize, at_v: Splice, sig: i8) -> usize {
        assert!(u != v && u < self.n && v < self.n);
        let e = self.ends.len();
        self.ends.push((u, v));
        self.sig.push(sig);
        self.alive.push(true);
        let du = (2 * e) as u32;
        let dv = du ^ 1;
        self.splice(u, du, at_u);
        self.splice(v, dv, at_v);
        e
    }

    fn splice(&mut self, v: usize, dart: u32, at: Splice) {
        let rot = &mut self.rot[v];
        match at {
            Splice::Anywhere => rot.push(dart),
            Splice::After(d) => {
                let pos = rot.iter().position(|&x| x == d).expect("anchor dart");
                rot.insert(pos + 1, dart);
            }
            Splice::Before(d) => {
                let pos = rot.iter().position(|&x| x == d).expect("anchor dart");
                rot.insert(pos, dart);
            }
        }
    }

    pub fn remove_edge(&mut self, e: usize) {
        assert!(self.alive[e]);
        self.alive[e] = false;
        let (u, v) = self.ends[e];
        let du = (2 * e) as u32;
        self.rot[u].retain(|&d| d != du);
        self.rot[v].retain(|&d| d != (du ^ 1));
    }

    pub fn set_signature(&mut self, e: usize, sig: i8) {
        self.sig[e] = sig;
    }

    fn step(&self, d: u32, delta: i64) -> u32 {
        let v = self.dart_tail(d);
        let rot = &self.rot[v];
        let len = rot.len() as i64;
        let pos = rot.iter().position(|&x| x == d).unwrap() as i64;
        rot[((pos + delta).rem_euclid(len)) as usize]
    }

    pub fn next_state(&self, d: u32, sense: i8) -> (u32, i8) {
        let s = sense * self.sig[(d / 2) as usize];
        let r = d ^ 1;
        let nd = if s > 0 { self.step(r, 1) } else { self.step(r, -1) };
        (nd, s)
    }

    pub fn trace_faces(&self) -> Vec<Face> {
        let mut visited = std::collections::HashSet::new();
        let mut faces = Vec::new();
        let mut starts: Vec<u32> = Vec::new();
        for (e, _) in self.live_edges() {
            starts.push(2 * e as u32);
            starts.push(2 * e as u32 + 1);
        }
        for &d0 in &starts {
            for s0 in [1i8, -1] {
                if visited.contains(&(d0, s0)) {
                    continue;
                }
                let mut states = Vec::new();
                let (mut d, mut s) = (d0, s0);
                loop {
                    assert!(visited.insert((d, s)), "face walk re-entered a state");
                    let sig = self.sig[(d / 2) as usize];
                    visited.insert((d ^ 1, -s * sig));
                    states.push((d, s));
                    let next = self.next_state(d, s);
                    if next == (d0, s0) {
                        break;
                    }
                    (d, s) = next;
                }
                faces.push(Face { states });
            }
        }
        faces
    }

    pub fn live_edge_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn live_edge_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.live_edges().map(|(e, _)| e)
    }

    pub fn signature_of(&self, e: usize) -> i8 {
        self.sig[e]
    }

    pub fn edge_ends(&self, e: usize) -> (usize, usize) {
        self.ends[e]
    }

    /// Cyclic neighbor order at `v`.
    pub fn neighbor_order(&self, v: usize) -> Vec<usize> {
        self.rot[v].iter().map(|&d| self.dart_head(d)).collect()
    }

    /// Reverses the local orientation at `v`: flips its rotation and the
    /// signatures of all incident edges. The embedded surface is unchanged.
    pub fn flip_vertex(&mut self, v: usize) {
        self.rot[v].reverse();
        let incident: Vec<usize> = self.rot[v].iter().map(|&d| (d / 2) as usize).collect();
        for e in incident {
            self.sig[e] = -self.sig[e];
        }
    }

    /// Compacts to an immutable embedding over a fresh `Graph`.
    pub fn to_embedding(&self) -> RotationEmbedding {
        let graph = Graph::from_edges(self.n, self.live_edges().map(|(_, uv)| uv)).unwrap();
        let idx = edge_index(&graph);
        let mut rotation = vec![Vec::new(); self.n];
        let mut signature = vec![1i8; graph.m()];
        for (e, (u, v)) in self.live_edges() {
            signature[idx[&key(u, v)]] = self.sig[e];
        }
        for v in 0..self.n {
            for &d in &self.rot[v] {
                let u = self.dart_head(d);
                let e = idx[&key(u, v)];
                let (a, _) = graph.edges()[e];
                let new_dart = if v == a { 2 * e } else { 2 * e + 1 };
                rotation[v].push(new_dart as u32);
            }
        }
        RotationEmbedding::from_darts(graph, rotation, signature)
    }

    /// Adds edge u-v splitting the face whose walk contains corners
    /// `cu` and `cv` (indices into `face.states`); picks the signature that
    /// preserves genus. Returns the edge id.
    ///
    /// The corner after state `i` sits at the head of `states[i]`.
    pub fn add_edge_splitting(&mut self, face: &Face, cu: usize, cv: usize) -> usize {
        let faces_before = self.trace_faces().len();
        let (u, at_u) = self.corner_splice(face, cu);
        let (v, at_v) = self.corner_splice(face, cv);
        assert_ne!(u, v, "corner endpoints must differ (no loops)");
        let e = self.add_edge(u, at_u, v, at_v, 1);
        if self.trace_faces().len() == faces_before + 1 {
            return e;
        }
        self.sig[e] = -1;
        assert_eq!(
            self.trace_faces().len(),
            faces_before + 1,
            "neither signature splits the face; corners were not on one face"
        );
        e
    }

    /// Splice instruction for the corner after `face.states[i]`.
    pub fn corner_splice(&self, face: &Face, i: usize) -> (usize, Splice) {
        let (d, s) = face.states[i];
        let v = self.dart_head(d);
        let s_next = s * self.sig[(d / 2) as usize];
        let r = d ^ 1;
        if s_next > 0 {
            (v, Splice::After(r))
        } else {
            (v, Splice::Before(r))
        }
    }
}
