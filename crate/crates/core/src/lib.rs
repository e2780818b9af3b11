//! Exact structural oracles, graph constructions, and verification suites
//! for chromatic-number behavior in minor-closed graph families.
//!
//! The crate is organized around a plain [`graph::Graph`] value:
//!
//! - `cliques`, `connectivity`, `planar`, `minor`, `treewidth`: exact
//!   structural oracles with witnesses;
//! - `construct`: level-indexed tree products, blowups, and the
//!   edge-replacement gadget;
//! - `color`: exact chromatic / list / set / fractional coloring, plus the
//!   constructive product colorer and its witness extractor;
//! - `td`: rooted tree decompositions, the chromatic DP, restricted
//!   decompositions and their coloring procedures, and the low/high split
//!   over structured inputs;
//! - `surface`: rotation-system embeddings, face tracing, Euler genus, and
//!   the one-face planarization step;
//! - `hm`: the seeded random triangle-free construction;
//! - `verify`: the property suites the CLI and the acceptance tests share.
//!
//! Everything is deterministic: randomized pieces take explicit 64-bit
//! seeds and draw from a fixed generator in a documented order.

pub mod bitset;
pub mod brute;
pub mod cliques;
pub mod color;
pub mod connectivity;
pub mod construct;
pub mod graph;
pub mod minor;
pub mod planar;
pub mod rng;
pub mod surface;
pub mod treewidth;

pub use graph::{Graph, OrderedGraph};
