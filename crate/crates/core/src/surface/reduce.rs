//! One-face spanning subgraphs and the vortex-aware planarization step.

// Implemented after the planarity oracle; see `one_face_subgraph` and
// `lemma_remove` below.
