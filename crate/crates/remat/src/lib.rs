//! Removable matchings in k-connected graphs.
//!
//! A matching M in a k-connected graph G is removable when G - M is still
//! k-connected. This crate provides the graph plumbing (bitset graphs up to
//! 62 vertices, graph6 I/O, exact vertex connectivity), constructive finders
//! for removable matchings under various degree hypotheses, an exact
//! branch-and-bound oracle, and exhaustive verification sweeps over all
//! small connected graphs.

pub mod connectivity;
pub mod enumerate;
pub mod finders;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod oracle;
pub mod structure;
pub mod verify;

pub use graph::{Edge, Graph, Matching, VertexSet};
