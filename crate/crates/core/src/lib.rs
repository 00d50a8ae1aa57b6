//! Exact S-packing colorings of subcubic graphs.
//!
//! An S-packing coloring for a non-decreasing sequence `S = (s_1, ..., s_k)`
//! assigns each vertex a slot `i` so that two vertices sharing slot `i` are
//! at distance greater than `s_i`.

pub mod graph;
pub mod graph6;
pub mod named;
pub mod sequence;
pub mod solver;

pub mod canon;
pub mod constructive;
pub mod enumerate;
pub mod levels;
pub mod screen;
pub mod table;

pub use graph::{Graph, GraphClass, GraphError, INFINITE};
pub use sequence::{SSequence, SequenceError};
