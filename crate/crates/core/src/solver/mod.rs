//! Exact S-packing colorability.

mod coloring;
mod max123;
mod search;

pub use coloring::{is_valid_total, verify_coloring, Coloring, Violation, VerifyError, Witness};
pub use max123::{max_123_subset, Max123};
pub use search::{
    chromatic_length, chromatic_length_stats, decide, decide_with, packing_chromatic,
    vertex_order, Budget, ChromaticLength, Decision, Outcome, PackingChromatic, SearchStats,
    SolverOptions,
};
