//! Coset graphs Cos(G, H, K): construction, valency and connectivity,
//! the s-arc-transitivity ladder, edge stabilizers and edge-primitivity,
//! and the local stabilizer structure at an edge.

pub mod graph;
pub mod local;

pub use graph::{CosetGraph, GraphError, Shape, EDGE_BOUND, VERTEX_BOUND};
pub use local::{
    fitting_check, h_is_2_transitive_on_cosets, local_action, local_structure, Bounded,
    FittingOutcome, FittingReport, LocalStructure, PrimeCoreReport,
};
