//! Global connectivity statistics over a [`Graph`](crate::Graph).
//!
//! All functions are read-only over an immutable graph and return identical
//! results on repeated calls.

mod assortativity;
mod clustering;
mod components;
mod core_periphery;

pub use assortativity::{
    assortativity, assortativity_per_edge, remaining_degree_stats, AssortativityStat, RemainingDegreeStats,
    AGREEMENT_TOLERANCE,
};
pub use clustering::{global_clustering, ClusteringStat};
pub use components::{connected_components, ComponentCount, UnionFind};
pub use core_periphery::{core_periphery, core_share, pattern_correlation, CoreConfig, CorePeripheryResult};

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum StatsError {
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("ideal core/periphery pattern is constant for every candidate partition")]
    DegeneratePattern,
    #[error("assortativity paths disagree: distribution form {distribution}, per-edge form {per_edge}")]
    AssortativityMismatch { distribution: f64, per_edge: f64 },
}
