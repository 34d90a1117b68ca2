//! Random graph models and global connectivity statistics.
//!
//! The crate is `no_std` (it needs `alloc`). It provides:
//!
//! * [`graph`]: the simple undirected [`Graph`], its degree sequence and
//!   its dense combinatorial [`Laplacian`].
//! * [`generators`]: seeded Erdős–Rényi, Barabási–Albert and
//!   generalized-gamma-process (Caron–Fox) graph generators.
//! * [`stats`]: connected components, global clustering, degree
//!   assortativity and a Borgatti–Everett core/periphery partition.
//! * [`spectral`]: a symmetric eigensolver used to count components as the
//!   multiplicity of the Laplacian's zero eigenvalue.
//!
//! File formats, the experiment harness and the command line live in the
//! `sparsenet` crate.

#![no_std]

extern crate alloc;

pub mod generators;
pub mod graph;
pub mod seed;
pub mod special;
pub mod spectral;
pub mod stats;

pub use graph::{DegreeSequence, Graph, GraphError, Laplacian};
pub use seed::Seed;
