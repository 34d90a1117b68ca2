//! Seeded random graph generators.
//!
//! Every generator is a pure function of its parameters and a [`Seed`]:
//! the same inputs always produce the same edge list.
//!
//! [`Seed`]: crate::Seed

mod ba;
mod er;
mod ggp;

pub use ba::{generate_ba, BaParams};
pub use er::{generate_er, ErParams};
pub use ggp::{
    generate_ggp, sample_ggp_weights, truncated_mass_fraction, GgpParams, DEFAULT_EPSILON, DEFAULT_TRUNCATION_TOLERANCE,
};

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum GenerateError {
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("invalid parameters: {0}")]
    InvalidParams(&'static str),
    #[error("jumps below epsilon carry a {fraction} fraction of the expected mass (tolerance {tolerance})")]
    TruncationTooCoarse { fraction: f64, tolerance: f64 },
    #[error("draw produced {nodes} non-isolated nodes")]
    DegenerateDraw { nodes: usize },
}
