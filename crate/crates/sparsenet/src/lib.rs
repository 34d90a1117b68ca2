//! IO, experiment harness and plotting on top of [`sparsenet_core`].
//!
//! * [`edgelist`]: the `n m` / `u v` edge-list text format.
//! * [`config`], [`sweep`], [`summary`], [`plot`]: configurable
//!   statistics-versus-size sweeps written as CSV and SVG.
//! * [`spectral_check`]: union-find versus Laplacian-spectrum component
//!   counts over a generated suite.

pub mod calibrate;
pub mod config;
pub mod edgelist;
pub mod plot;
pub mod row;
pub mod spectral_check;
pub mod summary;
pub mod sweep;

pub use sparsenet_core as core;

pub use config::{ErCalibration, ExperimentConfig, ModelSpec};
pub use row::{ExperimentRow, GraphStatistics, CSV_HEADER};
pub use summary::{summarize, GroupSummary, StatSummary};
pub use sweep::{run_sweep, run_sweep_to_dir, SweepOutput};

use sparsenet_core::generators::GenerateError;
use sparsenet_core::spectral::SpectralError;
use sparsenet_core::Seed;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid config at {path}: {msg}")]
    Config { path: String, msg: String },
    #[error("generating {model} with seed {seed} failed: {msg}")]
    GenerationFailed { model: String, seed: u64, msg: String },
    #[error("csv line {line}: {msg}")]
    Csv { line: usize, msg: String },
    #[error("spectral check of {label}: {source}")]
    Spectral { label: String, source: SpectralError },
    #[error("no input rows")]
    EmptyInput,
    #[error(transparent)]
    EdgeList(#[from] edgelist::EdgeListError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn generation(model: &str, seed: Seed, e: GenerateError) -> Self {
        Error::GenerationFailed {
            model: model.to_string(),
            seed: seed.value(),
            msg: e.to_string(),
        }
    }

    /// 1 for usage and configuration problems, 2 for runtime failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config { .. } => 1,
            _ => 2,
        }
    }
}
