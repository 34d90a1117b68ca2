use alloc::vec::Vec;
use rand::Rng as _;

use super::GenerateError;
use crate::{Graph, Seed};

/// `G(n, p)` parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErParams {
    pub n: usize,
    pub p: f64,
}

/// Erdős–Rényi `G(n, p)`: every unordered pair is an edge independently
/// with probability `p`.
pub fn generate_er(params: ErParams, seed: Seed) -> Result<Graph, GenerateError> {
    let ErParams { n, p } = params;
    if !(0.0..=1.0).contains(&p) {
        return Err(GenerateError::InvalidProbability(p));
    }
    let mut rng = seed.rng();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            // random() is in [0, 1), so p = 0 and p = 1 are exact.
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::simplify(n, edges))
}
