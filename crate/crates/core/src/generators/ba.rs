use alloc::vec::Vec;
use rand::Rng as _;

use super::GenerateError;
use crate::{Graph, Seed};

/// Barabási–Albert growth parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaParams {
    /// Final node count.
    pub n: usize,
    /// Edges added by each arriving node.
    pub m: usize,
    /// Size of the complete seed graph.
    pub m0: usize,
}

impl BaParams {
    /// Seed clique of size `m`.
    pub fn new(n: usize, m: usize) -> Self {
        Self { n, m, m0: m }
    }

    pub fn validate(&self) -> Result<(), GenerateError> {
        if self.m == 0 {
            return Err(GenerateError::InvalidParams("BA m must be at least 1"));
        }
        if self.m > self.m0 {
            return Err(GenerateError::InvalidParams("BA m exceeds seed size m0"));
        }
        if self.n < self.m0 {
            return Err(GenerateError::InvalidParams("BA n below seed size m0"));
        }
        Ok(())
    }

    /// `C(m0, 2) + (n - m0) * m`.
    pub fn expected_edges(&self) -> usize {
        self.m0 * (self.m0 - 1) / 2 + (self.n - self.m0) * self.m
    }
}

/// Preferential attachment from a complete seed graph on `m0` nodes.
///
/// Targets are drawn from the stub list (every edge contributes both
/// endpoints), which is degree-proportional sampling. Repeats within one
/// arriving node's batch are redrawn. When the stub list is still empty
/// (a one-node seed) the target is drawn uniformly.
pub fn generate_ba(params: BaParams, seed: Seed) -> Result<Graph, GenerateError> {
    params.validate()?;
    let BaParams { n, m, m0 } = params;
    let mut rng = seed.rng();

    let mut edges = Vec::with_capacity(params.expected_edges());
    let mut stubs: Vec<usize> = Vec::with_capacity(2 * params.expected_edges());
    for u in 0..m0 {
        for v in u + 1..m0 {
            edges.push((u, v));
            stubs.push(u);
            stubs.push(v);
        }
    }

    let mut batch = Vec::with_capacity(m);
    for new in m0..n {
        batch.clear();
        while batch.len() < m {
            let target = if stubs.is_empty() {
                rng.random_range(0..new)
            } else {
                stubs[rng.random_range(0..stubs.len())]
            };
            if !batch.contains(&target) {
                batch.push(target);
            }
        }
        for &t in &batch {
            edges.push((t, new));
            stubs.push(t);
            stubs.push(new);
        }
    }
    Ok(Graph::simplify(n, edges))
}
