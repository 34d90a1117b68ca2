//! Caron–Fox graphs driven by a generalized gamma process (GGP).
//!
//! The GGP has Lévy intensity
//! `rho(w) = alpha / Gamma(1 - sigma) * w^(-1 - sigma) * exp(-tau * w)`.
//! Jumps at or above `epsilon` are simulated exactly by thinning a
//! dominating process whose tail integral inverts in closed form:
//!
//! * `sigma > 0`: dominating intensity `alpha / Gamma(1 - sigma) * w^(-1 - sigma)`
//!   on `[epsilon, inf)`, with Pareto-distributed jumps.
//! * `sigma = 0`: dominating intensity `alpha / w` on `[epsilon, w_max]`,
//!   log-uniform jumps, with `w_max` far enough out that the discarded tail
//!   of `rho` has mass below `1e-12`.
//!
//! A proposed jump `w` is kept with probability `exp(-tau * w)`.

use alloc::vec::Vec;
use rand::Rng as _;
use rand_distr::{Distribution, Poisson};

use super::GenerateError;
use crate::special::{gamma, regularized_lower_gamma};
use crate::{Graph, Seed};

pub const DEFAULT_EPSILON: f64 = 1e-6;
pub const DEFAULT_TRUNCATION_TOLERANCE: f64 = 0.1;

const TAIL_MASS_BOUND: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GgpParams {
    /// Mass scale, `> 0`.
    pub alpha: f64,
    /// Sparsity index in `[0, 1)`.
    pub sigma: f64,
    /// Exponential tilting, `> 0`.
    pub tau: f64,
    /// Jumps below this level are dropped, `> 0`.
    pub epsilon: f64,
    /// Largest admissible fraction of the expected total mass carried by
    /// the dropped jumps.
    pub truncation_tolerance: f64,
}

impl GgpParams {
    pub fn new(alpha: f64, sigma: f64, tau: f64) -> Self {
        Self {
            alpha,
            sigma,
            tau,
            epsilon: DEFAULT_EPSILON,
            truncation_tolerance: DEFAULT_TRUNCATION_TOLERANCE,
        }
    }

    pub fn with_epsilon(self, epsilon: f64) -> Self {
        Self { epsilon, ..self }
    }

    pub fn with_truncation_tolerance(self, truncation_tolerance: f64) -> Self {
        Self {
            truncation_tolerance,
            ..self
        }
    }

    pub fn validate(&self) -> Result<(), GenerateError> {
        let finite_pos = |x: f64| x.is_finite() && x > 0.0;
        if !finite_pos(self.alpha) {
            return Err(GenerateError::InvalidParams("GGP alpha must be positive"));
        }
        if !(0.0..1.0).contains(&self.sigma) {
            return Err(GenerateError::InvalidParams("GGP sigma must lie in [0, 1)"));
        }
        if !finite_pos(self.tau) {
            return Err(GenerateError::InvalidParams("GGP tau must be positive"));
        }
        if !finite_pos(self.epsilon) {
            return Err(GenerateError::InvalidParams("GGP epsilon must be positive"));
        }
        if self.truncation_tolerance.is_nan() || self.truncation_tolerance < 0.0 {
            return Err(GenerateError::InvalidParams(
                "GGP truncation tolerance must be non-negative",
            ));
        }
        Ok(())
    }

    /// Expected total mass `alpha * tau^(sigma - 1)`.
    pub fn expected_total_mass(&self) -> f64 {
        self.alpha * libm::pow(self.tau, self.sigma - 1.0)
    }
}

/// Fraction of the expected total mass carried by jumps below `epsilon`.
///
/// `int_0^eps w rho(w) dw / int_0^inf w rho(w) dw = P(1 - sigma, tau * eps)`.
pub fn truncated_mass_fraction(params: &GgpParams) -> f64 {
    regularized_lower_gamma(1.0 - params.sigma, params.tau * params.epsilon)
}

/// Samples the GGP jumps `w >= epsilon`, in proposal order.
pub fn sample_ggp_weights(params: GgpParams, seed: Seed) -> Result<Vec<f64>, GenerateError> {
    params.validate()?;
    let fraction = truncated_mass_fraction(&params);
    if fraction > params.truncation_tolerance {
        return Err(GenerateError::TruncationTooCoarse {
            fraction,
            tolerance: params.truncation_tolerance,
        });
    }
    let mut rng = seed.rng();
    let GgpParams {
        alpha,
        sigma,
        tau,
        epsilon,
        ..
    } = params;

    let proposals = if sigma > 0.0 {
        Proposals::Pareto {
            mass: alpha / (gamma(1.0 - sigma) * sigma) * libm::pow(epsilon, -sigma),
            neg_inv_sigma: -1.0 / sigma,
        }
    } else {
        let w_max = gamma_tail_cutoff(alpha, tau, epsilon);
        let log_span = libm::log(w_max / epsilon);
        Proposals::LogUniform {
            mass: alpha * log_span,
            log_span,
        }
    };
    let count = poisson(proposals.mass(), &mut rng);

    let mut weights = Vec::new();
    for _ in 0..count {
        // 1 - [0, 1) is in (0, 1], keeping the Pareto draw finite.
        let u = 1.0 - rng.random::<f64>();
        let w = match proposals {
            Proposals::Pareto { neg_inv_sigma, .. } => epsilon * libm::pow(u, neg_inv_sigma),
            Proposals::LogUniform { log_span, .. } => epsilon * libm::exp(u * log_span),
        };
        if rng.random::<f64>() < libm::exp(-tau * w) {
            weights.push(w);
        }
    }
    Ok(weights)
}

#[derive(Clone, Copy)]
enum Proposals {
    Pareto { mass: f64, neg_inv_sigma: f64 },
    LogUniform { mass: f64, log_span: f64 },
}

impl Proposals {
    fn mass(&self) -> f64 {
        match *self {
            Proposals::Pareto { mass, .. } | Proposals::LogUniform { mass, .. } => mass,
        }
    }
}

// Smallest doubling of max(1/tau, epsilon) whose tail bound
// alpha * exp(-tau w) / (tau w) falls below TAIL_MASS_BOUND.
fn gamma_tail_cutoff(alpha: f64, tau: f64, epsilon: f64) -> f64 {
    let mut w = (1.0 / tau).max(2.0 * epsilon);
    while alpha * libm::exp(-tau * w) / (tau * w) >= TAIL_MASS_BOUND {
        w *= 2.0;
    }
    w
}

fn poisson(mean: f64, rng: &mut crate::seed::Rng) -> u64 {
    if mean <= 0.0 {
        return 0;
    }
    let draw: f64 = Poisson::new(mean).expect("finite positive Poisson mean").sample(rng);
    draw as u64
}

/// Samples a Caron–Fox undirected graph.
///
/// With `W = sum(w)`, draws `D ~ Poisson(W^2)` ordered pairs whose two
/// endpoints are picked independently with probability `w_i / W`. Loops
/// and repeated pairs are discarded, nodes left without edges are removed
/// and the remaining ids are renumbered densely in weight order.
pub fn generate_ggp(params: GgpParams, seed: Seed) -> Result<Graph, GenerateError> {
    let weights = sample_ggp_weights(params, seed.child(0))?;
    let mut rng = seed.child(1).rng();

    let mut cumulative = Vec::with_capacity(weights.len());
    let mut total = 0.0;
    for &w in &weights {
        total += w;
        cumulative.push(total);
    }
    if weights.is_empty() {
        return Err(GenerateError::DegenerateDraw { nodes: 0 });
    }

    let pair_count = poisson(total * total, &mut rng);
    let last = weights.len() - 1;
    let mut pick = || {
        let x = rng.random::<f64>() * total;
        cumulative.partition_point(|&c| c <= x).min(last)
    };
    let mut pairs = Vec::with_capacity(pair_count as usize);
    for _ in 0..pair_count {
        let u = pick();
        let v = pick();
        pairs.push((u, v));
    }

    // Compact onto touched atoms before building adjacency; the weight
    // vector can be far longer than the node set.
    let mut touched: Vec<usize> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    touched.sort_unstable();
    touched.dedup();
    let index = |x: usize| touched.binary_search(&x).expect("touched atom");
    let compact = pairs.iter().map(|&(u, v)| (index(u), index(v)));
    let graph = Graph::simplify(touched.len(), compact).without_isolated();

    if graph.node_count() < 2 {
        return Err(GenerateError::DegenerateDraw {
            nodes: graph.node_count(),
        });
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jumps_respect_truncation() {
        for sigma in [0.0, 0.5, 0.8] {
            let p = GgpParams::new(20.0, sigma, 1.0)
                .with_epsilon(1e-3)
                .with_truncation_tolerance(1.0);
            let w = sample_ggp_weights(p, Seed(5)).unwrap();
            assert!(!w.is_empty());
            assert!(w.iter().all(|&x| x >= 1e-3 && x.is_finite()));
        }
    }

    #[test]
    fn rejects_coarse_truncation() {
        let p = GgpParams::new(10.0, 0.8, 1.0)
            .with_epsilon(1e-2)
            .with_truncation_tolerance(1e-3);
        assert!(matches!(
            sample_ggp_weights(p, Seed(0)),
            Err(GenerateError::TruncationTooCoarse { .. })
        ));
    }

    #[test]
    fn truncated_fraction_small_epsilon() {
        // For small x, P(s, x) ~ x^s / Gamma(s + 1).
        let p = GgpParams::new(1.0, 0.5, 1.0).with_epsilon(1e-8);
        let approx = 1e-4 / gamma(1.5);
        assert!((truncated_mass_fraction(&p) - approx).abs() < 1e-7);
    }

    #[test]
    fn rejects_invalid_params() {
        for p in [
            GgpParams::new(0.0, 0.5, 1.0),
            GgpParams::new(1.0, 1.0, 1.0),
            GgpParams::new(1.0, -0.1, 1.0),
            GgpParams::new(1.0, 0.5, 0.0),
            GgpParams::new(1.0, 0.5, 1.0).with_epsilon(0.0),
        ] {
            assert!(matches!(generate_ggp(p, Seed(0)), Err(GenerateError::InvalidParams(_))));
        }
    }

    #[test]
    fn graph_has_no_isolated_nodes() {
        let g = generate_ggp(GgpParams::new(15.0, 0.5, 1.0), Seed(11)).unwrap();
        assert!(g.node_count() >= 2);
        assert!(g.degrees().iter().all(|&d| d >= 1));
    }

    #[test]
    fn tiny_mass_is_degenerate() {
        let p = GgpParams::new(1e-3, 0.0, 1.0);
        assert!(matches!(
            generate_ggp(p, Seed(2)),
            Err(GenerateError::DegenerateDraw { .. })
        ));
    }

    #[test]
    fn tail_cutoff_bound() {
        let w = gamma_tail_cutoff(100.0, 1.0, 1e-6);
        assert!(100.0 * libm::exp(-w) / w < TAIL_MASS_BOUND);
    }
}
