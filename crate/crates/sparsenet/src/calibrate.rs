//! Choosing the GGP mass scale for a target node count.
//!
//! A node of weight `w` receives `Poisson(2 W w)` edge endpoints, so with the
//! total mass `W` replaced by its mean `alpha * tau^(sigma - 1)` the expected
//! number of non-isolated nodes is
//!
//! ```text
//! E[n](alpha) ~ int_eps^inf (1 - exp(-2 W w)) rho(w) dw
//! ```
//!
//! which increases in `alpha` and is inverted by bisection.

use sparsenet_core::generators::GgpParams;
use sparsenet_core::special::gamma;

const SIMPSON_INTERVALS: usize = 4000;

/// Approximate expected node count of a GGP graph.
pub fn expected_node_count(params: &GgpParams) -> f64 {
    let GgpParams {
        alpha,
        sigma,
        tau,
        epsilon,
        ..
    } = *params;
    let mass = params.expected_total_mass();
    let scale = alpha / gamma(1.0 - sigma);
    let lo = epsilon.ln();
    let hi = ((40.0 + (alpha + 1.0).ln()) / tau).max(epsilon * 2.0).ln();
    // Substituting w = e^t turns rho(w) dw into scale * e^(-sigma t) e^(-tau e^t) dt.
    let f = |t: f64| {
        let w = t.exp();
        scale * (-sigma * t - tau * w).exp() * -(-2.0 * mass * w).exp_m1()
    };
    let h = (hi - lo) / SIMPSON_INTERVALS as f64;
    let mut sum = f(lo) + f(hi);
    for i in 1..SIMPSON_INTERVALS {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += weight * f(lo + i as f64 * h);
    }
    sum * h / 3.0
}

/// Mass scale whose expected node count is `target`, for fixed
/// `sigma`, `tau` and truncation.
pub fn alpha_for_nodes(template: &GgpParams, target: f64) -> f64 {
    let count = |log_alpha: f64| {
        expected_node_count(&GgpParams {
            alpha: log_alpha.exp(),
            ..*template
        })
    };
    let (mut lo, mut hi) = ((1e-4f64).ln(), (1e8f64).ln());
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if count(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-12 {
            break;
        }
    }
    (0.5 * (lo + hi)).exp()
}
