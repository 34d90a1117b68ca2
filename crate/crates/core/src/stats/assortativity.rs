//! Degree assortativity over remaining (excess) degrees.
//!
//! Following an edge from one endpoint, the remaining degree of the other
//! endpoint is its degree minus one. With `e_jk` the probability that a
//! uniformly chosen edge orientation joins remaining degrees `j` and `k`,
//! and `q_k` its marginal,
//!
//! ```text
//! r = sum_jk j k (e_jk - q_j q_k) / sigma_q^2
//! ```
//!
//! The coefficient is computed both from that distribution form and from
//! Newman's per-edge summation, and the two must agree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::StatsError;
use crate::Graph;

/// Allowed disagreement between the two computation paths, relative to
/// `max(|r|, 1)`.
pub const AGREEMENT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct RemainingDegreeStats {
    /// `q[k]`, indexed by remaining degree.
    pub q: Vec<f64>,
    /// Nonzero entries of `e_jk`, keyed by `(j, k)`.
    pub e: BTreeMap<(usize, usize), f64>,
    pub sigma_q: f64,
    // Exact variance numerator, `2m * sum k^2 c_k - (sum k c_k)^2` over the
    // stub counts `c_k`; zero iff sigma_q is zero.
    variance_numerator: u128,
}

impl RemainingDegreeStats {
    pub fn mean(&self) -> f64 {
        neumaier(self.q.iter().enumerate().map(|(k, &qk)| k as f64 * qk))
    }

    pub fn is_degenerate(&self) -> bool {
        self.variance_numerator == 0
    }
}

pub fn remaining_degree_stats(g: &Graph) -> Result<RemainingDegreeStats, StatsError> {
    let m = g.edge_count();
    if m == 0 {
        return Err(StatsError::EmptyGraph);
    }
    let stubs = 2 * m;
    let mut joint: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for &(u, v) in g.edges() {
        let (j, k) = (g.degree(u) - 1, g.degree(v) - 1);
        *joint.entry((j, k)).or_default() += 1;
        *joint.entry((k, j)).or_default() += 1;
    }
    let max_k = joint.keys().map(|&(j, _)| j).max().unwrap_or(0);
    let mut marginal = alloc::vec![0u64; max_k + 1];
    for (&(j, _), &c) in &joint {
        marginal[j] += c;
    }

    let total = stubs as f64;
    let q: Vec<f64> = marginal.iter().map(|&c| c as f64 / total).collect();
    let e = joint.into_iter().map(|(key, c)| (key, c as f64 / total)).collect();

    let s1: u128 = marginal.iter().enumerate().map(|(k, &c)| k as u128 * c as u128).sum();
    let s2: u128 = marginal
        .iter()
        .enumerate()
        .map(|(k, &c)| (k as u128).pow(2) * c as u128)
        .sum();
    let variance_numerator = stubs as u128 * s2 - s1 * s1;

    let mean = neumaier(q.iter().enumerate().map(|(k, &qk)| k as f64 * qk));
    let second = neumaier(q.iter().enumerate().map(|(k, &qk)| (k * k) as f64 * qk));
    let sigma_q = if variance_numerator == 0 {
        0.0
    } else {
        libm::sqrt((second - mean * mean).max(0.0))
    };

    Ok(RemainingDegreeStats {
        q,
        e,
        sigma_q,
        variance_numerator,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AssortativityStat {
    /// `None` for graphs whose remaining-degree variance is zero.
    pub r: Option<f64>,
}

/// `r` from the joint distribution `e_jk`, cross-checked against
/// [`assortativity_per_edge`].
pub fn assortativity(g: &Graph) -> Result<AssortativityStat, StatsError> {
    let stats = remaining_degree_stats(g)?;
    let per_edge = assortativity_per_edge(g)?;
    if stats.is_degenerate() {
        return Ok(AssortativityStat { r: None });
    }
    let mean = stats.mean();
    let mixed = neumaier(stats.e.iter().map(|(&(j, k), &p)| (j * k) as f64 * p));
    let r = (mixed - mean * mean) / (stats.sigma_q * stats.sigma_q);
    if let Some(other) = per_edge {
        if (r - other).abs() > AGREEMENT_TOLERANCE * r.abs().max(1.0) {
            return Err(StatsError::AssortativityMismatch {
                distribution: r,
                per_edge: other,
            });
        }
    }
    Ok(AssortativityStat { r: Some(r) })
}

/// Newman's per-edge form over undirected edges with remaining degrees
/// `(j_i, k_i)`:
///
/// ```text
/// r = (4m S1 - S2^2) / (2m S3 - S2^2)
/// S1 = sum j_i k_i,  S2 = sum (j_i + k_i),  S3 = sum (j_i^2 + k_i^2)
/// ```
///
/// evaluated in exact integer arithmetic before the final division.
pub fn assortativity_per_edge(g: &Graph) -> Result<Option<f64>, StatsError> {
    let m = g.edge_count() as i128;
    if m == 0 {
        return Err(StatsError::EmptyGraph);
    }
    let (mut s1, mut s2, mut s3) = (0i128, 0i128, 0i128);
    for &(u, v) in g.edges() {
        let j = g.degree(u) as i128 - 1;
        let k = g.degree(v) as i128 - 1;
        s1 += j * k;
        s2 += j + k;
        s3 += j * j + k * k;
    }
    let den = 2 * m * s3 - s2 * s2;
    if den == 0 {
        return Ok(None);
    }
    Ok(Some((4 * m * s1 - s2 * s2) as f64 / den as f64))
}

fn neumaier(values: impl Iterator<Item = f64>) -> f64 {
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for x in values {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}
