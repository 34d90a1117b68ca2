//! Cross-checks union-find component counts against the multiplicity of
//! the Laplacian's zero eigenvalue.

use sparsenet_core::generators::{generate_ba, generate_er, generate_ggp, BaParams, ErParams, GgpParams};
use sparsenet_core::spectral::{laplacian_spectrum_with, SpectralConfig};
use sparsenet_core::stats::connected_components;
use sparsenet_core::{Graph, Seed};

use crate::Error;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckCase {
    pub label: String,
    pub nodes: usize,
    pub edges: usize,
    pub union_find: usize,
    pub spectral: usize,
}

impl CheckCase {
    pub fn agrees(&self) -> bool {
        self.union_find == self.spectral
    }
}

pub fn check_graph(label: impl Into<String>, g: &Graph, config: &SpectralConfig) -> Result<CheckCase, Error> {
    let label = label.into();
    let spectrum = laplacian_spectrum_with(&g.laplacian(), config).map_err(|e| Error::Spectral {
        label: label.clone(),
        source: e,
    })?;
    Ok(CheckCase {
        nodes: g.node_count(),
        edges: g.edge_count(),
        union_find: connected_components(g).count,
        spectral: spectrum.null_multiplicity,
        label,
    })
}

type Case = (&'static str, usize, Vec<(usize, usize)>);

fn hand_built() -> Vec<(String, Graph)> {
    let complete = |n: usize| -> Vec<(usize, usize)> { (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect() };
    let mut cases: Vec<Case> = vec![
        ("single node", 1, vec![]),
        ("single edge", 2, vec![(0, 1)]),
        ("empty n=3", 3, vec![]),
        ("empty n=40", 40, vec![]),
        ("two disjoint edges", 4, vec![(0, 1), (2, 3)]),
        ("triangle plus isolated", 4, vec![(0, 1), (1, 2), (0, 2)]),
        ("star K1,3", 4, vec![(0, 1), (0, 2), (0, 3)]),
        ("path P4", 4, vec![(0, 1), (1, 2), (2, 3)]),
        ("K4 minus edge", 4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        ("K5", 5, complete(5)),
        ("K30", 30, complete(30)),
        ("path P200", 200, (0..199).map(|i| (i, i + 1)).collect()),
        ("path P500", 500, (0..499).map(|i| (i, i + 1)).collect()),
        ("cycle C100", 100, (0..100).map(|i| (i, (i + 1) % 100)).collect()),
    ];
    // Ten disjoint triangles plus five isolated nodes.
    cases.push((
        "10 K3 + 5 K1",
        35,
        (0..10)
            .flat_map(|t| [(3 * t, 3 * t + 1), (3 * t + 1, 3 * t + 2), (3 * t, 3 * t + 2)])
            .collect(),
    ));
    // Two cliques joined by one edge, and the same without the bridge.
    let mut barbell: Vec<(usize, usize)> = complete(20);
    barbell.extend(complete(20).into_iter().map(|(u, v)| (u + 20, v + 20)));
    cases.push(("barbell split", 40, barbell.clone()));
    barbell.push((19, 20));
    cases.push(("barbell", 40, barbell));
    cases
        .into_iter()
        .map(|(label, n, edges)| {
            (
                label.to_string(),
                Graph::new(n, &edges).expect("valid hand-built graph"),
            )
        })
        .collect()
}

/// Hand-built edge cases plus `generated` seeded graphs cycling through ER,
/// BA and GGP, all with at most 500 nodes.
pub fn suite(seed: Seed, generated: usize) -> Vec<(String, Graph)> {
    let mut cases = hand_built();
    let mut made = 0;
    let mut i = 0u64;
    while made < generated {
        let s = seed.child(i);
        i += 1;
        let pick = s.value();
        let case = match i % 3 {
            0 => {
                let n = 5 + (pick % 300) as usize;
                // Mean degree between roughly 0.2 and 6, covering both
                // fragmented and connected graphs.
                let mean_degree = 0.2 + (pick >> 20) as f64 % 58.0 / 10.0;
                let p = (mean_degree / (n as f64 - 1.0)).min(1.0);
                generate_er(ErParams { n, p }, s)
                    .ok()
                    .map(|g| (format!("er n={n} p={p:.4}"), g))
            }
            1 => {
                let m = 1 + (pick % 3) as usize;
                let n = m + 1 + ((pick >> 8) % 400) as usize;
                generate_ba(BaParams::new(n, m), s)
                    .ok()
                    .map(|g| (format!("ba n={n} m={m}"), g))
            }
            _ => {
                let sigma = [0.0, 0.5, 0.8][(pick % 3) as usize];
                let alpha = 1.0 + ((pick >> 8) % 12) as f64;
                generate_ggp(GgpParams::new(alpha, sigma, 1.0), s)
                    .ok()
                    .filter(|g| g.node_count() <= 500)
                    .map(|g| (format!("ggp sigma={sigma} alpha={alpha}"), g))
            }
        };
        if let Some(c) = case {
            cases.push(c);
            made += 1;
        }
    }
    cases
}

pub fn run_suite(cases: &[(String, Graph)], config: &SpectralConfig) -> Result<Vec<CheckCase>, Error> {
    cases
        .iter()
        .map(|(label, g)| check_graph(label.clone(), g, config))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_is_deterministic_and_bounded() {
        let a = suite(Seed(3), 30);
        let b = suite(Seed(3), 30);
        assert_eq!(a, b);
        assert!(a.iter().all(|(_, g)| g.node_count() <= 500));
        assert_eq!(a.len(), hand_built().len() + 30);
    }

    #[test]
    fn hand_built_cases_agree() {
        let results = run_suite(&hand_built(), &SpectralConfig::default()).unwrap();
        for r in &results {
            assert!(r.agrees(), "{r:?}");
        }
        let split = results.iter().find(|r| r.label == "barbell split").unwrap();
        assert_eq!(split.union_find, 2);
    }
}
