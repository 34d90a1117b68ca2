//! Discrete core/periphery partition (Borgatti–Everett).
//!
//! For a core set `S`, the ideal pattern over unordered node pairs is
//! `Delta_ij = 1` iff `i` or `j` is in `S`. The objective is the Pearson
//! correlation between `Delta` and the adjacency indicator. With `N` pairs,
//! `m` edges, `k = |S|`, `P = N - C(n - k, 2)` core-touching pairs and `X`
//! core-touching edges it reduces to
//!
//! ```text
//! rho(k, X) = (N X - m P) / sqrt(m (N - m) P (N - P))
//! ```
//!
//! so a single-node move changes the objective in O(1) given the number of
//! periphery neighbors of the moved node. Partitions with `k = 0` or
//! `k >= n - 1` have a constant pattern and are never candidates; for a
//! complete graph the adjacency vector is constant and every candidate
//! scores 0.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use rand::Rng as _;

use super::StatsError;
use crate::{Graph, Seed};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoreConfig {
    pub restarts: usize,
    pub seed: Seed,
    /// Initial annealing temperature for escape moves.
    pub initial_temperature: f64,
    /// Geometric cooling factor per escape move.
    pub cooling: f64,
    /// Move budget per restart, as a multiple of the node count.
    pub moves_per_node: usize,
}

impl Default for CoreConfig {
    fn default() -> Self {
        Self {
            restarts: 10,
            seed: Seed(0),
            initial_temperature: 1.0,
            cooling: 0.95,
            moves_per_node: 50,
        }
    }
}

impl CoreConfig {
    pub fn with_seed(self, seed: Seed) -> Self {
        Self { seed, ..self }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorePeripheryResult {
    /// Sorted core node ids.
    pub core: Vec<usize>,
    pub objective: f64,
    pub node_count: usize,
}

impl CorePeripheryResult {
    pub fn core_share(&self) -> f64 {
        core_share(self)
    }
}

pub fn core_share(result: &CorePeripheryResult) -> f64 {
    if result.node_count == 0 {
        0.0
    } else {
        result.core.len() as f64 / result.node_count as f64
    }
}

/// Correlation between adjacency and the ideal pattern of `core`, or
/// `None` when the pattern is constant (`|core| = 0` or `|core| >= n - 1`).
pub fn pattern_correlation(g: &Graph, core: &[usize]) -> Option<f64> {
    let mut in_core = alloc::vec![false; g.node_count()];
    for &c in core {
        in_core[c] = true;
    }
    let k = in_core.iter().filter(|&&b| b).count();
    let touching = g.edges().iter().filter(|&&(u, v)| in_core[u] || in_core[v]).count();
    Objective::new(g).value(k, touching)
}

#[derive(Clone, Copy)]
struct Objective {
    n: u64,
    pairs: u64,
    edges: u64,
}

impl Objective {
    fn new(g: &Graph) -> Self {
        let n = g.node_count() as u64;
        Self {
            n,
            pairs: n * n.saturating_sub(1) / 2,
            edges: g.edge_count() as u64,
        }
    }

    fn valid(&self, k: usize) -> bool {
        k >= 1 && (k as u64) + 2 <= self.n
    }

    fn value(&self, k: usize, touching: usize) -> Option<f64> {
        if !self.valid(k) {
            return None;
        }
        let rest = self.n - k as u64;
        let pattern = self.pairs - rest * (rest - 1) / 2;
        if self.edges == 0 || self.edges == self.pairs {
            return Some(0.0);
        }
        let num = self.pairs as i128 * touching as i128 - self.edges as i128 * pattern as i128;
        let var_a = (self.edges * (self.pairs - self.edges)) as f64;
        let var_p = (pattern * (self.pairs - pattern)) as f64;
        Some(num as f64 / libm::sqrt(var_a * var_p))
    }
}

/// Maximizes the pattern correlation by greedy single-node moves from
/// several random starts, escaping local optima by annealed random flips.
///
/// The best partition over all restarts is returned; equal objectives are
/// broken by smaller core, then by the lexicographically smaller member list.
pub fn core_periphery(g: &Graph, config: &CoreConfig) -> Result<CorePeripheryResult, StatsError> {
    if g.edge_count() == 0 {
        return Err(StatsError::EmptyGraph);
    }
    let objective = Objective::new(g);
    if !objective.valid(1) {
        return Err(StatsError::DegeneratePattern);
    }
    let mut best: Option<Candidate> = None;
    for restart in 0..config.restarts.max(1) {
        let mut search = Search::new(g, objective, config.seed.child(restart as u64));
        let found = search.run(config);
        if best.as_ref().is_none_or(|b| found.beats(b)) {
            best = Some(found);
        }
    }
    let best = best.expect("at least one restart");
    Ok(CorePeripheryResult {
        core: best.core,
        objective: best.objective,
        node_count: g.node_count(),
    })
}

struct Candidate {
    objective: f64,
    core: Vec<usize>,
}

impl Candidate {
    fn beats(&self, other: &Candidate) -> bool {
        if self.objective != other.objective {
            return self.objective > other.objective;
        }
        if self.core.len() != other.core.len() {
            return self.core.len() < other.core.len();
        }
        self.core < other.core
    }
}

struct Search<'g> {
    g: &'g Graph,
    objective: Objective,
    rng: crate::seed::Rng,
    in_core: Vec<bool>,
    /// Neighbors of each node that sit in the periphery.
    periphery_nbrs: Vec<usize>,
    /// `(periphery_nbrs, id)` for core and periphery nodes respectively.
    core_set: BTreeSet<(usize, usize)>,
    periphery_set: BTreeSet<(usize, usize)>,
    k: usize,
    touching: usize,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, objective: Objective, seed: Seed) -> Self {
        let n = g.node_count();
        let mut rng = seed.rng();
        let k = rng.random_range(1..=n - 2);
        // Partial Fisher–Yates: the first k entries form a uniform k-subset.
        let mut order: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = rng.random_range(i..n);
            order.swap(i, j);
        }
        let mut in_core = alloc::vec![false; n];
        for &v in &order[..k] {
            in_core[v] = true;
        }
        let periphery_nbrs: Vec<usize> = (0..n)
            .map(|v| g.neighbors(v).iter().filter(|&&u| !in_core[u]).count())
            .collect();
        let touching = g.edges().iter().filter(|&&(u, v)| in_core[u] || in_core[v]).count();
        let mut core_set = BTreeSet::new();
        let mut periphery_set = BTreeSet::new();
        for v in 0..n {
            let key = (periphery_nbrs[v], v);
            if in_core[v] {
                core_set.insert(key);
            } else {
                periphery_set.insert(key);
            }
        }
        Self {
            g,
            objective,
            rng,
            in_core,
            periphery_nbrs,
            core_set,
            periphery_set,
            k,
            touching,
        }
    }

    fn current(&self) -> f64 {
        self.objective
            .value(self.k, self.touching)
            .expect("search stays on valid partitions")
    }

    /// Objective after flipping `v`, if the result is a valid partition.
    fn after_flip(&self, v: usize) -> Option<f64> {
        let d = self.periphery_nbrs[v];
        if self.in_core[v] {
            self.objective.value(self.k - 1, self.touching - d)
        } else {
            self.objective.value(self.k + 1, self.touching + d)
        }
    }

    fn flip(&mut self, v: usize) {
        let d = self.periphery_nbrs[v];
        let entering = !self.in_core[v];
        if entering {
            self.periphery_set.remove(&(d, v));
            self.core_set.insert((d, v));
            self.k += 1;
            self.touching += d;
        } else {
            self.core_set.remove(&(d, v));
            self.periphery_set.insert((d, v));
            self.k -= 1;
            self.touching -= d;
        }
        self.in_core[v] = entering;
        for &u in self.g.neighbors(v) {
            let old = self.periphery_nbrs[u];
            let new = if entering { old - 1 } else { old + 1 };
            self.periphery_nbrs[u] = new;
            let set = if self.in_core[u] {
                &mut self.core_set
            } else {
                &mut self.periphery_set
            };
            set.remove(&(old, u));
            set.insert((new, u));
        }
    }

    /// For fixed `k` the objective increases with `X`, so the best addition
    /// is the periphery node with the most periphery neighbors and the best
    /// removal is the core node with the fewest.
    fn best_move(&self) -> Option<(usize, f64)> {
        let add = self.periphery_set.last().map(|&(d, _)| {
            let &(_, v) = self.periphery_set.range((d, 0)..).next().expect("max bucket nonempty");
            v
        });
        let remove = self.core_set.first().map(|&(_, v)| v);
        let mut best: Option<(usize, f64)> = None;
        // Removal first: on an exact tie the smaller core wins.
        for v in [remove, add].into_iter().flatten() {
            if let Some(val) = self.after_flip(v) {
                if best.is_none_or(|(_, b)| val > b) {
                    best = Some((v, val));
                }
            }
        }
        best
    }

    fn snapshot(&self, objective: f64) -> Candidate {
        Candidate {
            objective,
            core: (0..self.in_core.len()).filter(|&v| self.in_core[v]).collect(),
        }
    }

    fn run(&mut self, config: &CoreConfig) -> Candidate {
        let n = self.in_core.len();
        let mut budget = config.moves_per_node.max(1) * n;
        let mut temperature = config.initial_temperature;
        let mut value = self.current();
        let mut best = self.snapshot(value);
        // Whether the partition changed since it was last compared to `best`.
        let mut moved = false;
        loop {
            while budget > 0 {
                match self.best_move() {
                    Some((v, next)) if next > value => {
                        self.flip(v);
                        value = next;
                        moved = true;
                        budget -= 1;
                    }
                    _ => break,
                }
            }
            if moved && value >= best.objective {
                let c = self.snapshot(value);
                if c.beats(&best) {
                    best = c;
                }
            }
            moved = false;
            if budget == 0 {
                break;
            }
            let v = self.rng.random_range(0..n);
            if let Some(next) = self.after_flip(v) {
                let delta = next - value;
                let accept =
                    delta >= 0.0 || (temperature > 0.0 && self.rng.random::<f64>() < libm::exp(delta / temperature));
                if accept {
                    self.flip(v);
                    value = next;
                    moved = true;
                }
            }
            temperature *= config.cooling;
            budget -= 1;
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn star_core_is_hub() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = core_periphery(&g, &CoreConfig::default()).unwrap();
        assert_eq!(r.core, [0]);
        assert_eq!(r.core_share(), 0.25);
        assert!((r.objective - 1.0).abs() < 1e-12);
    }

    #[test]
    fn complete_graph_scores_zero() {
        let edges: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let g = Graph::new(5, &edges).unwrap();
        let r = core_periphery(&g, &CoreConfig::default()).unwrap();
        assert_eq!(r.objective, 0.0);
        assert!(!r.core.is_empty() && r.core.len() <= 3);
    }

    #[test]
    fn errors() {
        let empty = Graph::new(4, &[]).unwrap();
        assert_eq!(
            core_periphery(&empty, &CoreConfig::default()),
            Err(StatsError::EmptyGraph)
        );
        let pair = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(
            core_periphery(&pair, &CoreConfig::default()),
            Err(StatsError::DegeneratePattern)
        );
    }

    #[test]
    fn share_arithmetic() {
        let mk = |core: Vec<usize>| CorePeripheryResult {
            core,
            objective: 0.0,
            node_count: 4,
        };
        assert_eq!(core_share(&mk(vec![0])), 0.25);
        assert_eq!(core_share(&mk(vec![])), 0.0);
        assert_eq!(core_share(&mk(vec![0, 1, 2, 3])), 1.0);
    }

    #[test]
    fn constant_patterns_have_no_correlation() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(pattern_correlation(&g, &[]), None);
        assert_eq!(pattern_correlation(&g, &[0, 1, 2]), None);
        assert!(pattern_correlation(&g, &[0]).is_some());
    }
}
