//! Simple undirected graphs over dense node ids `0..n`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Deref;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("node {0} out of range")]
    NodeOutOfRange(usize),
    #[error("matrix has {len} entries, expected {n}x{n}")]
    DimensionMismatch { n: usize, len: usize },
}

/// An undirected simple graph.
///
/// Edges are stored once, canonically as `(u, v)` with `u < v`, sorted
/// lexicographically. Neighbor lists are kept sorted as well.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    node_count: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated pairs and ids `>= node_count`.
    ///
    /// The result does not depend on the order of `edges`, nor on the
    /// orientation of each pair.
    pub fn new(node_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut canon = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= node_count {
                return Err(GraphError::NodeOutOfRange(u));
            }
            if v >= node_count {
                return Err(GraphError::NodeOutOfRange(v));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canon.push(if u < v { (u, v) } else { (v, u) });
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_canonical(node_count, canon))
    }

    /// Builds a graph from a multigraph pair list, silently dropping
    /// self-loops and collapsing repeated pairs.
    ///
    /// Panics if an endpoint is `>= node_count`.
    pub fn simplify(node_count: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut canon: Vec<(usize, usize)> = pairs
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        assert!(canon.iter().all(|&(_, v)| v < node_count), "endpoint out of range");
        canon.sort_unstable();
        canon.dedup();
        Self::from_canonical(node_count, canon)
    }

    /// `edges` must be sorted, deduplicated and canonical.
    fn from_canonical(node_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut neighbors = vec![Vec::new(); node_count];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        // Pushing in lexicographic edge order leaves `neighbors[u]` sorted
        // for the `v > u` half but interleaves the `v < u` half.
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Self {
            node_count,
            edges,
            neighbors,
        }
    }

    /// Drops isolated nodes and renumbers the rest densely, preserving
    /// relative order.
    pub fn without_isolated(&self) -> Self {
        let mut new_id = vec![usize::MAX; self.node_count];
        let mut next = 0;
        for (i, nbrs) in self.neighbors.iter().enumerate() {
            if !nbrs.is_empty() {
                new_id[i] = next;
                next += 1;
            }
        }
        let edges = self.edges.iter().map(|&(u, v)| (new_id[u], new_id[v])).collect();
        // Monotone relabeling keeps the edge list canonical and sorted.
        Self::from_canonical(next, edges)
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical sorted edge list, `u < v` in every pair.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor ids of `node`.
    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.neighbors[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.neighbors[node].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count && self.neighbors[u].binary_search(&v).is_ok()
    }

    pub fn degrees(&self) -> DegreeSequence {
        DegreeSequence(self.neighbors.iter().map(Vec::len).collect())
    }

    pub fn laplacian(&self) -> Laplacian {
        Laplacian::from_graph(self)
    }

    /// Applies a node permutation: node `i` becomes `perm[i]`.
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.node_count, "permutation length");
        let mut seen = vec![false; self.node_count];
        for &p in perm {
            assert!(p < self.node_count && !seen[p], "not a permutation");
            seen[p] = true;
        }
        Self::simplify(self.node_count, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}

/// Node degrees indexed by node id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl Deref for DegreeSequence {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// Dense combinatorial Laplacian `L = D - A`, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Laplacian {
    n: usize,
    entries: Vec<f64>,
}

impl Laplacian {
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.node_count();
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            entries[i * n + i] = g.degree(i) as f64;
        }
        for &(u, v) in g.edges() {
            entries[u * n + v] = -1.0;
            entries[v * n + u] = -1.0;
        }
        Self { n, entries }
    }

    /// Wraps an arbitrary row-major `n x n` matrix. No structural checks are
    /// made beyond the size; the eigensolver validates symmetry.
    pub fn from_dense(n: usize, entries: Vec<f64>) -> Result<Self, GraphError> {
        if entries.len() != n * n {
            return Err(GraphError::DimensionMismatch { n, len: entries.len() });
        }
        Ok(Self { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn single_edge() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(&*g.degrees(), &[1, 1]);
        assert_eq!(g.laplacian().as_slice(), &[1.0, -1.0, -1.0, 1.0]);
    }

    #[test]
    fn triangle() {
        let g = k3();
        assert_eq!(&*g.degrees(), &[2, 2, 2]);
        assert_eq!(
            g.laplacian().as_slice(),
            &[2.0, -1.0, -1.0, -1.0, 2.0, -1.0, -1.0, -1.0, 2.0]
        );
    }

    #[test]
    fn star_and_empty_degrees() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (3, 0)]).unwrap();
        assert_eq!(&*star.degrees(), &[3, 1, 1, 1]);
        let empty = Graph::new(4, &[]).unwrap();
        assert_eq!(&*empty.degrees(), &[0, 0, 0, 0]);
        assert!(Graph::new(3, &[])
            .unwrap()
            .laplacian()
            .as_slice()
            .iter()
            .all(|&x| x == 0.0));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::new(3, &[(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(3, &[(0, 3)]), Err(GraphError::NodeOutOfRange(3)));
        assert!(matches!(
            Laplacian::from_dense(2, vec![0.0; 3]),
            Err(GraphError::DimensionMismatch { n: 2, len: 3 })
        ));
    }

    #[test]
    fn stores_canonical_order() {
        let g = Graph::new(4, &[(3, 1), (2, 0), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 3)]);
        assert_eq!(g.neighbors(1), &[0, 3]);
        assert!(g.has_edge(3, 1));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn simplify_and_reindex() {
        let g = Graph::simplify(6, [(1, 1), (4, 1), (1, 4), (5, 4)]);
        assert_eq!(g.edges(), &[(1, 4), (4, 5)]);
        let h = g.without_isolated();
        assert_eq!(h.node_count(), 3);
        assert_eq!(h.edges(), &[(0, 1), (1, 2)]);
    }
}
