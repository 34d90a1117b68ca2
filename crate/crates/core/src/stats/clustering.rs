use crate::Graph;

/// Transitivity: `3 * triangles / connected_triples`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClusteringStat {
    pub triangles: u64,
    /// Paths of length two, `sum_i C(d_i, 2)`.
    pub connected_triples: u64,
}

impl ClusteringStat {
    /// `None` when the graph has no connected triple.
    pub fn coefficient(&self) -> Option<f64> {
        if self.connected_triples == 0 {
            None
        } else {
            Some(3.0 * self.triangles as f64 / self.connected_triples as f64)
        }
    }
}

/// Counts each triangle once as `u < v < w`, intersecting the sorted
/// neighbor lists of `u` and `v` above `v`.
pub fn global_clustering(g: &Graph) -> ClusteringStat {
    let mut triangles = 0u64;
    for &(u, v) in g.edges() {
        let a = g.neighbors(u);
        let b = g.neighbors(v);
        let (mut i, mut j) = (a.partition_point(|&x| x <= v), b.partition_point(|&x| x <= v));
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    triangles += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    let connected_triples = (0..g.node_count())
        .map(|i| {
            let d = g.degree(i) as u64;
            d * d.saturating_sub(1) / 2
        })
        .sum();
    ClusteringStat {
        triangles,
        connected_triples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_fully_clustered() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(global_clustering(&g).coefficient(), Some(1.0));
    }

    #[test]
    fn path_has_no_triangles() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let c = global_clustering(&g);
        assert_eq!((c.triangles, c.connected_triples), (0, 1));
        assert_eq!(c.coefficient(), Some(0.0));
    }

    #[test]
    fn k4_minus_edge() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let c = global_clustering(&g);
        assert_eq!((c.triangles, c.connected_triples), (2, 8));
        assert_eq!(c.coefficient(), Some(0.75));
    }

    #[test]
    fn undefined_without_triples() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(global_clustering(&g).coefficient(), None);
    }
}
