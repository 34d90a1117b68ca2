use alloc::vec::Vec;

use crate::Graph;

/// Disjoint-set forest with union by size and path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        Self {
            parent: (0..len).collect(),
            size: alloc::vec![1; len],
            sets: len,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            let grandparent = self.parent[self.parent[x]];
            self.parent[x] = grandparent;
            x = grandparent;
        }
        x
    }

    /// Returns `true` if `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        true
    }

    pub fn set_count(&self) -> usize {
        self.sets
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCount {
    pub count: usize,
    /// Per node, the smallest node id in its component.
    pub labels: Vec<usize>,
}

pub fn connected_components(g: &Graph) -> ComponentCount {
    let n = g.node_count();
    let mut uf = UnionFind::new(n);
    for &(u, v) in g.edges() {
        uf.union(u, v);
    }
    let mut smallest = alloc::vec![usize::MAX; n];
    for i in 0..n {
        let root = uf.find(i);
        // Ascending scan: the first node seen per root is its minimum.
        if smallest[root] == usize::MAX {
            smallest[root] = i;
        }
    }
    let labels = (0..n).map(|i| smallest[uf.find(i)]).collect();
    ComponentCount {
        count: uf.set_count(),
        labels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_disjoint_edges() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let c = connected_components(&g);
        assert_eq!(c.count, 2);
        assert_eq!(c.labels, [0, 0, 2, 2]);
    }

    #[test]
    fn triangle_plus_isolated() {
        let g = Graph::new(4, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let c = connected_components(&g);
        assert_eq!(c.count, 2);
        assert_eq!(c.labels, [0, 1, 1, 1]);
    }

    #[test]
    fn empty_graphs() {
        assert_eq!(connected_components(&Graph::new(0, &[]).unwrap()).count, 0);
        assert_eq!(connected_components(&Graph::new(3, &[]).unwrap()).count, 3);
    }
}
