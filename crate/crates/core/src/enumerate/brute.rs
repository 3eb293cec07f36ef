use itertools::Itertools;

use crate::graphs::WeightedGraph;
use crate::mpoly::Polynomial;

use super::EnumerateError;

pub const DEFAULT_EDGE_CAP: usize = 24;

struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// False if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Calls `visit` with the edge indices (into `g.edges()` order) of every
/// spanning tree. `n - 1` acyclic edges on `n` vertices always span.
pub fn for_each_spanning_tree<F>(g: &WeightedGraph, cap: usize, mut visit: F) -> Result<(), EnumerateError>
where
    F: FnMut(&[usize]),
{
    let edges: Vec<(usize, usize)> = g.edges().map(|(i, j, _)| (i, j)).collect();
    if edges.len() > cap {
        return Err(EnumerateError::TooLarge {
            edges: edges.len(),
            cap,
        });
    }
    let n = g.n();
    if edges.len() + 1 < n {
        return Ok(());
    }
    for subset in (0..edges.len()).combinations(n - 1) {
        let mut sets = DisjointSets::new(n);
        if subset.iter().all(|&e| sets.union(edges[e].0, edges[e].1)) {
            visit(&subset);
        }
    }
    Ok(())
}

/// `τ(G;ω)` as the sum over spanning trees of the product of their edge
/// weights, found by testing every `(n-1)`-subset of edges.
pub fn tau_brute_force_with_cap(g: &WeightedGraph, cap: usize) -> Result<Polynomial, EnumerateError> {
    let weights: Vec<&Polynomial> = g.edges().map(|(_, _, w)| w).collect();
    let mut trees = Vec::new();
    for_each_spanning_tree(g, cap, |subset| {
        trees.push(subset.iter().map(|&e| weights[e]).product::<Polynomial>());
    })?;
    Ok(trees.into_iter().sum())
}

pub fn tau_brute_force(g: &WeightedGraph) -> Result<Polynomial, EnumerateError> {
    tau_brute_force_with_cap(g, DEFAULT_EDGE_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn unit_graph(n: usize, edges: &[(usize, usize)]) -> WeightedGraph {
        WeightedGraph::from_edge_list(n, edges.iter().map(|&(i, j)| (i, j, Polynomial::one()))).unwrap()
    }

    #[test]
    fn single_edge() {
        let w = Polynomial::x(1) * Polynomial::y(1);
        let g = WeightedGraph::from_edge_list(2, [(0, 1, w.clone())]).unwrap();
        assert_eq!(tau_brute_force(&g).unwrap(), w);
    }

    #[test]
    fn cycle_has_n_trees() {
        let c4 = unit_graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(tau_brute_force(&c4).unwrap(), Polynomial::constant(4));
    }

    #[test]
    fn complete_graph_k4() {
        let k4 = crate::graphs::complete_graph(4).unwrap();
        let tau = tau_brute_force(&k4).unwrap();
        // degree sequences of trees on 4 vertices: compositions of 6 into 4 parts
        assert_eq!(tau.num_terms(), 10);
        assert_eq!(tau.evaluate_ones(), BigInt::from(16));
    }

    #[test]
    fn disconnected_and_trivial() {
        let g = WeightedGraph::empty(2).unwrap();
        assert!(tau_brute_force(&g).unwrap().is_zero());
        let single = WeightedGraph::empty(1).unwrap();
        assert!(tau_brute_force(&single).unwrap().is_one());
    }

    #[test]
    fn edge_cap() {
        let k8 = crate::graphs::complete_graph(8).unwrap();
        assert_eq!(
            tau_brute_force(&k8),
            Err(EnumerateError::TooLarge { edges: 28, cap: 24 })
        );
        let k4 = crate::graphs::complete_graph(4).unwrap();
        assert!(tau_brute_force_with_cap(&k4, 5).is_err());
    }
}
