//! Edge-weighted simple graphs and the graph families with their canonical
//! weightings.
//!
//! Vertices are addressed by 0-based indices. Weights are stored once per
//! unordered pair; a missing pair has weight zero.

mod families;
mod partition;
mod threshold;

pub use families::{complete_graph, complete_multipartite, ferrers_graph, threshold_graph};
pub use partition::Partition;
pub use threshold::{is_threshold_ordered, special_vertex, CreationStep, MultipartiteSpec, ThresholdSpec};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::mpoly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edge {{{0}, {1}}} listed more than once")]
    DuplicateEdge(usize, usize),
    #[error("loop at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex index {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("edge {{{0}, {1}}} has zero weight")]
    ZeroWeight(usize, usize),
    #[error("vertex order is not a threshold ordering")]
    NotThresholdOrdered,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid multipartite spec: {0}")]
    InvalidMultipartite(String),
    #[error("invalid creation sequence: {0}")]
    InvalidCreationSequence(String),
    #[error("label count {labels} does not match vertex count {n}")]
    LabelCount { labels: usize, n: usize },
}

/// A simple graph with a symmetric polynomial edge weighting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    labels: Vec<String>,
    // keyed by (i, j) with i < j; values are never zero
    weights: BTreeMap<(usize, usize), Polynomial>,
}

impl WeightedGraph {
    /// Builds a graph on `n` vertices labelled `v1..vn`.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Polynomial)>,
    {
        let labels = (1..=n).map(|i| format!("v{i}")).collect();
        Self::with_labels(labels, edges)
    }

    pub fn with_labels<I>(labels: Vec<String>, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Polynomial)>,
    {
        let n = labels.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut weights = BTreeMap::new();
        for (i, j, w) in edges {
            for index in [i, j] {
                if index >= n {
                    return Err(GraphError::IndexOutOfRange { index, n });
                }
            }
            if i == j {
                return Err(GraphError::LoopEdge(i));
            }
            let key = (i.min(j), i.max(j));
            if w.is_zero() {
                return Err(GraphError::ZeroWeight(key.0, key.1));
            }
            if weights.insert(key, w).is_some() {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
        }
        Ok(WeightedGraph { labels, weights })
    }

    /// `n` vertices, no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::from_edge_list(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn num_edges(&self) -> usize {
        self.weights.len()
    }

    /// Edges as `(i, j, weight)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Polynomial)> + '_ {
        self.weights.iter().map(|(&(i, j), w)| (i, j, w))
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.weights.contains_key(&(i.min(j), i.max(j)))
    }

    /// Edge weight, `None` for non-edges (including `i == j`).
    pub fn weight(&self, i: usize, j: usize) -> Option<&Polynomial> {
        self.weights.get(&(i.min(j), i.max(j)))
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.n()).filter(|&j| self.has_edge(i, j)).collect()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges().filter(|&(a, b, _)| a == i || b == i).count()
    }

    /// Unweighted degrees in vertex order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n()];
        for (i, j, _) in self.edges() {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    /// Sum of the weights of the edges at `i`.
    pub fn weighted_degree(&self, i: usize) -> Polynomial {
        self.edges()
            .filter(|&(a, b, _)| a == i || b == i)
            .map(|(_, _, w)| w)
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Same edges, every weight replaced by 1.
    pub fn unweighted(&self) -> WeightedGraph {
        self.map_weights(|_, _, _| Polynomial::one())
    }

    /// Replaces each edge weight; the edge set is unchanged.
    ///
    /// # Panics
    /// Panics if `f` returns the zero polynomial.
    pub fn map_weights<F>(&self, mut f: F) -> WeightedGraph
    where
        F: FnMut(usize, usize, &Polynomial) -> Polynomial,
    {
        let weights = self
            .weights
            .iter()
            .map(|(&(i, j), w)| {
                let w = f(i, j, w);
                assert!(!w.is_zero(), "edge weights must be nonzero");
                ((i, j), w)
            })
            .collect();
        WeightedGraph {
            labels: self.labels.clone(),
            weights,
        }
    }

    /// Re-checks the structural invariants: keys ordered and in range, no
    /// zero weights.
    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.n();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        for (&(i, j), w) in &self.weights {
            if i == j {
                return Err(GraphError::LoopEdge(i));
            }
            if i > j {
                return Err(GraphError::DuplicateEdge(i, j));
            }
            if j >= n {
                return Err(GraphError::IndexOutOfRange { index: j, n });
            }
            if w.is_zero() {
                return Err(GraphError::ZeroWeight(i, j));
            }
        }
        Ok(())
    }
}
