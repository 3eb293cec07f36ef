use std::fmt;
use std::str::FromStr;

use super::{GraphError, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CreationStep {
    /// New vertex adjacent to every existing vertex.
    Dominating,
    /// New vertex with no edges to existing vertices.
    Isolated,
}

/// Creation sequence of a threshold graph: an initial vertex followed by one
/// new vertex per step.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ThresholdSpec {
    steps: Vec<CreationStep>,
}

impl ThresholdSpec {
    pub fn new(steps: Vec<CreationStep>) -> Self {
        ThresholdSpec { steps }
    }

    pub fn steps(&self) -> &[CreationStep] {
        &self.steps
    }

    /// Vertex count, one more than the number of steps.
    pub fn n(&self) -> usize {
        self.steps.len() + 1
    }

    pub fn is_connected(&self) -> bool {
        self.steps.last().is_none_or(|&s| s == CreationStep::Dominating)
    }

    /// All creation sequences of connected threshold graphs on `n` vertices.
    pub fn all_connected(n: usize) -> Vec<ThresholdSpec> {
        if n == 0 {
            return Vec::new();
        }
        if n == 1 {
            return vec![ThresholdSpec::default()];
        }
        let free = n - 2;
        (0..1u64 << free)
            .map(|mask| {
                let mut steps: Vec<CreationStep> = (0..free)
                    .map(|b| {
                        if mask >> b & 1 == 1 {
                            CreationStep::Dominating
                        } else {
                            CreationStep::Isolated
                        }
                    })
                    .collect();
                steps.push(CreationStep::Dominating);
                ThresholdSpec { steps }
            })
            .collect()
    }
}

impl FromStr for ThresholdSpec {
    type Err = GraphError;

    /// A word over `d` (dominating) and `i` (isolated), case-insensitive.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .chars()
            .map(|c| match c.to_ascii_lowercase() {
                'd' => Ok(CreationStep::Dominating),
                'i' => Ok(CreationStep::Isolated),
                other => Err(GraphError::InvalidCreationSequence(format!(
                    "unexpected step {other:?}, expected 'd' or 'i'"
                ))),
            })
            .collect::<Result<_, _>>()?;
        Ok(ThresholdSpec { steps })
    }
}

impl fmt::Display for ThresholdSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                CreationStep::Dominating => "d",
                CreationStep::Isolated => "i",
            })?;
        }
        Ok(())
    }
}

/// Part sizes `n1, ..., nk` of a complete multipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultipartiteSpec {
    part_sizes: Vec<usize>,
}

impl MultipartiteSpec {
    pub fn new(part_sizes: Vec<usize>) -> Result<Self, GraphError> {
        if part_sizes.len() < 2 {
            return Err(GraphError::InvalidMultipartite("need at least two parts".into()));
        }
        if part_sizes.contains(&0) {
            return Err(GraphError::InvalidMultipartite("parts must be nonempty".into()));
        }
        Ok(MultipartiteSpec { part_sizes })
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn k(&self) -> usize {
        self.part_sizes.len()
    }

    pub fn total(&self) -> usize {
        self.part_sizes.iter().sum()
    }

    /// Part number of every vertex, parts laid out consecutively.
    pub fn part_of_vertex(&self) -> Vec<usize> {
        self.part_sizes
            .iter()
            .enumerate()
            .flat_map(|(part, &size)| std::iter::repeat_n(part, size))
            .collect()
    }

    /// Every ordered spec (composition with at least two parts) of `n`.
    pub fn all_with_total(n: usize) -> Vec<MultipartiteSpec> {
        if n < 2 {
            return Vec::new();
        }
        // each of the n-1 gaps is either a cut or not
        (1..1u64 << (n - 1))
            .map(|mask| {
                let mut sizes = Vec::new();
                let mut cur = 1;
                for gap in 0..n - 1 {
                    if mask >> gap & 1 == 1 {
                        sizes.push(cur);
                        cur = 1;
                    } else {
                        cur += 1;
                    }
                }
                sizes.push(cur);
                MultipartiteSpec { part_sizes: sizes }
            })
            .collect()
    }
}

impl FromStr for MultipartiteSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let sizes = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| GraphError::InvalidMultipartite(format!("bad part size {p:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        MultipartiteSpec::new(sizes)
    }
}

/// Whether the vertex order satisfies the threshold condition: for every edge
/// `{j, l}` with `j < l`, every `i < j` is adjacent to `l` and every `k < l`
/// is adjacent to `j`.
pub fn is_threshold_ordered(g: &WeightedGraph) -> bool {
    g.edges()
        .all(|(j, l, _)| (0..j).all(|i| g.has_edge(i, l)) && (0..l).filter(|&k| k != j).all(|k| g.has_edge(j, k)))
}

/// Size `t` of the largest clique prefix `v_1..v_t` of a threshold-ordered
/// graph. The special vertex itself has index `t - 1`.
pub fn special_vertex(g: &WeightedGraph) -> Result<usize, GraphError> {
    if !is_threshold_ordered(g) {
        return Err(GraphError::NotThresholdOrdered);
    }
    let mut t = 1;
    while t < g.n() && (0..t).all(|i| g.has_edge(i, t)) {
        t += 1;
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_graph, threshold_graph};
    use crate::mpoly::Polynomial;

    fn unweighted(n: usize, edges: &[(usize, usize)]) -> WeightedGraph {
        WeightedGraph::from_edge_list(n, edges.iter().map(|&(i, j)| (i, j, Polynomial::one()))).unwrap()
    }

    #[test]
    fn spec_parsing() {
        let spec: ThresholdSpec = "IDiDd".parse().unwrap();
        assert_eq!(spec.n(), 6);
        assert_eq!(spec.to_string(), "ididd");
        assert!(spec.is_connected());
        assert!(!"di".parse::<ThresholdSpec>().unwrap().is_connected());
        assert!("dx".parse::<ThresholdSpec>().is_err());
        assert!(ThresholdSpec::default().is_connected());
    }

    #[test]
    fn connected_spec_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| ThresholdSpec::all_connected(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 8, 16]);
        assert!(ThresholdSpec::all_connected(5)
            .iter()
            .all(|s| s.is_connected() && s.n() == 5));
    }

    #[test]
    fn multipartite_specs() {
        assert!(MultipartiteSpec::new(vec![3]).is_err());
        assert!(MultipartiteSpec::new(vec![2, 0]).is_err());
        let spec: MultipartiteSpec = "2,1,3".parse().unwrap();
        assert_eq!(spec.total(), 6);
        assert_eq!(spec.part_of_vertex(), vec![0, 0, 1, 2, 2, 2]);
        // compositions of n with at least two parts: 2^(n-1) - 1
        assert_eq!(MultipartiteSpec::all_with_total(4).len(), 7);
        assert!(MultipartiteSpec::all_with_total(1).is_empty());
    }

    #[test]
    fn four_cycle_has_no_threshold_ordering() {
        let c4 = [(0, 1), (1, 2), (2, 3), (0, 3)];
        // every relabelling of C4 is rejected
        let perms = itertools::Itertools::permutations(0..4usize, 4);
        for p in perms {
            let edges: Vec<(usize, usize)> = c4.iter().map(|&(a, b)| (p[a], p[b])).collect();
            assert!(!is_threshold_ordered(&unweighted(4, &edges)), "{p:?}");
        }
    }

    #[test]
    fn special_vertex_examples() {
        let figure: ThresholdSpec = "ididd".parse().unwrap();
        assert_eq!(special_vertex(&threshold_graph(&figure)).unwrap(), 4);
        for n in 1..=6 {
            assert_eq!(special_vertex(&complete_graph(n).unwrap()).unwrap(), n);
        }
        // star centred at v1
        let star = unweighted(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(special_vertex(&star).unwrap(), 2);
        assert_eq!(special_vertex(&threshold_graph(&"iid".parse().unwrap())).unwrap(), 2);
        let path = unweighted(3, &[(0, 1), (1, 2)]);
        assert_eq!(special_vertex(&path), Err(GraphError::NotThresholdOrdered));
    }
}
