use super::{CreationStep, GraphError, MultipartiteSpec, Partition, ThresholdSpec, WeightedGraph};
use crate::mpoly::Polynomial;

fn var_index(i: usize) -> u32 {
    u32::try_from(i + 1).expect("vertex count fits in u32")
}

/// `K_n` with `ω(i, j) = x_i x_j`.
pub fn complete_graph(n: usize) -> Result<WeightedGraph, GraphError> {
    let edges =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j, Polynomial::x(var_index(i)) * Polynomial::x(var_index(j)))));
    WeightedGraph::from_edge_list(n, edges)
}

/// `K_{n1,...,nk}` with parts laid out consecutively and `ω(i, j) = x_i x_j`
/// across parts.
pub fn complete_multipartite(spec: &MultipartiteSpec) -> WeightedGraph {
    let part = spec.part_of_vertex();
    let n = part.len();
    let edges = (0..n).flat_map(|i| {
        let part = &part;
        (i + 1..n)
            .filter(move |&j| part[i] != part[j])
            .map(move |j| (i, j, Polynomial::x(var_index(i)) * Polynomial::x(var_index(j))))
    });
    WeightedGraph::from_edge_list(n, edges.collect::<Vec<_>>()).expect("spec has vertices")
}

/// Ferrers graph of `λ` on `r1..rm, c1..cn` (in that vertex order), with
/// `r_i ~ c_j` iff `j <= λ_i`, weighted `x_i y_j`.
pub fn ferrers_graph(lambda: &Partition) -> WeightedGraph {
    let m = lambda.len();
    let n = lambda.largest();
    let labels = (1..=m)
        .map(|i| format!("r{i}"))
        .chain((1..=n).map(|j| format!("c{j}")))
        .collect();
    let edges = lambda.parts().iter().enumerate().flat_map(|(i, &len)| {
        (0..len).map(move |j| (i, m + j, Polynomial::x(var_index(i)) * Polynomial::y(var_index(j))))
    });
    WeightedGraph::with_labels(labels, edges.collect::<Vec<_>>()).expect("valid Ferrers graph")
}

/// Vertex position of each created vertex (index 0 is the initial vertex,
/// index `s` the vertex added at step `s`).
///
/// Dominating vertices come first, most recently created first, then the
/// initial vertex, then isolated vertices in creation order.
pub(crate) fn threshold_positions(spec: &ThresholdSpec) -> Vec<usize> {
    let steps = spec.steps();
    let dominating: Vec<usize> = (1..=steps.len())
        .filter(|&s| steps[s - 1] == CreationStep::Dominating)
        .collect();
    let mut pos = vec![0; spec.n()];
    for (p, &s) in dominating.iter().rev().enumerate() {
        pos[s] = p;
    }
    pos[0] = dominating.len();
    let mut next = dominating.len() + 1;
    for s in 1..=steps.len() {
        if steps[s - 1] == CreationStep::Isolated {
            pos[s] = next;
            next += 1;
        }
    }
    pos
}

/// Threshold graph in its threshold ordering, weighted `ω(i, j) =
/// x_min(i,j) y_max(i,j)`.
pub fn threshold_graph(spec: &ThresholdSpec) -> WeightedGraph {
    let pos = threshold_positions(spec);
    let steps = spec.steps();
    let mut edges = Vec::new();
    for later in 1..spec.n() {
        if steps[later - 1] != CreationStep::Dominating {
            continue;
        }
        for earlier in 0..later {
            let (a, b) = (pos[earlier].min(pos[later]), pos[earlier].max(pos[later]));
            edges.push((a, b, Polynomial::x(var_index(a)) * Polynomial::y(var_index(b))));
        }
    }
    WeightedGraph::from_edge_list(spec.n(), edges).expect("valid threshold graph")
}
