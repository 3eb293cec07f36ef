//! Benchmark fixtures: one representative graph per family, sized so every
//! route finishes in milliseconds.

use spantree_core::enumerate::Family;
use spantree_core::graphs::{MultipartiteSpec, Partition};
use spantree_core::WeightedGraph;

pub struct Fixture {
    pub name: &'static str,
    pub family: Family,
    pub graph: WeightedGraph,
}

fn fixture(name: &'static str, family: Family) -> Fixture {
    let graph = family.graph().expect("fixture families are valid");
    Fixture { name, family, graph }
}

pub fn fixtures() -> Vec<Fixture> {
    vec![
        fixture("complete-6", Family::Complete(6)),
        fixture(
            "multipartite-2-2-2",
            Family::Multipartite(MultipartiteSpec::new(vec![2, 2, 2]).expect("valid spec")),
        ),
        fixture(
            "ferrers-4-4-3-2-1",
            Family::Ferrers(Partition::new(vec![4, 4, 3, 2, 1]).expect("valid partition")),
        ),
        fixture(
            "threshold-ididd",
            Family::Threshold("ididd".parse().expect("valid sequence")),
        ),
    ]
}
