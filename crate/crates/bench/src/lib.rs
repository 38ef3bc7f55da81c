//! Fixture graphs shared by the criterion benchmarks.

use qcube_core::families::{self, CoxeterSpec};
use qcube_core::graph::Graph;

pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("hypercube-4", families::hypercube(4).unwrap()),
        ("hypercube-6", families::hypercube(6).unwrap()),
        ("doubled-odd-2", families::doubled_odd(2).unwrap()),
        ("cycle-12", families::cycle(12).unwrap()),
        (
            "coxeter-b3",
            families::coxeter_cayley(&CoxeterSpec::b(3)).unwrap().0,
        ),
        (
            "complete-bipartite-4-4",
            families::complete_bipartite(4, 4).unwrap(),
        ),
    ]
}
