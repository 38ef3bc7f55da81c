#![allow(dead_code)]

use qcube_core::families::{self, CoxeterSpec};
use qcube_core::Graph;

pub fn coxeter_specs() -> Vec<CoxeterSpec> {
    let mut specs = vec![
        CoxeterSpec::a(2),
        CoxeterSpec::a(3),
        CoxeterSpec::b(2),
        CoxeterSpec::b(3),
    ];
    specs.extend((3..=6).map(CoxeterSpec::i2));
    specs
}

/// Generated families: hypercubes, doubled Odd graphs, cycles, trees,
/// complete bipartite and complete graphs, Petersen and Coxeter graphs.
pub fn family_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((format!("hypercube {n}"), families::hypercube(n).unwrap()));
    }
    for m in 1..=2 {
        out.push((
            format!("doubled-odd {m}"),
            families::doubled_odd(m).unwrap(),
        ));
    }
    for n in 3..=12 {
        out.push((format!("cycle {n}"), families::cycle(n).unwrap()));
    }
    for (k, n) in [2, 3, 5, 8, 10, 12, 14, 16, 20, 24].into_iter().enumerate() {
        let seed = k as u64;
        out.push((
            format!("random-tree {n} seed {seed}"),
            families::random_tree(n, seed).unwrap(),
        ));
    }
    for a in 1..=4 {
        for b in a..=4 {
            out.push((
                format!("complete-bipartite {a} {b}"),
                families::complete_bipartite(a, b).unwrap(),
            ));
        }
    }
    for n in 3..=6 {
        out.push((format!("complete {n}"), families::complete(n).unwrap()));
    }
    out.push(("petersen".into(), families::petersen()));
    for spec in coxeter_specs() {
        out.push((
            format!("coxeter {}", spec.kind),
            families::coxeter_cayley(&spec).unwrap().0,
        ));
    }
    out
}

/// Every connected graph on 2..=6 vertices, every connected bipartite graph
/// on 7 vertices, seeded random connected graphs on 7..=10 vertices and the
/// generated families.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=6 {
        for (k, g) in families::connected_graphs(n, false)
            .unwrap()
            .into_iter()
            .enumerate()
        {
            out.push((format!("connected {n} #{k}"), g));
        }
    }
    for (k, g) in families::connected_graphs(7, true)
        .unwrap()
        .into_iter()
        .enumerate()
    {
        out.push((format!("bipartite 7 #{k}"), g));
    }
    for seed in 0..50u64 {
        let p = [0.3, 0.45, 0.6][seed as usize % 3];
        out.push((
            format!("random-connected 7 {p} seed {seed}"),
            families::random_connected(7, p, seed).unwrap(),
        ));
    }
    for seed in 0..20u64 {
        let n = 8 + seed as usize % 3;
        out.push((
            format!("random-connected {n} 0.35 seed {seed}"),
            families::random_connected(n, 0.35, 1000 + seed).unwrap(),
        ));
    }
    out.extend(family_graphs());
    out
}

/// Deterministic pseudo-random permutation of `0..n`.
pub fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    order
}
