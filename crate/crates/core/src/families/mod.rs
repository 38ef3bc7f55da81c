//! Deterministic generators for the graph families used throughout the
//! crate: hypercubes, doubled Odd graphs, cycles, paths, complete and
//! complete bipartite graphs, random trees, the Petersen graph, Cayley graphs
//! of finite Coxeter groups and exhaustive small-graph enumeration.

mod coxeter;
mod enumerate;

pub use coxeter::{
    coxeter_cayley, coxeter_theta_isometry_check, CoxeterSpec, CoxeterType, GroupElement, RootSet,
    DEFAULT_ORDER_CAP,
};
pub use enumerate::{canonical_code, connected_graphs, random_connected};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Upper bound on generated vertex counts for the simple families.
pub const MAX_VERTICES: usize = 1 << 16;

fn check(what: &'static str, value: usize, min: usize, max: usize) -> Result<()> {
    if (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(Error::out_of_range(what, value))
    }
}

/// `{1,3}`-style label of a bitmask over `{1, ..., n}`.
pub(crate) fn subset_label(mask: u64) -> String {
    let items: Vec<String> = (0..64)
        .filter(|k| mask >> k & 1 == 1)
        .map(|k| (k + 1).to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Hypercube on the subsets of `{1..n}`; vertex `k` is the subset with
/// bitmask `k`.
pub fn hypercube(n: usize) -> Result<Graph> {
    check("hypercube dimension", n, 1, 16)?;
    let size = 1usize << n;
    let labels = (0..size as u64).map(subset_label).collect();
    let mut edges = Vec::with_capacity(n * size / 2);
    for v in 0..size {
        for k in 0..n {
            if v >> k & 1 == 0 {
                edges.push((v, v | 1 << k));
            }
        }
    }
    Graph::from_indices(labels, &edges)
}

fn subsets_of_size(universe: usize, size: u32) -> Vec<u64> {
    (0..1u64 << universe)
        .filter(|m| m.count_ones() == size)
        .collect()
}

/// Doubled Odd graph: the `m`- and `(m+1)`-subsets of a `(2m+1)`-set,
/// adjacent under inclusion.
pub fn doubled_odd(m: usize) -> Result<Graph> {
    check("doubled Odd parameter", m, 1, 4)?;
    let universe = 2 * m + 1;
    let small = subsets_of_size(universe, m as u32);
    let large = subsets_of_size(universe, m as u32 + 1);
    let labels = small
        .iter()
        .chain(&large)
        .map(|&s| subset_label(s))
        .collect();
    let mut edges = Vec::new();
    for (a, &s) in small.iter().enumerate() {
        for (b, &t) in large.iter().enumerate() {
            if s & t == s {
                edges.push((a, small.len() + b));
            }
        }
    }
    Graph::from_indices(labels, &edges)
}

/// Petersen graph as the Kneser graph on 2-subsets of `{1..5}`.
pub fn petersen() -> Graph {
    let pairs = subsets_of_size(5, 2);
    let labels = pairs.iter().map(|&s| subset_label(s)).collect();
    let mut edges = Vec::new();
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            if pairs[a] & pairs[b] == 0 {
                edges.push((a, b));
            }
        }
    }
    Graph::from_indices(labels, &edges).expect("valid construction")
}

pub fn cycle(n: usize) -> Result<Graph> {
    check("cycle length", n, 3, MAX_VERTICES)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_indices(numbered(n), &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    check("path length", n, 1, MAX_VERTICES)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_indices(numbered(n), &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    check("complete graph size", n, 1, 4096)?;
    let edges: Vec<_> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    Graph::from_indices(numbered(n), &edges)
}

/// `K_{a,b}` with vertices `a1..aA` then `b1..bB`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    check("complete bipartite part", a, 1, 4096)?;
    check("complete bipartite part", b, 1, 4096)?;
    let labels = (1..=a)
        .map(|i| format!("a{i}"))
        .chain((1..=b).map(|j| format!("b{j}")))
        .collect();
    let edges: Vec<_> = (0..a)
        .flat_map(|i| (0..b).map(move |j| (i, a + j)))
        .collect();
    Graph::from_indices(labels, &edges)
}

/// Random recursive tree: vertex `k` attaches to a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    check("tree size", n, 1, MAX_VERTICES)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (1..n).map(|k| (rng.random_range(0..k), k)).collect();
    Graph::from_indices(numbered(n), &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bfs_distances, is_bipartite};

    /// A connected 2-regular graph on k vertices is the k-cycle.
    pub(crate) fn is_cycle_graph(g: &Graph, k: usize) -> bool {
        g.vertex_count() == k && (0..k).all(|v| g.degree(v) == 2) && bfs_distances(g).is_ok()
    }

    #[test]
    fn hypercube_sizes() {
        let q1 = hypercube(1).unwrap();
        assert_eq!((q1.vertex_count(), q1.edge_count()), (2, 1));
        assert!(is_cycle_graph(&hypercube(2).unwrap(), 4));
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        assert_eq!(bfs_distances(&q3).unwrap().diameter(), 3);
        assert_eq!(q3.label(5), "{1,3}");
        assert!(hypercube(0).is_err() && hypercube(17).is_err());
    }

    #[test]
    fn doubled_odd_examples() {
        let o2 = doubled_odd(1).unwrap();
        assert!(is_cycle_graph(&o2, 6));
        let o3 = doubled_odd(2).unwrap();
        assert_eq!(o3.vertex_count(), 20);
        assert!((0..20).all(|v| o3.degree(v) == 3));
        let b = is_bipartite(&o3);
        assert!(b.valid);
        assert_eq!((b.part(0).len(), b.part(1).len()), (10, 10));
        assert!(doubled_odd(5).is_err());
    }

    #[test]
    fn small_families() {
        assert!(!is_bipartite(&cycle(5).unwrap()).valid);
        assert!(cycle(2).is_err());
        assert!(path(1).unwrap().is_singleton());
        assert_eq!(complete(5).unwrap().edge_count(), 10);
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.labels(), ["a1", "a2", "b1", "b2", "b3"]);
        assert_eq!(k23.edge_count(), 6);
        let p = petersen();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        assert_eq!(bfs_distances(&p).unwrap().diameter(), 2);
    }

    #[test]
    fn random_tree_is_deterministic() {
        let a = random_tree(10, 1).unwrap();
        let b = random_tree(10, 1).unwrap();
        assert_eq!(a.edges(), b.edges());
        assert_eq!(a.edge_count(), 9);
        assert!(bfs_distances(&a).is_ok());
        assert_ne!(
            random_tree(30, 1).unwrap().edges(),
            random_tree(30, 2).unwrap().edges()
        );
    }
}
