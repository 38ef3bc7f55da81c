use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order for exhaustive enumeration.
pub const MAX_ENUMERATION_ORDER: usize = 7;

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

fn connected(n: usize, adj: &[u32]) -> bool {
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0;
        for v in 0..n {
            if frontier >> v & 1 == 1 {
                next |= adj[v];
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen.count_ones() as usize == n
}

/// Isomorphism-invariant code: the largest adjacency bit string over all
/// relabelings that list vertices by nonincreasing degree.
fn canonical(n: usize, adj: &[u32]) -> u64 {
    let pairs = pair_index(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
    let degree: Vec<u32> = order.iter().map(|&v| adj[v].count_ones()).collect();

    let mut best = 0u64;
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];

    #[allow(clippy::too_many_arguments)]
    fn recurse(
        pos: usize,
        n: usize,
        adj: &[u32],
        degree: &[u32],
        pairs: &[(usize, usize)],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        best: &mut u64,
    ) {
        if pos == n {
            let mut code = 0u64;
            for &(i, j) in pairs {
                code = code << 1 | u64::from(adj[perm[i]] >> perm[j] & 1);
            }
            *best = (*best).max(code);
            return;
        }
        for v in 0..n {
            if !used[v] && adj[v].count_ones() == degree[pos] {
                used[v] = true;
                perm[pos] = v;
                recurse(pos + 1, n, adj, degree, pairs, perm, used, best);
                used[v] = false;
            }
        }
    }
    recurse(0, n, adj, &degree, &pairs, &mut perm, &mut used, &mut best);
    best
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// Canonical isomorphism code of a graph with at most 11 vertices.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.vertex_count();
    if n > 11 {
        return Err(Error::out_of_range("canonical code order", n));
    }
    Ok(canonical(n, &adjacency_masks(g)))
}

fn decode(n: usize, code: u64) -> Graph {
    let pairs = pair_index(n);
    let total = pairs.len();
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| code >> (total - 1 - k) & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    let labels = (0..n).map(|i| i.to_string()).collect();
    Graph::from_indices(labels, &edges).expect("decoded graph is simple")
}

/// All connected graphs on `n` vertices up to isomorphism (bipartite ones
/// only if requested), ordered by canonical code.
pub fn connected_graphs(n: usize, bipartite_only: bool) -> Result<Vec<Graph>> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::out_of_range("enumeration order", n));
    }
    let mut codes = BTreeSet::new();
    let mut adj = vec![0u32; n];
    let mut consider = |edges: &mut dyn Iterator<Item = (usize, usize)>| {
        adj.iter_mut().for_each(|m| *m = 0);
        for (a, b) in edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        if connected(n, &adj) {
            codes.insert(canonical(n, &adj));
        }
    };

    if bipartite_only {
        if n == 1 {
            consider(&mut std::iter::empty());
        }
        for a in 1..=n / 2 {
            let b = n - a;
            for mask in 0u64..1 << (a * b) {
                consider(
                    &mut (0..a * b)
                        .filter(|k| mask >> k & 1 == 1)
                        .map(|k| (k / b, a + k % b)),
                );
            }
        }
    } else {
        let pairs = pair_index(n);
        for mask in 0u64..1 << pairs.len() {
            consider(
                &mut pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &p)| p),
            );
        }
    }
    Ok(codes.into_iter().map(|code| decode(n, code)).collect())
}

/// Erdős–Rényi `G(n, p)` sample, redrawn until connected.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(1..=4096).contains(&n) {
        return Err(Error::out_of_range("random graph order", n));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::out_of_range("edge probability", p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = pair_index(n);
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    for _ in 0..10_000 {
        let edges: Vec<_> = pairs
            .iter()
            .copied()
            .filter(|_| rng.random_bool(p))
            .collect();
        let g = Graph::from_indices(labels.clone(), &edges)?;
        if crate::graph::bfs_distances(&g).is_ok() {
            return Ok(g);
        }
    }
    Err(Error::InvalidArgument(format!(
        "no connected G({n}, {p}) sample in 10000 draws"
    )))
}
