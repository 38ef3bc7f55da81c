use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Graph;

/// Two-coloring of a graph, or an odd cycle proving none exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    /// BFS parity from the first vertex. Meaningless when `valid` is false.
    pub coloring: Vec<u8>,
    pub valid: bool,
    /// Vertex sequence `c0 c1 ... c(k-1)` of odd length `k` with consecutive
    /// entries (cyclically) adjacent.
    pub odd_cycle: Option<Vec<usize>>,
}

impl Bipartition {
    pub fn part(&self, color: u8) -> Vec<usize> {
        (0..self.coloring.len())
            .filter(|&v| self.coloring[v] == color)
            .collect()
    }
}

pub fn is_bipartite(g: &Graph) -> Bipartition {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();

    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    let cycle = odd_cycle(v, w, &parent, &depth);
                    return Bipartition {
                        coloring: color.iter().map(|&c| c.min(1)).collect(),
                        valid: false,
                        odd_cycle: Some(cycle),
                    };
                }
            }
        }
    }
    Bipartition {
        coloring: color,
        valid: true,
        odd_cycle: None,
    }
}

/// Closes the BFS-tree paths from `u` and `v` (same parity, adjacent) at
/// their lowest common ancestor.
fn odd_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}
