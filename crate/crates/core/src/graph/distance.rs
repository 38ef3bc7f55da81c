use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// All-pairs shortest-path distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// Wraps a raw row-major matrix. Checks shape, zero diagonal and
    /// symmetry only; metric properties are the caller's business.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut d = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::InvalidArgument(
                    "distance matrix is not square".into(),
                ));
            }
            d.extend_from_slice(row);
        }
        let m = DistanceMatrix { n, d };
        for x in 0..n {
            if m.get(x, x) != 0 {
                return Err(Error::InvalidArgument("nonzero diagonal".into()));
            }
            for y in 0..x {
                if m.get(x, y) != m.get(y, x) {
                    return Err(Error::InvalidArgument("asymmetric distances".into()));
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.d[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[u32] {
        &self.d[x * self.n..(x + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// Breadth-first search from every vertex.
pub fn bfs_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.vertex_count();
    let mut d = vec![u32::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);

    for source in 0..n {
        let row = &mut d[source * n..(source + 1) * n];
        row[source] = 0;
        queue.clear();
        queue.push_back(source);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            let next = row[v] + 1;
            for &w in g.neighbors(v) {
                if row[w] == u32::MAX {
                    row[w] = next;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached < n {
            return Err(disconnected(g));
        }
    }
    Ok(DistanceMatrix { n, d })
}

fn disconnected(g: &Graph) -> Error {
    let n = g.vertex_count();
    let mut component = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let id = representatives.len();
        representatives.push(g.label(start).to_string());
        component[start] = id;
        stack.push(start);
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if component[w] == usize::MAX {
                    component[w] = id;
                    stack.push(w);
                }
            }
        }
    }
    Error::Disconnected { representatives }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    #[test]
    fn k2() {
        let d = bfs_distances(&parse_graph("a b").unwrap()).unwrap();
        assert_eq!(
            d,
            DistanceMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap()
        );
    }

    #[test]
    fn four_cycle_antipodes() {
        let d = bfs_distances(&parse_graph("0 1\n1 2\n2 3\n3 0").unwrap()).unwrap();
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.get(1, 3), 2);
        for (x, y) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            assert_eq!(d.get(x, y), 1);
        }
        assert_eq!(d.diameter(), 2);
    }

    #[test]
    fn disconnected_lists_one_vertex_per_component() {
        let err = bfs_distances(&parse_graph("a b\nc d\ne d").unwrap()).unwrap_err();
        assert_eq!(
            err,
            Error::Disconnected {
                representatives: vec!["a".into(), "c".into()]
            }
        );
    }

    #[test]
    fn singleton() {
        let d = bfs_distances(&parse_graph("v").unwrap()).unwrap();
        assert_eq!(d.n(), 1);
        assert_eq!(d.diameter(), 0);
    }
}
