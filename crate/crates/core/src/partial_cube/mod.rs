//! Half-spaces, convexity, forbidden quintuples and hypercube embeddings.
//!
//! For an edge `xy`, the half-space `G(x,y)` is the set of vertices strictly
//! closer to `x` than to `y`. A connected graph embeds isometrically into a
//! hypercube exactly when it is bipartite and every half-space is convex,
//! equivalently when it is bipartite and has no quintuple (see
//! [`find_quintuple`]).

mod embedding;
mod quintuple;
mod union_find;

pub use embedding::{
    djokovic_embedding, verify_embedding, Counterexample, CubeVerdict, EmbeddingMap,
    LabeledEmbedding,
};
pub use quintuple::{find_quintuple, quintuple_witness_value, Quintuple};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfSpace {
    pub x: usize,
    pub y: usize,
    /// Sorted vertex indices `z` with `d(z,x) = d(z,y) − 1`.
    pub members: Vec<usize>,
}

impl HalfSpace {
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &z in &self.members {
            mask[z] = true;
        }
        mask
    }
}

#[inline]
pub(crate) fn in_half_space(d: &DistanceMatrix, z: usize, x: usize, y: usize) -> bool {
    d.get(z, x) + 1 == d.get(z, y)
}

pub fn half_space(g: &Graph, d: &DistanceMatrix, x: usize, y: usize) -> Result<HalfSpace> {
    let n = g.vertex_count();
    for v in [x, y] {
        if v >= n {
            return Err(Error::UnknownVertex(v.to_string()));
        }
    }
    if !g.is_adjacent(x, y) {
        return Err(Error::NotAdjacent {
            x: g.label(x).to_string(),
            y: g.label(y).to_string(),
        });
    }
    Ok(HalfSpace {
        x,
        y,
        members: (0..n).filter(|&z| in_half_space(d, z, x, y)).collect(),
    })
}

/// A vertex `z` outside the set lying on a geodesic between members `u`, `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexityViolation {
    pub z: usize,
    pub u: usize,
    pub v: usize,
}

/// Interval test: the set is convex iff no outside vertex `z` satisfies
/// `d(u,z) + d(z,v) = d(u,v)` for members `u`, `v`. Returns the
/// lexicographically first `(z, u, v)` violation.
pub fn is_convex(d: &DistanceMatrix, set: &[usize]) -> Result<Option<ConvexityViolation>> {
    let n = d.n();
    if set.is_empty() {
        return Err(Error::InvalidArgument("convexity of an empty set".into()));
    }
    let mut inside = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        inside[v] = true;
    }
    let members: Vec<usize> = (0..n).filter(|&v| inside[v]).collect();
    Ok(first_violation(d, &inside, &members))
}

fn first_violation(
    d: &DistanceMatrix,
    inside: &[bool],
    members: &[usize],
) -> Option<ConvexityViolation> {
    for z in (0..d.n()).filter(|&z| !inside[z]) {
        let row_z = d.row(z);
        for (a, &u) in members.iter().enumerate() {
            let row_u = d.row(u);
            let du = row_z[u];
            for &v in &members[a + 1..] {
                if du + row_z[v] == row_u[v] {
                    return Some(ConvexityViolation { z, u, v });
                }
            }
        }
    }
    None
}

/// First directed edge `(x, y)` whose half-space `G(x, y)` is not convex,
/// scanning edges in order and each edge in both directions.
pub fn first_nonconvex_half_space(
    g: &Graph,
    d: &DistanceMatrix,
) -> Result<Option<(HalfSpace, ConvexityViolation)>> {
    for &(a, b) in g.edges() {
        for (x, y) in [(a, b), (b, a)] {
            let hs = half_space(g, d, x, y)?;
            if let Some(violation) = is_convex(d, &hs.members)? {
                return Ok(Some((hs, violation)));
            }
        }
    }
    Ok(None)
}
