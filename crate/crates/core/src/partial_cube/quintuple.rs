use serde::{Deserialize, Serialize};

use super::in_half_space;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// Vertices `(x1, ..., x5)` with `x1 ∼ x2`, `x3 ∼ x4`, `x3 ∈ G(x1,x2)`,
/// `x4 ∈ G(x2,x1)` and `x5 ∈ G(x1,x2) ∩ G(x4,x3)`.
///
/// `xi` is a zero-sum weight vector on the five vertices whose distance form
/// `Σ ξa ξb d(xa,xb)` equals `8(i+1) > 0`, so the distance of any graph
/// containing a quintuple is not a negative definite kernel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quintuple {
    pub vertices: [usize; 5],
    /// `d(x1, x3)`
    pub i: u32,
    /// `d(x1, x5)`
    pub j: u32,
    /// `d(x4, x5)`
    pub h: u32,
    pub xi: [i64; 5],
    /// `d(xa, xb)` for `a, b` in `0..5`.
    pub distances: [[u32; 5]; 5],
}

impl Quintuple {
    /// Checks the defining and derived distance relations and fills in
    /// `i`, `j`, `h`, `xi`.
    pub fn new(d: &DistanceMatrix, vertices: [usize; 5]) -> Result<Self> {
        let n = d.n();
        if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        let [x1, x2, x3, x4, x5] = vertices;
        let mut distances = [[0u32; 5]; 5];
        for a in 0..5 {
            for b in 0..5 {
                distances[a][b] = d.get(vertices[a], vertices[b]);
            }
        }
        let dd = |a: usize, b: usize| distances[a - 1][b - 1];
        let fail = |what: &str| {
            Err(Error::InvalidQuintuple(format!(
                "{what} fails for {vertices:?}"
            )))
        };

        if dd(1, 2) != 1 {
            return fail("x1 ∼ x2");
        }
        if dd(3, 4) != 1 {
            return fail("x3 ∼ x4");
        }
        if !in_half_space(d, x3, x1, x2) {
            return fail("x3 ∈ G(x1,x2)");
        }
        if !in_half_space(d, x4, x2, x1) {
            return fail("x4 ∈ G(x2,x1)");
        }
        if !in_half_space(d, x5, x1, x2) {
            return fail("x5 ∈ G(x1,x2)");
        }
        if !in_half_space(d, x5, x4, x3) {
            return fail("x5 ∈ G(x4,x3)");
        }

        let (i, j, h) = (dd(1, 3), dd(1, 5), dd(4, 5));
        let derived = [
            (dd(2, 3), i + 1, "d(x2,x3) = i+1"),
            (dd(2, 5), j + 1, "d(x2,x5) = j+1"),
            (dd(3, 5), h + 1, "d(x3,x5) = h+1"),
            (dd(1, 4), i + 1, "d(x1,x4) = i+1"),
            (dd(2, 4), i, "d(x2,x4) = i"),
        ];
        for (got, want, what) in derived {
            if got != want {
                return fail(what);
            }
        }

        let outer = -(i64::from(j) + i64::from(h) + 2);
        let inner = i64::from(j) + i64::from(h);
        Ok(Quintuple {
            vertices,
            i,
            j,
            h,
            xi: [outer, inner, inner, outer, 4],
            distances,
        })
    }

    /// `8(i+1)`, the value the witness form must take.
    pub fn expected_value(&self) -> i64 {
        8 * (i64::from(self.i) + 1)
    }

    pub fn labels<'g>(&self, g: &'g Graph) -> [&'g str; 5] {
        self.vertices.map(|v| g.label(v))
    }
}

/// `Σ_{a,b} ξa ξb d(xa, xb)` in exact integer arithmetic, after re-checking
/// the quintuple against `d`.
pub fn quintuple_witness_value(d: &DistanceMatrix, quint: &Quintuple) -> Result<i64> {
    let checked = Quintuple::new(d, quint.vertices)?;
    if checked.xi != quint.xi {
        return Err(Error::InvalidQuintuple(
            "witness vector does not match distances".into(),
        ));
    }
    let xi = checked.xi;
    let mut total = 0i64;
    for a in 0..5 {
        for b in 0..5 {
            total += xi[a] * xi[b] * i64::from(checked.distances[a][b]);
        }
    }
    Ok(total)
}

/// Exhaustive search in lexicographic order of `(x1, x2, x3, x4, x5)`.
///
/// Only tuples satisfying every [`Quintuple`] invariant are returned; in a
/// bipartite graph the derived distance relations follow from the defining
/// ones, so this is exactly the forbidden configuration.
pub fn find_quintuple(g: &Graph, d: &DistanceMatrix) -> Option<Quintuple> {
    let n = g.vertex_count();
    let mut near_x1 = vec![false; n];
    let mut near_x2 = vec![false; n];
    for x1 in 0..n {
        for &x2 in g.neighbors(x1) {
            for z in 0..n {
                near_x1[z] = in_half_space(d, z, x1, x2);
                near_x2[z] = in_half_space(d, z, x2, x1);
            }
            for x3 in (0..n).filter(|&v| near_x1[v]) {
                for &x4 in g.neighbors(x3) {
                    if !near_x2[x4] {
                        continue;
                    }
                    for x5 in 0..n {
                        if near_x1[x5] && in_half_space(d, x5, x4, x3) {
                            if let Ok(q) = Quintuple::new(d, [x1, x2, x3, x4, x5]) {
                                return Some(q);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}
