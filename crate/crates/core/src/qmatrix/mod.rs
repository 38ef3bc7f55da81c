//! The Q-matrix `Q_q = (q^{d(x,y)})` and the set of `q` for which it is
//! positive semidefinite.

mod pi;
mod qec;

pub use pi::{
    estimate_pi, write_csv, PiInterval, PiReport, PiSample, BISECTION_DEPTH, DEFAULT_GRID_STEP,
};
pub use qec::{distance_form, qec, schoenberg_cross_check, QecReport, SchoenbergCheck};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_bipartite, DistanceMatrix, Graph};
use crate::spectral::{self, SymMatrix};

/// `q^{d(x,y)}` with `0^0 = 1`.
pub fn build_q(d: &DistanceMatrix, q: f64) -> SymMatrix {
    SymMatrix::from_fn(d.n(), |x, y| power(q, d.get(x, y)))
}

#[inline]
fn power(q: f64, k: u32) -> f64 {
    if k == 0 {
        1.0
    } else {
        q.powi(k as i32)
    }
}

fn check_unit_range(q: f64) -> Result<()> {
    if q.is_finite() && q.abs() <= 1.0 {
        Ok(())
    } else {
        Err(Error::out_of_range("q", q))
    }
}

/// Whether `Q_q` is PSD at relative tolerance `tol`.
pub fn pi_contains(d: &DistanceMatrix, q: f64, tol: f64) -> Result<bool> {
    check_unit_range(q)?;
    spectral::is_psd(&build_q(d, q), tol)
}

/// `Λ Q_q Λ` with `Λ = diag((-1)^{d(x0,x)})`, `x0` the first vertex.
///
/// For bipartite graphs this equals `build_q(d, -q)` entry for entry.
pub fn lambda_conjugate(g: &Graph, d: &DistanceMatrix, q: f64) -> Result<SymMatrix> {
    if !is_bipartite(g).valid {
        return Err(Error::NotBipartite);
    }
    let sign: Vec<f64> = d
        .row(0)
        .iter()
        .map(|&k| if k % 2 == 0 { 1.0 } else { -1.0 })
        .collect();
    let q_matrix = build_q(d, q);
    Ok(SymMatrix::from_fn(d.n(), |x, y| {
        sign[x] * sign[y] * q_matrix.get(x, y)
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymmetryCheck {
    pub holds: bool,
    /// `(q, λ_min(Q_q), λ_min(Q_{-q}))` per requested q.
    pub pairs: Vec<(f64, f64, f64)>,
    /// Largest gap between the sorted spectra of `Q_q` and `Q_{-q}`.
    pub max_spectrum_gap: f64,
    pub bound: f64,
}

/// Compares the spectra of `Q_q` and `Q_{-q}` on a bipartite graph.
pub fn spectrum_symmetry_check(
    g: &Graph,
    d: &DistanceMatrix,
    qs: &[f64],
    tol: f64,
) -> Result<SymmetryCheck> {
    if !is_bipartite(g).valid {
        return Err(Error::NotBipartite);
    }
    let bound = tol * d.n() as f64;
    let mut pairs = Vec::with_capacity(qs.len());
    let mut max_gap = 0.0f64;
    let mut holds = true;
    for &q in qs {
        check_unit_range(q)?;
        let plus = spectral::eigenvalues(&build_q(d, q), tol)?;
        let minus = spectral::eigenvalues(&build_q(d, -q), tol)?;
        let gap = plus
            .eigenvalues
            .iter()
            .zip(&minus.eigenvalues)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        max_gap = max_gap.max(gap);
        holds &= (plus.min() - minus.min()).abs() <= bound;
        pairs.push((q, plus.min(), minus.min()));
    }
    Ok(SymmetryCheck {
        holds,
        pairs,
        max_spectrum_gap: max_gap,
        bound,
    })
}
