use serde::{Deserialize, Serialize};

use super::build_q;
use crate::error::{Error, Result};
use crate::graph::DistanceMatrix;
use crate::spectral::{self, SymMatrix};

/// Quadratic embedding constant: `max fᵀDf` over unit `f` with `Σf = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QecReport {
    pub value: f64,
    /// Unit vector orthogonal to the all-ones vector attaining `value`.
    pub witness: Option<Vec<f64>>,
}

const WITNESS_TOL: f64 = 1e-9;

/// Largest eigenvalue of `PDP − c·J/n` with `P = I − J/n` and
/// `c = 1 + n·max(D)`, which moves the `span{1}` eigenvalue below everything
/// else.
pub fn qec(d: &DistanceMatrix, tol: f64) -> Result<QecReport> {
    let n = d.n();
    if n < 2 {
        return Err(Error::SizeOutOfBounds {
            n,
            min: 2,
            max: usize::MAX,
        });
    }
    let nf = n as f64;
    let row_mean: Vec<f64> = (0..n)
        .map(|x| d.row(x).iter().map(|&v| v as f64).sum::<f64>() / nf)
        .collect();
    let grand_mean = row_mean.iter().sum::<f64>() / nf;
    let shift = (1.0 + nf * d.diameter() as f64) / nf;

    let deflated = SymMatrix::from_fn(n, |x, y| {
        d.get(x, y) as f64 - row_mean[x] - row_mean[y] + grand_mean - shift
    });
    let spectrum = spectral::eigenvalues(&deflated, tol)?;
    let value = spectrum.max();

    let top = spectrum.eigenvectors.last().expect("n >= 2");
    let mean = top.iter().sum::<f64>() / nf;
    let mut f: Vec<f64> = top.iter().map(|v| v - mean).collect();
    let norm = f.iter().map(|v| v * v).sum::<f64>().sqrt();
    let witness = if norm > 0.5 {
        f.iter_mut().for_each(|v| *v /= norm);
        let sum: f64 = f.iter().sum();
        let unit = f.iter().map(|v| v * v).sum::<f64>().sqrt();
        (sum.abs() <= WITNESS_TOL && (unit - 1.0).abs() <= WITNESS_TOL).then_some(f)
    } else {
        None
    };
    Ok(QecReport { value, witness })
}

/// `Σ f(x) f(y) d(x,y)`.
pub fn distance_form(d: &DistanceMatrix, f: &[f64]) -> f64 {
    let n = d.n();
    let mut total = 0.0;
    for x in 0..n {
        let row = d.row(x);
        let inner: f64 = (0..n).map(|y| row[y] as f64 * f[y]).sum();
        total += f[x] * inner;
    }
    total
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchoenbergCheck {
    pub qec: f64,
    /// `qec ≤ tol`: the distance is a negative definite kernel.
    pub qec_nonpositive: bool,
    /// Every grid point of `[0, 1]` gives a PSD `Q_q`.
    pub unit_interval_psd: bool,
    /// First grid point in `[0, 1]` where `Q_q` fails, if any.
    pub first_failure: Option<f64>,
    pub consistent: bool,
}

/// Compares the two computable sides of the equivalence between
/// `[0,1] ⊂ π(G)` and negative definiteness of the distance.
pub fn schoenberg_cross_check(
    d: &DistanceMatrix,
    grid_step: f64,
    tol: f64,
) -> Result<SchoenbergCheck> {
    if !(grid_step > 0.0 && grid_step <= 0.1) {
        return Err(Error::out_of_range("grid_step", grid_step));
    }
    let qec = qec(d, tol)?.value;
    let qec_nonpositive = qec <= tol;

    let cells = (1.0 / grid_step - 1e-9).ceil() as usize;
    let mut first_failure = None;
    for q in (0..cells)
        .map(|k| k as f64 * grid_step)
        .chain(std::iter::once(1.0))
    {
        if !spectral::is_psd(&build_q(d, q), tol)? {
            first_failure = Some(q);
            break;
        }
    }
    let unit_interval_psd = first_failure.is_none();
    Ok(SchoenbergCheck {
        qec,
        qec_nonpositive,
        unit_interval_psd,
        first_failure,
        consistent: qec_nonpositive == unit_interval_psd,
    })
}
