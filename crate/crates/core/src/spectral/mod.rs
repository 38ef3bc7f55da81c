//! Dense real symmetric eigenvalue problems and PSD testing.
//!
//! Small matrices go through cyclic Jacobi; larger ones through Householder
//! tridiagonalization followed by implicit QL. Both return eigenvectors so
//! every result carries a measured residual `max |A v - λ v|`.

mod jacobi;
mod tridiag;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-9;

/// Largest dimension handled by Jacobi under [`Method::Auto`].
pub const JACOBI_MAX_DIM: usize = 16;

/// Real symmetric matrix stored as its packed lower triangle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymMatrix {
    n: usize,
    packed: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            packed: vec![0.0; n * (n + 1) / 2],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    /// `f` is evaluated on the lower triangle only (`j <= i`).
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut packed = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in 0..=i {
                packed.push(f(i, j));
            }
        }
        SymMatrix { n, packed }
    }

    /// Builds from full rows, rejecting anything not exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidArgument("matrix is not square".into()));
            }
            for j in 0..i {
                if row[j] != rows[j][i] {
                    return Err(Error::InvalidArgument(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Self::from_fn(n, |i, j| rows[i][j]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn offset(i: usize, j: usize) -> usize {
        let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
        hi * (hi + 1) / 2 + lo
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.packed[Self::offset(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.packed[Self::offset(i, j)] = value;
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// `vᵀ A v`.
    pub fn quadratic_form(&self, v: &[f64]) -> f64 {
        self.mul_vec(v).iter().zip(v).map(|(a, b)| a * b).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Method {
    /// Jacobi up to [`JACOBI_MAX_DIM`], tridiagonal QL above.
    #[default]
    Auto,
    Jacobi,
    TridiagonalQl,
}

/// Eigenpairs sorted by ascending eigenvalue.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[k]` is the unit eigenvector for `eigenvalues[k]`.
    #[serde(skip)]
    pub eigenvectors: Vec<Vec<f64>>,
    /// Measured `max_k ‖A v_k − λ_k v_k‖_∞`.
    pub residual: f64,
    /// Contract bound `tol · ‖A‖_∞` the residual was checked against.
    pub residual_bound: f64,
}

impl Spectrum {
    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> f64 {
        *self.eigenvalues.last().expect("nonempty spectrum")
    }
}

pub fn eigenvalues(m: &SymMatrix, tol: f64) -> Result<Spectrum> {
    eigen_with(m, tol, Method::Auto)
}

pub fn eigen_with(m: &SymMatrix, tol: f64, method: Method) -> Result<Spectrum> {
    let n = m.n();
    if n == 0 {
        return Err(Error::Empty);
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let use_jacobi = match method {
        Method::Auto => n <= JACOBI_MAX_DIM,
        Method::Jacobi => true,
        Method::TridiagonalQl => false,
    };
    let (mut values, mut vectors, iterations) = if use_jacobi {
        jacobi::decompose(m)
    } else {
        tridiag::decompose(m)
    };

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    values = order.iter().map(|&k| values[k]).collect();
    vectors = order
        .iter()
        .map(|&k| std::mem::take(&mut vectors[k]))
        .collect();

    let residual = residual(m, &values, &vectors);
    let bound = tol * m.inf_norm();
    if !(residual <= bound) {
        return Err(Error::NoConvergence {
            iterations,
            residual,
        });
    }
    Ok(Spectrum {
        eigenvalues: values,
        eigenvectors: vectors,
        residual,
        residual_bound: bound,
    })
}

fn residual(m: &SymMatrix, values: &[f64], vectors: &[Vec<f64>]) -> f64 {
    let mut worst = 0.0f64;
    for (lambda, v) in values.iter().zip(vectors) {
        if v.iter().any(|x| !x.is_finite()) {
            return f64::INFINITY;
        }
        let av = m.mul_vec(v);
        for (a, x) in av.iter().zip(v) {
            worst = worst.max((a - lambda * x).abs());
        }
    }
    worst
}

pub fn min_eigenvalue(m: &SymMatrix, tol: f64) -> Result<f64> {
    Ok(eigenvalues(m, tol)?.min())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PsdCheck {
    pub psd: bool,
    pub min_eigenvalue: f64,
    /// Effective threshold `tol · max(1, ‖A‖_∞)`.
    pub threshold: f64,
}

pub fn psd_threshold(m: &SymMatrix, tol: f64) -> f64 {
    tol * m.inf_norm().max(1.0)
}

pub fn check_psd(m: &SymMatrix, tol: f64) -> Result<PsdCheck> {
    let min = min_eigenvalue(m, tol)?;
    let threshold = psd_threshold(m, tol);
    Ok(PsdCheck {
        psd: min >= -threshold,
        min_eigenvalue: min,
        threshold,
    })
}

pub fn is_psd(m: &SymMatrix, tol: f64) -> Result<bool> {
    Ok(check_psd(m, tol)?.psd)
}
