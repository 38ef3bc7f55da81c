use std::io::{self, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::build_q;
use crate::error::{Error, Result};
use crate::graph::DistanceMatrix;
use crate::spectral::{self, PsdCheck};

pub const DEFAULT_GRID_STEP: f64 = 1.0 / 512.0;

/// Bisection steps per boundary cell; endpoints are resolved to
/// `grid_step / 2^BISECTION_DEPTH`.
pub const BISECTION_DEPTH: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PiSample {
    pub q: f64,
    pub lambda_min: f64,
    pub psd: bool,
}

/// A maximal run of PSD parameters. Each endpoint is the last PSD value found
/// by bisection against its non-PSD neighbor, or ±1 if the run reaches the
/// end of the range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PiInterval {
    pub lo: f64,
    pub hi: f64,
    pub lambda_min_lo: f64,
    pub lambda_min_hi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PiReport {
    pub grid_step: f64,
    pub tol: f64,
    pub intervals: Vec<PiInterval>,
    /// Every grid point passed.
    pub full_interval: bool,
    /// Single-vertex graph: `Q_q = [1]` for every real q.
    pub all_reals: bool,
    pub samples: Vec<PiSample>,
}

impl PiReport {
    /// Complement of `intervals` inside `[-1, 1]`, as open gaps between the
    /// reported PSD endpoints.
    pub fn excluded(&self) -> Vec<(f64, f64)> {
        let mut gaps = Vec::new();
        let mut cursor = -1.0;
        for iv in &self.intervals {
            if iv.lo > cursor {
                gaps.push((cursor, iv.lo));
            }
            cursor = iv.hi;
        }
        if cursor < 1.0 {
            gaps.push((cursor, 1.0));
        }
        gaps
    }

    pub fn contains(&self, q: f64) -> bool {
        self.intervals.iter().any(|iv| iv.lo <= q && q <= iv.hi)
    }
}

fn grid(step: f64) -> Vec<f64> {
    let cells = (2.0 / step - 1e-9).ceil() as usize;
    let mut points: Vec<f64> = (0..cells).map(|k| -1.0 + k as f64 * step).collect();
    points.push(1.0);
    if !points.contains(&0.0) {
        points.push(0.0);
        points.sort_by(f64::total_cmp);
    }
    points
}

fn probe(d: &DistanceMatrix, q: f64, tol: f64) -> Result<PsdCheck> {
    spectral::check_psd(&build_q(d, q), tol)
}

/// Scans `q` over a uniform grid on `[-1, 1]` and refines every PSD/non-PSD
/// boundary by bisection. Grid points are evaluated in parallel.
pub fn estimate_pi(d: &DistanceMatrix, grid_step: f64, tol: f64) -> Result<PiReport> {
    if !(grid_step > 0.0 && grid_step <= 0.1) {
        return Err(Error::out_of_range("grid_step", grid_step));
    }
    if !(tol > 0.0) {
        return Err(Error::out_of_range("tol", tol));
    }
    let points = grid(grid_step);

    if d.n() == 1 {
        let samples: Vec<PiSample> = points
            .iter()
            .map(|&q| PiSample {
                q,
                lambda_min: 1.0,
                psd: true,
            })
            .collect();
        return Ok(PiReport {
            grid_step,
            tol,
            intervals: vec![PiInterval {
                lo: -1.0,
                hi: 1.0,
                lambda_min_lo: 1.0,
                lambda_min_hi: 1.0,
            }],
            full_interval: true,
            all_reals: true,
            samples,
        });
    }

    let samples: Vec<PiSample> = points
        .par_iter()
        .map(|&q| {
            probe(d, q, tol).map(|c| PiSample {
                q,
                lambda_min: c.min_eigenvalue,
                psd: c.psd,
            })
        })
        .collect::<Result<_>>()?;

    let mut intervals = Vec::new();
    let mut k = 0;
    while k < samples.len() {
        if !samples[k].psd {
            k += 1;
            continue;
        }
        let start = k;
        while k + 1 < samples.len() && samples[k + 1].psd {
            k += 1;
        }
        let end = k;
        k += 1;

        let (lo, lambda_min_lo) = if start == 0 {
            (samples[0].q, samples[0].lambda_min)
        } else {
            refine(d, tol, samples[start], samples[start - 1])?
        };
        let (hi, lambda_min_hi) = if end + 1 == samples.len() {
            (samples[end].q, samples[end].lambda_min)
        } else {
            refine(d, tol, samples[end], samples[end + 1])?
        };
        intervals.push(PiInterval {
            lo,
            hi,
            lambda_min_lo,
            lambda_min_hi,
        });
    }

    let full_interval = samples.iter().all(|s| s.psd);
    Ok(PiReport {
        grid_step,
        tol,
        intervals,
        full_interval,
        all_reals: false,
        samples,
    })
}

/// Bisects between a passing and a failing parameter; returns the passing
/// end of the final bracket.
fn refine(d: &DistanceMatrix, tol: f64, pass: PiSample, fail: PiSample) -> Result<(f64, f64)> {
    let (mut good, mut good_min) = (pass.q, pass.lambda_min);
    let mut bad = fail.q;
    for _ in 0..BISECTION_DEPTH {
        let mid = 0.5 * (good + bad);
        let check = probe(d, mid, tol)?;
        if check.psd {
            good = mid;
            good_min = check.min_eigenvalue;
        } else {
            bad = mid;
        }
    }
    Ok((good, good_min))
}

/// Writes the scan as `q,lambda_min` rows with 17 significant digits.
pub fn write_csv<W: Write>(report: &PiReport, mut out: W) -> io::Result<()> {
    writeln!(out, "q,lambda_min")?;
    for s in &report.samples {
        writeln!(out, "{:.16e},{:.16e}", s.q, s.lambda_min)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bfs_distances, parse_graph};
    use crate::spectral::DEFAULT_TOL;

    fn scan(text: &str, step: f64) -> PiReport {
        let d = bfs_distances(&parse_graph(text).unwrap()).unwrap();
        estimate_pi(&d, step, DEFAULT_TOL).unwrap()
    }

    #[test]
    fn grid_includes_zero_and_ends() {
        let g = grid(DEFAULT_GRID_STEP);
        assert_eq!(g.len(), 1025);
        assert_eq!(g[0], -1.0);
        assert_eq!(*g.last().unwrap(), 1.0);
        assert!(g.contains(&0.0) && g.contains(&-0.5));

        let g = grid(0.03);
        assert!(g.contains(&0.0));
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn triangle_left_endpoint() {
        let r = scan("a b\nb c\nc a", DEFAULT_GRID_STEP);
        assert!(!r.full_interval);
        assert_eq!(r.intervals.len(), 1);
        let iv = r.intervals[0];
        assert!((iv.lo + 0.5).abs() < 1e-3, "{iv:?}");
        assert_eq!(iv.hi, 1.0);
        assert_eq!(r.excluded(), vec![(-1.0, iv.lo)]);
    }

    #[test]
    fn refinement_resolves_off_grid_endpoint() {
        // K4: endpoint -1/3 is not a grid point.
        let r = scan("a b\na c\na d\nb c\nb d\nc d", 0.1);
        let lo = r.intervals[0].lo;
        assert!(lo >= -1.0 / 3.0 - 1e-12);
        assert!(lo + 1.0 / 3.0 <= 0.1 / 1024.0 + 1e-12, "{lo}");
    }

    #[test]
    fn four_cycle_is_full() {
        let r = scan("0 1\n1 2\n2 3\n3 0", DEFAULT_GRID_STEP);
        assert!(r.full_interval);
        assert_eq!(r.intervals.len(), 1);
        assert!(r.excluded().is_empty());
    }

    #[test]
    fn singleton_flags_all_reals() {
        let r = scan("v", 0.1);
        assert!(r.all_reals && r.full_interval);
    }

    #[test]
    fn rejects_bad_grid() {
        let d = bfs_distances(&parse_graph("a b").unwrap()).unwrap();
        assert!(estimate_pi(&d, 0.0, DEFAULT_TOL).is_err());
        assert!(estimate_pi(&d, 0.2, DEFAULT_TOL).is_err());
    }

    #[test]
    fn csv_format() {
        let r = scan("a b", 0.1);
        let mut buf = Vec::new();
        write_csv(&r, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("q,lambda_min"));
        let first = lines.next().unwrap();
        assert_eq!(first, "-1.0000000000000000e0,0.0000000000000000e0");
        assert_eq!(text.lines().count(), r.samples.len() + 1);
    }
}
