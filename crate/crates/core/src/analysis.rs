//! Runs the four characterizations of `π(G) = [-1, 1]` side by side:
//!
//! 1. every grid point of `[-1, 1]` gives a PSD `Q_q`;
//! 2. the Θ-class construction yields an isometric hypercube embedding;
//! 3. the graph is bipartite and has no quintuple;
//! 4. the graph is bipartite and every half-space is convex.
//!
//! They must agree on every connected graph; a disagreement means a bug or a
//! tolerance failure and is reported with all certificates.

use std::time::Instant;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, is_bipartite, is_distance_regular, DistanceMatrix, Graph};
use crate::partial_cube::{
    djokovic_embedding, find_quintuple, first_nonconvex_half_space, quintuple_witness_value,
    CubeVerdict, Quintuple,
};
use crate::qmatrix::{estimate_pi, qec, PiReport, QecReport, DEFAULT_GRID_STEP};
use crate::spectral::DEFAULT_TOL;

pub const DEFAULT_MAX_N: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisConfig {
    pub grid_step: f64,
    pub tol: f64,
    pub max_n: usize,
    /// Record wall-clock time per stage (makes the report nondeterministic).
    pub timings: bool,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            grid_step: DEFAULT_GRID_STEP,
            tol: DEFAULT_TOL,
            max_n: DEFAULT_MAX_N,
            timings: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub diameter: u32,
    /// Vertex labels; every index in the report refers to this list.
    pub vertices: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub pi_full_interval: bool,
    pub partial_cube: bool,
    pub bipartite_without_quintuple: bool,
    pub bipartite_with_convex_half_spaces: bool,
}

impl Verdicts {
    pub fn as_array(&self) -> [bool; 4] {
        [
            self.pi_full_interval,
            self.partial_cube,
            self.bipartite_without_quintuple,
            self.bipartite_with_convex_half_spaces,
        ]
    }

    pub fn consistent(&self) -> bool {
        let v = self.as_array();
        v.iter().all(|&b| b == v[0])
    }
}

/// `z ∉ G(x,y)` on a geodesic between members `u`, `v`, with the distances
/// proving it: `d(u,z) + d(z,v) = d(u,v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfSpaceViolation {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub u: usize,
    pub v: usize,
    pub d_uz: u32,
    pub d_zv: u32,
    pub d_uv: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub graph: GraphSummary,
    pub bipartite: bool,
    pub odd_cycle: Option<Vec<usize>>,
    pub distance_regular: bool,
    pub pi: PiReport,
    pub qec: QecReport,
    pub cube: CubeVerdict,
    pub quintuple: Option<Quintuple>,
    pub quintuple_witness_value: Option<i64>,
    pub nonconvex_half_space: Option<HalfSpaceViolation>,
    pub verdicts: Verdicts,
    pub equivalence_consistent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<IndexMap<String, f64>>,
}

struct Stopwatch {
    enabled: bool,
    stages: IndexMap<String, f64>,
    last: Instant,
}

impl Stopwatch {
    fn new(enabled: bool) -> Self {
        Stopwatch {
            enabled,
            stages: IndexMap::new(),
            last: Instant::now(),
        }
    }

    fn lap(&mut self, stage: &str) {
        let now = Instant::now();
        if self.enabled {
            let ms = (now - self.last).as_secs_f64() * 1e3;
            self.stages.insert(stage.to_string(), ms);
        }
        self.last = now;
    }

    fn finish(self) -> Option<IndexMap<String, f64>> {
        self.enabled.then_some(self.stages)
    }
}

fn nonconvex(g: &Graph, d: &DistanceMatrix) -> Result<Option<HalfSpaceViolation>> {
    Ok(
        first_nonconvex_half_space(g, d)?.map(|(hs, v)| HalfSpaceViolation {
            x: hs.x,
            y: hs.y,
            z: v.z,
            u: v.u,
            v: v.v,
            d_uz: d.get(v.u, v.z),
            d_zv: d.get(v.z, v.v),
            d_uv: d.get(v.u, v.v),
        }),
    )
}

/// Computes the four verdicts independently and records whether they agree.
pub fn verify_equivalences(g: &Graph, config: &AnalysisConfig) -> Result<AnalysisReport> {
    let n = g.vertex_count();
    if n < 2 || n > config.max_n {
        return Err(Error::SizeOutOfBounds {
            n,
            min: 2,
            max: config.max_n,
        });
    }
    let mut clock = Stopwatch::new(config.timings);

    let d = bfs_distances(g)?;
    clock.lap("distances");
    let bipartition = is_bipartite(g);
    clock.lap("bipartite");
    let regular = is_distance_regular(&d);
    clock.lap("distance_regular");
    let pi = estimate_pi(&d, config.grid_step, config.tol)?;
    clock.lap("pi");
    let qec = qec(&d, config.tol)?;
    clock.lap("qec");
    let cube = djokovic_embedding(g, &d)?;
    clock.lap("embedding");
    let quintuple = find_quintuple(g, &d);
    let quintuple_witness_value = quintuple
        .as_ref()
        .map(|q| quintuple_witness_value(&d, q))
        .transpose()?;
    clock.lap("quintuple");
    let nonconvex_half_space = nonconvex(g, &d)?;
    clock.lap("convexity");

    let verdicts = Verdicts {
        pi_full_interval: pi.full_interval,
        partial_cube: cube.is_partial_cube,
        bipartite_without_quintuple: bipartition.valid && quintuple.is_none(),
        bipartite_with_convex_half_spaces: bipartition.valid && nonconvex_half_space.is_none(),
    };

    Ok(AnalysisReport {
        graph: GraphSummary {
            n,
            m: g.edge_count(),
            diameter: d.diameter(),
            vertices: g.labels().to_vec(),
        },
        bipartite: bipartition.valid,
        odd_cycle: bipartition.odd_cycle,
        distance_regular: regular.welldefined,
        pi,
        qec,
        cube,
        quintuple,
        quintuple_witness_value,
        nonconvex_half_space,
        equivalence_consistent: verdicts.consistent(),
        verdicts,
        runtime_ms: clock.finish(),
    })
}
