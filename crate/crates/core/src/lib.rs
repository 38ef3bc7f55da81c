//! Distance-matrix tools for the `q`-analogue matrix `Q_q = (q^{d(x,y)})` of a
//! connected graph: positive semidefiniteness scans, the quadratic embedding
//! constant, partial-cube recognition and certificates.

#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod error;
pub mod families;
pub mod graph;
pub mod partial_cube;
pub mod qmatrix;
pub mod spectral;

pub use analysis::{verify_equivalences, AnalysisConfig, AnalysisReport, Verdicts};
pub use error::{Error, Result};
pub use graph::{
    bfs_distances, is_bipartite, is_distance_regular, parse_graph, DistanceMatrix, Graph,
};
pub use partial_cube::{djokovic_embedding, find_quintuple, CubeVerdict, Quintuple};
pub use qmatrix::{estimate_pi, qec, PiReport, QecReport};
pub use spectral::SymMatrix;
