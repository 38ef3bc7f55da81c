//! Plain-text rendering of reports. All numbers use fixed formats so output
//! is byte-stable for fixed input and flags.

use std::fmt::Write;

use qcube_core::analysis::AnalysisReport;
use qcube_core::qmatrix::QecReport;
use qcube_core::Graph;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn names(labels: &[String], idx: &[usize]) -> String {
    idx.iter()
        .map(|&v| labels[v].as_str())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn verdicts(r: &AnalysisReport) -> String {
    let v = &r.verdicts;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "(i)   pi(G) = [-1, 1]:                 {}",
        yes_no(v.pi_full_interval)
    );
    let _ = writeln!(
        s,
        "(ii)  hypercube embedding:             {}",
        yes_no(v.partial_cube)
    );
    let _ = writeln!(
        s,
        "(iii) bipartite, no quintuple:         {}",
        yes_no(v.bipartite_without_quintuple)
    );
    let _ = writeln!(
        s,
        "(iv)  bipartite, convex half-spaces:   {}",
        yes_no(v.bipartite_with_convex_half_spaces)
    );
    let _ = writeln!(s, "consistent: {}", yes_no(r.equivalence_consistent));
    s
}

pub fn report(r: &AnalysisReport) -> String {
    let labels = &r.graph.vertices;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "graph: n = {}, m = {}, diameter = {}",
        r.graph.n, r.graph.m, r.graph.diameter
    );
    let _ = writeln!(s, "bipartite: {}", yes_no(r.bipartite));
    if let Some(cycle) = &r.odd_cycle {
        let _ = writeln!(s, "  odd cycle: {}", names(labels, cycle));
    }
    let _ = writeln!(s, "distance-regular: {}", yes_no(r.distance_regular));

    let _ = writeln!(
        s,
        "pi(G) estimate (grid step {:e}, tol {:e}):",
        r.pi.grid_step, r.pi.tol
    );
    for iv in &r.pi.intervals {
        let _ = writeln!(
            s,
            "  [{:+.9}, {:+.9}]  lambda_min at ends {:+.3e}, {:+.3e}",
            iv.lo, iv.hi, iv.lambda_min_lo, iv.lambda_min_hi
        );
    }
    for (lo, hi) in r.pi.excluded() {
        let _ = writeln!(s, "  excluded ({lo:+.9}, {hi:+.9})");
    }
    let _ = writeln!(s, "qec: {:+.12}", r.qec.value);

    match (&r.cube.embedding, &r.cube.counterexample) {
        (Some(emb), _) => {
            let _ = writeln!(s, "hypercube embedding into {} coordinates", emb.classes);
        }
        (None, Some(c)) => {
            let _ = writeln!(
                s,
                "no hypercube embedding: {}",
                serde_json::to_string(c).unwrap_or_default()
            );
        }
        (None, None) => {}
    }
    if let (Some(q), Some(value)) = (&r.quintuple, r.quintuple_witness_value) {
        let _ = writeln!(
            s,
            "quintuple: {}  (i, j, h) = ({}, {}, {})  witness value {}",
            names(labels, &q.vertices),
            q.i,
            q.j,
            q.h,
            value
        );
    }
    if let Some(v) = &r.nonconvex_half_space {
        let _ = writeln!(
            s,
            "non-convex half-space G({}, {}): {} lies between {} and {}",
            labels[v.x], labels[v.y], labels[v.z], labels[v.u], labels[v.v]
        );
    }
    s.push_str(&verdicts(r));
    if let Some(times) = &r.runtime_ms {
        for (stage, ms) in times {
            let _ = writeln!(s, "  {stage}: {ms:.3} ms");
        }
    }
    s
}

pub fn qec(g: &Graph, r: &QecReport) -> String {
    let mut s = format!("qec: {:+.12}\n", r.value);
    if let Some(f) = &r.witness {
        s.push_str("witness:\n");
        for (label, x) in g.labels().iter().zip(f) {
            let _ = writeln!(s, "  {label}\t{x:+.12}");
        }
    }
    s
}
