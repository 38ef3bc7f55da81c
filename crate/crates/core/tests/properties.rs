mod common;

use proptest::prelude::*;
use qcube_core::analysis::{verify_equivalences, AnalysisConfig, AnalysisReport};
use qcube_core::families::{self, coxeter_cayley};
use qcube_core::graph::{bfs_distances, is_bipartite, is_distance_regular, DistanceMatrix};
use qcube_core::partial_cube::{
    djokovic_embedding, find_quintuple, half_space, quintuple_witness_value,
};
use qcube_core::qmatrix::{build_q, distance_form, estimate_pi, qec, schoenberg_cross_check};
use qcube_core::spectral::{eigenvalues, is_psd, psd_threshold, SymMatrix, DEFAULT_TOL};
use qcube_core::Graph;

const TOL: f64 = DEFAULT_TOL;

fn sym_from(n: usize, entries: &[f64]) -> SymMatrix {
    let mut k = 0;
    let mut m = SymMatrix::zeros(n);
    for i in 0..n {
        for j in 0..=i {
            m.set(i, j, entries[k]);
            k += 1;
        }
    }
    m
}

fn random_symmetric() -> impl Strategy<Value = SymMatrix> {
    (1usize..=12).prop_flat_map(|n| {
        prop::collection::vec(-5.0f64..5.0, n * (n + 1) / 2).prop_map(move |e| sym_from(n, &e))
    })
}

// ---- spectral ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn eigenvalue_sum_matches_trace(m in random_symmetric()) {
        let s = eigenvalues(&m, TOL).unwrap();
        let sum: f64 = s.eigenvalues.iter().sum();
        let bound = m.n() as f64 * TOL * m.inf_norm().max(1.0);
        prop_assert!((sum - m.trace()).abs() <= bound, "{} vs {}", sum, m.trace());
        prop_assert!(s.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn signed_permutation_preserves_spectrum(
        m in random_symmetric(),
        seed in any::<u64>(),
        signs in prop::collection::vec(any::<bool>(), 12),
    ) {
        let n = m.n();
        let perm = common::shuffled(n, seed);
        let sign = |i: usize| if signs[i] { -1.0 } else { 1.0 };
        let conj = SymMatrix::from_fn(n, |i, j| {
            sign(i) * sign(j) * m.get(perm[i], perm[j])
        });
        let a = eigenvalues(&m, TOL).unwrap().eigenvalues;
        let b = eigenvalues(&conj, TOL).unwrap().eigenvalues;
        let bound = 10.0 * TOL * m.inf_norm().max(1.0);
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() <= bound);
        }
    }
}

/// Random orthogonal matrix as a product of Householder reflections.
fn orthogonal(n: usize, vectors: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut q: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| f64::from(u8::from(i == j))).collect())
        .collect();
    for v in vectors {
        let v = &v[..n];
        let norm2: f64 = v.iter().map(|x| x * x).sum();
        if norm2 < 1e-6 {
            continue;
        }
        for row in q.iter_mut() {
            let dot: f64 = row.iter().zip(v).map(|(a, b)| a * b).sum();
            for (r, vi) in row.iter_mut().zip(v) {
                *r -= 2.0 * dot / norm2 * vi;
            }
        }
    }
    q
}

/// Independent PSD oracle: Cholesky with full diagonal pivoting.
fn cholesky_psd(m: &SymMatrix, tol: f64) -> bool {
    let n = m.n();
    let mut a = m.to_rows();
    let eps = tol * m.inf_norm().max(1.0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let (pos, &p) = active
            .iter()
            .enumerate()
            .max_by(|x, y| a[*x.1][*x.1].total_cmp(&a[*y.1][*y.1]))
            .unwrap();
        let pivot = a[p][p];
        if pivot < -eps {
            return false;
        }
        if pivot <= eps {
            // Remaining block must vanish.
            return active
                .iter()
                .all(|&i| active.iter().all(|&j| a[i][j].abs() <= eps.sqrt()));
        }
        active.swap_remove(pos);
        for &i in &active {
            for &j in &active {
                a[i][j] -= a[i][p] * a[p][j] / pivot;
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn is_psd_matches_cholesky_oracle(
        n in 1usize..=12,
        spectrum in prop::collection::vec(0.01f64..3.0, 12),
        negative in any::<bool>(),
        reflections in prop::collection::vec(prop::collection::vec(-1.0f64..1.0, 12), 1..6),
    ) {
        // Known spectrum: λ_min is either ≥ 0.01 or ≤ −0.01, far outside
        // the tolerance band.
        let mut lambda = spectrum[..n].to_vec();
        if negative {
            lambda[0] = -lambda[0];
        }
        let q = orthogonal(n, &reflections);
        let m = SymMatrix::from_fn(n, |i, j| (0..n).map(|k| q[i][k] * lambda[k] * q[j][k]).sum());
        let threshold = psd_threshold(&m, TOL);
        let lmin = lambda.iter().copied().fold(f64::INFINITY, f64::min);
        prop_assume!(lmin.abs() > 10.0 * threshold);
        let oracle = cholesky_psd(&m, TOL);
        prop_assert_eq!(oracle, !negative);
        prop_assert_eq!(is_psd(&m, TOL).unwrap(), oracle);
    }
}

// ---- graph_core ----

fn random_graph() -> impl Strategy<Value = Graph> {
    (2usize..=10, 0.15f64..0.9, any::<u64>())
        .prop_map(|(n, p, seed)| families::random_connected(n, p, seed).unwrap())
}

/// Bipartite iff the bipartite double cover is disconnected.
fn double_cover_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; 2 * n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(s) = stack.pop() {
        let (v, side) = (s % n, s / n);
        for &w in g.neighbors(v) {
            let t = w + n * (1 - side);
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    !seen[n]
}

fn check_metric(g: &Graph, d: &DistanceMatrix) -> Result<(), TestCaseError> {
    let n = g.vertex_count();
    for x in 0..n {
        prop_assert_eq!(d.get(x, x), 0);
        for y in 0..n {
            prop_assert_eq!(d.get(x, y), d.get(y, x));
            prop_assert_eq!(d.get(x, y) == 1, g.is_adjacent(x, y));
            for z in 0..n {
                prop_assert!(d.get(x, z) <= d.get(x, y) + d.get(y, z));
            }
        }
    }
    Ok(())
}

fn check_bipartition(g: &Graph) -> Result<(), TestCaseError> {
    let b = is_bipartite(g);
    prop_assert_eq!(b.valid, double_cover_bipartite(g));
    if b.valid {
        prop_assert_eq!(b.coloring[0], 0);
        for &(u, v) in g.edges() {
            prop_assert_ne!(b.coloring[u], b.coloring[v]);
        }
    } else {
        let cycle = b.odd_cycle.as_ref().expect("odd cycle certificate");
        prop_assert_eq!(cycle.len() % 2, 1);
        for k in 0..cycle.len() {
            prop_assert!(g.is_adjacent(cycle[k], cycle[(k + 1) % cycle.len()]));
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn random_graph_metric_and_bipartition(g in random_graph()) {
        let d = bfs_distances(&g).unwrap();
        check_metric(&g, &d)?;
        check_bipartition(&g)?;
    }

    #[test]
    fn distance_regularity_is_relabeling_invariant(g in random_graph(), seed in any::<u64>()) {
        let h = g.permuted(&common::shuffled(g.vertex_count(), seed)).unwrap();
        let a = is_distance_regular(&bfs_distances(&g).unwrap()).welldefined;
        let b = is_distance_regular(&bfs_distances(&h).unwrap()).welldefined;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn bipartite_half_spaces_partition(g in random_graph()) {
        let d = bfs_distances(&g).unwrap();
        prop_assume!(is_bipartite(&g).valid);
        let n = g.vertex_count();
        for &(x, y) in g.edges() {
            let a = half_space(&g, &d, x, y).unwrap().mask(n);
            let b = half_space(&g, &d, y, x).unwrap().mask(n);
            prop_assert!((0..n).all(|z| a[z] != b[z]));
        }
    }

    #[test]
    fn full_interval_implies_nonpositive_qec(g in random_graph()) {
        let d = bfs_distances(&g).unwrap();
        let pi = estimate_pi(&d, 1.0 / 64.0, TOL).unwrap();
        let q = qec(&d, TOL).unwrap();
        if pi.full_interval {
            prop_assert!(q.value <= TOL);
        }
        if let Some(f) = &q.witness {
            prop_assert!(f.iter().sum::<f64>().abs() <= 1e-9);
            prop_assert!((f.iter().map(|x| x * x).sum::<f64>().sqrt() - 1.0).abs() <= 1e-9);
            prop_assert!((distance_form(&d, f) - q.value).abs() <= 1e-6);
        }
    }
}

#[test]
fn family_graphs_satisfy_graph_invariants() {
    for (name, g) in common::family_graphs() {
        let d = bfs_distances(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
        if g.vertex_count() <= 64 {
            check_metric(&g, &d).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        check_bipartition(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    for n in 3..=8 {
        assert!(!is_bipartite(&families::complete(n).unwrap()).valid);
    }
}

// ---- qmatrix ----

#[test]
fn corpus_q_matrix_bounds() {
    for (name, g) in common::corpus() {
        let d = bfs_distances(&g).unwrap();
        let n = g.vertex_count() as f64;
        for k in -16..=16 {
            let q = f64::from(k) / 16.0;
            let m = build_q(&d, q);
            let s = eigenvalues(&m, TOL).unwrap();
            assert!(s.min() <= 1.0 + TOL, "{name} q={q}");
            let sum: f64 = s.eigenvalues.iter().sum();
            assert!((sum - n).abs() <= n * TOL * m.inf_norm(), "{name} trace");
        }
        assert!(is_psd(&build_q(&d, 0.0), TOL).unwrap(), "{name} q=0");
        assert!(is_psd(&build_q(&d, 1.0), TOL).unwrap(), "{name} q=1");
        for (x, y) in [(0, 0), (0, g.vertex_count() - 1)] {
            assert_eq!(build_q(&d, 0.0).get(x, y), f64::from(u8::from(x == y)));
            assert_eq!(build_q(&d, 1.0).get(x, y), 1.0);
        }
    }
}

// ---- partial_cube ----

#[test]
fn quintuple_witness_soundness() {
    let mut found = 0;
    for (name, g) in common::corpus() {
        let d = bfs_distances(&g).unwrap();
        if let Some(q) = find_quintuple(&g, &d) {
            found += 1;
            let value = quintuple_witness_value(&d, &q).unwrap();
            assert!(value > 0, "{name}");
            assert_eq!(value, 8 * (i64::from(q.i) + 1), "{name}");
            assert!(qec(&d, TOL).unwrap().value > 0.0, "{name}");
            assert!(
                !estimate_pi(&d, 1.0 / 128.0, TOL).unwrap().full_interval,
                "{name}"
            );
        }
    }
    assert!(found > 0);
}

#[test]
fn embedding_minimality() {
    for n in (4..=16).step_by(2) {
        let g = families::cycle(n).unwrap();
        let d = bfs_distances(&g).unwrap();
        let emb = djokovic_embedding(&g, &d).unwrap().embedding.unwrap();
        assert_eq!(emb.classes, n / 2);
        assert_eq!(emb.classes as u32, d.diameter());
    }
    for n in 1..=6 {
        let g = families::hypercube(n).unwrap();
        let d = bfs_distances(&g).unwrap();
        assert_eq!(
            djokovic_embedding(&g, &d)
                .unwrap()
                .embedding
                .unwrap()
                .classes,
            n
        );
    }
}

// ---- families ----

#[test]
fn coxeter_inversion_sets_measure_length() {
    for spec in common::coxeter_specs() {
        let (g, roots) = coxeter_cayley(&spec).unwrap();
        let d = bfs_distances(&g).unwrap();
        for (x, theta) in roots.theta.iter().enumerate() {
            assert_eq!(theta.len() as u32, d.get(0, x), "{} vertex {x}", spec.kind);
        }
        assert_eq!(Some(g.vertex_count() as u128), spec.order());
        assert!(djokovic_embedding(&g, &d).unwrap().is_partial_cube);
    }
}

#[test]
fn complete_graph_left_endpoint() {
    for n in 3..=7 {
        let d = bfs_distances(&families::complete(n).unwrap()).unwrap();
        let pi = estimate_pi(&d, 1.0 / 512.0, TOL).unwrap();
        assert_eq!(pi.intervals.len(), 1);
        assert!((pi.intervals[0].lo + 1.0 / (n as f64 - 1.0)).abs() < 1e-3);
        assert_eq!(pi.intervals[0].hi, 1.0);
    }
}

// ---- cli report ----

#[test]
fn corpus_reports_round_trip_through_json() {
    let config = AnalysisConfig {
        grid_step: 1.0 / 64.0,
        ..AnalysisConfig::default()
    };
    for (name, g) in common::corpus() {
        let report = verify_equivalences(&g, &config).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        let back: AnalysisReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report, "{name}");
    }
}

#[test]
fn schoenberg_sides_agree_on_families() {
    for (name, g) in common::family_graphs() {
        let d = bfs_distances(&g).unwrap();
        let check = schoenberg_cross_check(&d, 1.0 / 64.0, TOL).unwrap();
        assert!(check.consistent, "{name}: {check:?}");
    }
}
