use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::union_find::DisjointSet;
use super::{first_nonconvex_half_space, in_half_space, is_convex};
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, DistanceMatrix, Graph};

/// Vertex → finite set of Θ-class indices (a hypercube vertex).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingMap {
    pub classes: usize,
    pub base: usize,
    /// Sorted class indices per vertex.
    pub assign: Vec<Vec<usize>>,
}

/// External JSON form keyed by vertex label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledEmbedding {
    pub classes: usize,
    pub base: String,
    pub assign: IndexMap<String, Vec<usize>>,
}

impl EmbeddingMap {
    pub fn to_labeled(&self, g: &Graph) -> LabeledEmbedding {
        LabeledEmbedding {
            classes: self.classes,
            base: g.label(self.base).to_string(),
            assign: self
                .assign
                .iter()
                .enumerate()
                .map(|(v, set)| (g.label(v).to_string(), set.clone()))
                .collect(),
        }
    }

    pub fn from_labeled(g: &Graph, labeled: &LabeledEmbedding) -> Result<Self> {
        let n = g.vertex_count();
        let mut assign = vec![None; n];
        for (label, set) in &labeled.assign {
            let v = g.resolve(label)?;
            let mut set = set.clone();
            set.sort_unstable();
            set.dedup();
            if set.iter().any(|&c| c >= labeled.classes) {
                return Err(Error::InvalidArgument(format!(
                    "class index out of range for vertex '{label}'"
                )));
            }
            assign[v] = Some(set);
        }
        let assign = assign
            .into_iter()
            .enumerate()
            .map(|(v, s)| {
                s.ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "vertex '{}' missing from embedding",
                        g.label(v)
                    ))
                })
            })
            .collect::<Result<_>>()?;
        Ok(EmbeddingMap {
            classes: labeled.classes,
            base: g.resolve(&labeled.base)?,
            assign,
        })
    }
}

fn symmetric_difference_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                count += 1;
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                count += 1;
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    count + (a.len() - i) + (b.len() - j)
}

/// `|assign(x) △ assign(y)| = d(x, y)` for every pair.
pub fn verify_embedding(d: &DistanceMatrix, emb: &EmbeddingMap) -> bool {
    let n = d.n();
    if emb.assign.len() != n {
        return false;
    }
    let mut sorted = emb.assign.clone();
    for set in &mut sorted {
        set.sort_unstable();
        set.dedup();
    }
    (0..n).all(|x| {
        (x + 1..n).all(|y| symmetric_difference_len(&sorted[x], &sorted[y]) == d.get(x, y) as usize)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    OddCycle {
        cycle: Vec<usize>,
    },
    /// `G(x, y)` is not convex: `z ∉ G(x,y)` lies on a geodesic between
    /// members `u` and `v`.
    NonConvexHalfSpace {
        x: usize,
        y: usize,
        z: usize,
        u: usize,
        v: usize,
    },
    /// The Θ-class of edge `xy` differs from the cut between its
    /// half-spaces at edge `uv`, yet every half-space is convex. Cannot
    /// happen for a correct implementation.
    ThetaClassNotCut {
        x: usize,
        y: usize,
        u: usize,
        v: usize,
    },
    /// The class assignment misses `d(x, y)` for this pair. Cannot happen
    /// for a correct implementation.
    NotIsometric {
        x: usize,
        y: usize,
        distance: u32,
        embedded: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeVerdict {
    pub is_partial_cube: bool,
    pub embedding: Option<EmbeddingMap>,
    pub counterexample: Option<Counterexample>,
}

impl CubeVerdict {
    fn failure(counterexample: Counterexample) -> Self {
        CubeVerdict {
            is_partial_cube: false,
            embedding: None,
            counterexample: Some(counterexample),
        }
    }
}

/// Edges `xy`, `uv` are Θ-related iff `d(x,u) + d(y,v) ≠ d(x,v) + d(y,u)`.
fn theta_related(d: &DistanceMatrix, (x, y): (usize, usize), (u, v): (usize, usize)) -> bool {
    d.get(x, u) + d.get(y, v) != d.get(x, v) + d.get(y, u)
}

/// Θ-classes of the edge set (transitive closure), numbered by first edge.
/// Returns the class of each edge and the class count.
fn theta_classes(g: &Graph, d: &DistanceMatrix) -> (Vec<usize>, usize) {
    let edges = g.edges();
    let m = edges.len();
    let mut ds = DisjointSet::new(m);
    for a in 0..m {
        for b in a + 1..m {
            if theta_related(d, edges[a], edges[b]) {
                ds.union(a, b);
            }
        }
    }
    let mut id_of_root = vec![usize::MAX; m];
    let mut class = vec![0; m];
    let mut count = 0;
    for e in 0..m {
        let root = ds.find(e);
        if id_of_root[root] == usize::MAX {
            id_of_root[root] = count;
            count += 1;
        }
        class[e] = id_of_root[root];
    }
    (class, count)
}

/// Recognizes partial cubes through the Djoković–Winkler relation.
///
/// On success every Θ-class is the edge cut between the two half-spaces of
/// its first edge, both sides are convex, and the class sets separating each
/// vertex from the base (first vertex) give an isometric embedding. On
/// failure a certificate is returned. The quintuple search is not consulted,
/// so this verdict stays independent of it.
pub fn djokovic_embedding(g: &Graph, d: &DistanceMatrix) -> Result<CubeVerdict> {
    let n = g.vertex_count();
    let bipartition = is_bipartite(g);
    if !bipartition.valid {
        return Ok(CubeVerdict::failure(Counterexample::OddCycle {
            cycle: bipartition.odd_cycle.unwrap_or_default(),
        }));
    }

    let edges = g.edges();
    let (class_of, classes) = theta_classes(g, d);
    let mut representative = vec![usize::MAX; classes];
    for (e, &c) in class_of.iter().enumerate() {
        if representative[c] == usize::MAX {
            representative[c] = e;
        }
    }

    let base = 0;
    let mut assign = vec![Vec::new(); n];
    for c in 0..classes {
        let (x, y) = edges[representative[c]];
        let side_x: Vec<bool> = (0..n).map(|z| in_half_space(d, z, x, y)).collect();

        for (e, &(u, v)) in edges.iter().enumerate() {
            let crosses = side_x[u] != side_x[v];
            if crosses != (class_of[e] == c) {
                return Ok(CubeVerdict::failure(not_a_cut(g, d, (x, y), (u, v))?));
            }
        }
        for (a, b, inside) in [(x, y, true), (y, x, false)] {
            let members: Vec<usize> = (0..n).filter(|&z| side_x[z] == inside).collect();
            if let Some(violation) = is_convex(d, &members)? {
                return Ok(CubeVerdict::failure(Counterexample::NonConvexHalfSpace {
                    x: a,
                    y: b,
                    z: violation.z,
                    u: violation.u,
                    v: violation.v,
                }));
            }
        }
        let base_side = side_x[base];
        for (z, set) in assign.iter_mut().enumerate() {
            if side_x[z] != base_side {
                set.push(c);
            }
        }
    }

    for x in 0..n {
        for y in x + 1..n {
            let embedded = symmetric_difference_len(&assign[x], &assign[y]);
            if embedded != d.get(x, y) as usize {
                return Ok(CubeVerdict::failure(Counterexample::NotIsometric {
                    x,
                    y,
                    distance: d.get(x, y),
                    embedded,
                }));
            }
        }
    }
    Ok(CubeVerdict {
        is_partial_cube: true,
        embedding: Some(EmbeddingMap {
            classes,
            base,
            assign,
        }),
        counterexample: None,
    })
}

/// A class that is not a cut implies a non-convex half-space in a bipartite
/// graph; report that one when found.
fn not_a_cut(
    g: &Graph,
    d: &DistanceMatrix,
    (x, y): (usize, usize),
    (u, v): (usize, usize),
) -> Result<Counterexample> {
    Ok(match first_nonconvex_half_space(g, d)? {
        Some((hs, w)) => Counterexample::NonConvexHalfSpace {
            x: hs.x,
            y: hs.y,
            z: w.z,
            u: w.u,
            v: w.v,
        },
        None => Counterexample::ThetaClassNotCut { x, y, u, v },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bfs_distances, parse_graph};

    fn graph(text: &str) -> (Graph, DistanceMatrix) {
        let g = parse_graph(text).unwrap();
        let d = bfs_distances(&g).unwrap();
        (g, d)
    }

    const CUBE: &str = "000 001\n000 010\n000 100\n001 011\n001 101\n010 011\n010 110\n100 101\n100 110\n011 111\n101 111\n110 111";

    #[test]
    fn three_cube_recovers_coordinates() {
        let (g, d) = graph(CUBE);
        let verdict = djokovic_embedding(&g, &d).unwrap();
        assert!(verdict.is_partial_cube);
        let emb = verdict.embedding.unwrap();
        assert_eq!(emb.classes, 3);
        assert!(emb.assign[emb.base].is_empty());
        // Identity embedding oracle: bit k of the label ↔ some class.
        let mut class_for_bit = [usize::MAX; 3];
        for v in 0..8 {
            let bits: Vec<usize> = g
                .label(v)
                .chars()
                .enumerate()
                .filter(|(_, c)| *c == '1')
                .map(|(k, _)| k)
                .collect();
            assert_eq!(bits.len(), emb.assign[v].len());
            if bits.len() == 1 {
                class_for_bit[bits[0]] = emb.assign[v][0];
            }
        }
        for v in 0..8 {
            let mut mapped: Vec<usize> = g
                .label(v)
                .chars()
                .enumerate()
                .filter(|(_, c)| *c == '1')
                .map(|(k, _)| class_for_bit[k])
                .collect();
            mapped.sort_unstable();
            assert_eq!(mapped, emb.assign[v]);
        }
    }

    #[test]
    fn six_cycle_has_three_classes() {
        let (g, d) = graph("0 1\n1 2\n2 3\n3 4\n4 5\n5 0");
        let emb = djokovic_embedding(&g, &d).unwrap().embedding.unwrap();
        assert_eq!(emb.classes, 3);
        // brute force over all 15 pairs
        for x in 0..6 {
            for y in x + 1..6 {
                assert_eq!(
                    symmetric_difference_len(&emb.assign[x], &emb.assign[y]),
                    d.get(x, y) as usize
                );
            }
        }
    }

    #[test]
    fn k23_is_rejected() {
        let g = Graph::new(
            ["a", "b", "c", "d", "e"],
            [
                ("a", "c"),
                ("a", "d"),
                ("a", "e"),
                ("b", "c"),
                ("b", "d"),
                ("b", "e"),
            ],
        )
        .unwrap();
        let d = bfs_distances(&g).unwrap();
        let verdict = djokovic_embedding(&g, &d).unwrap();
        assert!(!verdict.is_partial_cube);
        assert!(matches!(
            verdict.counterexample,
            Some(Counterexample::NonConvexHalfSpace { .. })
        ));
    }

    #[test]
    fn odd_cycle_counterexample() {
        let (g, d) = graph("a b\nb c\nc d\nd e\ne a");
        let verdict = djokovic_embedding(&g, &d).unwrap();
        match verdict.counterexample {
            Some(Counterexample::OddCycle { cycle }) => assert_eq!(cycle.len(), 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn mutation_breaks_verification() {
        let (g, d) = graph(CUBE);
        let emb = djokovic_embedding(&g, &d).unwrap().embedding.unwrap();
        assert!(verify_embedding(&d, &emb));
        let mut bad = emb.clone();
        bad.assign[5].push(0);
        bad.assign[5].sort_unstable();
        bad.assign[5].dedup();
        if bad.assign[5] == emb.assign[5] {
            bad.assign[5].retain(|&c| c != 0);
        }
        assert!(!verify_embedding(&d, &bad));
    }

    #[test]
    fn labeled_json_shape() {
        let (g, d) = graph("a b\nb c");
        let emb = djokovic_embedding(&g, &d).unwrap().embedding.unwrap();
        let json = serde_json::to_string(&emb.to_labeled(&g)).unwrap();
        assert_eq!(
            json,
            r#"{"classes":2,"base":"a","assign":{"a":[],"b":[0],"c":[0,1]}}"#
        );
        let back: LabeledEmbedding = serde_json::from_str(&json).unwrap();
        assert_eq!(EmbeddingMap::from_labeled(&g, &back).unwrap(), emb);
    }
}
