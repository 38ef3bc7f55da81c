//! Cayley graphs of the finite Coxeter groups of types `A(n)`, `B(n)` and
//! `I2(m)` through concrete combinatorial models, with the inversion-set map
//! `θ(x) = {α > 0 : xα < 0}` into the hypercube on the positive roots.
//!
//! Vertices `x`, `y` are adjacent when `y = s x` for a simple generator `s`,
//! so graph distance is `ℓ(y x⁻¹)` and `|θ(x)| = ℓ(x)`.
//!
//! * `A(n)`: permutations of `{1..n+1}`; `s_i` swaps the values `i`, `i+1`.
//!   Positive roots `e_b − e_a` for `a < b`.
//! * `B(n)`: signed permutations of `{1..n}`; `s_0` negates the value `±1`,
//!   `s_i` swaps `±i` with `±(i+1)`. Positive roots `e_i`, `e_b ∓ e_a`.
//! * `I2(m)`: the dihedral group acting on `2m` root directions at angles
//!   `kπ/m`; root `k + m` is `−(root k)` and roots `0..m` are positive. The
//!   generators are the reflections in roots `0` and `m − 1`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::partial_cube::{verify_embedding, EmbeddingMap};

pub const DEFAULT_ORDER_CAP: u128 = 50_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    I2(usize),
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A({n})"),
            CoxeterType::B(n) => write!(f, "B({n})"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterSpec {
    pub kind: CoxeterType,
    pub cap: u128,
}

impl CoxeterSpec {
    pub fn new(kind: CoxeterType) -> Self {
        CoxeterSpec {
            kind,
            cap: DEFAULT_ORDER_CAP,
        }
    }

    pub fn a(n: usize) -> Self {
        Self::new(CoxeterType::A(n))
    }

    pub fn b(n: usize) -> Self {
        Self::new(CoxeterType::B(n))
    }

    pub fn i2(m: usize) -> Self {
        Self::new(CoxeterType::I2(m))
    }

    pub fn with_cap(mut self, cap: u128) -> Self {
        self.cap = cap;
        self
    }

    /// Number of simple generators.
    pub fn rank(&self) -> usize {
        match self.kind {
            CoxeterType::A(n) | CoxeterType::B(n) => n,
            CoxeterType::I2(_) => 2,
        }
    }

    /// Group order, `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        let factorial = |k: usize| (1..=k as u128).try_fold(1u128, |acc, i| acc.checked_mul(i));
        match self.kind {
            CoxeterType::A(n) => factorial(n + 1),
            CoxeterType::B(n) => {
                let pow = 1u128.checked_shl(u32::try_from(n).ok()?)?;
                factorial(n)?.checked_mul(pow)
            }
            CoxeterType::I2(m) => (m as u128).checked_mul(2),
        }
    }

    fn validate(&self) -> Result<()> {
        match self.kind {
            CoxeterType::A(n) | CoxeterType::B(n) if n < 1 => {
                return Err(Error::out_of_range("Coxeter rank", n))
            }
            CoxeterType::I2(m) if m < 2 => {
                return Err(Error::out_of_range("dihedral parameter m", m))
            }
            _ => {}
        }
        match self.order() {
            Some(order) if order <= self.cap => Ok(()),
            order => Err(Error::OrderCapExceeded {
                order: order.unwrap_or(u128::MAX),
                cap: self.cap,
            }),
        }
    }
}

/// An element of one of the concrete models.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupElement {
    /// One-line notation `[w(1), ..., w(n+1)]`.
    Permutation(Vec<i32>),
    /// One-line notation with signs, `[w(1), ..., w(n)]`.
    SignedPermutation(Vec<i32>),
    /// `k ↦ ±k + shift (mod 2m)` on root directions; `reflection` selects `−`.
    Dihedral {
        m: usize,
        reflection: bool,
        shift: usize,
    },
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Permutation(w) | GroupElement::SignedPermutation(w) => {
                let items: Vec<String> = w.iter().map(|v| v.to_string()).collect();
                write!(f, "[{}]", items.join(","))
            }
            GroupElement::Dihedral {
                reflection, shift, ..
            } => write!(f, "{}{}", if *reflection { "s" } else { "r" }, shift),
        }
    }
}

/// Positive root as a sparse signed combination of coordinate vectors
/// (types A, B) or a direction index (type I2).
#[derive(Debug, Clone, PartialEq, Eq)]
enum Root {
    Vector(Vec<(usize, i32)>),
    Direction(usize),
}

impl GroupElement {
    fn identity(kind: CoxeterType) -> Self {
        match kind {
            CoxeterType::A(n) => GroupElement::Permutation((1..=n as i32 + 1).collect()),
            CoxeterType::B(n) => GroupElement::SignedPermutation((1..=n as i32).collect()),
            CoxeterType::I2(m) => GroupElement::Dihedral {
                m,
                reflection: false,
                shift: 0,
            },
        }
    }

    /// `s x` for the simple generator with index `s`.
    fn left_multiply(&self, s: usize) -> Self {
        match self {
            GroupElement::Permutation(w) => {
                let i = s as i32 + 1;
                GroupElement::Permutation(
                    w.iter()
                        .map(|&v| {
                            if v == i {
                                i + 1
                            } else if v == i + 1 {
                                i
                            } else {
                                v
                            }
                        })
                        .collect(),
                )
            }
            GroupElement::SignedPermutation(w) => GroupElement::SignedPermutation(
                w.iter()
                    .map(|&v| {
                        let (sign, abs) = (v.signum(), v.abs());
                        if s == 0 {
                            if abs == 1 {
                                -v
                            } else {
                                v
                            }
                        } else {
                            let i = s as i32;
                            if abs == i {
                                sign * (i + 1)
                            } else if abs == i + 1 {
                                sign * i
                            } else {
                                v
                            }
                        }
                    })
                    .collect(),
            ),
            GroupElement::Dihedral {
                m,
                reflection,
                shift,
            } => {
                let modulus = 2 * m;
                // generator g: k ↦ offset − k
                let offset = if s == 0 {
                    *m
                } else {
                    (m + modulus - 2) % modulus
                };
                GroupElement::Dihedral {
                    m: *m,
                    reflection: !reflection,
                    shift: (offset + modulus - shift) % modulus,
                }
            }
        }
    }

    /// Whether this element sends the positive root to a negative one.
    fn negates(&self, root: &Root) -> bool {
        match (self, root) {
            (
                GroupElement::Permutation(w) | GroupElement::SignedPermutation(w),
                Root::Vector(coords),
            ) => {
                // A root ±e_p ± e_q is positive iff the coefficient at the
                // larger index is positive.
                let image = coords.iter().map(|&(k, c)| {
                    let v = w[k - 1];
                    (v.unsigned_abs() as usize, c * v.signum())
                });
                let (_, lead) = image.max_by_key(|&(k, _)| k).expect("nonempty root");
                lead < 0
            }
            (
                GroupElement::Dihedral {
                    m,
                    reflection,
                    shift,
                },
                Root::Direction(k),
            ) => {
                let modulus = 2 * m;
                let image = if *reflection {
                    (shift + modulus - k) % modulus
                } else {
                    (shift + k) % modulus
                };
                image >= *m
            }
            _ => unreachable!("root model mismatch"),
        }
    }
}

fn positive_roots(kind: CoxeterType) -> Vec<(String, Root)> {
    let mut roots = Vec::new();
    match kind {
        CoxeterType::A(n) => {
            for a in 1..=n + 1 {
                for b in a + 1..=n + 1 {
                    roots.push((format!("e{b}-e{a}"), Root::Vector(vec![(a, -1), (b, 1)])));
                }
            }
        }
        CoxeterType::B(n) => {
            for i in 1..=n {
                roots.push((format!("e{i}"), Root::Vector(vec![(i, 1)])));
            }
            for a in 1..=n {
                for b in a + 1..=n {
                    roots.push((format!("e{b}-e{a}"), Root::Vector(vec![(a, -1), (b, 1)])));
                    roots.push((format!("e{b}+e{a}"), Root::Vector(vec![(a, 1), (b, 1)])));
                }
            }
        }
        CoxeterType::I2(m) => {
            for k in 0..m {
                roots.push((format!("a{k}"), Root::Direction(k)));
            }
        }
    }
    roots
}

/// Positive roots and the inversion set `θ(x)` of every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSet {
    pub positive_roots: Vec<String>,
    /// Sorted root indices, one entry per graph vertex.
    pub theta: Vec<Vec<usize>>,
    pub elements: Vec<GroupElement>,
}

impl RootSet {
    /// `θ` as a hypercube embedding based at the identity (vertex 0).
    pub fn as_embedding(&self) -> EmbeddingMap {
        EmbeddingMap {
            classes: self.positive_roots.len(),
            base: 0,
            assign: self.theta.clone(),
        }
    }
}

/// Enumerates the group by BFS from the identity over the simple generators.
/// Vertex 0 is the identity.
pub fn coxeter_cayley(spec: &CoxeterSpec) -> Result<(Graph, RootSet)> {
    spec.validate()?;
    let identity = GroupElement::identity(spec.kind);
    let rank = spec.rank();
    let mut index: HashMap<GroupElement, usize> = HashMap::new();
    let mut elements = vec![identity.clone()];
    index.insert(identity, 0);
    let mut edges = Vec::new();

    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        for s in 0..rank {
            let y = x.left_multiply(s);
            let j = match index.get(&y) {
                Some(&j) => j,
                None => {
                    let j = elements.len();
                    index.insert(y.clone(), j);
                    elements.push(y);
                    j
                }
            };
            edges.push((head, j));
        }
        head += 1;
    }
    debug_assert_eq!(Some(elements.len() as u128), spec.order());

    let roots = positive_roots(spec.kind);
    let theta = elements
        .iter()
        .map(|x| {
            roots
                .iter()
                .enumerate()
                .filter(|(_, (_, r))| x.negates(r))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    let labels = elements.iter().map(|x| x.to_string()).collect();
    let graph = Graph::from_indices(labels, &edges)?;
    Ok((
        graph,
        RootSet {
            positive_roots: roots.into_iter().map(|(name, _)| name).collect(),
            theta,
            elements,
        },
    ))
}

/// `|θ(x) △ θ(y)| = d(x, y)` over all vertex pairs.
pub fn coxeter_theta_isometry_check(d: &DistanceMatrix, roots: &RootSet) -> bool {
    roots.theta.len() == d.n()
        && roots.theta.first().is_some_and(|t| t.is_empty())
        && verify_embedding(d, &roots.as_embedding())
}
