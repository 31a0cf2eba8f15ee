//! Exact root-system, Weyl-group and weight-lattice arithmetic for the
//! supported groups: tori, SU(2), U(2) and SU(3).
//!
//! Coordinate conventions (fixed once and for all):
//!
//! - tori and U(2): the standard basis `e_i` of t*, weight lattice `Z^r`;
//! - SU(2): the fundamental weight ω, lattice `Z ω`, positive root `α = 2ω`;
//! - SU(3): the fundamental-weight basis `(ω1, ω2)`, lattice `Z^2`,
//!   positive roots `α1 = 2ω1 - ω2`, `α2 = -ω1 + 2ω2`, `α1 + α2`.
//!
//! The invariant inner product is the trace form of the defining
//! representation: `⟨ω,ω⟩ = 1/2` on SU(2), the identity on tori and U(2),
//! and `[[2/3, 1/3], [1/3, 2/3]]` on SU(3). Any Weyl-invariant form gives
//! the same Boolean answers everywhere in this crate; one normalization is
//! fixed so that equality cases of the magical inequality are testable.
//!
//! Everything is a pure function over immutable values.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::{self, Rat};

/// An element of t* with exact rational coordinates in the basis declared
/// by the ambient [`RootDatum`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector(#[serde(with = "rat::serde_rat_vec")] pub Vec<Rat>);

impl WeightVector {
    pub fn new(coords: Vec<Rat>) -> Self {
        WeightVector(coords)
    }

    /// Builds a vector from integers.
    pub fn from_ints(coords: &[i64]) -> Self {
        WeightVector(coords.iter().map(|&c| Rat::from_integer(c)).collect())
    }

    /// Builds a vector from `(numerator, denominator)` pairs.
    pub fn from_pairs(coords: &[(i64, i64)]) -> Self {
        WeightVector(coords.iter().map(|&(p, q)| Rat::new(p, q)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        WeightVector(vec![Rat::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// All coordinates integral: membership in the weight lattice Λ.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(rat::is_integer)
    }

    /// All doubled coordinates integral (ρ-shifted vectors).
    pub fn is_rho_shifted(&self) -> bool {
        self.0.iter().all(rat::is_half_integer)
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> WeightVector {
        WeightVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: Rat) -> WeightVector {
        WeightVector(self.0.iter().map(|a| a * c).collect())
    }

    /// Formal (basis-independent) dot product; used for polarization
    /// bookkeeping where only signs matter, not the invariant form.
    pub fn dot(&self, other: &WeightVector) -> Rat {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(rat::rat_to_string)
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Supported group tags.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupTag {
    Torus(usize),
    Su2,
    U2,
    Su3,
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Torus(r) => write!(f, "torus:{r}"),
            GroupTag::Su2 => write!(f, "su2"),
            GroupTag::U2 => write!(f, "u2"),
            GroupTag::Su3 => write!(f, "su3"),
        }
    }
}

/// One Weyl-group element, stored as its matrix on the declared weight
/// basis, together with its length (the sign is `(-1)^length`).
#[derive(Clone, Debug)]
pub struct WeylElement {
    pub matrix: Vec<Vec<Rat>>,
    pub length: usize,
}

impl WeylElement {
    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn apply(&self, v: &WeightVector) -> WeightVector {
        let n = self.matrix.len();
        let mut out = vec![Rat::zero(); n];
        for (i, row) in self.matrix.iter().enumerate() {
            out[i] = row.iter().zip(&v.0).map(|(m, c)| m * c).sum();
        }
        WeightVector(out)
    }
}

/// Semisimple-part label of a Levi subalgebra of the supported groups.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SemisimpleLabel {
    /// Abelian: the semisimple part is 0.
    Zero,
    Su2,
    Su3,
}

impl fmt::Display for SemisimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemisimpleLabel::Zero => write!(f, "0"),
            SemisimpleLabel::Su2 => write!(f, "su(2)"),
            SemisimpleLabel::Su3 => write!(f, "su(3)"),
        }
    }
}

/// A stabilizer Levi: the subset of positive roots vanishing on a point of
/// t*, plus its center dimension and semisimple-part label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeviClass {
    /// Indices into `RootDatum::positive_roots`.
    pub root_indices: Vec<usize>,
    pub center_dim: usize,
    pub label: SemisimpleLabel,
}

impl LeviClass {
    pub fn is_torus(&self) -> bool {
        self.root_indices.is_empty()
    }

    /// Two Levi subsets are in the same conjugacy class iff their
    /// semisimple labels agree (true for the four supported groups, where
    /// the label determines the class).
    pub fn same_class(&self, other: &LeviClass) -> bool {
        self.label == other.label
    }
}

/// Root datum of a supported group: positive roots, Weyl group by explicit
/// matrix enumeration, and the fixed invariant inner product.
#[derive(Clone, Debug)]
pub struct RootDatum {
    tag: GroupTag,
    rank: usize,
    positive_roots: Vec<WeightVector>,
    simple_roots: Vec<WeightVector>,
    gram: Vec<Vec<Rat>>,
    weyl: Vec<WeylElement>,
}

fn id_matrix(n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rat::from_integer(i64::from(i == j)))
                .collect()
        })
        .collect()
}

fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let mut out = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = (0..n).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

impl RootDatum {
    pub fn new(tag: GroupTag) -> Self {
        match tag {
            GroupTag::Torus(r) => RootDatum {
                tag,
                rank: r,
                positive_roots: vec![],
                simple_roots: vec![],
                gram: id_matrix(r),
                weyl: vec![WeylElement {
                    matrix: id_matrix(r),
                    length: 0,
                }],
            },
            GroupTag::Su2 => {
                let alpha = WeightVector::from_ints(&[2]);
                RootDatum {
                    tag,
                    rank: 1,
                    positive_roots: vec![alpha.clone()],
                    simple_roots: vec![alpha],
                    gram: vec![vec![Rat::new(1, 2)]],
                    weyl: vec![
                        WeylElement {
                            matrix: id_matrix(1),
                            length: 0,
                        },
                        WeylElement {
                            matrix: vec![vec![Rat::from_integer(-1)]],
                            length: 1,
                        },
                    ],
                }
            }
            GroupTag::U2 => {
                let alpha = WeightVector::from_ints(&[1, -1]);
                let swap = vec![
                    vec![Rat::zero(), Rat::from_integer(1)],
                    vec![Rat::from_integer(1), Rat::zero()],
                ];
                RootDatum {
                    tag,
                    rank: 2,
                    positive_roots: vec![alpha.clone()],
                    simple_roots: vec![alpha],
                    gram: id_matrix(2),
                    weyl: vec![
                        WeylElement {
                            matrix: id_matrix(2),
                            length: 0,
                        },
                        WeylElement {
                            matrix: swap,
                            length: 1,
                        },
                    ],
                }
            }
            GroupTag::Su3 => {
                let a1 = WeightVector::from_ints(&[2, -1]);
                let a2 = WeightVector::from_ints(&[-1, 2]);
                let a12 = WeightVector::from_ints(&[1, 1]);
                // Reflection matrices on the fundamental-weight basis.
                let s1 = vec![
                    vec![Rat::from_integer(-1), Rat::zero()],
                    vec![Rat::from_integer(1), Rat::from_integer(1)],
                ];
                let s2 = vec![
                    vec![Rat::from_integer(1), Rat::from_integer(1)],
                    vec![Rat::zero(), Rat::from_integer(-1)],
                ];
                let e = id_matrix(2);
                let s12 = mat_mul(&s1, &s2);
                let s21 = mat_mul(&s2, &s1);
                let s121 = mat_mul(&s1, &mat_mul(&s2, &s1));
                RootDatum {
                    tag,
                    rank: 2,
                    positive_roots: vec![a1.clone(), a2.clone(), a12],
                    simple_roots: vec![a1, a2],
                    gram: vec![
                        vec![Rat::new(2, 3), Rat::new(1, 3)],
                        vec![Rat::new(1, 3), Rat::new(2, 3)],
                    ],
                    weyl: vec![
                        WeylElement {
                            matrix: e,
                            length: 0,
                        },
                        WeylElement {
                            matrix: s1,
                            length: 1,
                        },
                        WeylElement {
                            matrix: s2,
                            length: 1,
                        },
                        WeylElement {
                            matrix: s12,
                            length: 2,
                        },
                        WeylElement {
                            matrix: s21,
                            length: 2,
                        },
                        WeylElement {
                            matrix: s121,
                            length: 3,
                        },
                    ],
                }
            }
        }
    }

    /// Parses `"su2"`, `"u2"`, `"su3"`, `"torus:R"`.
    pub fn from_tag_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let tag = match s.as_str() {
            "su2" => GroupTag::Su2,
            "u2" => GroupTag::U2,
            "su3" => GroupTag::Su3,
            other => match other.strip_prefix("torus:") {
                Some(r) => {
                    let r: usize = r
                        .parse()
                        .map_err(|_| Error::InvalidInput(format!("bad torus rank '{r}'")))?;
                    if r == 0 || r > 8 {
                        return Err(Error::InvalidInput(format!("torus rank {r} out of range")));
                    }
                    GroupTag::Torus(r)
                }
                None => return Err(Error::InvalidInput(format!("unknown group tag '{s}'"))),
            },
        };
        Ok(RootDatum::new(tag))
    }

    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[WeightVector] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[WeightVector] {
        &self.simple_roots
    }

    pub fn weyl(&self) -> &[WeylElement] {
        &self.weyl
    }

    /// Invariant pairing `⟨ξ, η⟩` through the fixed gram matrix.
    pub fn pair(&self, xi: &WeightVector, eta: &WeightVector) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += xi.0[i] * self.gram[i][j] * eta.0[j];
            }
        }
        acc
    }

    /// Squared invariant norm.
    pub fn norm2(&self, xi: &WeightVector) -> Rat {
        self.pair(xi, xi)
    }

    /// ξ is regular iff no positive root pairs to zero with it.
    pub fn is_regular(&self, xi: &WeightVector) -> bool {
        self.positive_roots
            .iter()
            .all(|a| !self.pair(a, xi).is_zero())
    }

    /// ξ lies in the closed dominant chamber.
    pub fn is_dominant(&self, xi: &WeightVector) -> bool {
        self.simple_roots
            .iter()
            .all(|a| !self.pair(a, xi).is_negative())
    }

    /// ξ lies in the open dominant chamber.
    pub fn is_strictly_dominant(&self, xi: &WeightVector) -> bool {
        self.simple_roots
            .iter()
            .all(|a| self.pair(a, xi).is_positive())
    }

    /// The unique dominant representative of the Weyl orbit of ξ.
    pub fn dominant_rep(&self, xi: &WeightVector) -> WeightVector {
        for w in &self.weyl {
            let v = w.apply(xi);
            if self.is_dominant(&v) {
                return v;
            }
        }
        unreachable!("every Weyl orbit meets the closed dominant chamber")
    }

    /// Stabilizer classes of points of t* for this group, listed once per
    /// conjugacy class with a dominant representative subset.
    pub fn stabilizer_classes(&self) -> Vec<LeviClass> {
        match self.tag {
            GroupTag::Torus(_) => vec![self.levi_from_indices(vec![])],
            GroupTag::Su2 | GroupTag::U2 => {
                vec![
                    self.levi_from_indices(vec![]),
                    self.levi_from_indices(vec![0]),
                ]
            }
            GroupTag::Su3 => vec![
                self.levi_from_indices(vec![]),
                self.levi_from_indices(vec![1]),
                self.levi_from_indices(vec![0, 1, 2]),
            ],
        }
    }

    pub(crate) fn levi_from_indices(&self, root_indices: Vec<usize>) -> LeviClass {
        let label = match root_indices.len() {
            0 => SemisimpleLabel::Zero,
            1 => SemisimpleLabel::Su2,
            3 => SemisimpleLabel::Su3,
            n => unreachable!("no supported Levi has {n} positive roots"),
        };
        // Rank of the span of the Levi roots = rank - center dimension.
        let semisimple_rank = match label {
            SemisimpleLabel::Zero => 0,
            SemisimpleLabel::Su2 => 1,
            SemisimpleLabel::Su3 => 2,
        };
        LeviClass {
            root_indices,
            center_dim: self.rank - semisimple_rank,
            label,
        }
    }

    /// JSON description: `{"group": "su3"}` or `{"group": "torus", "rank": 2}`.
    pub fn to_json(&self) -> serde_json::Value {
        match self.tag {
            GroupTag::Torus(r) => serde_json::json!({"group": "torus", "rank": r}),
            GroupTag::Su2 => serde_json::json!({"group": "su2"}),
            GroupTag::U2 => serde_json::json!({"group": "u2"}),
            GroupTag::Su3 => serde_json::json!({"group": "su3"}),
        }
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let group = v
            .get("group")
            .and_then(|g| g.as_str())
            .ok_or_else(|| Error::InvalidInput("missing 'group' field".into()))?;
        match group {
            "torus" => {
                let r = v
                    .get("rank")
                    .and_then(serde_json::Value::as_u64)
                    .ok_or_else(|| Error::InvalidInput("torus needs a 'rank' field".into()))?;
                RootDatum::from_tag_str(&format!("torus:{r}"))
            }
            other => RootDatum::from_tag_str(other),
        }
    }
}

/// ρ^K: the half-sum of positive roots.
pub fn rho(datum: &RootDatum) -> WeightVector {
    let mut acc = WeightVector::zero(datum.rank());
    for a in datum.positive_roots() {
        acc = acc.add(a);
    }
    acc.scale(Rat::new(1, 2))
}

/// The stabilizer Levi of ξ: the positive roots pairing to zero with it.
pub fn stabilizer_levi(xi: &WeightVector, datum: &RootDatum) -> LeviClass {
    let idx = datum
        .positive_roots()
        .iter()
        .enumerate()
        .filter(|(_, a)| datum.pair(a, xi).is_zero())
        .map(|(i, _)| i)
        .collect::<Vec<_>>();
    datum.levi_from_indices(idx)
}

/// Result of Weyl normalization: either ξ is singular, or there is a unique
/// `w` making it strictly dominant, reported with `det(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalized {
    Singular,
    Regular { sign: i64, dominant: WeightVector },
}

/// Moves ξ to the open dominant chamber, tracking the determinant of the
/// Weyl element used; `Singular` when some root pairs to zero with ξ.
pub fn weyl_normalize(xi: &WeightVector, datum: &RootDatum) -> Normalized {
    if !datum.is_regular(xi) {
        return Normalized::Singular;
    }
    for w in datum.weyl() {
        let v = w.apply(xi);
        if datum.is_strictly_dominant(&v) {
            return Normalized::Regular {
                sign: w.sign(),
                dominant: v,
            };
        }
    }
    unreachable!("a regular vector has a strictly dominant Weyl translate")
}

/// Normalized trace `Σ_w |⟨w, b⟩|` over a list of (real-pair or complex)
/// torus weights. On the adjoint module of k this is `nTr_k |b|`.
pub fn normalized_trace(weights: &[WeightVector], b: &WeightVector, datum: &RootDatum) -> Rat {
    weights.iter().map(|w| datum.pair(w, b).abs()).sum()
}

/// `nTr_k |b|` for the datum's own adjoint module: `Σ_{α>0} |⟨α, b⟩|`.
pub fn adjoint_normalized_trace(b: &WeightVector, datum: &RootDatum) -> Rat {
    normalized_trace(datum.positive_roots(), b, datum)
}
