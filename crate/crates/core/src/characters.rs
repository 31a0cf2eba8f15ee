//! Characters: finite virtual characters of K indexed by regular admissible
//! labels, infinite torus characters represented as signed sums of polarized
//! geometric-series cones (window-queryable, never materialized), weight
//! restriction to the maximal torus, and holomorphic induction from the
//! torus.

use std::collections::BTreeMap;

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{coordinate_bound, LatticeBox};
use crate::lie::{rho, weyl_normalize, GroupTag, Normalized, RootDatum, WeightVector};
use crate::orbits::CoadjointOrbit;
use crate::rat::{self, Rat};

/// A finite virtual character of K: multiplicities on regular admissible
/// labels `λ ∈ Λ_{≥0} + ρ`. Zero multiplicities are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterK {
    mults: BTreeMap<WeightVector, i64>,
}

impl CharacterK {
    pub fn new() -> Self {
        CharacterK::default()
    }

    /// Adds `m · π_label`. The label must be a regular admissible orbit
    /// representative (strictly dominant, ρ-shifted integral).
    pub fn add_label(&mut self, label: WeightVector, m: i64, datum: &RootDatum) {
        debug_assert!(
            crate::orbits::is_regular_admissible_label(&label, datum),
            "{label} is not a regular admissible label"
        );
        let entry = self.mults.entry(label).or_insert(0);
        *entry += m;
        self.mults.retain(|_, v| *v != 0);
    }

    pub fn from_labels(labels: &[(WeightVector, i64)], datum: &RootDatum) -> Self {
        let mut c = CharacterK::new();
        for (l, m) in labels {
            c.add_label(l.clone(), *m, datum);
        }
        c
    }

    pub fn mults(&self) -> &BTreeMap<WeightVector, i64> {
        &self.mults
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn neg(&self) -> Self {
        CharacterK {
            mults: self.mults.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn add(&self, other: &CharacterK) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.mults {
            let e = out.mults.entry(k.clone()).or_insert(0);
            *e += v;
        }
        out.mults.retain(|_, v| *v != 0);
        out
    }

    /// JSON per the external interface: a list of `{label, mult}` records.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .mults
            .iter()
            .map(|(l, m)| {
                serde_json::json!({
                    "label": l.coords().iter().map(rat::rat_to_string).collect::<Vec<_>>(),
                    "mult": m,
                })
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

/// Multiplicity of `π_O` in the character: a direct map lookup (this is the
/// shifting-trick coefficient `[Q ⊗ π_O^*]^K`).
pub fn coefficient(c: &CharacterK, orbit: &CoadjointOrbit) -> i64 {
    c.mults.get(orbit.rep()).copied().unwrap_or(0)
}

/// One polarized cone term: `sign · t^offset · Π_j Σ_{k≥0} t^{k g_j}`,
/// with every generator in the open half-space of the recorded witness.
#[derive(Clone, Debug, Serialize)]
pub struct ConeTerm {
    pub sign: i64,
    pub offset: WeightVector,
    pub gens: Vec<WeightVector>,
    /// Witness covector: `⟨g_j, witness⟩ > 0` for every generator, so the
    /// lattice count below any target is finite.
    pub witness: WeightVector,
}

impl ConeTerm {
    pub fn new(
        sign: i64,
        offset: WeightVector,
        gens: Vec<WeightVector>,
        witness: WeightVector,
    ) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidInput("cone term sign must be ±1".into()));
        }
        if !offset.is_integral() {
            return Err(Error::InvalidInput(format!(
                "cone offset {offset} not integral"
            )));
        }
        for g in &gens {
            if g.is_zero() || !g.is_integral() {
                return Err(Error::InvalidInput(format!("bad cone generator {g}")));
            }
            if !g.dot(&witness).is_positive() {
                return Err(Error::InvalidInput(format!(
                    "generator {g} not in the open half-space of witness {witness}"
                )));
            }
        }
        Ok(ConeTerm {
            sign,
            offset,
            gens,
            witness,
        })
    }

    /// Number of lattice solutions `k_j ≥ 0` of `offset + Σ k_j g_j = μ`.
    pub fn count_at(&self, mu: &WeightVector) -> i64 {
        let target = mu.sub(&self.offset);
        count_solutions(&target, &self.gens, &self.witness)
    }
}

fn count_solutions(target: &WeightVector, gens: &[WeightVector], witness: &WeightVector) -> i64 {
    let height = target.dot(witness);
    if height.is_negative() {
        return 0;
    }
    match gens.split_first() {
        None => i64::from(target.is_zero()),
        Some((g, rest)) => {
            let step = g.dot(witness);
            let kmax = rat::floor(&(height / step));
            let mut acc = 0i64;
            let mut t = target.clone();
            for _ in 0..=kmax {
                acc += count_solutions(&t, rest, witness);
                t = t.sub(g);
            }
            acc
        }
    }
}

/// A window-queryable element of `R̂(T)`: a finite signed list of polarized
/// cone terms plus an exact finite tail. Multiplicity at any single weight
/// is a finite vector-partition count.
#[derive(Clone, Debug, Default)]
pub struct FormalCharacter {
    rank: usize,
    terms: Vec<ConeTerm>,
    tail: BTreeMap<WeightVector, i64>,
}

impl FormalCharacter {
    pub fn zero(rank: usize) -> Self {
        FormalCharacter {
            rank,
            terms: vec![],
            tail: BTreeMap::new(),
        }
    }

    pub fn from_terms(rank: usize, terms: Vec<ConeTerm>) -> Self {
        FormalCharacter {
            rank,
            terms,
            tail: BTreeMap::new(),
        }
    }

    /// A purely finite character (tail only).
    pub fn from_tail(rank: usize, tail: BTreeMap<WeightVector, i64>) -> Self {
        let mut t = tail;
        t.retain(|_, v| *v != 0);
        FormalCharacter {
            rank,
            terms: vec![],
            tail: t,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &[ConeTerm] {
        &self.terms
    }

    pub fn tail(&self) -> &BTreeMap<WeightVector, i64> {
        &self.tail
    }

    pub fn has_infinite_part(&self) -> bool {
        !self.terms.is_empty()
    }

    pub fn push_term(&mut self, term: ConeTerm) {
        self.terms.push(term);
    }

    pub fn add_tail(&mut self, w: WeightVector, m: i64) {
        let e = self.tail.entry(w).or_insert(0);
        *e += m;
        self.tail.retain(|_, v| *v != 0);
    }

    /// Formal sum (no cancellation of cone terms is attempted).
    pub fn add(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        for (w, m) in &other.tail {
            out.add_tail(w.clone(), *m);
        }
        out
    }

    /// Formal difference.
    pub fn sub(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for t in &other.terms {
            let mut t = t.clone();
            t.sign = -t.sign;
            out.terms.push(t);
        }
        for (w, m) in &other.tail {
            out.add_tail(w.clone(), -*m);
        }
        out
    }
}

/// Exact multiplicity of the formal character at an integral weight.
pub fn mult_at(f: &FormalCharacter, mu: &WeightVector) -> i64 {
    debug_assert!(mu.is_integral(), "mult_at expects an integral weight");
    let cones: i64 = f.terms.iter().map(|t| t.sign * t.count_at(mu)).sum();
    cones + f.tail.get(mu).copied().unwrap_or(0)
}

/// Dense window of multiplicities over a finite box, lexicographic layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    pub bounds: LatticeBox,
    pub values: Vec<i64>,
}

impl Window {
    pub fn points(&self) -> Vec<WeightVector> {
        self.bounds.lattice_points()
    }

    /// Entries pairwise with their lattice points.
    pub fn entries(&self) -> Vec<(WeightVector, i64)> {
        self.points()
            .into_iter()
            .zip(self.values.iter().copied())
            .collect()
    }

    pub fn nonzero_entries(&self) -> BTreeMap<WeightVector, i64> {
        self.entries()
            .into_iter()
            .filter(|(_, v)| *v != 0)
            .collect()
    }
}

/// Evaluates the window serially.
pub fn window(f: &FormalCharacter, bounds: &LatticeBox) -> Window {
    window_with_threads(f, bounds, 1)
}

/// Evaluates the window with up to `threads` workers; the layout is
/// deterministic regardless of the worker count.
pub fn window_with_threads(f: &FormalCharacter, bounds: &LatticeBox, threads: usize) -> Window {
    let points = bounds.lattice_points();
    let threads = threads.max(1).min(points.len().max(1));
    if threads <= 1 {
        let values = points.iter().map(|p| mult_at(f, p)).collect();
        return Window {
            bounds: bounds.clone(),
            values,
        };
    }
    let chunk = points.len().div_ceil(threads);
    let mut values = vec![0i64; points.len()];
    std::thread::scope(|scope| {
        for (slot, pts) in values.chunks_mut(chunk).zip(points.chunks(chunk)) {
            scope.spawn(move || {
                for (v, p) in slot.iter_mut().zip(pts) {
                    *v = mult_at(f, p);
                }
            });
        }
    });
    Window {
        bounds: bounds.clone(),
        values,
    }
}

/// T-weight multiplicities of a single irreducible `π_label`.
///
/// SU(2) and U(2) use the weight-string basis; SU(3) uses Kostant partition
/// counting with Weyl alternation over the two simple-root generators and
/// the long root.
pub fn irrep_torus_weights(label: &WeightVector, datum: &RootDatum) -> BTreeMap<WeightVector, i64> {
    let mut out = BTreeMap::new();
    match datum.tag() {
        GroupTag::Torus(_) => {
            out.insert(label.clone(), 1);
        }
        GroupTag::Su2 => {
            let m = rat::to_integer(&label.coords()[0]).expect("su2 label integral");
            for j in 0..m {
                let w = WeightVector::from_ints(&[m - 1 - 2 * j]);
                *out.entry(w).or_insert(0) += 1;
            }
        }
        GroupTag::U2 => {
            let l1 = label.coords()[0];
            let l2 = label.coords()[1];
            let len = rat::to_integer(&(l1 - l2)).expect("u2 label difference integral");
            let half = Rat::new(1, 2);
            for j in 0..len {
                let w = WeightVector::new(vec![
                    l1 - half - Rat::from_integer(j),
                    l2 + half + Rat::from_integer(j),
                ]);
                *out.entry(w).or_insert(0) += 1;
            }
        }
        GroupTag::Su3 => {
            let r = rho(datum);
            let hw = label.sub(&r);
            let bound = coordinate_bound(&datum.norm2(&hw), datum).max(1);
            let bx = LatticeBox::centered(2, bound);
            for nu in bx.lattice_points() {
                let mut m = 0i64;
                for w in datum.weyl() {
                    let v = w.apply(label).sub(&r).sub(&nu);
                    m += w.sign() * kostant_partition_su3(&v);
                }
                if m != 0 {
                    out.insert(nu, m);
                }
            }
        }
    }
    out
}

/// Kostant partition function of SU(3) in the ω-basis: the number of ways
/// to write `v` as `x α1 + y α2 + z (α1+α2)` with `x, y, z ≥ 0`.
fn kostant_partition_su3(v: &WeightVector) -> i64 {
    let v1 = v.coords()[0];
    let v2 = v.coords()[1];
    // Solving for fixed z: x = (2 v1 + v2)/3 - z, y = (v1 + 2 v2)/3 - z.
    let a = (Rat::from_integer(2) * v1 + v2) / Rat::from_integer(3);
    let b = (v1 + Rat::from_integer(2) * v2) / Rat::from_integer(3);
    if !a.is_integer() || !b.is_integer() {
        return 0;
    }
    let a = *a.numer();
    let b = *b.numer();
    if a < 0 || b < 0 {
        0
    } else {
        a.min(b) + 1
    }
}

/// Restriction of a finite K-character to the maximal torus, as a finite
/// formal character.
pub fn restrict_to_torus(c: &CharacterK, datum: &RootDatum) -> FormalCharacter {
    let mut tail: BTreeMap<WeightVector, i64> = BTreeMap::new();
    for (label, m) in c.mults() {
        for (w, k) in irrep_torus_weights(label, datum) {
            let e = tail.entry(w).or_insert(0);
            *e += m * k;
        }
    }
    FormalCharacter::from_tail(datum.rank(), tail)
}

/// Holomorphic induction of a finite multiplicity function on the torus:
/// each weight ν contributes nothing when `ν + ρ_C` is singular, and
/// `det(w) · π_{w(ν + ρ_C)}` otherwise. `rho_C` is `ρ` of the inducing
/// chamber (`rho_of` of any regular element of it).
pub fn holomorphic_induct(
    h_weights: &FormalCharacter,
    rho_c: &WeightVector,
    datum: &RootDatum,
) -> Result<CharacterK> {
    if h_weights.has_infinite_part() {
        return Err(Error::InfiniteSupport);
    }
    let mut out = CharacterK::new();
    for (nu, m) in h_weights.tail() {
        match weyl_normalize(&nu.add(rho_c), datum) {
            Normalized::Singular => {}
            Normalized::Regular { sign, dominant } => {
                out.add_label(dominant, sign * m, datum);
            }
        }
    }
    Ok(out)
}
