//! Admissible coadjoint orbit calculus: ρ(ξ), admissibility, the shift
//! `s(P) = K(μ + ρ^{K_μ})`, ancestors, orbit quantization, the magical
//! inequality and the vanishing criterion.
//!
//! An orbit is stored by its dominant representative; two orbits are equal
//! iff their dominant representatives are. An orbit `Kξ` is admissible when
//! `ξ - ρ(ξ)` lies in the weight lattice (the supported stabilizers are all
//! connected, so lattice membership is the character condition). Regular
//! admissible orbits `λ ∈ Λ_{≥0} + ρ` name the irreducible representations
//! `π_λ`; `qspin_orbit` sends every admissible orbit to such a label or to
//! zero depending on whether its shift is regular.

use std::fmt;

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{coordinate_bound, LatticeBox};
use crate::lie::{
    normalized_trace, rho, stabilizer_levi, LeviClass, RootDatum, SemisimpleLabel, WeightVector,
};
use crate::rat::Rat;

/// A coadjoint orbit, stored by dominant representative with its cached
/// stabilizer Levi.
#[derive(Clone, Debug)]
pub struct CoadjointOrbit {
    rep: WeightVector,
    levi: LeviClass,
}

impl PartialEq for CoadjointOrbit {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep
    }
}
impl Eq for CoadjointOrbit {}

impl PartialOrd for CoadjointOrbit {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for CoadjointOrbit {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rep.cmp(&other.rep)
    }
}

impl fmt::Display for CoadjointOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K·{}", self.rep)
    }
}

impl CoadjointOrbit {
    /// The orbit through ξ (any representative; normalized internally).
    pub fn through(xi: &WeightVector, datum: &RootDatum) -> Self {
        let rep = datum.dominant_rep(xi);
        let levi = stabilizer_levi(&rep, datum);
        CoadjointOrbit { rep, levi }
    }

    pub fn rep(&self) -> &WeightVector {
        &self.rep
    }

    pub fn levi(&self) -> &LeviClass {
        &self.levi
    }

    pub fn is_regular(&self) -> bool {
        self.levi.is_torus()
    }

    /// The dual orbit `-P` (dominant representative of the negated orbit).
    pub fn dual(&self, datum: &RootDatum) -> Self {
        CoadjointOrbit::through(&self.rep.neg(), datum)
    }
}

/// The ρ-orbit `o(k)`: orbit of the half-sum of positive roots. It is
/// admissible, and its quantization is the trivial representation.
pub fn rho_orbit(datum: &RootDatum) -> CoadjointOrbit {
    CoadjointOrbit::through(&rho(datum), datum)
}

/// `ρ(ξ)`: the half-sum of the positive roots pairing strictly positively
/// with ξ (the ρ of the complex module `q^ξ = k/k_ξ`). Requires ξ dominant
/// so the half-sum is the one attached to ξ's own chamber.
pub fn rho_of(xi: &WeightVector, datum: &RootDatum) -> WeightVector {
    debug_assert!(datum.is_dominant(xi), "rho_of expects a dominant argument");
    let mut acc = WeightVector::zero(datum.rank());
    for a in datum.positive_roots() {
        if datum.pair(a, xi).is_positive() {
            acc = acc.add(a);
        }
    }
    acc.scale(Rat::new(1, 2))
}

/// Admissibility: `rep - ρ(rep)` lies in the weight lattice.
pub fn is_admissible(orbit: &CoadjointOrbit, datum: &RootDatum) -> bool {
    orbit.rep.sub(&rho_of(&orbit.rep, datum)).is_integral()
}

/// The shift `s(P) = K(μ + ρ^{K_μ})`, with `ρ^{K_μ}` the half-sum of the
/// Levi's positive roots, compatible with the chamber of μ. Fixed points:
/// regular orbits; `s({0}) = o(k)`.
pub fn shift(orbit: &CoadjointOrbit, datum: &RootDatum) -> CoadjointOrbit {
    let mut half = WeightVector::zero(datum.rank());
    for &i in &orbit.levi.root_indices {
        half = half.add(&datum.positive_roots()[i]);
    }
    let shifted = orbit.rep.add(&half.scale(Rat::new(1, 2)));
    CoadjointOrbit::through(&shifted, datum)
}

/// Quantization of an admissible orbit: zero, or the label of `π_{s(P)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum OrbitQuantization {
    Zero,
    /// Label `λ ∈ Λ_{≥0} + ρ` of the irreducible `π_λ`.
    Pi(WeightVector),
}

impl fmt::Display for OrbitQuantization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitQuantization::Zero => write!(f, "0"),
            OrbitQuantization::Pi(l) => write!(f, "pi_{l}"),
        }
    }
}

/// `Q^spin_K(P)` for an admissible orbit: zero when the shift is not
/// regular, otherwise the label of `π_{s(P)}`.
pub fn qspin_orbit(orbit: &CoadjointOrbit, datum: &RootDatum) -> Result<OrbitQuantization> {
    if !is_admissible(orbit, datum) {
        return Err(Error::NotAdmissible(orbit.to_string()));
    }
    let s = shift(orbit, datum);
    if s.is_regular() {
        Ok(OrbitQuantization::Pi(s.rep))
    } else {
        Ok(OrbitQuantization::Zero)
    }
}

/// All admissible orbits within the scan box (dominant representatives on
/// the half-integer lattice), sorted.
pub fn admissible_orbits_in_box(datum: &RootDatum, search_box: &LatticeBox) -> Vec<CoadjointOrbit> {
    let mut out = Vec::new();
    for p in search_box.scan(2) {
        if !datum.is_dominant(&p) {
            continue;
        }
        let orbit = CoadjointOrbit::through(&p, datum);
        if is_admissible(&orbit, datum) {
            out.push(orbit);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The `(h)`-ancestors of a regular admissible orbit `O` within a scan box:
/// admissible orbits of stabilizer class `(h)` whose shift is `O`.
pub fn ancestors_of(
    orbit: &CoadjointOrbit,
    class: &LeviClass,
    datum: &RootDatum,
    search_box: &LatticeBox,
) -> Vec<CoadjointOrbit> {
    admissible_orbits_in_box(datum, search_box)
        .into_iter()
        .filter(|p| p.levi().same_class(class) && &shift(p, datum) == orbit)
        .collect()
}

/// Ancestors over every stabilizer class.
pub fn ancestors_over_all_classes(
    orbit: &CoadjointOrbit,
    datum: &RootDatum,
    search_box: &LatticeBox,
) -> Vec<CoadjointOrbit> {
    admissible_orbits_in_box(datum, search_box)
        .into_iter()
        .filter(|p| &shift(p, datum) == orbit)
        .collect()
}

/// A sound default scan box for ancestors of `O`: the magical inequality's
/// equality case gives `‖μ‖ ≤ ‖λ‖` for any ancestor `Kμ` of `Kλ`.
pub fn sound_ancestor_box(orbit: &CoadjointOrbit, datum: &RootDatum) -> LatticeBox {
    let bound = coordinate_bound(&datum.norm2(orbit.rep()), datum);
    LatticeBox::centered(datum.rank(), bound)
}

/// Report of one magical-inequality check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MagicalReport {
    pub holds: bool,
    pub equality: bool,
    /// Meaningful only when `equality` is true: conclusions (1)
    /// `λ - ρ(λ) = μ - ρ(μ)` and (2) `s(Kμ) = Kλ` both verified.
    pub conclusions_verified: bool,
}

/// λ is very regular when it is regular and lies in `ρ(λ) + C_λ` for its
/// own chamber `C_λ`.
pub fn is_very_regular(lambda: &WeightVector, datum: &RootDatum) -> bool {
    if !datum.is_regular(lambda) {
        return false;
    }
    let dom = datum.dominant_rep(lambda);
    // In the dominant chamber ρ(dom) = ρ; membership in ρ + C̄ transports
    // back to λ's chamber by Weyl invariance.
    datum.is_dominant(&dom.sub(&rho(datum)))
}

/// Checks `‖β‖² ≥ ½ nTr_{k_μ}|β|` for `β = μ - λ`, λ very regular; on
/// equality verifies the two conclusions of the magical inequality.
pub fn magical_check(
    lambda: &WeightVector,
    mu: &WeightVector,
    datum: &RootDatum,
) -> Result<MagicalReport> {
    if !is_very_regular(lambda, datum) {
        return Err(Error::PreconditionViolated(format!(
            "{lambda} is not very regular"
        )));
    }
    let beta = mu.sub(lambda);
    let lhs = datum.norm2(&beta);
    let levi_mu = stabilizer_levi(mu, datum);
    let levi_roots: Vec<WeightVector> = levi_mu
        .root_indices
        .iter()
        .map(|&i| datum.positive_roots()[i].clone())
        .collect();
    let rhs = normalized_trace(&levi_roots, &beta, datum) * Rat::new(1, 2);
    let holds = lhs >= rhs;
    let equality = lhs == rhs;
    let conclusions_verified = if equality {
        let lam_orbit = CoadjointOrbit::through(lambda, datum);
        let mu_orbit = CoadjointOrbit::through(mu, datum);
        let c1 = lam_orbit.rep().sub(&rho_of(lam_orbit.rep(), datum))
            == mu_orbit.rep().sub(&rho_of(mu_orbit.rep(), datum));
        let c2 = shift(&mu_orbit, datum) == lam_orbit;
        c1 && c2
    } else {
        false
    };
    Ok(MagicalReport {
        holds,
        equality,
        conclusions_verified,
    })
}

/// The localization function `d_S` at a zero of the Kirwan vector field:
/// `‖θ‖² + ½ nTr_{T_mM}|θ| - nTr_k|θ|` with θ the moment value.
pub fn d_value(theta: &WeightVector, tangent_weights: &[WeightVector], datum: &RootDatum) -> Rat {
    datum.norm2(theta) + normalized_trace(tangent_weights, theta, datum) * Rat::new(1, 2)
        - crate::lie::adjoint_normalized_trace(theta, datum)
}

/// Generic-stabilizer data for the vanishing criterion: either the
/// semisimple part presented as a Levi root subset, or an explicit marker
/// for a non-Levi embedding (e.g. a principal so(3) in su(3)).
#[derive(Clone, Debug)]
pub enum GenericStabilizer {
    Levi(LeviClass),
    NonLevi,
}

/// True iff the index may be nonzero: the generic stabilizer's semisimple
/// part matches `[h, h]` for some stabilizer class `(h)` of the datum.
/// False forces `Q_K(M, S) = 0` for every equivariant bundle.
pub fn vanishing_criterion(stab: &GenericStabilizer, datum: &RootDatum) -> bool {
    match stab {
        GenericStabilizer::NonLevi => false,
        GenericStabilizer::Levi(class) => datum
            .stabilizer_classes()
            .iter()
            .any(|h| h.same_class(class)),
    }
}

/// Is the label usable as a regular admissible orbit label `Λ_{≥0} + ρ`?
pub fn is_regular_admissible_label(label: &WeightVector, datum: &RootDatum) -> bool {
    let orbit = CoadjointOrbit::through(label, datum);
    orbit.rep() == label && orbit.is_regular() && is_admissible(&orbit, datum)
}

/// Convenience: the Levi class with the given semisimple label, if the
/// datum has one.
pub fn class_with_label(label: SemisimpleLabel, datum: &RootDatum) -> Option<LeviClass> {
    datum
        .stabilizer_classes()
        .into_iter()
        .find(|c| c.label == label)
}
