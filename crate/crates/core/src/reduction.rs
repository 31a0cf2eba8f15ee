//! Reduced-space quantization and the `[Q,R] = 0` verifier.
//!
//! For an abelian model the quantization of the (possibly singular) reduced
//! space at an integral level μ is defined by the dichotomy: zero when μ is
//! outside the relative interior of the moment image inside its affine
//! hull, and otherwise the multiplicity of the residual localized component
//! at μ (which equals the global multiplicity there). When the catalog
//! additionally supplies finite fiber data at `μ + ε` (the reduction being
//! a finite set of orbifold points) the point formula
//!
//! ```text
//!     Q^spin(M_μ) = Σ_points  orientation · dim[ det(S)^{1/2} ⊗ C_{-μ} ]^Γ
//! ```
//!
//! is evaluated instead and the two routes are cross-checked.
//!
//! Non-abelian multiplicities are reached through slice charts: one abelian
//! model per connected component of the slice over a chamber face, with the
//! ancestor orbit's level placed by `μ ↦ μ - ρ_C` in chart coordinates.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::characters::{mult_at, FormalCharacter};
use crate::error::{Error, Result};
use crate::fixedpoint::{global_index, FixedPointModel};
use crate::geometry::{LatticeBox, MomentImage, Position};
use crate::lie::{LeviClass, RootDatum, WeightVector};
use crate::orbits::{ancestors_of, sound_ancestor_box, CoadjointOrbit};
use crate::rat::Rat;

/// One orbifold point of a finite reduced fiber `Φ^{-1}(μ+ε)/T`.
#[derive(Clone, Debug, Serialize)]
pub struct FiberPoint {
    pub orientation: i8,
    /// Order of the cyclic stabilizer Γ.
    pub stabilizer_order: i64,
    /// Weight of `det(S)^{1/2}` at the point.
    pub half_det_weight: WeightVector,
    /// Residues of the lattice basis characters on the generator of Γ: the
    /// weight `ν` acts trivially iff `Σ ν_i residues_i ≡ 0 (mod order)`.
    pub residues: Vec<i64>,
}

/// A finite reduced fiber: the reduction at a regular value near μ.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ReducedFiberModel {
    pub points: Vec<FiberPoint>,
}

/// The point-reduction index: each point contributes its orientation when
/// `half_det_weight - μ` is trivial on Γ, and nothing otherwise.
pub fn qspin_point(fiber: &ReducedFiberModel, mu: &WeightVector) -> i64 {
    let mut acc = 0i64;
    for p in &fiber.points {
        let nu = p.half_det_weight.sub(mu);
        if !nu.is_integral() {
            continue;
        }
        let pairing: Rat = nu
            .coords()
            .iter()
            .zip(&p.residues)
            .map(|(c, &r)| c * Rat::from_integer(r))
            .sum();
        let pairing = *pairing.numer();
        if pairing.rem_euclid(p.stabilizer_order) == 0 {
            acc += i64::from(p.orientation);
        }
    }
    acc
}

/// Fiber data per level; several entries model different generic ε
/// perturbations and must agree.
pub type FiberData = BTreeMap<WeightVector, Vec<ReducedFiberModel>>;

/// `Q^spin(M_μ)` over every integral level of a box.
pub fn reduced_profile(
    model: &FixedPointModel,
    image: &MomentImage,
    fibers: &FiberData,
    bounds: &LatticeBox,
) -> Result<BTreeMap<WeightVector, i64>> {
    let beta = model.generic_polarization();
    let global = global_index(model, &beta)?;
    let mut out = BTreeMap::new();
    for mu in bounds.lattice_points() {
        out.insert(mu.clone(), level_value(&global, image, fibers, &mu, None)?);
    }
    Ok(out)
}

fn level_value(
    global: &FormalCharacter,
    image: &MomentImage,
    fibers: &FiberData,
    mu: &WeightVector,
    polarized: Option<&FormalCharacter>,
) -> Result<i64> {
    let interior = image.position(mu) == Position::Interior;
    let dichotomy = if interior {
        mult_at(polarized.unwrap_or(global), mu)
    } else {
        0
    };
    if let Some(variants) = fibers.get(mu) {
        let values: Vec<i64> = variants.iter().map(|f| qspin_point(f, mu)).collect();
        if values.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::InvalidInput(format!(
                "fiber data at {mu} disagrees across perturbations: {values:?}"
            )));
        }
        let q = values[0];
        if q != dichotomy {
            return Err(Error::InvalidInput(format!(
                "fiber route ({q}) and dichotomy route ({dichotomy}) disagree at {mu}"
            )));
        }
        return Ok(q);
    }
    Ok(dichotomy)
}

/// One row of a `[Q,R] = 0` report.
#[derive(Clone, Debug, Serialize)]
pub struct QRRow {
    pub level: WeightVector,
    /// Multiplicity from the character side.
    pub m: i64,
    /// Index of the reduced space.
    pub q: i64,
    pub matched: bool,
}

/// Per-level comparison of character multiplicities against reduced-space
/// indices; `summary` is the conjunction of the row matches.
#[derive(Clone, Debug, Serialize)]
pub struct QRReport {
    pub rows: Vec<QRRow>,
    pub summary: bool,
}

/// Verifies `m_μ = Q^spin(M_μ)` for every integral μ in the box.
pub fn verify_qr_abelian(
    model: &FixedPointModel,
    image: &MomentImage,
    fibers: &FiberData,
    bounds: &LatticeBox,
) -> Result<QRReport> {
    let beta = model.generic_polarization();
    let global = global_index(model, &beta)?;
    let profile = reduced_profile(model, image, fibers, bounds)?;
    let mut rows = Vec::new();
    for (level, q) in profile {
        let m = mult_at(&global, &level);
        rows.push(QRRow {
            matched: m == q,
            level,
            m,
            q,
        });
    }
    let summary = rows.iter().all(|r| r.matched);
    Ok(QRReport { rows, summary })
}

/// An abelian chart of the slice over one chamber face: the reduced-space
/// machinery for every ancestor orbit whose representative sits on that
/// face. Non-compact single-vertex charts carry a frozen polarization
/// pointing into the image.
#[derive(Clone, Debug)]
pub struct SliceChart {
    /// Levi face (exact root subset) of the ancestor representatives
    /// covered by this chart.
    pub face: LeviClass,
    /// ρ of the inducing chamber, in ambient coordinates.
    pub rho_c: WeightVector,
    /// Chart coordinates: `μ - ρ_C = Σ c_i basis_i` defines the level.
    pub basis: Vec<WeightVector>,
    pub model: FixedPointModel,
    pub image: MomentImage,
    pub fibers: FiberData,
    /// For non-compact charts: the polarization whose expansion is the
    /// localized index over interior levels.
    pub polarization: Option<WeightVector>,
}

impl SliceChart {
    /// Chart coordinates of the level attached to an ancestor rep μ, if
    /// `μ - ρ_C` lies in the chart's coordinate span.
    pub fn level_of(&self, rep: &WeightVector) -> Option<WeightVector> {
        let target = rep.sub(&self.rho_c);
        solve_in_span(&target, &self.basis)
    }

    /// `Q^spin` of the reduced space at a chart level.
    pub fn profile_at(&self, level: &WeightVector) -> Result<i64> {
        let beta = self.model.generic_polarization();
        let global = global_index(&self.model, &beta)?;
        let polarized = match &self.polarization {
            Some(b) => Some(global_index(&self.model, b)?),
            None => None,
        };
        level_value(
            &global,
            &self.image,
            &self.fibers,
            level,
            polarized.as_ref(),
        )
    }
}

/// Exact solve of `target = Σ c_i basis_i` (basis of ambient rank ≤ 2 here;
/// general small Gaussian elimination).
fn solve_in_span(target: &WeightVector, basis: &[WeightVector]) -> Option<WeightVector> {
    let rows = target.rank();
    let cols = basis.len();
    let mut aug: Vec<Vec<Rat>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rat> = basis.iter().map(|b| b.coords()[i]).collect();
            row.push(target.coords()[i]);
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if let Some(p) = (r..rows).find(|&i| !aug[i][c].is_zero()) {
            aug.swap(r, p);
            let inv = aug[r][c];
            for x in aug[r].iter_mut() {
                *x /= inv;
            }
            for i in 0..rows {
                if i != r && !aug[i][c].is_zero() {
                    let f = aug[i][c];
                    let pivot_row = aug[r].clone();
                    for (x, p) in aug[i].iter_mut().zip(&pivot_row) {
                        *x -= f * p;
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
    }
    // Consistency: no leftover row with zero coefficients and nonzero rhs.
    for row in aug.iter().skip(r) {
        if !row[cols].is_zero() {
            return None;
        }
    }
    if pivot_cols.len() < cols {
        return None; // underdetermined charts are not used here
    }
    let mut coeffs = vec![Rat::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        coeffs[c] = aug[i][cols];
    }
    Some(WeightVector::new(coeffs))
}

/// Per-ancestor reduced-space indices `Q^spin(M_P)` for the `(h)`-ancestors
/// of `O`, each evaluated on its slice chart at the level dictated by the
/// ancestor.
pub fn ancestor_contributions(
    charts: &[SliceChart],
    orbit: &CoadjointOrbit,
    class: &LeviClass,
    datum: &RootDatum,
) -> Result<Vec<(CoadjointOrbit, i64)>> {
    let bx = sound_ancestor_box(orbit, datum);
    let mut out = Vec::new();
    for p in ancestors_of(orbit, class, datum, &bx) {
        let matching: Vec<&SliceChart> = charts
            .iter()
            .filter(|c| c.face.root_indices == p.levi().root_indices)
            .collect();
        if matching.is_empty() {
            return Err(Error::MissingAncestorData(p.to_string()));
        }
        let mut q = 0i64;
        for chart in matching {
            if let Some(level) = chart.level_of(p.rep()) {
                q += chart.profile_at(&level)?;
            }
        }
        out.push((p, q));
    }
    Ok(out)
}

/// The multiplicity of `π_O`: the sum of the ancestor contributions.
pub fn multiplicity_via_ancestors(
    charts: &[SliceChart],
    orbit: &CoadjointOrbit,
    class: &LeviClass,
    datum: &RootDatum,
) -> Result<i64> {
    Ok(ancestor_contributions(charts, orbit, class, datum)?
        .iter()
        .map(|(_, q)| q)
        .sum())
}

/// The full K-character assembled from the ancestor route: multiplicities
/// of every regular admissible label inside the box.
pub fn character_via_ancestors(
    charts: &[SliceChart],
    class: &LeviClass,
    datum: &RootDatum,
    bounds: &LatticeBox,
) -> Result<crate::characters::CharacterK> {
    let mut out = crate::characters::CharacterK::new();
    for label in bounds.scan(2) {
        if !crate::orbits::is_regular_admissible_label(&label, datum) {
            continue;
        }
        let orbit = CoadjointOrbit::through(&label, datum);
        let m = multiplicity_via_ancestors(charts, &orbit, class, datum)?;
        if m != 0 {
            out.add_label(label, m, datum);
        }
    }
    Ok(out)
}

/// Signed Duistermaat-Heckman density at an off-wall rational point of a
/// toric model: the polarized-cone sum
/// `Σ_p ε_p · 1[query ∈ φ(p) + Cone(a'_j)]` with the same signs as the
/// multiplicity expansion, so the density agrees with `mult_at` of the
/// global index at every off-wall integral point.
pub fn dh_density(model: &FixedPointModel, query: &WeightVector) -> Result<i64> {
    for p in &model.points {
        if p.tangent_weights.len() != model.rank {
            return Err(Error::InvalidInput(format!(
                "dh_density needs a toric model; point {} has {} weights at rank {}",
                p.id,
                p.tangent_weights.len(),
                model.rank
            )));
        }
    }
    let beta = model.generic_polarization();
    let mut acc = 0i64;
    for p in &model.points {
        let mut kept = 0usize;
        let mut gens = Vec::with_capacity(model.rank);
        for a in &p.tangent_weights {
            let pr = a.dot(&beta);
            debug_assert!(!pr.is_zero());
            if pr.is_positive() {
                kept += 1;
                gens.push(a.clone());
            } else {
                gens.push(a.neg());
            }
        }
        let target = query.sub(&p.phi);
        let coeffs = solve_in_span(&target, &gens).ok_or_else(|| {
            Error::InvalidInput(format!("degenerate tangent weights at point {}", p.id))
        })?;
        let any_zero = coeffs.coords().iter().any(Zero::is_zero);
        let any_negative = coeffs.coords().iter().any(Signed::is_negative);
        if any_zero && !any_negative {
            return Err(Error::OnWall);
        }
        if !any_negative && !any_zero {
            let sign = i64::from(p.orientation) * if kept.is_multiple_of(2) { 1 } else { -1 };
            acc += sign;
        }
    }
    Ok(acc)
}
