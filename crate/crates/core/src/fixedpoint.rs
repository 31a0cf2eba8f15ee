//! Equivariant Spin^c index of an abstract torus manifold presented by
//! isolated fixed-point data, globally (Atiyah-Bott) and localized per
//! component of the Kirwan-vector-field zero set (Witten decomposition).
//!
//! The contribution of a fixed point `p` with complex tangent weights
//! `a_j`, half-determinant weight `s` and orientation `ε` is the polarized
//! expansion of
//!
//! ```text
//!     ε · t^s · Π_j (1 - t^{-a_j})^{-1}
//! ```
//!
//! A generic covector β selects, for each `a_j`, which geometric-series
//! expansion to use: weights are flipped into the open half-space of β,
//! each kept (unflipped) weight costs a sign, and the symmetrized offset
//! `s + ½ Σ_j a'_j` over the polarized weights `a'_j` is integral for any
//! Spin^c model. Window values of the summed expansion are independent of
//! β; the Witten decomposition instead polarizes each point by its own
//! moment value and books the level-zero component as a residual.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::{ConeTerm, FormalCharacter};
use crate::error::{Error, Result};
use crate::lie::{GroupTag, RootDatum, WeightVector};
use crate::rat::Rat;

/// An isolated fixed point of the torus action.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixedPoint {
    pub id: String,
    /// Complex T-module weights of the tangent space; all nonzero integral.
    pub tangent_weights: Vec<WeightVector>,
    /// Half the weight of `det(S)` at the point; `2 s` is integral.
    pub s_weight: WeightVector,
    /// Ratio of the manifold orientation to the complex orientation of the
    /// tangent weights.
    pub orientation: i8,
    /// Moment value `Φ_S(p)`; coincides with `s_weight` by the Kostant
    /// relations, asserted at model construction.
    pub phi: WeightVector,
}

/// A free (non-fixed-point) component label of the zero set, bookkeeping
/// only: its localized index is recovered as a residual.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FreeComponent {
    pub label: String,
    pub phi: WeightVector,
}

/// An abstract T-manifold: isolated fixed points plus free component
/// labels of the Kirwan zero set.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixedPointModel {
    pub rank: usize,
    pub points: Vec<FixedPoint>,
    pub free_components: Vec<FreeComponent>,
}

impl FixedPointModel {
    pub fn new(
        rank: usize,
        points: Vec<FixedPoint>,
        free_components: Vec<FreeComponent>,
    ) -> Result<Self> {
        for p in &points {
            if p.tangent_weights.is_empty() {
                return Err(Error::InvalidInput(format!(
                    "point {} has no tangent weights",
                    p.id
                )));
            }
            for a in &p.tangent_weights {
                if a.is_zero() || !a.is_integral() || a.rank() != rank {
                    return Err(Error::InvalidInput(format!(
                        "point {}: bad tangent weight {a}",
                        p.id
                    )));
                }
            }
            if !p.s_weight.is_rho_shifted() {
                return Err(Error::InvalidInput(format!(
                    "point {}: 2·s_weight must be integral",
                    p.id
                )));
            }
            if p.phi != p.s_weight {
                return Err(Error::InvalidInput(format!(
                    "point {}: moment value differs from the det(S) half-weight",
                    p.id
                )));
            }
            if p.orientation != 1 && p.orientation != -1 {
                return Err(Error::InvalidInput(format!(
                    "point {}: orientation must be ±1",
                    p.id
                )));
            }
            // Spin^c integrality: the symmetrized offset is integral for
            // every polarization iff it is for one.
            let mut half_sum = WeightVector::zero(rank);
            for a in &p.tangent_weights {
                half_sum = half_sum.add(a);
            }
            if !p
                .s_weight
                .add(&half_sum.scale(Rat::new(1, 2)))
                .is_integral()
            {
                return Err(Error::InvalidInput(format!(
                    "point {}: Spin^c integrality fails (s + ½Σa not in the lattice)",
                    p.id
                )));
            }
        }
        Ok(FixedPointModel {
            rank,
            points,
            free_components,
        })
    }

    pub fn datum(&self) -> RootDatum {
        RootDatum::new(GroupTag::Torus(self.rank))
    }

    /// A deterministic covector generic for every tangent weight of the
    /// model: the first `(1, k, k², ...)` with all pairings nonzero.
    pub fn generic_polarization(&self) -> WeightVector {
        'outer: for k in 1i64.. {
            let mut c = Vec::with_capacity(self.rank);
            let mut pw = 1i64;
            for _ in 0..self.rank {
                c.push(Rat::from_integer(pw));
                pw *= k;
            }
            let beta = WeightVector::new(c);
            for p in &self.points {
                for a in &p.tangent_weights {
                    if a.dot(&beta).is_zero() {
                        continue 'outer;
                    }
                }
            }
            return beta;
        }
        unreachable!()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("model serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: FixedPointModel = serde_json::from_value(v.clone())
            .map_err(|e| Error::InvalidInput(format!("bad model JSON: {e}")))?;
        FixedPointModel::new(raw.rank, raw.points, raw.free_components)
    }
}

/// The polarized cone term of one fixed point for the covector `beta`.
pub fn local_term(p: &FixedPoint, beta: &WeightVector) -> Result<ConeTerm> {
    let mut gens = Vec::with_capacity(p.tangent_weights.len());
    let mut kept = 0usize;
    let mut offset = p.s_weight.clone();
    for a in &p.tangent_weights {
        let pairing = a.dot(beta);
        if pairing.is_zero() {
            return Err(Error::NonGenericPolarization {
                weight: a.to_string(),
            });
        }
        let polarized = if pairing.is_positive() {
            kept += 1;
            a.clone()
        } else {
            a.neg()
        };
        offset = offset.add(&polarized.scale(Rat::new(1, 2)));
        gens.push(polarized);
    }
    let sign = i64::from(p.orientation) * if kept.is_multiple_of(2) { 1 } else { -1 };
    debug_assert!(
        offset.is_integral(),
        "Spin^c integrality violated at {}",
        p.id
    );
    ConeTerm::new(sign, offset, gens, beta.clone())
}

/// The equivariant index as a formal character: the sum of all polarized
/// fixed-point terms. Window values do not depend on the (generic) `beta`.
pub fn global_index(model: &FixedPointModel, beta: &WeightVector) -> Result<FormalCharacter> {
    let mut f = FormalCharacter::zero(model.rank);
    for p in &model.points {
        f.push_term(local_term(p, beta)?);
    }
    Ok(f)
}

/// Witten decomposition: one formal character per component of the Kirwan
/// zero set, keyed by the exact moment value of the component. Fixed points
/// at nonzero levels are polarized by their own moment value (points
/// sharing a level are merged into one term); the free component is the
/// residual `global - Σ others`, so the map sums to the global index by
/// construction.
pub fn witten_decomposition(
    model: &FixedPointModel,
) -> Result<BTreeMap<WeightVector, FormalCharacter>> {
    let zero = WeightVector::zero(model.rank);
    let mut free_labels: Vec<WeightVector> = model
        .free_components
        .iter()
        .map(|f| f.phi.clone())
        .collect();
    free_labels.sort();
    free_labels.dedup();
    if free_labels.len() > 1 {
        return Err(Error::UnhandledComponentGeometry(
            "more than one free component level".into(),
        ));
    }
    let free_label = free_labels.into_iter().next();
    for p in &model.points {
        if p.phi.is_zero() && free_label.as_ref() != Some(&zero) {
            return Err(Error::UnhandledComponentGeometry(format!(
                "fixed point {} sits at level zero but no free component is declared there",
                p.id
            )));
        }
    }

    let mut out: BTreeMap<WeightVector, FormalCharacter> = BTreeMap::new();
    let mut localized_sum = FormalCharacter::zero(model.rank);
    for p in &model.points {
        if Some(&p.phi) == free_label.as_ref() {
            continue; // absorbed into the residual component
        }
        let term = local_term(p, &p.phi)?;
        let entry = out
            .entry(p.phi.clone())
            .or_insert_with(|| FormalCharacter::zero(model.rank));
        entry.push_term(term.clone());
        localized_sum.push_term(term);
    }
    if let Some(label) = free_label {
        let beta = model.generic_polarization();
        let residual = global_index(model, &beta)?.sub(&localized_sum);
        out.insert(label, residual);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{mult_at, window};
    use crate::geometry::LatticeBox;
    use rand::{Rng, SeedableRng};

    fn wv1(k: i64) -> WeightVector {
        WeightVector::from_ints(&[k])
    }

    fn half(p: i64) -> WeightVector {
        WeightVector::from_pairs(&[(p, 2)])
    }

    /// The projective-line model with bundle parameter n: two fixed points
    /// with tangent weights ∓1 and moment values -1/2 and n + 1/2.
    fn p1_model(n: i64) -> FixedPointModel {
        let points = vec![
            FixedPoint {
                id: "p-".into(),
                tangent_weights: vec![wv1(-1)],
                s_weight: half(-1),
                orientation: 1,
                phi: half(-1),
            },
            FixedPoint {
                id: "p+".into(),
                tangent_weights: vec![wv1(1)],
                s_weight: half(2 * n + 1),
                orientation: 1,
                phi: half(2 * n + 1),
            },
        ];
        let free = if n >= 0 {
            vec![FreeComponent {
                label: "circle".into(),
                phi: wv1(0),
            }]
        } else {
            vec![]
        };
        FixedPointModel::new(1, points, free).unwrap()
    }

    fn window_vals(f: &FormalCharacter, lo: i64, hi: i64) -> Vec<i64> {
        window(f, &LatticeBox::new(vec![lo], vec![hi]).unwrap()).values
    }

    #[test]
    fn p1_local_terms() {
        let m = p1_model(4);
        // p- with beta = -1 gives Q_{-1/2}: -1 on k ≤ -1.
        let t = local_term(&m.points[0], &wv1(-1)).unwrap();
        let f = FormalCharacter::from_terms(1, vec![t]);
        assert_eq!(window_vals(&f, -4, 1), vec![-1, -1, -1, -1, 0, 0]);
        // p+ with beta = +1 gives Q_{9/2}: -1 on k ≥ 5.
        let t = local_term(&m.points[1], &wv1(1)).unwrap();
        let f = FormalCharacter::from_terms(1, vec![t]);
        assert_eq!(window_vals(&f, 3, 7), vec![0, 0, -1, -1, -1]);
        // Opposite polarizations expand the same rational function: the two
        // expansions of (1 - t^{-a})^{-1} differ by the full series.
        let plus = FormalCharacter::from_terms(1, vec![local_term(&m.points[0], &wv1(1)).unwrap()]);
        let minus =
            FormalCharacter::from_terms(1, vec![local_term(&m.points[0], &wv1(-1)).unwrap()]);
        for k in -6..=6 {
            assert_eq!(mult_at(&plus, &wv1(k)) - mult_at(&minus, &wv1(k)), 1);
        }
        // Zero pairing is rejected.
        assert!(matches!(
            local_term(&m.points[0], &wv1(0)),
            Err(Error::NonGenericPolarization { .. })
        ));
    }

    #[test]
    fn p1_global_closed_forms() {
        let beta = wv1(1);
        // n = 4: Σ_{k=0}^{4} t^k.
        let f = global_index(&p1_model(4), &beta).unwrap();
        assert_eq!(
            window_vals(&f, -10, 10),
            (-10..=10)
                .map(|k| i64::from((0..=4).contains(&k)))
                .collect::<Vec<_>>()
        );
        // n = -1: zero.
        let f = global_index(&p1_model(-1), &beta).unwrap();
        assert!(window_vals(&f, -10, 10).iter().all(|&v| v == 0));
        // n = -3: -(t^{-2} + t^{-1}).
        let f = global_index(&p1_model(-3), &beta).unwrap();
        assert_eq!(
            window_vals(&f, -10, 10),
            (-10..=10)
                .map(|k| if k == -2 || k == -1 { -1 } else { 0 })
                .collect::<Vec<_>>()
        );
        // n = 0: t^0.
        let f = global_index(&p1_model(0), &beta).unwrap();
        assert_eq!(window_vals(&f, -3, 3), vec![0, 0, 0, 1, 0, 0, 0]);
    }

    #[test]
    fn p1_witten_decomposition() {
        let m = p1_model(4);
        let dec = witten_decomposition(&m).unwrap();
        assert_eq!(dec.len(), 3);
        let q_minus = dec.get(&half(-1)).unwrap();
        let q_zero = dec.get(&wv1(0)).unwrap();
        let q_plus = dec.get(&half(9)).unwrap();
        assert_eq!(
            window_vals(q_minus, -10, 15),
            (-10..=15)
                .map(|k| if k <= -1 { -1 } else { 0 })
                .collect::<Vec<_>>()
        );
        assert_eq!(window_vals(q_zero, -10, 15), vec![1; 26]);
        assert_eq!(
            window_vals(q_plus, -10, 15),
            (-10..=15)
                .map(|k| if k >= 5 { -1 } else { 0 })
                .collect::<Vec<_>>()
        );
        // The decomposition sums to the global index (exact, on windows).
        let total = dec
            .values()
            .fold(FormalCharacter::zero(1), |acc, f| acc.add(f));
        let global = global_index(&m, &m.generic_polarization()).unwrap();
        assert_eq!(window_vals(&total, -12, 12), window_vals(&global, -12, 12));
    }

    /// Product of two projective lines with n = 0, diagonal circle action.
    fn product_model() -> FixedPointModel {
        let mk = |id: &str, w1: i64, w2: i64, s: i64| FixedPoint {
            id: id.into(),
            tangent_weights: vec![wv1(w1), wv1(w2)],
            s_weight: wv1(s),
            orientation: 1,
            phi: wv1(s),
        };
        FixedPointModel::new(
            1,
            vec![
                mk("mm", -1, -1, -1),
                mk("mp", -1, 1, 0),
                mk("pm", 1, -1, 0),
                mk("pp", 1, 1, 1),
            ],
            vec![FreeComponent {
                label: "level0".into(),
                phi: wv1(0),
            }],
        )
        .unwrap()
    }

    #[test]
    fn product_decomposition() {
        let m = product_model();
        let dec = witten_decomposition(&m).unwrap();
        assert_eq!(dec.len(), 3);
        let at = |f: &FormalCharacter, k: i64| mult_at(f, &wv1(k));
        let q_m = dec.get(&wv1(-1)).unwrap();
        let q_0 = dec.get(&wv1(0)).unwrap();
        let q_p = dec.get(&wv1(1)).unwrap();
        for k in -8..=8i64 {
            assert_eq!(at(q_m, k), if k <= -2 { -k - 1 } else { 0 }, "Q_-1 at {k}");
            assert_eq!(at(q_p, k), if k >= 2 { k - 1 } else { 0 }, "Q_1 at {k}");
            // Residual: 1 - |k| (the decomposition identity fixes the sign).
            assert_eq!(at(q_0, k), 1 - k.abs(), "Q_0 at {k}");
            let total = at(q_m, k) + at(q_0, k) + at(q_p, k);
            assert_eq!(total, i64::from(k == 0), "total at {k}");
        }
    }

    #[test]
    fn single_point_model_equals_global() {
        // One fixed point at a nonzero level, no free component: the lone
        // Witten term is the whole index.
        let m = FixedPointModel::new(
            1,
            vec![FixedPoint {
                id: "p".into(),
                tangent_weights: vec![wv1(1)],
                s_weight: half(3),
                orientation: 1,
                phi: half(3),
            }],
            vec![],
        )
        .unwrap();
        let dec = witten_decomposition(&m).unwrap();
        assert_eq!(dec.len(), 1);
        let term = dec.get(&half(3)).unwrap();
        let global = global_index(&m, &half(3)).unwrap();
        assert_eq!(window_vals(term, -5, 8), window_vals(&global, -5, 8));
    }

    #[test]
    fn level_zero_point_needs_free_component() {
        let m = FixedPointModel::new(
            1,
            vec![FixedPoint {
                id: "p".into(),
                tangent_weights: vec![wv1(1), wv1(-1)],
                s_weight: wv1(0),
                orientation: 1,
                phi: wv1(0),
            }],
            vec![],
        )
        .unwrap();
        assert!(matches!(
            witten_decomposition(&m),
            Err(Error::UnhandledComponentGeometry(_))
        ));
    }

    #[test]
    fn polarization_independence() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for model in [p1_model(4), p1_model(-3), product_model()] {
            let bx = LatticeBox::centered(1, 9);
            let reference = window(
                &global_index(&model, &model.generic_polarization()).unwrap(),
                &bx,
            );
            let mut tried = 0;
            while tried < 8 {
                let beta = wv1(if rng.gen_bool(0.5) { 1 } else { -1 } * rng.gen_range(1..40));
                let Ok(f) = global_index(&model, &beta) else {
                    continue;
                };
                assert_eq!(window(&f, &bx), reference);
                tried += 1;
            }
        }
    }

    #[test]
    fn integrality_enforced() {
        // s = 0 with a single odd weight breaks s + ½Σa ∈ Λ.
        let bad = FixedPointModel::new(
            1,
            vec![FixedPoint {
                id: "bad".into(),
                tangent_weights: vec![wv1(1)],
                s_weight: wv1(0),
                orientation: 1,
                phi: wv1(0),
            }],
            vec![],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn model_json_roundtrip() {
        let m = p1_model(4);
        let j = m.to_json();
        let m2 = FixedPointModel::from_json(&j).unwrap();
        assert_eq!(m2.points.len(), 2);
        assert_eq!(m2.points[0].s_weight, half(-1));
        assert_eq!(m2.free_components.len(), 1);
    }
}
