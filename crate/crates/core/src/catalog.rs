//! Builders for the worked examples: the projective line (with standard and
//! deformed connections), a product of two projective lines, Hirzebruch
//! surfaces and the SU(3) partial flag manifold. Each bundle packages the
//! abelian fixed-point model, the exact moment image, reduced-fiber data,
//! slice charts for the non-abelian route, golden characters and the Kirwan
//! set.
//!
//! Tangent and half-determinant weights of each model are frozen constants,
//! derived once from the homogeneous-connection moment maps and calibrated
//! so that the fixed-point index reproduces every golden character exactly
//! (the calibration is enforced by this module's tests and the acceptance
//! suite).

use std::collections::BTreeMap;
use std::fmt;

use crate::characters::{CharacterK, FormalCharacter};
use crate::error::{Error, Result};
use crate::fixedpoint::{FixedPoint, FixedPointModel, FreeComponent};
use crate::geometry::{MomentImage, Segment};
use crate::lie::{GroupTag, LeviClass, RootDatum, SemisimpleLabel, WeightVector};
use crate::rat::Rat;
use crate::reduction::{FiberData, FiberPoint, ReducedFiberModel, SliceChart};

/// Identifies one worked example with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExampleDescriptor {
    P1 { n: i64 },
    P1Deformed { n: i64, f: i64 },
    ProductP1,
    Hirzebruch { n1: i64, n2: i64 },
    Su3Flag { a: i64, b: i64 },
}

impl fmt::Display for ExampleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExampleDescriptor::P1 { n } => write!(f, "p1:{n}"),
            ExampleDescriptor::P1Deformed { n, f: ff } => write!(f, "p1_deformed:{n},{ff}"),
            ExampleDescriptor::ProductP1 => write!(f, "product_p1"),
            ExampleDescriptor::Hirzebruch { n1, n2 } => write!(f, "hirzebruch:{n1},{n2}"),
            ExampleDescriptor::Su3Flag { a, b } => write!(f, "su3_flag:{a},{b}"),
        }
    }
}

impl ExampleDescriptor {
    /// Parses `p1:4`, `p1_deformed:4,15`, `product_p1`, `hirzebruch:3,6`,
    /// `su3_flag:4,1`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let ints = |args: Option<&str>, n: usize| -> Result<Vec<i64>> {
            let raw = args.ok_or_else(|| Error::UnknownDescriptor(s.into()))?;
            let parsed: std::result::Result<Vec<i64>, _> =
                raw.split(',').map(|p| p.trim().parse::<i64>()).collect();
            let v = parsed.map_err(|_| Error::UnknownDescriptor(s.into()))?;
            if v.len() == n {
                Ok(v)
            } else {
                Err(Error::UnknownDescriptor(s.into()))
            }
        };
        match name {
            "p1" => Ok(ExampleDescriptor::P1 {
                n: ints(args, 1)?[0],
            }),
            "p1_deformed" => {
                let v = ints(args, 2)?;
                Ok(ExampleDescriptor::P1Deformed { n: v[0], f: v[1] })
            }
            "product_p1" => {
                if args.is_some() {
                    return Err(Error::UnknownDescriptor(s.into()));
                }
                Ok(ExampleDescriptor::ProductP1)
            }
            "hirzebruch" => {
                let v = ints(args, 2)?;
                Ok(ExampleDescriptor::Hirzebruch { n1: v[0], n2: v[1] })
            }
            "su3_flag" => {
                let v = ints(args, 2)?;
                Ok(ExampleDescriptor::Su3Flag { a: v[0], b: v[1] })
            }
            _ => Err(Error::UnknownDescriptor(s.into())),
        }
    }
}

/// Everything a worked example provides to the index, reduction and CLI
/// layers.
#[derive(Clone, Debug)]
pub struct ExampleBundle {
    pub descriptor: ExampleDescriptor,
    /// The acting group.
    pub datum: RootDatum,
    /// The abelian (torus) fixed-point model, when the example has one.
    pub model: Option<FixedPointModel>,
    /// Exact moment image of the abelian model.
    pub image: Option<MomentImage>,
    /// Reduced-fiber data per level (possibly several ε variants).
    pub fibers: FiberData,
    /// Slice charts per chamber face, for the ancestor route.
    pub charts: Vec<SliceChart>,
    /// Generic-stabilizer class used by the ancestor route.
    pub h_class: Option<LeviClass>,
    /// Finite slice character for torus holomorphic induction.
    pub h_weights: Option<FormalCharacter>,
    /// ρ of the inducing chamber for `h_weights`.
    pub rho_c: Option<WeightVector>,
    /// Golden abelian character (exact multiplicity map, full support).
    pub golden_t: Option<BTreeMap<WeightVector, i64>>,
    /// Golden K-character.
    pub golden_k: Option<CharacterK>,
    /// Kirwan set: exact segments in the closed positive chamber.
    pub kirwan: Vec<Segment>,
}

/// Builds the bundle of a descriptor.
pub fn build(desc: &ExampleDescriptor) -> Result<ExampleBundle> {
    match desc {
        ExampleDescriptor::P1 { n } => build_p1(*n),
        ExampleDescriptor::P1Deformed { n, f } => build_p1_deformed(*n, *f),
        ExampleDescriptor::ProductP1 => build_product(),
        ExampleDescriptor::Hirzebruch { n1, n2 } => build_hirzebruch(*n1, *n2),
        ExampleDescriptor::Su3Flag { a, b } => build_su3_flag(*a, *b),
    }
}

/// The Kirwan set of an example, as exact segments.
pub fn kirwan_image(desc: &ExampleDescriptor) -> Result<Vec<Segment>> {
    Ok(build(desc)?.kirwan)
}

fn wv(coords: &[i64]) -> WeightVector {
    WeightVector::from_ints(coords)
}

fn halves(coords: &[i64]) -> WeightVector {
    WeightVector::new(coords.iter().map(|&c| Rat::new(c, 2)).collect())
}

fn point_fiber(mu: &WeightVector, orientation: i8) -> ReducedFiberModel {
    ReducedFiberModel {
        points: vec![FiberPoint {
            orientation,
            stabilizer_order: 1,
            half_det_weight: mu.clone(),
            residues: vec![0; mu.rank()],
        }],
    }
}

fn p1_points(n: i64) -> Vec<FixedPoint> {
    vec![
        FixedPoint {
            id: "p-".into(),
            tangent_weights: vec![wv(&[-1])],
            s_weight: halves(&[-1]),
            orientation: 1,
            phi: halves(&[-1]),
        },
        FixedPoint {
            id: "p+".into(),
            tangent_weights: vec![wv(&[1])],
            s_weight: halves(&[2 * n + 1]),
            orientation: 1,
            phi: halves(&[2 * n + 1]),
        },
    ]
}

fn p1_golden(n: i64) -> BTreeMap<WeightVector, i64> {
    let mut g = BTreeMap::new();
    if n >= 0 {
        for k in 0..=n {
            g.insert(wv(&[k]), 1);
        }
    } else if n <= -2 {
        for k in n + 1..=-1 {
            g.insert(wv(&[k]), -1);
        }
    }
    g
}

fn build_p1(n: i64) -> Result<ExampleBundle> {
    let image = MomentImage::from_vertices(vec![halves(&[-1]), halves(&[2 * n + 1])])?;
    let free = if image.contains_relint(&wv(&[0])) {
        vec![FreeComponent {
            label: "circle".into(),
            phi: wv(&[0]),
        }]
    } else {
        vec![]
    };
    let model = FixedPointModel::new(1, p1_points(n), free)?;
    // All non-empty reduced spaces are points; the reduced orientation is
    // the sign of the curvature side (+1 for n ≥ 0, -1 for n ≤ -2). Two
    // entries per level model the two generic ε sides.
    let mut fibers: FiberData = BTreeMap::new();
    if n >= 0 {
        for k in 0..=n {
            let f = point_fiber(&wv(&[k]), 1);
            fibers.insert(wv(&[k]), vec![f.clone(), f]);
        }
    } else if n <= -2 {
        for k in n + 1..=-1 {
            let f = point_fiber(&wv(&[k]), -1);
            fibers.insert(wv(&[k]), vec![f.clone(), f]);
        }
    }
    Ok(ExampleBundle {
        descriptor: ExampleDescriptor::P1 { n },
        datum: RootDatum::new(GroupTag::Torus(1)),
        kirwan: vec![Segment::new(halves(&[-1]), halves(&[2 * n + 1]))],
        golden_t: Some(p1_golden(n)),
        golden_k: None,
        h_class: None,
        h_weights: None,
        rho_c: None,
        charts: vec![],
        fibers,
        image: Some(image),
        model: Some(model),
    })
}

fn build_p1_deformed(n: i64, f: i64) -> Result<ExampleBundle> {
    if f < 0 || n < 0 {
        return Err(Error::UnknownDescriptor(format!(
            "p1_deformed needs n, f ≥ 0 (got {n}, {f})"
        )));
    }
    let mut bundle = build_p1(n)?;
    bundle.descriptor = ExampleDescriptor::P1Deformed { n, f };
    if f <= n + 1 {
        // No fold: the deformation does not change any stored data.
        return Ok(bundle);
    }
    // Deformed moment map on the fiber coordinate x ∈ [0, 1]:
    //   Φ(x) = f x² + (n + 1 - f) x - 1/2,
    // dipping to Φ(x*) = -1/2 - (f - n - 1)²/(4 f) below the p- value.
    let fnum = Rat::from_integer(f);
    let drop = (Rat::from_integer(f - n - 1) * Rat::from_integer(f - n - 1))
        / (Rat::from_integer(4) * fnum);
    let low = Rat::new(-1, 2) - drop;
    let image =
        MomentImage::from_vertices(vec![WeightVector::new(vec![low]), halves(&[2 * n + 1])])?;
    // Folded levels carry two reduced points with opposite orientations.
    let fold_lo = crate::rat::floor(&low) + 1;
    for k in fold_lo..=-1 {
        let level = wv(&[k]);
        let fold = ReducedFiberModel {
            points: vec![
                point_fiber(&level, 1).points.remove(0),
                point_fiber(&level, -1).points.remove(0),
            ],
        };
        bundle.fibers.insert(level, vec![fold.clone(), fold]);
    }
    bundle.kirwan = vec![Segment::new(
        WeightVector::new(vec![low]),
        halves(&[2 * n + 1]),
    )];
    bundle.image = Some(image);
    Ok(bundle)
}

fn build_product() -> Result<ExampleBundle> {
    let mk = |id: &str, w1: i64, w2: i64, s: i64| FixedPoint {
        id: id.into(),
        tangent_weights: vec![wv(&[w1]), wv(&[w2])],
        s_weight: wv(&[s]),
        orientation: 1,
        phi: wv(&[s]),
    };
    let model = FixedPointModel::new(
        1,
        vec![
            mk("mm", -1, -1, -1),
            mk("mp", -1, 1, 0),
            mk("pm", 1, -1, 0),
            mk("pp", 1, 1, 1),
        ],
        vec![FreeComponent {
            label: "level0".into(),
            phi: wv(&[0]),
        }],
    )?;
    let image = MomentImage::from_vertices(vec![wv(&[-1]), wv(&[1])])?;
    let mut golden = BTreeMap::new();
    golden.insert(wv(&[0]), 1);
    Ok(ExampleBundle {
        descriptor: ExampleDescriptor::ProductP1,
        datum: RootDatum::new(GroupTag::Torus(1)),
        kirwan: vec![Segment::new(wv(&[-1]), wv(&[1]))],
        golden_t: Some(golden),
        golden_k: None,
        h_class: None,
        h_weights: None,
        rho_c: None,
        charts: vec![],
        // The level-zero reduction is not a finite point set; only the
        // residual route defines the profile there.
        fibers: BTreeMap::new(),
        image: Some(image),
        model: Some(model),
    })
}

/// Hirzebruch fixed-point data in the standard torus basis; the four points
/// are the coordinate flags, with the homogeneous-connection moment values.
fn hirzebruch_model(n1: i64, n2: i64) -> Result<FixedPointModel> {
    let d = n2 - n1;
    let points = vec![
        FixedPoint {
            id: "A".into(),
            tangent_weights: vec![wv(&[1, -1]), wv(&[0, -1])],
            s_weight: halves(&[1, -2 * n1 - 2]),
            orientation: 1,
            phi: halves(&[1, -2 * n1 - 2]),
        },
        FixedPoint {
            id: "B".into(),
            tangent_weights: vec![wv(&[1, -1]), wv(&[0, 1])],
            s_weight: halves(&[1, 2 * d]),
            orientation: 1,
            phi: halves(&[1, 2 * d]),
        },
        FixedPoint {
            id: "C".into(),
            tangent_weights: vec![wv(&[-1, 1]), wv(&[-1, 0])],
            s_weight: halves(&[-2 * n1 - 2, 1]),
            orientation: 1,
            phi: halves(&[-2 * n1 - 2, 1]),
        },
        FixedPoint {
            id: "D".into(),
            tangent_weights: vec![wv(&[-1, 1]), wv(&[1, 0])],
            s_weight: halves(&[2 * d, 1]),
            orientation: 1,
            phi: halves(&[2 * d, 1]),
        },
    ];
    let image = MomentImage::from_vertices(points.iter().map(|p| p.phi.clone()).collect())?;
    let free = if image.contains_relint(&wv(&[0, 0])) {
        vec![FreeComponent {
            label: "level0".into(),
            phi: wv(&[0, 0]),
        }]
    } else {
        vec![]
    };
    FixedPointModel::new(2, points, free)
}

fn hirzebruch_golden_k(n1: i64, n2: i64, datum: &RootDatum) -> Option<CharacterK> {
    if n1 < 0 || n2 < 0 {
        return None;
    }
    let mut labels = Vec::new();
    if n1 >= n2 {
        for k in n1 - n2..=n1 {
            labels.push((halves(&[1, -2 * k - 1]), 1));
        }
    } else {
        for k in 0..=n1 {
            labels.push((halves(&[1, -2 * k - 1]), 1));
        }
        for k in 0..=n2 - n1 - 2 {
            labels.push((halves(&[2 * k + 3, 1]), -1));
        }
    }
    Some(CharacterK::from_labels(&labels, datum))
}

fn build_hirzebruch(n1: i64, n2: i64) -> Result<ExampleBundle> {
    let datum = RootDatum::new(GroupTag::U2);
    let model = hirzebruch_model(n1, n2)?;
    let image = MomentImage::from_vertices(model.points.iter().map(|p| p.phi.clone()).collect())?;
    let rho_c = halves(&[1, -1]);
    let d = n2 - n1;

    // Slice character over the torus: L restricted to the fiber line gives
    // Σ_{k=0}^{n2} t2^{k - n1} when n2 ≥ 0.
    let h_weights = if n2 >= 0 {
        let mut tail = BTreeMap::new();
        for k in 0..=n2 {
            tail.insert(wv(&[0, k - n1]), 1);
        }
        Some(FormalCharacter::from_tail(2, tail))
    } else {
        None
    };

    // Slice charts (face: the full torus, i.e. regular orbits are their own
    // ancestors). For n1 ≥ n2 the slice is a single compact fiber line; for
    // n2 > n1 it crosses the chamber wall and splits into two vertex discs
    // with inward polarizations and one calibrated orientation flip on the
    // reflected side.
    let torus_face = datum.stabilizer_classes().into_iter().next().unwrap();
    let basis = vec![wv(&[1, 0]), wv(&[0, 1])];
    let mut charts = Vec::new();
    if n1 >= n2 {
        let y0 = FixedPoint {
            id: "y0".into(),
            tangent_weights: vec![wv(&[0, -1])],
            s_weight: halves(&[0, -2 * n1 - 1]),
            orientation: 1,
            phi: halves(&[0, -2 * n1 - 1]),
        };
        let y1 = FixedPoint {
            id: "y1".into(),
            tangent_weights: vec![wv(&[0, 1])],
            s_weight: halves(&[0, 2 * d + 1]),
            orientation: 1,
            phi: halves(&[0, 2 * d + 1]),
        };
        let chart_image =
            MomentImage::from_vertices(vec![halves(&[0, -2 * n1 - 1]), halves(&[0, 2 * d + 1])])?;
        // Interior integral levels (0, c) with -n1 - 1/2 < c < d + 1/2.
        let mut fibers: FiberData = BTreeMap::new();
        for c in -n1..=d {
            fibers.insert(wv(&[0, c]), vec![point_fiber(&wv(&[0, c]), 1)]);
        }
        charts.push(SliceChart {
            face: torus_face.clone(),
            rho_c: rho_c.clone(),
            basis: basis.clone(),
            model: FixedPointModel::new(2, vec![y0, y1], vec![])?,
            image: chart_image,
            fibers,
            polarization: None,
        });
    } else {
        // Component around y0, up to the wall level (0, 1).
        let y0 = FixedPoint {
            id: "y0".into(),
            tangent_weights: vec![wv(&[0, -1])],
            s_weight: halves(&[0, -2 * n1 - 1]),
            orientation: 1,
            phi: halves(&[0, -2 * n1 - 1]),
        };
        let mut fibers: FiberData = BTreeMap::new();
        for c in -n1..=0 {
            fibers.insert(wv(&[0, c]), vec![point_fiber(&wv(&[0, c]), 1)]);
        }
        charts.push(SliceChart {
            face: torus_face.clone(),
            rho_c: rho_c.clone(),
            basis: basis.clone(),
            model: FixedPointModel::new(2, vec![y0], vec![])?,
            image: MomentImage::from_vertices(vec![halves(&[0, -2 * n1 - 1]), wv(&[0, 1])])?,
            fibers,
            polarization: Some(wv(&[0, 1])),
        });
        // Reflected component around w·y1, from the wall (0, 1) out to the
        // vertex; the reflected orientation is -1 (calibrated against the
        // golden character).
        let wy1 = FixedPoint {
            id: "wy1".into(),
            tangent_weights: vec![wv(&[1, 0])],
            s_weight: halves(&[2 * d - 1, 2]),
            orientation: -1,
            phi: halves(&[2 * d - 1, 2]),
        };
        let mut fibers: FiberData = BTreeMap::new();
        for c in 1..=d - 2 {
            fibers.insert(wv(&[c, 1]), vec![point_fiber(&wv(&[c, 1]), -1)]);
        }
        charts.push(SliceChart {
            face: torus_face,
            rho_c: rho_c.clone(),
            basis,
            model: FixedPointModel::new(2, vec![wy1], vec![])?,
            image: MomentImage::from_vertices(vec![wv(&[0, 1]), halves(&[2 * d - 1, 2])])?,
            fibers,
            polarization: Some(wv(&[-1, 0])),
        });
    }

    // Kirwan set in the closed chamber {x ≥ y}.
    let corner = halves(&[1, 1]);
    let kirwan = if n1 >= n2 {
        vec![Segment::new(halves(&[1, 2 * d]), halves(&[1, -2 * n1 - 2]))]
    } else {
        vec![
            Segment::new(corner.clone(), halves(&[2 * d, 1])),
            Segment::new(corner, halves(&[1, -2 * n1 - 2])),
        ]
    };

    // Reduced fibers of the T-model: every ±1 multiplicity region of the
    // signed measure consists of single-point reductions (red +1, blue -1);
    // the regions are cut out by the weight-string combinatorics.
    let mut fibers: FiberData = BTreeMap::new();
    if n1 >= 0 && n2 >= 0 {
        for x in -n1 - 2..=(d.max(0) + 2) {
            for y in -n1 - 2..=(d.max(0) + 2) {
                let level = wv(&[x, y]);
                if n1 >= n2 {
                    if x <= 0 && y <= 0 && (-n1..=d).contains(&(x + y)) {
                        fibers.insert(level.clone(), vec![point_fiber(&level, 1)]);
                    }
                } else {
                    if x <= 0 && y <= 0 && x + y >= -n1 {
                        fibers.insert(level.clone(), vec![point_fiber(&level, 1)]);
                    } else if x >= 1 && y >= 1 && x + y <= d {
                        fibers.insert(level.clone(), vec![point_fiber(&level, -1)]);
                    }
                }
            }
        }
    }

    Ok(ExampleBundle {
        descriptor: ExampleDescriptor::Hirzebruch { n1, n2 },
        golden_k: hirzebruch_golden_k(n1, n2, &datum),
        datum,
        kirwan,
        golden_t: None,
        h_class: Some(RootDatum::new(GroupTag::U2).stabilizer_classes().remove(0)),
        h_weights,
        rho_c: Some(rho_c),
        charts,
        fibers,
        image: Some(image),
        model: Some(model),
    })
}

fn su3_flag_golden(a: i64, b: i64, datum: &RootDatum) -> Option<CharacterK> {
    if a < 4 || b < 1 {
        return None;
    }
    let mut labels = Vec::new();
    for k in 0..b {
        labels.push((wv(&[k + 1, 1]), -1));
    }
    for j in 0..=a - 4 {
        labels.push((wv(&[1, j + 1]), -1));
    }
    Some(CharacterK::from_labels(&labels, datum))
}

fn build_su3_flag(a: i64, b: i64) -> Result<ExampleBundle> {
    if a < 1 || b < 1 {
        return Err(Error::UnknownDescriptor(format!(
            "su3_flag needs a, b ≥ 1 (got {a}, {b})"
        )));
    }
    let datum = RootDatum::new(GroupTag::Su3);
    let su2_class = crate::orbits::class_with_label(SemisimpleLabel::Su2, &datum).unwrap();

    // ω1-axis chart: the slice fiber line with moment values (b - 1/2) ω1
    // and (1/2 - a) ω1 after the ρ_C twist; stabilizer faces keyed by the
    // vanishing root subset of the dominant representatives.
    let face_w1 = crate::lie::stabilizer_levi(&wv(&[1, 0]), &datum);
    let face_w2 = crate::lie::stabilizer_levi(&wv(&[0, 1]), &datum);

    let chart_w1 = {
        let hi = FixedPoint {
            id: "w1-hi".into(),
            tangent_weights: vec![wv(&[-1])],
            s_weight: halves(&[2 * b - 1]),
            orientation: 1,
            phi: halves(&[2 * b - 1]),
        };
        let lo = FixedPoint {
            id: "w1-lo".into(),
            tangent_weights: vec![wv(&[1])],
            s_weight: halves(&[1 - 2 * a]),
            orientation: 1,
            phi: halves(&[1 - 2 * a]),
        };
        let mut fibers: FiberData = BTreeMap::new();
        for k in 1 - a..=b - 1 {
            fibers.insert(wv(&[k]), vec![point_fiber(&wv(&[k]), -1)]);
        }
        SliceChart {
            face: face_w1,
            rho_c: halves(&[3, 0]),
            basis: vec![wv(&[1, 0])],
            model: FixedPointModel::new(1, vec![hi, lo], vec![])?,
            image: MomentImage::from_vertices(vec![halves(&[1 - 2 * a]), halves(&[2 * b - 1])])?,
            fibers,
            polarization: None,
        }
    };

    let chart_w2 = {
        let lo = FixedPoint {
            id: "w2-lo".into(),
            tangent_weights: vec![wv(&[1])],
            s_weight: halves(&[-2 * b - 5]),
            orientation: 1,
            phi: halves(&[-2 * b - 5]),
        };
        let hi = FixedPoint {
            id: "w2-hi".into(),
            tangent_weights: vec![wv(&[-1])],
            s_weight: halves(&[2 * a - 7]),
            orientation: 1,
            phi: halves(&[2 * a - 7]),
        };
        let mut fibers: FiberData = BTreeMap::new();
        for k in -b - 2..=a - 4 {
            fibers.insert(wv(&[k]), vec![point_fiber(&wv(&[k]), -1)]);
        }
        SliceChart {
            face: face_w2,
            rho_c: halves(&[0, 3]),
            basis: vec![wv(&[0, 1])],
            model: FixedPointModel::new(1, vec![lo, hi], vec![])?,
            image: MomentImage::from_vertices(vec![halves(&[-2 * b - 5]), halves(&[2 * a - 7])])?,
            fibers,
            polarization: None,
        }
    };

    let kirwan = vec![
        Segment::new(wv(&[0, 0]), wv(&[b + 1, 0])),
        Segment::new(wv(&[0, 0]), wv(&[0, a - 2])),
    ];

    Ok(ExampleBundle {
        descriptor: ExampleDescriptor::Su3Flag { a, b },
        golden_k: su3_flag_golden(a, b, &datum),
        datum,
        kirwan,
        golden_t: None,
        h_class: Some(su2_class),
        h_weights: None,
        rho_c: None,
        charts: vec![chart_w1, chart_w2],
        fibers: BTreeMap::new(),
        image: None,
        model: None,
    })
}
