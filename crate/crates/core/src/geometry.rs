//! Finite coordinate boxes, lattice scans, and exact convex moment images
//! (intervals, segments, polygons) with relative-interior tests.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::WeightVector;
use crate::rat::Rat;

/// A finite coordinate box `[lo_i, hi_i]` in t*.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeBox {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl LatticeBox {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        if lo.len() != hi.len() || lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(Error::InvalidInput("malformed box".into()));
        }
        Ok(LatticeBox { lo, hi })
    }

    /// The symmetric box `[-n, n]^rank`.
    pub fn centered(rank: usize, n: i64) -> Self {
        LatticeBox {
            lo: vec![-n; rank],
            hi: vec![n; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.lo.len()
    }

    pub fn contains(&self, v: &WeightVector) -> bool {
        v.coords().iter().enumerate().all(|(i, c)| {
            *c >= Rat::from_integer(self.lo[i]) && *c <= Rat::from_integer(self.hi[i])
        })
    }

    /// Integral lattice points, lexicographic.
    pub fn lattice_points(&self) -> Vec<WeightVector> {
        self.scan(1)
    }

    /// Lattice points with coordinates in `(1/den) Z`, lexicographic.
    /// `den = 2` scans the ρ-shifted lattice.
    pub fn scan(&self, den: i64) -> Vec<WeightVector> {
        let mut out = Vec::new();
        let mut cursor: Vec<i64> = self.lo.iter().map(|l| l * den).collect();
        let lo: Vec<i64> = cursor.clone();
        let hi: Vec<i64> = self.hi.iter().map(|h| h * den).collect();
        if self.rank() == 0 {
            return vec![WeightVector::new(vec![])];
        }
        loop {
            out.push(WeightVector::new(
                cursor.iter().map(|&c| Rat::new(c, den)).collect(),
            ));
            let mut i = self.rank();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cursor[i] < hi[i] {
                    cursor[i] += 1;
                    let tail = i + 1..self.rank();
                    cursor[tail.clone()].copy_from_slice(&lo[tail]);
                    break;
                }
            }
        }
    }
}

/// A segment in t* with exact rational endpoints (possibly degenerate).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub from: WeightVector,
    pub to: WeightVector,
}

impl Segment {
    pub fn new(from: WeightVector, to: WeightVector) -> Self {
        Segment { from, to }
    }
}

/// A compact convex moment image: the convex hull of finitely many rational
/// points in t* of rank ≤ 2, with exact membership and relative-interior
/// tests. Covers all catalog examples (intervals, segments, polygons).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentImage {
    vertices: Vec<WeightVector>,
    rank: usize,
}

/// Position of a point relative to a convex image, within its affine hull.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    /// Not in the affine hull of the image.
    OffHull,
    /// In the hull's boundary (relative to the affine hull).
    Boundary,
    /// In the relative interior.
    Interior,
    /// In the affine hull but outside the image.
    Outside,
}

impl MomentImage {
    pub fn from_vertices(vertices: Vec<WeightVector>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidInput(
                "moment image needs at least one point".into(),
            ));
        }
        let rank = vertices[0].rank();
        if rank > 2 {
            return Err(Error::InvalidInput(
                "moment images supported up to rank 2".into(),
            ));
        }
        if vertices.iter().any(|v| v.rank() != rank) {
            return Err(Error::InvalidInput("ragged vertex list".into()));
        }
        Ok(MomentImage { vertices, rank })
    }

    pub fn vertices(&self) -> &[WeightVector] {
        &self.vertices
    }

    /// Classifies `p` against the image.
    pub fn position(&self, p: &WeightVector) -> Position {
        match self.rank {
            0 => Position::Interior,
            1 => self.position_1d(p),
            2 => self.position_2d(p),
            _ => unreachable!(),
        }
    }

    pub fn contains_relint(&self, p: &WeightVector) -> bool {
        self.position(p) == Position::Interior
    }

    fn position_1d(&self, p: &WeightVector) -> Position {
        let x = p.coords()[0];
        let lo = self.vertices.iter().map(|v| v.coords()[0]).min().unwrap();
        let hi = self.vertices.iter().map(|v| v.coords()[0]).max().unwrap();
        if lo == hi {
            return if x == lo {
                Position::Interior
            } else {
                Position::Outside
            };
        }
        if x < lo || x > hi {
            Position::Outside
        } else if x == lo || x == hi {
            Position::Boundary
        } else {
            Position::Interior
        }
    }

    fn position_2d(&self, p: &WeightVector) -> Position {
        // Affine hull dimension: 0 (point), 1 (segment) or 2 (polygon).
        let v0 = &self.vertices[0];
        let dirs: Vec<WeightVector> = self.vertices.iter().skip(1).map(|v| v.sub(v0)).collect();
        let full_dim = dirs
            .iter()
            .enumerate()
            .any(|(i, d)| dirs.iter().skip(i + 1).any(|e| !cross(d, e).is_zero()));
        if full_dim {
            return self.position_polygon(p);
        }
        // Segment (or point): p must be on the line, then between extremes.
        let diff = p.sub(v0);
        let dir = dirs.iter().find(|d| !d.is_zero());
        match dir {
            None => {
                if diff.is_zero() {
                    Position::Interior
                } else {
                    Position::OffHull
                }
            }
            Some(dir) => {
                if !cross(&diff, dir).is_zero() {
                    return Position::OffHull;
                }
                // Parametrize by t along dir.
                let t = param(&diff, dir);
                let ts: Vec<Rat> = self
                    .vertices
                    .iter()
                    .map(|v| param(&v.sub(v0), dir))
                    .collect();
                let lo = ts.iter().min().copied().unwrap();
                let hi = ts.iter().max().copied().unwrap();
                if t < lo || t > hi {
                    Position::Outside
                } else if t == lo || t == hi {
                    Position::Boundary
                } else {
                    Position::Interior
                }
            }
        }
    }

    fn position_polygon(&self, p: &WeightVector) -> Position {
        let hull = convex_hull(&self.vertices);
        let n = hull.len();
        let mut on_boundary = false;
        for i in 0..n {
            let a = &hull[i];
            let b = &hull[(i + 1) % n];
            let c = cross(&b.sub(a), &p.sub(a));
            if c.is_negative() {
                return Position::Outside;
            }
            if c.is_zero() {
                // On the edge line; inside the edge's span?
                let d = b.sub(a);
                let t = param(&p.sub(a), &d);
                if t >= Rat::zero() && t <= Rat::from_integer(1) {
                    on_boundary = true;
                } else {
                    return Position::Outside;
                }
            }
        }
        if on_boundary {
            Position::Boundary
        } else {
            Position::Interior
        }
    }
}

fn cross(a: &WeightVector, b: &WeightVector) -> Rat {
    a.coords()[0] * b.coords()[1] - a.coords()[1] * b.coords()[0]
}

/// Solves `diff = t · dir` on the common line.
fn param(diff: &WeightVector, dir: &WeightVector) -> Rat {
    let i = if dir.coords()[0].is_zero() { 1 } else { 0 };
    diff.coords()[i] / dir.coords()[i]
}

/// Monotone-chain convex hull, counterclockwise, exact arithmetic.
fn convex_hull(points: &[WeightVector]) -> Vec<WeightVector> {
    let mut pts: Vec<WeightVector> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let chain = |iter: &mut dyn Iterator<Item = &WeightVector>| {
        let mut hull: Vec<WeightVector> = Vec::new();
        for p in iter {
            while hull.len() >= 2 {
                let a = &hull[hull.len() - 2];
                let b = &hull[hull.len() - 1];
                if cross(&b.sub(a), &p.sub(a)).is_positive() {
                    break;
                }
                hull.pop();
            }
            hull.push(p.clone());
        }
        hull.pop();
        hull
    };
    let mut lower = chain(&mut pts.iter());
    let upper = chain(&mut pts.iter().rev());
    lower.extend(upper);
    lower
}

/// Conservative integer coordinate bound for the ball `‖ξ‖ ≤ radius` in the
/// datum's basis: used to build sound ancestor scan boxes.
pub fn coordinate_bound(radius2: &Rat, datum: &crate::lie::RootDatum) -> i64 {
    // Smallest eigenvalue lower bounds per supported gram matrix: 1 for
    // identity grams, 1/2 for su2, 1/3 for su3. |c_i| ≤ sqrt(r2 / λmin).
    let lambda_min = match datum.tag() {
        crate::lie::GroupTag::Su2 => Rat::new(1, 2),
        crate::lie::GroupTag::Su3 => Rat::new(1, 3),
        _ => Rat::from_integer(1),
    };
    let bound2 = radius2 / lambda_min;
    // Integer ceiling of sqrt(bound2).
    let mut k: i64 = 0;
    while Rat::from_integer(k * k) < bound2 {
        k += 1;
    }
    k
}

/// Parses `"a:b"` or `"a:b,c:d"` into a box.
pub fn parse_box(s: &str, rank: usize) -> Result<LatticeBox> {
    let parts: Vec<&str> = s.split(',').collect();
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    for part in &parts {
        let (a, b) = part
            .split_once(':')
            .ok_or_else(|| Error::InvalidInput(format!("bad box component '{part}'")))?;
        lo.push(
            a.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("bad bound '{a}'")))?,
        );
        hi.push(
            b.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("bad bound '{b}'")))?,
        );
    }
    if parts.len() == 1 && rank > 1 {
        lo = vec![lo[0]; rank];
        hi = vec![hi[0]; rank];
    } else if parts.len() != rank {
        return Err(Error::InvalidInput(format!(
            "box has {} components, expected {rank}",
            parts.len()
        )));
    }
    LatticeBox::new(lo, hi)
}
