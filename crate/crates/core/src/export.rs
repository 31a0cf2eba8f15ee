//! Deterministic text exporters: CSV grids, pretty tables, DOT ancestor
//! graphs, and PGM/SVG rasters of the Duistermaat-Heckman density. All
//! numeric output is exact (`p/q` strings) except raster pixel coordinates.

use std::fmt::Write as _;

use num_traits::Zero;

use crate::characters::Window;
use crate::error::{Error, Result};
use crate::fixedpoint::FixedPointModel;
use crate::geometry::Segment;
use crate::lie::{RootDatum, WeightVector};
use crate::orbits::{qspin_orbit, shift, CoadjointOrbit};
use crate::rat::{self, Rat};
use crate::reduction::{dh_density, QRReport};

fn coords_csv(v: &WeightVector) -> String {
    v.coords()
        .iter()
        .map(rat::rat_to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// One row per lattice point: the coordinates then the multiplicity.
pub fn window_to_csv(w: &Window) -> String {
    let rank = w.bounds.rank();
    let mut out = String::new();
    let header: Vec<String> = (1..=rank).map(|i| format!("c{i}")).collect();
    let _ = writeln!(out, "{},mult", header.join(","));
    for (p, v) in w.entries() {
        let _ = writeln!(out, "{},{v}", coords_csv(&p));
    }
    out
}

/// `level..., m, q, match` rows.
pub fn qr_to_csv(report: &QRReport) -> String {
    let mut out = String::new();
    let rank = report.rows.first().map_or(0, |r| r.level.rank());
    let header: Vec<String> = (1..=rank).map(|i| format!("c{i}")).collect();
    let _ = writeln!(out, "{},m,q,match", header.join(","));
    for r in &report.rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            coords_csv(&r.level),
            r.m,
            r.q,
            r.matched
        );
    }
    out
}

/// Fixed-width table of a `[Q,R]` report.
pub fn qr_to_table(report: &QRReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:>16} {:>6} {:>6}  match", "level", "m", "q");
    for r in &report.rows {
        let _ = writeln!(
            out,
            "{:>16} {:>6} {:>6}  {}",
            r.level.to_string(),
            r.m,
            r.q,
            if r.matched { "ok" } else { "MISMATCH" }
        );
    }
    let _ = writeln!(
        out,
        "summary: {}",
        if report.summary { "ok" } else { "MISMATCH" }
    );
    out
}

/// Orbit listing row.
pub struct OrbitRow {
    pub orbit: CoadjointOrbit,
    pub shift: CoadjointOrbit,
    pub qspin: String,
}

pub fn orbit_rows(orbits: &[CoadjointOrbit], datum: &RootDatum) -> Result<Vec<OrbitRow>> {
    orbits
        .iter()
        .map(|p| {
            let q = qspin_orbit(p, datum)?;
            Ok(OrbitRow {
                orbit: p.clone(),
                shift: shift(p, datum),
                qspin: q.to_string(),
            })
        })
        .collect()
}

pub fn orbits_to_table(rows: &[OrbitRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:>18} {:>18} {:>14}", "orbit", "shift", "qspin");
    for r in rows {
        let _ = writeln!(
            out,
            "{:>18} {:>18} {:>14}",
            r.orbit.to_string(),
            r.shift.to_string(),
            r.qspin
        );
    }
    out
}

/// Orbit record per the external JSON interface.
pub fn orbit_to_json(p: &CoadjointOrbit, datum: &RootDatum) -> serde_json::Value {
    let q = qspin_orbit(p, datum)
        .map(|q| q.to_string())
        .unwrap_or_else(|_| "n/a".into());
    serde_json::json!({
        "group": datum.tag().to_string(),
        "rep": p.rep().coords().iter().map(rat::rat_to_string).collect::<Vec<_>>(),
        "admissible": crate::orbits::is_admissible(p, datum),
        "regular": p.is_regular(),
        "shift": shift(p, datum).rep().coords().iter().map(rat::rat_to_string).collect::<Vec<_>>(),
        "qspin": q,
    })
}

/// DOT digraph of ancestor edges `P -> s(P)`.
pub fn ancestors_to_dot(edges: &[(CoadjointOrbit, CoadjointOrbit)]) -> String {
    let mut out = String::from("digraph ancestors {\n  rankdir=LR;\n");
    for (p, o) in edges {
        let _ = writeln!(out, "  \"{}\" -> \"{}\";", p.rep(), o.rep());
    }
    out.push_str("}\n");
    out
}

/// A rational raster grid `lo..hi` with the given step, one query per cell
/// center.
#[derive(Clone, Debug)]
pub struct RasterGrid {
    pub lo: Rat,
    pub hi: Rat,
    pub step: Rat,
}

impl RasterGrid {
    /// Parses `lo:hi:step` with rational entries (`-5:3:1/4` or `0.25`).
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::InvalidInput(format!("grid '{s}' is not lo:hi:step")));
        }
        let parse_entry = |e: &str| -> Result<Rat> {
            let e = e.trim();
            if let Some((int, frac)) = e.split_once('.') {
                // Decimal steps like 0.25 are exact rationals.
                let digits = frac.len() as u32;
                let denom = 10i64.pow(digits);
                let int_part: i64 = if int.is_empty() || int == "-" {
                    0
                } else {
                    int.parse()
                        .map_err(|_| Error::InvalidInput(format!("bad number '{e}'")))?
                };
                let frac_part: i64 = frac
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad number '{e}'")))?;
                let sign = if e.starts_with('-') { -1 } else { 1 };
                Ok(Rat::from_integer(int_part) + Rat::new(sign * frac_part, denom))
            } else {
                rat::rat_from_str(e)
            }
        };
        let lo = parse_entry(parts[0])?;
        let hi = parse_entry(parts[1])?;
        let step = parse_entry(parts[2])?;
        if step <= Rat::zero() || hi <= lo {
            return Err(Error::InvalidInput(format!("degenerate grid '{s}'")));
        }
        Ok(RasterGrid { lo, hi, step })
    }

    pub fn cells(&self) -> i64 {
        rat::floor(&((self.hi - self.lo) / self.step))
    }

    pub fn center(&self, i: i64) -> Rat {
        self.lo + self.step * (Rat::from_integer(i) + Rat::new(1, 2))
    }
}

/// Samples the signed density over a 2-d grid (row-major, top row = highest
/// y). Cell centers falling on cone walls are nudged deterministically.
pub fn dh_raster(model: &FixedPointModel, grid: &RasterGrid) -> Result<Vec<Vec<i64>>> {
    if model.rank != 2 {
        return Err(Error::InvalidInput("dh rasters are 2-dimensional".into()));
    }
    let n = grid.cells();
    let mut rows = Vec::with_capacity(n as usize);
    for row in 0..n {
        let y = grid.center(n - 1 - row);
        let mut cells = Vec::with_capacity(n as usize);
        for col in 0..n {
            let x = grid.center(col);
            let mut value = None;
            for nudge in 0..64i64 {
                // Quadratic offsets escape any single wall line.
                let q = WeightVector::new(vec![
                    x + grid.step * Rat::new(nudge, 100_003),
                    y + grid.step * Rat::new(nudge * nudge, 200_003),
                ]);
                match dh_density(model, &q) {
                    Ok(v) => {
                        value = Some(v);
                        break;
                    }
                    Err(Error::OnWall) => continue,
                    Err(e) => return Err(e),
                }
            }
            cells.push(value.ok_or(Error::OnWall)?);
        }
        rows.push(cells);
    }
    Ok(rows)
}

/// ASCII PGM (P2): density d maps to the gray level 128 + 96·clamp(d, ±1).
pub fn raster_to_pgm(raster: &[Vec<i64>]) -> String {
    let h = raster.len();
    let w = raster.first().map_or(0, Vec::len);
    let mut out = format!("P2\n{w} {h}\n255\n");
    for row in raster {
        let line: Vec<String> = row
            .iter()
            .map(|&d| {
                let v = 128 + 96 * d.clamp(-1, 1);
                v.to_string()
            })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// SVG raster: one rect per cell, red for positive density, blue for
/// negative, white for zero.
pub fn raster_to_svg(raster: &[Vec<i64>]) -> String {
    let h = raster.len();
    let w = raster.first().map_or(0, Vec::len);
    let cell = 12;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\">\n",
        w * cell,
        h * cell
    );
    for (r, row) in raster.iter().enumerate() {
        for (c, &d) in row.iter().enumerate() {
            let fill = match d.signum() {
                1 => "#d04040",
                -1 => "#4060c8",
                _ => "#ffffff",
            };
            let _ = writeln!(
                out,
                "  <rect x=\"{}\" y=\"{}\" width=\"{cell}\" height=\"{cell}\" fill=\"{fill}\"/>",
                c * cell,
                r * cell
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Kirwan segments as JSON.
pub fn segments_to_json(segments: &[Segment]) -> serde_json::Value {
    serde_json::Value::Array(
        segments
            .iter()
            .map(|s| {
                serde_json::json!({
                    "from": s.from.coords().iter().map(rat::rat_to_string).collect::<Vec<_>>(),
                    "to": s.to.coords().iter().map(rat::rat_to_string).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}
