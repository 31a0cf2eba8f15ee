//! Browser bindings for the interactive demo page: three operations
//! (Duistermaat-Heckman rasters, index windows with `[Q,R]` tables, and the
//! orbit/ancestor explorer), each returning a JSON string the page renders
//! onto canvases and tables.
//!
//! The functions are plain Rust and unit-tested natively; `wasm-bindgen`
//! only provides the JS ABI.

use std::collections::BTreeMap;

use wasm_bindgen::prelude::wasm_bindgen;

use spincq_core::catalog::{build, ExampleDescriptor};
use spincq_core::characters::{mult_at, window};
use spincq_core::export::{dh_raster, segments_to_json, RasterGrid};
use spincq_core::fixedpoint::global_index;
use spincq_core::geometry::{parse_box, LatticeBox};
use spincq_core::lie::RootDatum;
use spincq_core::orbits::{
    admissible_orbits_in_box, ancestors_over_all_classes, is_admissible, qspin_orbit, rho_orbit,
    shift, sound_ancestor_box,
};
use spincq_core::rat;
use spincq_core::reduction::verify_qr_abelian;

fn err_json(msg: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": msg.to_string() }).to_string()
}

fn density_payload(example: &str, grid: &str) -> Result<serde_json::Value, String> {
    let desc = ExampleDescriptor::parse(example).map_err(|e| e.to_string())?;
    let bundle = build(&desc).map_err(|e| e.to_string())?;
    let model = bundle.model.as_ref().ok_or("example has no torus model")?;
    if model.rank != 2 {
        return Err("density rasters need a rank-2 example".into());
    }
    let grid = RasterGrid::parse(grid).map_err(|e| e.to_string())?;
    let raster = dh_raster(model, &grid).map_err(|e| e.to_string())?;
    Ok(serde_json::json!({
        "example": desc.to_string(),
        "n": grid.cells(),
        "lo": rat::rat_to_string(&grid.lo),
        "hi": rat::rat_to_string(&grid.hi),
        "rows": raster,
        "kirwan": segments_to_json(&bundle.kirwan),
        "vertices": model.points.iter().map(|p| {
            p.phi.coords().iter().map(rat::rat_to_string).collect::<Vec<_>>()
        }).collect::<Vec<_>>(),
    }))
}

/// Signed Duistermaat-Heckman density raster of a rank-2 example.
#[wasm_bindgen]
pub fn dh_raster_json(example: &str, grid: &str) -> String {
    match density_payload(example, grid) {
        Ok(v) => v.to_string(),
        Err(e) => err_json(e),
    }
}

fn window_payload(example: &str, box_spec: &str) -> Result<serde_json::Value, String> {
    let desc = ExampleDescriptor::parse(example).map_err(|e| e.to_string())?;
    let bundle = build(&desc).map_err(|e| e.to_string())?;
    let model = bundle.model.as_ref().ok_or("example has no torus model")?;
    let bounds = parse_box(box_spec, model.rank).map_err(|e| e.to_string())?;
    let f = global_index(model, &model.generic_polarization()).map_err(|e| e.to_string())?;
    let w = window(&f, &bounds);
    let report = match &bundle.image {
        Some(image) => Some(
            verify_qr_abelian(model, image, &bundle.fibers, &bounds).map_err(|e| e.to_string())?,
        ),
        None => None,
    };
    let mut doc = serde_json::json!({
        "example": desc.to_string(),
        "rank": model.rank,
        "lo": w.bounds.lo,
        "hi": w.bounds.hi,
        "values": w.values,
        "kirwan": segments_to_json(&bundle.kirwan),
    });
    if let Some(r) = report {
        doc["qr_summary"] = serde_json::json!(r.summary);
        doc["qr_rows"] = serde_json::json!(r
            .rows
            .iter()
            .map(|row| {
                serde_json::json!({
                    "level": row.level.coords().iter().map(rat::rat_to_string).collect::<Vec<_>>(),
                    "m": row.m,
                    "q": row.q,
                    "matched": row.matched,
                })
            })
            .collect::<Vec<_>>());
    }
    Ok(doc)
}

/// Multiplicity window of an abelian example with its per-level `[Q,R]`
/// verification table.
#[wasm_bindgen]
pub fn index_window_json(example: &str, box_spec: &str) -> String {
    match window_payload(example, box_spec) {
        Ok(v) => v.to_string(),
        Err(e) => err_json(e),
    }
}

fn orbits_payload(group: &str, half_width: i64) -> Result<serde_json::Value, String> {
    let datum = RootDatum::from_tag_str(group).map_err(|e| e.to_string())?;
    let bx = LatticeBox::centered(datum.rank(), half_width);
    let orbits = admissible_orbits_in_box(&datum, &bx);
    let mut rows = Vec::new();
    for p in &orbits {
        let s = shift(p, &datum);
        let q = qspin_orbit(p, &datum).map_err(|e| e.to_string())?;
        rows.push(serde_json::json!({
            "rep": p.rep().coords().iter().map(rat::rat_to_string).collect::<Vec<_>>(),
            "regular": p.is_regular(),
            "shift": s.rep().coords().iter().map(rat::rat_to_string).collect::<Vec<_>>(),
            "qspin": q.to_string(),
        }));
    }
    // Ancestor fan of the ρ-orbit for the picture.
    let target = rho_orbit(&datum);
    let edges: Vec<serde_json::Value> = if is_admissible(&target, &datum) {
        let abx = sound_ancestor_box(&target, &datum);
        ancestors_over_all_classes(&target, &datum, &abx)
            .into_iter()
            .map(|p| {
                serde_json::json!([
                    p.rep()
                        .coords()
                        .iter()
                        .map(rat::rat_to_string)
                        .collect::<Vec<_>>(),
                    target
                        .rep()
                        .coords()
                        .iter()
                        .map(rat::rat_to_string)
                        .collect::<Vec<_>>(),
                ])
            })
            .collect()
    } else {
        vec![]
    };
    Ok(serde_json::json!({
        "group": datum.tag().to_string(),
        "rank": datum.rank(),
        "orbits": rows,
        "rho_ancestor_edges": edges,
    }))
}

/// Admissible orbits in a box with shifts, quantization labels and the
/// ancestor fan of the ρ-orbit.
#[wasm_bindgen]
pub fn orbits_json(group: &str, half_width: i64) -> String {
    match orbits_payload(group, half_width) {
        Ok(v) => v.to_string(),
        Err(e) => err_json(e),
    }
}

/// Multiplicity at a single level (used by the hover readout).
#[wasm_bindgen]
pub fn mult_at_json(example: &str, coords: &str) -> String {
    let inner = || -> Result<serde_json::Value, String> {
        let desc = ExampleDescriptor::parse(example).map_err(|e| e.to_string())?;
        let bundle = build(&desc).map_err(|e| e.to_string())?;
        let model = bundle.model.as_ref().ok_or("example has no torus model")?;
        let parsed: Result<Vec<_>, _> = coords.split(',').map(rat::rat_from_str).collect();
        let mu = spincq_core::lie::WeightVector::new(parsed.map_err(|e| e.to_string())?);
        if mu.rank() != model.rank || !mu.is_integral() {
            return Err("need integral coordinates of the right rank".into());
        }
        let f = global_index(model, &model.generic_polarization()).map_err(|e| e.to_string())?;
        Ok(serde_json::json!({ "mult": mult_at(&f, &mu) }))
    };
    match inner() {
        Ok(v) => v.to_string(),
        Err(e) => err_json(e),
    }
}

/// Catalog descriptors the page offers, with their parameter hints.
#[wasm_bindgen]
pub fn catalog_json() -> String {
    let mut doc = BTreeMap::new();
    doc.insert(
        "abelian",
        vec!["p1:4", "p1:-3", "p1_deformed:4,15", "product_p1"],
    );
    doc.insert(
        "rank2",
        vec!["hirzebruch:3,6", "hirzebruch:8,5", "hirzebruch:0,0"],
    );
    doc.insert("groups", vec!["su2", "u2", "su3"]);
    serde_json::json!(doc).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_payload_shape() {
        let v = density_payload("hirzebruch:3,6", "-5:3:1/2").unwrap();
        assert_eq!(v["n"], 16);
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 16);
        assert_eq!(v["kirwan"].as_array().unwrap().len(), 2);
        assert!(density_payload("p1:4", "-1:1:1").is_err());
    }

    #[test]
    fn window_payload_shape() {
        let v = window_payload("p1:4", "-6:6").unwrap();
        assert_eq!(v["values"].as_array().unwrap().len(), 13);
        assert_eq!(v["qr_summary"], true);
        let v = window_payload("hirzebruch:3,6", "-5:3").unwrap();
        assert_eq!(v["rank"], 2);
        assert_eq!(v["qr_summary"], true);
    }

    #[test]
    fn orbits_payload_shape() {
        let v = orbits_payload("su3", 4).unwrap();
        assert_eq!(v["rho_ancestor_edges"].as_array().unwrap().len(), 4);
        assert!(!v["orbits"].as_array().unwrap().is_empty());
        assert!(orbits_payload("so5", 4).is_err());
    }

    #[test]
    fn error_payloads_are_json() {
        let raw = dh_raster_json("nope:1", "-1:1:1");
        let v: serde_json::Value = serde_json::from_str(&raw).unwrap();
        assert!(v["error"].is_string());
    }
}
