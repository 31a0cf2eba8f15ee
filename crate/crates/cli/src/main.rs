//! Command-line front end: catalog computations, the `[Q,R] = 0` verifier,
//! orbit listings and figure-data exports.
//!
//! Exit codes: 0 on success (and a matching `qr` report), 1 when a `qr`
//! report has mismatches, 2 on configuration errors.

use std::collections::BTreeMap;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use spincq_core::catalog::{build, ExampleDescriptor};
use spincq_core::characters::{
    holomorphic_induct, window_with_threads, CharacterK, FormalCharacter, Window,
};
use spincq_core::export;
use spincq_core::fixedpoint::global_index;
use spincq_core::geometry::{parse_box, LatticeBox};
use spincq_core::lie::{RootDatum, WeightVector};
use spincq_core::orbits::{
    admissible_orbits_in_box, ancestors_over_all_classes, is_admissible, sound_ancestor_box,
    CoadjointOrbit,
};
use spincq_core::rat;
use spincq_core::reduction::{character_via_ancestors, verify_qr_abelian};

#[derive(Parser)]
#[command(
    name = "spincq",
    version,
    about = "Exact equivariant Spin^c index computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List admissible coadjoint orbits, shifts and quantizations.
    Orbits(OrbitsArgs),
    /// Equivariant index of a catalog example (window or K-character).
    Index(IndexArgs),
    /// Verify quantization-commutes-with-reduction per level.
    Qr(QrArgs),
    /// Rasterize the signed Duistermaat-Heckman density.
    Dh(DhArgs),
    /// Export the Kirwan set of an example.
    Moment(MomentArgs),
    /// Run a subcommand described by a JSON config file.
    Run(RunArgs),
}

#[derive(Args, Clone)]
struct OrbitsArgs {
    /// Group tag: su2, u2, su3 or torus:R.
    #[arg(long)]
    group: String,
    /// Half-width of the dominant scan box.
    #[arg(long, default_value_t = 4)]
    r#box: i64,
    /// Restrict the listing to the ancestors of this orbit
    /// ("rho" or comma-separated rational coordinates).
    #[arg(long, allow_hyphen_values = true)]
    ancestors_of: Option<String>,
    /// Write the ancestor graph as DOT to this path.
    #[arg(long)]
    dot: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(short, long)]
    output: Option<String>,
}

#[derive(Args, Clone)]
struct IndexArgs {
    /// Example descriptor, e.g. p1:4, hirzebruch:3,6, su3_flag:4,1.
    #[arg(long)]
    example: String,
    /// Window box "lo:hi" or "lo:hi,lo:hi" for torus examples.
    #[arg(long, allow_hyphen_values = true)]
    r#box: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(short, long)]
    output: Option<String>,
    /// Re-check the window under this many random generic polarizations.
    #[arg(long)]
    polarizations: Option<usize>,
    /// Seed for the polarization self-check sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit the localized decomposition, one window per zero-set component.
    #[arg(long)]
    components: bool,
}

#[derive(Args, Clone)]
struct QrArgs {
    #[arg(long)]
    example: String,
    /// Level box "lo:hi" (one component per torus coordinate).
    #[arg(long, allow_hyphen_values = true)]
    r#box: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(short, long)]
    output: Option<String>,
}

#[derive(Args, Clone)]
struct DhArgs {
    #[arg(long)]
    example: String,
    /// Raster grid "lo:hi:step" with exact rational entries.
    #[arg(long, allow_hyphen_values = true)]
    grid: String,
    #[arg(long, value_enum, default_value_t = Format::Pgm)]
    format: Format,
    #[arg(short, long)]
    output: Option<String>,
}

#[derive(Args, Clone)]
struct MomentArgs {
    #[arg(long)]
    example: String,
    #[arg(short, long)]
    output: Option<String>,
}

#[derive(Args, Clone)]
struct RunArgs {
    /// JSON file mirroring the command-line flags.
    #[arg(long)]
    config: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Table,
    Svg,
    Pgm,
}

/// JSON mirror of the flags, dispatched by `spincq run --config FILE`.
#[derive(Deserialize)]
struct RunConfig {
    subcommand: String,
    #[serde(default)]
    group: Option<String>,
    #[serde(default)]
    example: Option<String>,
    #[serde(default)]
    r#box: Option<String>,
    #[serde(default)]
    grid: Option<String>,
    #[serde(default)]
    format: Option<String>,
    #[serde(default)]
    output: Option<String>,
    #[serde(default)]
    ancestors_of: Option<String>,
    #[serde(default)]
    dot: Option<String>,
    #[serde(default)]
    polarizations: Option<usize>,
    #[serde(default)]
    seed: Option<u64>,
    #[serde(default)]
    components: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match command {
        Command::Orbits(a) => cmd_orbits(a),
        Command::Index(a) => cmd_index(a),
        Command::Qr(a) => cmd_qr(a),
        Command::Dh(a) => cmd_dh(a),
        Command::Moment(a) => cmd_moment(a),
        Command::Run(a) => cmd_run(a),
    }
}

fn threads() -> usize {
    std::env::var("SPINCQ_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1)
}

fn emit(output: &Option<String>, content: &str) -> std::io::Result<()> {
    match output {
        Some(path) => std::fs::write(path, content),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(content.as_bytes())
        }
    }
}

fn parse_rep(s: &str, datum: &RootDatum) -> Result<WeightVector, Box<dyn std::error::Error>> {
    if s.trim() == "rho" {
        return Ok(spincq_core::lie::rho(datum));
    }
    let coords: Result<Vec<_>, _> = s.split(',').map(rat::rat_from_str).collect();
    let coords = coords?;
    if coords.len() != datum.rank() {
        return Err(format!(
            "rep '{s}' has {} coordinates, expected {}",
            coords.len(),
            datum.rank()
        )
        .into());
    }
    Ok(WeightVector::new(coords))
}

fn cmd_orbits(a: OrbitsArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let datum = RootDatum::from_tag_str(&a.group)?;
    let (orbits, edges): (Vec<CoadjointOrbit>, Vec<(CoadjointOrbit, CoadjointOrbit)>) =
        match &a.ancestors_of {
            Some(rep) => {
                let target = CoadjointOrbit::through(&parse_rep(rep, &datum)?, &datum);
                if !target.is_regular() || !is_admissible(&target, &datum) {
                    return Err(format!("{target} is not regular admissible").into());
                }
                let bx = sound_ancestor_box(&target, &datum);
                let anc = ancestors_over_all_classes(&target, &datum, &bx);
                let edges = anc.iter().map(|p| (p.clone(), target.clone())).collect();
                (anc, edges)
            }
            None => {
                let bx = LatticeBox::centered(datum.rank(), a.r#box);
                let orbits = admissible_orbits_in_box(&datum, &bx);
                let edges = orbits
                    .iter()
                    .map(|p| (p.clone(), spincq_core::orbits::shift(p, &datum)))
                    .collect();
                (orbits, edges)
            }
        };
    if let Some(path) = &a.dot {
        std::fs::write(path, export::ancestors_to_dot(&edges))?;
    }
    let content = match a.format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = orbits
                .iter()
                .map(|p| export::orbit_to_json(p, &datum))
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&rows)?)
        }
        _ => {
            let rows = export::orbit_rows(&orbits, &datum)?;
            export::orbits_to_table(&rows)
        }
    };
    emit(&a.output, &content)?;
    Ok(ExitCode::SUCCESS)
}

/// The K-character of a non-abelian example, computed live: holomorphic
/// induction when slice weights exist, otherwise the ancestor route.
fn k_character(
    bundle: &spincq_core::catalog::ExampleBundle,
) -> Result<Option<CharacterK>, Box<dyn std::error::Error>> {
    if let (Some(w), Some(r)) = (&bundle.h_weights, &bundle.rho_c) {
        return Ok(Some(holomorphic_induct(w, r, &bundle.datum)?));
    }
    if let Some(class) = &bundle.h_class {
        let bound = match &bundle.descriptor {
            ExampleDescriptor::Su3Flag { a, b } => a + b + 2,
            _ => 8,
        };
        let bx = LatticeBox::new(
            vec![0; bundle.datum.rank()],
            vec![bound; bundle.datum.rank()],
        )?;
        return Ok(Some(character_via_ancestors(
            &bundle.charts,
            class,
            &bundle.datum,
            &bx,
        )?));
    }
    Ok(None)
}

fn abelian_window(
    bundle: &spincq_core::catalog::ExampleBundle,
    box_spec: &Option<String>,
) -> Result<Option<(FormalCharacter, Window)>, Box<dyn std::error::Error>> {
    let Some(model) = &bundle.model else {
        return Ok(None);
    };
    let f = global_index(model, &model.generic_polarization())?;
    let bounds = match box_spec {
        Some(s) => parse_box(s, model.rank)?,
        None => LatticeBox::centered(model.rank, 8),
    };
    let w = window_with_threads(&f, &bounds, threads());
    Ok(Some((f, w)))
}

fn cmd_index(a: IndexArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let desc = ExampleDescriptor::parse(&a.example)?;
    let bundle = build(&desc)?;
    let windowed = abelian_window(&bundle, &a.r#box)?;

    if a.components {
        let Some((_, reference)) = &windowed else {
            return Err(format!("{desc} has no torus model to decompose").into());
        };
        let model = bundle.model.as_ref().unwrap();
        let decomposition = spincq_core::fixedpoint::witten_decomposition(model)?;
        let mut out = String::new();
        let rank = model.rank;
        let header: Vec<String> = (1..=rank).map(|i| format!("c{i}")).collect();
        out.push_str(&format!("component,{},mult\n", header.join(",")));
        for (label, f) in &decomposition {
            let w = window_with_threads(f, &reference.bounds, threads());
            for (p, v) in w.entries() {
                out.push_str(&format!(
                    "{},{},{v}\n",
                    coords_plain(label),
                    coords_csv_plain(&p)
                ));
            }
        }
        emit(&a.output, &out)?;
        return Ok(ExitCode::SUCCESS);
    }

    if let (Some(n), Some((_, reference))) = (a.polarizations, &windowed) {
        use rand::{Rng, SeedableRng};
        let model = bundle.model.as_ref().unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(a.seed);
        let mut done = 0;
        while done < n {
            let coords: Vec<i64> = (0..model.rank)
                .map(|_| rng.gen_range(-40i64..=40))
                .collect();
            let beta = WeightVector::from_ints(&coords);
            let Ok(f) = global_index(model, &beta) else {
                continue;
            };
            let w = window_with_threads(&f, &reference.bounds, threads());
            if &w != reference {
                return Err(format!("polarization self-check failed with β = {beta}").into());
            }
            done += 1;
        }
    }

    let kchar = k_character(&bundle)?;
    let content = match a.format {
        Format::Csv => match (&windowed, &kchar) {
            (Some((_, w)), _) => export::window_to_csv(w),
            (None, Some(c)) => {
                let mut out = String::from("label,mult\n");
                for (l, m) in c.mults() {
                    out.push_str(&format!("{},{m}\n", coords_plain(l)));
                }
                out
            }
            (None, None) => return Err("example exposes no index data".into()),
        },
        Format::Table => match (&windowed, &kchar) {
            (Some((_, w)), _) => {
                let mut out = String::new();
                for (p, v) in w.entries() {
                    out.push_str(&format!("{p} {v}\n"));
                }
                out
            }
            (None, Some(c)) => {
                let mut out = String::new();
                for (l, m) in c.mults() {
                    out.push_str(&format!("pi_{l} {m}\n"));
                }
                out
            }
            (None, None) => return Err("example exposes no index data".into()),
        },
        _ => {
            let mut doc = BTreeMap::new();
            doc.insert("example".to_string(), serde_json::json!(desc.to_string()));
            doc.insert(
                "group".to_string(),
                serde_json::json!(bundle.datum.tag().to_string()),
            );
            if let Some((_, w)) = &windowed {
                doc.insert(
                    "window".to_string(),
                    serde_json::json!({
                        "lo": w.bounds.lo,
                        "hi": w.bounds.hi,
                        "values": w.values,
                    }),
                );
            }
            if let Some(c) = &kchar {
                doc.insert("k_character".to_string(), c.to_json());
            }
            format!("{}\n", serde_json::to_string_pretty(&doc)?)
        }
    };
    emit(&a.output, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn coords_plain(v: &WeightVector) -> String {
    v.coords()
        .iter()
        .map(rat::rat_to_string)
        .collect::<Vec<_>>()
        .join(";")
}

fn coords_csv_plain(v: &WeightVector) -> String {
    v.coords()
        .iter()
        .map(rat::rat_to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_qr(a: QrArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let desc = ExampleDescriptor::parse(&a.example)?;
    let bundle = build(&desc)?;
    let (Some(model), Some(image)) = (&bundle.model, &bundle.image) else {
        return Err(format!("{desc} has no abelian model; qr applies to torus examples").into());
    };
    let bounds = parse_box(&a.r#box, model.rank)?;
    let report = verify_qr_abelian(model, image, &bundle.fibers, &bounds)?;
    let content = match a.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report)?),
        Format::Table => export::qr_to_table(&report),
        _ => export::qr_to_csv(&report),
    };
    emit(&a.output, &content)?;
    Ok(if report.summary {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_dh(a: DhArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let desc = ExampleDescriptor::parse(&a.example)?;
    let bundle = build(&desc)?;
    let Some(model) = &bundle.model else {
        return Err(format!("{desc} has no abelian model").into());
    };
    let grid = export::RasterGrid::parse(&a.grid)?;
    let raster = export::dh_raster(model, &grid)?;
    let content = match a.format {
        Format::Svg => export::raster_to_svg(&raster),
        Format::Csv => {
            let mut out = String::from("x,y,density\n");
            let n = grid.cells();
            for (r, row) in raster.iter().enumerate() {
                for (c, d) in row.iter().enumerate() {
                    let x = grid.center(c as i64);
                    let y = grid.center(n - 1 - r as i64);
                    out.push_str(&format!(
                        "{},{},{d}\n",
                        rat::rat_to_string(&x),
                        rat::rat_to_string(&y)
                    ));
                }
            }
            out
        }
        _ => export::raster_to_pgm(&raster),
    };
    emit(&a.output, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_moment(a: MomentArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let desc = ExampleDescriptor::parse(&a.example)?;
    let bundle = build(&desc)?;
    let doc = serde_json::json!({
        "example": desc.to_string(),
        "group": bundle.datum.tag().to_string(),
        "kirwan": export::segments_to_json(&bundle.kirwan),
    });
    emit(
        &a.output,
        &format!("{}\n", serde_json::to_string_pretty(&doc)?),
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_run(a: RunArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let raw = std::fs::read_to_string(&a.config)?;
    let cfg: RunConfig = serde_json::from_str(&raw)?;
    let format = |default: Format| -> Result<Format, Box<dyn std::error::Error>> {
        match cfg.format.as_deref() {
            None => Ok(default),
            Some(s) => Format::from_str(s, true).map_err(|e| e.into()),
        }
    };
    let need = |field: &Option<String>, name: &str| -> Result<String, Box<dyn std::error::Error>> {
        field
            .clone()
            .ok_or_else(|| format!("config is missing '{name}'").into())
    };
    match cfg.subcommand.as_str() {
        "orbits" => cmd_orbits(OrbitsArgs {
            group: need(&cfg.group, "group")?,
            r#box: cfg
                .r#box
                .as_deref()
                .and_then(|b| b.parse().ok())
                .unwrap_or(4),
            ancestors_of: cfg.ancestors_of.clone(),
            dot: cfg.dot.clone(),
            format: format(Format::Table)?,
            output: cfg.output.clone(),
        }),
        "index" => cmd_index(IndexArgs {
            example: need(&cfg.example, "example")?,
            r#box: cfg.r#box.clone(),
            format: format(Format::Json)?,
            output: cfg.output.clone(),
            polarizations: cfg.polarizations,
            seed: cfg.seed.unwrap_or(0),
            components: cfg.components,
        }),
        "qr" => cmd_qr(QrArgs {
            example: need(&cfg.example, "example")?,
            r#box: need(&cfg.r#box, "box")?,
            format: format(Format::Csv)?,
            output: cfg.output.clone(),
        }),
        "dh" => cmd_dh(DhArgs {
            example: need(&cfg.example, "example")?,
            grid: need(&cfg.grid, "grid")?,
            format: format(Format::Pgm)?,
            output: cfg.output.clone(),
        }),
        "moment" => cmd_moment(MomentArgs {
            example: need(&cfg.example, "example")?,
            output: cfg.output.clone(),
        }),
        other => Err(format!("unknown subcommand '{other}' in config").into()),
    }
}
