//! Command implementations: each returns finished output text so the binary
//! shell only handles argument parsing, file I/O, and exit codes.

use std::fmt::Write;

use ffsim_core::{
    assign, compute_expansion, coverage_map, default_window, run_scenario, Layout, Point2, Rect,
};

use crate::config::{ConfigFile, ScenarioFile};
use crate::numfmt::{fmt_f64, json_text, to_rounded_json};
use crate::render::{render_svg, RenderSpec};
use crate::CliError;

pub fn layout_from(cfg: &ConfigFile) -> Result<Layout, CliError> {
    Ok(ffsim_core::build_layout(&cfg.robot, &cfg.human, cfg.model)?)
}

/// `expand`: the resolved expansion parameters as JSON.
pub fn expand_text(cfg: &ConfigFile) -> Result<String, CliError> {
    let exp = compute_expansion(&cfg.robot, &cfg.human)?;
    Ok(json_text(&to_rounded_json(&exp)))
}

/// `layout --format json`: the full layout object.
pub fn layout_json(cfg: &ConfigFile) -> Result<String, CliError> {
    let layout = layout_from(cfg)?;
    Ok(json_text(&to_rounded_json(&layout)))
}

/// `layout --format csv`: named points, one per row. Key points first, then
/// rectangle corners, then the virtual LRF mounts.
pub fn layout_csv(cfg: &ConfigFile) -> Result<String, CliError> {
    let layout = layout_from(cfg)?;
    let mut out = String::from("name,x,y\n");
    let mut row = |name: &str, x: f64, y: f64| {
        writeln!(out, "{},{},{}", name, fmt_f64(x), fmt_f64(y)).unwrap();
    };
    for (name, p) in layout.key_points.named() {
        row(name, p.x, p.y);
    }
    for (stem, r) in [
        ("virtual", &layout.virtual_rect),
        ("real", &layout.real_rect),
        ("restricted", &layout.restricted_rect),
    ] {
        row(&format!("{stem}_min"), r.xmin, r.ymin);
        row(&format!("{stem}_max"), r.xmax, r.ymax);
    }
    for unit in &layout.lrf_units {
        row(&unit.label(), unit.position.x, unit.position.y);
    }
    Ok(out)
}

/// `classify`: region and responsible units for one point.
pub fn classify_text(cfg: &ConfigFile, point: Point2) -> Result<String, CliError> {
    let layout = layout_from(cfg)?;
    let a = assign(&layout, point);
    let v = serde_json::json!({
        "point": {"x": point.x, "y": point.y},
        "model": layout.model,
        "region": a.region,
        "groups": a.groups(),
        "units": a.units,
        "double": a.double_detected,
    });
    Ok(json_text(&to_rounded_json(&v)))
}

pub struct SimOutputs {
    pub json: String,
    pub csv: String,
}

/// `simulate`: full report as JSON plus a per-step CSV.
pub fn simulate_outputs(file: ScenarioFile) -> Result<SimOutputs, CliError> {
    let scenario = file.into_scenario();
    let report = run_scenario(&scenario)?;
    let json = json_text(&to_rounded_json(&report));
    let mut csv = String::from("t,x,y,region,lock,groups,double\n");
    for r in &report.records {
        let groups: Vec<&str> = r.groups.iter().map(|g| g.code()).collect();
        writeln!(
            csv,
            "{},{},{},{},{},{},{}",
            fmt_f64(r.t),
            fmt_f64(r.x),
            fmt_f64(r.y),
            r.region.code(),
            r.lock.code(),
            groups.join(";"),
            r.double_detected,
        )
        .unwrap();
    }
    Ok(SimOutputs { json, csv })
}

pub struct CoverageOutputs {
    pub summary_json: String,
    pub cells_csv: String,
}

/// Resolves the window flag: a positive side length becomes an
/// origin-centered square; absent means the layout's default window.
pub fn resolve_window(layout: &Layout, side: Option<f64>) -> Result<Rect, CliError> {
    match side {
        Some(s) if s.is_finite() && s > 0.0 => {
            let h = 0.5 * s;
            Ok(Rect { xmin: -h, xmax: h, ymin: -h, ymax: h })
        }
        Some(s) => Err(CliError::Input(format!("window side must be positive, got {s}"))),
        None => Ok(default_window(layout)),
    }
}

/// `coverage`: grid summary as JSON, cells as CSV.
pub fn coverage_outputs(
    cfg: &ConfigFile,
    window: Option<f64>,
    resolution: f64,
) -> Result<CoverageOutputs, CliError> {
    let layout = layout_from(cfg)?;
    let window = resolve_window(&layout, window)?;
    let grid = coverage_map(&layout, &window, resolution)?;
    let summary = serde_json::json!({
        "window": grid.window,
        "resolution": grid.resolution,
        "nx": grid.nx,
        "ny": grid.ny,
        "interior_cells": grid.summary.interior_cells,
        "separate_cells": grid.summary.separate_cells,
        "overlap_cells": grid.summary.overlap_cells,
        "interior_area": grid.summary.interior_area,
        "separate_area": grid.summary.separate_area,
        "overlap_area": grid.summary.overlap_area,
        "ratio": grid.summary.ratio,
    });
    let mut csv = String::from("cell_x,cell_y,region,multiplicity\n");
    for cell in &grid.cells {
        writeln!(
            csv,
            "{},{},{},{}",
            fmt_f64(cell.x),
            fmt_f64(cell.y),
            cell.region.code(),
            cell.multiplicity,
        )
        .unwrap();
    }
    Ok(CoverageOutputs { summary_json: json_text(&to_rounded_json(&summary)), cells_csv: csv })
}

/// `render`: the SVG figure.
pub fn render_text(
    cfg: &ConfigFile,
    window: Option<f64>,
    spec: &RenderSpec,
) -> Result<String, CliError> {
    let layout = layout_from(cfg)?;
    let window = resolve_window(&layout, window)?;
    Ok(render_svg(&layout, &window, spec))
}
