//! Deterministic SVG figures of a layout.
//!
//! World coordinates are meters with +Y forward; the figure maps 1 m to 100
//! SVG user units and flips Y once so forward points up on screen. Element
//! order, attribute order, and number formatting are fixed, so the same
//! layout always renders to the same bytes.

use std::fmt::Write;

use ffsim_core::{Layout, Point2, Rect, SensorModel};

use crate::numfmt::fmt_f64;

const SCALE: f64 = 100.0;

/// Which overlays to draw. Everything defaults to on; sample points are
/// extra probe markers labeled S1, S2, ...
pub struct RenderSpec {
    pub show_virtual: bool,
    pub show_real: bool,
    pub show_restricted: bool,
    pub show_partition: bool,
    pub show_lrf: bool,
    pub sample_points: Vec<Point2>,
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            show_virtual: true,
            show_real: true,
            show_restricted: true,
            show_partition: true,
            show_lrf: true,
            sample_points: Vec::new(),
        }
    }
}

fn u(v: f64) -> String {
    fmt_f64(v * SCALE)
}

fn rect_el(out: &mut String, r: &Rect, class: &str, style: &str) {
    writeln!(
        out,
        r#"  <rect class="{class}" x="{}" y="{}" width="{}" height="{}" {style}/>"#,
        u(r.xmin),
        u(r.ymin),
        u(r.width()),
        u(r.height()),
    )
    .unwrap();
}

fn line_el(out: &mut String, class: &str, from: Point2, to: Point2, style: &str) {
    writeln!(
        out,
        r#"  <line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" {style}/>"#,
        u(from.x),
        u(from.y),
        u(to.x),
        u(to.y),
    )
    .unwrap();
}

fn circle_el(out: &mut String, class: &str, center: Point2, radius: f64, style: &str) {
    writeln!(
        out,
        r#"  <circle class="{class}" cx="{}" cy="{}" r="{}" {style}/>"#,
        u(center.x),
        u(center.y),
        fmt_f64(radius),
    )
    .unwrap();
}

/// Renders the layout into a standalone SVG 1.1 document clipped to the
/// given window.
pub fn render_svg(layout: &Layout, window: &Rect, spec: &RenderSpec) -> String {
    let mut out = String::new();
    let vb_x = u(window.xmin);
    let vb_y = u(-window.ymax);
    let vb_w = u(window.width());
    let vb_h = u(window.height());
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{vb_w}" height="{vb_h}" viewBox="{vb_x} {vb_y} {vb_w} {vb_h}">"#
    )
    .unwrap();
    let title = match layout.model {
        SensorModel::FourCorner => "LRF layout, four-corner placement",
        SensorModel::FourSideCenter => "LRF layout, four-sided-center placement",
    };
    writeln!(out, "<title>{title}</title>").unwrap();
    writeln!(out, r#"<g transform="scale(1,-1)">"#).unwrap();

    if spec.show_restricted {
        rect_el(
            &mut out,
            &layout.restricted_rect,
            "restricted",
            r##"fill="#f5c7c7" fill-opacity="0.65" stroke="#b03a2e" stroke-width="1.5""##,
        );
    }
    if spec.show_virtual {
        rect_el(
            &mut out,
            &layout.virtual_rect,
            "virtual",
            r##"fill="#eceff1" fill-opacity="0.5" stroke="#7f8c8d" stroke-width="2""##,
        );
    }
    if spec.show_real {
        rect_el(
            &mut out,
            &layout.real_rect,
            "real",
            r##"fill="none" stroke="#2471a3" stroke-width="2""##,
        );
    }

    if spec.show_partition {
        let r = &layout.virtual_rect;
        let reach = 2.0 * (window.width() + window.height());
        let ray_style = r##"stroke="#5d6d7e" stroke-width="1.5" stroke-dasharray="7 5""##;
        match layout.model {
            SensorModel::FourCorner => {
                let rays = [
                    (Point2::new(r.xmin, r.ymax), (-1.0, 1.0)),
                    (Point2::new(r.xmax, r.ymax), (1.0, 1.0)),
                    (Point2::new(r.xmin, r.ymin), (-1.0, -1.0)),
                    (Point2::new(r.xmax, r.ymin), (1.0, -1.0)),
                ];
                for (corner, (dx, dy)) in rays {
                    let end = Point2::new(corner.x + reach * dx, corner.y + reach * dy);
                    line_el(&mut out, "ray", corner, end, ray_style);
                }
            }
            SensorModel::FourSideCenter => {
                let rays = [
                    (Point2::new(r.xmin, r.ymax), (0.0, 1.0)),
                    (Point2::new(r.xmax, r.ymax), (0.0, 1.0)),
                    (Point2::new(r.xmin, r.ymin), (0.0, -1.0)),
                    (Point2::new(r.xmax, r.ymin), (0.0, -1.0)),
                    (Point2::new(r.xmax, r.ymax), (1.0, 0.0)),
                    (Point2::new(r.xmax, r.ymin), (1.0, 0.0)),
                    (Point2::new(r.xmin, r.ymax), (-1.0, 0.0)),
                    (Point2::new(r.xmin, r.ymin), (-1.0, 0.0)),
                ];
                for (corner, (dx, dy)) in rays {
                    let end = Point2::new(corner.x + reach * dx, corner.y + reach * dy);
                    line_el(&mut out, "extension", corner, end, ray_style);
                }
            }
        }
    }

    if spec.show_lrf {
        for unit in &layout.lrf_units {
            let (radius, style) = if unit.unit == 0 {
                (6.0, r##"fill="#e67e22" fill-opacity="0.9""##)
            } else {
                (3.5, r##"fill="#ffffff" stroke="#b9770e" stroke-width="1.5""##)
            };
            circle_el(&mut out, "lrf", unit.position, radius, style);
        }
        for unit in &layout.lrf_units {
            if unit.unit == 0 {
                circle_el(&mut out, "lrf-real", unit.real_position, 2.5, r##"fill="#616a6b""##);
            }
        }
    }

    for p in &spec.sample_points {
        circle_el(&mut out, "sample", *p, 4.0, r##"fill="#1e8449""##);
    }

    writeln!(out, "</g>").unwrap();

    // Text goes outside the flipped group so it reads upright; flip Y by hand.
    for (i, p) in spec.sample_points.iter().enumerate() {
        writeln!(
            out,
            r##"<text class="sample-label" x="{}" y="{}" font-family="monospace" font-size="12" text-anchor="middle" fill="#1e8449">S{}</text>"##,
            u(p.x),
            fmt_f64(-p.y * SCALE - 8.0),
            i + 1,
        )
        .unwrap();
    }

    writeln!(out, "</svg>").unwrap();
    out
}
