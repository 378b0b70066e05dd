//! Standalone SVG figures of configuration documents.

mod structure;
mod style;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::constructions::{build_configuration, polygon_is_flat, ConfigurationDocument, ConstructionError, Family, RightTriangle};
use crate::geometry::Point;
use crate::numeric::Scalar;

pub use structure::{SvgStructure, STRUCTURE_NUMBER_TOL};
pub use style::{FigureStyle, PieceRole};

/// Points closer than this (document units) share one label.
pub const LABEL_MERGE_DIST: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum FigureError {
    #[error("point `{0}` has a non-finite coordinate")]
    NonFinite(String),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// Maps document coordinates onto the canvas, y pointing down.
struct Viewport {
    min_x: f64,
    max_y: f64,
    scale: f64,
    offset_x: f64,
    offset_y: f64,
}

impl Viewport {
    fn fit(points: &[(f64, f64)], style: &FigureStyle) -> Self {
        let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &(x, y) in points {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
        let span_x = (max_x - min_x).max(1e-9);
        let span_y = (max_y - min_y).max(1e-9);
        let inner_w = style.width - 2.0 * style.margin;
        let inner_h = style.height - 2.0 * style.margin;
        let scale = (inner_w / span_x).min(inner_h / span_y);
        Self {
            min_x,
            max_y,
            scale,
            offset_x: style.margin + (inner_w - span_x * scale) / 2.0,
            offset_y: style.margin + (inner_h - span_y * scale) / 2.0,
        }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (
            self.offset_x + (x - self.min_x) * self.scale,
            self.offset_y + (self.max_y - y) * self.scale,
        )
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// `D''` is shown as `D″`.
pub fn display_name(name: &str) -> String {
    name.replace("''", "″").replace('\'', "′")
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Groups of point names lying within [`LABEL_MERGE_DIST`] of each other,
/// each with the position of its first member.
fn label_groups(doc: &ConfigurationDocument) -> Vec<(Vec<&str>, (f64, f64))> {
    let mut groups: Vec<(Vec<&str>, (f64, f64))> = Vec::new();
    for (name, p) in &doc.points {
        let (x, y) = p.to_f64();
        match groups
            .iter_mut()
            .find(|(_, (gx, gy))| (gx - x).hypot(gy - y) <= LABEL_MERGE_DIST)
        {
            Some((names, _)) => names.push(name),
            None => groups.push((vec![name], (x, y))),
        }
    }
    groups
}

fn draw_order(name: &str) -> u8 {
    match PieceRole::of_piece(name) {
        PieceRole::Outline => 0,
        PieceRole::ZigguratA | PieceRole::ZigguratB | PieceRole::ZigguratC => 1,
        PieceRole::Parallelogram => 2,
        _ => 3,
    }
}

fn fmt_area(v: f64) -> String {
    let s = format!("{v:.4}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Renders the document as an SVG 1.1 figure: one `path` per polygon, one
/// label per group of coincident points, area annotations on the three
/// shapes and the triangle.
pub fn render_svg(doc: &ConfigurationDocument, style: &FigureStyle) -> Result<String, FigureError> {
    for (name, p) in &doc.points {
        if !p.is_finite() {
            return Err(FigureError::NonFinite(name.clone()));
        }
    }
    let coords: Vec<(f64, f64)> = doc.points.values().map(Point::to_f64).collect();
    let view = Viewport::fit(&coords, style);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(style.width),
        h = num(style.height)
    );
    let _ = writeln!(out, "  <title>{} configuration, θ = {}°</title>", doc.family.name(), num(doc.theta.to_f64()));
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);

    let mut names: Vec<&String> = doc.polygons.keys().collect();
    names.sort_by_key(|n| (draw_order(n), n.as_str()));
    let _ = writeln!(out, r#"  <g class="pieces" stroke="black" stroke-linejoin="round">"#);
    for name in names {
        let poly = doc.polygon(name)?;
        let flat = polygon_is_flat(&poly);
        let role = if flat { PieceRole::Degenerate } else { PieceRole::of_piece(name) };
        let mut d = String::new();
        for (i, v) in poly.vertices().iter().enumerate() {
            let (x, y) = view.map(v.to_f64());
            let _ = write!(d, "{}{} {}", if i == 0 { "M" } else { " L" }, num(x), num(y));
        }
        let (stroke, extra) = match role {
            PieceRole::Degenerate => (style.stroke_width, r#" stroke-dasharray="6 4""#),
            PieceRole::Outline => (style.outline_stroke_width, ""),
            _ => (style.stroke_width, ""),
        };
        if !flat {
            d.push_str(" Z");
        }
        let _ = writeln!(
            out,
            r#"    <path class="{}" data-name="{}" d="{}" fill="{}" fill-opacity="0.7" stroke-width="{}"{}/>"#,
            role.class(),
            escape(name),
            d,
            style.fill(role),
            num(stroke),
            extra
        );
    }
    let _ = writeln!(out, "  </g>");

    if style.show_areas {
        let _ = writeln!(
            out,
            r#"  <g class="areas" font-family="sans-serif" font-size="{}" text-anchor="middle" fill="dimgray">"#,
            num(style.label_font_size * 0.85)
        );
        let mut annotated: Vec<&str> = doc.shape_names().to_vec();
        if doc.polygons.contains_key("triangle_ABC") {
            annotated.push("triangle_ABC");
        }
        for name in annotated {
            let Ok(poly) = doc.polygon(name) else { continue };
            if polygon_is_flat(&poly) {
                continue;
            }
            let n = poly.len() as f64;
            let (sx, sy) = poly
                .vertices()
                .iter()
                .map(Point::to_f64)
                .fold((0.0, 0.0), |(ax, ay), (x, y)| (ax + x, ay + y));
            let (x, y) = view.map((sx / n, sy / n));
            let _ = writeln!(
                out,
                r#"    <text class="area" data-name="{}" x="{}" y="{}">{}</text>"#,
                escape(name),
                num(x),
                num(y),
                fmt_area(poly.area().to_f64())
            );
        }
        let _ = writeln!(out, "  </g>");
    }

    let _ = writeln!(
        out,
        r#"  <g class="labels" font-family="serif" font-size="{}">"#,
        num(style.label_font_size)
    );
    for (members, pos) in label_groups(doc) {
        let (x, y) = view.map(pos);
        let text = members.iter().map(|n| display_name(n)).collect::<Vec<_>>().join("=");
        let _ = writeln!(
            out,
            r#"    <circle cx="{}" cy="{}" r="{}" fill="black"/>"#,
            num(x),
            num(y),
            num(style.point_radius)
        );
        let _ = writeln!(
            out,
            r#"    <text class="label" x="{}" y="{}">{}</text>"#,
            num(x + 5.0),
            num(y - 5.0),
            escape(&text)
        );
    }
    let _ = writeln!(out, "  </g>");
    out.push_str("</svg>\n");
    Ok(out)
}

/// Degrees as a file-name friendly key: `"108"`, `"77.3"`.
pub fn theta_key(theta: &Scalar) -> String {
    num(theta.to_f64())
}

/// One figure per angle, keyed by [`theta_key`].
pub fn render_gallery(
    thetas: &[Scalar],
    tri: &RightTriangle,
    family: Family,
    style: &FigureStyle,
) -> Result<BTreeMap<String, String>, FigureError> {
    let mut out = BTreeMap::new();
    for theta in thetas {
        let doc = build_configuration(family, tri, theta)?;
        out.insert(theta_key(theta), render_svg(&doc, style)?);
    }
    Ok(out)
}

/// The eight angles of the published figures, by family.
pub fn gallery_angles() -> [(Family, i64); 8] {
    [
        (Family::Ziggurat, 60),
        (Family::Ziggurat, 90),
        (Family::Ziggurat, 108),
        (Family::Ziggurat, 120),
        (Family::Ziggurat, 135),
        (Family::Pyramid, 45),
        (Family::Pyramid, 60),
        (Family::Pyramid, 72),
    ]
}
