use std::collections::BTreeMap;

use serde::Serialize;

/// Role of a piece, used to pick its fill.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PieceRole {
    /// Ziggurat or pyramid over leg `a`.
    ZigguratA,
    ZigguratB,
    ZigguratC,
    Triangle,
    Parallelogram,
    /// The master polygon, drawn as an outline.
    Outline,
    /// Any piece that collapsed to a segment or point.
    Degenerate,
}

impl PieceRole {
    pub const ALL: [PieceRole; 7] = [
        PieceRole::ZigguratA,
        PieceRole::ZigguratB,
        PieceRole::ZigguratC,
        PieceRole::Triangle,
        PieceRole::Parallelogram,
        PieceRole::Outline,
        PieceRole::Degenerate,
    ];

    pub fn class(self) -> &'static str {
        match self {
            PieceRole::ZigguratA => "ziggurat-a",
            PieceRole::ZigguratB => "ziggurat-b",
            PieceRole::ZigguratC => "ziggurat-c",
            PieceRole::Triangle => "triangle",
            PieceRole::Parallelogram => "parallelogram",
            PieceRole::Outline => "outline",
            PieceRole::Degenerate => "degenerate",
        }
    }

    /// Role from a document polygon name, ignoring degeneracy.
    pub fn of_piece(name: &str) -> Self {
        match name {
            "master" => PieceRole::Outline,
            n if n.ends_with("_a") => PieceRole::ZigguratA,
            n if n.ends_with("_b") => PieceRole::ZigguratB,
            n if n.ends_with("_c") => PieceRole::ZigguratC,
            n if n.starts_with("parallelogram") => PieceRole::Parallelogram,
            _ => PieceRole::Triangle,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FigureStyle {
    pub width: f64,
    pub height: f64,
    pub margin: f64,
    pub stroke_width: f64,
    pub outline_stroke_width: f64,
    pub point_radius: f64,
    pub label_font_size: f64,
    pub palette: BTreeMap<PieceRole, String>,
    pub show_areas: bool,
}

impl Default for FigureStyle {
    fn default() -> Self {
        let palette = [
            (PieceRole::ZigguratA, "#8fb8de"),
            (PieceRole::ZigguratB, "#f2b880"),
            (PieceRole::ZigguratC, "#a8d5a2"),
            (PieceRole::Triangle, "#e8e3c4"),
            (PieceRole::Parallelogram, "#d7b8e0"),
            (PieceRole::Outline, "none"),
            (PieceRole::Degenerate, "none"),
        ]
        .into_iter()
        .map(|(r, c)| (r, c.to_string()))
        .collect();
        Self {
            width: 640.0,
            height: 640.0,
            margin: 40.0,
            stroke_width: 1.2,
            outline_stroke_width: 2.0,
            point_radius: 2.5,
            label_font_size: 13.0,
            palette,
            show_areas: true,
        }
    }
}

impl FigureStyle {
    pub fn fill(&self, role: PieceRole) -> &str {
        self.palette.get(&role).map_or("none", String::as_str)
    }
}
