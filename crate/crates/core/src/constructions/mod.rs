//! Ziggurats, pyramids, regular polygons and the full configurations over a
//! right triangle in canonical pose `C = (0,0)`, `A = (b,0)`, `B = (0,a)`.

mod configuration;
mod degeneracy;
mod shapes;

use thiserror::Error;

use crate::geometry::GeometryError;
use crate::numeric::NumericError;

pub use configuration::{
    build_configuration, build_double_angle_figure, build_theorem_a_configuration,
    build_theorem_b_configuration, polygon_is_flat, pyramid_points, ziggurat_points,
    ConfigurationDocument, Family, RightTriangle, Triangle,
};
pub use degeneracy::{classify_degeneracy, DegeneracyRecord, PYRAMID_UNBOUNDED_RATIO};
pub use shapes::{
    build_pyramid, build_regular_polygon, build_ziggurat, pyramid_ratio,
    regular_polygon_area_formula, Pyramid, Segment, Side, Ziggurat,
};

#[derive(Clone, Debug, PartialEq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("legs must be positive and finite")]
    NonPositiveLeg,
    #[error("triangle vertices are collinear")]
    DegenerateTriangle,
    #[error("basis has zero length")]
    ZeroLengthBasis,
    #[error("theta = {theta}° is outside the domain of the {what}")]
    ThetaOutOfRange { what: &'static str, theta: f64 },
    #[error("a regular polygon needs at least 3 sides, got {0}")]
    TooFewSides(usize),
    #[error("no point or polygon named `{0}`")]
    UnknownName(String),
}
