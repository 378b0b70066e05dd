use crate::numeric::{NumericError, Scalar};

use super::{GeometryError, Point};

/// Rotation stored as its cosine and sine.
#[derive(Clone, Debug, PartialEq)]
pub struct Rotation {
    pub cos: Scalar,
    pub sin: Scalar,
}

impl Rotation {
    /// Counterclockwise rotation by `degrees`. Exact angles need tabulated
    /// sine and cosine.
    pub fn from_degrees(degrees: &Scalar) -> Result<Self, NumericError> {
        Ok(Self {
            cos: degrees.cos_deg()?,
            sin: degrees.sin_deg()?,
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            cos: self.cos.clone(),
            sin: -&self.sin,
        }
    }

    /// Rotates a free vector about the origin.
    pub fn apply(&self, v: &Point) -> Point {
        Point {
            x: &self.cos * &v.x - &self.sin * &v.y,
            y: &self.sin * &v.x + &self.cos * &v.y,
        }
    }

    pub fn apply_about(&self, p: &Point, center: &Point) -> Point {
        center + &self.apply(&(p - center))
    }
}

pub fn rotate_about(p: &Point, center: &Point, degrees: &Scalar) -> Result<Point, GeometryError> {
    Ok(Rotation::from_degrees(degrees)?.apply_about(p, center))
}

/// `p ↦ center + scale · R(degrees)(p − center) + translation`.
#[derive(Clone, Debug, PartialEq)]
pub struct Transform {
    center: Point,
    rotation: Rotation,
    scale: Scalar,
    translation: Point,
}

impl Transform {
    pub fn new(
        center: Point,
        degrees: &Scalar,
        scale: Scalar,
        translation: Point,
    ) -> Result<Self, GeometryError> {
        if scale.signum() == std::cmp::Ordering::Equal {
            return Err(GeometryError::ZeroScale);
        }
        Ok(Self {
            center,
            rotation: Rotation::from_degrees(degrees)?,
            scale,
            translation,
        })
    }

    pub fn scale_factor(&self) -> &Scalar {
        &self.scale
    }

    pub fn apply(&self, p: &Point) -> Point {
        let moved = self.rotation.apply(&(p - &self.center)).scale(&self.scale);
        &(&self.center + &moved) + &self.translation
    }
}
