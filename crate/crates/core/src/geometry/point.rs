use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::numeric::{Backend, NumericError, Scalar};

/// A point (or free vector) with both coordinates in one backend.
#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Result<Self, NumericError> {
        if x.backend().is_exact() != y.backend().is_exact() {
            return Err(NumericError::MixedBackends);
        }
        Ok(Self { x, y })
    }

    pub fn from_f64(x: f64, y: f64) -> Self {
        Self {
            x: Scalar::float(x),
            y: Scalar::float(y),
        }
    }

    pub fn from_ints(backend: Backend, x: i64, y: i64) -> Self {
        Self {
            x: backend.int(x),
            y: backend.int(y),
        }
    }

    pub fn origin(backend: Backend) -> Self {
        Self::from_ints(backend, 0, 0)
    }

    pub fn is_exact(&self) -> bool {
        self.x.is_exact()
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }

    pub fn to_float(&self) -> Point {
        Point {
            x: self.x.to_float(self.x.tolerance()),
            y: self.y.to_float(self.y.tolerance()),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn scale(&self, k: &Scalar) -> Point {
        Point {
            x: &self.x * k,
            y: &self.y * k,
        }
    }

    pub fn dot(&self, other: &Point) -> Scalar {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the 2-D cross product.
    pub fn cross(&self, other: &Point) -> Scalar {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn norm_sq(&self) -> Scalar {
        self.dot(self)
    }

    pub fn norm_f64(&self) -> f64 {
        let (x, y) = self.to_f64();
        x.hypot(y)
    }

    pub fn dist_sq(&self, other: &Point) -> Scalar {
        (self - other).norm_sq()
    }

    pub fn dist_f64(&self, other: &Point) -> f64 {
        (self - other).norm_f64()
    }

    /// Coincidence: exact identity, or float distance ≤ `tol · scale`.
    pub fn coincides(&self, other: &Point, tol: f64, scale: f64) -> bool {
        match (self.is_exact(), other.is_exact()) {
            (true, true) => self == other,
            _ => self.dist_f64(other) <= tol * scale.max(1.0),
        }
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
        }
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point {
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
        }
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point {
            x: -&self.x,
            y: -&self.y,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Serialize for Point {
    /// `[x, y]` as floats.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (x, y) = self.to_f64();
        [x, y].serialize(serializer)
    }
}
