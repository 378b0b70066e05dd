use serde::Serialize;

use crate::geometry::{Point, Polygon, Rotation};
use crate::numeric::{Backend, Scalar};

use super::ConstructionError;

/// Directed segment `start → end`.
#[derive(Clone, Debug, PartialEq)]
pub struct Segment {
    pub start: Point,
    pub end: Point,
}

impl Segment {
    pub fn new(start: Point, end: Point) -> Self {
        Self { start, end }
    }

    pub fn vector(&self) -> Point {
        &self.end - &self.start
    }

    pub fn length_sq(&self) -> Scalar {
        self.vector().norm_sq()
    }

    pub fn length_f64(&self) -> f64 {
        self.vector().norm_f64()
    }

    fn check_nondegenerate(&self) -> Result<(), ConstructionError> {
        if self.start.coincides(&self.end, self.start.x.tolerance(), self.start.norm_f64()) {
            return Err(ConstructionError::ZeroLengthBasis);
        }
        Ok(())
    }
}

/// Half-plane of a directed segment that a shape's body occupies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Rotations taking the basis direction at the start and at the end vertex
/// into the legs, for a body on `side`.
fn leg_rotations(theta: &Scalar, side: Side) -> Result<(Rotation, Rotation), ConstructionError> {
    let rot = Rotation::from_degrees(theta)?;
    let inv = rot.inverse();
    Ok(match side {
        Side::Left => (rot, inv),
        Side::Right => (inv, rot),
    })
}

fn check_theta(theta: &Scalar, lo: f64, hi: f64, what: &'static str) -> Result<(), ConstructionError> {
    let t = theta.to_f64();
    if !(t > lo && t < hi) {
        return Err(ConstructionError::ThetaOutOfRange {
            what,
            theta: t,
        });
    }
    Ok(())
}

/// Isosceles trapezium with legs equal to its basis and base angles `theta`.
#[derive(Clone, Debug, PartialEq)]
pub struct Ziggurat {
    pub basis: Segment,
    pub theta: Scalar,
    pub side: Side,
    /// `[P, Q, Q′, P′]` for the basis `P → Q`.
    pub vertices: [Point; 4],
}

impl Ziggurat {
    pub fn polygon(&self) -> Polygon {
        Polygon::new(self.vertices.to_vec()).expect("four vertices")
    }

    /// `ℓ² · sin θ · (1 − cos θ)`.
    pub fn area_formula(&self) -> Result<Scalar, ConstructionError> {
        let one = self.theta.one_like();
        Ok(self.basis.length_sq() * self.theta.sin_deg()? * (one - self.theta.cos_deg()?))
    }

    /// Signed length of the top side relative to the basis: `1 − 2cos θ`.
    pub fn top_ratio(&self) -> Result<Scalar, ConstructionError> {
        let one = self.theta.one_like();
        Ok(&one - (&one + &one) * self.theta.cos_deg()?)
    }
}

pub fn build_ziggurat(basis: Segment, theta: &Scalar, side: Side) -> Result<Ziggurat, ConstructionError> {
    check_theta(theta, 0.0, 180.0, "ziggurat")?;
    basis.check_nondegenerate()?;
    let (at_start, at_end) = leg_rotations(theta, side)?;
    let p = basis.start.clone();
    let q = basis.end.clone();
    let p_top = at_start.apply_about(&q, &p);
    let q_top = at_end.apply_about(&p, &q);
    Ok(Ziggurat {
        vertices: [p, q, q_top, p_top],
        basis,
        theta: theta.clone(),
        side,
    })
}

/// Isosceles triangle over a basis with base angles `theta < 90°`.
#[derive(Clone, Debug, PartialEq)]
pub struct Pyramid {
    pub basis: Segment,
    pub theta: Scalar,
    pub side: Side,
    /// `[P, Q, apex]`.
    pub vertices: [Point; 3],
}

/// Leg-to-basis ratio `1 / (2 cos θ)`.
pub fn pyramid_ratio(theta: &Scalar) -> Result<Scalar, ConstructionError> {
    let c = theta.cos_deg()?;
    let two_c = &c + &c;
    Ok(theta.one_like().checked_div(&two_c)?)
}

impl Pyramid {
    pub fn polygon(&self) -> Polygon {
        Polygon::new(self.vertices.to_vec()).expect("three vertices")
    }

    pub fn ratio(&self) -> Result<Scalar, ConstructionError> {
        pyramid_ratio(&self.theta)
    }

    /// `ℓ² · tan θ / 4`.
    pub fn area_formula(&self) -> Result<Scalar, ConstructionError> {
        let four = self.theta.backend().int(4);
        let tan = self.theta.sin_deg()?.checked_div(&self.theta.cos_deg()?)?;
        Ok(self.basis.length_sq() * tan / four)
    }
}

pub fn build_pyramid(basis: Segment, theta: &Scalar, side: Side) -> Result<Pyramid, ConstructionError> {
    check_theta(theta, 0.0, 90.0, "pyramid")?;
    basis.check_nondegenerate()?;
    let r = pyramid_ratio(theta)?;
    let (at_start, _) = leg_rotations(theta, side)?;
    let leg = at_start.apply(&basis.vector()).scale(&r);
    let apex = &basis.start + &leg;
    Ok(Pyramid {
        vertices: [basis.start.clone(), basis.end.clone(), apex],
        basis,
        theta: theta.clone(),
        side,
    })
}

/// Regular `n`-gon erected on `side` of the directed segment.
pub fn build_regular_polygon(n: usize, side_segment: &Segment, side: Side) -> Result<Polygon, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::TooFewSides(n));
    }
    side_segment.check_nondegenerate()?;
    let backend = side_segment.start.x.backend();
    let u = side_segment.vector();
    let mut vertices = vec![side_segment.start.clone(), side_segment.end.clone()];
    for k in 1..n - 1 {
        let turn = exterior_turn(backend, k, n, side);
        let step = Rotation::from_degrees(&turn)?.apply(&u);
        let next = vertices.last().expect("nonempty") + &step;
        vertices.push(next);
    }
    Ok(Polygon::new(vertices)?)
}

fn exterior_turn(backend: Backend, k: usize, n: usize, side: Side) -> Scalar {
    let sign = if side == Side::Left { 1 } else { -1 };
    backend.rational(crate::numeric::rat(sign * 360 * k as i64, n as i64))
}

/// `n ℓ² / (4 tan(180°/n))`.
pub fn regular_polygon_area_formula(n: usize, side_length: f64) -> f64 {
    let half_turn = std::f64::consts::PI / n as f64;
    n as f64 * side_length * side_length / (4.0 * half_turn.tan())
}
