use std::collections::BTreeMap;

use serde::Serialize;

use crate::geometry::{Point, Polygon, Rotation};
use crate::numeric::Scalar;

use super::degeneracy::{classify_degeneracy, DegeneracyRecord};
use super::shapes::pyramid_ratio;
use super::ConstructionError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Ziggurat,
    Pyramid,
    DoubleAngle,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Ziggurat => "ziggurat",
            Family::Pyramid => "pyramid",
            Family::DoubleAngle => "double_angle",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "ziggurat" => Some(Family::Ziggurat),
            "pyramid" => Some(Family::Pyramid),
            "double_angle" | "double-angle" => Some(Family::DoubleAngle),
            _ => None,
        }
    }
}

/// Right triangle in canonical pose `C = (0, 0)`, `A = (b, 0)`, `B = (0, a)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RightTriangle {
    a: Scalar,
    b: Scalar,
}

impl RightTriangle {
    pub fn new(a: Scalar, b: Scalar) -> Result<Self, ConstructionError> {
        if a.backend().is_exact() != b.backend().is_exact() {
            return Err(crate::numeric::NumericError::MixedBackends.into());
        }
        if a.signum().is_le() || b.signum().is_le() || !a.is_finite() || !b.is_finite() {
            return Err(ConstructionError::NonPositiveLeg);
        }
        Ok(Self { a, b })
    }

    pub fn from_f64(a: f64, b: f64) -> Result<Self, ConstructionError> {
        Self::new(Scalar::float(a), Scalar::float(b))
    }

    /// Leg `CB`.
    pub fn a(&self) -> &Scalar {
        &self.a
    }

    /// Leg `CA`.
    pub fn b(&self) -> &Scalar {
        &self.b
    }

    pub fn hypotenuse_sq(&self) -> Scalar {
        self.a.pow(2) + self.b.pow(2)
    }

    pub fn triangle(&self) -> Triangle {
        let zero = self.a.zero_like();
        Triangle {
            c: Point { x: zero.clone(), y: zero.clone() },
            a: Point { x: self.b.clone(), y: zero.clone() },
            b: Point { x: zero, y: self.a.clone() },
        }
    }
}

/// Triangle `C, A, B` in counterclockwise order. The right angle is only
/// needed by the theorem checks; the constructions accept any triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct Triangle {
    pub c: Point,
    pub a: Point,
    pub b: Point,
}

impl Triangle {
    /// Reorders `A` and `B` if necessary so that `C → A → B` turns left.
    pub fn counterclockwise(c: Point, a: Point, b: Point) -> Result<Self, ConstructionError> {
        match crate::geometry::orientation(&c, &a, &b) {
            std::cmp::Ordering::Greater => Ok(Self { c, a, b }),
            std::cmp::Ordering::Less => Ok(Self { c, a: b, b: a }),
            std::cmp::Ordering::Equal => Err(ConstructionError::DegenerateTriangle),
        }
    }
}

/// Every named point and piece of one configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct ConfigurationDocument {
    pub family: Family,
    pub a: Option<Scalar>,
    pub b: Option<Scalar>,
    pub theta: Scalar,
    pub points: BTreeMap<String, Point>,
    /// Polygon name → vertex names, in cycle order.
    pub polygons: BTreeMap<String, Vec<String>>,
    pub degeneracy: DegeneracyRecord,
}

impl ConfigurationDocument {
    fn new(family: Family, a: Option<Scalar>, b: Option<Scalar>, theta: Scalar) -> Self {
        Self {
            family,
            a,
            b,
            theta,
            points: BTreeMap::new(),
            polygons: BTreeMap::new(),
            degeneracy: DegeneracyRecord::default(),
        }
    }

    fn put(&mut self, name: &str, p: Point) {
        self.points.insert(name.to_string(), p);
    }

    fn piece(&mut self, name: &str, vertices: &[&str]) {
        debug_assert!(vertices.iter().all(|v| self.points.contains_key(*v)));
        self.polygons
            .insert(name.to_string(), vertices.iter().map(|v| v.to_string()).collect());
    }

    pub fn point(&self, name: &str) -> Result<&Point, ConstructionError> {
        self.points
            .get(name)
            .ok_or_else(|| ConstructionError::UnknownName(name.to_string()))
    }

    pub fn polygon(&self, name: &str) -> Result<Polygon, ConstructionError> {
        let names = self
            .polygons
            .get(name)
            .ok_or_else(|| ConstructionError::UnknownName(name.to_string()))?;
        let pts = names
            .iter()
            .map(|n| self.point(n).cloned())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polygon::new(pts)?)
    }

    /// Unsigned shoelace area of a named piece.
    pub fn area(&self, name: &str) -> Result<Scalar, ConstructionError> {
        Ok(self.polygon(name)?.area())
    }

    /// Largest absolute coordinate among the named points (at least 1).
    pub fn extent(&self) -> f64 {
        self.points
            .values()
            .map(|p| {
                let (x, y) = p.to_f64();
                x.abs().max(y.abs())
            })
            .fold(1.0, f64::max)
    }

    pub fn is_exact(&self) -> bool {
        self.theta.is_exact()
    }

    /// Whether a piece has collapsed to a segment or a point.
    pub fn is_piece_degenerate(&self, name: &str) -> Result<bool, ConstructionError> {
        Ok(polygon_is_flat(&self.polygon(name)?))
    }

    /// The three ziggurats or pyramids, in the order over `a`, `b`, `c`.
    pub fn shape_names(&self) -> [&'static str; 3] {
        match self.family {
            Family::Pyramid => ["pyramid_a", "pyramid_b", "pyramid_c"],
            _ => ["ziggurat_a", "ziggurat_b", "ziggurat_c"],
        }
    }

    pub fn hypotenuse(&self) -> Option<f64> {
        let (a, b) = (self.a.as_ref()?.to_f64(), self.b.as_ref()?.to_f64());
        Some(a.hypot(b))
    }
}

/// All vertices lie on one line (or fewer than three distinct vertices).
pub fn polygon_is_flat(poly: &Polygon) -> bool {
    let v = poly.distinct_vertices();
    if v.len() < 3 {
        return true;
    }
    let far = v
        .iter()
        .skip(1)
        .max_by(|p, q| v[0].dist_f64(p).total_cmp(&v[0].dist_f64(q)))
        .expect("at least three vertices");
    v.iter()
        .all(|p| p.coincides(&v[0], p.x.tolerance(), poly.extent()) || crate::geometry::orientation(&v[0], far, p).is_eq())
}

fn check_range(theta: &Scalar, lo: f64, hi: f64, hi_inclusive: bool, what: &'static str) -> Result<(), ConstructionError> {
    let t = theta.to_f64();
    let upper_ok = if hi_inclusive { t <= hi } else { t < hi };
    if !(t > lo && upper_ok) {
        return Err(ConstructionError::ThetaOutOfRange { what, theta: t });
    }
    Ok(())
}

/// Ziggurat points over an arbitrary counterclockwise triangle.
///
/// External ziggurats on `CA` (right side) and `CB` (left side), internal one
/// on `AB` (left side), and `C′` completing the parallelogram on `CE′, CD′`.
pub fn ziggurat_points(tri: &Triangle, theta: &Scalar) -> Result<BTreeMap<&'static str, Point>, ConstructionError> {
    check_range(theta, 0.0, 180.0, false, "ziggurat configuration")?;
    let rot = Rotation::from_degrees(theta)?;
    let inv = rot.inverse();
    let (c, a, b) = (&tri.c, &tri.a, &tri.b);
    let d1 = inv.apply_about(a, c);
    let d2 = rot.apply_about(c, a);
    let e1 = rot.apply_about(b, c);
    let e2 = inv.apply_about(c, b);
    let f = rot.apply_about(b, a);
    let g = inv.apply_about(a, b);
    let c1 = &(&e1 + &d1) - c;
    Ok(BTreeMap::from([
        ("A", a.clone()),
        ("B", b.clone()),
        ("C", c.clone()),
        ("C'", c1),
        ("D'", d1),
        ("D''", d2),
        ("E'", e1),
        ("E''", e2),
        ("F", f),
        ("G", g),
    ]))
}

pub fn build_theorem_a_configuration(tri: &RightTriangle, theta: &Scalar) -> Result<ConfigurationDocument, ConstructionError> {
    same_backend(tri.a(), theta)?;
    let pts = ziggurat_points(&tri.triangle(), theta)?;
    let mut doc = ConfigurationDocument::new(Family::Ziggurat, Some(tri.a().clone()), Some(tri.b().clone()), theta.clone());
    for (name, p) in pts {
        doc.put(name, p);
    }
    doc.piece("ziggurat_a", &["E'", "C", "B", "E''"]);
    doc.piece("ziggurat_b", &["D'", "C", "A", "D''"]);
    doc.piece("ziggurat_c", &["F", "A", "B", "G"]);
    doc.piece("triangle_ABC", &["C", "A", "B"]);
    doc.piece("parallelogram_E'C'D'C", &["E'", "C'", "D'", "C"]);
    doc.piece("parallelogram_C'D'D''F", &["C'", "D'", "D''", "F"]);
    doc.piece("parallelogram_C'E'E''G", &["C'", "E'", "E''", "G"]);
    doc.piece("triangle_FGC'", &["F", "G", "C'"]);
    doc.piece("triangle_GBE''", &["G", "B", "E''"]);
    doc.piece("triangle_AFD''", &["A", "F", "D''"]);
    doc.piece("master", &["A", "B", "E''", "G", "C'", "F", "D''"]);
    doc.degeneracy = classify_degeneracy(&doc)?;
    Ok(doc)
}

/// Pyramid apexes over an arbitrary counterclockwise triangle: `A′` on `CB`
/// (left), `B′` on `CA` (right), `C′` on `AB` (left, internal).
pub fn pyramid_points(tri: &Triangle, theta: &Scalar) -> Result<BTreeMap<&'static str, Point>, ConstructionError> {
    check_range(theta, 0.0, 90.0, false, "pyramid configuration")?;
    let r = pyramid_ratio(theta)?;
    let rot = Rotation::from_degrees(theta)?;
    let inv = rot.inverse();
    let (c, a, b) = (&tri.c, &tri.a, &tri.b);
    let a1 = c + &rot.apply(&(b - c)).scale(&r);
    let b1 = c + &inv.apply(&(a - c)).scale(&r);
    let c1 = a + &rot.apply(&(b - a)).scale(&r);
    Ok(BTreeMap::from([
        ("A", a.clone()),
        ("B", b.clone()),
        ("C", c.clone()),
        ("A'", a1),
        ("B'", b1),
        ("C'", c1),
    ]))
}

pub fn build_theorem_b_configuration(tri: &RightTriangle, theta: &Scalar) -> Result<ConfigurationDocument, ConstructionError> {
    same_backend(tri.a(), theta)?;
    let pts = pyramid_points(&tri.triangle(), theta)?;
    let mut doc = ConfigurationDocument::new(Family::Pyramid, Some(tri.a().clone()), Some(tri.b().clone()), theta.clone());
    for (name, p) in pts {
        doc.put(name, p);
    }
    doc.piece("pyramid_a", &["C", "B", "A'"]);
    doc.piece("pyramid_b", &["C", "A", "B'"]);
    doc.piece("pyramid_c", &["A", "B", "C'"]);
    doc.piece("triangle_ABC", &["C", "A", "B"]);
    doc.piece("parallelogram_CA'C'B'", &["C", "A'", "C'", "B'"]);
    doc.piece("triangle_AC'B'", &["A", "C'", "B'"]);
    doc.piece("triangle_BA'C'", &["B", "A'", "C'"]);
    doc.piece("master", &["A", "B", "A'", "C'", "B'"]);
    doc.degeneracy = classify_degeneracy(&doc)?;
    Ok(doc)
}

/// Unit-circle figure relating `1 + cos 2θ`, `sin 2θ` to `cos θ`, `sin θ`:
/// `O = (0,0)`, `A = (−1,0)`, `C = (cos 2θ, sin 2θ)`, `B = (cos 2θ, 0)`,
/// `C′ = (cos θ, sin θ)`, `B′ = (cos θ, 0)`.
pub fn build_double_angle_figure(theta: &Scalar) -> Result<ConfigurationDocument, ConstructionError> {
    check_range(theta, 0.0, 45.0, true, "double-angle figure")?;
    let backend = theta.backend();
    let two_theta = theta + theta;
    let (c2, s2) = (two_theta.cos_deg()?, two_theta.sin_deg()?);
    let (c1, s1) = (theta.cos_deg()?, theta.sin_deg()?);
    let zero = backend.int(0);
    let mut doc = ConfigurationDocument::new(Family::DoubleAngle, None, None, theta.clone());
    doc.put("O", Point::origin(backend));
    doc.put("A", Point::from_ints(backend, -1, 0));
    doc.put("B", Point { x: c2.clone(), y: zero.clone() });
    doc.put("C", Point { x: c2, y: s2 });
    doc.put("B'", Point { x: c1.clone(), y: zero });
    doc.put("C'", Point { x: c1, y: s1 });
    doc.piece("triangle_ABC", &["A", "B", "C"]);
    doc.piece("triangle_OB'C'", &["O", "B'", "C'"]);
    doc.degeneracy = classify_degeneracy(&doc)?;
    Ok(doc)
}

fn same_backend(x: &Scalar, theta: &Scalar) -> Result<(), ConstructionError> {
    if x.backend().is_exact() != theta.backend().is_exact() {
        return Err(crate::numeric::NumericError::MixedBackends.into());
    }
    Ok(())
}

/// Builds the configuration for `family` from float or exact inputs.
pub fn build_configuration(
    family: Family,
    tri: &RightTriangle,
    theta: &Scalar,
) -> Result<ConfigurationDocument, ConstructionError> {
    match family {
        Family::Ziggurat => build_theorem_a_configuration(tri, theta),
        Family::Pyramid => build_theorem_b_configuration(tri, theta),
        Family::DoubleAngle => build_double_angle_figure(theta),
    }
}

