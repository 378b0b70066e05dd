use crate::numeric::{rat, Scalar};

use super::{GeometryError, Point};

/// Closed polygon given by its vertex cycle.
///
/// Consecutive coincident vertices are allowed so that a construction keeps
/// its vertex names when a piece collapses (e.g. `C′ = F = G` at 60°).
/// Predicates work on [`Polygon::distinct_vertices`].
#[derive(Clone, Debug, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self, GeometryError> {
        if vertices.len() < 3 {
            return Err(GeometryError::TooFewVertices(vertices.len()));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Directed edges `(v_i, v_{i+1})`, closing back to `v_0`.
    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    /// Vertex cycle with consecutive duplicates (cyclically) removed.
    pub fn distinct_vertices(&self) -> Vec<Point> {
        let scale = self.extent();
        let mut out: Vec<Point> = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            if out.last().is_some_and(|w| w.coincides(v, v.x.tolerance(), scale)) {
                continue;
            }
            out.push(v.clone());
        }
        while out.len() > 1 && out[0].coincides(&out[out.len() - 1], out[0].x.tolerance(), scale) {
            out.pop();
        }
        out
    }

    /// Largest absolute coordinate, used to scale tolerances.
    pub fn extent(&self) -> f64 {
        self.vertices
            .iter()
            .map(|p| {
                let (x, y) = p.to_f64();
                x.abs().max(y.abs())
            })
            .fold(1.0, f64::max)
    }

    pub fn signed_area(&self) -> Scalar {
        signed_area(self)
    }

    pub fn area(&self) -> Scalar {
        signed_area(self).abs()
    }
}

/// Half the shoelace sum; positive for counterclockwise cycles.
pub fn signed_area(poly: &Polygon) -> Scalar {
    let first = &poly.vertices()[0];
    let mut twice = first.x.zero_like();
    for (p, q) in poly.edges() {
        twice = twice + p.cross(q);
    }
    twice * first.x.backend().rational(rat(1, 2))
}
