use serde::Serialize;

use crate::geometry::{orientation, polygon_self_intersects, Point, Polygon};

use super::configuration::{ConfigurationDocument, Family};
use super::shapes::pyramid_ratio;
use super::ConstructionError;

/// Pyramid leg ratio above which the apex is reported as running away.
pub const PYRAMID_UNBOUNDED_RATIO: f64 = 100.0;

/// Collapse and overlap flags, each computed from a geometric predicate on
/// the document.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DegeneracyRecord {
    pub ziggurat_self_intersection: bool,
    #[serde(rename = "triangle_FGC_prime_vanishes")]
    pub triangle_fgc_prime_vanishes: bool,
    pub side_parallelograms_degenerate: bool,
    pub central_parallelogram_degenerate: bool,
    pub leg_ziggurats_overlap: bool,
    pub pyramid_unbounded: bool,
}

impl DegeneracyRecord {
    pub fn flags(&self) -> [(&'static str, bool); 6] {
        [
            ("ziggurat_self_intersection", self.ziggurat_self_intersection),
            ("triangle_FGC_prime_vanishes", self.triangle_fgc_prime_vanishes),
            ("side_parallelograms_degenerate", self.side_parallelograms_degenerate),
            ("central_parallelogram_degenerate", self.central_parallelogram_degenerate),
            ("leg_ziggurats_overlap", self.leg_ziggurats_overlap),
            ("pyramid_unbounded", self.pyramid_unbounded),
        ]
    }

    pub fn any(&self) -> bool {
        self.flags().iter().any(|(_, f)| *f)
    }
}

fn coincide(doc: &ConfigurationDocument, p: &Point, q: &Point) -> bool {
    p.coincides(q, p.x.tolerance(), doc.extent())
}

/// Sides `u − o` and `v − o` both nonzero and parallel.
fn flat_with_nonzero_sides(doc: &ConfigurationDocument, o: &Point, u: &Point, v: &Point) -> bool {
    !coincide(doc, o, u) && !coincide(doc, o, v) && orientation(o, u, v).is_eq()
}

/// Overlap test that tolerates self-intersecting inputs: proper boundary
/// crossing or a vertex strictly inside the other polygon.
fn bodies_overlap(p1: &Polygon, p2: &Polygon) -> bool {
    use crate::geometry::{point_strictly_inside, segments_properly_intersect};
    p1.edges()
        .any(|e1| p2.edges().any(|e2| segments_properly_intersect(e1, e2)))
        || p1.vertices().iter().any(|v| point_strictly_inside(v, p2))
        || p2.vertices().iter().any(|v| point_strictly_inside(v, p1))
}

pub fn classify_degeneracy(doc: &ConfigurationDocument) -> Result<DegeneracyRecord, ConstructionError> {
    let mut rec = DegeneracyRecord::default();
    match doc.family {
        Family::Ziggurat => {
            let zigs = doc
                .shape_names()
                .iter()
                .map(|n| doc.polygon(n))
                .collect::<Result<Vec<_>, _>>()?;
            rec.ziggurat_self_intersection = zigs.iter().any(polygon_self_intersects);
            let p = |n: &str| doc.point(n);
            rec.triangle_fgc_prime_vanishes = coincide(doc, p("F")?, p("G")?);
            rec.side_parallelograms_degenerate =
                flat_with_nonzero_sides(doc, p("C'")?, p("D'")?, p("F")?)
                    && flat_with_nonzero_sides(doc, p("C'")?, p("E'")?, p("G")?);
            rec.central_parallelogram_degenerate = orientation(p("C")?, p("E'")?, p("D'")?).is_eq();
            rec.leg_ziggurats_overlap = bodies_overlap(&zigs[0], &zigs[1]);
        }
        Family::Pyramid => {
            let p = |n: &str| doc.point(n);
            rec.central_parallelogram_degenerate = orientation(p("C")?, p("A'")?, p("B'")?).is_eq();
            rec.pyramid_unbounded = pyramid_ratio(&doc.theta)?.to_f64().abs() > PYRAMID_UNBOUNDED_RATIO;
        }
        Family::DoubleAngle => {}
    }
    Ok(rec)
}
