use std::cmp::Ordering;

use super::{GeometryError, Point, Polygon};

/// Relative tolerance on the sine of the angle between two directions.
/// Slightly above sin(1e−9°), so float configurations within 1e−9 degrees
/// of a threshold angle classify as touching rather than crossing.
pub const ORIENT_TOL: f64 = 2e-11;

/// Orientation of the turn `a → b → c`: `Greater` for counterclockwise.
///
/// Exact points use the exact sign. Float points report `Equal` when the
/// cross product is within `ORIENT_TOL · |b − a| · |c − a|`.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Ordering {
    let u = b - a;
    let v = c - a;
    let cross = u.cross(&v);
    if cross.is_exact() {
        return cross.signum();
    }
    cross.sign_within(ORIENT_TOL, u.norm_f64() * v.norm_f64())
}

/// Whether `p` lies on the closed segment `[a, b]`.
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if p.coincides(a, p.x.tolerance(), a.norm_f64()) || p.coincides(b, p.x.tolerance(), b.norm_f64())
    {
        return true;
    }
    if orientation(a, b, p) != Ordering::Equal {
        return false;
    }
    let along_a = (p - a).dot(&(b - a));
    let along_b = (p - b).dot(&(a - b));
    along_a.signum() != Ordering::Less && along_b.signum() != Ordering::Less
}

/// True iff the open segments cross at a single interior point.
/// Shared endpoints, touching and collinear overlap do not count.
pub fn segments_properly_intersect(s1: (&Point, &Point), s2: (&Point, &Point)) -> bool {
    let (p, q) = s1;
    let (r, s) = s2;
    let o1 = orientation(p, q, r);
    let o2 = orientation(p, q, s);
    let o3 = orientation(r, s, p);
    let o4 = orientation(r, s, q);
    [o1, o2, o3, o4].iter().all(|o| *o != Ordering::Equal) && o1 != o2 && o3 != o4
}

/// True iff two non-adjacent edges properly intersect. Coincident
/// consecutive vertices are merged first.
pub fn polygon_self_intersects(poly: &Polygon) -> bool {
    let v = poly.distinct_vertices();
    let n = v.len();
    if n < 4 {
        return false;
    }
    for i in 0..n {
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let e1 = (&v[i], &v[(i + 1) % n]);
            let e2 = (&v[j], &v[(j + 1) % n]);
            if segments_properly_intersect(e1, e2) {
                return true;
            }
        }
    }
    false
}

/// Whether `p` is inside `poly` and not on its boundary (nonzero winding).
pub fn point_strictly_inside(p: &Point, poly: &Polygon) -> bool {
    if poly.edges().any(|(a, b)| on_segment(p, a, b)) {
        return false;
    }
    let mut winding = 0i32;
    for (a, b) in poly.edges() {
        let a_le = (&a.y - &p.y).signum() != Ordering::Greater;
        let b_le = (&b.y - &p.y).signum() != Ordering::Greater;
        if a_le && !b_le && orientation(a, b, p) == Ordering::Greater {
            winding += 1;
        } else if !a_le && b_le && orientation(a, b, p) == Ordering::Less {
            winding -= 1;
        }
    }
    winding != 0
}

/// True iff the boundaries properly cross or a vertex of one polygon lies
/// strictly inside the other. Touching along edges or at vertices is not
/// overlap.
pub fn polygons_overlap(p1: &Polygon, p2: &Polygon) -> Result<bool, GeometryError> {
    if polygon_self_intersects(p1) || polygon_self_intersects(p2) {
        return Err(GeometryError::NotSimple);
    }
    for e1 in p1.edges() {
        for e2 in p2.edges() {
            if segments_properly_intersect(e1, e2) {
                return Ok(true);
            }
        }
    }
    Ok(p1.vertices().iter().any(|v| point_strictly_inside(v, p2))
        || p2.vertices().iter().any(|v| point_strictly_inside(v, p1)))
}
