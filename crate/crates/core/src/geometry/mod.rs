//! Planar kernel over [`Scalar`](crate::numeric::Scalar): points, rotations,
//! polygons, shoelace areas and intersection predicates.

mod point;
mod polygon;
mod predicates;
mod transform;

use thiserror::Error;

use crate::numeric::NumericError;

pub use point::Point;
pub use polygon::{signed_area, Polygon};
pub use predicates::{
    on_segment, orientation, point_strictly_inside, polygon_self_intersects, polygons_overlap,
    segments_properly_intersect, ORIENT_TOL,
};
pub use transform::{rotate_about, Rotation, Transform};

#[derive(Clone, Debug, PartialEq, Error)]
pub enum GeometryError {
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("transform scale must be nonzero")]
    ZeroScale,
    #[error("polygon is not simple")]
    NotSimple,
    #[error("segment has coincident endpoints")]
    ZeroLengthSegment,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{Backend, QuadExt, Scalar};
    use proptest::prelude::*;
    use std::cmp::Ordering;

    fn p(x: f64, y: f64) -> Point {
        Point::from_f64(x, y)
    }

    fn poly(pts: &[(f64, f64)]) -> Polygon {
        Polygon::new(pts.iter().map(|(x, y)| p(*x, *y)).collect()).unwrap()
    }

    fn exact_deg(d: i64) -> Scalar {
        Backend::Exact.int(d)
    }

    #[test]
    fn rotations_of_unit_vector() {
        let o = Point::origin(Backend::Exact);
        let e1 = Point::from_ints(Backend::Exact, 1, 0);
        assert_eq!(
            rotate_about(&e1, &o, &exact_deg(90)).unwrap(),
            Point::from_ints(Backend::Exact, 0, 1)
        );
        let r60 = rotate_about(&e1, &o, &exact_deg(60)).unwrap();
        assert_eq!(r60.x, Backend::Exact.rational(crate::numeric::rat(1, 2)));
        let half_sqrt3 = QuadExt::new(crate::numeric::rat(0, 1), crate::numeric::rat(1, 2), 3).unwrap();
        assert_eq!(r60.y, Scalar::Exact(half_sqrt3));
        assert_eq!(rotate_about(&e1, &e1, &exact_deg(135)).unwrap(), e1);
        let q = p(2.0, -1.0);
        assert_eq!(rotate_about(&q, &q, &Scalar::float(37.0)).unwrap(), q);
    }

    #[test]
    fn exact_rotation_needs_tabulated_angle() {
        let o = Point::origin(Backend::Exact);
        let e1 = Point::from_ints(Backend::Exact, 1, 0);
        assert!(rotate_about(&e1, &o, &exact_deg(108)).is_err());
    }

    #[test]
    fn shoelace_examples() {
        assert_eq!(poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]).signed_area().to_f64(), 1.0);
        assert_eq!(poly(&[(0., 0.), (4., 0.), (0., 3.)]).signed_area().to_f64(), 6.0);
        assert_eq!(poly(&[(0., 3.), (4., 0.), (0., 0.)]).signed_area().to_f64(), -6.0);
        let exact = Polygon::new(vec![
            Point::from_ints(Backend::Exact, 0, 0),
            Point::from_ints(Backend::Exact, 4, 0),
            Point::from_ints(Backend::Exact, 0, 3),
        ])
        .unwrap();
        assert_eq!(exact.signed_area(), Backend::Exact.int(6));
        assert!(matches!(Polygon::new(vec![p(0., 0.), p(1., 1.)]), Err(GeometryError::TooFewVertices(2))));
    }

    #[test]
    fn segment_crossing_examples() {
        let (a, b, c, d) = (p(0., 0.), p(1., 1.), p(0., 1.), p(1., 0.));
        assert!(segments_properly_intersect((&a, &b), (&c, &d)));
        assert!(!segments_properly_intersect((&p(0., 0.), &p(1., 0.)), (&p(1., 0.), &p(2., 0.))));
        assert!(!segments_properly_intersect((&p(0., 0.), &p(1., 0.)), (&p(0., 1.), &p(1., 1.))));
        // T-junction: endpoint on the other segment's interior
        assert!(!segments_properly_intersect((&p(0., 0.), &p(2., 0.)), (&p(1., 0.), &p(1., 1.))));
    }

    #[test]
    fn self_intersection_examples() {
        assert!(!polygon_self_intersects(&poly(&[(0., 0.), (2., 0.), (3., 2.), (0., 1.)])));
        assert!(polygon_self_intersects(&poly(&[(0., 0.), (1., 1.), (1., 0.), (0., 1.)])));
        // duplicate vertex does not create a fake crossing
        assert!(!polygon_self_intersects(&poly(&[(0., 0.), (1., 0.), (1., 0.), (0., 1.)])));
    }

    #[test]
    fn overlap_examples() {
        let sq = poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]);
        let far = poly(&[(2., 0.), (3., 0.), (3., 1.), (2., 1.)]);
        let shifted = poly(&[(0.5, 0.5), (1.5, 0.5), (1.5, 1.5), (0.5, 1.5)]);
        let adjacent = poly(&[(1., 0.), (2., 0.), (2., 1.), (1., 1.)]);
        let inner = poly(&[(0.25, 0.25), (0.75, 0.25), (0.75, 0.75)]);
        assert!(!polygons_overlap(&sq, &far).unwrap());
        assert!(polygons_overlap(&sq, &shifted).unwrap());
        assert!(!polygons_overlap(&sq, &adjacent).unwrap());
        assert!(polygons_overlap(&sq, &inner).unwrap());
        let bowtie = poly(&[(0., 0.), (1., 1.), (1., 0.), (0., 1.)]);
        assert_eq!(polygons_overlap(&sq, &bowtie), Err(GeometryError::NotSimple));
    }

    #[test]
    fn strict_inside_excludes_boundary() {
        let sq = poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]);
        assert!(point_strictly_inside(&p(0.5, 0.5), &sq));
        assert!(!point_strictly_inside(&p(1.0, 0.5), &sq));
        assert!(!point_strictly_inside(&p(0.0, 0.0), &sq));
        assert!(!point_strictly_inside(&p(1.5, 0.5), &sq));
    }

    #[test]
    fn orientation_tolerance_band() {
        let a = p(0., 0.);
        let b = p(1., 0.);
        assert_eq!(orientation(&a, &b, &p(2., 1e-13)), Ordering::Equal);
        assert_eq!(orientation(&a, &b, &p(2., 1e-6)), Ordering::Greater);
        assert_eq!(orientation(&a, &b, &p(2., -1e-6)), Ordering::Less);
    }

    #[test]
    fn transform_composes_rotation_scale_translation() {
        let t = Transform::new(p(1., 0.), &Scalar::float(90.0), Scalar::float(2.0), p(0., 5.)).unwrap();
        let img = t.apply(&p(2., 0.));
        assert!(img.coincides(&p(1., 7.), 1e-12, 1.0));
        assert_eq!(
            Transform::new(p(0., 0.), &Scalar::float(0.0), Scalar::float(0.0), p(0., 0.)),
            Err(GeometryError::ZeroScale)
        );
    }

    fn arb_point() -> impl Strategy<Value = (f64, f64)> {
        (-10.0f64..10.0, -10.0f64..10.0)
    }

    fn arb_polygon() -> impl Strategy<Value = Vec<(f64, f64)>> {
        prop::collection::vec(arb_point(), 3..9)
    }

    fn rel_close(x: f64, y: f64, tol: f64) -> bool {
        (x - y).abs() <= tol * x.abs().max(y.abs()).max(1.0)
    }

    proptest! {
        #[test]
        fn area_invariant_under_rigid_motion(
            pts in arb_polygon(),
            deg in -360.0f64..360.0,
            c in arb_point(),
            t in arb_point(),
        ) {
            let base = poly(&pts);
            let tr = Transform::new(p(c.0, c.1), &Scalar::float(deg), Scalar::float(1.0), p(t.0, t.1)).unwrap();
            let moved = Polygon::new(base.vertices().iter().map(|v| tr.apply(v)).collect()).unwrap();
            let scale: f64 = pts.iter().map(|(x, y)| x.abs() + y.abs()).sum::<f64>().powi(2);
            prop_assert!((base.area().to_f64() - moved.area().to_f64()).abs() <= 1e-12 * scale);
        }

        #[test]
        fn area_scales_quadratically(pts in arb_polygon(), k in 0.1f64..5.0, deg in 0.0f64..360.0) {
            let base = poly(&pts);
            let tr = Transform::new(p(0., 0.), &Scalar::float(deg), Scalar::float(k), p(0., 0.)).unwrap();
            let img = Polygon::new(base.vertices().iter().map(|v| tr.apply(v)).collect()).unwrap();
            let scale: f64 = pts.iter().map(|(x, y)| x.abs() + y.abs()).sum::<f64>().powi(2) * k * k;
            prop_assert!((img.area().to_f64() - k * k * base.area().to_f64()).abs() <= 1e-12 * scale);
        }

        #[test]
        fn area_is_sum_of_fan_triangles(pts in arb_polygon(), pivot in 0usize..8) {
            let base = poly(&pts);
            let n = pts.len();
            let k = pivot % n;
            let mut fan = 0.0;
            for i in 1..n - 1 {
                let tri = poly(&[pts[k], pts[(k + i) % n], pts[(k + i + 1) % n]]);
                fan += tri.signed_area().to_f64();
            }
            prop_assert!(rel_close(fan, base.signed_area().to_f64(), 1e-12));
        }

        #[test]
        fn rotation_round_trip(q in arb_point(), c in arb_point(), deg in -720.0f64..720.0) {
            let (q, c) = (p(q.0, q.1), p(c.0, c.1));
            let there = rotate_about(&q, &c, &Scalar::float(deg)).unwrap();
            let back = rotate_about(&there, &c, &Scalar::float(-deg)).unwrap();
            prop_assert!(back.dist_f64(&q) <= 1e-12 * (1.0 + q.dist_f64(&c)));
            prop_assert!(rel_close(there.dist_f64(&c), q.dist_f64(&c), 1e-12));
        }

        #[test]
        fn reversal_flips_sign(pts in arb_polygon()) {
            let fwd = poly(&pts);
            let mut rev = pts.clone();
            rev.reverse();
            let back = poly(&rev);
            prop_assert!(rel_close(fwd.signed_area().to_f64(), -back.signed_area().to_f64(), 1e-12));
        }

        #[test]
        fn proper_intersection_is_symmetric(a in arb_point(), b in arb_point(), c in arb_point(), d in arb_point()) {
            let (a, b, c, d) = (p(a.0, a.1), p(b.0, b.1), p(c.0, c.1), p(d.0, d.1));
            let x = segments_properly_intersect((&a, &b), (&c, &d));
            prop_assert_eq!(x, segments_properly_intersect((&c, &d), (&a, &b)));
            prop_assert_eq!(x, segments_properly_intersect((&b, &a), (&d, &c)));
        }

        #[test]
        fn convex_polygons_are_simple(n in 3usize..12, r in 0.5f64..5.0, phase in 0.0f64..360.0) {
            let pts: Vec<(f64, f64)> = (0..n)
                .map(|k| {
                    let a = (phase + 360.0 * k as f64 / n as f64).to_radians();
                    (r * a.cos(), r * a.sin())
                })
                .collect();
            prop_assert!(!polygon_self_intersects(&poly(&pts)));
        }
    }
}
