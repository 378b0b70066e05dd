use crate::constructions::{
    build_regular_polygon, regular_polygon_area_formula, ConfigurationDocument, Family, RightTriangle, Segment, Side,
};
use crate::symbolic::{prove_text, RuleSet};

use super::{require_family, CheckRecord, VerificationError, AREA_REL_TOL, POINT_REL_TOL};

/// Regular `n`-gons erected outward on the legs add up to the one on the
/// hypotenuse.
pub fn check_regular_polygon_additivity(tri: &RightTriangle, n: usize) -> Result<CheckRecord, VerificationError> {
    let t = tri.triangle();
    let sides = [
        Segment::new(t.b.clone(), t.c.clone()),
        Segment::new(t.c.clone(), t.a.clone()),
        Segment::new(t.a.clone(), t.b.clone()),
    ];
    let mut areas = Vec::with_capacity(3);
    for seg in &sides {
        areas.push(build_regular_polygon(n, seg, Side::Right)?.area());
    }
    let sum = &areas[0] + &areas[1];
    let exact = sum.is_exact() && areas[2].is_exact();
    let ok = if exact {
        sum == areas[2]
    } else {
        (sum.to_f64() - areas[2].to_f64()).abs() <= AREA_REL_TOL * areas[2].to_f64()
    };
    let formula = regular_polygon_area_formula(n, sides[2].length_f64());
    Ok(CheckRecord::new(
        "regular_polygon_additivity",
        "regular n-gons on the legs add up to the regular n-gon on the hypotenuse",
        if exact { 0.0 } else { AREA_REL_TOL },
    )
    .value("n", n as f64)
    .scalar("area_a", &areas[0])
    .scalar("area_b", &areas[1])
    .scalar("area_c", &areas[2])
    .value("area_c_formula", formula)
    .passed_if(ok))
}

pub(crate) fn double_angle_checks(doc: &ConfigurationDocument) -> Result<Vec<CheckRecord>, VerificationError> {
    require_family(doc, Family::DoubleAngle, "double_angle")?;
    let p = |n: &str| doc.point(n);
    let exact = doc.is_exact();
    let tol = if exact { 0.0 } else { POINT_REL_TOL };
    let agree = |x: &crate::numeric::Scalar, y: &crate::numeric::Scalar, scale: f64| {
        if exact {
            x == y
        } else {
            (x.to_f64() - y.to_f64()).abs() <= POINT_REL_TOL * scale.max(1.0)
        }
    };

    // AB · B′C′ = BC · OB′, i.e. (1 + cos 2θ) sin θ = sin 2θ cos θ.
    let ab = &p("B")?.x - &p("A")?.x;
    let bc = p("C")?.y.clone();
    let ob = p("B'")?.x.clone();
    let bc1 = p("C'")?.y.clone();
    let lhs = &ab * &bc1;
    let rhs = &bc * &ob;
    let relation = CheckRecord::new(
        "double_angle_relation",
        "(1 + cos 2θ) / sin 2θ = cos θ / sin θ",
        tol,
    )
    .scalar("lhs", &lhs)
    .scalar("rhs", &rhs)
    .passed_if(agree(&lhs, &rhs, 1.0));

    // Every side of ABC is 2cos θ times the matching side of OB′C′.
    let k2 = (&ob + &ob).pow(2);
    let pairs = [("A", "B", "O", "B'"), ("B", "C", "B'", "C'"), ("A", "C", "O", "C'")];
    let mut ok = true;
    for (u, v, x, y) in pairs {
        let big = p(u)?.dist_sq(p(v)?);
        let small = p(x)?.dist_sq(p(y)?);
        ok &= agree(&big, &(&k2 * &small), 4.0);
    }
    let similarity = CheckRecord::new(
        "similarity",
        "triangle ABC is triangle OB′C′ scaled by 2cos θ",
        tol,
    )
    .value("ratio", k2.to_f64().sqrt())
    .passed_if(ok);

    let proof = prove_text("sin(t)*(1 + cos(2*t)) = sin(2*t)*cos(t)", RuleSet::default())?;
    let symbolic = CheckRecord::new(
        "double_angle_symbolic",
        "sin t (1 + cos 2t) = sin 2t cos t reduces to the same normal form",
        0.0,
    )
    .exact(format!("{} = {}", proof.lhs_normal, proof.rhs_normal))
    .passed_if(proof.proved);

    Ok(vec![relation, similarity, symbolic])
}
