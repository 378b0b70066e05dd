use crate::constructions::{classify_degeneracy, pyramid_ratio, ConfigurationDocument, Family, PYRAMID_UNBOUNDED_RATIO};
use crate::geometry::{polygon_self_intersects, Point, Transform};
use crate::numeric::Scalar;

use super::constants::trig_pair;
use super::exact::check_exact_special_angle;
use super::ziggurat::{degeneracy_record, Env};
use super::{require_family, CheckRecord, VerificationError, AREA_REL_TOL, POINT_REL_TOL};

pub fn check_theorem_b(doc: &ConfigurationDocument) -> Result<CheckRecord, VerificationError> {
    require_family(doc, Family::Pyramid, "theorem_b")?;
    let env = Env::new(doc)?;
    let rec = CheckRecord::new(
        "theorem_b",
        "the (a,θ)- and (b,θ)-pyramid areas add up to the (c,θ)-pyramid area",
        env.tol(AREA_REL_TOL),
    );
    let (pa, pb, pc) = (env.area("pyramid_a")?, env.area("pyramid_b")?, env.area("pyramid_c")?);
    let sum = &pa + &pb;
    let rec = rec
        .scalar("area_a", &pa)
        .scalar("area_b", &pb)
        .scalar("area_c", &pc)
        .value("residual", (pc.to_f64() - sum.to_f64()).abs() / pc.to_f64());
    if !env.within(45.0, 90.0, false) {
        return Ok(rec.skip("theta outside [45°, 90°)"));
    }
    let rec = if env.exact {
        rec.exact(format!("{pa} + {pb} = {pc}"))
    } else {
        rec
    };
    Ok(rec.passed_if(env.agree(&sum, &pc, AREA_REL_TOL, pc.to_f64())))
}

fn ratio(env: &Env) -> Result<Scalar, VerificationError> {
    Ok(pyramid_ratio(&env.doc.theta)?)
}

fn check_similarity(env: &Env) -> Result<CheckRecord, VerificationError> {
    let p = |n: &str| env.doc.point(n);
    let r = ratio(env)?;
    let r2 = r.pow(2);
    let bc = p("B'")?.dist_sq(p("C'")?);
    let ac = p("A'")?.dist_sq(p("C'")?);
    let want_bc = &r2 * env.a.pow(2);
    let want_ac = &r2 * env.b.pow(2);
    let scale = r2.to_f64() * env.c * env.c;
    let ok = env.agree(&bc, &want_bc, 2.0 * POINT_REL_TOL, scale) && env.agree(&ac, &want_ac, 2.0 * POINT_REL_TOL, scale);
    Ok(CheckRecord::new(
        "pyramid_similarity",
        "|B′C′| = r·a and |A′C′| = r·b with r = 1/(2cos θ)",
        env.tol(POINT_REL_TOL),
    )
    .scalar("r", &r)
    .value("B'C'", bc.to_f64().sqrt())
    .value("A'C'", ac.to_f64().sqrt())
    .passed_if(ok))
}

fn check_rotation_homothety(env: &Env) -> Result<CheckRecord, VerificationError> {
    let p = |n: &str| env.doc.point(n);
    let t = Transform::new(p("A")?.clone(), &env.doc.theta, ratio(env)?, Point::origin(env.backend))?;
    let img_b = t.apply(p("B")?);
    let img_c = t.apply(p("C")?);
    let close = |x: &Point, y: &Point| {
        if env.exact {
            x == y
        } else {
            x.dist_f64(y) <= POINT_REL_TOL * env.c * t.scale_factor().to_f64().abs().max(1.0)
        }
    };
    let ok = close(&img_b, p("C'")?) && close(&img_c, p("B'")?);
    Ok(CheckRecord::new(
        "rotation_homothety",
        "rotation by θ about A scaled by r maps B to C′ and C to B′",
        env.tol(POINT_REL_TOL),
    )
    .value("deviation_B", img_b.dist_f64(p("C'")?))
    .value("deviation_C", img_c.dist_f64(p("B'")?))
    .passed_if(ok))
}

pub fn audit_decomposition_b(doc: &ConfigurationDocument) -> Result<CheckRecord, VerificationError> {
    require_family(doc, Family::Pyramid, "decomposition_b")?;
    let env = Env::new(doc)?;
    let rec = CheckRecord::new(
        "decomposition_b",
        "area(ABA′C′B′) = (a,θ)- + (b,θ)-pyramid + ab(1/2 − r² cos 2θ) = (c,θ)-pyramid + r²ab; \
         central parallelogram r²ab |sin(2θ − 90°)|",
        env.tol(AREA_REL_TOL),
    );
    if polygon_self_intersects(&doc.polygon("master")?) {
        return Ok(rec.skip("master polygon self-intersects"));
    }
    let r2 = ratio(&env)?.pow(2);
    let cos2 = trig_pair(&(env.int(2) * &doc.theta))?.0;
    let area_p = env.area("master")?;
    let d1 = env.area("pyramid_a")? + env.area("pyramid_b")? + &env.ab * (env.half() - &r2 * &cos2);
    let d2 = env.area("pyramid_c")? + &r2 * &env.ab;
    let para = env.area("parallelogram_CA'C'B'")?;
    let para_formula = &r2 * &env.ab * env.sin_shifted(-90, -2)?.abs();
    let scale = area_p.to_f64();
    let ok = env.agree(&area_p, &d1, AREA_REL_TOL, scale)
        && env.agree(&area_p, &d2, AREA_REL_TOL, scale)
        && env.agree(&para, &para_formula, AREA_REL_TOL, scale);
    Ok(rec
        .scalar("area_P", &area_p)
        .scalar("formula_1", &d1)
        .scalar("formula_2", &d2)
        .scalar("parallelogram_CA'C'B'", &para)
        .scalar("parallelogram_formula", &para_formula)
        .passed_if(ok))
}

fn check_scalar_identity(env: &Env) -> Result<CheckRecord, VerificationError> {
    let r2 = ratio(env)?.pow(2);
    let cos2 = trig_pair(&(env.int(2) * &env.doc.theta))?.0;
    let lhs = env.half() - &r2 * &cos2;
    let rec = CheckRecord::new(
        "scalar_identity_b",
        "1/2 − r² cos 2θ = r², so both decompositions agree",
        env.tol(AREA_REL_TOL),
    )
    .scalar("lhs", &lhs)
    .scalar("rhs", &r2);
    let rec = if env.exact { rec.exact(format!("{lhs} = {r2}")) } else { rec };
    Ok(rec.passed_if(env.agree(&lhs, &r2, AREA_REL_TOL, r2.to_f64().max(1.0))))
}

fn check_area_formula(env: &Env) -> Result<CheckRecord, VerificationError> {
    let (cos, sin) = trig_pair(&env.doc.theta)?;
    let tan4 = sin.checked_div(&(env.int(4) * &cos))?;
    let legs = [env.a.pow(2), env.b.pow(2), env.a.pow(2) + env.b.pow(2)];
    let mut rec = CheckRecord::new(
        "area_formula",
        "each (ℓ,θ)-pyramid has area ℓ² tan θ / 4",
        env.tol(AREA_REL_TOL),
    )
    .scalar("tan_over_4", &tan4);
    let mut ok = true;
    for (name, l2) in env.doc.shape_names().iter().zip(&legs) {
        let area = env.area(name)?;
        let want = l2 * &tan4;
        ok &= env.agree(&area, &want, AREA_REL_TOL, want.to_f64());
        rec = rec.scalar(name, &area);
    }
    Ok(rec.passed_if(ok))
}

fn check_degeneracy_consistency(env: &Env) -> Result<CheckRecord, VerificationError> {
    let rec = classify_degeneracy(env.doc)?;
    let r = 1.0 / (2.0 * env.cos.to_f64());
    let expected = [
        ("ziggurat_self_intersection", false),
        ("triangle_FGC_prime_vanishes", false),
        ("side_parallelograms_degenerate", false),
        ("central_parallelogram_degenerate", env.at(45.0)),
        ("leg_ziggurats_overlap", false),
        ("pyramid_unbounded", r > PYRAMID_UNBOUNDED_RATIO),
    ];
    degeneracy_record(rec, &expected, env.exact)
}

pub(crate) fn all_checks(doc: &ConfigurationDocument) -> Result<Vec<CheckRecord>, VerificationError> {
    let env = Env::new(doc)?;
    Ok(vec![
        check_theorem_b(doc)?,
        check_similarity(&env)?,
        check_rotation_homothety(&env)?,
        audit_decomposition_b(doc)?,
        check_scalar_identity(&env)?,
        check_area_formula(&env)?,
        check_degeneracy_consistency(&env)?,
        check_exact_special_angle(Family::Pyramid, &doc.theta)?,
    ])
}
