//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Seeds are fixed so runs are reproducible.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use axum::body::Body;
use axum::http::Request;
use http_body_util::BodyExt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;
use tower::ServiceExt;

use zigg_core::constructions::{
    build_configuration, build_double_angle_figure, pyramid_ratio, ziggurat_points, ConfigurationDocument, Family,
    RightTriangle, Triangle,
};
use zigg_core::figures::{gallery_angles, render_svg, FigureStyle, SvgStructure};
use zigg_core::geometry::Point;
use zigg_core::numeric::{int, Backend, QuadExt, Scalar};
use zigg_core::symbolic::{prove_text, RuleSet};
use zigg_core::verification::{
    audit_decomposition_a1, audit_decomposition_a2, audit_decomposition_b, check_lemma,
    check_regular_polygon_additivity, check_theorem_a, check_theorem_b, pyramid_identity, verify_configuration,
    ziggurat_identity, CheckStatus,
};

const SWEEP_SIZE: usize = 10_000;
const SWEEP_BUDGET: Duration = Duration::from_secs(5);
const AREA_REL_TOL: f64 = 1e-9;
const POINT_REL_TOL: f64 = 1e-12;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn random_triangle(rng: &mut StdRng) -> RightTriangle {
    RightTriangle::from_f64(rng.gen_range(0.1..=10.0), rng.gen_range(0.1..=10.0)).unwrap()
}

fn float_doc(family: Family, tri: &RightTriangle, theta: f64) -> ConfigurationDocument {
    build_configuration(family, tri, &Scalar::float(theta)).unwrap()
}

/// Random configurations with the theorem residual of each.
fn theorem_sweep(family: Family, lo: f64, hi: f64, seed: u64) -> Result<(Vec<ConfigurationDocument>, f64, Duration), String> {
    let mut rng = StdRng::seed_from_u64(seed);
    let start = Instant::now();
    let mut docs = Vec::with_capacity(SWEEP_SIZE);
    let mut max = 0.0f64;
    for _ in 0..SWEEP_SIZE {
        let tri = random_triangle(&mut rng);
        let doc = float_doc(family, &tri, rng.gen_range(lo..=hi));
        let rec = match family {
            Family::Pyramid => check_theorem_b(&doc),
            _ => check_theorem_a(&doc),
        }
        .map_err(|e| e.to_string())?;
        if rec.status != CheckStatus::Pass {
            return Err(format!("theta {}: {:?}", doc.theta, rec.status));
        }
        max = max.max(rec.values["residual"]);
        docs.push(doc);
    }
    Ok((docs, max, start.elapsed()))
}

fn criterion_theorem(family: Family, lo: f64, hi: f64, seed: u64) -> Outcome {
    let (_, max, elapsed) = theorem_sweep(family, lo, hi, seed)?;
    ensure(max <= AREA_REL_TOL, || format!("max residual {max:e}"))?;
    ensure(elapsed < SWEEP_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{SWEEP_SIZE} samples, max residual {max:.2e}, {elapsed:.2?}"))
}

fn lemma_deviation(pts: &BTreeMap<&str, Point>) -> f64 {
    let p = |n: &str| &pts[n];
    let d = (&(p("D''") - p("F")) - &(p("D'") - p("C'"))).norm_f64();
    let e = (&(p("E''") - p("G")) - &(p("E'") - p("C'"))).norm_f64();
    d.max(e)
}

fn criterion_3() -> Outcome {
    let (docs, _, _) = theorem_sweep(Family::Ziggurat, 60.0, 135.0, 1)?;
    for doc in &docs {
        for rec in check_lemma(doc).map_err(|e| e.to_string())? {
            ensure(rec.status == CheckStatus::Pass, || format!("{} at theta {}", rec.name, doc.theta))?;
        }
    }
    let mut rng = StdRng::seed_from_u64(3);
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < 1000 {
        let mut pt = || Point::from_f64(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
        let Ok(tri) = Triangle::counterclockwise(pt(), pt(), pt()) else { continue };
        let scale = tri.a.dist_f64(&tri.b).max(tri.b.dist_f64(&tri.c)).max(tri.c.dist_f64(&tri.a));
        if scale < 1e-3 {
            continue;
        }
        let theta = rng.gen_range(1.0..179.0);
        let pts = ziggurat_points(&tri, &Scalar::float(theta)).map_err(|e| e.to_string())?;
        let rel = lemma_deviation(&pts) / scale;
        worst = worst.max(rel);
        ensure(rel <= POINT_REL_TOL, || format!("non-right triangle deviation {rel:e} at theta {theta}"))?;
        done += 1;
    }
    Ok(format!("{SWEEP_SIZE} right and 1000 general triangles, worst general deviation {worst:.2e}·c"))
}

fn criterion_4() -> Outcome {
    let mut rng = StdRng::seed_from_u64(4);
    let (mut simple_z, mut simple_p) = (0, 0);
    for _ in 0..2000 {
        let tri = random_triangle(&mut rng);
        let doc = float_doc(Family::Ziggurat, &tri, rng.gen_range(1.0..179.0));
        for rec in [audit_decomposition_a1(&doc), audit_decomposition_a2(&doc)] {
            let rec = rec.map_err(|e| e.to_string())?;
            match rec.status {
                CheckStatus::Pass => {}
                CheckStatus::DegenerateSkip => continue,
                s => return Err(format!("{} {:?} at theta {}", rec.name, s, doc.theta)),
            }
            simple_z += 1;
        }
        let doc = float_doc(Family::Pyramid, &tri, rng.gen_range(0.5..89.5));
        let rec = audit_decomposition_b(&doc).map_err(|e| e.to_string())?;
        match rec.status {
            CheckStatus::Pass => simple_p += 1,
            CheckStatus::DegenerateSkip => {}
            s => return Err(format!("decomposition_b {s:?} at theta {}", doc.theta)),
        }
    }
    ensure(simple_z > 1000 && simple_p > 500, || format!("too few simple samples: {simple_z}, {simple_p}"))?;
    Ok(format!("{simple_z} ziggurat and {simple_p} pyramid audits on simple master polygons"))
}

fn criterion_5() -> Outcome {
    let at135 = ziggurat_identity(135).map_err(|e| e.to_string())?;
    let five_two_root2 = QuadExt::new(int(5), int(2), 2).unwrap();
    ensure(at135.lhs == five_two_root2 && at135.rhs == five_two_root2, || format!("135: {} vs {}", at135.lhs, at135.rhs))?;
    let at108 = ziggurat_identity(108).map_err(|e| e.to_string())?;
    let witnessed = at108.witness.as_ref().is_some_and(|(_, ok)| *ok);
    ensure(at108.holds() && witnessed && at108.lhs.radicand() == 5, || "108: witness missing".into())?;
    let phi = QuadExt::phi();
    ensure(phi.pow(2) == &QuadExt::from_int(1) + &phi, || "phi^2 != 1 + phi".into())?;
    let at90 = ziggurat_identity(90).map_err(|e| e.to_string())?;
    ensure(at90.lhs == QuadExt::from_int(3) && at90.rhs == QuadExt::from_int(3), || "90: not 3".into())?;
    let r72 = pyramid_ratio(&Backend::Exact.int(72)).map_err(|e| e.to_string())?;
    ensure(r72 == Scalar::Exact(phi.clone()), || format!("r(72) = {r72}"))?;
    ensure(pyramid_identity(72).map_err(|e| e.to_string())?.holds(), || "pyramid 72 identity".into())?;
    Ok(format!("135: {} both sides; 108: {} with φ² = 1 + φ; 90: 3; r(72) = φ", at135.lhs, at108.lhs))
}

fn criterion_6() -> Outcome {
    let no_pyth = RuleSet::default().with(zigg_core::symbolic::Rule::Pythagorean, false);
    let proved = |identity: &str, rules: RuleSet| prove_text(identity, rules).map(|r| r.proved).map_err(|e| e.to_string());
    let chain = "1 + 4*(1 - 2*cos(t))*sin(270 - t) + 2*sin(270 - 2*t) = 2 + (1 - 2*cos(t))^2";
    ensure(proved(chain, no_pyth)?, || "summation chain not proved".into())?;
    // 1/2 − r² cos 2t = r² with r = 1/(2cos t), multiplied through by 4cos² t
    let scalar_b = "2*cos(t)^2 - cos(2*t) = 1";
    ensure(proved(scalar_b, no_pyth)?, || "pyramid scalar identity not proved".into())?;
    let identity_1 = "cos(2*t) = 2*cos(t)^2 - 1";
    let shift_sum = RuleSet::none()
        .with(zigg_core::symbolic::Rule::AngleShift, true)
        .with(zigg_core::symbolic::Rule::AngleSum, true);
    ensure(!proved(identity_1, shift_sum)?, || "identity (1) proved from shift + sum alone".into())?;
    ensure(proved(identity_1, shift_sum.with(zigg_core::symbolic::Rule::DoubleCosPaper, true))?, || "not proved with double_cos_paper".into())?;
    ensure(proved(identity_1, shift_sum.with(zigg_core::symbolic::Rule::Pythagorean, true))?, || "not proved with pythagorean".into())?;
    Ok("chain and pyramid identity proved without the Pythagorean rule; cos 2t needs double_cos_paper or pythagorean".into())
}

fn criterion_7() -> Outcome {
    let tri = RightTriangle::from_f64(1.0, 1.0).unwrap();
    let mut seen = Vec::new();
    for (theta, want) in [(100.0, CheckStatus::Discrepancy), (135.0, CheckStatus::Discrepancy), (120.0, CheckStatus::Pass)] {
        let report = verify_configuration(&float_doc(Family::Ziggurat, &tri, theta)).map_err(|e| e.to_string())?;
        let got = report.get("formula_audit_central_parallelogram").unwrap().status;
        ensure(got == want, || format!("theta {theta}: {got:?}, expected {want:?}"))?;
        seen.push(format!("{theta}°={}", got.label()));
    }
    Ok(seen.join(", "))
}

fn criterion_8() -> Outcome {
    let tris = [(1.0, 1.0), (3.0, 4.0), (0.3, 7.0)];
    for (a, b) in tris {
        let tri = RightTriangle::from_f64(a, b).unwrap();
        for deg in 1..180 {
            let d = float_doc(Family::Ziggurat, &tri, deg as f64).degeneracy;
            if deg < 60 {
                ensure(d.ziggurat_self_intersection, || format!("no self-intersection at {deg}° ({a}, {b})"))?;
            }
            if deg > 135 {
                ensure(d.leg_ziggurats_overlap, || format!("no overlap at {deg}° ({a}, {b})"))?;
            }
            ensure(d.side_parallelograms_degenerate == (deg == 90), || format!("side flag wrong at {deg}°"))?;
        }
    }
    let exact = RightTriangle::new(Backend::Exact.int(3), Backend::Exact.int(4)).unwrap();
    for (deg, want) in [(60, false), (90, true), (120, false), (135, false)] {
        let d = build_configuration(Family::Ziggurat, &exact, &Backend::Exact.int(deg)).unwrap().degeneracy;
        ensure(d.side_parallelograms_degenerate == want, || format!("exact {deg}°: side flag {}", !want))?;
    }
    Ok("θ = 1..59 self-intersecting, 136..179 overlapping, side parallelograms flat only at 90° (exact and float)".into())
}

fn criterion_9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let tri = random_triangle(&mut rng);
        for n in [4, 5, 6, 8] {
            let rec = check_regular_polygon_additivity(&tri, n).map_err(|e| e.to_string())?;
            let v = &rec.values;
            let rel = (v["area_a"] + v["area_b"] - v["area_c"]).abs() / v["area_c"];
            worst = worst.max(rel);
            ensure(rec.status == CheckStatus::Pass && rel <= AREA_REL_TOL, || format!("n = {n}: residual {rel:e}"))?;
        }
    }
    Ok(format!("1000 triangles × n ∈ {{4, 5, 6, 8}}, worst residual {worst:.2e}"))
}

fn criterion_10() -> Outcome {
    let mut rng = StdRng::seed_from_u64(10);
    let mut worst = 0.0f64;
    for i in 0..1000 {
        let theta = if i == 0 { 45.0 } else { rng.gen_range(f64::EPSILON..=45.0) };
        let (s, c) = (theta.to_radians().sin(), theta.to_radians().cos());
        let (s2, c2) = ((2.0 * theta).to_radians().sin(), (2.0 * theta).to_radians().cos());
        let residual = (s * (1.0 + c2) - s2 * c).abs();
        worst = worst.max(residual);
        ensure(residual <= POINT_REL_TOL, || format!("relation residual {residual:e} at {theta}"))?;
        let doc = build_double_angle_figure(&Scalar::float(theta)).map_err(|e| e.to_string())?;
        let report = verify_configuration(&doc).map_err(|e| e.to_string())?;
        for name in ["double_angle_relation", "similarity"] {
            let rec = report.get(name).unwrap();
            ensure(rec.status == CheckStatus::Pass && rec.tolerance <= POINT_REL_TOL, || format!("{name} at {theta}"))?;
        }
    }
    Ok(format!("1000 angles in (0°, 45°], worst residual {worst:.2e}"))
}

fn criterion_11() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden");
    let tri = RightTriangle::from_f64(3.0, 4.0).unwrap();
    let style = FigureStyle::default();
    let mut matched = 0;
    for (family, deg) in gallery_angles() {
        let path = dir.join(format!("{}_{deg:03}.svg", family.name()));
        let golden = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        let doc = float_doc(family, &tri, deg as f64);
        let svg = render_svg(&doc, &style).map_err(|e| e.to_string())?;
        let got = SvgStructure::parse(&svg);
        ensure(got.matches(&SvgStructure::parse(&golden)), || format!("{} differs", path.display()))?;
        ensure(got.tags.get("path") == Some(&doc.polygons.len()), || format!("{}: path count", path.display()))?;
        matched += 1;
    }
    Ok(format!("{matched} golden figures match"))
}

fn cli_json(args: &[String]) -> Result<Value, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("zigg".to_string()).chain(args.iter().cloned());
    let code = zigg_cli::run(argv, &mut out, &mut err);
    if code == zigg_cli::EXIT_USAGE || code == zigg_cli::EXIT_IO {
        return Err(format!("{args:?}: exit {code}: {}", String::from_utf8_lossy(&err)));
    }
    serde_json::from_slice(&out).map_err(|e| e.to_string())
}

fn criterion_12() -> Outcome {
    let rt = tokio::runtime::Builder::new_current_thread().build().map_err(|e| e.to_string())?;
    let mut rng = StdRng::seed_from_u64(12);
    for i in 0..100 {
        let pyramid = i % 3 == 2;
        let (family, theta) = if pyramid {
            ("pyramid", rng.gen_range(1.0..89.0))
        } else {
            ("ziggurat", rng.gen_range(1.0..179.0))
        };
        let (a, b) = (format!("{:.4}", rng.gen_range(0.1..10.0)), format!("{:.4}", rng.gen_range(0.1..10.0)));
        let theta = format!("{theta:.3}");
        let args: Vec<String> = ["verify", "--format", "json", "--family", family, "--a", &a, "--b", &b, "--theta", &theta]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let cli = cli_json(&args)?;
        let uri = format!("/api/config?a={a}&b={b}&theta={theta}&family={family}");
        let api: Value = rt.block_on(async {
            let resp = zigg_service::router()
                .oneshot(Request::get(&uri).body(Body::empty()).unwrap())
                .await
                .unwrap();
            serde_json::from_slice(&resp.into_body().collect().await.unwrap().to_bytes()).unwrap()
        });
        for key in ["areas", "degeneracy"] {
            ensure(cli[key] == api[key], || format!("{key} differ for {uri}"))?;
        }
    }
    // the shipped binary prints the same document
    let bin = env!("CARGO_BIN_EXE_zigg");
    let out = std::process::Command::new(bin)
        .args(["verify", "--format", "json", "--a", "3", "--b", "4", "--theta", "90"])
        .output()
        .map_err(|e| e.to_string())?;
    let from_bin: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let in_process = cli_json(&["verify", "--format", "json", "--a", "3", "--b", "4", "--theta", "90"].map(String::from))?;
    ensure(out.status.code() == Some(0) && from_bin == in_process, || "binary output differs".into())?;
    Ok("100 random inputs: identical areas and flags".into())
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("Theorem A sweep", Box::new(|| criterion_theorem(Family::Ziggurat, 60.0, 135.0, 1))),
        ("Theorem B sweep", Box::new(|| criterion_theorem(Family::Pyramid, 45.0, 89.5, 2))),
        ("Lemma checks", Box::new(criterion_3)),
        ("Decomposition audits", Box::new(criterion_4)),
        ("Exact special angles", Box::new(criterion_5)),
        ("Symbolic prover", Box::new(criterion_6)),
        ("Formula audits", Box::new(criterion_7)),
        ("Degeneracy classification", Box::new(criterion_8)),
        ("Regular-polygon additivity", Box::new(criterion_9)),
        ("Double-angle relation", Box::new(criterion_10)),
        ("Figure gallery", Box::new(criterion_11)),
        ("CLI/service parity", Box::new(criterion_12)),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2}. {title}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}. {title}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
