//! Structural comparison of the gallery figures against checked-in goldens.
//! Regenerate with `UPDATE_GOLDEN=1 cargo test -p zigg-core --test figures_golden`.

use std::path::PathBuf;

use zigg_core::constructions::{build_configuration, Family, RightTriangle};
use zigg_core::figures::{gallery_angles, render_svg, FigureStyle, SvgStructure};
use zigg_core::geometry::Point;
use zigg_core::numeric::Scalar;

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

#[test]
fn gallery_matches_goldens() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let tri = RightTriangle::from_f64(3.0, 4.0).unwrap();
    let style = FigureStyle::default();
    for (family, deg) in gallery_angles() {
        let doc = build_configuration(family, &tri, &Scalar::float(deg as f64)).unwrap();
        let svg = render_svg(&doc, &style).unwrap();
        let path = golden_dir().join(format!("{}_{deg:03}.svg", family.name()));
        if update {
            std::fs::create_dir_all(golden_dir()).unwrap();
            std::fs::write(&path, &svg).unwrap();
            continue;
        }
        let golden = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let (got, want) = (SvgStructure::parse(&svg), SvgStructure::parse(&golden));
        assert!(got.matches(&want), "{} differs", path.display());
        assert_eq!(got.tags["path"], doc.polygons.len());
    }
}

#[test]
fn structure_detects_changes() {
    let tri = RightTriangle::from_f64(3.0, 4.0).unwrap();
    let doc = build_configuration(Family::Ziggurat, &tri, &Scalar::float(90.0)).unwrap();
    let svg = render_svg(&doc, &FigureStyle::default()).unwrap();
    let base = SvgStructure::parse(&svg);
    assert!(base.matches(&SvgStructure::parse(&svg)));
    assert!(!base.matches(&SvgStructure::parse(&svg.replacen("<circle", "<rect", 1))));
    assert!(!base.matches(&SvgStructure::parse(&svg.replacen(">A<", ">Z<", 1))));
    let (x, y) = doc.points["A"].to_f64();
    let mut moved = doc.clone();
    moved.points.insert("A".into(), Point::from_f64(x + 1e-3, y));
    let svg2 = render_svg(&moved, &FigureStyle::default()).unwrap();
    assert!(!base.matches(&SvgStructure::parse(&svg2)));
}

#[test]
fn gallery_is_eight_distinct_files() {
    let names: std::collections::BTreeSet<String> = gallery_angles()
        .iter()
        .map(|(f, d)| format!("{}_{d:03}.svg", f.name()))
        .collect();
    assert_eq!(names.len(), 8);
    assert!(names.contains("ziggurat_108.svg") && names.contains("pyramid_072.svg"));
}
