//! Command-line front end. [`run`] is the whole program minus process exit,
//! so tests can drive it in-process.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zigg_core::constructions::{Family, RightTriangle};
use zigg_core::figures::{gallery_angles, render_svg, FigureStyle};
use zigg_core::numeric::{parse_rational, rational_to_f64, Rational, Scalar};
use zigg_core::report::{to_stable_json, ConfigRequest, ConfigResponse};
use zigg_core::symbolic::{prove_text, ProverError, RuleSet};
use zigg_core::verification::{CheckStatus, PYRAMID_SPECIAL_ANGLES, ZIGGURAT_SPECIAL_ANGLES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "zigg", version, about = "Ziggurat and pyramid area configurations over right triangles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build one configuration and audit every identity.
    Verify(VerifyArgs),
    /// Audit a range of angles, one row per angle.
    Sweep(SweepArgs),
    /// Render one configuration (or the eight gallery angles) to SVG.
    Figure(FigureArgs),
    /// Decide a trigonometric identity by normal-form comparison.
    Prove(ProveArgs),
    /// Run the local JSON service.
    Serve(ServeArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Ziggurat,
    Pyramid,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Ziggurat => Family::Ziggurat,
            FamilyArg::Pyramid => Family::Pyramid,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct TriangleArgs {
    /// Leg a, decimal or rational.
    #[arg(long, default_value = "3", value_parser = rational_arg)]
    pub a: Rational,
    /// Leg b, decimal or rational.
    #[arg(long, default_value = "4", value_parser = rational_arg)]
    pub b: Rational,
    #[arg(long, value_enum, default_value_t = FamilyArg::Ziggurat)]
    pub family: FamilyArg,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub triangle: TriangleArgs,
    /// Angle in degrees, e.g. 135, 77.3 or 540/4.
    #[arg(long, value_parser = rational_arg)]
    pub theta: Rational,
    /// Zero-tolerance checks in the quadratic field; needs a special angle.
    #[arg(long)]
    pub exact: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub triangle: TriangleArgs,
    #[arg(long, value_parser = rational_arg)]
    pub theta_min: Rational,
    #[arg(long, value_parser = rational_arg)]
    pub theta_max: Rational,
    /// Number of angles, both ends included.
    #[arg(long, default_value_t = 76)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[command(flatten)]
    pub triangle: TriangleArgs,
    #[arg(long, value_parser = rational_arg, required_unless_present = "gallery")]
    pub theta: Option<Rational>,
    /// Output file; defaults to `<family>_<theta>.svg`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the eight gallery figures into this directory instead.
    #[arg(long, conflicts_with_all = ["theta", "out"])]
    pub gallery: Option<PathBuf>,
    #[arg(long, default_value_t = 640.0)]
    pub width: f64,
    #[arg(long, default_value_t = 640.0)]
    pub height: f64,
    /// Leave out the area annotations.
    #[arg(long)]
    pub no_areas: bool,
}

#[derive(Debug, Args)]
pub struct ProveArgs {
    /// Identity `LHS = RHS` in the angle variable `t`.
    pub identity: String,
    /// Disable the Pythagorean rule (the default).
    #[arg(long, conflicts_with = "pythagorean")]
    pub no_pythagorean: bool,
    /// Enable the Pythagorean rule `sin² = 1 − cos²`.
    #[arg(long)]
    pub pythagorean: bool,
    /// Enable `cos 2t = 2cos² t − 1` (the default).
    #[arg(long, conflicts_with = "no_double_cos")]
    pub allow_double_cos: bool,
    #[arg(long)]
    pub no_double_cos: bool,
    #[arg(long)]
    pub no_double_sin: bool,
    #[arg(long)]
    pub no_angle_sum: bool,
    #[arg(long)]
    pub no_angle_shift: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl ProveArgs {
    pub fn rules(&self) -> RuleSet {
        RuleSet {
            angle_shift: !self.no_angle_shift,
            angle_sum: !self.no_angle_sum,
            double_sin: !self.no_double_sin,
            double_cos_paper: !self.no_double_cos,
            pythagorean: self.pythagorean,
        }
    }
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[arg(long, default_value = zigg_service::DEFAULT_HOST)]
    pub host: String,
    #[arg(long, default_value_t = zigg_service::DEFAULT_PORT)]
    pub port: u16,
    /// Directory of static assets served at `/`.
    #[arg(long)]
    pub static_dir: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the command.
/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Sweep(a) => cmd_sweep(&a, out),
        Command::Figure(a) => cmd_figure(&a, out),
        Command::Prove(a) => cmd_prove(&a, out),
        Command::Serve(a) => cmd_serve(&a),
    };
    match result {
        Ok(code) => code,
        Err(CmdError { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

#[derive(Debug)]
pub struct CmdError {
    pub code: i32,
    pub message: String,
}

impl CmdError {
    fn usage(message: impl ToString) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn io(message: impl ToString) -> Self {
        Self {
            code: EXIT_IO,
            message: message.to_string(),
        }
    }
}

type CmdResult = Result<i32, CmdError>;

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CmdError> {
    out.write_all(text.as_bytes()).map_err(CmdError::io)
}

fn request(tri: &TriangleArgs, theta: &Rational, exact: bool) -> ConfigRequest {
    ConfigRequest {
        family: tri.family.into(),
        a: tri.a.clone(),
        b: tri.b.clone(),
        theta: theta.clone(),
        exact,
    }
}

fn integer_degrees(theta: &Rational) -> Option<i64> {
    if theta.is_integer() {
        theta.to_integer().try_into().ok()
    } else {
        None
    }
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    if args.exact {
        let specials: &[i64] = match args.triangle.family {
            FamilyArg::Ziggurat => &ZIGGURAT_SPECIAL_ANGLES,
            FamilyArg::Pyramid => &PYRAMID_SPECIAL_ANGLES,
        };
        if !integer_degrees(&args.theta).is_some_and(|d| specials.contains(&d)) {
            return Err(CmdError::usage(format!("--exact needs one of the special angles {specials:?}")));
        }
    }
    let resp = ConfigResponse::from_request(&request(&args.triangle, &args.theta, args.exact))
        .map_err(CmdError::usage)?;
    match args.format {
        Format::Json => emit(out, &(to_stable_json(&resp) + "\n"))?,
        Format::Text => emit(out, &verify_text(&resp))?,
    }
    Ok(if resp.verification.all_passed { EXIT_OK } else { EXIT_FAILURE })
}

fn verify_text(resp: &ConfigResponse) -> String {
    let mut s = String::new();
    let names = match resp.family {
        Family::Pyramid => ["pyramid_a", "pyramid_b", "pyramid_c"],
        _ => ["ziggurat_a", "ziggurat_b", "ziggurat_c"],
    };
    let area = |n: &str| fmt_short(resp.areas.get(n).copied().unwrap_or(f64::NAN));
    s.push_str(&format!("areas: {} + {} = {}\n", area(names[0]), area(names[1]), area(names[2])));
    let flags: Vec<&str> = resp
        .degeneracy
        .flags()
        .iter()
        .filter(|(_, on)| *on)
        .map(|(n, _)| *n)
        .collect();
    s.push_str(&format!("degeneracy: {}\n", if flags.is_empty() { "none".to_string() } else { flags.join(", ") }));
    s.push_str(&resp.verification.to_text());
    s
}

fn fmt_short(v: f64) -> String {
    let s = format!("{v:.9}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// One row of a sweep.
#[derive(Debug, Serialize)]
pub struct SweepRow {
    pub theta: f64,
    /// Relative additivity residual of the three shapes.
    pub residual: f64,
    pub theorem: CheckStatus,
    pub degeneracy: Vec<&'static str>,
    pub audits: std::collections::BTreeMap<String, CheckStatus>,
    pub all_passed: bool,
}

fn sweep_angles(min: &Rational, max: &Rational, steps: usize) -> Vec<Rational> {
    if steps == 1 {
        return vec![min.clone()];
    }
    let span = max - min;
    let last = Rational::from_integer((steps as i64 - 1).into());
    (0..steps)
        .map(|i| min + &span * Rational::from_integer((i as i64).into()) / &last)
        .collect()
}

pub fn sweep_rows(args: &SweepArgs) -> Result<Vec<SweepRow>, CmdError> {
    if args.steps == 0 {
        return Err(CmdError::usage("--steps must be at least 1"));
    }
    let family: Family = args.triangle.family.into();
    let (theorem, audits): (&str, &[&str]) = match family {
        Family::Pyramid => ("theorem_b", &["decomposition_b"]),
        _ => (
            "theorem_a",
            &["decomposition_a1", "decomposition_a2", "formula_audit_central_parallelogram", "d_theta_audit"],
        ),
    };
    let mut rows = Vec::with_capacity(args.steps);
    for theta in sweep_angles(&args.theta_min, &args.theta_max, args.steps) {
        let resp = ConfigResponse::from_request(&request(&args.triangle, &theta, false)).map_err(CmdError::usage)?;
        let report = &resp.verification;
        let th = report.get(theorem).expect("theorem check present");
        rows.push(SweepRow {
            theta: rational_to_f64(&theta),
            residual: th.values.get("residual").copied().unwrap_or(f64::NAN),
            theorem: th.status,
            degeneracy: resp.degeneracy.flags().iter().filter(|(_, on)| *on).map(|(n, _)| *n).collect(),
            audits: audits
                .iter()
                .filter_map(|n| report.get(n).map(|c| (n.to_string(), c.status)))
                .collect(),
            all_passed: report.all_passed,
        });
    }
    Ok(rows)
}

/// Largest residual over rows whose theorem check ran.
pub fn max_residual(rows: &[SweepRow]) -> f64 {
    rows.iter()
        .filter(|r| r.theorem != CheckStatus::DegenerateSkip)
        .map(|r| r.residual)
        .fold(0.0, f64::max)
}

pub fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> CmdResult {
    let rows = sweep_rows(args)?;
    let max = max_residual(&rows);
    let ok = rows.iter().all(|r| r.all_passed);
    match args.format {
        Format::Json => {
            let doc = serde_json::json!({ "rows": rows, "max_residual": max, "all_passed": ok });
            emit(out, &(to_stable_json(&doc) + "\n"))?;
        }
        Format::Text => {
            let mut s = format!("{:>10}  {:>10}  {:<15}  {:<40}  degeneracy\n", "theta", "residual", "theorem", "audits");
            for r in &rows {
                let audits: Vec<String> = r.audits.iter().map(|(k, v)| format!("{}={}", short_audit(k), v.label())).collect();
                s.push_str(&format!(
                    "{:>10}  {:>10.3e}  {:<15}  {:<40}  {}\n",
                    fmt_short(r.theta),
                    r.residual,
                    r.theorem.label(),
                    audits.join(" "),
                    if r.degeneracy.is_empty() { "-".to_string() } else { r.degeneracy.join(",") }
                ));
            }
            s.push_str(&format!("max residual: {max:.3e}\n"));
            emit(out, &s)?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILURE })
}

fn short_audit(name: &str) -> &str {
    match name {
        "formula_audit_central_parallelogram" => "central",
        "d_theta_audit" => "d_theta",
        "decomposition_a1" => "a1",
        "decomposition_a2" => "a2",
        "decomposition_b" => "b",
        other => other,
    }
}

fn style(args: &FigureArgs) -> FigureStyle {
    FigureStyle {
        width: args.width,
        height: args.height,
        show_areas: !args.no_areas,
        ..FigureStyle::default()
    }
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CmdError> {
    std::fs::write(path, text).map_err(|e| CmdError::io(format!("{}: {e}", path.display())))
}

pub fn cmd_figure(args: &FigureArgs, out: &mut dyn Write) -> CmdResult {
    if !(args.width > 0.0 && args.height > 0.0) {
        return Err(CmdError::usage("--width and --height must be positive"));
    }
    let style = style(args);
    if let Some(dir) = &args.gallery {
        std::fs::create_dir_all(dir).map_err(|e| CmdError::io(format!("{}: {e}", dir.display())))?;
        let tri = RightTriangle::from_f64(rational_to_f64(&args.triangle.a), rational_to_f64(&args.triangle.b))
            .map_err(CmdError::usage)?;
        for (family, deg) in gallery_angles() {
            let doc = zigg_core::constructions::build_configuration(family, &tri, &Scalar::float(deg as f64))
                .map_err(CmdError::usage)?;
            let svg = render_svg(&doc, &style).map_err(CmdError::usage)?;
            let path = dir.join(format!("{}_{deg:03}.svg", family.name()));
            write_file(&path, &svg)?;
            emit(out, &format!("wrote {}\n", path.display()))?;
        }
        return Ok(EXIT_OK);
    }
    let theta = args.theta.as_ref().expect("clap requires theta without gallery");
    let req = request(&args.triangle, theta, false);
    let doc = req.build().map_err(CmdError::usage)?;
    let svg = render_svg(&doc, &style).map_err(CmdError::usage)?;
    let path = args.out.clone().unwrap_or_else(|| {
        PathBuf::from(format!("{}_{}.svg", doc.family.name(), zigg_core::figures::theta_key(&doc.theta)))
    });
    write_file(&path, &svg)?;
    let flagged = doc.degeneracy.flags().iter().filter(|(_, on)| *on).count();
    emit(
        out,
        &format!(
            "wrote {} ({} pieces, {} points, {} degeneracy flags)\n",
            path.display(),
            doc.polygons.len(),
            doc.points.len(),
            flagged
        ),
    )?;
    Ok(EXIT_OK)
}

pub fn cmd_prove(args: &ProveArgs, out: &mut dyn Write) -> CmdResult {
    let report = match prove_text(&args.identity, args.rules()) {
        Ok(r) => r,
        Err(ProverError::Parse(e)) => return Err(CmdError::usage(format!("{}\n  {}\n  {}^", e, args.identity, " ".repeat(e.column.saturating_sub(1))))),
        Err(e) => return Err(CmdError::usage(e)),
    };
    match args.format {
        Format::Json => emit(out, &(to_stable_json(&report) + "\n"))?,
        Format::Text => emit(
            out,
            &format!(
                "{}\nlhs: {}\n  => {}\nrhs: {}\n  => {}\nrules used: {}\n",
                if report.proved { "proved" } else { "not proved" },
                report.lhs,
                report.lhs_normal,
                report.rhs,
                report.rhs_normal,
                if report.rules_used.is_empty() { "none".to_string() } else { report.rules_used.join(", ") }
            ),
        )?,
    }
    Ok(if report.proved { EXIT_OK } else { EXIT_FAILURE })
}

pub fn cmd_serve(args: &ServeArgs) -> CmdResult {
    let rt = tokio::runtime::Runtime::new().map_err(CmdError::io)?;
    rt.block_on(zigg_service::serve(&args.host, args.port, args.static_dir.clone()))
        .map_err(CmdError::io)?;
    Ok(EXIT_OK)
}
