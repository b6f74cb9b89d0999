//! Command-line front end: matrix generators, boundary-data extraction,
//! bound and optimizer pipelines, and the verification suite, with CSV and
//! JSON emission.
//!
//! Every command is deterministic given its inputs and flags (fixed seeds,
//! no timestamps), so outputs can be diffed byte for byte. CSV files carry
//! `#`-prefixed metadata lines (tool version, seed, node count) above a
//! single rectangular table; JSON outputs carry the same metadata in a
//! `meta` object.
//!
//! Exit codes: 0 success, 1 input or region error, 2 numerical failure,
//! 3 verification failure.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::blaschke::{maximize_norm, rescale_to_unit_disk, thm2_checks};
use crate::cauchykit::{conjecture_probe, BoundaryFunction};
use crate::error::{Error, Result};
use crate::matkernel::{
    jordan_block, perturbed_jordan, random_upper_triangular, spectrum, ComplexMatrix,
};
use crate::regions::{circle_curve, min_enclosing_circle, numerical_range_curve, Circle, Region};
use crate::spectralset::{compute_bounds_with_start, delta_gamma_hat, lambda_min_profile};
use crate::verify::{all_gating_passed, run as run_checks, VerifyLevel};

const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Spectral-set bound computations from the command line.
#[derive(Parser)]
#[command(
    name = "kspectral",
    version,
    about = "K-spectral-set bounds, profiles, and optimal Blaschke products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    /// Jordan block with zero eigenvalue (ones on the superdiagonal).
    Jordan,
    /// Jordan block with an extra `--eps` entry in the bottom-left corner.
    PerturbedJordan,
    /// Seeded random complex upper triangular (Gaussian entries).
    Randut,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    /// Trimmed seeded workloads; a fast smoke run.
    Quick,
    /// The definitive workloads.
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated matrix as JSON.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// Dimension (at least 2).
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Corner perturbation for `perturbed-jordan` (ignored otherwise).
        #[arg(long, default_value_t = 0.0)]
        eps: f64,
        /// RNG seed for `randut` (ignored otherwise).
        #[arg(long, default_value_t = 12345)]
        seed: u64,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Numerical range boundary points plus the eigenvalues.
    Numrange {
        /// Matrix file (JSON: {"n": ..., "rows": [[[re, im], ...], ...]}).
        #[arg(long)]
        matrix: PathBuf,
        /// Boundary samples (at least 64).
        #[arg(long, default_value_t = 1024)]
        nodes: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smallest density eigenvalue along circles about the spectrum's
    /// minimal enclosing circle center, in long format.
    Profile {
        #[arg(long)]
        matrix: PathBuf,
        /// Comma-separated circle radii; default is a six-step geometric
        /// sweep from 1.1 to 2.2 times the enclosing radius.
        #[arg(long)]
        radii: Option<String>,
        /// Quadrature nodes per circle (at least 64).
        #[arg(long, default_value_t = 1024)]
        nodes: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bound report (delta, gamma_hat, K bounds) on a region boundary.
    Bounds {
        #[arg(long)]
        matrix: PathBuf,
        /// Region spec: circle:cx,cy,R | circles:... | nr | nr-scaled:eps
        /// | mec-scaled:factor.
        #[arg(long)]
        region: String,
        /// Starting node count for the adaptive refinement (at least 64).
        #[arg(long, default_value_t = 1024)]
        nodes: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Norm-maximizing Blaschke product on a disk, with optimality checks
    /// and the operator-norm probe.
    Blaschke {
        #[arg(long)]
        matrix: PathBuf,
        /// Disk spec: circle:cx,cy,R (must enclose the spectrum).
        #[arg(long)]
        region: String,
        /// Quadrature nodes for the probe integrals (at least 64).
        #[arg(long, default_value_t = 512)]
        nodes: usize,
        /// Optimizer restarts (at least 1).
        #[arg(long, default_value_t = 50)]
        restarts: usize,
        #[arg(long, default_value_t = 12345)]
        seed: u64,
        /// Blaschke degree (default: dimension − 1).
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the acceptance checks and exit 0 (all gating passed) or 3.
    Verify {
        #[arg(value_enum, default_value_t = LevelArg::Quick)]
        level: LevelArg,
    },
}

/// Entry point: parses arguments, dispatches, maps errors to exit codes.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Input(_) | Error::Region(_) => 1,
                Error::Numerical(_) | Error::Singularity(_) | Error::UnsupportedRegion(_) => 2,
            }
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Gen {
            kind,
            n,
            eps,
            seed,
            out,
        } => cmd_gen(kind, n, eps, seed, out.as_deref()),
        Command::Numrange {
            matrix,
            nodes,
            format,
            out,
        } => cmd_numrange(&matrix, nodes, format, out.as_deref()),
        Command::Profile {
            matrix,
            radii,
            nodes,
            format,
            out,
        } => cmd_profile(&matrix, radii.as_deref(), nodes, format, out.as_deref()),
        Command::Bounds {
            matrix,
            region,
            nodes,
            format,
            out,
        } => cmd_bounds(&matrix, &region, nodes, format, out.as_deref()),
        Command::Blaschke {
            matrix,
            region,
            nodes,
            restarts,
            seed,
            degree,
            out,
        } => cmd_blaschke(
            &matrix,
            &region,
            nodes,
            restarts,
            seed,
            degree,
            out.as_deref(),
        ),
        Command::Verify { level } => cmd_verify(level),
    }
}

/// On-disk matrix format: dimension plus row-major [re, im] entry pairs.
#[derive(Serialize, Deserialize)]
struct MatrixFile {
    n: usize,
    rows: Vec<Vec<[f64; 2]>>,
}

fn read_matrix(path: &Path) -> Result<ComplexMatrix> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    let file: MatrixFile = serde_json::from_str(&text)
        .map_err(|e| Error::Input(format!("bad matrix file {}: {e}", path.display())))?;
    if file.rows.len() != file.n || file.rows.iter().any(|r| r.len() != file.n) {
        return Err(Error::Input(format!(
            "matrix file {} is not {n} by {n}",
            path.display(),
            n = file.n
        )));
    }
    let rows: Vec<Vec<Complex64>> = file
        .rows
        .iter()
        .map(|r| r.iter().map(|[re, im]| Complex64::new(*re, *im)).collect())
        .collect();
    ComplexMatrix::from_rows(&rows)
}

fn matrix_to_json(m: &ComplexMatrix) -> String {
    let n = m.dim();
    let rows: Vec<Vec<[f64; 2]>> = (0..n)
        .map(|i| (0..n).map(|j| [m.get(i, j).re, m.get(i, j).im]).collect())
        .collect();
    let mut text = serde_json::to_string_pretty(&MatrixFile { n, rows })
        .expect("matrix serialization cannot fail");
    text.push('\n');
    text
}

fn emit(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn ensure_node_floor(nodes: usize) -> Result<()> {
    if nodes < 64 {
        return Err(Error::Input(format!("need at least 64 nodes, got {nodes}")));
    }
    Ok(())
}

fn cmd_gen(kind: GenKind, n: usize, eps: f64, seed: u64, out: Option<&Path>) -> Result<i32> {
    if n < 2 {
        return Err(Error::Input(format!(
            "dimension must be at least 2, got {n}"
        )));
    }
    if !(eps.is_finite() && eps >= 0.0) {
        return Err(Error::Input(format!(
            "perturbation must be finite and nonnegative, got {eps}"
        )));
    }
    let m = match kind {
        GenKind::Jordan => jordan_block(n),
        GenKind::PerturbedJordan => perturbed_jordan(n, eps),
        GenKind::Randut => random_upper_triangular(n, seed),
    };
    emit(out, &matrix_to_json(&m))?;
    Ok(0)
}

/// Eigenvalues sorted by real then imaginary part, for stable output.
fn sorted_spectrum(a: &ComplexMatrix) -> Result<Vec<Complex64>> {
    let mut eigs = spectrum(a)?;
    eigs.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
    Ok(eigs)
}

fn cmd_numrange(matrix: &Path, nodes: usize, format: Format, out: Option<&Path>) -> Result<i32> {
    ensure_node_floor(nodes)?;
    let a = read_matrix(matrix)?;
    let curve = numerical_range_curve(&a, nodes)?;
    let eigs = sorted_spectrum(&a)?;
    let points: Vec<(f64, Complex64)> = curve
        .quad_points()
        .enumerate()
        .map(|(j, (z, _, _))| (2.0 * std::f64::consts::PI * j as f64 / nodes as f64, z))
        .collect();

    let content = match format {
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(s, "# kspectral {VERSION} numrange");
            let _ = writeln!(s, "# nodes {nodes}");
            let _ = writeln!(s, "# theta is the uniform arclength parameter in [0, 2pi)");
            for e in &eigs {
                let _ = writeln!(s, "# eigenvalue {:.16e} {:.16e}", e.re, e.im);
            }
            let _ = writeln!(s, "theta,re_sigma,im_sigma");
            for (theta, z) in &points {
                let _ = writeln!(s, "{theta:.16e},{:.16e},{:.16e}", z.re, z.im);
            }
            s
        }
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&json!({
                "meta": {"tool": "kspectral", "version": VERSION, "nodes": nodes},
                "eigenvalues": eigs.iter().map(|e| [e.re, e.im]).collect::<Vec<_>>(),
                "points": points
                    .iter()
                    .map(|(theta, z)| json!({"theta": theta, "re": z.re, "im": z.im}))
                    .collect::<Vec<_>>(),
            }))
            .expect("json serialization cannot fail");
            text.push('\n');
            text
        }
    };
    emit(out, &content)?;
    Ok(0)
}

fn parse_radii(spec: &str) -> Result<Vec<f64>> {
    let radii: Vec<f64> = spec
        .split(',')
        .map(|part| {
            let r: f64 = part
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("bad radius {part:?}")))?;
            if !(r.is_finite() && r > 0.0) {
                return Err(Error::Input(format!("radius must be positive, got {r}")));
            }
            Ok(r)
        })
        .collect::<Result<_>>()?;
    if radii.is_empty() {
        return Err(Error::Input("need at least one radius".into()));
    }
    Ok(radii)
}

/// Six radii in geometric progression from 1.1 to 2.2 times the enclosing
/// radius of the spectrum.
fn default_radius_sweep(mec: Circle) -> Result<Vec<f64>> {
    if mec.radius <= 0.0 {
        return Err(Error::Input(
            "spectrum is a single point, so no default sweep exists; pass --radii".into(),
        ));
    }
    let ratio = 2.0f64.powf(0.2);
    Ok((0..6).map(|i| 1.1 * mec.radius * ratio.powi(i)).collect())
}

/// One sweep circle: its index, radius, and per-node (arclength, λ_min) rows.
type CircleProfile = (usize, f64, Vec<(f64, f64)>);

fn cmd_profile(
    matrix: &Path,
    radii: Option<&str>,
    nodes: usize,
    format: Format,
    out: Option<&Path>,
) -> Result<i32> {
    ensure_node_floor(nodes)?;
    let a = read_matrix(matrix)?;
    let mec = min_enclosing_circle(&spectrum(&a)?)?;
    let radii = match radii {
        Some(spec) => parse_radii(spec)?,
        None => default_radius_sweep(mec)?,
    };

    let mut circles: Vec<CircleProfile> = Vec::new();
    for (index, &radius) in radii.iter().enumerate() {
        let curve = circle_curve(Circle::new(mec.center, radius)?, nodes)?;
        let profile = lambda_min_profile(&curve, &a)?;
        let mut s = 0.0;
        let rows: Vec<(f64, f64)> = curve
            .quad_points()
            .zip(profile.values())
            .map(|((_, _, w), lambda)| {
                let row = (s, *lambda);
                s += w;
                row
            })
            .collect();
        circles.push((index, radius, rows));
    }

    let content = match format {
        Format::Csv => {
            let mut text = String::new();
            let _ = writeln!(text, "# kspectral {VERSION} profile");
            let _ = writeln!(text, "# nodes {nodes}");
            let _ = writeln!(
                text,
                "# center {:.16e} {:.16e}",
                mec.center.re, mec.center.im
            );
            let _ = writeln!(text, "circle_index,R,s,lambda_min");
            for (index, radius, rows) in &circles {
                for (s, lambda) in rows {
                    let _ = writeln!(text, "{index},{radius:.16e},{s:.16e},{lambda:.16e}");
                }
            }
            text
        }
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&json!({
                "meta": {"tool": "kspectral", "version": VERSION, "nodes": nodes,
                         "center": [mec.center.re, mec.center.im]},
                "circles": circles
                    .iter()
                    .map(|(index, radius, rows)| json!({
                        "circle_index": index,
                        "R": radius,
                        "s": rows.iter().map(|r| r.0).collect::<Vec<_>>(),
                        "lambda_min": rows.iter().map(|r| r.1).collect::<Vec<_>>(),
                    }))
                    .collect::<Vec<_>>(),
            }))
            .expect("json serialization cannot fail");
            text.push('\n');
            text
        }
    };
    emit(out, &content)?;
    Ok(0)
}

fn cmd_bounds(
    matrix: &Path,
    region_spec: &str,
    nodes: usize,
    format: Format,
    out: Option<&Path>,
) -> Result<i32> {
    ensure_node_floor(nodes)?;
    let a = read_matrix(matrix)?;
    let region = Region::parse(region_spec)?;
    let report = compute_bounds_with_start(&region, &a, nodes)?;

    let content = match format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&json!({
                "meta": {"tool": "kspectral", "version": VERSION,
                         "region": region_spec, "nodes": nodes},
                "delta": report.delta,
                "gamma_hat": report.gamma_hat,
                "two_plus_delta": report.two_plus_delta,
                "k_delta": report.k_delta,
                "k_cauchy": report.k_cauchy,
                "node_count": report.node_count,
            }))
            .expect("json serialization cannot fail");
            text.push('\n');
            text
        }
        Format::Csv => {
            let mut text = String::new();
            let _ = writeln!(text, "# kspectral {VERSION} bounds");
            let _ = writeln!(text, "# region {region_spec}");
            let _ = writeln!(text, "# nodes {nodes}");
            let _ = writeln!(
                text,
                "delta,gamma_hat,two_plus_delta,k_delta,k_cauchy,node_count"
            );
            let _ = writeln!(
                text,
                "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{}",
                report.delta,
                report.gamma_hat,
                report.two_plus_delta,
                report.k_delta,
                report.k_cauchy,
                report.node_count
            );
            text
        }
    };
    emit(out, &content)?;
    Ok(0)
}

fn cmd_blaschke(
    matrix: &Path,
    region_spec: &str,
    nodes: usize,
    restarts: usize,
    seed: u64,
    degree: Option<usize>,
    out: Option<&Path>,
) -> Result<i32> {
    ensure_node_floor(nodes)?;
    let a = read_matrix(matrix)?;
    let disk = match Region::parse(region_spec)? {
        Region::Circle(c) => c,
        _ => {
            return Err(Error::Input(
                "the optimizer works on a disk; pass --region circle:cx,cy,R".into(),
            ))
        }
    };
    let psi = rescale_to_unit_disk(&a, disk);
    let degree = degree.unwrap_or(a.dim() - 1);
    let opt = maximize_norm(&psi, degree, restarts, seed)?;
    let checks = thm2_checks(&psi, &opt)?;

    let curve = circle_curve(disk, nodes)?;
    let profile = lambda_min_profile(&curve, &a)?;
    let (delta, gamma_hat) = delta_gamma_hat(&profile);
    let f = BoundaryFunction::blaschke_on_disk(&curve, disk, &opt.product)?.normalized()?;
    let probe = conjecture_probe(&f, &a, &profile)?;

    let mut text = serde_json::to_string_pretty(&json!({
        "meta": {"tool": "kspectral", "version": VERSION, "region": region_spec,
                 "nodes": nodes, "restarts": restarts, "seed": seed, "degree": degree},
        "disk": {"center": [disk.center.re, disk.center.im], "radius": disk.radius},
        "roots": opt.product.roots().iter().map(|r| [r.re, r.im]).collect::<Vec<_>>(),
        "phase": opt.product.phase(),
        "norm": opt.norm,
        "delta": delta,
        "gamma_hat": gamma_hat,
        "two_plus_delta": 2.0 + delta,
        "orthogonality_residual": opt.orthogonality_residual,
        "degenerate_root": opt.degenerate_root,
        "restarts_disagree": opt.restarts_disagree,
        "optimality": {
            "applicable": checks.applicable,
            "orthogonality_ok": checks.orthogonality_ok,
            "stationarity_ok": checks.stationarity_ok,
        },
        "probe": {
            "norm_fa": probe.norm_fa,
            "norm_fa_plus_ga_star": probe.norm_fa_plus_ga_star,
            "norm_s": probe.norm_s,
            "singular_identity_residual": probe.singular_identity_residual,
        },
    }))
    .expect("json serialization cannot fail");
    text.push('\n');
    emit(out, &text)?;
    Ok(0)
}

fn cmd_verify(level: LevelArg) -> Result<i32> {
    let level = match level {
        LevelArg::Quick => VerifyLevel::Quick,
        LevelArg::Full => VerifyLevel::Full,
    };
    let outcomes = run_checks(level);
    for o in &outcomes {
        println!(
            "{} [{}] {:>2}. {:<34} {:>7.2}s  {}",
            if o.passed { "PASS" } else { "FAIL" },
            if o.gating { "gate" } else { "info" },
            o.id,
            o.name,
            o.seconds,
            o.detail
        );
    }
    if all_gating_passed(&outcomes) {
        println!("verify: all gating checks passed");
        Ok(0)
    } else {
        println!("verify: gating checks FAILED");
        Ok(3)
    }
}
