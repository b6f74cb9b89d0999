//! Acceptance suite: the checks a correct build must pass, end to end.
//!
//! Each check exercises one verified behavior of the library, from curve
//! discretization through the bound formulas, the Blaschke optimizer, and
//! the Cauchy-transform operators. [`run`] executes all checks and returns
//! one outcome per check; the CLI renders the outcomes as a table and maps
//! them onto an exit code, and the acceptance tests assert on them
//! directly. All randomness is seeded, so outcomes are reproducible.

use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::blaschke::{eval_scalar, maximize_norm, rescale_to_unit_disk, thm2_checks};
use crate::cauchykit::{
    assemble_s, conjecture_probe, g_boundary_values, g_of_matrix, hull_check, BoundaryFunction,
};
use crate::error::Result;
use crate::matkernel::{
    jordan_block, perturbed_jordan, random_upper_triangular, spectrum, ComplexMatrix,
};
use crate::regions::{
    circle_curve, min_enclosing_circle, numerical_range_curve, scale_inward_curve, Circle,
};
use crate::spectralset::{
    cauchy_bound, delta_gamma_hat, k_from_delta, lambda_min_profile, mu_integral_check,
    perturbation_bound_at,
};

/// How much of the randomized workload to run.
///
/// `Quick` trims the seeded sweeps (fewer matrices, fewer restarts, coarser
/// quadrature) for a fast smoke run; `Full` runs the definitive workloads
/// every numbered check is specified against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VerifyLevel {
    Quick,
    Full,
}

/// Result of one acceptance check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    /// Stable check number, 1-based.
    pub id: usize,
    /// Short name of the verified behavior.
    pub name: &'static str,
    /// Whether the check passed.
    pub passed: bool,
    /// Non-gating checks report observations; their `passed` flag never
    /// affects the suite verdict.
    pub gating: bool,
    /// Measured quantities, one line.
    pub detail: String,
    /// Wall-clock time of this check.
    pub seconds: f64,
}

/// Runs the whole suite at the given level. Never panics; a check that
/// errors internally is reported as failed with the error text.
pub fn run(level: VerifyLevel) -> Vec<CheckOutcome> {
    type CheckFn = fn(VerifyLevel) -> Result<(bool, String)>;
    let checks: [(&'static str, bool, CheckFn); 11] = [
        ("jordan-disk-sharpness", true, check_disk_sharpness),
        ("k-delta-formula-regression", true, check_k_delta_regression),
        ("two-plus-delta-consistency", true, check_two_plus_delta),
        ("mu-integral-identity", true, check_mu_integral),
        ("numerical-range-boundary-zero", true, check_boundary_zero),
        ("extremal-orthogonality", true, check_extremal_orthogonality),
        (
            "enclosing-disk-contraction-bound",
            true,
            check_enclosing_disk_bound,
        ),
        ("disk-cauchy-transform", true, check_disk_cauchy),
        ("inward-perturbation-bound", true, check_inward_perturbation),
        ("radius-sweep-monotonicity", true, check_radius_sweep),
        ("conjecture-probe", false, check_conjecture_probe),
    ];
    checks
        .iter()
        .enumerate()
        .map(|(idx, (name, gating, f))| {
            let started = Instant::now();
            let (passed, detail) = match f(level) {
                Ok(outcome) => outcome,
                Err(e) => (false, format!("error: {e}")),
            };
            CheckOutcome {
                id: idx + 1,
                name,
                passed,
                gating: *gating,
                detail,
                seconds: started.elapsed().as_secs_f64(),
            }
        })
        .collect()
}

/// True when every gating check passed.
pub fn all_gating_passed(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().all(|o| o.passed || !o.gating)
}

/// Reference rows frozen from published three-decimal tables: formula
/// inputs (delta, gamma_hat) with the expected K_delta. The source rounds
/// upper bounds up, so a computed value matches when it is within 5e-4 or
/// when its three-decimal ceiling equals the printed number.
const K_DELTA_ROWS: [(f64, f64, f64); 12] = [
    (7.0485, 7.0485, 9.865),
    (2.2291, 2.2291, 4.890),
    (0.7209, 0.7209, 3.251),
    (0.0377, 0.1179, 2.488),
    (-0.3388, 0.3388, 2.255),
    (-0.5767, 0.5767, 2.155),
    (2.2234, 2.2234, 4.884),
    (1.0969, 1.0969, 3.669),
    (0.4557, 0.4557, 2.950),
    (0.0201, 0.0946, 2.465),
    (-0.2999, 0.2999, 2.273),
    (-0.5456, 0.5456, 2.168),
];

/// The same deltas paired with the printed 2 + delta column.
const TWO_PLUS_DELTA_ROWS: [(f64, f64); 12] = [
    (7.0485, 9.049),
    (2.2291, 4.230),
    (0.7209, 2.721),
    (0.0377, 2.038),
    (-0.3388, 1.662),
    (-0.5767, 1.424),
    (2.2234, 4.224),
    (1.0969, 3.097),
    (0.4557, 2.456),
    (0.0201, 2.021),
    (-0.2999, 1.701),
    (-0.5456, 1.455),
];

fn ceil3(x: f64) -> f64 {
    (x * 1000.0).ceil() / 1000.0
}

/// Printed-value gate: within 5e-4, or equal after ceiling to three
/// decimals (how the reference tables round upper bounds).
fn matches_printed(computed: f64, printed: f64) -> bool {
    (computed - printed).abs() <= 5e-4 || (ceil3(computed) - printed).abs() < 1e-9
}

fn origin_circle(r: f64, nodes: usize) -> Result<crate::regions::BoundaryCurve> {
    circle_curve(Circle::new(Complex64::new(0.0, 0.0), r)?, nodes)
}

/// Dense seeded matrix with independent standard complex Gaussian entries.
fn dense_gaussian(n: usize, seed: u64) -> Result<ComplexMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for row in &mut rows {
        for entry in row.iter_mut() {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            *entry = Complex64::new(re, im);
        }
    }
    ComplexMatrix::from_rows(&rows)
}

/// Seeded 4×4 upper triangular with the strict upper part rescaled to
/// spectral norm 2 and the diagonal rescaled to spectral radius 0.3: the
/// spectrum stays strictly inside the unit disk while the matrix itself is
/// far from a contraction, so the optimality checks always engage.
fn seeded_expansive_matrix(seed: u64) -> Result<ComplexMatrix> {
    let n = 4;
    let t = random_upper_triangular(n, seed);
    let zero = Complex64::new(0.0, 0.0);
    let strict = ComplexMatrix::from_fn(n, |i, j| if j > i { t.get(i, j) } else { zero })?;
    let upper_scale = 2.0 / strict.spectral_norm()?;
    let max_diag = (0..n).map(|i| t.get(i, i).norm()).fold(0.0f64, f64::max);
    let diag_scale = if max_diag > 0.0 { 0.3 / max_diag } else { 0.0 };
    ComplexMatrix::from_fn(n, |i, j| {
        if j > i {
            t.get(i, j) * upper_scale
        } else if i == j {
            t.get(i, i) * diag_scale
        } else {
            zero
        }
    })
}

/// All quadrature nodes of a curve as a flat point list.
fn curve_points(curve: &crate::regions::BoundaryCurve) -> Vec<Complex64> {
    curve.quad_points().map(|(z, _, _)| z).collect()
}

/// Check 1: on centered circles of radius r ≤ 1 around the 3×3 Jordan
/// block, the numeric pipeline reproduces the closed forms
/// delta = −(2 − 1/r²) and 2 + delta = 1/r² to 1e-8, each radius in
/// under a second.
fn check_disk_sharpness(_level: VerifyLevel) -> Result<(bool, String)> {
    let radii = [0.5, 0.6, std::f64::consts::FRAC_1_SQRT_2, 0.8, 0.9, 1.0];
    let j = jordan_block(3);
    let mut worst = 0.0f64;
    let mut slowest = 0.0f64;
    for r in radii {
        let started = Instant::now();
        let profile = lambda_min_profile(&origin_circle(r, 512)?, &j)?;
        let (delta, _) = delta_gamma_hat(&profile);
        let target = 1.0 / (r * r);
        worst = worst
            .max((delta + (2.0 - target)).abs())
            .max(((2.0 + delta) - target).abs());
        slowest = slowest.max(started.elapsed().as_secs_f64());
    }
    Ok((
        worst <= 1e-8 && slowest < 1.0,
        format!("max closed-form deviation {worst:.2e} over 6 radii; slowest radius {slowest:.3}s"),
    ))
}

/// Check 2: every frozen (delta, gamma_hat) row maps through the K_delta
/// formula to the printed value.
fn check_k_delta_regression(_level: VerifyLevel) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    for (delta, gamma_hat, printed) in K_DELTA_ROWS {
        let computed = k_from_delta(delta, gamma_hat)?;
        if !matches_printed(computed, printed) {
            failures.push(format!(
                "({delta}, {gamma_hat}) -> {computed:.6} != {printed}"
            ));
        }
    }
    if failures.is_empty() {
        Ok((true, format!("{} rows reproduced", K_DELTA_ROWS.len())))
    } else {
        Ok((false, failures.join("; ")))
    }
}

/// Check 3: the printed 2 + delta column is consistent with the deltas.
fn check_two_plus_delta(_level: VerifyLevel) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    for (delta, printed) in TWO_PLUS_DELTA_ROWS {
        if !matches_printed(2.0 + delta, printed) {
            failures.push(format!("2 + {delta} = {} != {printed}", 2.0 + delta));
        }
    }
    if failures.is_empty() {
        Ok((
            true,
            format!("{} rows reproduced", TWO_PLUS_DELTA_ROWS.len()),
        ))
    } else {
        Ok((false, failures.join("; ")))
    }
}

/// Check 4: the boundary density integrates to 2I, on the Jordan block at
/// unit radius and (at the full level) on a seeded 12×12 upper triangular
/// matrix over an enclosing circle, within 1e-6 and under ten seconds.
fn check_mu_integral(level: VerifyLevel) -> Result<(bool, String)> {
    let dev_jordan = mu_integral_check(&origin_circle(1.0, 512)?, &jordan_block(3))?;
    let mut passed = dev_jordan <= 1e-6;
    let mut detail = format!("jordan deviation {dev_jordan:.2e}");
    if level == VerifyLevel::Full {
        let t = random_upper_triangular(12, 7);
        let mec = min_enclosing_circle(&spectrum(&t)?)?;
        let curve = circle_curve(Circle::new(mec.center, mec.radius * 1.5)?, 2048)?;
        let started = Instant::now();
        let dev_random = mu_integral_check(&curve, &t)?;
        let elapsed = started.elapsed().as_secs_f64();
        passed = passed && dev_random <= 1e-6 && elapsed < 10.0;
        detail.push_str(&format!(
            "; 12x12 deviation {dev_random:.2e} in {elapsed:.2}s"
        ));
    }
    Ok((passed, detail))
}

/// Check 5: the smallest density eigenvalue vanishes along the numerical
/// range boundary and changes sign across it: delta > 0 on an inward copy,
/// delta < 0 on a circle strictly containing the range.
fn check_boundary_zero(_level: VerifyLevel) -> Result<(bool, String)> {
    let a = perturbed_jordan(3, 0.1);
    let wa = numerical_range_curve(&a, 1024)?;
    let on_boundary = lambda_min_profile(&wa, &a)?;
    let max_abs = on_boundary
        .values()
        .iter()
        .fold(0.0f64, |m, v| m.max(v.abs()));

    let center = wa.components()[0].centroid();
    let inward = scale_inward_curve(&wa, 0.05, center)?;
    let (delta_in, _) = delta_gamma_hat(&lambda_min_profile(&inward, &a)?);

    let mec = min_enclosing_circle(&curve_points(&wa))?;
    let outer = circle_curve(Circle::new(mec.center, mec.radius * 1.1)?, 1024)?;
    let (delta_out, _) = delta_gamma_hat(&lambda_min_profile(&outer, &a)?);

    Ok((
        max_abs <= 1e-4 && delta_in > 0.0 && delta_out < 0.0,
        format!(
            "max |lambda_min| on boundary {max_abs:.2e}; delta inward {delta_in:.4}, delta outer {delta_out:.4}"
        ),
    ))
}

/// Check 6: at every found norm maximum above 1, the top right singular
/// vector is orthogonal to its image. The sharp Jordan case must also
/// attain its known optimal norm and pass the stationarity probe; a seeded
/// family of expansive 4×4 matrices must satisfy the orthogonality
/// identity as well. Whole check under a minute.
fn check_extremal_orthogonality(level: VerifyLevel) -> Result<(bool, String)> {
    let started = Instant::now();
    let (jordan_restarts, random_cases) = match level {
        VerifyLevel::Quick => (12, 3),
        VerifyLevel::Full => (50, 10),
    };

    let psi = jordan_block(3).scale(Complex64::new(1.0 / 0.8, 0.0));
    let result = maximize_norm(&psi, 2, jordan_restarts, 20240817)?;
    let checks = thm2_checks(&psi, &result)?;
    let jordan_ok = result.norm >= 1.5625 - 1e-6
        && result.orthogonality_residual <= 1e-6
        && checks.stationarity_ok == Some(true);

    let mut min_norm = f64::MAX;
    let mut worst_residual = 0.0f64;
    for k in 0..random_cases {
        let psi = seeded_expansive_matrix(4000 + k as u64)?;
        let r = maximize_norm(&psi, 3, 50, 6000 + k as u64)?;
        min_norm = min_norm.min(r.norm);
        worst_residual = worst_residual.max(r.orthogonality_residual);
    }
    let random_ok = min_norm > 1.0 + 1e-6 && worst_residual <= 1e-6;
    let elapsed = started.elapsed().as_secs_f64();

    Ok((
        jordan_ok && random_ok && elapsed < 60.0,
        format!(
            "jordan norm {:.6} residual {:.2e}; {} random cases min norm {:.4}, worst residual {:.2e}; {:.1}s",
            result.norm, result.orthogonality_residual, random_cases, min_norm, worst_residual, elapsed
        ),
    ))
}

/// Check 7: a disk containing the numerical range (minimal enclosing
/// circle of boundary samples, inflated 1%) has delta ≤ 0 up to rounding,
/// so the disk bound max{1, 2 + delta} never exceeds 2.
fn check_enclosing_disk_bound(level: VerifyLevel) -> Result<(bool, String)> {
    let cases = match level {
        VerifyLevel::Quick => 6,
        VerifyLevel::Full => 20,
    };
    let mut worst_delta = f64::MIN;
    let mut worst_bound = f64::MIN;
    for k in 0..cases {
        let n = 2 + (k % 7);
        let a = dense_gaussian(n, 8000 + k as u64)?;
        let samples = curve_points(&numerical_range_curve(&a, 128)?);
        let mec = min_enclosing_circle(&samples)?;
        let curve = circle_curve(Circle::new(mec.center, mec.radius * 1.01)?, 512)?;
        let (delta, _) = delta_gamma_hat(&lambda_min_profile(&curve, &a)?);
        worst_delta = worst_delta.max(delta);
        worst_bound = worst_bound.max((2.0 + delta).max(1.0));
    }
    Ok((
        worst_delta <= 1e-10 && worst_bound <= 2.0,
        format!("{cases} matrices; max delta {worst_delta:.2e}, max disk bound {worst_bound:.6}"),
    ))
}

/// Check 8: on a disk, the Cauchy transform of a boundary function is the
/// constant conj(f(center)); the assembled operator satisfies
/// ‖S‖ ≤ 2 + delta; sup|g| ≤ sup|f|; and the transform values stay inside
/// the convex hull of the conjugated boundary values.
fn check_disk_cauchy(level: VerifyLevel) -> Result<(bool, String)> {
    let nodes = match level {
        VerifyLevel::Quick => 512,
        VerifyLevel::Full => 2048,
    };
    let a = perturbed_jordan(3, 0.1);
    let samples = curve_points(&numerical_range_curve(&a, 256)?);
    let mec = min_enclosing_circle(&samples)?;
    let disk = Circle::new(mec.center, mec.radius * 1.05)?;
    let curve = circle_curve(disk, nodes)?;

    let psi = rescale_to_unit_disk(&a, disk);
    let opt = maximize_norm(&psi, 2, 30, 1234)?;
    let f = BoundaryFunction::blaschke_on_disk(&curve, disk, &opt.product)?;

    let ga = g_of_matrix(&f, &a)?;
    let f_center = eval_scalar(&opt.product, Complex64::new(0.0, 0.0))?;
    let shortcut = ComplexMatrix::identity(a.dim()).scale(f_center.conj());
    let constant_dev = (&ga - &shortcut).frobenius_norm();

    let g = g_boundary_values(&f)?;
    let sup_ok = g.sup_norm() <= f.sup_norm() + 1e-8;
    let hull_ok = hull_check(&f, &g);

    let profile = lambda_min_profile(&curve, &a)?;
    let assembled = assemble_s(&f.normalized()?, &a, &profile)?;
    let (delta, _) = delta_gamma_hat(&profile);
    let s_ok = assembled.norm_s <= 2.0 + delta + 1e-6;

    Ok((
        constant_dev <= 1e-6 && s_ok && sup_ok && hull_ok,
        format!(
            "‖g(A) − conj(f(c))I‖ = {constant_dev:.2e}; ‖S‖ = {:.6} vs 2+delta = {:.6}; sup|g| = {:.6} vs sup|f| = {:.6}; hull {}",
            assembled.norm_s,
            2.0 + delta,
            g.sup_norm(),
            f.sup_norm(),
            if hull_ok { "ok" } else { "violated" }
        ),
    ))
}

/// Check 9: moving inward from the numerical range boundary, the profile
/// stays above the resolvent-product perturbation bound at every node, and
/// delta grows linearly with the inward distance (ratios within a factor
/// of two across eps).
fn check_inward_perturbation(_level: VerifyLevel) -> Result<(bool, String)> {
    let a = perturbed_jordan(3, 0.1);
    let wa = numerical_range_curve(&a, 256)?;
    let comp = &wa.components()[0];
    let center = comp.centroid();

    let mut min_margin = f64::MAX;
    let mut ratios = Vec::new();
    for eps in [0.005, 0.01, 0.02] {
        let scaled = scale_inward_curve(&wa, eps, center)?;
        let profile = lambda_min_profile(&scaled, &a)?;
        let scomp = &scaled.components()[0];
        for k in 0..comp.node_count() {
            let bound =
                perturbation_bound_at(comp.nodes()[k], comp.tangents()[k], scomp.nodes()[k], &a)?;
            min_margin = min_margin.min(profile.values()[k] - bound);
        }
        let (delta, _) = delta_gamma_hat(&profile);
        ratios.push(delta / eps);
    }
    let ratio_min = ratios.iter().cloned().fold(f64::MAX, f64::min);
    let ratio_max = ratios.iter().cloned().fold(f64::MIN, f64::max);
    let linear_ok = ratio_min > 0.0 && ratio_max <= 2.0 * ratio_min;

    Ok((
        min_margin >= -1e-10 && linear_ok,
        format!(
            "min pointwise margin {min_margin:.2e}; delta/eps in [{ratio_min:.4}, {ratio_max:.4}]"
        ),
    ))
}

const SWEEP_RADII: [f64; 6] = [0.55, 0.62, 0.68, 0.75, 0.9, 1.1];

/// Check 10: over six circles sweeping from inside to outside the
/// numerical range, delta strictly decreases, the per-circle profile
/// minimum strictly increases, and the eigenvalue-based bound beats the
/// resolvent-norm bound at every radius.
fn check_radius_sweep(level: VerifyLevel) -> Result<(bool, String)> {
    let nodes = match level {
        VerifyLevel::Quick => 256,
        VerifyLevel::Full => 512,
    };
    let a = perturbed_jordan(3, 0.1);
    let mec = min_enclosing_circle(&spectrum(&a)?)?;
    let mut rows = Vec::new();
    for r in SWEEP_RADII {
        let curve = circle_curve(Circle::new(mec.center, r)?, nodes)?;
        let profile = lambda_min_profile(&curve, &a)?;
        let (delta, gamma_hat) = delta_gamma_hat(&profile);
        let k_d = k_from_delta(delta, gamma_hat)?;
        let k_c = cauchy_bound(&curve, &a)?;
        let min_lambda = profile.values().iter().cloned().fold(f64::MAX, f64::min);
        rows.push((delta, min_lambda, k_d, k_c));
    }
    let delta_decreasing = rows.windows(2).all(|w| w[1].0 < w[0].0);
    let minima_increasing = rows.windows(2).all(|w| w[1].1 > w[0].1);
    let k_delta_wins = rows.iter().all(|row| row.2 < row.3);
    Ok((
        delta_decreasing && minima_increasing && k_delta_wins,
        format!(
            "delta {} ; K_delta < K_Cauchy at {}/{} radii",
            rows.iter()
                .map(|row| format!("{:.4}", row.0))
                .collect::<Vec<_>>()
                .join(" > "),
            rows.iter().filter(|row| row.2 < row.3).count(),
            rows.len()
        ),
    ))
}

/// Check 11 (report-only): side-by-side norms ‖f(A)‖, ‖f(A) + g(A)*‖, and
/// ‖S‖ for the optimized Blaschke function on each sweep disk. An instance
/// of ‖f(A)‖ > ‖f(A) + g(A)*‖ is recorded as a finding; it never gates.
fn check_conjecture_probe(level: VerifyLevel) -> Result<(bool, String)> {
    let nodes = match level {
        VerifyLevel::Quick => 256,
        VerifyLevel::Full => 512,
    };
    let a = perturbed_jordan(3, 0.1);
    let mec = min_enclosing_circle(&spectrum(&a)?)?;
    let mut violations = 0usize;
    let mut lines = Vec::new();
    for r in SWEEP_RADII {
        let disk = Circle::new(mec.center, r)?;
        let curve = circle_curve(disk, nodes)?;
        let psi = rescale_to_unit_disk(&a, disk);
        let opt = maximize_norm(&psi, 2, 20, 555)?;
        let f = BoundaryFunction::blaschke_on_disk(&curve, disk, &opt.product)?.normalized()?;
        let profile = lambda_min_profile(&curve, &a)?;
        let probe = conjecture_probe(&f, &a, &profile)?;
        // On disks the two norms often coincide exactly, so only an excess
        // clear of SVD rounding noise counts as a finding.
        if probe.norm_fa > probe.norm_fa_plus_ga_star + 1e-9 {
            violations += 1;
        }
        lines.push(format!(
            "R={r}: ‖f(A)‖={:.4} ‖f(A)+g(A)*‖={:.4} ‖S‖={:.4}",
            probe.norm_fa, probe.norm_fa_plus_ga_star, probe.norm_s
        ));
    }
    Ok((
        violations == 0,
        format!("{}; norm-order violations: {violations}", lines.join("; ")),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_value_gate_accepts_ceiling_rounding() {
        // 9.864432 prints as 9.865 under ceiling rounding even though the
        // plain distance is 5.7e-4.
        assert!(matches_printed(9.864432, 9.865));
        assert!(matches_printed(9.8652, 9.865));
        assert!(!matches_printed(9.8662, 9.865));
        assert!(!matches_printed(9.8634, 9.865));
    }

    #[test]
    fn table_regressions_pass() {
        let (ok, detail) = check_k_delta_regression(VerifyLevel::Quick).unwrap();
        assert!(ok, "{detail}");
        let (ok, detail) = check_two_plus_delta(VerifyLevel::Quick).unwrap();
        assert!(ok, "{detail}");
    }

    #[test]
    fn sharpness_check_passes() {
        let (ok, detail) = check_disk_sharpness(VerifyLevel::Quick).unwrap();
        assert!(ok, "{detail}");
    }

    #[test]
    fn expansive_matrices_have_interior_spectrum_and_large_norm() {
        for seed in [4000, 4001, 4002] {
            let m = seeded_expansive_matrix(seed).unwrap();
            let rho = spectrum(&m)
                .unwrap()
                .iter()
                .map(|z| z.norm())
                .fold(0.0f64, f64::max);
            assert!(rho <= 0.3 + 1e-12);
            assert!(m.spectral_norm().unwrap() > 1.5);
        }
    }

    #[test]
    fn outcome_list_is_complete_and_ordered() {
        // Shape-only smoke test on the cheap checks: ids are 1-based and
        // consecutive, and exactly one check is non-gating.
        let outcomes = run(VerifyLevel::Quick);
        assert_eq!(outcomes.len(), 11);
        for (i, o) in outcomes.iter().enumerate() {
            assert_eq!(o.id, i + 1);
        }
        assert_eq!(outcomes.iter().filter(|o| !o.gating).count(), 1);
        assert!(outcomes.iter().all(|o| o.seconds >= 0.0));
    }
}
