//! Numerical-range boundary construction.
//!
//! Support-angle sweep: for each angle θ the top eigenvector q of the
//! Hermitian part of `e^{-iθ}A` yields the boundary point `q*Aq` where the
//! supporting line of direction θ touches `∂W(A)`. For non-normal A with a
//! strictly convex analytic boundary, the support point is an analytic
//! 2π-periodic function of θ, so trigonometric interpolation of the sweep
//! converges spectrally and the curve can be resampled to uniform arclength
//! without losing accuracy.

use faer::{Mat, Side};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matkernel::{inner, ComplexMatrix};
use crate::regions::trig::TrigInterp;
use crate::regions::{BoundaryCurve, ClosedComponent};

/// Relative tolerance on `‖A*A − AA*‖_F` under which A is flagged normal.
/// The numerical range of a normal matrix is the convex hull of its
/// eigenvalues, a polygon with corners where the smooth-boundary machinery
/// breaks down, so such inputs are refused.
pub const NORMALITY_TOL: f64 = 1e-12;

/// Refinement factor of the uniform evaluation grid used for arclength
/// inversion (the inverse-FFT grids cost almost nothing).
const FINE_FACTOR: usize = 4;

/// Boundary of the numerical range W(A) as a positively oriented closed
/// component resampled to uniform arclength.
///
/// `angle_samples` controls both the support sweep resolution and the output
/// node count. Tangents are spectrally differentiated and normalized to unit
/// modulus; weights are the uniform arclength step, so the component carries
/// a periodic trapezoid rule.
///
/// # Errors
/// [`Error::UnsupportedRegion`] for normal A (within [`NORMALITY_TOL`]);
/// [`Error::Input`] for `angle_samples < 64`; [`Error::Numerical`] when the
/// support points collapse or the resampled curve fails the convexity check
/// (flat or cornered boundary).
pub fn numerical_range_curve(a: &ComplexMatrix, angle_samples: usize) -> Result<BoundaryCurve> {
    if angle_samples < 64 {
        return Err(Error::Input(format!(
            "numerical range sweep needs at least 64 angle samples, got {angle_samples}"
        )));
    }
    ensure_not_normal(a)?;

    let m = angle_samples;
    let support: Vec<Complex64> = (0..m)
        .into_par_iter()
        .map(|k| support_point(a, 2.0 * std::f64::consts::PI * k as f64 / m as f64))
        .collect::<Result<Vec<_>>>()?;

    // Collapse guard: a handful of distinct support points means W(A) is a
    // point or segment and no smooth boundary exists.
    let diameter = bounding_diameter(&support);
    let scale = a.frobenius_norm().max(1e-300);
    if diameter <= 1e-12 * scale {
        return Err(Error::Numerical(
            "support points collapse to a point; numerical range has no interior".into(),
        ));
    }
    let dedup_tol = 1e-12 * diameter;
    let distinct = count_distinct(&support, dedup_tol);
    if distinct < 8 {
        return Err(Error::Numerical(format!(
            "support sweep produced only {distinct} distinct points; boundary is degenerate"
        )));
    }

    let gamma = TrigInterp::new(&support);
    let n_out = angle_samples;
    let fine = FINE_FACTOR * m;

    // Speed |γ'(θ)| on the fine grid; its own Fourier series integrates the
    // arclength exactly termwise.
    let deriv_fine = gamma.deriv_samples(fine);
    let speed_samples: Vec<Complex64> = deriv_fine
        .iter()
        .map(|d| Complex64::new(d.norm(), 0.0))
        .collect();
    let speed = TrigInterp::new(&speed_samples);
    let length = 2.0 * std::f64::consts::PI * speed.mean().re;
    if !(length.is_finite() && length > 0.0) {
        return Err(Error::Numerical(
            "arclength of the numerical range boundary is not positive".into(),
        ));
    }

    // s(θ) on the fine grid for bracketing, then Newton refinement of each
    // uniform arclength target.
    let s_fine = speed.integral_samples(fine);
    let theta_step = 2.0 * std::f64::consts::PI / fine as f64;
    let mut nodes = Vec::with_capacity(n_out);
    let mut tangents = Vec::with_capacity(n_out);
    for j in 0..n_out {
        let target = length * j as f64 / n_out as f64;
        let theta = invert_arclength(&speed, &gamma, &s_fine, theta_step, target, length)?;
        let node = gamma.eval(theta);
        let d = gamma.deriv(theta);
        let dn = d.norm();
        if dn <= 0.0 {
            return Err(Error::Numerical(
                "vanishing boundary speed at a resampled node (cornered boundary)".into(),
            ));
        }
        nodes.push(node);
        tangents.push(d / dn);
    }
    let weights = vec![length / n_out as f64; n_out];
    let comp = ClosedComponent::new(nodes, tangents, weights, length)
        .map_err(|e| Error::Numerical(format!("resampled boundary is invalid: {e}")))?;
    if !comp.is_convex() {
        return Err(Error::Numerical(
            "resampled numerical range boundary is not convex; support sweep unreliable".into(),
        ));
    }
    BoundaryCurve::from_components(vec![comp])
}

/// Support point of W(A) in direction θ: Rayleigh quotient of the top
/// eigenvector of the Hermitian part of `e^{-iθ}A`.
fn support_point(a: &ComplexMatrix, theta: f64) -> Result<Complex64> {
    let n = a.dim();
    let phase = Complex64::from_polar(1.0, -theta);
    let h = Mat::<Complex64>::from_fn(n, n, |i, j| {
        0.5 * (phase * a.get(i, j) + (phase * a.get(j, i)).conj())
    });
    let eig = h
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| Error::Numerical(format!("support sweep eigensolve failed: {e:?}")))?;
    // Eigenvalues are in nondecreasing order; the top eigenvector is last.
    let q: Vec<Complex64> = (0..n).map(|i| eig.U()[(i, n - 1)]).collect();
    let aq = a.matvec(&q);
    let qq = inner(&q, &q).re;
    Ok(inner(&q, &aq) / qq)
}

fn ensure_not_normal(a: &ComplexMatrix) -> Result<()> {
    let adj = a.adjoint();
    let commutator = &(&adj * a) - &(a * &adj);
    let scale = a.frobenius_norm();
    if commutator.frobenius_norm() <= NORMALITY_TOL * scale * scale {
        return Err(Error::UnsupportedRegion(
            "matrix is normal within tolerance; its numerical range is a polygon with corners"
                .into(),
        ));
    }
    Ok(())
}

fn bounding_diameter(points: &[Complex64]) -> f64 {
    let (mut re_lo, mut re_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut im_lo, mut im_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for z in points {
        re_lo = re_lo.min(z.re);
        re_hi = re_hi.max(z.re);
        im_lo = im_lo.min(z.im);
        im_hi = im_hi.max(z.im);
    }
    (re_hi - re_lo).hypot(im_hi - im_lo)
}

fn count_distinct(points: &[Complex64], tol: f64) -> usize {
    let n = points.len();
    let mut distinct = 0;
    for k in 0..n {
        if (points[(k + 1) % n] - points[k]).norm() > tol {
            distinct += 1;
        }
    }
    distinct
}

/// Solves `s(θ) = target` for θ: bracket on the fine grid (s is
/// nondecreasing), then Newton with bisection fallback. The bracket start
/// makes two Newton steps enough for ~1e-12 accuracy.
fn invert_arclength(
    speed: &TrigInterp,
    gamma: &TrigInterp,
    s_fine: &[f64],
    theta_step: f64,
    target: f64,
    length: f64,
) -> Result<f64> {
    debug_assert!(target < length + 1e-9);
    // partition_point finds the first fine node with s > target.
    let hi_idx = s_fine.partition_point(|s| *s <= target);
    let (mut lo, mut s_lo) = if hi_idx == 0 {
        (0.0, 0.0)
    } else {
        ((hi_idx - 1) as f64 * theta_step, s_fine[hi_idx - 1])
    };
    let (mut hi, mut s_hi) = if hi_idx < s_fine.len() {
        (hi_idx as f64 * theta_step, s_fine[hi_idx])
    } else {
        (2.0 * std::f64::consts::PI, length)
    };

    // Linear interpolation start, then safeguarded Newton on s(θ) − target.
    let mut theta = if s_hi > s_lo {
        lo + (hi - lo) * (target - s_lo) / (s_hi - s_lo)
    } else {
        0.5 * (lo + hi)
    };
    for _ in 0..30 {
        let s_val = speed.integral(theta).re;
        let err = s_val - target;
        if err.abs() <= 1e-13 * (1.0 + length) {
            return Ok(theta);
        }
        if err > 0.0 {
            hi = theta;
            s_hi = s_val;
        } else {
            lo = theta;
            s_lo = s_val;
        }
        let rho = gamma.deriv(theta).norm();
        let newton = if rho > 0.0 { theta - err / rho } else { theta };
        theta = if newton > lo && newton < hi {
            newton
        } else if s_hi > s_lo {
            // Regula falsi keeps progress when Newton leaves the bracket.
            lo + (hi - lo) * (target - s_lo) / (s_hi - s_lo)
        } else {
            0.5 * (lo + hi)
        };
    }
    Ok(theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matkernel::{jordan_block, perturbed_jordan, spectrum};
    use crate::regions::validate_encloses;

    #[test]
    fn two_by_two_jordan_gives_half_circle() {
        // Hermitian part of e^{-iθ}J has eigenvalues ±1/2 for every θ, so
        // W(J) is the closed disk of radius 1/2.
        let curve = numerical_range_curve(&jordan_block(2), 64).unwrap();
        let comp = &curve.components()[0];
        for z in comp.nodes() {
            assert!((z.norm() - 0.5).abs() <= 1e-10);
        }
        assert!((curve.total_length() - std::f64::consts::PI).abs() <= 1e-9);
    }

    #[test]
    fn jordan3_numerical_radius_is_sqrt2_over_2() {
        // Top eigenvalue of the tridiagonal Hermitian part (1/2 off-diagonal)
        // is cos(π/4) = √2/2; by rotation invariance of J's numerical range
        // the radius is the same in every direction.
        let curve = numerical_range_curve(&jordan_block(3), 256).unwrap();
        let radius = curve.components()[0]
            .nodes()
            .iter()
            .map(|z| z.norm())
            .fold(0.0f64, f64::max);
        assert!((radius - std::f64::consts::FRAC_1_SQRT_2).abs() <= 1e-10);
    }

    #[test]
    fn normal_matrix_is_rejected() {
        let a = ComplexMatrix::from_rows(&[
            vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
            vec![Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0)],
        ])
        .unwrap();
        assert!(matches!(
            numerical_range_curve(&a, 128),
            Err(Error::UnsupportedRegion(_))
        ));
    }

    #[test]
    fn small_angle_count_is_rejected() {
        assert!(matches!(
            numerical_range_curve(&jordan_block(3), 32),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn perturbed_jordan_boundary_is_convex_and_encloses_spectrum() {
        let a = perturbed_jordan(3, 0.1);
        let curve = numerical_range_curve(&a, 256).unwrap();
        let comp = &curve.components()[0];
        assert!(comp.is_convex());
        assert!(comp.signed_area() > 0.0);
        assert!(validate_encloses(&curve, &spectrum(&a).unwrap()));
    }

    #[test]
    fn resampling_preserves_length_spectrally() {
        let a = perturbed_jordan(3, 0.1);
        let l1 = numerical_range_curve(&a, 256).unwrap().total_length();
        let l2 = numerical_range_curve(&a, 512).unwrap().total_length();
        assert!((l1 - l2).abs() <= 1e-8 * l1);
    }

    #[test]
    fn nodes_are_uniform_in_arclength() {
        let a = perturbed_jordan(3, 0.1);
        let curve = numerical_range_curve(&a, 256).unwrap();
        let comp = &curve.components()[0];
        let n = comp.node_count();
        let step = comp.length() / n as f64;
        // Chord lengths fluctuate only at curvature order, not O(1).
        let chords: Vec<f64> = (0..n)
            .map(|k| (comp.nodes()[(k + 1) % n] - comp.nodes()[k]).norm())
            .collect();
        for c in &chords {
            assert!((c - step).abs() <= 0.01 * step);
        }
    }
}
