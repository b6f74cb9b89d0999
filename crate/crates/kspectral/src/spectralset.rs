//! Core spectral-set quantities.
//!
//! For a closed boundary curve σ(s) (arclength parameter, unit tangent σ′)
//! enclosing the spectrum of A, the Hermitian boundary density is
//!
//! ```text
//! μ(σ, A) = (σ′/2πi)·R(σ, A) + [(σ′/2πi)·R(σ, A)]*
//! ```
//!
//! which integrates to 2I around the spectrum. Its smallest eigenvalue
//! λ_min(μ(σ(s), A)) along the curve yields the two boundary integrals
//!
//! ```text
//! δ  = −∫ λ_min ds        γ̂ = ∫ |λ_min| ds
//! ```
//!
//! from which this module assembles the spectral-set constants: the bound
//! `2 + δ` on the operator `S = f(A) + g(A)* + γI`, the constant
//! `K_δ = 1 + δ/2 + √(2 + δ + δ²/4 + γ̂)` making the region a K-spectral
//! set, and the resolvent-integral bound `K_Cauchy = (1/2π)∮‖R‖ |dσ|`.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matkernel::{
    hermitian_min_eig, resolvent, resolvent_unchecked, spectrum, ComplexMatrix,
};
use crate::regions::{validate_encloses, BoundaryCurve, Circle, Region};

/// Starting node count of the adaptive bound pipeline.
pub const START_NODES: usize = 256;

/// Node cap of the adaptive bound pipeline.
pub const MAX_NODES: usize = 8192;

/// Relative change of δ and γ̂ under node doubling below which the
/// quadrature counts as converged.
pub const NODE_CONV_TOL: f64 = 1e-8;

/// λ_min(μ(σ(s), A)) sampled at every quadrature node of a curve.
///
/// Values are ordered like [`BoundaryCurve::quad_points`]: components in
/// order, nodes in order within each component. λ_min scales as 1/length
/// because μ does.
#[derive(Clone, Debug)]
pub struct LambdaMinProfile {
    curve: BoundaryCurve,
    values: Vec<f64>,
}

impl LambdaMinProfile {
    pub fn curve(&self) -> &BoundaryCurve {
        &self.curve
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// The bound quantities for one (matrix, region) pair.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    /// δ = −∮ λ_min ds.
    pub delta: f64,
    /// γ̂ = ∮ |λ_min| ds; always ≥ |δ|.
    pub gamma_hat: f64,
    /// The `‖S‖ ≤ 2 + δ` bound.
    pub two_plus_delta: f64,
    /// `1 + δ/2 + √(2 + δ + δ²/4 + γ̂)`.
    pub k_delta: f64,
    /// `(1/2π)∮ ‖R(σ,A)‖ |dσ|`, on the same node set as δ and γ̂.
    pub k_cauchy: f64,
    /// Node count of the discretization the report was computed on.
    pub node_count: usize,
}

impl BoundReport {
    /// The disk-spectral-set constant `max{1, 2 + δ}`: when the region is a
    /// disk containing the numerical range this is a valid K and is at
    /// most 2.
    pub fn k_disk(&self) -> f64 {
        self.two_plus_delta.max(1.0)
    }
}

/// The Hermitian boundary density `μ(σ, A) = (σ′/2πi)R(σ, A) + adjoint`.
///
/// # Errors
/// [`Error::Input`] unless `|tangent| = 1` within 1e-10;
/// [`Error::Singularity`] if σ is numerically an eigenvalue of A.
pub fn mu_at(sigma: Complex64, tangent: Complex64, a: &ComplexMatrix) -> Result<ComplexMatrix> {
    ensure_unit_tangent(tangent)?;
    Ok(mu_from_resolvent(tangent, &resolvent(sigma, a)?))
}

/// μ built from an already-solved resolvent; shared by the checked public
/// path and the per-node quadrature loops that validate enclosure once.
fn mu_from_resolvent(tangent: Complex64, res: &ComplexMatrix) -> ComplexMatrix {
    // 1/(2πi) = −i/(2π).
    let factor = tangent * Complex64::new(0.0, -1.0 / (2.0 * std::f64::consts::PI));
    let t = res.scale(factor);
    &t + &t.adjoint()
}

fn ensure_unit_tangent(tangent: Complex64) -> Result<()> {
    if (tangent.norm() - 1.0).abs() > 1e-10 {
        return Err(Error::Input(format!(
            "tangent must be unit modulus, got |t| = {}",
            tangent.norm()
        )));
    }
    Ok(())
}

pub(crate) fn ensure_enclosure(curve: &BoundaryCurve, a: &ComplexMatrix) -> Result<Vec<Complex64>> {
    let eigs = spectrum(a)?;
    if !validate_encloses(curve, &eigs) {
        return Err(Error::Region(
            "curve must wind once around every eigenvalue at a safe distance".into(),
        ));
    }
    Ok(eigs)
}

/// λ_min(μ) at every node of the curve.
///
/// Enclosure of the spectrum is validated once up front (which also bounds
/// every node away from the eigenvalues), then the per-node Hermitian
/// eigensolves run as a parallel map in deterministic node order.
///
/// # Errors
/// [`Error::Region`] if the curve fails to enclose the spectrum.
pub fn lambda_min_profile(curve: &BoundaryCurve, a: &ComplexMatrix) -> Result<LambdaMinProfile> {
    ensure_enclosure(curve, a)?;
    let points: Vec<(Complex64, Complex64)> = curve.quad_points().map(|(z, t, _)| (z, t)).collect();
    let values = points
        .par_iter()
        .map(|&(sigma, tangent)| {
            let res = resolvent_unchecked(sigma, a)?;
            let mu = mu_from_resolvent(tangent, &res);
            Ok(hermitian_min_eig(&mu)?.value)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(LambdaMinProfile {
        curve: curve.clone(),
        values,
    })
}

/// The boundary integrals `(δ, γ̂)` of a profile, by the curve's quadrature
/// rule, accumulated in deterministic node order.
pub fn delta_gamma_hat(profile: &LambdaMinProfile) -> (f64, f64) {
    let mut delta = 0.0;
    let mut gamma_hat = 0.0;
    for ((_, _, w), lam) in profile.curve.quad_points().zip(&profile.values) {
        delta -= w * lam;
        gamma_hat += w * lam.abs();
    }
    (delta, gamma_hat)
}

/// `K_δ = 1 + δ/2 + √(2 + δ + δ²/4 + γ̂)`.
///
/// # Errors
/// [`Error::Input`] if the radicand is negative. Since the radicand equals
/// `(1 + δ/2)² + 1 + γ̂` this needs γ̂ < −1, impossible for genuine
/// profiles where γ̂ ≥ 0; the guard catches nonsensical caller inputs.
pub fn k_from_delta(delta: f64, gamma_hat: f64) -> Result<f64> {
    let radicand = 2.0 + delta + delta * delta / 4.0 + gamma_hat;
    if radicand < 0.0 {
        return Err(Error::Input(format!(
            "negative radicand {radicand} in the K bound; need 2 + δ + δ²/4 + γ̂ ≥ 0"
        )));
    }
    Ok(1.0 + delta / 2.0 + radicand.sqrt())
}

/// `K_Cauchy = (1/2π)·Σ_k w_k·‖R(σ_k, A)‖` (spectral norms).
///
/// # Errors
/// [`Error::Region`] if the curve fails to enclose the spectrum.
pub fn cauchy_bound(curve: &BoundaryCurve, a: &ComplexMatrix) -> Result<f64> {
    ensure_enclosure(curve, a)?;
    let points: Vec<(Complex64, f64)> = curve.quad_points().map(|(z, _, w)| (z, w)).collect();
    let norms = points
        .par_iter()
        .map(|&(sigma, _)| resolvent_unchecked(sigma, a)?.spectral_norm())
        .collect::<Result<Vec<f64>>>()?;
    let total: f64 = points.iter().zip(&norms).map(|((_, w), nrm)| w * nrm).sum();
    Ok(total / (2.0 * std::f64::consts::PI))
}

/// All bound quantities on one fixed discretization.
///
/// # Errors
/// [`Error::Region`] if the curve fails to enclose the spectrum.
pub fn compute_bounds_on_curve(curve: &BoundaryCurve, a: &ComplexMatrix) -> Result<BoundReport> {
    let profile = lambda_min_profile(curve, a)?;
    let (delta, gamma_hat) = delta_gamma_hat(&profile);
    let k_delta = k_from_delta(delta, gamma_hat)?;
    let k_cauchy = cauchy_bound(curve, a)?;
    Ok(BoundReport {
        delta,
        gamma_hat,
        two_plus_delta: 2.0 + delta,
        k_delta,
        k_cauchy,
        node_count: curve.node_count(),
    })
}

/// All bound quantities with adaptive node refinement starting at
/// [`START_NODES`]: the region is rediscretized at doubled node counts until
/// δ and γ̂ both change by at most [`NODE_CONV_TOL`] relative, capped at
/// [`MAX_NODES`] (the capped report is returned as a best effort if the cap
/// is hit).
pub fn compute_bounds(region: &Region, a: &ComplexMatrix) -> Result<BoundReport> {
    compute_bounds_with_start(region, a, START_NODES)
}

/// [`compute_bounds`] with an explicit starting node count (clamped to the
/// cap).
pub fn compute_bounds_with_start(
    region: &Region,
    a: &ComplexMatrix,
    start_nodes: usize,
) -> Result<BoundReport> {
    let mut nodes = start_nodes.clamp(8, MAX_NODES);
    let mut report = compute_bounds_on_curve(&region.discretize(a, nodes)?, a)?;
    while nodes < MAX_NODES {
        nodes = (nodes * 2).min(MAX_NODES);
        let refined = compute_bounds_on_curve(&region.discretize(a, nodes)?, a)?;
        let delta_ok =
            (refined.delta - report.delta).abs() <= NODE_CONV_TOL * (1.0 + report.delta.abs());
        let gamma_ok = (refined.gamma_hat - report.gamma_hat).abs()
            <= NODE_CONV_TOL * (1.0 + report.gamma_hat.abs());
        report = refined;
        if delta_ok && gamma_ok {
            break;
        }
    }
    Ok(report)
}

/// Frobenius deviation `‖Σ_k w_k·μ(σ_k, σ′_k, A) − 2I‖_F` of the quadrature
/// from the exact identity `∮ μ ds = 2I`.
///
/// # Errors
/// [`Error::Region`] if the curve fails to enclose the spectrum.
pub fn mu_integral_check(curve: &BoundaryCurve, a: &ComplexMatrix) -> Result<f64> {
    ensure_enclosure(curve, a)?;
    let n = a.dim();
    let mut acc = ComplexMatrix::zeros(n);
    for (sigma, tangent, w) in curve.quad_points() {
        let mu = mu_from_resolvent(tangent, &resolvent_unchecked(sigma, a)?);
        acc = &acc + &mu.scale(Complex64::new(w, 0.0));
    }
    let two_i = ComplexMatrix::identity(n).scale(Complex64::new(2.0, 0.0));
    Ok((&acc - &two_i).frobenius_norm())
}

/// Wielandt-Hoffman lower bound on `λ_min(μ(σ̃, A))` from a boundary point σ
/// where `λ_min(μ(σ, A)) = 0`:
///
/// ```text
/// λ_min(μ(σ̃, A)) ≥ −|σ̃ − σ|·‖(σ′/2πi)·R(σ,A)·R(σ̃,A) + adjoint‖
/// ```
///
/// `tangent` is the unit tangent at σ; σ̃ is its partner under the
/// matched-tangent inward scaling (node k of the scaled curve pairs with
/// node k of the original).
///
/// # Errors
/// [`Error::Input`] for a non-unit tangent; [`Error::Singularity`] if either
/// point is numerically an eigenvalue.
pub fn perturbation_bound_at(
    sigma: Complex64,
    tangent: Complex64,
    sigma_tilde: Complex64,
    a: &ComplexMatrix,
) -> Result<f64> {
    ensure_unit_tangent(tangent)?;
    let r_sigma = resolvent(sigma, a)?;
    let r_tilde = resolvent(sigma_tilde, a)?;
    let factor = tangent * Complex64::new(0.0, -1.0 / (2.0 * std::f64::consts::PI));
    let t = (&r_sigma * &r_tilde).scale(factor);
    let h = &t + &t.adjoint();
    Ok(-(sigma_tilde - sigma).norm() * h.spectral_norm()?)
}

/// Bounds on the unit disk for a matrix whose spectrum lies strictly inside
/// it. The report's [`BoundReport::k_disk`] is the `max{1, 2+δ}` constant
/// making the disk a K-spectral set for the matrix.
///
/// # Errors
/// [`Error::Input`] if an eigenvalue has modulus ≥ 1.
pub fn unit_disk_delta(psi: &ComplexMatrix) -> Result<BoundReport> {
    let eigs = spectrum(psi)?;
    let rho = eigs.iter().map(|l| l.norm()).fold(0.0f64, f64::max);
    if rho >= 1.0 {
        return Err(Error::Input(format!(
            "spectrum must lie strictly inside the unit disk; spectral radius is {rho}"
        )));
    }
    let region = Region::Circle(Circle {
        center: Complex64::new(0.0, 0.0),
        radius: 1.0,
    });
    compute_bounds(&region, psi)
}
