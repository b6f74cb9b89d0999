//! Exactness oracle: the 3×3 Jordan block on centered disks.
//!
//! For the nilpotent 3×3 Jordan block `J` and the circle `|z| = r` with
//! `r ≤ 1`, every quantity the numeric pipeline computes has a closed form.
//! The smallest eigenvalue of the boundary density is constant along the
//! circle,
//!
//! ```text
//! λ_min(μ(σ(s), J)) = (2r² − 1) / (2πr³),
//! ```
//!
//! so the boundary integral collapses to δ = −(2 − 1/r²) and the spectral
//! constant 2 + δ = 1/r². That constant is attained: the extremal Blaschke
//! product on the rescaled block `Ψ = J/r` is `B(z) = z²` with
//! `‖Ψ²‖ = 1/r²`, so upper bound and optimizer lower bound coincide. Each
//! numeric path (profile, integrals, matrix evaluation, optimizer) can be
//! compared against these values at machine-level tolerances, which is what
//! [`oracle_compare`] does.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::blaschke::{eval_matrix, BlaschkeProduct};
use crate::error::{Error, Result};
use crate::matkernel::jordan_block;
use crate::regions::{circle_curve, Circle};
use crate::spectralset::{delta_gamma_hat, lambda_min_profile};

/// Closed-form values for the 3×3 Jordan block on the disk `|z| ≤ r`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct JordanCase {
    /// Disk radius, in (0, 1].
    pub r: f64,
    /// The constant value of λ_min(μ(σ(s), J)) along `|z| = r`.
    pub lambda_min: f64,
    /// δ = −(2 − 1/r²).
    pub delta: f64,
    /// 2 + δ = 1/r², the spectral-set constant of the disk.
    pub two_plus_delta: f64,
    /// ‖(J/r)²‖ = 1/r², the attained maximum over Blaschke products.
    pub optimal_norm: f64,
}

/// Absolute deviations of the numeric pipeline from the closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OracleComparison {
    /// max over nodes of |numeric λ_min − closed form|.
    pub profile_dev: f64,
    /// |numeric δ − closed form|.
    pub delta_dev: f64,
    /// |‖(J/r)²‖ via matrix evaluation − 1/r²|.
    pub norm_dev: f64,
}

/// Closed-form quantities for the 3×3 Jordan block on the disk of radius
/// `r` about the origin.
///
/// # Errors
/// [`Error::Input`] unless 0 < r ≤ 1; the eigenvalue formula below is
/// derived for r ≤ 1 only (beyond that the minimizing eigenvector changes
/// branch and these expressions stop being exact).
pub fn closed_forms(r: f64) -> Result<JordanCase> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::Input(format!(
            "closed forms hold for radii in (0, 1]; got {r}"
        )));
    }
    let lambda_min = (2.0 * r * r - 1.0) / (2.0 * PI * r.powi(3));
    let two_plus_delta = 1.0 / (r * r);
    Ok(JordanCase {
        r,
        lambda_min,
        delta: two_plus_delta - 2.0,
        two_plus_delta,
        optimal_norm: two_plus_delta,
    })
}

/// Runs the full numeric pipeline on the 3×3 Jordan block and the circle
/// `|z| = r` with `nodes` quadrature nodes, and reports absolute deviations
/// from [`closed_forms`]: the profile against the constant eigenvalue, δ
/// against −(2 − 1/r²), and the evaluated `‖(J/r)²‖` against 1/r².
///
/// # Errors
/// [`Error::Input`] for r outside (0, 1]; pipeline errors propagate.
pub fn oracle_compare(r: f64, nodes: usize) -> Result<OracleComparison> {
    let exact = closed_forms(r)?;
    let j = jordan_block(3);
    let curve = circle_curve(Circle::new(Complex64::new(0.0, 0.0), r)?, nodes)?;
    let profile = lambda_min_profile(&curve, &j)?;
    let profile_dev = profile
        .values()
        .iter()
        .map(|v| (v - exact.lambda_min).abs())
        .fold(0.0, f64::max);
    let (delta, _) = delta_gamma_hat(&profile);

    let psi = j.scale(Complex64::new(1.0 / r, 0.0));
    let norm = eval_matrix(&BlaschkeProduct::monomial(2), &psi)?.spectral_norm()?;

    Ok(OracleComparison {
        profile_dev,
        delta_dev: (delta - exact.delta).abs(),
        norm_dev: (norm - exact.optimal_norm).abs(),
    })
}
