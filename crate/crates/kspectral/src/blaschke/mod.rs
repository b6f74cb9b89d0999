//! Blaschke products and their norm maximization over a matrix argument.
//!
//! A Blaschke product of degree d is
//!
//! ```text
//! B(z) = e^{iθ}·∏_{j=1}^{d} (z − α_j)/(1 − ᾱ_j z),    |α_j| ≤ 1,
//! ```
//!
//! unimodular on the unit circle when every |α_j| < 1. For a matrix Ψ with
//! spectrum strictly inside the unit disk, `B(Ψ)` composes the Möbius
//! factors `(Ψ − α_j I)(I − ᾱ_j Ψ)^{-1}`. [`maximize_norm`] searches for
//! the product of degree ≤ n−1 maximizing `‖B(Ψ)‖`; at such a maximum with
//! `‖B(Ψ)‖ > 1` the top right singular vector v₁ satisfies
//! `⟨B(Ψ)v₁, v₁⟩ = 0`, which [`thm2_checks`] verifies together with
//! Möbius stationarity.

mod simplex;

use std::cmp::Ordering;

use num_complex::Complex64;
use rand::distributions::Uniform;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matkernel::{
    inner, inverse, largest_singular_triple, spectrum, ComplexMatrix, SingularTriple,
};
use crate::regions::Circle;
use simplex::nelder_mead;

/// Orthogonality residual threshold of the optimality check.
pub const ORTH_TOL: f64 = 1e-6;

/// Norm-increase slack allowed in the Möbius stationarity check.
pub const STAT_TOL: f64 = 1e-8;

/// Excess over 1 at which an optimized norm makes the orthogonality and
/// stationarity checks applicable.
pub const APPLICABILITY_MARGIN: f64 = 1e-6;

/// Roots this close to the unit circle are treated as exact unit-scalar
/// factors during evaluation.
const UNIT_ROOT_TOL: f64 = 1e-12;

/// Roots beyond this modulus mark an optimization result as degenerate
/// (boundary-saturating supremum, e.g. for normal Ψ).
const DEGENERATE_ROOT_TOL: f64 = 1e-6;

/// Candidates whose norms differ by at most this much count as tied and are
/// split by the deterministic root-list tie-break.
const TIE_WINDOW: f64 = 5e-11;

/// Optimized roots beyond this modulus get a companion candidate with the
/// root snapped onto the unit circle, where the factor is an exact unit
/// scalar. This attains boundary-saturating suprema (‖B(Ψ)‖ → 1 for
/// contractions) that the open-disk parameterization only approaches.
const SNAP_TRIGGER: f64 = 0.99;

const MAX_EVALS_PER_RESTART: usize = 5000;
const MAX_EVALS_PER_POLISH: usize = 2000;
const VALUE_TOL: f64 = 1e-12;
const POLISH_VALUE_TOL: f64 = 1e-15;

/// `B(z) = e^{iθ}·∏ (z − α_j)/(1 − ᾱ_j z)` with all `|α_j| ≤ 1`.
#[derive(Clone, Debug)]
pub struct BlaschkeProduct {
    phase: f64,
    roots: Vec<Complex64>,
}

impl BlaschkeProduct {
    /// # Errors
    /// [`Error::Input`] if a root is nonfinite or lies outside the closed
    /// unit disk (beyond a 1e-12 grace), or the phase is nonfinite.
    pub fn new(phase: f64, roots: Vec<Complex64>) -> Result<Self> {
        if !phase.is_finite() {
            return Err(Error::Input("phase must be finite".into()));
        }
        for (j, alpha) in roots.iter().enumerate() {
            if !alpha.re.is_finite() || !alpha.im.is_finite() {
                return Err(Error::Input(format!("root {j} is not finite")));
            }
            if alpha.norm() > 1.0 + UNIT_ROOT_TOL {
                return Err(Error::Input(format!(
                    "root {j} has modulus {} > 1",
                    alpha.norm()
                )));
            }
        }
        Ok(Self {
            phase: phase.rem_euclid(2.0 * std::f64::consts::PI),
            roots,
        })
    }

    /// The plain power `z^degree`.
    pub fn monomial(degree: usize) -> Self {
        Self {
            phase: 0.0,
            roots: vec![Complex64::new(0.0, 0.0); degree],
        }
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }
}

/// Outcome of [`maximize_norm`].
#[derive(Clone, Debug)]
pub struct OptimizationResult {
    /// The best product found (phase 0; the norm is phase-invariant).
    pub product: BlaschkeProduct,
    /// `‖B(Ψ)‖`; always equals `triple.sigma1`.
    pub norm: f64,
    /// Singular triple of `B(Ψ)`.
    pub triple: SingularTriple,
    /// `|⟨B(Ψ)v₁, v₁⟩|` for the top right singular vector v₁.
    pub orthogonality_residual: f64,
    /// Restarts actually run.
    pub restarts_used: usize,
    /// Seed the restart starting points were derived from.
    pub seed: u64,
    /// Some root ended within 1e-6 of the unit circle: the supremum is
    /// boundary-saturating (typical for normal Ψ) and not attained.
    pub degenerate_root: bool,
    /// Best norms of individual restarts spread by more than 1e-6, a sign
    /// of a multi-modal objective.
    pub restarts_disagree: bool,
}

/// Outcome of [`thm2_checks`]. The orthogonality and stationarity fields
/// are `None` when the checks do not apply (`‖B(Ψ)‖ ≤ 1 + 1e-6`).
#[derive(Clone, Copy, Debug)]
pub struct OptimalityChecks {
    pub applicable: bool,
    pub orthogonality_ok: Option<bool>,
    pub stationarity_ok: Option<bool>,
}

/// Scalar evaluation by the product formula. Factors with `|α_j| = 1`
/// degenerate to the unimodular constant −α_j.
///
/// # Errors
/// [`Error::Singularity`] at a pole (`z = 1/ᾱ_j`, necessarily |z| > 1).
pub fn eval_scalar(b: &BlaschkeProduct, z: Complex64) -> Result<Complex64> {
    let mut acc = Complex64::from_polar(1.0, b.phase);
    for alpha in &b.roots {
        if alpha.norm() >= 1.0 - UNIT_ROOT_TOL {
            acc *= -alpha;
            continue;
        }
        let denom = Complex64::new(1.0, 0.0) - alpha.conj() * z;
        if denom.norm() <= 1e-14 * (1.0 + z.norm()) {
            return Err(Error::Singularity(format!(
                "z = {z} hits the pole 1/conj(α) of the factor with α = {alpha}"
            )));
        }
        acc *= (z - alpha) / denom;
    }
    Ok(acc)
}

/// The affine rescaling `(A − cI)/R` that maps the disk to the unit disk:
/// the conformal change of variable under which a Blaschke product on the
/// disk becomes a Blaschke product on `𝒟`.
pub fn rescale_to_unit_disk(a: &ComplexMatrix, disk: Circle) -> ComplexMatrix {
    let shifted = a - &ComplexMatrix::identity(a.dim()).scale(disk.center);
    shifted.scale(Complex64::new(1.0 / disk.radius, 0.0))
}

/// `(M − αI)(I − ᾱM)^{-1}`, the Möbius transform of a matrix.
///
/// # Errors
/// [`Error::Input`] unless |α| < 1; [`Error::Singularity`] if `I − ᾱM` is
/// singular (spectrum of M touching 1/ᾱ).
pub fn mobius_of_matrix(m: &ComplexMatrix, alpha: Complex64) -> Result<ComplexMatrix> {
    // NaN must fail this gate too, so the comparison is kept inclusive.
    if alpha.norm().is_nan() || alpha.norm() >= 1.0 {
        return Err(Error::Input(format!(
            "Möbius parameter must satisfy |α| < 1, got |α| = {}",
            alpha.norm()
        )));
    }
    mobius_unchecked(m, alpha)
}

fn mobius_unchecked(m: &ComplexMatrix, alpha: Complex64) -> Result<ComplexMatrix> {
    let n = m.dim();
    if alpha.norm() == 0.0 {
        return Ok(m.clone());
    }
    let numer = ComplexMatrix::from_fn(n, |i, j| {
        let d = if i == j {
            alpha
        } else {
            Complex64::new(0.0, 0.0)
        };
        m.get(i, j) - d
    })?;
    let denom = ComplexMatrix::from_fn(n, |i, j| {
        let d = if i == j {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        };
        d - alpha.conj() * m.get(i, j)
    })?;
    let denom_inv = inverse(&denom).map_err(|_| {
        Error::Singularity(format!(
            "I − conj(α)M is singular for α = {alpha}; spectrum touches 1/conj(α)"
        ))
    })?;
    Ok(&numer * &denom_inv)
}

/// Matrix evaluation `e^{iθ}·∏_j (Ψ − α_j I)(I − ᾱ_j Ψ)^{-1}`, with
/// `|α_j| = 1` factors replaced by the unit scalar −α_j (limit convention).
///
/// # Errors
/// [`Error::Input`] unless the spectrum of Ψ is strictly inside the unit
/// disk (which also rules out singular factors).
pub fn eval_matrix(b: &BlaschkeProduct, psi: &ComplexMatrix) -> Result<ComplexMatrix> {
    ensure_strictly_inside_disk(psi)?;
    eval_matrix_unchecked(b, psi)
}

/// Evaluation without the spectral-radius precondition check; used by the
/// optimizer, which validates Ψ once for thousands of evaluations.
fn eval_matrix_unchecked(b: &BlaschkeProduct, psi: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = psi.dim();
    let mut acc = ComplexMatrix::identity(n).scale(Complex64::from_polar(1.0, b.phase));
    for alpha in &b.roots {
        if alpha.norm() >= 1.0 - UNIT_ROOT_TOL {
            acc = acc.scale(-alpha);
        } else {
            acc = &acc * &mobius_unchecked(psi, *alpha)?;
        }
    }
    Ok(acc)
}

fn ensure_strictly_inside_disk(psi: &ComplexMatrix) -> Result<Vec<Complex64>> {
    let eigs = spectrum(psi)?;
    let rho = eigs.iter().map(|l| l.norm()).fold(0.0f64, f64::max);
    if rho >= 1.0 {
        return Err(Error::Input(format!(
            "spectrum must lie strictly inside the unit disk; spectral radius is {rho}"
        )));
    }
    Ok(eigs)
}

/// Maps an unconstrained planar parameter to the open unit disk.
fn root_from_params(wx: f64, wy: f64) -> Complex64 {
    let w = Complex64::new(wx, wy);
    w / (1.0 + w.norm_sqr()).sqrt()
}

/// Inverse of [`root_from_params`], with the parameter modulus capped so
/// near-circle starting roots stay numerically workable.
fn params_from_root(alpha: Complex64) -> (f64, f64) {
    const MAX_W: f64 = 25.0;
    let denom = (1.0 - alpha.norm_sqr()).max(0.0).sqrt();
    let w = if denom <= alpha.norm() / MAX_W {
        alpha / alpha.norm() * MAX_W
    } else {
        alpha / denom
    };
    (w.re, w.im)
}

fn roots_from_flat(params: &[f64]) -> Vec<Complex64> {
    params
        .chunks_exact(2)
        .map(|w| root_from_params(w[0], w[1]))
        .collect()
}

/// Roots sorted by modulus then argument; the tie-break ordering.
fn sorted_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut out = roots.to_vec();
    out.sort_by(|a, b| {
        a.norm()
            .total_cmp(&b.norm())
            .then_with(|| a.arg().total_cmp(&b.arg()))
    });
    out
}

fn roots_lex_cmp(a: &[Complex64], b: &[Complex64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let o = x
            .norm()
            .total_cmp(&y.norm())
            .then_with(|| x.arg().total_cmp(&y.arg()));
        if o != Ordering::Equal {
            return o;
        }
    }
    a.len().cmp(&b.len())
}

struct Candidate {
    roots: Vec<Complex64>,
    norm: f64,
    from_restart: bool,
}

fn norm_at(psi: &ComplexMatrix, roots: Vec<Complex64>) -> Result<Candidate> {
    let b = BlaschkeProduct {
        phase: 0.0,
        roots: roots.clone(),
    };
    let norm = eval_matrix_unchecked(&b, psi)?.spectral_norm()?;
    Ok(Candidate {
        roots,
        norm,
        from_restart: false,
    })
}

/// Best Blaschke product of degree ≤ `max_degree` by multi-start simplex
/// search over the roots (the phase is fixed to 0 since the norm is
/// phase-invariant).
///
/// Restart k draws its starting roots from a generator seeded with
/// `seed + k`; restart 0 starts at all roots 0 and restart 1 at the
/// largest-modulus eigenvalues of Ψ. The monomials z^1 … z^max_degree and
/// an all-boundary unit-scalar product (norm exactly ‖I‖ = 1) always
/// compete as baseline candidates, so the reported norm dominates every
/// plain power z^0 … z^max_degree. Roots that saturate toward the unit
/// circle also enter snapped exactly onto it, where the factor is an exact
/// unit scalar; such roots are reported with the `degenerate_root` flag.
/// Ties within 5e-11 of the best norm go to the lexicographically smallest
/// sorted root list, making the output deterministic.
///
/// # Errors
/// [`Error::Input`] if the spectrum of Ψ is not strictly inside the unit
/// disk, `max_degree > n − 1`, or `restarts == 0`.
pub fn maximize_norm(
    psi: &ComplexMatrix,
    max_degree: usize,
    restarts: usize,
    seed: u64,
) -> Result<OptimizationResult> {
    let eigs = ensure_strictly_inside_disk(psi)?;
    let n = psi.dim();
    if max_degree > n - 1 {
        return Err(Error::Input(format!(
            "max_degree {max_degree} exceeds n − 1 = {} (higher degrees cannot help)",
            n - 1
        )));
    }
    if restarts == 0 {
        return Err(Error::Input("need at least one restart".into()));
    }

    // Baselines every optimizer run must dominate: the plain powers z^d,
    // and for degree ≥ 1 an all-boundary product (an exact unit scalar, so
    // norm exactly 1). The boundary guard attains the degree-0 value ‖I‖,
    // so the reported norm dominates z^0 as well without letting the empty
    // root list win ties against informative degenerate roots.
    let mut candidates: Vec<Candidate> = if max_degree == 0 {
        vec![norm_at(psi, Vec::new())?]
    } else {
        let mut base: Vec<Candidate> = (1..=max_degree)
            .map(|d| norm_at(psi, vec![Complex64::new(0.0, 0.0); d]))
            .collect::<Result<_>>()?;
        base.push(norm_at(psi, vec![Complex64::new(1.0, 0.0); max_degree])?);
        base
    };

    let mut restart_norms: Vec<f64> = Vec::new();
    if max_degree > 0 {
        let starts: Vec<Vec<f64>> = (0..restarts)
            .map(|k| starting_params(k, max_degree, &eigs, seed))
            .collect();
        let per_restart: Vec<Vec<Candidate>> = starts
            .par_iter()
            .map(|start| {
                let mut objective = |params: &[f64]| -> f64 {
                    let b = BlaschkeProduct {
                        phase: 0.0,
                        roots: roots_from_flat(params),
                    };
                    match eval_matrix_unchecked(&b, psi).and_then(|m| m.spectral_norm()) {
                        Ok(v) => -v,
                        Err(_) => f64::INFINITY,
                    }
                };
                // Polish passes restart the simplex smaller around the
                // incumbent at tighter value tolerance, recovering accuracy
                // lost to early simplex shrinking.
                let mut best =
                    nelder_mead(&mut objective, start, 0.3, VALUE_TOL, MAX_EVALS_PER_RESTART);
                for polish_step in [0.03, 1e-3, 1e-5] {
                    let refined = nelder_mead(
                        &mut objective,
                        &best.point,
                        polish_step,
                        POLISH_VALUE_TOL,
                        MAX_EVALS_PER_POLISH,
                    );
                    if refined.value < best.value {
                        best = refined;
                    }
                }
                let raw_roots = roots_from_flat(&best.point);
                let mut out = vec![Candidate {
                    roots: raw_roots.clone(),
                    norm: -best.value,
                    from_restart: true,
                }];
                if raw_roots.iter().any(|a| a.norm() >= SNAP_TRIGGER) {
                    let snapped: Vec<Complex64> = raw_roots
                        .iter()
                        .map(|a| {
                            if a.norm() >= SNAP_TRIGGER {
                                a / a.norm()
                            } else {
                                *a
                            }
                        })
                        .collect();
                    if let Ok(mut cand) = norm_at(psi, snapped) {
                        cand.from_restart = true;
                        out.push(cand);
                    }
                }
                out
            })
            .collect();
        for cands in per_restart {
            let best = cands
                .iter()
                .map(|cand| cand.norm)
                .fold(f64::NEG_INFINITY, f64::max);
            restart_norms.push(best);
            candidates.extend(cands);
        }
    }

    let restarts_disagree = match (
        restart_norms.iter().copied().reduce(f64::min),
        restart_norms.iter().copied().reduce(f64::max),
    ) {
        (Some(lo), Some(hi)) => hi - lo > 1e-6,
        _ => false,
    };

    let best_norm = candidates
        .iter()
        .map(|cand| cand.norm)
        .fold(f64::NEG_INFINITY, f64::max);
    let winner = candidates
        .iter()
        .filter(|cand| cand.norm >= best_norm - TIE_WINDOW)
        .map(|cand| sorted_roots(&cand.roots))
        .min_by(|a, b| roots_lex_cmp(a, b))
        .expect("the baseline candidates are nonempty");

    let product = BlaschkeProduct {
        phase: 0.0,
        roots: winner,
    };
    let bpsi = eval_matrix_unchecked(&product, psi)?;
    let triple = largest_singular_triple(&bpsi)?;
    let orthogonality_residual = orthogonality_residual_of(&bpsi, &triple.v1);
    let degenerate_root = product
        .roots
        .iter()
        .any(|alpha| alpha.norm() > 1.0 - DEGENERATE_ROOT_TOL);

    Ok(OptimizationResult {
        norm: triple.sigma1,
        product,
        triple,
        orthogonality_residual,
        restarts_used: restarts,
        seed,
        degenerate_root,
        restarts_disagree,
    })
}

fn starting_params(k: usize, max_degree: usize, eigs: &[Complex64], seed: u64) -> Vec<f64> {
    match k {
        0 => vec![0.0; 2 * max_degree],
        1 => {
            let mut by_modulus = eigs.to_vec();
            by_modulus.sort_by(|a, b| b.norm().total_cmp(&a.norm()));
            by_modulus
                .iter()
                .cycle()
                .take(max_degree)
                .flat_map(|l| {
                    let (wx, wy) = params_from_root(*l);
                    [wx, wy]
                })
                .collect()
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
            let unif = Uniform::new(0.0f64, 1.0);
            (0..max_degree)
                .flat_map(|_| {
                    let r = 0.95 * rng.sample(unif).sqrt();
                    let theta = 2.0 * std::f64::consts::PI * rng.sample(unif);
                    let (wx, wy) = params_from_root(Complex64::from_polar(r, theta));
                    [wx, wy]
                })
                .collect()
        }
    }
}

/// Optimality diagnostics at an optimization result: the singular-vector
/// orthogonality `|⟨B(Ψ)v₁, v₁⟩| ≤ orth_tol` and Möbius stationarity
/// `‖(B(Ψ) − αI)(I − ᾱB(Ψ))^{-1}‖ ≤ ‖B(Ψ)‖ + stat_tol` for trial α on the
/// circles |α| ∈ {1e-2, 1e-3}, 16 angles each. Both checks apply only when
/// `‖B(Ψ)‖ > 1 + 1e-6`.
///
/// # Errors
/// Only on violated preconditions (`result` not produced on this Ψ).
pub fn thm2_checks(psi: &ComplexMatrix, result: &OptimizationResult) -> Result<OptimalityChecks> {
    let applicable = result.norm > 1.0 + APPLICABILITY_MARGIN;
    if !applicable {
        return Ok(OptimalityChecks {
            applicable,
            orthogonality_ok: None,
            stationarity_ok: None,
        });
    }
    let bpsi = eval_matrix(&result.product, psi)?;
    let mut stationary = true;
    for modulus in [1e-2, 1e-3] {
        for angle_index in 0..16 {
            let theta = 2.0 * std::f64::consts::PI * angle_index as f64 / 16.0;
            let alpha = Complex64::from_polar(modulus, theta);
            let moved = mobius_of_matrix(&bpsi, alpha)?.spectral_norm()?;
            if moved > result.norm + STAT_TOL {
                stationary = false;
            }
        }
    }
    Ok(OptimalityChecks {
        applicable,
        orthogonality_ok: Some(result.orthogonality_residual <= ORTH_TOL),
        stationarity_ok: Some(stationary),
    })
}

/// `|⟨Mv₁, v₁⟩|`, the orthogonality residual of a singular triple.
fn orthogonality_residual_of(m: &ComplexMatrix, v1: &[Complex64]) -> f64 {
    inner(v1, &m.matvec(v1)).norm()
}
