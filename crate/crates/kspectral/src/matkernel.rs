//! Dense complex matrix kernel.
//!
//! Hermitian eigensolves, largest singular triples, resolvents, spectra and
//! norms: the numeric substrate for every other module. Backed by the pure
//! Rust [`faer`] solvers, which are deterministic for a fixed input, so every
//! operation here is reproducible bit-for-bit across runs.

use faer::linalg::solvers::Solve;
use faer::{Col, Mat, Side};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};

/// Relative Frobenius tolerance under which an almost-Hermitian input is
/// accepted and symmetrized. Analytically Hermitian quantities (the boundary
/// density mu) pick up asymmetry of this order from roundoff alone.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Relative distance from the spectrum under which a resolvent request is
/// refused as singular.
pub const RESOLVENT_GUARD: f64 = 1e-12;

/// Dense square complex matrix.
///
/// Invariants: square, every entry finite. Enforced by the public
/// constructors; arithmetic on finite matrices preserves them.
#[derive(Clone, Debug)]
pub struct ComplexMatrix {
    data: Mat<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries, validating squareness and
    /// finiteness.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Input("matrix must have at least one row".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Input(format!(
                    "row {i} has {} entries, expected {n} (matrix must be square)",
                    row.len()
                )));
            }
        }
        let m = Self {
            data: Mat::from_fn(n, n, |i, j| rows[i][j]),
        };
        m.ensure_finite()?;
        Ok(m)
    }

    /// Builds an `n x n` matrix from an entry function, validating finiteness.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("matrix dimension must be positive".into()));
        }
        let m = Self {
            data: Mat::from_fn(n, n, &mut f),
        };
        m.ensure_finite()?;
        Ok(m)
    }

    fn ensure_finite(&self) -> Result<()> {
        if self.all_finite() {
            Ok(())
        } else {
            Err(Error::Input("matrix entries must all be finite".into()))
        }
    }

    /// Identity matrix of dimension `n`.
    pub fn identity(n: usize) -> Self {
        Self {
            data: Mat::identity(n, n),
        }
    }

    /// Zero matrix of dimension `n`.
    pub fn zeros(n: usize) -> Self {
        Self {
            data: Mat::zeros(n, n),
        }
    }

    /// Matrix dimension (matrices are square).
    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    /// Entry at `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[(i, j)]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self {
            data: self.data.adjoint().to_owned(),
        }
    }

    /// Multiplies every entry by the complex scalar `c`.
    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            data: faer::Scale(c) * &self.data,
        }
    }

    /// Frobenius norm.
    pub fn frobenius_norm(&self) -> f64 {
        let mut acc = 0.0;
        for j in 0..self.dim() {
            for i in 0..self.dim() {
                acc += self.data[(i, j)].norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// Spectral norm (largest singular value).
    pub fn spectral_norm(&self) -> Result<f64> {
        let sv = self
            .data
            .singular_values()
            .map_err(|e| Error::Numerical(format!("SVD did not converge: {e:?}")))?;
        Ok(sv.first().copied().unwrap_or(0.0))
    }

    /// Smallest singular value; 0 signals a singular matrix.
    pub fn smallest_singular_value(&self) -> Result<f64> {
        let sv = self
            .data
            .singular_values()
            .map_err(|e| Error::Numerical(format!("SVD did not converge: {e:?}")))?;
        Ok(sv.last().copied().unwrap_or(0.0))
    }

    /// Frobenius distance to the conjugate transpose, `‖M − M*‖_F`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut acc = 0.0;
        for j in 0..self.dim() {
            for i in 0..self.dim() {
                acc += (self.data[(i, j)] - self.data[(j, i)].conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// Whether `‖M − M*‖_F ≤ tol·‖M‖_F`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol * self.frobenius_norm()
    }

    /// Matrix-vector product.
    pub fn matvec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.dim(), "vector length must match dimension");
        let col = Col::<Complex64>::from_fn(x.len(), |i| x[i]);
        let y = &self.data * &col;
        (0..self.dim()).map(|i| y[i]).collect()
    }

    fn all_finite(&self) -> bool {
        for j in 0..self.dim() {
            for i in 0..self.dim() {
                let z = self.data[(i, j)];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return false;
                }
            }
        }
        true
    }

    /// Largest entrywise absolute difference to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        let mut worst = 0.0f64;
        for j in 0..self.dim() {
            for i in 0..self.dim() {
                worst = worst.max((self.data[(i, j)] - other.data[(i, j)]).norm());
            }
        }
        worst
    }
}

impl std::ops::Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        ComplexMatrix {
            data: &self.data + &rhs.data,
        }
    }
}

impl std::ops::Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        ComplexMatrix {
            data: &self.data - &rhs.data,
        }
    }
}

impl std::ops::Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        ComplexMatrix {
            data: &self.data * &rhs.data,
        }
    }
}

/// Smallest eigenvalue of a Hermitian matrix with a unit eigenvector.
#[derive(Clone, Debug)]
pub struct HermitianEigenResult {
    /// Smallest eigenvalue.
    pub value: f64,
    /// Unit eigenvector for `value`. For a degenerate smallest eigenvalue
    /// this is one deterministic representative of the eigenspace.
    pub vector: Vec<Complex64>,
}

/// Largest singular value of a matrix with its left/right unit singular
/// vectors: `M v1 = sigma1 u1`.
#[derive(Clone, Debug)]
pub struct SingularTriple {
    /// Largest singular value (the spectral norm).
    pub sigma1: f64,
    /// Unit right singular vector.
    pub v1: Vec<Complex64>,
    /// Unit left singular vector.
    pub u1: Vec<Complex64>,
}

/// Smallest eigenvalue (with eigenvector) of a Hermitian matrix.
///
/// The input must be Hermitian within [`HERMITICITY_TOL`] relative to its
/// Frobenius norm; it is then symmetrized as `(H + H*)/2` before solving, so
/// roundoff-level asymmetry cannot leak into the eigensolve.
///
/// # Errors
/// [`Error::Input`] if the deviation from Hermitian exceeds the tolerance;
/// [`Error::Numerical`] if the eigensolver does not converge.
pub fn hermitian_min_eig(h: &ComplexMatrix) -> Result<HermitianEigenResult> {
    let scale = h.frobenius_norm();
    if h.hermitian_deviation() > HERMITICITY_TOL * scale {
        return Err(Error::Input(format!(
            "matrix is not Hermitian: ‖H − H*‖_F = {:.3e} exceeds {:.0e}·‖H‖_F",
            h.hermitian_deviation(),
            HERMITICITY_TOL
        )));
    }
    let sym = &(h + &h.adjoint()).data * faer::Scale(Complex64::new(0.5, 0.0));
    let eig = sym
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| Error::Numerical(format!("Hermitian eigensolver did not converge: {e:?}")))?;
    // Eigenvalues come back in nondecreasing order; column 0 is the minimum.
    let value = eig.S()[0].re;
    let vector = normalized_column(eig.U(), 0);
    Ok(HermitianEigenResult { value, vector })
}

/// Largest singular value and its singular vector pair.
///
/// `sigma1` is the spectral norm of `M`; the vectors satisfy
/// `M v1 = sigma1 u1` up to solver tolerance. For a degenerate largest
/// singular value a deterministic representative pair is returned.
///
/// # Errors
/// [`Error::Numerical`] if the SVD does not converge.
pub fn largest_singular_triple(m: &ComplexMatrix) -> Result<SingularTriple> {
    let svd = m
        .data
        .svd()
        .map_err(|e| Error::Numerical(format!("SVD did not converge: {e:?}")))?;
    // Singular values come back in nonincreasing order; column 0 is the max.
    let sigma1 = svd.S()[0].re;
    let v1 = normalized_column(svd.V(), 0);
    let u1 = normalized_column(svd.U(), 0);
    Ok(SingularTriple { sigma1, v1, u1 })
}

/// Resolvent `R(σ, A) = (σI − A)^{-1}`.
///
/// Refuses σ within [`RESOLVENT_GUARD`]·‖A‖_F of the spectrum (the guard is
/// relative to matrix scale so behavior is dimension independent). For
/// quadrature loops that have already validated node-to-spectrum distances,
/// the crate uses an internal solve that skips the spectrum computation.
///
/// # Errors
/// [`Error::Singularity`] if σ is numerically an eigenvalue;
/// [`Error::Numerical`] if the eigensolver backing the guard fails.
pub fn resolvent(sigma: Complex64, a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eigs = spectrum(a)?;
    let guard = RESOLVENT_GUARD * a.frobenius_norm().max(f64::MIN_POSITIVE);
    let dist = eigs
        .iter()
        .map(|l| (sigma - l).norm())
        .fold(f64::INFINITY, f64::min);
    if dist <= guard {
        return Err(Error::Singularity(format!(
            "σ = {sigma} is within {dist:.3e} of the spectrum"
        )));
    }
    resolvent_unchecked(sigma, a)
}

/// Resolvent solve without the spectrum-distance guard. Callers must have
/// validated that σ is bounded away from the spectrum (curve constructors
/// do this once per curve instead of once per node).
pub(crate) fn resolvent_unchecked(sigma: Complex64, a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = a.dim();
    let shifted = ComplexMatrix {
        data: Mat::from_fn(n, n, |i, j| {
            let d = if i == j {
                sigma
            } else {
                Complex64::new(0.0, 0.0)
            };
            d - a.data[(i, j)]
        }),
    };
    inverse(&shifted).map_err(|_| {
        Error::Singularity(format!(
            "resolvent solve at σ = {sigma} produced nonfinite entries"
        ))
    })
}

/// LU-based inverse with a finiteness backstop for (near-)singular input.
pub(crate) fn inverse(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = m.dim();
    let lu = m.data.partial_piv_lu();
    let x = lu.solve(Mat::<Complex64>::identity(n, n));
    let out = ComplexMatrix { data: x };
    if out.all_finite() {
        Ok(out)
    } else {
        Err(Error::Singularity(
            "matrix inverse produced nonfinite entries".into(),
        ))
    }
}

/// All eigenvalues of `A`, with multiplicity, sorted by real part then
/// imaginary part for deterministic output.
///
/// # Errors
/// [`Error::Numerical`] if the eigensolver does not converge.
pub fn spectrum(a: &ComplexMatrix) -> Result<Vec<Complex64>> {
    let mut eigs: Vec<Complex64> = a
        .data
        .eigenvalues()
        .map_err(|e| Error::Numerical(format!("eigensolver did not converge: {e:?}")))?;
    eigs.sort_by(|p, q| {
        p.re.partial_cmp(&q.re)
            .unwrap()
            .then(p.im.partial_cmp(&q.im).unwrap())
    });
    Ok(eigs)
}

/// Inner product `⟨x, y⟩ = Σ conj(x_i)·y_i` (conjugate-linear in `x`).
pub fn inner(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    assert_eq!(x.len(), y.len(), "vector length mismatch");
    x.iter().zip(y).map(|(a, b)| a.conj() * b).sum()
}

/// Euclidean norm of a complex vector.
pub fn vec_norm(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn normalized_column(m: faer::MatRef<'_, Complex64>, j: usize) -> Vec<Complex64> {
    let mut v: Vec<Complex64> = (0..m.nrows()).map(|i| m[(i, j)]).collect();
    let norm = vec_norm(&v);
    if norm > 0.0 {
        for z in &mut v {
            *z /= norm;
        }
    }
    v
}

/// Jordan block of dimension `n` with eigenvalue 0 (ones on the
/// superdiagonal).
pub fn jordan_block(n: usize) -> ComplexMatrix {
    ComplexMatrix {
        data: Mat::from_fn(n, n, |i, j| {
            if j == i + 1 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        }),
    }
}

/// Jordan block of dimension `n` with an extra `eps` entry in the bottom-left
/// corner. Its characteristic polynomial is `λ^n − eps`, so the spectrum is
/// the n-th roots of `eps`.
pub fn perturbed_jordan(n: usize, eps: f64) -> ComplexMatrix {
    ComplexMatrix {
        data: Mat::from_fn(n, n, |i, j| {
            if j == i + 1 {
                Complex64::new(1.0, 0.0)
            } else if i == n - 1 && j == 0 && n > 1 {
                Complex64::new(eps, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        }),
    }
}

/// Seeded random upper triangular matrix: entries on and above the diagonal
/// are independent complex Gaussians (standard normal real and imaginary
/// parts), zeros below. Deterministic for a fixed seed.
pub fn random_upper_triangular(n: usize, seed: u64) -> ComplexMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    // Row-major generation order is part of the determinism contract.
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            if j >= i {
                let re: f64 = StandardNormal.sample(&mut rng);
                let im: f64 = StandardNormal.sample(&mut rng);
                *entry = Complex64::new(re, im);
            }
        }
    }
    ComplexMatrix {
        data: Mat::from_fn(n, n, |i, j| rows[i][j]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn min_eig_of_identity_is_one() {
        let result = hermitian_min_eig(&ComplexMatrix::identity(3)).unwrap();
        assert!((result.value - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn min_eig_of_ones_plus_identity_scaled() {
        // (1/2π)·[[2,1,1],[1,2,1],[1,1,2]] has eigenvalues {1,1,4}/(2π);
        // the smallest is 1/(2π).
        let s = 1.0 / (2.0 * std::f64::consts::PI);
        let m = ComplexMatrix::from_fn(3, |i, j| if i == j { c(2.0 * s, 0.0) } else { c(s, 0.0) })
            .unwrap();
        let result = hermitian_min_eig(&m).unwrap();
        assert!((result.value - s).abs() <= 1e-12);
        // Residual invariant ‖Hv − λv‖ ≤ tol·‖H‖.
        let hv = m.matvec(&result.vector);
        let res: f64 = hv
            .iter()
            .zip(&result.vector)
            .map(|(a, b)| (a - result.value * b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert!(res <= 1e-12 * m.frobenius_norm());
    }

    #[test]
    fn min_eig_of_diagonal() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(5.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(-3.0, 0.0)],
        ])
        .unwrap();
        assert!((hermitian_min_eig(&m).unwrap().value + 3.0).abs() <= 1e-14);
    }

    #[test]
    fn min_eig_rejects_non_hermitian() {
        let m = jordan_block(3);
        assert!(matches!(hermitian_min_eig(&m), Err(Error::Input(_))));
    }

    #[test]
    fn singular_triple_of_single_entry_matrix() {
        // Single 1 at position (0, 2): sigma1 = 1, v1 = e3, u1 = e1 up to phase.
        let m = ComplexMatrix::from_fn(3, |i, j| {
            if i == 0 && j == 2 {
                c(1.0, 0.0)
            } else {
                c(0.0, 0.0)
            }
        })
        .unwrap();
        let t = largest_singular_triple(&m).unwrap();
        assert!((t.sigma1 - 1.0).abs() <= 1e-14);
        assert!((t.v1[2].norm() - 1.0).abs() <= 1e-12);
        assert!((t.u1[0].norm() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn singular_triple_of_zero_matrix() {
        let t = largest_singular_triple(&ComplexMatrix::zeros(4)).unwrap();
        assert!(t.sigma1 <= 1e-15);
    }

    #[test]
    fn singular_triple_of_squared_scaled_jordan() {
        // (J/0.8)² has a single entry 1/0.64 = 1.5625 at (0,2).
        let j = jordan_block(3).scale(c(1.0 / 0.8, 0.0));
        let sq = &j * &j;
        let t = largest_singular_triple(&sq).unwrap();
        assert!((t.sigma1 - 1.5625).abs() <= 1e-12);
    }

    #[test]
    fn resolvent_of_jordan_block_matches_closed_form() {
        // (rI − J)^{-1} = (1/r)·[[1, 1/r, 1/r²],[0, 1, 1/r],[0, 0, 1]].
        let r = 0.8;
        let a = jordan_block(3);
        let res = resolvent(c(r, 0.0), &a).unwrap();
        let expected = ComplexMatrix::from_fn(3, |i, j| {
            if j >= i {
                c(1.0 / r.powi((j - i + 1) as i32), 0.0)
            } else {
                c(0.0, 0.0)
            }
        })
        .unwrap();
        assert!(res.max_abs_diff(&expected) <= 1e-13);
    }

    #[test]
    fn resolvent_of_diagonal_matrix() {
        let lams = [c(0.3, -0.2), c(-1.0, 0.5), c(2.0, 0.0)];
        let a =
            ComplexMatrix::from_fn(3, |i, j| if i == j { lams[i] } else { c(0.0, 0.0) }).unwrap();
        let sigma = c(0.5, 0.7);
        let res = resolvent(sigma, &a).unwrap();
        for (i, &lam) in lams.iter().enumerate() {
            assert!((res.get(i, i) - 1.0 / (sigma - lam)).norm() <= 1e-14);
        }
    }

    #[test]
    fn resolvent_at_eigenvalue_is_singular() {
        let a = jordan_block(3);
        assert!(matches!(
            resolvent(c(0.0, 0.0), &a),
            Err(Error::Singularity(_))
        ));
    }

    #[test]
    fn spectrum_of_perturbed_jordan_is_cube_roots() {
        // λ³ = 0.1, so all moduli are 0.1^(1/3).
        let eigs = spectrum(&perturbed_jordan(3, 0.1)).unwrap();
        let r = 0.1f64.powf(1.0 / 3.0);
        assert_eq!(eigs.len(), 3);
        for l in &eigs {
            assert!((l.norm() - r).abs() <= 1e-12);
        }
        // The three roots are 120 degrees apart: their sum vanishes.
        let s: Complex64 = eigs.iter().sum();
        assert!(s.norm() <= 1e-12);
    }

    #[test]
    fn spectrum_of_upper_triangular_is_diagonal() {
        let a = random_upper_triangular(6, 42);
        let mut diag: Vec<Complex64> = (0..6).map(|i| a.get(i, i)).collect();
        diag.sort_by(|p, q| {
            p.re.partial_cmp(&q.re)
                .unwrap()
                .then(p.im.partial_cmp(&q.im).unwrap())
        });
        let eigs = spectrum(&a).unwrap();
        for (e, d) in eigs.iter().zip(&diag) {
            assert!((e - d).norm() <= 1e-10 * a.frobenius_norm());
        }
    }

    #[test]
    fn spectrum_of_hermitian_is_real() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.5, 0.5)],
            vec![c(0.5, -0.5), c(-2.0, 0.0)],
        ])
        .unwrap();
        for l in spectrum(&m).unwrap() {
            assert!(l.im.abs() <= 1e-12);
        }
    }

    #[test]
    fn generators_have_documented_shape() {
        let j = jordan_block(3);
        assert!((j.get(0, 1) - c(1.0, 0.0)).norm() == 0.0);
        assert!((j.get(1, 2) - c(1.0, 0.0)).norm() == 0.0);
        assert!(j.get(2, 0).norm() == 0.0);

        let p = perturbed_jordan(3, 0.1);
        assert!((p.get(2, 0) - c(0.1, 0.0)).norm() == 0.0);

        let r1 = random_upper_triangular(12, 7);
        let r2 = random_upper_triangular(12, 7);
        assert!(r1.max_abs_diff(&r2) == 0.0);
        for i in 1..12 {
            for j in 0..i {
                assert!(r1.get(i, j).norm() == 0.0);
            }
        }
    }

    #[test]
    fn from_rows_rejects_ragged_and_nonfinite() {
        assert!(ComplexMatrix::from_rows(&[vec![c(1.0, 0.0)], vec![]]).is_err());
        assert!(ComplexMatrix::from_rows(&[vec![c(f64::NAN, 0.0)]]).is_err());
    }

    #[test]
    fn min_eig_is_below_rayleigh_quotients() {
        // For Hermitian H, the smallest eigenvalue bounds ⟨Hx, x⟩ from below
        // over 100 random unit vectors.
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..5 {
            let n = 5;
            let raw = ComplexMatrix::from_fn(n, |_, _| {
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            })
            .unwrap();
            let h = &raw + &raw.adjoint();
            let min = hermitian_min_eig(&h).unwrap().value;
            for _ in 0..100 {
                let mut x: Vec<Complex64> = (0..n)
                    .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                    .collect();
                let norm = vec_norm(&x);
                x.iter_mut().for_each(|z| *z /= norm);
                let rayleigh = inner(&x, &h.matvec(&x)).re;
                assert!(min <= rayleigh + 1e-10);
            }
        }
    }

    #[test]
    fn sigma1_dominates_random_directions() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let n = 6;
        let m = ComplexMatrix::from_fn(n, |_, _| {
            c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        })
        .unwrap();
        let sigma1 = largest_singular_triple(&m).unwrap().sigma1;
        let mut best = 0.0f64;
        for _ in 0..100 {
            let mut x: Vec<Complex64> = (0..n)
                .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let norm = vec_norm(&x);
            x.iter_mut().for_each(|z| *z /= norm);
            best = best.max(vec_norm(&m.matvec(&x)));
        }
        // Random directions approach the norm from below, never exceed it.
        assert!(best <= sigma1 * (1.0 + 1e-8));
        assert!(best >= 0.1 * sigma1);
    }

    proptest! {
        #[test]
        fn first_resolvent_identity(
            sre in -2.0f64..2.0, sim in -2.0f64..2.0,
            tre in -2.0f64..2.0, tim in -2.0f64..2.0,
        ) {
            // R(σ) − R(σ̃) = (σ̃ − σ)·R(σ)·R(σ̃) away from the spectrum.
            let a = perturbed_jordan(3, 0.1);
            let radius = 0.1f64.powf(1.0 / 3.0);
            let sigma = c(sre, sim);
            let tilde = c(tre, tim);
            prop_assume!(sigma.norm() > radius + 0.1 && tilde.norm() > radius + 0.1);
            prop_assume!((sigma - tilde).norm() > 1e-6);
            let rs = resolvent(sigma, &a).unwrap();
            let rt = resolvent(tilde, &a).unwrap();
            let lhs = &rs - &rt;
            let rhs = (&rs * &rt).scale(tilde - sigma);
            let scale = lhs.frobenius_norm().max(1e-30);
            prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-10 * scale.max(1.0));
        }
    }
}
