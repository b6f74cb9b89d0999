//! The operator behind the 2 + δ bound. For a boundary function f with
//! sup|f| = 1 the similarity S = f(A) + g(A)* + γI satisfies
//! ‖S‖ ≤ 2 + δ, where g is the Cauchy transform of f̄ and γ a profile
//! moment. This example assembles S for the norm-maximizing Blaschke
//! product on a disk enclosing a perturbed Jordan matrix and inspects
//! every ingredient of the inequality.

use kspectral::blaschke::{eval_scalar, maximize_norm, rescale_to_unit_disk};
use kspectral::cauchykit::{
    assemble_s, conjecture_probe, fit_affine_inverse, g_boundary_values, hull_check,
    BoundaryFunction,
};
use kspectral::matkernel::{perturbed_jordan, ComplexMatrix};
use kspectral::regions::{circle_curve, min_enclosing_circle, numerical_range_curve, Circle};
use kspectral::spectralset::{delta_gamma_hat, lambda_min_profile};
use kspectral::Result;
use num_complex::Complex64;

fn main() -> Result<()> {
    let a = perturbed_jordan(3, 0.1);
    let samples = numerical_range_curve(&a, 256)?;
    let mec = min_enclosing_circle(samples.single_component()?.nodes())?;
    let disk = Circle::new(mec.center, 1.05 * mec.radius)?;
    let curve = circle_curve(disk, 1024)?;
    println!(
        "disk |z - ({:.4} + {:.4}i)| = {:.4} around W(A)",
        disk.center.re, disk.center.im, disk.radius
    );

    let psi = rescale_to_unit_disk(&a, disk);
    let best = maximize_norm(&psi, 2, 30, 7)?;
    let f = BoundaryFunction::blaschke_on_disk(&curve, disk, &best.product)?.normalized()?;

    // Unimodular boundary data: the Cauchy transform cannot grow it.
    let g = g_boundary_values(&f)?;
    println!(
        "sup|f| = {:.12},  sup|g| = {:.12}",
        f.sup_norm(),
        g.sup_norm()
    );
    assert!(g.sup_norm() <= f.sup_norm() + 1e-8);
    println!(
        "boundary values of g inside conv(f values): {}",
        hull_check(&f, &g)
    );

    let profile = lambda_min_profile(&curve, &a)?;
    let (delta, _) = delta_gamma_hat(&profile);
    let assembled = assemble_s(&f, &a, &profile)?;
    println!("\n||f(A)||       = {:.6}", assembled.norm_fa);
    println!("||S||          = {:.6}", assembled.norm_s);
    println!("2 + delta      = {:.6}", 2.0 + delta);
    assert!(assembled.norm_s <= 2.0 + delta + 1e-6);

    // On a disk g(A) collapses to the scalar conj(f(center)) I. A Blaschke
    // product with interior roots is already unimodular on the boundary,
    // so normalized() changed nothing and f(center) = B(0).
    let center_value = eval_scalar(&best.product, Complex64::new(0.0, 0.0))?;
    let shortcut = ComplexMatrix::identity(a.dim()).scale(center_value.conj());
    println!(
        "||g(A) - conj(f(center)) I||_F = {:.2e}",
        (&assembled.ga - &shortcut).frobenius_norm()
    );

    let fit = fit_affine_inverse(&assembled.fa, &assembled.ga)?;
    println!(
        "\ng(A) ~ c0 I + c1 (f(A)*)^-1: residual {:.2e}, condition holds: {}",
        fit.residual, fit.condition_holds
    );

    let probe = conjecture_probe(&f, &a, &profile)?;
    println!("||f(A)||            = {:.6}", probe.norm_fa);
    println!("||f(A) + g(A)*||    = {:.6}", probe.norm_fa_plus_ga_star);
    if let Some(res) = probe.singular_identity_residual {
        println!("u1* S v1 identity residual = {res:.2e}");
    }
    Ok(())
}
