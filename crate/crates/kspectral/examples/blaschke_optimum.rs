//! Maximize ‖B(Ψ)‖ over Blaschke products with roots in the open unit
//! disk. At any local maximum with norm above 1 the top right singular
//! vector v₁ of B(Ψ) must satisfy ⟨B(Ψ)v₁, v₁⟩ = 0; the example runs the
//! search on a matrix with interior spectrum and verifies both that
//! orthogonality and first-order stationarity hold at the reported
//! optimum, then compares the attained norm against the 2 + δ ceiling.

use kspectral::blaschke::{maximize_norm, rescale_to_unit_disk, thm2_checks};
use kspectral::matkernel::{random_upper_triangular, spectrum};
use kspectral::regions::{min_enclosing_circle, Circle};
use kspectral::spectralset::unit_disk_delta;
use kspectral::Result;

fn main() -> Result<()> {
    let a = random_upper_triangular(5, 29);
    let mec = min_enclosing_circle(&spectrum(&a)?)?;
    // A disk just beyond the spectral spread: the rescaled matrix keeps
    // its spectrum interior but stays expansive, so the search has a
    // genuine maximum above 1 to find.
    let disk = Circle::new(mec.center, 1.2 * mec.radius.max(0.1))?;
    let psi = rescale_to_unit_disk(&a, disk);

    let best = maximize_norm(&psi, psi.dim() - 1, 40, 2024)?;
    println!(
        "best product: degree {}, phase {:.3}",
        best.product.degree(),
        best.product.phase()
    );
    for root in best.product.roots() {
        println!(
            "  root {:+.6} {:+.6}i  (|root| = {:.6})",
            root.re,
            root.im,
            root.norm()
        );
    }
    println!("attained norm          {:.9}", best.norm);
    println!("orthogonality residual {:.3e}", best.orthogonality_residual);
    println!("restarts disagreed:    {}", best.restarts_disagree);

    let checks = thm2_checks(&psi, &best)?;
    println!(
        "optimality checks: applicable {}, orthogonality {:?}, stationarity {:?}",
        checks.applicable, checks.orthogonality_ok, checks.stationarity_ok
    );

    let report = unit_disk_delta(&psi)?;
    println!(
        "\nlower bound from the optimum {:.6} <= max(1, 2 + delta) = {:.6}",
        best.norm,
        report.k_disk()
    );
    assert!(best.norm <= report.k_disk() + 1e-6);
    Ok(())
}
