//! The numerical range boundary is the zero set of the profile: λ_min
//! vanishes on ∂W(A), is positive on curves outside, and negative inside.
//! This example traces ∂W(A) for a perturbed Jordan matrix and watches
//! the sign flip as the curve is scaled across it.

use kspectral::matkernel::{perturbed_jordan, spectrum};
use kspectral::regions::{
    min_enclosing_circle, numerical_range_curve, scale_inward_curve, validate_encloses,
};
use kspectral::spectralset::{delta_gamma_hat, lambda_min_profile};
use kspectral::Result;

fn main() -> Result<()> {
    let a = perturbed_jordan(3, 0.1);
    let eigs = spectrum(&a)?;
    println!("eigenvalues (cube roots of 0.1):");
    for l in &eigs {
        println!("  {:+.6} {:+.6}i   |lambda| = {:.6}", l.re, l.im, l.norm());
    }

    let boundary = numerical_range_curve(&a, 512)?;
    let component = boundary.single_component()?;
    println!(
        "\nboundary of W(A): {} nodes, length {:.6}, convex: {}",
        boundary.node_count(),
        boundary.total_length(),
        component.is_convex()
    );
    assert!(validate_encloses(&boundary, &eigs));

    let on = lambda_min_profile(&boundary, &a)?;
    let worst = on.values().iter().fold(0.0f64, |m, v| m.max(v.abs()));
    println!("max |lambda_min| on the boundary itself: {worst:.2e}");

    // Shrink toward the centroid: now strictly inside, profile negative.
    let inner = scale_inward_curve(&boundary, 0.08, component.centroid())?;
    let (delta_in, _) = delta_gamma_hat(&lambda_min_profile(&inner, &a)?);

    // A comfortably larger circle: strictly outside, profile positive.
    let mec = min_enclosing_circle(component.nodes())?;
    let outer = kspectral::regions::circle_curve(
        kspectral::regions::Circle::new(mec.center, 1.3 * mec.radius)?,
        512,
    )?;
    let (delta_out, _) = delta_gamma_hat(&lambda_min_profile(&outer, &a)?);

    println!("delta on a curve 8% inside ∂W(A):  {delta_in:+.4} (positive)");
    println!("delta on a circle 30% outside:     {delta_out:+.4} (negative)");
    Ok(())
}
