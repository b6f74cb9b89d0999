//! λ_min profiles on a sweep of concentric circles. Growing the circle
//! raises the profile pointwise (the resolvent decays), so δ decreases
//! monotonically through the sweep and changes sign where the circles
//! cross the numerical range boundary.

use kspectral::matkernel::{random_upper_triangular, spectrum};
use kspectral::regions::{circle_curve, min_enclosing_circle, Circle};
use kspectral::spectralset::{delta_gamma_hat, lambda_min_profile};
use kspectral::Result;

fn main() -> Result<()> {
    let a = random_upper_triangular(8, 3);
    let mec = min_enclosing_circle(&spectrum(&a)?)?;

    println!(" radius    min lambda    max lambda        delta");
    let mut last_delta = f64::INFINITY;
    for i in 0..8 {
        let radius = 1.1 * mec.radius * 1.25f64.powi(i);
        let curve = circle_curve(Circle::new(mec.center, radius)?, 512)?;
        let profile = lambda_min_profile(&curve, &a)?;
        let (lo, hi) = profile
            .values()
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                (lo.min(v), hi.max(v))
            });
        let (delta, _) = delta_gamma_hat(&profile);
        println!("{radius:>7.3}  {lo:>12.5}  {hi:>12.5}  {delta:>11.4}");
        assert!(delta < last_delta, "delta must fall as the circle grows");
        last_delta = delta;
    }

    println!("\nOnce the whole profile is positive the circle encloses W(A)");
    println!("and max(1, 2 + delta) is a K constant for the disk, at most 2.");
    Ok(())
}
