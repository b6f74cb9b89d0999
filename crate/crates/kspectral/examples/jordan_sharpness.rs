//! The nilpotent 3×3 Jordan block on disks about the origin is the one
//! family where everything is known in closed form: on the circle of
//! radius r ≤ 1 the boundary profile is the constant (2r² − 1)/(2πr³),
//! δ = −(2 − 1/r²), and the bound 2 + δ = 1/r² is attained by the
//! Blaschke product B(z) = z². This example sweeps the radius and shows
//! the quadrature pipeline and the optimizer landing on those values.

use kspectral::jordanoracle::{closed_forms, oracle_compare};
use kspectral::matkernel::jordan_block;
use kspectral::Result;
use num_complex::Complex64;

fn main() -> Result<()> {
    println!("radius      lambda_min        delta      2+delta   pipeline dev");
    for &r in &[0.55, 0.6, std::f64::consts::FRAC_1_SQRT_2, 0.8, 0.9, 1.0] {
        let case = closed_forms(r)?;
        let dev = oracle_compare(r, 512)?;
        let worst = dev.profile_dev.max(dev.delta_dev).max(dev.norm_dev);
        println!(
            "{r:>6.4}  {:>13.8}  {:>11.6}  {:>11.6}    {worst:.3e}",
            case.lambda_min, case.delta, case.two_plus_delta
        );
    }

    // At r = 1/√2 the profile vanishes identically and δ = 0: the circle
    // where the disk stops being a spectral set (K = 1) and the constant
    // 2 + δ starts doing work.
    let critical = closed_forms(std::f64::consts::FRAC_1_SQRT_2)?;
    println!(
        "\ncritical radius 1/sqrt(2): delta = {:.2e}",
        critical.delta
    );

    // The optimizer recovers B(z) = z^2 from random starting roots.
    let r = 0.8;
    let psi = jordan_block(3).scale(Complex64::new(1.0 / r, 0.0));
    let best = kspectral::blaschke::maximize_norm(&psi, 2, 24, 42)?;
    println!(
        "optimizer at r = {r}: norm {:.9} (closed form {:.9}), roots {:?}",
        best.norm,
        closed_forms(r)?.optimal_norm,
        best.product.roots()
    );
    Ok(())
}
