//! Minimal enclosing circle of a finite point set.
//!
//! Incremental Welzl construction with a seeded shuffle: expected linear
//! time, exact support circles through at most three points, deterministic
//! output for a fixed input.

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::regions::{cross, Circle};

/// Containment slack relative to the circle radius; covers roundoff in the
/// incremental containment tests.
const MEC_EPS: f64 = 1e-12;

/// Fixed shuffle seed: the shuffle only balances the incremental insertion
/// order, so any constant keeps the output deterministic.
const SHUFFLE_SEED: u64 = 0x6d65635f;

/// Smallest circle containing all points. Radius may be 0 (single point or
/// all points coincident).
///
/// # Errors
/// [`Error::Input`] for an empty list or nonfinite coordinates.
pub fn min_enclosing_circle(points: &[Complex64]) -> Result<Circle> {
    if points.is_empty() {
        return Err(Error::Input(
            "minimal enclosing circle needs at least one point".into(),
        ));
    }
    if points
        .iter()
        .any(|p| !p.re.is_finite() || !p.im.is_finite())
    {
        return Err(Error::Input("points must be finite".into()));
    }
    let mut pts = points.to_vec();
    pts.shuffle(&mut ChaCha8Rng::seed_from_u64(SHUFFLE_SEED));

    let mut circle = Circle {
        center: pts[0],
        radius: 0.0,
    };
    for i in 1..pts.len() {
        if !contains(&circle, pts[i]) {
            circle = circle_with_boundary_point(&pts[..=i], pts[i]);
        }
    }
    Ok(circle)
}

/// Smallest circle over `pts` with `p` known to lie on its boundary.
fn circle_with_boundary_point(pts: &[Complex64], p: Complex64) -> Circle {
    let mut circle = Circle {
        center: p,
        radius: 0.0,
    };
    for (j, &q) in pts.iter().enumerate() {
        if !contains(&circle, q) {
            circle = if circle.radius == 0.0 {
                diameter_circle(p, q)
            } else {
                circle_with_two_boundary_points(&pts[..=j], p, q)
            };
        }
    }
    circle
}

/// Smallest circle over `pts` with `p` and `q` both on its boundary.
fn circle_with_two_boundary_points(pts: &[Complex64], p: Complex64, q: Complex64) -> Circle {
    let chord = diameter_circle(p, q);
    let mut left: Option<Circle> = None;
    let mut right: Option<Circle> = None;
    // Track the tightest circumcircle on each side of the chord pq.
    for &r in pts {
        if contains(&chord, r) {
            continue;
        }
        let side = cross(q - p, r - p);
        let Some(cc) = circumcircle(p, q, r) else {
            continue;
        };
        if side > 0.0 {
            if left.is_none()
                || cross(q - p, cc.center - p) > cross(q - p, left.unwrap().center - p)
            {
                left = Some(cc);
            }
        } else if side < 0.0
            && (right.is_none()
                || cross(q - p, cc.center - p) < cross(q - p, right.unwrap().center - p))
        {
            right = Some(cc);
        }
    }
    match (left, right) {
        (None, None) => chord,
        (Some(l), None) => l,
        (None, Some(r)) => r,
        (Some(l), Some(r)) => {
            if l.radius <= r.radius {
                l
            } else {
                r
            }
        }
    }
}

fn contains(c: &Circle, p: Complex64) -> bool {
    (p - c.center).norm() <= c.radius * (1.0 + MEC_EPS) + MEC_EPS
}

fn diameter_circle(p: Complex64, q: Complex64) -> Circle {
    let center = 0.5 * (p + q);
    Circle {
        center,
        radius: (p - center).norm().max((q - center).norm()),
    }
}

/// Circumcircle through three points; `None` for (near-)collinear triples.
fn circumcircle(a: Complex64, b: Complex64, c: Complex64) -> Option<Circle> {
    // Shift to the bounding-box midpoint for numerical stability.
    let ox = (a.re.min(b.re).min(c.re) + a.re.max(b.re).max(c.re)) / 2.0;
    let oy = (a.im.min(b.im).min(c.im) + a.im.max(b.im).max(c.im)) / 2.0;
    let (ax, ay) = (a.re - ox, a.im - oy);
    let (bx, by) = (b.re - ox, b.im - oy);
    let (cx, cy) = (c.re - ox, c.im - oy);
    let d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    if d == 0.0 {
        return None;
    }
    let x = ((ax * ax + ay * ay) * (by - cy)
        + (bx * bx + by * by) * (cy - ay)
        + (cx * cx + cy * cy) * (ay - by))
        / d;
    let y = ((ax * ax + ay * ay) * (cx - bx)
        + (bx * bx + by * by) * (ax - cx)
        + (cx * cx + cy * cy) * (bx - ax))
        / d;
    let center = Complex64::new(ox + x, oy + y);
    let radius = (a - center)
        .norm()
        .max((b - center).norm())
        .max((c - center).norm());
    Some(Circle { center, radius })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn single_point_gives_radius_zero() {
        let mec = min_enclosing_circle(&[c(2.0, -1.0)]).unwrap();
        assert_eq!(mec.center, c(2.0, -1.0));
        assert_eq!(mec.radius, 0.0);
    }

    #[test]
    fn two_points_give_diameter_circle() {
        let mec = min_enclosing_circle(&[c(-1.0, 0.0), c(3.0, 0.0)]).unwrap();
        assert!((mec.center - c(1.0, 0.0)).norm() <= 1e-14);
        assert!((mec.radius - 2.0).abs() <= 1e-14);
    }

    #[test]
    fn cube_roots_give_their_circumcircle() {
        let r = 0.1f64.powf(1.0 / 3.0);
        let pts: Vec<Complex64> = (0..3)
            .map(|k| Complex64::from_polar(r, 2.0 * std::f64::consts::PI * k as f64 / 3.0))
            .collect();
        let mec = min_enclosing_circle(&pts).unwrap();
        assert!(mec.center.norm() <= 1e-12);
        assert!((mec.radius - r).abs() <= 1e-12);
    }

    #[test]
    fn obtuse_triangle_uses_longest_side() {
        // For an obtuse triangle the minimal circle is the diameter circle of
        // the longest side, not the circumcircle.
        let mec = min_enclosing_circle(&[c(0.0, 0.0), c(4.0, 0.0), c(2.0, 0.1)]).unwrap();
        assert!((mec.center - c(2.0, 0.0)).norm() <= 1e-12);
        assert!((mec.radius - 2.0).abs() <= 1e-12);
    }

    #[test]
    fn empty_input_is_rejected() {
        assert!(min_enclosing_circle(&[]).is_err());
    }

    proptest! {
        #[test]
        fn contains_all_points_and_is_supported(pts in proptest::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 1..40)) {
            let points: Vec<Complex64> = pts.iter().map(|(x, y)| c(*x, *y)).collect();
            let mec = min_enclosing_circle(&points).unwrap();
            // Every point inside (with slack)...
            for p in &points {
                prop_assert!((p - mec.center).norm() <= mec.radius * (1.0 + 1e-9) + 1e-9);
            }
            // ...and the circle is tight: some point near the boundary.
            let max_dist = points.iter().map(|p| (p - mec.center).norm()).fold(0.0f64, f64::max);
            prop_assert!(mec.radius <= max_dist + 1e-9);
        }
    }
}
