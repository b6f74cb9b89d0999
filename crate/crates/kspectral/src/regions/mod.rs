//! Boundary curves: circles, unions of circles, the numerical-range boundary
//! and inward-scaled copies.
//!
//! Every curve carries arclength quadrature data: nodes `σ(s_k)`, unit
//! tangents `σ′(s_k)`, positive weights summing to the component length, and
//! the total length `L`. Quadrature is periodic composite trapezoid, which is
//! spectrally accurate for the smooth closed components constructed here.

mod mec;
mod numrange;
mod region;
mod trig;

pub use mec::min_enclosing_circle;
pub use numrange::numerical_range_curve;
pub use region::Region;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matkernel::RESOLVENT_GUARD;

/// Tolerance for the unit-tangent and weight-sum invariants of a component.
pub const CURVE_TOL: f64 = 1e-10;

/// A circle in the complex plane. `radius` is strictly positive for curve
/// construction; [`min_enclosing_circle`] may return radius 0 for degenerate
/// point sets (single point).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Circle {
    pub center: Complex64,
    pub radius: f64,
}

impl Circle {
    /// Checked constructor: finite center, strictly positive radius.
    pub fn new(center: Complex64, radius: f64) -> Result<Self> {
        if !center.re.is_finite() || !center.im.is_finite() || !radius.is_finite() {
            return Err(Error::Input("circle parameters must be finite".into()));
        }
        if radius <= 0.0 {
            return Err(Error::Input(format!(
                "circle radius must be positive, got {radius}"
            )));
        }
        Ok(Self { center, radius })
    }
}

/// One smooth closed boundary component, positively oriented
/// (counterclockwise), parameterized by arclength.
#[derive(Clone, Debug)]
pub struct ClosedComponent {
    nodes: Vec<Complex64>,
    tangents: Vec<Complex64>,
    weights: Vec<f64>,
    length: f64,
}

impl ClosedComponent {
    /// Validates the component invariants: matching lengths, unit tangents,
    /// positive weights summing to the length, counterclockwise orientation.
    pub(crate) fn new(
        nodes: Vec<Complex64>,
        tangents: Vec<Complex64>,
        weights: Vec<f64>,
        length: f64,
    ) -> Result<Self> {
        let n = nodes.len();
        if n < 3 {
            return Err(Error::Input(format!(
                "component needs at least 3 nodes, got {n}"
            )));
        }
        if tangents.len() != n || weights.len() != n {
            return Err(Error::Input(
                "nodes, tangents and weights must have equal length".into(),
            ));
        }
        if !(length.is_finite() && length > 0.0) {
            return Err(Error::Input(format!(
                "component length must be positive, got {length}"
            )));
        }
        for t in &tangents {
            if (t.norm() - 1.0).abs() > CURVE_TOL {
                return Err(Error::Input(format!(
                    "tangent modulus {} deviates from 1 beyond {CURVE_TOL:.0e}",
                    t.norm()
                )));
            }
        }
        let sum: f64 = weights.iter().sum();
        if weights.iter().any(|w| !(w.is_finite() && *w > 0.0))
            || (sum - length).abs() > CURVE_TOL * length
        {
            return Err(Error::Input(
                "quadrature weights must be positive and sum to the component length".into(),
            ));
        }
        let comp = Self {
            nodes,
            tangents,
            weights,
            length,
        };
        if comp.signed_area() <= 0.0 {
            return Err(Error::Input(
                "component must be positively oriented (counterclockwise)".into(),
            ));
        }
        Ok(comp)
    }

    pub fn nodes(&self) -> &[Complex64] {
        &self.nodes
    }

    pub fn tangents(&self) -> &[Complex64] {
        &self.tangents
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Shoelace area of the node polygon (positive for counterclockwise).
    pub fn signed_area(&self) -> f64 {
        let n = self.nodes.len();
        let mut acc = 0.0;
        for k in 0..n {
            let p = self.nodes[k];
            let q = self.nodes[(k + 1) % n];
            acc += cross(p, q);
        }
        0.5 * acc
    }

    /// Largest coordinate extent of the nodes, a cheap diameter proxy.
    pub fn diameter(&self) -> f64 {
        let (mut re_lo, mut re_hi) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut im_lo, mut im_hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for z in &self.nodes {
            re_lo = re_lo.min(z.re);
            re_hi = re_hi.max(z.re);
            im_lo = im_lo.min(z.im);
            im_hi = im_hi.max(z.im);
        }
        (re_hi - re_lo).hypot(im_hi - im_lo)
    }

    /// Arclength-weighted centroid of the boundary nodes. For a convex curve
    /// this is an interior point the curve is star-shaped about.
    pub fn centroid(&self) -> Complex64 {
        let total: f64 = self.weights.iter().sum();
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(z, w)| z * *w)
            .sum::<Complex64>()
            / total
    }

    /// Whether consecutive edge cross products all have one sign within
    /// `1e-10 * diameter` (discrete convexity).
    pub fn is_convex(&self) -> bool {
        let n = self.nodes.len();
        let tol = 1e-10 * self.diameter();
        for k in 0..n {
            let e1 = self.nodes[(k + 1) % n] - self.nodes[k];
            let e2 = self.nodes[(k + 2) % n] - self.nodes[(k + 1) % n];
            // Positively oriented convex polygons turn left at every vertex.
            if cross(e1, e2) < -tol {
                return false;
            }
        }
        true
    }

    /// Detects whether the nodes lie on a common circle (relative tolerance
    /// on the radius spread). Disk-specific shortcuts key off this.
    pub fn as_circle(&self, rel_tol: f64) -> Option<Circle> {
        let c = self.centroid();
        let mut lo = f64::INFINITY;
        let mut hi = 0.0f64;
        for z in &self.nodes {
            let r = (z - c).norm();
            lo = lo.min(r);
            hi = hi.max(r);
        }
        if hi > 0.0 && (hi - lo) <= rel_tol * hi {
            Some(Circle {
                center: c,
                radius: 0.5 * (hi + lo),
            })
        } else {
            None
        }
    }
}

/// One or more disjoint smooth closed components with their total length.
#[derive(Clone, Debug)]
pub struct BoundaryCurve {
    components: Vec<ClosedComponent>,
    total_length: f64,
}

impl BoundaryCurve {
    pub(crate) fn from_components(components: Vec<ClosedComponent>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Input("curve needs at least one component".into()));
        }
        let total_length = components.iter().map(|c| c.length()).sum();
        Ok(Self {
            components,
            total_length,
        })
    }

    pub fn components(&self) -> &[ClosedComponent] {
        &self.components
    }

    pub fn total_length(&self) -> f64 {
        self.total_length
    }

    /// Total node count over all components.
    pub fn node_count(&self) -> usize {
        self.components.iter().map(|c| c.node_count()).sum()
    }

    /// Flattened `(node, tangent, weight)` quadrature triples in component
    /// order, the deterministic ordering every integral in the crate uses.
    pub fn quad_points(&self) -> impl Iterator<Item = (Complex64, Complex64, f64)> + '_ {
        self.components.iter().flat_map(|c| {
            c.nodes
                .iter()
                .zip(&c.tangents)
                .zip(&c.weights)
                .map(|((z, t), w)| (*z, *t, *w))
        })
    }

    /// The single component of a one-component curve.
    pub fn single_component(&self) -> Result<&ClosedComponent> {
        if self.components.len() == 1 {
            Ok(&self.components[0])
        } else {
            Err(Error::UnsupportedRegion(format!(
                "operation requires a single-component curve, got {} components",
                self.components.len()
            )))
        }
    }
}

/// Cross product of planar vectors represented as complex numbers.
pub(crate) fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

/// Uniform discretization of a circle: nodes `c + R·e^{2πik/N}`, tangents
/// `i·e^{2πik/N}`, weights `2πR/N`, length `2πR` (all exact formulas).
///
/// # Errors
/// [`Error::Input`] for fewer than 8 nodes or a nonpositive radius.
pub fn circle_curve(circle: Circle, nodes_per_component: usize) -> Result<BoundaryCurve> {
    if nodes_per_component < 8 {
        return Err(Error::Input(format!(
            "circle discretization needs at least 8 nodes, got {nodes_per_component}"
        )));
    }
    circle_curve_any_n(circle, nodes_per_component)
}

/// Circle discretization without the node floor; exists so tests can probe
/// tiny node counts the public API refuses.
fn circle_curve_any_n(circle: Circle, n: usize) -> Result<BoundaryCurve> {
    Circle::new(circle.center, circle.radius)?;
    let length = 2.0 * std::f64::consts::PI * circle.radius;
    let w = length / n as f64;
    let mut nodes = Vec::with_capacity(n);
    let mut tangents = Vec::with_capacity(n);
    for k in 0..n {
        let dir = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64);
        nodes.push(circle.center + circle.radius * dir);
        // Exactly i·(σ_k − c)/R by construction.
        tangents.push(Complex64::new(0.0, 1.0) * dir);
    }
    let comp = ClosedComponent::new(nodes, tangents, vec![w; n], length)?;
    BoundaryCurve::from_components(vec![comp])
}

/// One circle component per input circle. The circles must be pairwise
/// disjoint as closed disks.
///
/// # Errors
/// [`Error::Input`] for an empty list, overlapping (or touching) disks, or a
/// node count below 8.
pub fn union_of_circles(circles: &[Circle], nodes_per_component: usize) -> Result<BoundaryCurve> {
    if circles.is_empty() {
        return Err(Error::Input("need at least one circle".into()));
    }
    for (i, a) in circles.iter().enumerate() {
        for (j, b) in circles.iter().enumerate().skip(i + 1) {
            if (a.center - b.center).norm() <= a.radius + b.radius {
                return Err(Error::Input(format!(
                    "circles {i} and {j} overlap as closed disks"
                )));
            }
        }
    }
    let mut components = Vec::with_capacity(circles.len());
    for c in circles {
        components.extend(circle_curve(*c, nodes_per_component)?.components);
    }
    BoundaryCurve::from_components(components)
}

/// Radial inward scaling about `center`: node `σ_k` maps to
/// `center + (1−ε)(σ_k − center)`.
///
/// The scaled curve's arclength satisfies `s̃ = (1−ε)s`, under which its unit
/// tangent at the image node equals the original tangent exactly, so tangents
/// are copied and weights scale by `(1−ε)`. Node `k` of the output pairs with
/// node `k` of the input; callers align `σ̃(s̃)` with `σ(s)` by index.
///
/// # Errors
/// [`Error::Input`] if `epsilon` is outside `(0,1)`, the curve has more than
/// one component, or the curve is not star-shaped about `center`.
pub fn scale_inward_curve(
    curve: &BoundaryCurve,
    epsilon: f64,
    center: Complex64,
) -> Result<BoundaryCurve> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::Input(format!(
            "epsilon must lie in (0,1), got {epsilon}"
        )));
    }
    let comp = curve
        .single_component()
        .map_err(|_| Error::Input("inward scaling requires a single-component curve".into()))?;
    let n = comp.nodes.len();
    for k in 0..n {
        let a = comp.nodes[k] - center;
        let b = comp.nodes[(k + 1) % n] - center;
        if cross(a, b) <= 0.0 {
            return Err(Error::Input(
                "curve is not star-shaped about the given center".into(),
            ));
        }
    }
    let factor = 1.0 - epsilon;
    let nodes = comp
        .nodes
        .iter()
        .map(|z| center + factor * (z - center))
        .collect();
    let comp = ClosedComponent::new(
        nodes,
        comp.tangents.clone(),
        comp.weights.iter().map(|w| factor * w).collect(),
        factor * comp.length,
    )?;
    BoundaryCurve::from_components(vec![comp])
}

/// True iff every point has total winding number 1 over all components and
/// keeps a distance of at least the resolvent guard from every node.
///
/// The guard is [`RESOLVENT_GUARD`] relative to the larger of the point and
/// node scales, matching the resolvent's own singularity threshold: a point
/// that passes here is safe to form resolvents at every node.
pub fn validate_encloses(curve: &BoundaryCurve, points: &[Complex64]) -> bool {
    let node_scale = curve
        .quad_points()
        .map(|(z, _, _)| z.norm())
        .fold(0.0f64, f64::max);
    for p in points {
        let guard = RESOLVENT_GUARD * node_scale.max(p.norm()).max(1e-300);
        let mut winding = 0.0;
        for comp in &curve.components {
            let n = comp.nodes.len();
            for k in 0..n {
                let a = comp.nodes[k] - p;
                let b = comp.nodes[(k + 1) % n] - p;
                if a.norm() <= guard || b.norm() <= guard {
                    return false;
                }
                winding += (b / a).arg();
            }
        }
        let turns = winding / (2.0 * std::f64::consts::PI);
        if (turns - 1.0).abs() > 1e-6 {
            return false;
        }
    }
    true
}
