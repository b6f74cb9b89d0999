//! Region descriptions and the CLI mini-language.
//!
//! A [`Region`] is a recipe that can be discretized at any node count, which
//! is what the adaptive bound pipeline needs to refine quadrature until the
//! integrals stop moving.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matkernel::{spectrum, ComplexMatrix};
use crate::regions::{
    circle_curve, min_enclosing_circle, numerical_range_curve, scale_inward_curve,
    union_of_circles, BoundaryCurve, Circle,
};

/// A discretizable region boundary.
///
/// Mini-language accepted by [`Region::parse`]:
/// `circle:cx,cy,R` | `circles:cx1,cy1,R1;cx2,cy2,R2;...` | `nr` |
/// `nr-scaled:eps` | `mec-scaled:factor`.
#[derive(Clone, Debug, PartialEq)]
pub enum Region {
    /// A single circle.
    Circle(Circle),
    /// A union of pairwise disjoint circles.
    Circles(Vec<Circle>),
    /// The numerical range boundary of the matrix.
    NumericalRange,
    /// The numerical range boundary scaled inward by `eps` toward its
    /// centroid.
    NrScaled { eps: f64 },
    /// The minimal enclosing circle of the spectrum with its radius
    /// multiplied by `factor`.
    MecScaled { factor: f64 },
}

impl Region {
    /// Parses the region mini-language.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec == "nr" {
            return Ok(Region::NumericalRange);
        }
        if let Some(rest) = spec.strip_prefix("circle:") {
            return Ok(Region::Circle(parse_circle(rest)?));
        }
        if let Some(rest) = spec.strip_prefix("circles:") {
            let circles = rest
                .split(';')
                .map(parse_circle)
                .collect::<Result<Vec<_>>>()?;
            if circles.is_empty() {
                return Err(Error::Input(
                    "circles spec needs at least one circle".into(),
                ));
            }
            return Ok(Region::Circles(circles));
        }
        if let Some(rest) = spec.strip_prefix("nr-scaled:") {
            let eps = parse_real(rest, "nr-scaled epsilon")?;
            if !(eps > 0.0 && eps < 1.0) {
                return Err(Error::Input(format!(
                    "nr-scaled epsilon must lie in (0,1), got {eps}"
                )));
            }
            return Ok(Region::NrScaled { eps });
        }
        if let Some(rest) = spec.strip_prefix("mec-scaled:") {
            let factor = parse_real(rest, "mec-scaled factor")?;
            if !factor.is_finite() || factor <= 0.0 {
                return Err(Error::Input(format!(
                    "mec-scaled factor must be positive, got {factor}"
                )));
            }
            return Ok(Region::MecScaled { factor });
        }
        Err(Error::Input(format!(
            "unrecognized region spec {spec:?}; expected circle:cx,cy,R | circles:... | nr | nr-scaled:eps | mec-scaled:factor"
        )))
    }

    /// Discretizes the region boundary for the given matrix at the given
    /// node count (per component for circle unions).
    pub fn discretize(&self, a: &ComplexMatrix, nodes: usize) -> Result<BoundaryCurve> {
        match self {
            Region::Circle(c) => circle_curve(*c, nodes),
            Region::Circles(cs) => union_of_circles(cs, nodes),
            Region::NumericalRange => numerical_range_curve(a, nodes),
            Region::NrScaled { eps } => {
                let curve = numerical_range_curve(a, nodes)?;
                let center = curve.components()[0].centroid();
                scale_inward_curve(&curve, *eps, center)
            }
            Region::MecScaled { factor } => {
                let mec = min_enclosing_circle(&spectrum(a)?)?;
                let circle = Circle::new(mec.center, mec.radius * factor).map_err(|_| {
                    Error::Input(format!(
                        "mec-scaled region degenerates: base radius {} times factor {factor} is not positive",
                        mec.radius
                    ))
                })?;
                circle_curve(circle, nodes)
            }
        }
    }
}

fn parse_circle(s: &str) -> Result<Circle> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Input(format!(
            "circle spec must be cx,cy,R; got {s:?}"
        )));
    }
    let cx = parse_real(parts[0], "circle center x")?;
    let cy = parse_real(parts[1], "circle center y")?;
    let r = parse_real(parts[2], "circle radius")?;
    Circle::new(Complex64::new(cx, cy), r)
}

fn parse_real(s: &str, what: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| Error::Input(format!("could not parse {what} from {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matkernel::perturbed_jordan;
    use crate::regions::validate_encloses;

    #[test]
    fn parses_each_form() {
        assert_eq!(
            Region::parse("circle:0,0,0.5").unwrap(),
            Region::Circle(Circle {
                center: Complex64::new(0.0, 0.0),
                radius: 0.5
            })
        );
        assert_eq!(Region::parse("nr").unwrap(), Region::NumericalRange);
        assert_eq!(
            Region::parse("nr-scaled:0.05").unwrap(),
            Region::NrScaled { eps: 0.05 }
        );
        assert_eq!(
            Region::parse("mec-scaled:1.2").unwrap(),
            Region::MecScaled { factor: 1.2 }
        );
        match Region::parse("circles:0,0,0.1;1,1,0.2").unwrap() {
            Region::Circles(cs) => assert_eq!(cs.len(), 2),
            other => panic!("unexpected parse: {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_specs() {
        assert!(Region::parse("disc:0,0,1").is_err());
        assert!(Region::parse("circle:0,0").is_err());
        assert!(Region::parse("circle:0,0,-1").is_err());
        assert!(Region::parse("nr-scaled:1.5").is_err());
        assert!(Region::parse("mec-scaled:0").is_err());
    }

    #[test]
    fn discretizes_consistently_with_constructors() {
        let a = perturbed_jordan(3, 0.1);
        let eigs = crate::matkernel::spectrum(&a).unwrap();

        let curve = Region::parse("circle:0,0,0.6")
            .unwrap()
            .discretize(&a, 128)
            .unwrap();
        assert!(validate_encloses(&curve, &eigs));

        let curve = Region::parse("mec-scaled:1.2")
            .unwrap()
            .discretize(&a, 128)
            .unwrap();
        assert!(validate_encloses(&curve, &eigs));
        let expected_r = 0.1f64.powf(1.0 / 3.0) * 1.2;
        let comp = &curve.components()[0];
        let detected = comp.as_circle(1e-9).unwrap();
        assert!((detected.radius - expected_r).abs() <= 1e-9);

        let curve = Region::parse("nr").unwrap().discretize(&a, 128).unwrap();
        assert!(validate_encloses(&curve, &eigs));

        let scaled = Region::parse("nr-scaled:0.05")
            .unwrap()
            .discretize(&a, 128)
            .unwrap();
        assert!(scaled.total_length() < curve.total_length());
    }
}
