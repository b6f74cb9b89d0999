//! Error vocabulary shared by every module.

/// Crate-wide error type.
///
/// Variants map one-to-one onto the failure classes of the public API:
/// bad arguments, solver breakdowns, (near-)singular linear systems,
/// region shapes a given algorithm refuses, and curves that fail to
/// enclose the spectrum.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A precondition on the arguments was violated.
    #[error("invalid input: {0}")]
    Input(String),

    /// An iterative kernel (eigensolver, SVD, quadrature refinement) failed
    /// to produce a usable result.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// A linear system was singular to working precision, e.g. a resolvent
    /// requested at (numerically) an eigenvalue.
    #[error("singular operator: {0}")]
    Singularity(String),

    /// The region is structurally unsupported by the requested operation
    /// (normal matrix for a numerical-range boundary, non-convex or
    /// multi-component curve for the Cauchy-transform path).
    #[error("unsupported region: {0}")]
    UnsupportedRegion(String),

    /// The curve does not enclose the spectrum of the matrix.
    #[error("region does not enclose the spectrum: {0}")]
    Region(String),
}

pub type Result<T> = std::result::Result<T, Error>;
