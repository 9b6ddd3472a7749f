//! The error type shared by every module.

use core::fmt;

/// Errors reported by the toolkit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// The zero polynomial was passed where a nonzero one is required.
    ZeroPolynomial,
    /// A Routh-array pivot fell below tolerance, so the array verdict is
    /// unreliable; callers fall back to exact root counting.
    MarginalCase,
    /// A root lies inside the boundary band of the region, making its
    /// classification ambiguous.
    MarginalRoot,
    /// A rational function was given an identically zero denominator.
    ZeroDenominator,
    /// A state-space realization was requested for a non-proper function.
    NotProper,
    /// Vector or matrix dimensions do not agree.
    DimensionMismatch,
    /// The loop gain satisfies cp = 1 identically, so the closed loop
    /// is undefined.
    DegenerateLoop,
    /// Two functions required to be distinct are identical.
    IdenticalFunctions,
    /// The cross-ratio relation degenerates for these arguments.
    DegenerateCrossRatio,
    /// A constant function was passed where a nonconstant one is required.
    ConstantFunction,
    /// A preimage of {0, 1, infinity} lies within tolerance of the unit
    /// circle, so the clustering radius is ill-defined.
    PreimageOnBoundary,
    /// A parameter that must be strictly positive was not.
    NonPositiveParameter,
    /// A parameter that must lie in the open unit disc did not.
    OutOfDisc,
    /// The avoided functions share a common pole.
    CommonPole,
    /// The boundary band is outside its admissible range [0, 0.1).
    InvalidBoundaryBand,
    /// A search specification violates its invariants (plant count,
    /// degree bounds, or budget); the payload names the broken one.
    InvalidSearchSpec(&'static str),
    /// The eigenvalue iteration failed to converge even after a shift
    /// of variable.
    EigenvalueFailure,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Error::ZeroPolynomial => "polynomial is identically zero",
            Error::MarginalCase => "Routh pivot below tolerance; verdict unreliable",
            Error::MarginalRoot => "root lies within the boundary band of the region",
            Error::ZeroDenominator => "denominator is identically zero",
            Error::NotProper => "function is not proper (numerator degree not below denominator degree)",
            Error::DimensionMismatch => "vector or matrix dimensions do not agree",
            Error::DegenerateLoop => "loop gain cp is identically 1",
            Error::IdenticalFunctions => "functions required to be distinct are identical",
            Error::DegenerateCrossRatio => "cross-ratio relation degenerates for these arguments",
            Error::ConstantFunction => "function is constant",
            Error::PreimageOnBoundary => {
                "a preimage of {0, 1, infinity} lies within tolerance of the unit circle"
            }
            Error::NonPositiveParameter => "parameter must be strictly positive",
            Error::OutOfDisc => "parameter must lie in the open unit disc",
            Error::CommonPole => "the avoided functions share a common pole",
            Error::InvalidBoundaryBand => "boundary band must lie in [0, 0.1)",
            Error::InvalidSearchSpec(what) => {
                return write!(f, "search specification is invalid: {what}")
            }
            Error::EigenvalueFailure => "eigenvalue iteration failed to converge",
        };
        f.write_str(msg)
    }
}

impl core::error::Error for Error {}

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
