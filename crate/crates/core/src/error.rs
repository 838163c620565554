use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("singular point {point}: coefficient is not defined there")]
    SingularPoint { point: Complex64 },

    #[error("essential singularity at eta = 0")]
    EssentialSingularity,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("value with log-modulus {logmag} does not fit in a double")]
    Overflow { logmag: f64 },

    #[error(
        "evaluation point {point} lies within {distance:.3e} of the curve (node spacing {spacing:.3e}); use plemelj_boundary_values for on-curve values"
    )]
    NearSingular {
        point: Complex64,
        distance: f64,
        spacing: f64,
    },

    #[error("parameter {param} lies outside the cutoff plateau")]
    OutsidePlateau { param: f64 },

    #[error("reality check failed at axis point {point}: |Im f| = {imag:.3e}")]
    RealityCheck { point: f64, imag: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
