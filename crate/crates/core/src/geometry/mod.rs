//! Value types, curve sampling and polar-grid machinery shared by the
//! rest of the crate.

mod curve;
mod grid;
mod logcomplex;

pub use curve::{
    make_circle, make_segment, CurveShape, Cutoff, CutoffWindow, Orientation, SampledCurve,
};
pub use grid::{flood_label, PgmMode, PolarGrid, RegionMask, RegionParams};
pub use logcomplex::{wrap_angle, LogComplex, MAX_LOGMAG};

/// Points of the complex plane (coordinates `z`, `w` and the leaf parameter `eta`).
pub type ComplexPoint = num_complex::Complex64;

/// Rejects NaN or infinite components.
pub fn check_finite(z: ComplexPoint, what: &str) -> crate::Result<ComplexPoint> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(crate::Error::NonFinite(format!("{what} = {z}")))
    }
}

/// Formats a float with 17 significant digits, the form used in every
/// CSV and header this crate writes.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}
