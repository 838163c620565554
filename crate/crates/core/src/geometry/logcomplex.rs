//! Complex numbers in log-polar form.
//!
//! Coefficients such as `a_n(iv) = (v - 1)^{-n^2}` leave the range of a
//! double for modest `n`, so magnitudes are carried as natural logarithms
//! and only converted back at the edges.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::{Mul, Neg};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest log-modulus that still converts to a finite double.
pub const MAX_LOGMAG: f64 = 709.782_712_893_384;

/// Wraps an angle into `(-pi, pi]`.
pub fn wrap_angle(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let r = x.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// A complex value stored as `(ln|z|, arg z)`.
///
/// Zero is `logmag = -inf, arg = 0` and absorbs under multiplication.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogComplex {
    logmag: f64,
    arg: f64,
}

impl LogComplex {
    pub const ZERO: LogComplex = LogComplex {
        logmag: f64::NEG_INFINITY,
        arg: 0.0,
    };
    pub const ONE: LogComplex = LogComplex {
        logmag: 0.0,
        arg: 0.0,
    };

    /// Builds a value from its parts. The argument is wrapped into `(-pi, pi]`.
    pub fn new(logmag: f64, arg: f64) -> Self {
        if logmag == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        Self {
            logmag,
            arg: wrap_angle(arg),
        }
    }

    pub fn from_complex(z: Complex64) -> Self {
        if z.re == 0.0 && z.im == 0.0 {
            return Self::ZERO;
        }
        Self::new(z.norm().ln(), z.im.atan2(z.re))
    }

    pub fn from_real(x: f64) -> Self {
        Self::from_complex(Complex64::new(x, 0.0))
    }

    /// `exp(w)` without forming the exponential.
    pub fn exp_of(w: Complex64) -> Self {
        Self::new(w.re, w.im)
    }

    pub fn logmag(&self) -> f64 {
        self.logmag
    }

    pub fn arg(&self) -> f64 {
        self.arg
    }

    pub fn is_zero(&self) -> bool {
        self.logmag == f64::NEG_INFINITY
    }

    pub fn is_finite(&self) -> bool {
        !self.logmag.is_nan() && self.logmag != f64::INFINITY && self.arg.is_finite()
    }

    /// Modulus as a double; may be `inf` for very large values.
    pub fn modulus(&self) -> f64 {
        self.logmag.exp()
    }

    /// Converts to an ordinary complex number, failing if the modulus overflows.
    pub fn to_complex(&self) -> Result<Complex64> {
        if self.is_zero() {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if self.logmag.is_nan() || self.logmag > MAX_LOGMAG {
            return Err(Error::Overflow {
                logmag: self.logmag,
            });
        }
        let r = self.logmag.exp();
        // keep real values exactly real
        if self.arg == 0.0 {
            return Ok(Complex64::new(r, 0.0));
        }
        if self.arg == std::f64::consts::PI {
            return Ok(Complex64::new(-r, 0.0));
        }
        Ok(Complex64::from_polar(r, self.arg))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.logmag, -self.arg)
    }

    /// `z^p` for real `p`, on the principal branch of `arg`.
    pub fn powf(&self, p: f64) -> Self {
        if self.is_zero() {
            return if p == 0.0 { Self::ONE } else { Self::ZERO };
        }
        Self::new(self.logmag * p, self.arg * p)
    }

    pub fn powi(&self, p: i64) -> Self {
        self.powf(p as f64)
    }

    /// Reciprocal. The reciprocal of zero has `logmag = +inf`.
    pub fn recip(&self) -> Self {
        if self.is_zero() {
            return Self {
                logmag: f64::INFINITY,
                arg: 0.0,
            };
        }
        Self::new(-self.logmag, -self.arg)
    }

    /// Sum, computed as `big * (1 + small/big)` so the ratio never overflows.
    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return *other;
        }
        if other.is_zero() {
            return *self;
        }
        let (big, small) = if self.logmag >= other.logmag {
            (self, other)
        } else {
            (other, self)
        };
        let ratio = Complex64::from_polar((small.logmag - big.logmag).exp(), small.arg - big.arg);
        let factor = Complex64::new(1.0, 0.0) + ratio;
        *big * Self::from_complex(factor)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        *self * Self::from_complex(c)
    }
}

impl Mul for LogComplex {
    type Output = LogComplex;

    fn mul(self, rhs: LogComplex) -> LogComplex {
        if self.is_zero() || rhs.is_zero() {
            return LogComplex::ZERO;
        }
        LogComplex::new(self.logmag + rhs.logmag, self.arg + rhs.arg)
    }
}

impl Neg for LogComplex {
    type Output = LogComplex;

    fn neg(self) -> LogComplex {
        if self.is_zero() {
            return self;
        }
        LogComplex::new(self.logmag, self.arg + PI)
    }
}

impl From<Complex64> for LogComplex {
    fn from(z: Complex64) -> Self {
        Self::from_complex(z)
    }
}

impl fmt::Display for LogComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp({}) * e^(i {})", self.logmag, self.arg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_absorbing() {
        let z = LogComplex::from_complex(Complex64::new(0.0, 0.0));
        assert!(z.is_zero());
        assert_eq!(z.arg(), 0.0);
        let w = LogComplex::new(3.0, 1.0);
        assert!((z * w).is_zero());
        assert!((w * z).is_zero());
        assert_eq!(z.add(&w), w);
    }

    #[test]
    fn round_trip_is_tight() {
        for &(re, im) in &[
            (1.0, 0.0),
            (-1.0, 0.0),
            (0.3, -2.5),
            (1e-300, 1e-300),
            (-7e200, 3.0),
        ] {
            let z = Complex64::new(re, im);
            let back = LogComplex::from_complex(z).to_complex().unwrap();
            assert!((back - z).norm() <= 1e-14 * z.norm(), "{z} -> {back}");
        }
    }

    #[test]
    fn argument_wraps_into_half_open_interval() {
        assert_eq!(wrap_angle(PI), PI);
        assert_eq!(wrap_angle(-PI), PI);
        assert!((wrap_angle(3.0 * PI) - PI).abs() < 1e-15);
        assert!(wrap_angle(-4.0 * PI).abs() < 1e-15);
        let p = LogComplex::new(0.0, 2.0) * LogComplex::new(0.0, 2.0);
        assert!((p.arg() - (4.0 - TAU)).abs() < 1e-15);
    }

    #[test]
    fn overflow_is_reported() {
        let big = LogComplex::new(800.0, 0.0);
        assert!(matches!(big.to_complex(), Err(Error::Overflow { .. })));
        assert!(big.powf(-1.0).to_complex().unwrap().norm() < 1e-300);
    }

    #[test]
    fn sum_of_huge_values_stays_in_log_domain() {
        let a = LogComplex::new(1000.0, 0.0);
        let b = LogComplex::new(1000.0, PI);
        assert!(a.add(&b).is_zero() || a.add(&b).logmag() < 1000.0 - 30.0);
        let c = a.add(&LogComplex::new(1000.0, 0.0));
        assert!((c.logmag() - (1000.0 + 2f64.ln())).abs() < 1e-12);
    }
}
