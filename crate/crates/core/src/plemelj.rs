//! Cauchy transforms and Plemelj boundary values on circles and segments.
//!
//! Convention: kernel `1/(zeta - z)`, curves traversed counterclockwise
//! (circles) or from start to end (segments), and the `+` side is the
//! left of the direction of travel. With this convention the boundary
//! values satisfy `F+ - F- = chi f` and `F+ + F- = 2 P`, where `P` is the
//! principal value.
//!
//! All integrals use the composite trapezoid rule on the curve's nodes.

use std::f64::consts::TAU;
use std::fmt;
use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::geometry::{check_finite, fmt_f64, ComplexPoint, Cutoff, SampledCurve};

/// Samples of a density at the nodes of a [`SampledCurve`].
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryFunction {
    samples: Vec<ComplexPoint>,
}

impl BoundaryFunction {
    pub fn new(curve: &SampledCurve, samples: Vec<ComplexPoint>) -> Result<Self> {
        if samples.len() != curve.len() {
            return Err(Error::InvalidArgument(format!(
                "boundary function has {} samples, curve has {} nodes",
                samples.len(),
                curve.len()
            )));
        }
        for &s in &samples {
            check_finite(s, "boundary sample")?;
        }
        Ok(Self { samples })
    }

    /// Samples `f` at the curve's nodes.
    pub fn from_fn<F: Fn(ComplexPoint) -> ComplexPoint>(
        curve: &SampledCurve,
        f: F,
    ) -> Result<Self> {
        Self::new(curve, curve.nodes().iter().map(|&z| f(z)).collect())
    }

    pub fn zero(curve: &SampledCurve) -> Self {
        Self {
            samples: vec![Complex64::new(0.0, 0.0); curve.len()],
        }
    }

    pub fn samples(&self) -> &[ComplexPoint] {
        &self.samples
    }
}

fn check_sizes(curve: &SampledCurve, f: &BoundaryFunction) -> Result<()> {
    if f.samples.len() != curve.len() {
        return Err(Error::InvalidArgument(format!(
            "boundary function has {} samples, curve has {} nodes",
            f.samples.len(),
            curve.len()
        )));
    }
    Ok(())
}

/// Stencil width of the local interpolant on open curves.
const LOCAL_STENCIL: usize = 8;

/// The density `h = chi f` with an interpolant for off-node values and
/// derivatives in the curve parameter.
struct Density<'a> {
    curve: &'a SampledCurve,
    values: Vec<Complex64>,
    /// Fourier coefficients in `theta` for closed curves, `c[k]` for
    /// `k = 0..N` in FFT order.
    fourier: Option<Vec<Complex64>>,
}

impl<'a> Density<'a> {
    fn new(curve: &'a SampledCurve, cutoff: &Cutoff, f: &BoundaryFunction) -> Self {
        let values: Vec<Complex64> = curve
            .params()
            .iter()
            .zip(f.samples())
            .map(|(&p, &s)| s * cutoff.value(p))
            .collect();
        let fourier = curve.is_closed().then(|| {
            let n = values.len();
            let mut buf = values.clone();
            FftPlanner::new().plan_fft_forward(n).process(&mut buf);
            buf.iter_mut().for_each(|c| *c /= n as f64);
            buf
        });
        Self {
            curve,
            values,
            fourier,
        }
    }

    /// `(h(param), dh/dparam)`.
    fn value_and_slope(&self, param: f64) -> (Complex64, Complex64) {
        let node = self.curve.node_index(param);
        match &self.fourier {
            Some(coef) => {
                let n = coef.len();
                let mut value = Complex64::new(0.0, 0.0);
                let mut slope = Complex64::new(0.0, 0.0);
                for (k, &c) in coef.iter().enumerate() {
                    let freq = if 2 * k < n {
                        k as f64
                    } else {
                        k as f64 - n as f64
                    };
                    if 2 * k == n {
                        // Nyquist mode split evenly between +-n/2
                        let half = n as f64 / 2.0;
                        value += c * (half * param).cos();
                        slope -= c * half * (half * param).sin();
                        continue;
                    }
                    let e = Complex64::from_polar(1.0, freq * param);
                    value += c * e;
                    slope += c * e * Complex64::new(0.0, freq);
                }
                if let Some(j) = node {
                    value = self.values[j];
                }
                (value, slope)
            }
            None => {
                let (value, slope) = self.local_lagrange(param);
                match node {
                    Some(j) => (self.values[j], slope),
                    None => (value, slope),
                }
            }
        }
    }

    fn local_lagrange(&self, param: f64) -> (Complex64, Complex64) {
        let params = self.curve.params();
        let n = params.len();
        let m = LOCAL_STENCIL.min(n);
        let step = self.curve.param_step();
        let center = ((param - params[0]) / step).floor() as i64;
        let start = (center - (m as i64 / 2 - 1)).clamp(0, (n - m) as i64) as usize;
        let xs = &params[start..start + m];
        let ys = &self.values[start..start + m];
        let mut value = Complex64::new(0.0, 0.0);
        let mut slope = Complex64::new(0.0, 0.0);
        for i in 0..m {
            let mut li = 1.0;
            for l in 0..m {
                if l != i {
                    li *= (param - xs[l]) / (xs[i] - xs[l]);
                }
            }
            let mut dli = 0.0;
            for k in 0..m {
                if k == i {
                    continue;
                }
                let mut term = 1.0 / (xs[i] - xs[k]);
                for l in 0..m {
                    if l != i && l != k {
                        term *= (param - xs[l]) / (xs[i] - xs[l]);
                    }
                }
                dli += term;
            }
            value += ys[i] * li;
            slope += ys[i] * dli;
        }
        (value, slope)
    }

    /// `(h(z0), dh/dzeta(z0))` at the curve point with parameter `param`.
    fn anchor(&self, param: f64) -> (Complex64, Complex64) {
        let (value, slope) = self.value_and_slope(param);
        (value, slope / self.curve.shape().derivative(param))
    }

    /// Cauchy transform at an off-curve `z` with the first-order Taylor
    /// polynomial of `h` at `z0` subtracted and integrated exactly.
    fn subtracted_transform(
        &self,
        z0: Complex64,
        h0: Complex64,
        d0: Complex64,
        z: Complex64,
    ) -> Complex64 {
        let nodes = self.curve.nodes();
        let sum = self.curve.contour_sum(|j| {
            let zeta = nodes[j];
            (self.values[j] - h0 - d0 * (zeta - z0)) / (zeta - z)
        });
        let shape = self.curve.shape();
        let winding = shape.kernel_integral(z);
        sum + h0 * winding + d0 * (shape.chord_integral() + (z - z0) * winding)
    }
}

fn validate_point(curve: &SampledCurve, cutoff: &Cutoff, param: f64) -> Result<()> {
    if !curve.contains_param(param) {
        return Err(Error::Domain(format!(
            "parameter {param} is not on the curve"
        )));
    }
    if let Cutoff::Window(w) = cutoff {
        if !w.in_plateau(param) {
            return Err(Error::OutsidePlateau { param });
        }
    }
    if !curve.is_closed() {
        let (lo, hi) = curve.shape().param_range();
        let margin = LOCAL_STENCIL as f64 * curve.param_step();
        if param - lo < margin || hi - param < margin {
            return Err(Error::Domain(format!(
                "parameter {param} is too close to an endpoint of the arc"
            )));
        }
    }
    Ok(())
}

/// `(1/2 pi i) * integral of chi(zeta) f(zeta) / (zeta - z) d(zeta)` by the
/// trapezoid rule. Points within one node spacing of the curve are rejected.
pub fn cauchy_transform(
    curve: &SampledCurve,
    cutoff: &Cutoff,
    f: &BoundaryFunction,
    z: ComplexPoint,
) -> Result<ComplexPoint> {
    check_sizes(curve, f)?;
    check_finite(z, "z")?;
    let nodes = curve.nodes();
    let (nearest, distance) = nodes
        .iter()
        .enumerate()
        .map(|(j, &zeta)| (j, (zeta - z).norm()))
        .fold(
            (0, f64::INFINITY),
            |best, cur| if cur.1 < best.1 { cur } else { best },
        );
    let spacing = curve.local_spacing(curve.params()[nearest]);
    if distance <= spacing {
        return Err(Error::NearSingular {
            point: z,
            distance,
            spacing,
        });
    }
    let params = curve.params();
    let samples = f.samples();
    Ok(curve.contour_sum(|j| samples[j] * cutoff.value(params[j]) / (nodes[j] - z)))
}

/// Boundary values `(F+, F-)` at the curve point with parameter `param`.
///
/// The principal value is computed by singularity subtraction: the Taylor
/// polynomial `h(z0) + h'(z0)(zeta - z0)` of the density is removed from
/// the numerator, the regularized integral is summed, and the removed part
/// is integrated in closed form. Then `F+- = P +- h(z0)/2`.
pub fn plemelj_boundary_values(
    curve: &SampledCurve,
    cutoff: &Cutoff,
    f: &BoundaryFunction,
    param: f64,
) -> Result<(ComplexPoint, ComplexPoint)> {
    check_sizes(curve, f)?;
    validate_point(curve, cutoff, param)?;
    let density = Density::new(curve, cutoff, f);
    Ok(principal_split(&density, param))
}

fn principal_split(density: &Density<'_>, param: f64) -> (Complex64, Complex64) {
    let curve = density.curve;
    let shape = curve.shape();
    let z0 = shape.point(param);
    let (h0, d0) = density.anchor(param);
    let tiny = 1e-12 * curve.local_spacing(param);
    let nodes = curve.nodes();
    let regular = curve.contour_sum(|j| {
        let dz = nodes[j] - z0;
        if dz.norm() <= tiny {
            Complex64::new(0.0, 0.0)
        } else {
            (density.values[j] - h0 - d0 * dz) / dz
        }
    });
    let principal = regular + h0 * shape.kernel_principal_value(z0) + d0 * shape.chord_integral();
    (principal + 0.5 * h0, principal - 0.5 * h0)
}

/// Offsets of the one-sided extrapolation, in units of the local node spacing.
const OFFSET_SPACINGS: f64 = 3.0;
const OFFSET_COUNT: usize = 6;

/// One-sided limits of the Cauchy transform at `param`, each obtained by
/// polynomial extrapolation from off-curve evaluations at distances
/// `3 k h`, `k = 1..=6`, on its own side of the curve.
fn one_sided_limits(density: &Density<'_>, param: f64) -> Result<(Complex64, Complex64)> {
    let curve = density.curve;
    let shape = curve.shape();
    let z0 = shape.point(param);
    let (h0, d0) = density.anchor(param);
    let normal = shape.left_normal(param);
    let spacing = curve.local_spacing(param);
    let offsets: Vec<f64> = (1..=OFFSET_COUNT)
        .map(|k| OFFSET_SPACINGS * k as f64 * spacing)
        .collect();
    let weights = extrapolation_weights(&offsets);
    let limit = |side: f64| -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (d, w) in offsets.iter().zip(&weights) {
            let z = z0 + side * d * normal;
            if shape.on_plus_side(z) != (side > 0.0) {
                return Err(Error::InvalidArgument(format!(
                    "{} nodes are too few for one-sided extrapolation at parameter {param}",
                    curve.len()
                )));
            }
            acc += w * density.subtracted_transform(z0, h0, d0, z);
        }
        Ok(acc)
    };
    Ok((limit(1.0)?, limit(-1.0)?))
}

/// Lagrange weights that extrapolate samples at `xs` to `x = 0`.
fn extrapolation_weights(xs: &[f64]) -> Vec<f64> {
    (0..xs.len())
        .map(|i| {
            xs.iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &xj)| -xj / (xs[i] - xj))
                .product()
        })
        .collect()
}

/// Pointwise check of the jump identity `F+ - F- = chi f`.
#[derive(Clone, Debug, PartialEq)]
pub struct JumpReport {
    pub params: Vec<f64>,
    /// One-sided limit from the `+` side.
    pub plus_values: Vec<ComplexPoint>,
    /// One-sided limit from the `-` side.
    pub minus_values: Vec<ComplexPoint>,
    /// `|plus - minus - chi f|`.
    pub residuals: Vec<f64>,
    /// Largest deviation between the one-sided limits and the
    /// subtraction-based values of [`plemelj_boundary_values`].
    pub route_gaps: Vec<f64>,
}

impl JumpReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    pub fn max_route_gap(&self) -> f64 {
        self.route_gaps.iter().copied().fold(0.0, f64::max)
    }

    /// Writes `param,re_plus,im_plus,re_minus,im_minus,residual`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        out.write_all(b"param,re_plus,im_plus,re_minus,im_minus,residual\n")?;
        for i in 0..self.params.len() {
            let (p, m) = (self.plus_values[i], self.minus_values[i]);
            writeln!(
                out,
                "{},{},{},{},{},{}",
                fmt_f64(self.params[i]),
                fmt_f64(p.re),
                fmt_f64(p.im),
                fmt_f64(m.re),
                fmt_f64(m.im),
                fmt_f64(self.residuals[i])
            )?;
        }
        Ok(())
    }
}

/// Evaluates the jump identity at each parameter in `points`.
///
/// `F+` and `F-` are the one-sided limits of the Cauchy transform, computed
/// independently on each side, so the residual measures how well the
/// discretized transform realizes the jump. Each point is also run through
/// [`plemelj_boundary_values`], whose errors propagate.
pub fn jump_residual(
    curve: &SampledCurve,
    cutoff: &Cutoff,
    f: &BoundaryFunction,
    points: &[f64],
) -> Result<JumpReport> {
    check_sizes(curve, f)?;
    for &p in points {
        validate_point(curve, cutoff, p)?;
    }
    let density = Density::new(curve, cutoff, f);
    let rows = points
        .par_iter()
        .map(|&p| {
            let (pv_plus, pv_minus) = principal_split(&density, p);
            let (plus, minus) = one_sided_limits(&density, p)?;
            let (target, _) = density.value_and_slope(p);
            let residual = (plus - minus - target).norm();
            let gap = (plus - pv_plus).norm().max((minus - pv_minus).norm());
            Ok((plus, minus, residual, gap))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(JumpReport {
        params: points.to_vec(),
        plus_values: rows.iter().map(|r| r.0).collect(),
        minus_values: rows.iter().map(|r| r.1).collect(),
        residuals: rows.iter().map(|r| r.2).collect(),
        route_gaps: rows.iter().map(|r| r.3).collect(),
    })
}

/// Which side(s) of the unit circle a boundary function extends to holomorphically.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionVerdict {
    InsideOnly,
    OutsideOnly,
    Both,
    Neither,
}

impl ExtensionVerdict {
    pub fn from_flags(inside: bool, outside: bool) -> Self {
        match (inside, outside) {
            (true, true) => ExtensionVerdict::Both,
            (true, false) => ExtensionVerdict::InsideOnly,
            (false, true) => ExtensionVerdict::OutsideOnly,
            (false, false) => ExtensionVerdict::Neither,
        }
    }

    pub fn token(&self) -> &'static str {
        match self {
            ExtensionVerdict::InsideOnly => "inside_only",
            ExtensionVerdict::OutsideOnly => "outside_only",
            ExtensionVerdict::Both => "both",
            ExtensionVerdict::Neither => "neither",
        }
    }
}

impl fmt::Display for ExtensionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Classifies samples `f(theta_j)`, `theta_j = 2 pi j / N`, by their
/// discrete Fourier coefficients: negligible negative modes mean the data
/// extend inside the disc, negligible positive modes mean they extend
/// outside (bounded at infinity). The Nyquist mode counts on both sides.
pub fn extension_classify(circle_samples: &[ComplexPoint], tol: f64) -> Result<ExtensionVerdict> {
    let n = circle_samples.len();
    if n < 64 || !n.is_power_of_two() {
        return Err(Error::InvalidArgument(format!(
            "extension_classify needs a power-of-two sample count >= 64, got {n}"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    for &s in circle_samples {
        check_finite(s, "circle sample")?;
    }
    let mut coef = circle_samples.to_vec();
    FftPlanner::new().plan_fft_forward(n).process(&mut coef);
    let mags: Vec<f64> = coef.iter().map(|c| c.norm() / n as f64).collect();
    let overall = mags.iter().copied().fold(0.0, f64::max);
    if overall == 0.0 {
        return Ok(ExtensionVerdict::Both);
    }
    let positive = mags[1..=n / 2].iter().copied().fold(0.0, f64::max);
    let negative = mags[n / 2..].iter().copied().fold(0.0, f64::max);
    Ok(ExtensionVerdict::from_flags(
        negative <= tol * overall,
        positive <= tol * overall,
    ))
}

/// `|loop integral of G(c) dc|` by the trapezoid rule on the loop's nodes.
pub fn morera_loop_integral<G>(g: G, loop_curve: &SampledCurve) -> Result<f64>
where
    G: Fn(ComplexPoint) -> ComplexPoint,
{
    let mut acc = Complex64::new(0.0, 0.0);
    for ((&c, &dc), &w) in loop_curve
        .nodes()
        .iter()
        .zip(loop_curve.derivs())
        .zip(loop_curve.weights())
    {
        let v = g(c);
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::NonFinite(format!("G({c}) = {v}")));
        }
        acc += v * dc * w;
    }
    Ok(acc.norm())
}

/// Evenly spaced parameters `2 pi m / count` on a closed curve.
pub fn circle_test_params(count: usize) -> Vec<f64> {
    (0..count).map(|m| TAU * m as f64 / count as f64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{make_circle, make_segment, CutoffWindow};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn transform_reproduces_and_annihilates() {
        let circle = make_circle(1.0, 64).unwrap();
        let f = BoundaryFunction::from_fn(&circle, |z| z * z).unwrap();
        let inside = cauchy_transform(&circle, &Cutoff::One, &f, c(0.3, 0.0)).unwrap();
        assert!((inside - c(0.09, 0.0)).norm() < 1e-14);
        let outside = cauchy_transform(&circle, &Cutoff::One, &f, c(2.0, 0.0)).unwrap();
        assert!(outside.norm() < 1e-14);
    }

    #[test]
    fn transform_of_reciprocal_outside() {
        // 1/(zeta (zeta - z)) = (1/z)(1/(zeta - z) - 1/zeta)
        let circle = make_circle(1.0, 64).unwrap();
        let f = BoundaryFunction::from_fn(&circle, |z| 1.0 / z).unwrap();
        let v = cauchy_transform(&circle, &Cutoff::One, &f, c(2.0, 0.0)).unwrap();
        assert!((v - c(-0.5, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn zero_density_gives_zero() {
        let seg = make_segment(c(-1.0, 0.0), c(1.0, 0.0), 101).unwrap();
        let f = BoundaryFunction::zero(&seg);
        assert_eq!(
            cauchy_transform(&seg, &Cutoff::One, &f, c(0.1, 0.4)).unwrap(),
            c(0.0, 0.0)
        );
    }

    #[test]
    fn transform_rejects_near_curve_points() {
        let circle = make_circle(1.0, 64).unwrap();
        let f = BoundaryFunction::from_fn(&circle, |z| z).unwrap();
        let err = cauchy_transform(&circle, &Cutoff::One, &f, c(1.0 + 1e-3, 0.0)).unwrap_err();
        assert!(matches!(err, Error::NearSingular { .. }));
        let short =
            BoundaryFunction::new(&make_circle(1.0, 32).unwrap(), vec![c(0.0, 0.0); 32]).unwrap();
        assert!(cauchy_transform(&circle, &Cutoff::One, &short, c(0.0, 0.0)).is_err());
    }

    #[test]
    fn boundary_values_of_identity() {
        let circle = make_circle(1.0, 64).unwrap();
        let f = BoundaryFunction::from_fn(&circle, |z| z).unwrap();
        let (p, m) = plemelj_boundary_values(&circle, &Cutoff::One, &f, 0.0).unwrap();
        assert!((p - c(1.0, 0.0)).norm() < 1e-13);
        assert!(m.norm() < 1e-13);
    }

    #[test]
    fn boundary_values_of_reciprocal() {
        let circle = make_circle(1.0, 64).unwrap();
        let f = BoundaryFunction::from_fn(&circle, |z| 1.0 / z).unwrap();
        let (p, m) = plemelj_boundary_values(&circle, &Cutoff::One, &f, TAU / 4.0).unwrap();
        assert!(p.norm() < 1e-13);
        assert!((m - c(0.0, 1.0)).norm() < 1e-13);
    }

    #[test]
    fn boundary_values_between_nodes() {
        let circle = make_circle(1.0, 128).unwrap();
        let f = BoundaryFunction::from_fn(&circle, |z: Complex64| z.exp()).unwrap();
        let theta = 0.123_456;
        let (p, m) = plemelj_boundary_values(&circle, &Cutoff::One, &f, theta).unwrap();
        assert!((p - Complex64::from_polar(1.0, theta).exp()).norm() < 1e-12);
        assert!(m.norm() < 1e-12);
    }

    #[test]
    fn plateau_is_enforced() {
        let seg = make_segment(c(-1.0, 0.0), c(1.0, 0.0), 1001).unwrap();
        let chi = Cutoff::Window(CutoffWindow::new(0.0, 0.4, 0.8).unwrap());
        let f = BoundaryFunction::from_fn(&seg, |_| c(1.0, 0.0)).unwrap();
        assert!(plemelj_boundary_values(&seg, &chi, &f, 0.2).is_ok());
        assert!(matches!(
            plemelj_boundary_values(&seg, &chi, &f, 0.5),
            Err(Error::OutsidePlateau { .. })
        ));
        assert!(matches!(
            jump_residual(&seg, &chi, &f, &[0.0, 0.6]),
            Err(Error::OutsidePlateau { .. })
        ));
    }

    #[test]
    fn arc_with_bump_has_unit_jump() {
        let seg = make_segment(c(-1.0, 0.0), c(1.0, 0.0), 2049).unwrap();
        let chi = Cutoff::Window(CutoffWindow::new(0.0, 0.4, 0.8).unwrap());
        let f = BoundaryFunction::from_fn(&seg, |_| c(1.0, 0.0)).unwrap();
        let (p, m) = plemelj_boundary_values(&seg, &chi, &f, 0.0).unwrap();
        assert!((p - m - 1.0).norm() < 1e-14);
        // even density: the principal value vanishes at the center
        assert!((p - c(0.5, 0.0)).norm() < 1e-10, "{p}");
        let rep = jump_residual(&seg, &chi, &f, &[0.0, 0.1, -0.25]).unwrap();
        assert!(rep.max_residual() < 1e-9, "{}", rep.max_residual());
        assert!(rep.max_route_gap() < 1e-8);
    }

    #[test]
    fn zero_density_has_zero_residual() {
        let circle = make_circle(1.0, 256).unwrap();
        let rep = jump_residual(
            &circle,
            &Cutoff::One,
            &BoundaryFunction::zero(&circle),
            &circle_test_params(32),
        )
        .unwrap();
        assert!(rep.residuals.iter().all(|&r| r == 0.0));
    }

    #[test]
    fn too_few_nodes_for_extrapolation() {
        let circle = make_circle(1.0, 32).unwrap();
        let f = BoundaryFunction::from_fn(&circle, |z| z).unwrap();
        assert!(jump_residual(&circle, &Cutoff::One, &f, &[0.0]).is_err());
    }

    #[test]
    fn report_csv_header() {
        let circle = make_circle(1.0, 64).unwrap();
        let f = BoundaryFunction::from_fn(&circle, |z| z).unwrap();
        let rep = jump_residual(&circle, &Cutoff::One, &f, &[0.0]).unwrap();
        let mut buf = Vec::new();
        rep.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next(),
            Some("param,re_plus,im_plus,re_minus,im_minus,residual")
        );
        assert_eq!(lines.next().unwrap().split(',').count(), 6);
    }

    #[test]
    fn classifier_golden_cases() {
        let n = 64;
        let sample = |f: &dyn Fn(f64) -> Complex64| -> Vec<Complex64> {
            (0..n).map(|j| f(TAU * j as f64 / n as f64)).collect()
        };
        let tol = 1e-9;
        let v = |s: Vec<Complex64>| extension_classify(&s, tol).unwrap();
        assert_eq!(
            v(sample(&|t| Complex64::from_polar(1.0, t))),
            ExtensionVerdict::InsideOnly
        );
        assert_eq!(
            v(sample(&|t| Complex64::from_polar(1.0, -t))),
            ExtensionVerdict::OutsideOnly
        );
        assert_eq!(
            v(sample(&|t| c(2.0 * t.cos(), 0.0))),
            ExtensionVerdict::Neither
        );
        assert_eq!(v(sample(&|_| c(3.0, -1.0))), ExtensionVerdict::Both);
        assert_eq!(v(vec![c(0.0, 0.0); n]), ExtensionVerdict::Both);
        assert_eq!(ExtensionVerdict::Neither.to_string(), "neither");
    }

    #[test]
    fn classifier_rejects_bad_sizes() {
        assert!(extension_classify(&vec![c(1.0, 0.0); 32], 1e-9).is_err());
        assert!(extension_classify(&vec![c(1.0, 0.0); 96], 1e-9).is_err());
    }

    #[test]
    fn morera_cases() {
        let unit = make_circle(1.0, 256).unwrap();
        assert!(morera_loop_integral(|c| c * c, &unit).unwrap() <= 1e-12);
        let v = morera_loop_integral(|c: Complex64| c.conj(), &unit).unwrap();
        assert!((v - TAU).abs() < 1e-12);
        assert!(morera_loop_integral(|c| 1.0 / (c - 2.0), &unit).unwrap() <= 1e-10);
        let origin = make_circle(1.0, 8).unwrap();
        assert!(matches!(
            morera_loop_integral(|c: Complex64| 1.0 / (c - 1.0), &origin),
            Err(Error::NonFinite(_))
        ));
    }
}
