use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Analytic description behind a [`SampledCurve`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CurveShape {
    /// Circle about the origin, parameter `theta in [0, 2pi)`, counterclockwise.
    Circle { radius: f64 },
    /// Segment from `start` to `end`. The parameter is signed arclength
    /// measured from the midpoint, so a real-axis segment `[-1, 1]` is
    /// parameterized by `x` itself.
    Segment { start: Complex64, end: Complex64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Counterclockwise,
    AsParameterized,
}

impl CurveShape {
    pub fn point(&self, param: f64) -> Complex64 {
        match *self {
            CurveShape::Circle { radius } => Complex64::from_polar(radius, param),
            CurveShape::Segment { start, end } => {
                let mid = 0.5 * (start + end);
                mid + self.unit_tangent(param) * param
            }
        }
    }

    /// `d(zeta)/d(param)`.
    pub fn derivative(&self, param: f64) -> Complex64 {
        match *self {
            CurveShape::Circle { radius } => Complex64::i() * Complex64::from_polar(radius, param),
            CurveShape::Segment { .. } => self.unit_tangent(param),
        }
    }

    fn unit_tangent(&self, param: f64) -> Complex64 {
        match *self {
            CurveShape::Circle { .. } => {
                let d = self.derivative(param);
                d / d.norm()
            }
            CurveShape::Segment { start, end } => (end - start) / (end - start).norm(),
        }
    }

    /// Unit normal pointing to the left of the direction of travel (the `+` side).
    pub fn left_normal(&self, param: f64) -> Complex64 {
        Complex64::i() * self.unit_tangent(param)
    }

    pub fn is_closed(&self) -> bool {
        matches!(self, CurveShape::Circle { .. })
    }

    /// Parameter range `[lo, hi]` (half-open for closed curves).
    pub fn param_range(&self) -> (f64, f64) {
        match *self {
            CurveShape::Circle { .. } => (0.0, TAU),
            CurveShape::Segment { start, end } => {
                let half = 0.5 * (end - start).norm();
                (-half, half)
            }
        }
    }

    /// `(1/2 pi i) * integral of d(zeta)/(zeta - z)` for `z` off the curve.
    ///
    /// For the circle this is the winding number; for a segment it is
    /// `log((b - z)/(a - z)) / (2 pi i)` on the principal branch, whose cut
    /// is exactly the segment.
    pub fn kernel_integral(&self, z: Complex64) -> Complex64 {
        match *self {
            CurveShape::Circle { radius } => {
                if z.norm() < radius {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }
            CurveShape::Segment { start, end } => {
                ((end - z) / (start - z)).ln() / Complex64::new(0.0, TAU)
            }
        }
    }

    /// Principal value of the same integral at a point `z0` on the curve
    /// (away from segment endpoints).
    pub fn kernel_principal_value(&self, z0: Complex64) -> Complex64 {
        match *self {
            CurveShape::Circle { .. } => Complex64::new(0.5, 0.0),
            CurveShape::Segment { start, end } => {
                let ratio = (end - z0).norm() / (z0 - start).norm();
                Complex64::new(ratio.ln(), 0.0) / Complex64::new(0.0, TAU)
            }
        }
    }

    /// `(1/2 pi i) * integral of d(zeta)`, which is zero on closed curves.
    pub fn chord_integral(&self) -> Complex64 {
        match *self {
            CurveShape::Circle { .. } => Complex64::new(0.0, 0.0),
            CurveShape::Segment { start, end } => (end - start) / Complex64::new(0.0, TAU),
        }
    }

    /// Whether `z` lies on the `+` (left) side of the curve.
    pub fn on_plus_side(&self, z: Complex64) -> bool {
        match *self {
            CurveShape::Circle { radius } => z.norm() < radius,
            CurveShape::Segment { start, end } => ((z - start) / (end - start)).im > 0.0,
        }
    }
}

/// An oriented curve sampled at quadrature nodes.
///
/// `weights[j] * derivs[j]` is the `d(zeta)` attached to node `j` by the
/// composite trapezoid rule.
#[derive(Clone, Debug)]
pub struct SampledCurve {
    shape: CurveShape,
    nodes: Vec<Complex64>,
    params: Vec<f64>,
    derivs: Vec<Complex64>,
    weights: Vec<f64>,
    orientation: Orientation,
}

/// Samples a counterclockwise circle of `radius` at `theta_j = 2 pi j / node_count`.
pub fn make_circle(radius: f64, node_count: usize) -> Result<SampledCurve> {
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "circle radius must be positive and finite, got {radius}"
        )));
    }
    if node_count < 8 {
        return Err(Error::InvalidArgument(format!(
            "a circle needs at least 8 nodes, got {node_count}"
        )));
    }
    let shape = CurveShape::Circle { radius };
    let h = TAU / node_count as f64;
    let params: Vec<f64> = (0..node_count).map(|j| j as f64 * h).collect();
    let mut nodes: Vec<Complex64> = params.iter().map(|&t| shape.point(t)).collect();
    // exact node 0 at (radius, 0)
    nodes[0] = Complex64::new(radius, 0.0);
    let derivs = params.iter().map(|&t| shape.derivative(t)).collect();
    Ok(SampledCurve {
        shape,
        nodes,
        params,
        derivs,
        weights: vec![h; node_count],
        orientation: Orientation::Counterclockwise,
    })
}

/// Samples the segment `start -> end` at `node_count` equispaced nodes,
/// endpoints included, with trapezoid weights.
pub fn make_segment(start: Complex64, end: Complex64, node_count: usize) -> Result<SampledCurve> {
    let len = (end - start).norm();
    if !(len.is_finite() && len > 0.0) {
        return Err(Error::InvalidArgument(
            "segment endpoints must be finite and distinct".into(),
        ));
    }
    if node_count < 2 {
        return Err(Error::InvalidArgument(format!(
            "a segment needs at least 2 nodes, got {node_count}"
        )));
    }
    let shape = CurveShape::Segment { start, end };
    let (lo, hi) = shape.param_range();
    let h = (hi - lo) / (node_count - 1) as f64;
    let params: Vec<f64> = (0..node_count).map(|j| lo + j as f64 * h).collect();
    let mut nodes: Vec<Complex64> = params.iter().map(|&t| shape.point(t)).collect();
    nodes[0] = start;
    nodes[node_count - 1] = end;
    let derivs = params.iter().map(|&t| shape.derivative(t)).collect();
    let mut weights = vec![h; node_count];
    weights[0] *= 0.5;
    weights[node_count - 1] *= 0.5;
    Ok(SampledCurve {
        shape,
        nodes,
        params,
        derivs,
        weights,
        orientation: Orientation::AsParameterized,
    })
}

impl SampledCurve {
    pub fn shape(&self) -> &CurveShape {
        &self.shape
    }

    pub fn nodes(&self) -> &[Complex64] {
        &self.nodes
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn derivs(&self) -> &[Complex64] {
        &self.derivs
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.shape.is_closed()
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Uniform parameter step between consecutive nodes.
    pub fn param_step(&self) -> f64 {
        self.params[1] - self.params[0]
    }

    /// Distance between neighbouring nodes near `param`.
    pub fn local_spacing(&self, param: f64) -> f64 {
        self.shape.derivative(param).norm() * self.param_step()
    }

    /// Index of the node whose parameter equals `param` up to rounding.
    pub fn node_index(&self, param: f64) -> Option<usize> {
        let (lo, _) = self.shape.param_range();
        let step = self.param_step();
        let mut p = param;
        if self.is_closed() {
            p = (param - lo).rem_euclid(TAU) + lo;
        }
        let x = (p - lo) / step;
        let j = x.round();
        if (x - j).abs() > 1e-9 {
            return None;
        }
        let mut j = j as i64;
        if self.is_closed() {
            j = j.rem_euclid(self.len() as i64);
        }
        if j < 0 || j as usize >= self.len() {
            return None;
        }
        Some(j as usize)
    }

    /// Whether `param` lies in the curve's parameter range.
    pub fn contains_param(&self, param: f64) -> bool {
        if !param.is_finite() {
            return false;
        }
        if self.is_closed() {
            return true;
        }
        let (lo, hi) = self.shape.param_range();
        param >= lo && param <= hi
    }

    /// `(1/2 pi i) * sum_j w_j g_j zeta'_j`, the trapezoid sum of a
    /// contour integral with the `1/(2 pi i)` prefactor.
    pub(crate) fn contour_sum<F>(&self, mut integrand: F) -> Complex64
    where
        F: FnMut(usize) -> Complex64,
    {
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..self.len() {
            acc += integrand(j) * self.derivs[j] * self.weights[j];
        }
        acc / Complex64::new(0.0, TAU)
    }
}

/// Smooth step `s(x)` from 0 (x <= 0) to 1 (x >= 1) built from `exp(-1/x)`.
fn smooth_step(x: f64) -> f64 {
    fn phi(x: f64) -> f64 {
        if x > 0.0 {
            (-1.0 / x).exp()
        } else {
            0.0
        }
    }
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let a = phi(x);
    a / (a + phi(1.0 - x))
}

/// Compactly supported smooth cutoff in curve-parameter units.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutoffWindow {
    center: f64,
    inner_radius: f64,
    outer_radius: f64,
}

impl CutoffWindow {
    pub fn new(center: f64, inner_radius: f64, outer_radius: f64) -> Result<Self> {
        if !(center.is_finite()
            && inner_radius > 0.0
            && outer_radius > inner_radius
            && outer_radius.is_finite())
        {
            return Err(Error::InvalidArgument(format!(
                "cutoff needs 0 < inner < outer, got inner={inner_radius}, outer={outer_radius}"
            )));
        }
        Ok(Self {
            center,
            inner_radius,
            outer_radius,
        })
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn inner_radius(&self) -> f64 {
        self.inner_radius
    }

    pub fn outer_radius(&self) -> f64 {
        self.outer_radius
    }

    pub fn value(&self, param: f64) -> f64 {
        let d = (param - self.center).abs();
        if d <= self.inner_radius {
            1.0
        } else if d >= self.outer_radius {
            0.0
        } else {
            smooth_step((self.outer_radius - d) / (self.outer_radius - self.inner_radius))
        }
    }

    /// Strictly inside the plateau where the window is identically 1.
    pub fn in_plateau(&self, param: f64) -> bool {
        (param - self.center).abs() < self.inner_radius
    }
}

/// The cutoff `chi` multiplying a boundary density.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Cutoff {
    One,
    Window(CutoffWindow),
}

impl Cutoff {
    pub fn value(&self, param: f64) -> f64 {
        match self {
            Cutoff::One => 1.0,
            Cutoff::Window(w) => w.value(param),
        }
    }
}

impl From<CutoffWindow> for Cutoff {
    fn from(w: CutoffWindow) -> Self {
        Cutoff::Window(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn circle_nodes() {
        let c = make_circle(1.0, 4096).unwrap();
        assert_eq!(c.len(), 4096);
        assert_eq!(c.nodes()[0], Complex64::new(1.0, 0.0));
        assert!(c.is_closed());
        assert_eq!(c.orientation(), Orientation::Counterclockwise);
        let oct = make_circle(2.0, 8).unwrap();
        assert!((oct.nodes()[2] - Complex64::new(0.0, 2.0)).norm() < 1e-15);
        assert!(oct.params().windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn circle_rejects_too_few_nodes() {
        assert!(matches!(
            make_circle(1.0, 7),
            Err(Error::InvalidArgument(_))
        ));
        assert!(make_circle(f64::NAN, 64).is_err());
    }

    #[test]
    fn segment_parameter_is_coordinate() {
        let s = make_segment(Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0), 5).unwrap();
        assert_eq!(s.params(), &[-1.0, -0.5, 0.0, 0.5, 1.0]);
        assert_eq!(s.node_index(0.0), Some(2));
        assert_eq!(s.node_index(0.1), None);
        let total: f64 = s.weights().iter().sum();
        assert!((total - 2.0).abs() < 1e-15);
    }

    #[test]
    fn closed_node_lookup_wraps() {
        let c = make_circle(1.0, 32).unwrap();
        assert_eq!(c.node_index(TAU), Some(0));
        assert_eq!(c.node_index(-TAU / 32.0), Some(31));
        assert_eq!(c.node_index(PI / 2.0), Some(8));
    }

    #[test]
    fn cutoff_plateau_and_exterior_are_exact() {
        let w = CutoffWindow::new(0.0, 0.4, 0.8).unwrap();
        for k in 0..=400 {
            let x = -0.4 + 0.8 * k as f64 / 400.0;
            assert_eq!(w.value(x), 1.0);
        }
        for &x in &[0.8, -0.8, 0.9, -5.0, 1e3] {
            assert_eq!(w.value(x), 0.0);
        }
        let mid = w.value(0.6);
        assert!(mid > 0.0 && mid < 1.0);
        // monotone on the transition
        let mut prev = 1.0;
        for k in 0..=1000 {
            let x = 0.4 + 0.4 * k as f64 / 1000.0;
            let v = w.value(x);
            assert!(v <= prev);
            prev = v;
        }
    }

    #[test]
    fn cutoff_is_flat_at_its_edges() {
        let w = CutoffWindow::new(1.0, 0.3, 0.7).unwrap();
        let step = 1e-4;
        for &edge in &[1.3, 0.7, 1.7, 0.3] {
            let d = (w.value(edge + step) - w.value(edge)) / step;
            let d2 = (w.value(edge) - w.value(edge - step)) / step;
            assert!(d.abs() <= 1e-6 && d2.abs() <= 1e-6, "edge {edge}: {d} {d2}");
        }
    }

    #[test]
    fn cutoff_rejects_bad_radii() {
        assert!(CutoffWindow::new(0.0, 0.5, 0.5).is_err());
        assert!(CutoffWindow::new(0.0, 0.0, 0.5).is_err());
    }

    #[test]
    fn segment_kernel_integral_jumps_by_one() {
        let shape = CurveShape::Segment {
            start: Complex64::new(-1.0, 0.0),
            end: Complex64::new(1.0, 0.0),
        };
        let above = shape.kernel_integral(Complex64::new(0.2, 1e-12));
        let below = shape.kernel_integral(Complex64::new(0.2, -1e-12));
        assert!((above - below - 1.0).norm() < 1e-9);
        let pv = shape.kernel_principal_value(Complex64::new(0.2, 0.0));
        assert!((0.5 * (above + below) - pv).norm() < 1e-9);
    }
}
