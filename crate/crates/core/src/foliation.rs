//! The quasi-trivial family `S_n = U_t {w = t + g_n(t) z}`, `g_n(t) = exp(-1/t^{2n})`.
//!
//! The holomorphic extension `g_n(eta) = exp(-eta^{-2n})` on `Im eta > 0`
//! turns the leaves into a one-parameter family of complex lines
//! `psi_n(zeta, eta) = (zeta, eta + g_n(eta) zeta)`. The set `H_{n,eps}` of
//! parameters whose line meets the center leaf `{w = 0}` within `eps` of
//! the origin reads, in polar coordinates `eta = t e^{i theta}`,
//!
//! ```text
//! t * exp(cos(2 n theta) / t^{2n}) < eps,   0 < theta < pi,
//! ```
//!
//! and has exactly `n` components near the origin, one in each sector
//! `(k pi / n, (k + 1) pi / n)`.

use std::f64::consts::PI;
use std::fmt;
use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{
    check_finite, flood_label, fmt_f64, ComplexPoint, LogComplex, PolarGrid, RegionMask,
    RegionParams,
};

/// Default radius of the neighborhood `|eta| < delta`.
pub const DEFAULT_DELTA: f64 = 0.9;
/// Default lower cutoff of the log-spaced `t` grid.
pub const DEFAULT_T_MIN: f64 = 1e-4;

/// Line-family hypersurface `U_t {w = b0(t) + g(t) z}`.
pub struct LineFamilyHypersurface {
    b0: Box<dyn Fn(f64) -> ComplexPoint + Send + Sync>,
    g: Box<dyn Fn(f64) -> ComplexPoint + Send + Sync>,
}

impl fmt::Debug for LineFamilyHypersurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LineFamilyHypersurface")
            .finish_non_exhaustive()
    }
}

impl LineFamilyHypersurface {
    /// Requires `g(0) = 0` so the leaf through the origin is `{w = b0(0)}`.
    pub fn new<B, G>(b0: B, g: G) -> Result<Self>
    where
        B: Fn(f64) -> ComplexPoint + Send + Sync + 'static,
        G: Fn(f64) -> ComplexPoint + Send + Sync + 'static,
    {
        if g(0.0) != Complex64::new(0.0, 0.0) {
            return Err(Error::InvalidArgument(
                "leaf slope must vanish at t = 0".into(),
            ));
        }
        Ok(Self {
            b0: Box::new(b0),
            g: Box::new(g),
        })
    }

    /// `S_n`: `b0(t) = t`, `g(t) = g_n(t)` (and `g(0) = 0`).
    pub fn half_plane(family: HalfPlaneFamily) -> Self {
        Self {
            b0: Box::new(|t| Complex64::new(t, 0.0)),
            g: Box::new(move |t| {
                if t == 0.0 {
                    return Complex64::new(0.0, 0.0);
                }
                g_n(&family, Complex64::new(t, 0.0))
                    .and_then(|v| v.to_complex())
                    .unwrap_or(Complex64::new(0.0, 0.0))
            }),
        }
    }

    /// The point of the leaf with parameter `t` above `z`.
    pub fn leaf_point(&self, t: f64, z: ComplexPoint) -> ComplexPoint {
        (self.b0)(t) + (self.g)(t) * z
    }

    pub fn slope(&self, t: f64) -> ComplexPoint {
        (self.g)(t)
    }
}

/// The index `n >= 1` of `S_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfPlaneFamily {
    n: u32,
}

impl HalfPlaneFamily {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("family index n must be >= 1".into()));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

/// The rays `alpha_k`, `beta_k` (where `cos(2 n theta) = 0`) and `mu_k`
/// (where it equals 1), `k = 0..n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SectorAngles {
    pub alphas: Vec<f64>,
    pub betas: Vec<f64>,
    pub mus: Vec<f64>,
}

impl SectorAngles {
    pub fn new(family: &HalfPlaneFamily) -> Self {
        let n = family.n as f64;
        let k = 0..family.n;
        Self {
            alphas: k
                .clone()
                .map(|k| PI / (4.0 * n) + k as f64 * PI / n)
                .collect(),
            betas: k
                .clone()
                .map(|k| 3.0 * PI / (4.0 * n) + k as f64 * PI / n)
                .collect(),
            mus: k.map(|k| k as f64 * PI / n).collect(),
        }
    }

    /// Sector `k` is `(mu_k, mu_{k+1})`, with `mu_n = pi`.
    pub fn sector_of(&self, theta: f64) -> Option<usize> {
        if !(theta > 0.0 && theta < PI) {
            return None;
        }
        let n = self.mus.len();
        (0..n).find(|&k| {
            let hi = if k + 1 < n { self.mus[k + 1] } else { PI };
            theta > self.mus[k] && theta < hi
        })
    }
}

/// `cos(2 n theta)`, snapped to 0 when it is below the rounding resolution
/// of the phase `2 n theta`.
pub fn sector_cosine(n: u32, theta: f64) -> f64 {
    let phase = 2.0 * n as f64 * theta;
    let c = phase.cos();
    if c.abs() <= 4.0 * phase.abs() * f64::EPSILON {
        0.0
    } else {
        c
    }
}

/// `g_n(eta) = exp(-eta^{-2n})` in the log domain.
pub fn g_n(family: &HalfPlaneFamily, eta: ComplexPoint) -> Result<LogComplex> {
    check_finite(eta, "eta")?;
    if eta.re == 0.0 && eta.im == 0.0 {
        return Err(Error::EssentialSingularity);
    }
    if eta.im < 0.0 {
        return Err(Error::Domain(format!(
            "g_n is defined for Im eta >= 0, got {eta}"
        )));
    }
    let n = family.n;
    let t = eta.norm();
    let theta = eta.im.atan2(eta.re);
    let inv = (-2.0 * n as f64 * t.ln()).exp();
    let phase = 2.0 * n as f64 * theta;
    // eta^{-2n} = t^{-2n} e^{-2 i n theta}
    let re = sector_cosine(n, theta) * inv;
    let im = -phase.sin() * inv;
    if re.is_nan() || im.is_nan() {
        return Err(Error::NonFinite(format!("eta^(-2n) at {eta}")));
    }
    if re == f64::NEG_INFINITY {
        return Err(Error::Overflow {
            logmag: f64::INFINITY,
        });
    }
    Ok(LogComplex::new(-re, -im))
}

/// `psi_n(zeta, eta) = (zeta, eta + g_n(eta) zeta)`.
pub fn psi(
    family: &HalfPlaneFamily,
    zeta: ComplexPoint,
    eta: ComplexPoint,
) -> Result<(ComplexPoint, ComplexPoint)> {
    check_finite(zeta, "zeta")?;
    let g = g_n(family, eta)?;
    let shift = (g * LogComplex::from_complex(zeta)).to_complex()?;
    Ok((zeta, eta + shift))
}

/// `zeta* = -eta / g_n(eta)`, where the line with parameter `eta` meets `{w = 0}`.
pub fn leaf_center_intersection(family: &HalfPlaneFamily, eta: ComplexPoint) -> Result<LogComplex> {
    check_finite(eta, "eta")?;
    if !(eta.im > 0.0) {
        return Err(Error::Domain(format!(
            "leaf_center_intersection needs Im eta > 0, got {eta}"
        )));
    }
    let g = g_n(family, eta)?;
    Ok(-(LogComplex::from_complex(eta) * g.recip()))
}

/// Membership from precomputed pieces: `ln t + h t^{-2n} < ln eps`.
#[inline]
fn member_from_parts(ln_t: f64, inv_t2n: f64, h: f64, ln_eps: f64) -> bool {
    let term = if h == 0.0 { 0.0 } else { h * inv_t2n };
    ln_t + term < ln_eps
}

/// Whether `eta = t e^{i theta}` belongs to `H_{n,eps} intersected with {|eta| < delta}`.
pub fn h_membership(family: &HalfPlaneFamily, eps: f64, delta: f64, t: f64, theta: f64) -> bool {
    if !(t > 0.0 && t < delta && theta > 0.0 && theta < PI) {
        return false;
    }
    let n = family.n;
    let ln_t = t.ln();
    let inv = (-2.0 * n as f64 * ln_t).exp();
    member_from_parts(ln_t, inv, sector_cosine(n, theta), eps.ln())
}

/// `f_h(t) = t exp(h / t^{2n})`.
pub fn f_h(n: u32, h: f64, t: f64) -> f64 {
    t * (h / t.powi(2 * n as i32)).exp()
}

/// `ln f_h(t) = ln t + h / t^{2n}`, free of underflow.
pub fn log_f_h(n: u32, h: f64, t: f64) -> f64 {
    t.ln() + h * (-2.0 * n as f64 * t.ln()).exp()
}

/// Minimizer `(2 n h)^{1/(2n)}` of `f_h` for `h > 0`.
pub fn critical_t(n: u32, h: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    if !(h > 0.0) {
        return Err(Error::Domain(format!("critical_t needs h > 0, got {h}")));
    }
    let two_n = 2.0 * n as f64;
    Ok((two_n * h).powf(1.0 / two_n))
}

/// `(2n)^{1/(2n)} e^{1/(2n)} = min f_1`; below it the rays `mu_k` miss `H_{n,eps}`.
pub fn eps_threshold(n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let two_n = 2.0 * n as f64;
    Ok(two_n.powf(1.0 / two_n) * (1.0 / two_n).exp())
}

fn check_region_args(eps: f64, delta: f64, grid: &PolarGrid) -> Result<()> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "eps must be positive, got {eps}"
        )));
    }
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "delta must be positive, got {delta}"
        )));
    }
    if *grid.t_values().last().unwrap() >= delta {
        return Err(Error::InvalidArgument(format!(
            "grid t-range must lie below delta = {delta}"
        )));
    }
    Ok(())
}

/// Samples `H_{n,eps}` on `grid`. Rows are evaluated in parallel.
pub fn build_region(
    family: &HalfPlaneFamily,
    eps: f64,
    delta: f64,
    grid: &PolarGrid,
) -> Result<RegionMask> {
    check_region_args(eps, delta, grid)?;
    let n = family.n;
    let ln_eps = eps.ln();
    let cosines: Vec<f64> = grid
        .theta_values()
        .iter()
        .map(|&th| sector_cosine(n, th))
        .collect();
    let cols = cosines.len();
    let mut occupancy = vec![false; grid.t_count() * cols];
    occupancy
        .par_chunks_mut(cols)
        .zip(grid.t_values().par_iter())
        .for_each(|(row, &t)| {
            if t >= delta {
                return;
            }
            let ln_t = t.ln();
            let inv = (-2.0 * n as f64 * ln_t).exp();
            for (cell, &h) in row.iter_mut().zip(&cosines) {
                *cell = member_from_parts(ln_t, inv, h, ln_eps);
            }
        });
    Ok(RegionMask::new(grid.clone(), occupancy)?.with_params(RegionParams { n, eps, delta }))
}

/// Builds and labels the region; returns the labelled mask and its component count.
pub fn labelled_region(
    family: &HalfPlaneFamily,
    eps: f64,
    delta: f64,
    grid: &PolarGrid,
) -> Result<(RegionMask, usize)> {
    Ok(flood_label(&build_region(family, eps, delta, grid)?))
}

/// Number of connected components of the sampled `H_{n,eps}`.
pub fn count_components(
    family: &HalfPlaneFamily,
    eps: f64,
    delta: f64,
    grid: &PolarGrid,
) -> Result<usize> {
    Ok(labelled_region(family, eps, delta, grid)?.1)
}

/// For each label `1..=count`, the sector `(mu_k, mu_{k+1})` containing
/// all of its cells, or `None` if the component crosses a ray `mu_k`.
pub fn component_sectors(mask: &RegionMask, family: &HalfPlaneFamily) -> Vec<Option<usize>> {
    let angles = SectorAngles::new(family);
    let count = mask.max_label() as usize;
    let thetas = mask.grid().theta_values();
    let mut sectors: Vec<Option<Option<usize>>> = vec![None; count];
    for i in 0..mask.rows() {
        for (j, &theta) in thetas.iter().enumerate() {
            let l = mask.label(i, j) as usize;
            if l == 0 {
                continue;
            }
            let s = angles.sector_of(theta);
            sectors[l - 1] = match sectors[l - 1] {
                None => Some(s),
                Some(prev) if prev == s => Some(prev),
                Some(_) => Some(None),
            };
        }
    }
    sectors.into_iter().map(|s| s.flatten()).collect()
}

/// Membership along the ray `theta` at the grid radii.
pub fn ray_profile(
    family: &HalfPlaneFamily,
    eps: f64,
    delta: f64,
    theta: f64,
    t_values: &[f64],
) -> Vec<bool> {
    t_values
        .iter()
        .map(|&t| h_membership(family, eps, delta, t, theta))
        .collect()
}

/// Radii where the ray's membership differs from `t < min(eps, delta)`,
/// ignoring the single radius nearest that boundary.
pub fn ray_violations(
    family: &HalfPlaneFamily,
    eps: f64,
    delta: f64,
    theta: f64,
    t_values: &[f64],
) -> Vec<f64> {
    let bound = eps.min(delta);
    let edge = t_values.partition_point(|&t| t < bound);
    ray_profile(family, eps, delta, theta, t_values)
        .into_iter()
        .enumerate()
        .filter(|&(i, member)| member != (t_values[i] < bound) && i + 1 != edge && i != edge)
        .map(|(i, _)| t_values[i])
        .collect()
}

/// One row of the component summary CSV.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComponentSummary {
    pub n: u32,
    pub eps: f64,
    pub delta: f64,
    pub grid_t: usize,
    pub grid_theta: usize,
    pub components: usize,
}

/// Writes `n,eps,delta,grid_t,grid_theta,components`.
pub fn write_component_csv<W: Write>(mut out: W, rows: &[ComponentSummary]) -> Result<()> {
    out.write_all(b"n,eps,delta,grid_t,grid_theta,components\n")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n,
            fmt_f64(r.eps),
            fmt_f64(r.delta),
            r.grid_t,
            r.grid_theta,
            r.components
        )?;
    }
    Ok(())
}

/// SVG of the mask in `(theta, log t)` pixel coordinates with the sector
/// rays drawn on top: `alpha_k` green, `beta_k` blue, `mu_k` red.
pub fn sector_overlay_svg(mask: &RegionMask, family: &HalfPlaneFamily) -> String {
    let (rows, cols) = (mask.rows(), mask.cols());
    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{cols}\" height=\"{rows}\" viewBox=\"0 0 {cols} {rows}\">\n"
    ));
    s.push_str(&format!(
        "<rect width=\"{cols}\" height=\"{rows}\" fill=\"black\"/>\n<g fill=\"white\">\n"
    ));
    for i in 0..rows {
        let mut j = 0;
        while j < cols {
            if !mask.occupied(i, j) {
                j += 1;
                continue;
            }
            let start = j;
            while j < cols && mask.occupied(i, j) {
                j += 1;
            }
            s.push_str(&format!(
                "<rect x=\"{start}\" y=\"{i}\" width=\"{}\" height=\"1\"/>\n",
                j - start
            ));
        }
    }
    s.push_str("</g>\n");
    let angles = SectorAngles::new(family);
    let x_of = |theta: f64| theta / PI * cols as f64;
    for (set, color) in [
        (&angles.alphas, "green"),
        (&angles.betas, "blue"),
        (&angles.mus, "red"),
    ] {
        for &theta in set.iter() {
            let x = x_of(theta);
            s.push_str(&format!(
                "<line x1=\"{x:.3}\" y1=\"0\" x2=\"{x:.3}\" y2=\"{rows}\" stroke=\"{color}\" stroke-width=\"1\"/>\n"
            ));
        }
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: u32) -> HalfPlaneFamily {
        HalfPlaneFamily::new(n).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn g_n_values() {
        let v = g_n(&fam(1), c(1.0, 0.0)).unwrap();
        assert!((v.modulus() - (-1f64).exp()).abs() < 1e-15);
        let v = g_n(&fam(1), c(0.1, 0.0)).unwrap();
        assert!((v.logmag() + 100.0).abs() < 1e-9);
        let v = g_n(&fam(1), c(0.0, 1.0)).unwrap().to_complex().unwrap();
        assert!((v - c(std::f64::consts::E, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn g_n_errors() {
        assert!(matches!(
            g_n(&fam(2), c(0.0, 0.0)),
            Err(Error::EssentialSingularity)
        ));
        assert!(matches!(g_n(&fam(2), c(0.1, -0.1)), Err(Error::Domain(_))));
        assert!(HalfPlaneFamily::new(0).is_err());
    }

    #[test]
    fn psi_values() {
        let f = fam(1);
        let eta = c(0.2, 0.3);
        assert_eq!(psi(&f, c(0.0, 0.0), eta).unwrap(), (c(0.0, 0.0), eta));
        let (z, w) = psi(&f, c(1.0, 0.0), c(0.0, 1.0)).unwrap();
        assert_eq!(z, c(1.0, 0.0));
        assert!((w - c(std::f64::consts::E, 1.0)).norm() < 1e-14);

        let (z1, z2) = (c(0.3, -0.2), c(-1.1, 0.4));
        let lin = psi(&f, z1 + z2, eta).unwrap().1
            - psi(&f, z1, eta).unwrap().1
            - psi(&f, z2, eta).unwrap().1
            + psi(&f, c(0.0, 0.0), eta).unwrap().1;
        assert!(lin.norm() < 1e-12);
    }

    #[test]
    fn psi_overflow_reports_magnitude() {
        // g_1(0.05 i) = exp(400)
        match psi(&fam(1), c(1e200, 0.0), c(0.0, 0.05)) {
            Err(Error::Overflow { logmag }) => assert!(logmag > 700.0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn center_intersection() {
        let f = fam(1);
        let eta = Complex64::from_polar(0.5, PI / 4.0);
        let z = leaf_center_intersection(&f, eta).unwrap();
        assert!((z.modulus() - 0.5).abs() < 1e-14);
        let z = leaf_center_intersection(&f, c(0.0, 0.5)).unwrap();
        assert!((z.modulus() - 0.5 * (-4f64).exp()).abs() < 1e-15);
        assert!((0.5 * (-4f64).exp() - 0.009158).abs() < 1e-6);

        for &(n, eta) in &[
            (1, c(0.3, 0.4)),
            (2, c(-0.5, 0.6)),
            (3, c(0.1, 0.9)),
            (2, c(0.0, 0.7)),
        ] {
            let f = fam(n);
            let zs = leaf_center_intersection(&f, eta).unwrap();
            if zs.modulus() <= 1e6 {
                let (_, w) = psi(&f, zs.to_complex().unwrap(), eta).unwrap();
                assert!(w.norm() < 1e-12, "n={n} eta={eta}: {w}");
            }
        }
        assert!(leaf_center_intersection(&f, c(0.5, 0.0)).is_err());
    }

    #[test]
    fn line_family_surfaces() {
        let s = LineFamilyHypersurface::half_plane(fam(1));
        assert_eq!(s.slope(0.0), c(0.0, 0.0));
        assert!((s.slope(1.0).re - (-1f64).exp()).abs() < 1e-15);
        assert_eq!(s.leaf_point(0.0, c(5.0, 5.0)), c(0.0, 0.0));
        assert!(LineFamilyHypersurface::new(|t| c(t, 0.0), |_| c(1.0, 0.0)).is_err());
    }

    #[test]
    fn membership_on_alpha_rays() {
        for n in 1..=6 {
            let f = fam(n);
            let angles = SectorAngles::new(&f);
            for &theta in angles.alphas.iter().chain(&angles.betas) {
                for &t in &[1e-4, 1e-3, 0.01, 0.049, 0.051, 0.2] {
                    assert_eq!(
                        h_membership(&f, 0.05, 0.9, t, theta),
                        t < 0.05,
                        "n={n} t={t} theta={theta}"
                    );
                }
            }
        }
    }

    #[test]
    fn mu_rays_are_empty_below_threshold() {
        let f = fam(2);
        for k in 0..200 {
            let t = 1e-4 * (1.05f64).powi(k);
            assert!(!h_membership(&f, 0.05, 0.9, t, PI / 2.0));
        }
    }

    #[test]
    fn membership_is_periodic_in_theta() {
        let f = fam(3);
        let period = PI / 3.0;
        for i in 0..50 {
            let theta = 0.01 + i as f64 * (period - 0.02) / 49.0;
            for &t in &[0.01, 0.03, 0.06, 0.1] {
                let a = h_membership(&f, 0.05, 0.9, t, theta);
                let mut shifted = theta + period;
                while shifted < PI {
                    assert_eq!(a, h_membership(&f, 0.05, 0.9, t, shifted));
                    shifted += period;
                }
            }
        }
    }

    #[test]
    fn f_h_profile() {
        let t1 = critical_t(1, 1.0).unwrap();
        assert!((t1 - 2f64.sqrt()).abs() < 1e-15);
        assert!((f_h(1, 1.0, t1) - 2.331_643_981_597_124).abs() < 1e-12);
        let mut prev = f64::NEG_INFINITY;
        for k in 0..=300 {
            let t = 0.01 * (1000f64).powf(k as f64 / 300.0);
            let v = log_f_h(1, -0.5, t);
            assert!(v > prev);
            assert!((v.exp() - f_h(1, -0.5, t)).abs() <= 1e-14 * t);
            prev = v;
        }
        let tc = critical_t(2, 0.5).unwrap();
        let step = 1e-5;
        let d = (f_h(2, 0.5, tc + step) - f_h(2, 0.5, tc - step)) / (2.0 * step);
        assert!(d.abs() <= 1e-6 * f_h(2, 0.5, tc));
        assert!(critical_t(1, -0.1).is_err());
    }

    #[test]
    fn thresholds() {
        assert!((eps_threshold(1).unwrap() - 2.331_643_981_597_124).abs() < 1e-12);
        assert!((eps_threshold(2).unwrap() - 1.8158).abs() < 1e-4);
        assert!((eps_threshold(50).unwrap() - 1.057).abs() < 1e-3);
        let mut prev = f64::INFINITY;
        for n in 1..60 {
            let v = eps_threshold(n).unwrap();
            assert!(v < prev && v > 1.0);
            prev = v;
        }
    }

    #[test]
    fn region_monotone_in_eps() {
        let grid = PolarGrid::log_polar(1e-4, 0.9, 120, 120).unwrap();
        let f = fam(2);
        let small = build_region(&f, 0.02, 0.9, &grid).unwrap();
        let large = build_region(&f, 0.05, 0.9, &grid).unwrap();
        for (a, b) in small.occupancy().iter().zip(large.occupancy()) {
            assert!(!a || *b);
        }
    }

    #[test]
    fn region_stays_nonempty_for_tiny_eps() {
        // f_h(t) -> 0 as t -> 0 whenever cos(2 n theta) < 0
        let grid = PolarGrid::log_polar(1e-4, 0.9, 200, 200).unwrap();
        let (mask, count) = labelled_region(&fam(1), 1e-300, 0.9, &grid).unwrap();
        assert!(mask.occupied_count() > 0);
        assert_eq!(count, 1);
    }

    #[test]
    fn region_on_the_imaginary_axis() {
        let grid = PolarGrid::log_polar(1e-4, 0.9, 300, 301).unwrap();
        let mask = build_region(&fam(1), 0.05, 0.9, &grid).unwrap();
        let j = grid.nearest_theta(PI / 2.0);
        assert!((grid.theta_values()[j] - PI / 2.0).abs() < 1e-15);
        for (i, &t) in grid.t_values().iter().enumerate() {
            if t < 0.05 * std::f64::consts::E {
                assert!(mask.occupied(i, j));
            }
        }
    }

    #[test]
    fn small_grid_counts() {
        let grid = PolarGrid::log_polar(1e-4, 0.9, 400, 400).unwrap();
        for n in 1..=4 {
            assert_eq!(
                count_components(&fam(n), 0.05, 0.9, &grid).unwrap(),
                n as usize
            );
        }
    }

    #[test]
    fn region_argument_checks() {
        let grid = PolarGrid::log_polar(1e-4, 0.9, 10, 10).unwrap();
        assert!(build_region(&fam(1), 0.05, 0.5, &grid).is_err());
        assert!(build_region(&fam(1), 0.0, 0.9, &grid).is_err());
        assert!(build_region(&fam(1), f64::NAN, 0.9, &grid).is_err());
    }

    #[test]
    fn sector_lookup() {
        let a = SectorAngles::new(&fam(3));
        assert_eq!(a.sector_of(0.1), Some(0));
        assert_eq!(a.sector_of(PI / 3.0 + 0.01), Some(1));
        assert_eq!(a.sector_of(PI - 0.01), Some(2));
        assert_eq!(a.sector_of(PI / 3.0), None);
        for k in 0..3 {
            assert!(a.mus[k] < a.alphas[k] && a.alphas[k] < a.betas[k]);
            let next = if k + 1 < 3 { a.mus[k + 1] } else { PI };
            assert!(a.betas[k] < next);
        }
    }

    #[test]
    fn summary_csv() {
        let mut buf = Vec::new();
        write_component_csv(
            &mut buf,
            &[ComponentSummary {
                n: 4,
                eps: 0.05,
                delta: 0.9,
                grid_t: 1600,
                grid_theta: 1600,
                components: 4,
            }],
        )
        .unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,eps,delta,grid_t,grid_theta,components\n4,5.0000000000000003e-2,9.0000000000000002e-1,1600,1600,4\n"
        );
    }

    #[test]
    fn overlay_has_rays() {
        let grid = PolarGrid::log_polar(1e-4, 0.9, 20, 30).unwrap();
        let mask = build_region(&fam(2), 0.05, 0.9, &grid).unwrap();
        let svg = sector_overlay_svg(&mask, &fam(2));
        assert_eq!(svg.matches("<line").count(), 6);
        assert!(svg.starts_with("<svg"));
    }
}
