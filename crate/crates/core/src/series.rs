//! Coefficient families of the non-analytic line-family counterexample and
//! their convergence diagnostics.
//!
//! `a_0(w) = w` and `a_n(w) = (i / (w - i))^{n^2}` for `n >= 1`. On the real
//! axis `|a_n| <= 1`, but at `w = iv`, `0 < v < 1`, `|a_n(iv)| = (1 - v)^{-n^2}`,
//! so `sum a_n(iv) z^n` has radius of convergence zero. The symmetrized
//! family `b_n` is real on the real axis and inherits the blow-up.

use std::f64::consts::{FRAC_PI_2, SQRT_2};
use std::fmt;
use std::io::{BufRead, Write};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::{check_finite, fmt_f64, ComplexPoint, LogComplex};

type EvalFn = dyn Fn(u32, ComplexPoint) -> Result<LogComplex> + Send + Sync;

/// A rule `n -> (w -> coefficient)` evaluated in the log domain.
pub struct CoefficientFamily {
    name: String,
    eval: Box<EvalFn>,
    singular_points: Vec<ComplexPoint>,
}

impl fmt::Debug for CoefficientFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoefficientFamily")
            .field("name", &self.name)
            .field("singular_points", &self.singular_points)
            .finish()
    }
}

impl CoefficientFamily {
    pub fn new<F>(name: impl Into<String>, singular_points: Vec<ComplexPoint>, eval: F) -> Self
    where
        F: Fn(u32, ComplexPoint) -> Result<LogComplex> + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            eval: Box::new(eval),
            singular_points,
        }
    }

    /// The family `a_n`.
    pub fn counterexample_a() -> Self {
        Self::new("a", vec![Complex64::i()], eval_a)
    }

    /// The family `b_n`; `b_0(w) = -i w` follows from the same formula.
    pub fn counterexample_b() -> Self {
        Self::new("b", vec![Complex64::i(), -Complex64::i()], |n, w| {
            if n == 0 {
                Ok(LogComplex::from_complex(-Complex64::i() * w))
            } else {
                eval_b(n, w)
            }
        })
    }

    /// `a_n = ratio^n`, independent of the point.
    pub fn geometric(ratio: f64) -> Self {
        Self::new(format!("geometric({ratio})"), vec![], move |n, _| {
            Ok(LogComplex::from_real(ratio).powi(n as i64))
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn singular_points(&self) -> &[ComplexPoint] {
        &self.singular_points
    }

    pub fn eval(&self, n: u32, w: ComplexPoint) -> Result<LogComplex> {
        check_finite(w, "w")?;
        if self.singular_points.contains(&w) {
            return Err(Error::SingularPoint { point: w });
        }
        (self.eval)(n, w)
    }
}

/// `i / (w - i)` in log-polar form.
fn a_base(w: ComplexPoint) -> Result<LogComplex> {
    let d = w - Complex64::i();
    if d.re == 0.0 && d.im == 0.0 {
        return Err(Error::SingularPoint { point: w });
    }
    Ok(LogComplex::new(
        -d.norm().ln(),
        FRAC_PI_2 - d.im.atan2(d.re),
    ))
}

/// `a_n(w)`: `w` itself for `n = 0`, otherwise `(i/(w - i))^{n^2}` as
/// `n^2 * log(i/(w - i))`.
pub fn eval_a(n: u32, w: ComplexPoint) -> Result<LogComplex> {
    check_finite(w, "w")?;
    if n == 0 {
        return Ok(LogComplex::from_complex(w));
    }
    let nn = n as f64;
    Ok(a_base(w)?.powf(nn * nn))
}

/// `b_n(w) = (a_n(w) + a_n(-w))/2 - i (a_n(w) - a_n(-w))/2`.
///
/// On the real axis `a_n(-u) = conj(a_n(u))`, so `b_n(u) = Re a_n(u) + Im a_n(u)`
/// and the result is returned exactly real.
pub fn eval_b(n: u32, w: ComplexPoint) -> Result<LogComplex> {
    check_finite(w, "w")?;
    if n == 0 {
        return Err(Error::InvalidArgument("eval_b requires n >= 1".into()));
    }
    if w == Complex64::i() || w == -Complex64::i() {
        return Err(Error::SingularPoint { point: w });
    }
    let a = eval_a(n, w)?;
    if w.im == 0.0 {
        let s = a.arg().cos() + a.arg().sin();
        if s == 0.0 || a.is_zero() {
            return Ok(LogComplex::ZERO);
        }
        let arg = if s > 0.0 { 0.0 } else { std::f64::consts::PI };
        return Ok(LogComplex::new(a.logmag() + s.abs().ln(), arg));
    }
    let a_neg = eval_a(n, -w)?;
    let plus = a.scale(Complex64::new(0.5, -0.5));
    let minus = a_neg.scale(Complex64::new(0.5, 0.5));
    Ok(plus.add(&minus))
}

/// Cauchy-Hadamard radius estimate `1 / max |a_n(w)|^{1/n}` over the tail
/// window `ceil(N/2) <= n <= N`. Returns `+inf` if every sampled coefficient
/// is zero.
pub fn radius_estimate(family: &CoefficientFamily, w: ComplexPoint, n_max: u32) -> Result<f64> {
    if n_max < 4 {
        return Err(Error::InvalidArgument(format!(
            "radius_estimate needs N >= 4, got {n_max}"
        )));
    }
    let lo = n_max.div_ceil(2);
    let mut best = f64::NEG_INFINITY;
    for n in lo..=n_max {
        let c = family.eval(n, w)?;
        if c.logmag().is_nan() {
            return Err(Error::NonFinite(format!("coefficient {n} at {w}")));
        }
        best = best.max(c.logmag() / n as f64);
    }
    if best == f64::NEG_INFINITY {
        return Ok(f64::INFINITY);
    }
    Ok((-best).exp())
}

/// One row of a radius sweep: `|a_n(w)|` and `|a_n(w)|^{1/n}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadiusRow {
    pub n: u32,
    pub logmag: f64,
    pub root_n_modulus: f64,
}

pub fn radius_sweep(
    family: &CoefficientFamily,
    w: ComplexPoint,
    n_max: u32,
) -> Result<Vec<RadiusRow>> {
    (1..=n_max)
        .map(|n| {
            let c = family.eval(n, w)?;
            Ok(RadiusRow {
                n,
                logmag: c.logmag(),
                root_n_modulus: (c.logmag() / n as f64).exp(),
            })
        })
        .collect()
}

/// Writes `n,logmag,root_n_modulus`.
pub fn write_radius_csv<W: Write>(mut out: W, rows: &[RadiusRow]) -> Result<()> {
    out.write_all(b"n,logmag,root_n_modulus\n")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{}",
            r.n,
            fmt_f64(r.logmag),
            fmt_f64(r.root_n_modulus)
        )?;
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormEntry {
    pub k: u32,
    pub norm_gamma: f64,
    pub norm_w: f64,
}

/// Sup norms `||a_k||_gamma` and `||a_k||_W` for increasing `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormTable {
    entries: Vec<NormEntry>,
}

impl NormTable {
    pub fn new(entries: Vec<NormEntry>) -> Result<Self> {
        if entries.windows(2).any(|e| e[1].k <= e[0].k) {
            return Err(Error::InvalidArgument(
                "norm table k must be strictly increasing".into(),
            ));
        }
        for e in &entries {
            if e.k == 0 {
                return Err(Error::InvalidArgument("norm table k starts at 1".into()));
            }
            for v in [e.norm_gamma, e.norm_w] {
                if !(v.is_finite() && v > 0.0) {
                    return Err(Error::InvalidArgument(format!(
                        "norms must be positive and finite (k = {}, got {v})",
                        e.k
                    )));
                }
            }
        }
        Ok(Self { entries })
    }

    /// Sup norms of `family` over the two sample sets, for `k = 1..=k_max`.
    pub fn from_samples(
        family: &CoefficientFamily,
        gamma: &[ComplexPoint],
        w_set: &[ComplexPoint],
        k_max: u32,
    ) -> Result<Self> {
        if gamma.is_empty() || w_set.is_empty() {
            return Err(Error::InvalidArgument(
                "sample sets must be nonempty".into(),
            ));
        }
        let sup = |k: u32, pts: &[ComplexPoint]| -> Result<f64> {
            let mut best = f64::NEG_INFINITY;
            for &p in pts {
                best = best.max(family.eval(k, p)?.logmag());
            }
            let v = best.exp();
            if !v.is_finite() {
                return Err(Error::Overflow { logmag: best });
            }
            Ok(v)
        };
        let entries = (1..=k_max)
            .map(|k| {
                Ok(NormEntry {
                    k,
                    norm_gamma: sup(k, gamma)?,
                    norm_w: sup(k, w_set)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    pub fn entries(&self) -> &[NormEntry] {
        &self.entries
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        out.write_all(b"k,norm_gamma,norm_W\n")?;
        for e in &self.entries {
            writeln!(
                out,
                "{},{},{}",
                e.k,
                fmt_f64(e.norm_gamma),
                fmt_f64(e.norm_w)
            )?;
        }
        Ok(())
    }

    pub fn read_csv<R: BufRead>(input: R) -> Result<Self> {
        let mut lines = input.lines();
        let header = lines.next().transpose()?.unwrap_or_default();
        if header.trim() != "k,norm_gamma,norm_W" {
            return Err(Error::Parse(format!("unexpected header {header:?}")));
        }
        let mut entries = Vec::new();
        for (lineno, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != 3 {
                return Err(Error::Parse(format!(
                    "line {}: expected 3 fields",
                    lineno + 2
                )));
            }
            let bad = |f: &str| Error::Parse(format!("line {}: bad number {f:?}", lineno + 2));
            entries.push(NormEntry {
                k: fields[0].parse().map_err(|_| bad(fields[0]))?,
                norm_gamma: fields[1].parse().map_err(|_| bad(fields[1]))?,
                norm_w: fields[2].parse().map_err(|_| bad(fields[2]))?,
            });
        }
        Self::new(entries)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthTrend {
    Bounded,
    Diverging,
}

impl fmt::Display for GrowthTrend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrowthTrend::Bounded => "bounded",
            GrowthTrend::Diverging => "diverging",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthFit {
    pub c_estimate: f64,
    pub trend: GrowthTrend,
    /// `(norm_W / norm_gamma)^{1/k}` per table entry.
    pub ratios: Vec<f64>,
}

/// Fits `||a_k||_W <= C^k ||a_k||_gamma`: `C` is the largest per-k root
/// ratio, and the trend is diverging when that ratio grows by more than a
/// factor 2 from the first to the last `k`.
pub fn growth_fit(table: &NormTable) -> Result<GrowthFit> {
    let entries = table.entries();
    if entries.is_empty() {
        return Err(Error::InvalidArgument(
            "growth_fit needs a nonempty table".into(),
        ));
    }
    let mut ratios = Vec::with_capacity(entries.len());
    for e in entries {
        if !(e.norm_gamma > 0.0 && e.norm_w > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "non-positive norm at k = {}",
                e.k
            )));
        }
        ratios.push(((e.norm_w.ln() - e.norm_gamma.ln()) / e.k as f64).exp());
    }
    let c_estimate = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let trend = if ratios[ratios.len() - 1] > 2.0 * ratios[0] {
        GrowthTrend::Diverging
    } else {
        GrowthTrend::Bounded
    };
    Ok(GrowthFit {
        c_estimate,
        trend,
        ratios,
    })
}

/// Tolerance of the reality check in [`schwarz_reflect`].
pub const REALITY_TOL: f64 = 1e-8;

/// Extends `f`, holomorphic on the closed upper half-plane and real on the
/// real axis, to `z` in the lower half-plane by `conj(f(conj z))`.
pub fn schwarz_reflect<F>(f: F, z: ComplexPoint) -> Result<ComplexPoint>
where
    F: Fn(ComplexPoint) -> ComplexPoint,
{
    check_finite(z, "z")?;
    if z.im >= 0.0 {
        return Err(Error::Domain(format!(
            "schwarz_reflect expects Im z < 0, got {z}"
        )));
    }
    let axis = Complex64::new(z.re, 0.0);
    let on_axis = f(axis);
    if on_axis.im.abs() > REALITY_TOL * on_axis.re.abs().max(1.0) {
        return Err(Error::RealityCheck {
            point: z.re,
            imag: on_axis.im.abs(),
        });
    }
    check_finite(f(z.conj()).conj(), "f(conj z)")
}

/// Upper bound `|b_n(u)| <= sqrt 2` on the real axis.
pub const B_REAL_AXIS_BOUND: f64 = SQRT_2;
