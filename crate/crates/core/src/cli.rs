//! The `leviflat` command-line front end.
//!
//! Exit codes: 0 success, 2 assertion failure, 64 usage error, 65 domain
//! error (singular point, essential singularity, ...), 74 I/O error.
//!
//! Every subcommand accepts `--config file.json`; its keys mirror the flag
//! names (`"grid-t": 800`, `"eps": [0.02, 0.05]`, `"assert-paper": true`)
//! and flags given on the command line take precedence.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::Path;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::foliation::{
    component_sectors, labelled_region, ray_violations, sector_overlay_svg, write_component_csv,
    ComponentSummary, HalfPlaneFamily, SectorAngles,
};
use crate::geometry::{
    fmt_f64, make_circle, make_segment, Cutoff, CutoffWindow, PgmMode, PolarGrid, RegionMask,
};
use crate::plemelj::{circle_test_params, jump_residual, morera_loop_integral, BoundaryFunction};
use crate::series::{
    growth_fit, radius_estimate, radius_sweep, write_radius_csv, CoefficientFamily, NormTable,
    B_REAL_AXIS_BOUND,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DOMAIN: i32 = 65;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Parser)]
#[command(
    name = "leviflat",
    version,
    about = "Levi-flat germ numerics",
    args_override_self = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count the components of H_{n,eps} over an (n, eps) lattice.
    Components(ComponentsArgs),
    /// Check the jump of the Cauchy transform on preset curves.
    Plemelj(PlemeljArgs),
    /// Coefficient tables, radius estimates and growth fits.
    Series(SeriesArgs),
    /// Loop integrals of preset functions over circles.
    Morera(MoreraArgs),
    /// Write the sampled region as PGM (and optionally SVG).
    RegionMask(RegionMaskArgs),
}

#[derive(Debug, Args)]
struct GridArgs {
    /// Neighborhood radius.
    #[arg(long, default_value_t = 0.9)]
    delta: f64,
    /// Grid size in both t and theta.
    #[arg(long, default_value_t = 1600)]
    res: usize,
    /// Number of log-spaced radii (overrides --res).
    #[arg(long)]
    grid_t: Option<usize>,
    /// Number of angles (overrides --res).
    #[arg(long)]
    grid_theta: Option<usize>,
    /// Smallest sampled radius.
    #[arg(long, default_value_t = 1e-4)]
    t_min: f64,
}

impl GridArgs {
    fn grid(&self) -> Result<PolarGrid> {
        let rows = self.grid_t.unwrap_or(self.res);
        let cols = self.grid_theta.unwrap_or(self.res);
        if rows < 2 || cols < 2 {
            return Err(Error::InvalidArgument(
                "grid sizes must be at least 2".into(),
            ));
        }
        if !(self.delta > 0.0 && self.delta.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "--delta must be positive, got {}",
                self.delta
            )));
        }
        if !(self.t_min > 0.0 && self.t_min < self.delta) {
            return Err(Error::InvalidArgument(format!(
                "--t-min must lie in (0, delta), got {}",
                self.t_min
            )));
        }
        PolarGrid::log_polar(self.t_min, self.delta, rows, cols)
    }
}

#[derive(Debug, Args)]
struct ComponentsArgs {
    /// Comma-separated family indices.
    #[arg(long, default_value = "1")]
    n: String,
    /// Comma-separated values of eps.
    #[arg(long, default_value = "0.05")]
    eps: String,
    /// Comma-separated eps values; replaces --eps.
    #[arg(long)]
    sweep_eps: Option<String>,
    #[command(flatten)]
    grid: GridArgs,
    /// Exit 2 unless every count equals n.
    #[arg(long)]
    assert_paper: bool,
    /// Output path prefix for the CSV and masks.
    #[arg(long)]
    out: Option<String>,
    /// Skip writing PGM masks.
    #[arg(long)]
    no_pgm: bool,
    /// Also write an SVG overlay of the sector rays per mask.
    #[arg(long)]
    svg: bool,
}

#[derive(Debug, Args)]
struct RegionMaskArgs {
    #[arg(long, default_value_t = 1)]
    n: u32,
    #[arg(long, default_value_t = 0.05)]
    eps: f64,
    #[command(flatten)]
    grid: GridArgs,
    /// Output path prefix.
    #[arg(long, default_value = "")]
    out: String,
    /// Also write the component labels as a PGM.
    #[arg(long)]
    labels: bool,
    /// Also write an SVG overlay of the sector rays.
    #[arg(long)]
    svg: bool,
    /// Exit 2 if a component crosses a ray mu_k or the rays misbehave.
    #[arg(long)]
    check_sectors: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum PlemeljPreset {
    CirclePoly,
    CircleInv,
    CircleExp,
    Zero,
    ArcBump,
}

#[derive(Debug, Args)]
struct PlemeljArgs {
    #[arg(long, value_enum, default_value_t = PlemeljPreset::CirclePoly)]
    preset: PlemeljPreset,
    /// Node count of the reported run (default 4096, 8192 for arc-bump).
    #[arg(long)]
    nodes: Option<usize>,
    /// Number of boundary test points.
    #[arg(long, default_value_t = 32)]
    points: usize,
    /// Comma-separated node counts for a convergence table.
    #[arg(long)]
    convergence: Option<String>,
    /// Exit 2 if the maximal residual exceeds this value.
    #[arg(long)]
    tol: Option<f64>,
    /// Output path prefix; writes jump.csv and convergence.csv.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum FamilyName {
    A,
    B,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("mode").args(["at", "real_axis", "imag_axis", "growth_k"])))]
struct SeriesArgs {
    #[arg(long, value_enum, default_value_t = FamilyName::A)]
    family: FamilyName,
    /// Point w for the radius sweep, e.g. `0.5i` or `0.2+0.3i`.
    #[arg(long, allow_hyphen_values = true)]
    at: Option<String>,
    /// Largest coefficient index.
    #[arg(long = "N", default_value_t = 12)]
    n_max: u32,
    /// Tabulate |c_n(u)| for real u in `lo..hi`.
    #[arg(long, allow_hyphen_values = true)]
    real_axis: Option<String>,
    /// Tabulate |c_n(iv)| for v in `lo..hi`.
    #[arg(long, allow_hyphen_values = true)]
    imag_axis: Option<String>,
    /// Number of axis samples.
    #[arg(long, default_value_t = 1001)]
    samples: usize,
    /// Exit 2 if a real-axis coefficient exceeds its bound (1 for a, sqrt 2 for b).
    #[arg(long)]
    check_bounds: bool,
    /// Fit sup-norm growth up to this k.
    #[arg(long)]
    growth_k: Option<u32>,
    /// Comma-separated points of the set W for the growth fit.
    #[arg(long, default_value = "0.5i,0.25i,0.1i")]
    w_points: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum MoreraPreset {
    Square,
    Conj,
    PoleOutside,
    PoleInside,
}

#[derive(Debug, Args)]
struct MoreraArgs {
    #[arg(long, value_enum, default_value_t = MoreraPreset::Square)]
    preset: MoreraPreset,
    /// Comma-separated loop radii.
    #[arg(long, default_value = "0.5,1,2")]
    radius: String,
    #[arg(long, default_value_t = 256)]
    nodes: usize,
    /// Exit 2 if any loop integral exceeds this value.
    #[arg(long)]
    tol: Option<f64>,
}

/// Outcome of a subcommand that ran to completion.
enum Outcome {
    Ok,
    AssertionFailed(String),
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let args = match expand_config(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "leviflat: {e}");
            return exit_code(&e);
        }
    };
    let usage = usage_for(&args);
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let rendered = e.render().to_string();
                    let _ = write!(err, "{rendered}");
                    if !rendered.contains("Usage:") {
                        let _ = writeln!(err, "\n{usage}");
                    }
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Components(a) => cmd_components(&a, out, err),
        Command::Plemelj(a) => cmd_plemelj(&a, out, err),
        Command::Series(a) => cmd_series(&a, out, err),
        Command::Morera(a) => cmd_morera(&a, out),
        Command::RegionMask(a) => cmd_region_mask(&a, out, err),
    };
    match result {
        Ok(Outcome::Ok) => EXIT_OK,
        Ok(Outcome::AssertionFailed(msg)) => {
            let _ = writeln!(err, "leviflat: assertion failed: {msg}");
            EXIT_ASSERTION
        }
        Err(e) => {
            let _ = writeln!(err, "leviflat: {e}");
            let code = exit_code(&e);
            if code == EXIT_USAGE {
                let _ = writeln!(err, "\n{usage}");
            }
            code
        }
    }
}

/// Usage text of the subcommand named in `args`, or of the whole program.
fn usage_for(args: &[OsString]) -> String {
    let mut cmd = Cli::command();
    let name = args
        .get(1)
        .map(|a| a.to_string_lossy().into_owned())
        .unwrap_or_default();
    match cmd.find_subcommand_mut(&name) {
        Some(sub) => sub
            .clone()
            .bin_name(format!("leviflat {name}"))
            .render_usage()
            .to_string(),
        None => cmd.render_usage().to_string(),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) | Error::Parse(_) => EXIT_USAGE,
        Error::Io(_) => EXIT_IO,
        _ => EXIT_DOMAIN,
    }
}

/// Replaces `--config path` by the flags stored in the file, placed right
/// after the subcommand so that later command-line flags override them.
fn expand_config(args: Vec<OsString>) -> Result<Vec<OsString>> {
    let pos = args
        .iter()
        .position(|a| a == "--config" || a.to_string_lossy().starts_with("--config="));
    let Some(pos) = pos else {
        return Ok(args);
    };
    let mut args = args;
    let flag = args.remove(pos).to_string_lossy().into_owned();
    let path = match flag.strip_prefix("--config=") {
        Some(p) => p.to_owned(),
        None => {
            if pos >= args.len() {
                return Err(Error::InvalidArgument("--config needs a path".into()));
            }
            args.remove(pos).to_string_lossy().into_owned()
        }
    };
    let text = fs::read_to_string(&path)?;
    let json: Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    let Value::Object(map) = json else {
        return Err(Error::Parse(format!("{path}: expected a JSON object")));
    };
    let mut injected = Vec::new();
    for (key, value) in map {
        let flag = format!("--{}", key.replace('_', "-"));
        let text = match value {
            Value::Null | Value::Bool(false) => continue,
            Value::Bool(true) => {
                injected.push(OsString::from(flag));
                continue;
            }
            Value::Array(items) => items
                .iter()
                .map(scalar_text)
                .collect::<Result<Vec<_>>>()?
                .join(","),
            other => scalar_text(&other)?,
        };
        injected.push(OsString::from(flag));
        injected.push(OsString::from(text));
    }
    let sub = args
        .iter()
        .skip(1)
        .position(|a| !a.to_string_lossy().starts_with('-'))
        .map(|i| i + 2)
        .unwrap_or(args.len());
    args.splice(sub..sub, injected);
    Ok(args)
}

fn scalar_text(v: &Value) -> Result<String> {
    match v {
        Value::Number(n) => Ok(n.to_string()),
        Value::String(s) => Ok(s.clone()),
        other => Err(Error::Parse(format!("unsupported config value {other}"))),
    }
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>> {
    let items = text
        .split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<T>()
                .map_err(|_| Error::InvalidArgument(format!("bad {what} value {s:?}")))
        })
        .collect::<Result<Vec<T>>>()?;
    if items.is_empty() {
        return Err(Error::InvalidArgument(format!("empty {what} list")));
    }
    Ok(items)
}

/// Parses `lo..hi`.
fn parse_range(text: &str) -> Result<(f64, f64)> {
    let bad = || Error::InvalidArgument(format!("expected lo..hi, got {text:?}"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// Parses complex literals such as `2`, `i`, `-0.5i`, `0.2+0.3i`, `1e-3-2i`.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::InvalidArgument(format!("cannot parse complex number {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    let imag_coef = |t: &str| -> Result<f64> {
        match t {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            t => t.parse().map_err(|_| bad()),
        }
    };
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex64::new(s.parse().map_err(|_| bad())?, 0.0));
    };
    // split at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let z = match split {
        Some(k) => Complex64::new(
            body[..k].parse().map_err(|_| bad())?,
            imag_coef(&body[k..])?,
        ),
        None => Complex64::new(0.0, imag_coef(body)?),
    };
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(bad());
    }
    Ok(z)
}

fn write_file(path: &str, bytes: &[u8]) -> Result<()> {
    if let Some(parent) = Path::new(path).parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    fs::write(path, bytes)?;
    Ok(())
}

fn validate_eps(eps: f64) -> Result<()> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "eps must be positive, got {eps}"
        )));
    }
    Ok(())
}

fn cmd_components(a: &ComponentsArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    let ns: Vec<u32> = parse_list(&a.n, "n")?;
    let eps_list: Vec<f64> = parse_list(a.sweep_eps.as_deref().unwrap_or(&a.eps), "eps")?;
    let families = ns
        .iter()
        .map(|&n| HalfPlaneFamily::new(n))
        .collect::<Result<Vec<_>>>()?;
    eps_list.iter().try_for_each(|&e| validate_eps(e))?;
    let grid = a.grid.grid()?;

    let mut rows = Vec::new();
    let mut files: Vec<(String, Vec<u8>)> = Vec::new();
    for family in &families {
        for &eps in &eps_list {
            let (mask, count) = labelled_region(family, eps, a.grid.delta, &grid)?;
            rows.push(ComponentSummary {
                n: family.n(),
                eps,
                delta: a.grid.delta,
                grid_t: grid.t_count(),
                grid_theta: grid.theta_count(),
                components: count,
            });
            if let Some(prefix) = &a.out {
                let stem = format!("{prefix}n{}_eps{}", family.n(), eps);
                if !a.no_pgm {
                    files.push((format!("{stem}.pgm"), mask.to_pgm(PgmMode::Occupancy)));
                }
                if a.svg {
                    files.push((
                        format!("{stem}.svg"),
                        sector_overlay_svg(&mask, family).into_bytes(),
                    ));
                }
            }
        }
    }
    let mut csv = Vec::new();
    write_component_csv(&mut csv, &rows)?;
    out.write_all(&csv)?;
    if let Some(prefix) = &a.out {
        write_file(&format!("{prefix}components.csv"), &csv)?;
        for (path, bytes) in &files {
            write_file(path, bytes)?;
        }
    }
    if a.assert_paper {
        let wrong: Vec<String> = rows
            .iter()
            .filter(|r| r.components != r.n as usize)
            .map(|r| format!("n={} eps={} gave {}", r.n, r.eps, r.components))
            .collect();
        if !wrong.is_empty() {
            return Ok(Outcome::AssertionFailed(wrong.join("; ")));
        }
        writeln!(err, "all {} counts equal n", rows.len())?;
    }
    Ok(Outcome::Ok)
}

/// Counts sector-structure violations of a labelled mask.
fn sector_violations(
    mask: &RegionMask,
    family: &HalfPlaneFamily,
    eps: f64,
    delta: f64,
) -> Vec<String> {
    let mut problems = Vec::new();
    for (l, s) in component_sectors(mask, family).iter().enumerate() {
        if s.is_none() {
            problems.push(format!("component {} crosses a ray mu_k", l + 1));
        }
    }
    let angles = SectorAngles::new(family);
    let t = mask.grid().t_values();
    for &mu in angles.mus.iter().skip(1) {
        if crate::foliation::ray_profile(family, eps, delta, mu, t)
            .iter()
            .any(|&b| b)
        {
            problems.push(format!("ray mu = {mu} is occupied"));
        }
    }
    for &theta in angles.alphas.iter().chain(&angles.betas) {
        let v = ray_violations(family, eps, delta, theta, t);
        if !v.is_empty() {
            problems.push(format!("ray theta = {theta} deviates at {} radii", v.len()));
        }
    }
    problems
}

fn cmd_region_mask(
    a: &RegionMaskArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome> {
    let family = HalfPlaneFamily::new(a.n)?;
    validate_eps(a.eps)?;
    let grid = a.grid.grid()?;
    let (mask, count) = labelled_region(&family, a.eps, a.grid.delta, &grid)?;
    write_file(
        &format!("{}mask.pgm", a.out),
        &mask.to_pgm(PgmMode::Occupancy),
    )?;
    if a.labels {
        write_file(
            &format!("{}labels.pgm", a.out),
            &mask.to_pgm(PgmMode::Labels),
        )?;
    }
    if a.svg {
        write_file(
            &format!("{}sectors.svg", a.out),
            sector_overlay_svg(&mask, &family).as_bytes(),
        )?;
    }
    write_component_csv(
        &mut *out,
        &[ComponentSummary {
            n: a.n,
            eps: a.eps,
            delta: a.grid.delta,
            grid_t: grid.t_count(),
            grid_theta: grid.theta_count(),
            components: count,
        }],
    )?;
    if a.check_sectors {
        let problems = sector_violations(&mask, &family, a.eps, a.grid.delta);
        if !problems.is_empty() {
            return Ok(Outcome::AssertionFailed(problems.join("; ")));
        }
        writeln!(err, "sector structure: 0 violations")?;
    }
    Ok(Outcome::Ok)
}

/// One preset run: curve, cutoff, samples and test points.
fn plemelj_run(
    preset: PlemeljPreset,
    nodes: usize,
    points: usize,
) -> Result<crate::plemelj::JumpReport> {
    let circle_case = |f: fn(Complex64) -> Complex64| -> Result<_> {
        let curve = make_circle(1.0, nodes)?;
        let g = BoundaryFunction::from_fn(&curve, f)?;
        jump_residual(&curve, &Cutoff::One, &g, &circle_test_params(points))
    };
    match preset {
        PlemeljPreset::CirclePoly => circle_case(|z| z * z),
        PlemeljPreset::CircleInv => circle_case(|z| 1.0 / z),
        PlemeljPreset::CircleExp => circle_case(|z| z.exp()),
        PlemeljPreset::Zero => {
            let curve = make_circle(1.0, nodes)?;
            jump_residual(
                &curve,
                &Cutoff::One,
                &BoundaryFunction::zero(&curve),
                &circle_test_params(points),
            )
        }
        PlemeljPreset::ArcBump => {
            let curve = make_segment(Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0), nodes)?;
            let chi = Cutoff::Window(CutoffWindow::new(0.0, 0.4, 0.8)?);
            let g = BoundaryFunction::from_fn(&curve, |_| Complex64::new(1.0, 0.0))?;
            let params: Vec<f64> = if points == 1 {
                vec![0.0]
            } else {
                (0..points)
                    .map(|k| -0.36 + 0.72 * k as f64 / (points - 1) as f64)
                    .collect()
            };
            jump_residual(&curve, &chi, &g, &params)
        }
    }
}

fn cmd_plemelj(a: &PlemeljArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    if a.points == 0 {
        return Err(Error::InvalidArgument("--points must be positive".into()));
    }
    let default_nodes = if a.preset == PlemeljPreset::ArcBump {
        8192
    } else {
        4096
    };
    let nodes = a.nodes.unwrap_or(default_nodes);
    let sweep: Vec<usize> = match &a.convergence {
        Some(text) => parse_list(text, "node count")?,
        None => Vec::new(),
    };
    let report = plemelj_run(a.preset, nodes, a.points)?;
    let mut csv = Vec::new();
    report.write_csv(&mut csv)?;
    out.write_all(&csv)?;
    writeln!(
        err,
        "nodes={nodes} max_residual={}",
        fmt_f64(report.max_residual())
    )?;

    let mut table = b"nodes,max_residual\n".to_vec();
    for &m in &sweep {
        let r = plemelj_run(a.preset, m, a.points)?;
        writeln!(table, "{m},{}", fmt_f64(r.max_residual()))?;
    }
    match &a.out {
        Some(prefix) => {
            write_file(&format!("{prefix}jump.csv"), &csv)?;
            if !sweep.is_empty() {
                write_file(&format!("{prefix}convergence.csv"), &table)?;
            }
        }
        None if !sweep.is_empty() => err.write_all(&table)?,
        None => {}
    }
    if let Some(tol) = a.tol {
        if !(report.max_residual() <= tol) {
            return Ok(Outcome::AssertionFailed(format!(
                "max residual {} exceeds {tol}",
                report.max_residual()
            )));
        }
    }
    Ok(Outcome::Ok)
}

fn axis_samples(lo: f64, hi: f64, count: usize) -> Result<Vec<f64>> {
    if count < 2 {
        return Err(Error::InvalidArgument(
            "--samples must be at least 2".into(),
        ));
    }
    Ok((0..count)
        .map(|k| lo + (hi - lo) * k as f64 / (count - 1) as f64)
        .collect())
}

fn cmd_series(a: &SeriesArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    let family = match a.family {
        FamilyName::A => CoefficientFamily::counterexample_a(),
        FamilyName::B => CoefficientFamily::counterexample_b(),
    };
    if a.n_max < 1 {
        return Err(Error::InvalidArgument("--N must be at least 1".into()));
    }

    if let Some(k_max) = a.growth_k {
        let w_set = a
            .w_points
            .split(',')
            .map(parse_complex)
            .collect::<Result<Vec<_>>>()?;
        let gamma: Vec<Complex64> = axis_samples(-5.0, 5.0, a.samples)?
            .into_iter()
            .map(|u| Complex64::new(u, 0.0))
            .collect();
        let table = NormTable::from_samples(&family, &gamma, &w_set, k_max)?;
        table.write_csv(&mut *out)?;
        let fit = growth_fit(&table)?;
        writeln!(
            err,
            "c_estimate={} trend={}",
            fmt_f64(fit.c_estimate),
            fit.trend
        )?;
        return Ok(Outcome::Ok);
    }

    let axis = match (&a.real_axis, &a.imag_axis) {
        (Some(r), _) => Some((parse_range(r)?, false)),
        (None, Some(r)) => Some((parse_range(r)?, true)),
        _ => None,
    };
    if let Some(((lo, hi), imaginary)) = axis {
        let bound = match a.family {
            FamilyName::A => 1.0,
            FamilyName::B => B_REAL_AXIS_BOUND,
        };
        let mut worst = f64::NEG_INFINITY;
        out.write_all(if imaginary {
            b"v,n,logmag,arg\n"
        } else {
            b"u,n,logmag,arg\n"
        })?;
        for x in axis_samples(lo, hi, a.samples)? {
            let w = if imaginary {
                Complex64::new(0.0, x)
            } else {
                Complex64::new(x, 0.0)
            };
            for n in 1..=a.n_max {
                let c = family.eval(n, w)?;
                worst = worst.max(c.logmag());
                writeln!(
                    out,
                    "{},{n},{},{}",
                    fmt_f64(x),
                    fmt_f64(c.logmag()),
                    fmt_f64(c.arg())
                )?;
            }
        }
        if a.check_bounds {
            if imaginary {
                return Err(Error::InvalidArgument(
                    "--check-bounds applies to --real-axis".into(),
                ));
            }
            // one ulp of slack for the rounding of the bound itself
            if worst > bound.ln() + 4.0 * f64::EPSILON {
                return Ok(Outcome::AssertionFailed(format!(
                    "max |c_n(u)| = {} exceeds {bound}",
                    worst.exp()
                )));
            }
            writeln!(err, "max |c_n(u)| = {} <= {bound}", fmt_f64(worst.exp()))?;
        }
        return Ok(Outcome::Ok);
    }

    let w = parse_complex(a.at.as_deref().unwrap_or("0.5i"))?;
    let rows = radius_sweep(&family, w, a.n_max)?;
    write_radius_csv(&mut *out, &rows)?;
    if a.n_max >= 4 {
        let r = radius_estimate(&family, w, a.n_max)?;
        writeln!(err, "radius_estimate={}", fmt_f64(r))?;
    }
    Ok(Outcome::Ok)
}

fn cmd_morera(a: &MoreraArgs, out: &mut dyn Write) -> Result<Outcome> {
    let radii: Vec<f64> = parse_list(&a.radius, "radius")?;
    let g: fn(Complex64) -> Complex64 = match a.preset {
        MoreraPreset::Square => |c| c * c,
        MoreraPreset::Conj => |c| c.conj(),
        MoreraPreset::PoleOutside => |c| 1.0 / (c - 4.0),
        MoreraPreset::PoleInside => |c| 1.0 / (c - 0.25),
    };
    writeln!(out, "radius,loop_integral")?;
    let mut worst: f64 = 0.0;
    for &r in &radii {
        let v = morera_loop_integral(g, &make_circle(r, a.nodes)?)?;
        worst = worst.max(v);
        writeln!(out, "{},{}", fmt_f64(r), fmt_f64(v))?;
    }
    if let Some(tol) = a.tol {
        if worst > tol {
            return Ok(Outcome::AssertionFailed(format!(
                "loop integral {worst} exceeds {tol}"
            )));
        }
    }
    Ok(Outcome::Ok)
}
