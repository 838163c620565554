use std::collections::VecDeque;
use std::f64::consts::PI;
use std::io::Write;

use crate::error::{Error, Result};

/// Polar sampling `(t, theta)` of the upper half-plane near the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct PolarGrid {
    t_values: Vec<f64>,
    theta_values: Vec<f64>,
}

impl PolarGrid {
    pub fn new(t_values: Vec<f64>, theta_values: Vec<f64>) -> Result<Self> {
        if t_values.is_empty() || theta_values.is_empty() {
            return Err(Error::InvalidArgument(
                "polar grid needs at least one t and one theta".into(),
            ));
        }
        let increasing = |v: &[f64]| v.windows(2).all(|w| w[1] > w[0]);
        if !increasing(&t_values) || !increasing(&theta_values) {
            return Err(Error::InvalidArgument(
                "grid coordinates must be strictly increasing".into(),
            ));
        }
        if !(t_values[0] > 0.0 && t_values.iter().all(|t| t.is_finite())) {
            return Err(Error::InvalidArgument(
                "t values must be positive and finite".into(),
            ));
        }
        if !(theta_values[0] > 0.0 && *theta_values.last().unwrap() < PI) {
            return Err(Error::InvalidArgument(
                "theta values must lie in the open interval (0, pi)".into(),
            ));
        }
        Ok(Self {
            t_values,
            theta_values,
        })
    }

    /// `t_count` log-spaced radii in `(t_min, t_max)` and `theta_count`
    /// uniform angles in `(0, pi)`, both at cell centers.
    pub fn log_polar(t_min: f64, t_max: f64, t_count: usize, theta_count: usize) -> Result<Self> {
        if !(t_min > 0.0 && t_max > t_min && t_max.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "need 0 < t_min < t_max, got t_min={t_min}, t_max={t_max}"
            )));
        }
        if t_count == 0 || theta_count == 0 {
            return Err(Error::InvalidArgument("grid sizes must be positive".into()));
        }
        let (lo, hi) = (t_min.ln(), t_max.ln());
        let dt = (hi - lo) / t_count as f64;
        let t_values = (0..t_count)
            .map(|i| (lo + (i as f64 + 0.5) * dt).exp())
            .collect();
        let dth = PI / theta_count as f64;
        let theta_values = (0..theta_count).map(|j| (j as f64 + 0.5) * dth).collect();
        Self::new(t_values, theta_values)
    }

    pub fn t_values(&self) -> &[f64] {
        &self.t_values
    }

    pub fn theta_values(&self) -> &[f64] {
        &self.theta_values
    }

    pub fn t_count(&self) -> usize {
        self.t_values.len()
    }

    pub fn theta_count(&self) -> usize {
        self.theta_values.len()
    }

    /// Index of the grid angle closest to `theta`.
    pub fn nearest_theta(&self, theta: f64) -> usize {
        let idx = self.theta_values.partition_point(|&x| x < theta);
        if idx == 0 {
            return 0;
        }
        if idx == self.theta_values.len() {
            return idx - 1;
        }
        if (self.theta_values[idx] - theta).abs() < (theta - self.theta_values[idx - 1]).abs() {
            idx
        } else {
            idx - 1
        }
    }
}

/// Parameters recorded in exported masks.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegionParams {
    pub n: u32,
    pub eps: f64,
    pub delta: f64,
}

/// Occupancy over a [`PolarGrid`], row-major with rows indexed by `t` and
/// columns by `theta`, plus connected-component labels.
#[derive(Clone, Debug, PartialEq)]
pub struct RegionMask {
    grid: PolarGrid,
    occupancy: Vec<bool>,
    labels: Vec<u32>,
    params: Option<RegionParams>,
}

impl RegionMask {
    pub fn new(grid: PolarGrid, occupancy: Vec<bool>) -> Result<Self> {
        if occupancy.len() != grid.t_count() * grid.theta_count() {
            return Err(Error::InvalidArgument(format!(
                "occupancy has {} cells, grid has {}x{}",
                occupancy.len(),
                grid.t_count(),
                grid.theta_count()
            )));
        }
        let labels = vec![0; occupancy.len()];
        Ok(Self {
            grid,
            occupancy,
            labels,
            params: None,
        })
    }

    pub fn with_params(mut self, params: RegionParams) -> Self {
        self.params = Some(params);
        self
    }

    pub fn params(&self) -> Option<RegionParams> {
        self.params
    }

    pub fn grid(&self) -> &PolarGrid {
        &self.grid
    }

    pub fn rows(&self) -> usize {
        self.grid.t_count()
    }

    pub fn cols(&self) -> usize {
        self.grid.theta_count()
    }

    pub fn occupancy(&self) -> &[bool] {
        &self.occupancy
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn occupied(&self, i: usize, j: usize) -> bool {
        self.occupancy[i * self.cols() + j]
    }

    pub fn label(&self, i: usize, j: usize) -> u32 {
        self.labels[i * self.cols() + j]
    }

    pub fn occupied_count(&self) -> usize {
        self.occupancy.iter().filter(|&&b| b).count()
    }

    pub fn max_label(&self) -> u32 {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    /// Writes the mask as binary PGM (P5): occupancy as 0/255, or labels
    /// scaled by `255 / max_label` (integer, rounded down).
    pub fn write_pgm<W: Write>(&self, mut out: W, mode: PgmMode) -> Result<()> {
        let (rows, cols) = (self.rows(), self.cols());
        write!(out, "P5\n# ")?;
        match self.params {
            Some(p) => write!(out, "n={} eps={:.16e} delta={:.16e} ", p.n, p.eps, p.delta)?,
            None => write!(out, "n=? eps=? delta=? ")?,
        }
        write!(out, "grid_t={rows} grid_theta={cols}\n{cols} {rows}\n255\n")?;
        let max = self.max_label() as u64;
        let bytes: Vec<u8> = match mode {
            PgmMode::Occupancy => self
                .occupancy
                .iter()
                .map(|&b| if b { 255 } else { 0 })
                .collect(),
            PgmMode::Labels => self
                .labels
                .iter()
                .map(|&l| (l as u64 * 255).checked_div(max).unwrap_or(0) as u8)
                .collect(),
        };
        out.write_all(&bytes)?;
        Ok(())
    }

    pub fn to_pgm(&self, mode: PgmMode) -> Vec<u8> {
        let mut buf = Vec::new();
        self.write_pgm(&mut buf, mode)
            .expect("writing to a Vec cannot fail");
        buf
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PgmMode {
    Occupancy,
    Labels,
}

/// Labels the 4-connected components of the occupied cells.
///
/// Components are numbered 1, 2, ... in order of their first cell in a
/// row-major scan; there is no wrap-around in either index.
pub fn flood_label(mask: &RegionMask) -> (RegionMask, usize) {
    let (rows, cols) = (mask.rows(), mask.cols());
    let mut labels = vec![0u32; rows * cols];
    let mut queue = VecDeque::new();
    let mut next = 0u32;
    for start in 0..rows * cols {
        if !mask.occupancy[start] || labels[start] != 0 {
            continue;
        }
        next += 1;
        labels[start] = next;
        queue.push_back(start);
        while let Some(idx) = queue.pop_front() {
            let (i, j) = (idx / cols, idx % cols);
            let mut visit = |k: usize| {
                if mask.occupancy[k] && labels[k] == 0 {
                    labels[k] = next;
                    queue.push_back(k);
                }
            };
            if i > 0 {
                visit(idx - cols);
            }
            if i + 1 < rows {
                visit(idx + cols);
            }
            if j > 0 {
                visit(idx - 1);
            }
            if j + 1 < cols {
                visit(idx + 1);
            }
        }
    }
    let labelled = RegionMask {
        grid: mask.grid.clone(),
        occupancy: mask.occupancy.clone(),
        labels,
        params: mask.params,
    };
    (labelled, next as usize)
}
