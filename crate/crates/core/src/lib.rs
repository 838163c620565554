//! Numerics for smooth Levi-flat hypersurface germs in `C^2`.
//!
//! * [`series`]: the counterexample coefficient families `a_n`, `b_n`,
//!   radius-of-convergence and growth diagnostics, Schwarz reflection.
//! * [`plemelj`]: Cauchy transforms on circles and segments, Plemelj
//!   boundary values and jump residuals, a Fourier extension classifier
//!   and a Morera loop test.
//! * [`foliation`]: the family `S_n`, the maps `psi_n`, the regions
//!   `H_{n,eps}` on a polar grid and their connected-component count.
//! * [`cli`]: the `leviflat` command-line front end.
//!
//! ```
//! use leviflat::foliation::{count_components, HalfPlaneFamily};
//! use leviflat::geometry::PolarGrid;
//!
//! let grid = PolarGrid::log_polar(1e-4, 0.9, 400, 400).unwrap();
//! let family = HalfPlaneFamily::new(3).unwrap();
//! assert_eq!(count_components(&family, 0.05, 0.9, &grid).unwrap(), 3);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod foliation;
pub mod geometry;
pub mod plemelj;
pub mod series;

pub use error::{Error, Result};
pub use geometry::ComplexPoint;
