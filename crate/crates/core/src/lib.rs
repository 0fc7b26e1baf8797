//! Tiling matroids on the subdivided triangle `T_n`.
//!
//! - [`trigrid`]: cell coordinates, cell sets and lattice upward triangles.
//! - [`matroid`]: independence, rank, closure, circuits and flats, all by
//!   definition over lattice triangles, plus exhaustive enumeration.
//! - [`tiler`]: tilings of holey regions by rhombi, trapezoids and unit
//!   triangles.
//! - [`verify`]: exhaustive or sampled cross-checks of the tiling
//!   characterizations against the matroid oracles.
//! - [`cli`]: the `trimat` command line.

pub mod cli;
pub mod combin;
mod error;
pub mod matroid;
pub mod tiler;
pub mod trigrid;
pub mod verify;

pub use error::{Error, Result};
