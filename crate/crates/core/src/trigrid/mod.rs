//! Coordinates on the subdivided triangle `T_n`.
//!
//! Up cells are barycentric triples `(a, b, c)` with `a + b + c = n - 1`,
//! down cells are triples with `a + b + c = n - 2`. The coordinate `c` is
//! the row counted from the bottom edge and `b` grows to the right within
//! a row. A down cell `(a, b, c)` touches the up cells `(a+1, b, c)` (left),
//! `(a, b+1, c)` (right) and `(a, b, c+1)` (above, across its horizontal edge).
//!
//! ```text
//!   n = 3                 /\
//!                        /  \            row 2: up (0,0,2)
//!                       /____\
//!                      /\    /\
//!                     /  \  /  \         row 1: ups (1,0,1) (0,1,1)
//!                    /____\/____\               down (0,0,1) between them
//!                   /\    /\    /\
//!                  /  \  /  \  /  \      row 0: ups (2,0,0) (1,1,0) (0,2,0)
//!                 /____\/____\/____\            downs (1,0,0) (0,1,0)
//! ```
//!
//! A lattice upward triangle `(p, q, r, k)` is the translate of `T_k` whose
//! up cells satisfy `a >= p`, `b >= q`, `c >= r`.

mod cell;
mod cellset;
mod triangle;

pub use cell::{down_cells, up_cells, DownCell, UpCell, MAX_N};
pub use cellset::CellSet;
pub use triangle::{
    lattice_triangles, saturation, tri_contains, tri_intersect, tri_join, triangular_hull,
    LatticeTri, Saturation, SaturationClass,
};

pub(crate) use cell::{check_n, tri};
pub(crate) use triangle::classify;

/// `C(n, 2)`, the number of down cells of `T_n`.
pub fn binom2(n: u32) -> usize {
    let n = n as usize;
    n * n.saturating_sub(1) / 2
}
