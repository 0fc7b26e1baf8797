use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest ambient size accepted anywhere in the crate.
pub const MAX_N: u32 = 64;

pub(crate) fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::param("ambient size n must be at least 1"));
    }
    if n > MAX_N {
        return Err(Error::param(format!(
            "ambient size n = {n} exceeds the maximum {MAX_N}"
        )));
    }
    Ok(())
}

/// Triangular number `t(t+1)/2`.
#[inline]
pub(crate) fn tri(t: u32) -> usize {
    let t = t as usize;
    t * (t + 1) / 2
}

/// Inverse of the canonical index map: the unique `(t, c)` with
/// `index = tri(t) + c` and `c <= t`.
#[inline]
fn split_index(index: usize) -> (u32, u32) {
    // floor((sqrt(8i+1) - 1) / 2), corrected for rounding
    let mut t = ((((8 * index + 1) as f64).sqrt() - 1.0) / 2.0) as usize;
    while tri(t as u32 + 1) <= index {
        t += 1;
    }
    while tri(t as u32) > index {
        t -= 1;
    }
    (t as u32, (index - tri(t as u32)) as u32)
}

/// A unit upward triangle of `T_n`, i.e. a lattice point `(a, b, c)` with
/// `a + b + c = n - 1`. The ambient size is implied by the coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[u32; 3]", from = "[u32; 3]")]
pub struct UpCell {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

/// A unit downward triangle of `T_n`: `(a, b, c)` with `a + b + c = n - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[u32; 3]", from = "[u32; 3]")]
pub struct DownCell {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl UpCell {
    pub const fn new(a: u32, b: u32, c: u32) -> Self {
        UpCell { a, b, c }
    }

    /// Ambient size of the triangle this cell belongs to.
    pub fn n(&self) -> u32 {
        self.a + self.b + self.c + 1
    }

    /// Row counted from the bottom edge.
    pub fn row(&self) -> u32 {
        self.c
    }

    /// Bit position in the canonical order. Depends only on `(b, c)`.
    pub fn index(&self) -> usize {
        tri(self.b + self.c) + self.c as usize
    }

    /// Cell at canonical position `index` of `T_n`, if it exists.
    pub fn from_index(n: u32, index: usize) -> Option<Self> {
        if index >= tri(n) {
            return None;
        }
        let (t, c) = split_index(index);
        Some(UpCell {
            a: n - 1 - t,
            b: t - c,
            c,
        })
    }

    pub fn coords(&self) -> [u32; 3] {
        [self.a, self.b, self.c]
    }

    /// The downward triangles sharing an edge with this cell:
    /// `(a-1,b,c)`, `(a,b-1,c)`, `(a,b,c-1)` where those exist.
    /// Corner cells have one, other boundary cells two, interior cells three.
    pub fn down_neighbors(&self) -> Vec<DownCell> {
        let UpCell { a, b, c } = *self;
        let mut out = Vec::with_capacity(3);
        if a > 0 {
            out.push(DownCell::new(a - 1, b, c));
        }
        if b > 0 {
            out.push(DownCell::new(a, b - 1, c));
        }
        if c > 0 {
            out.push(DownCell::new(a, b, c - 1));
        }
        out
    }

    /// The downward triangle directly below this cell (sharing its base), if any.
    pub fn below(&self) -> Option<DownCell> {
        (self.c > 0).then(|| DownCell::new(self.a, self.b, self.c - 1))
    }
}

impl DownCell {
    pub const fn new(a: u32, b: u32, c: u32) -> Self {
        DownCell { a, b, c }
    }

    pub fn n(&self) -> u32 {
        self.a + self.b + self.c + 2
    }

    pub fn row(&self) -> u32 {
        self.c
    }

    pub fn index(&self) -> usize {
        tri(self.b + self.c) + self.c as usize
    }

    pub fn from_index(n: u32, index: usize) -> Option<Self> {
        if n < 2 || index >= tri(n - 1) {
            return None;
        }
        let (t, c) = split_index(index);
        Some(DownCell {
            a: n - 2 - t,
            b: t - c,
            c,
        })
    }

    pub fn coords(&self) -> [u32; 3] {
        [self.a, self.b, self.c]
    }

    /// The three upward triangles sharing an edge with this cell, in the
    /// order left, right, above.
    pub fn up_neighbors(&self) -> [UpCell; 3] {
        let DownCell { a, b, c } = *self;
        [
            UpCell::new(a + 1, b, c),
            UpCell::new(a, b + 1, c),
            UpCell::new(a, b, c + 1),
        ]
    }

    /// The up cell sharing this cell's horizontal edge. Together they form
    /// the vertical rhombus.
    pub fn above(&self) -> UpCell {
        UpCell::new(self.a, self.b, self.c + 1)
    }
}

impl From<UpCell> for [u32; 3] {
    fn from(u: UpCell) -> Self {
        u.coords()
    }
}

impl From<[u32; 3]> for UpCell {
    fn from([a, b, c]: [u32; 3]) -> Self {
        UpCell::new(a, b, c)
    }
}

impl From<DownCell> for [u32; 3] {
    fn from(d: DownCell) -> Self {
        d.coords()
    }
}

impl From<[u32; 3]> for DownCell {
    fn from([a, b, c]: [u32; 3]) -> Self {
        DownCell::new(a, b, c)
    }
}

impl fmt::Display for UpCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

impl fmt::Display for DownCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})v", self.a, self.b, self.c)
    }
}

/// All upward cells of `T_n` in canonical order: lexicographically
/// descending in `(a, b)`, so the first cell is `(n-1, 0, 0)` and the
/// position of a cell in this list is its bit index in a [`CellSet`](super::CellSet).
pub fn up_cells(n: u32) -> Result<Vec<UpCell>> {
    check_n(n)?;
    Ok((0..tri(n))
        .map(|i| UpCell::from_index(n, i).unwrap())
        .collect())
}

/// All downward cells of `T_n` in the same canonical order. Empty for `n = 1`.
pub fn down_cells(n: u32) -> Result<Vec<DownCell>> {
    check_n(n)?;
    if n == 1 {
        return Ok(Vec::new());
    }
    Ok((0..tri(n - 1))
        .map(|i| DownCell::from_index(n, i).unwrap())
        .collect())
}
