//! Tilings of holey regions `T_n \ A(s)` by rhombi, trapezoids and unit
//! triangles.
//!
//! Two backends: maximum bipartite matching between down cells and the
//! remaining up cells (rhombi, optionally padded with unit triangles), and
//! an exact-cover search for tile sets containing trapezoids.

mod annulus;
mod exact;
mod matching;
mod reconfigure;

pub use annulus::annulus_tiling;
pub use exact::{min_type2, tile_exact, KindBounds, Objective, SearchBudget, TileRequest};
pub use matching::{lozenge_tiling, max_rhombi_tiling};
pub use reconfigure::{reconfigure_up, unsupported_unit_downs};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::Result;
use crate::trigrid::{down_cells, CellSet, DownCell, LatticeTri, UpCell};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TileKind {
    #[serde(rename = "rhombus")]
    Rhombus,
    /// Two up cells and one down cell.
    #[serde(rename = "t1")]
    Trapezoid1,
    /// One up cell and two down cells.
    #[serde(rename = "t2")]
    Trapezoid2,
    #[serde(rename = "up")]
    UnitUp,
    #[serde(rename = "down")]
    UnitDown,
}

impl TileKind {
    pub const ALL: [TileKind; 5] = [
        TileKind::Rhombus,
        TileKind::Trapezoid1,
        TileKind::Trapezoid2,
        TileKind::UnitUp,
        TileKind::UnitDown,
    ];

    /// `(up cells, down cells)` covered by one tile of this kind.
    pub fn shape(self) -> (usize, usize) {
        match self {
            TileKind::Rhombus => (1, 1),
            TileKind::Trapezoid1 => (2, 1),
            TileKind::Trapezoid2 => (1, 2),
            TileKind::UnitUp => (1, 0),
            TileKind::UnitDown => (0, 1),
        }
    }

    pub(crate) fn slot(self) -> usize {
        self as usize
    }

    /// Name used on the command line.
    pub fn flag(self) -> &'static str {
        match self {
            TileKind::Rhombus => "rhombus",
            TileKind::Trapezoid1 => "t1",
            TileKind::Trapezoid2 => "t2",
            TileKind::UnitUp => "up",
            TileKind::UnitDown => "down",
        }
    }

    /// Class attribute used in SVG output.
    pub fn css_class(self) -> &'static str {
        match self {
            TileKind::Rhombus => "rhombus",
            TileKind::Trapezoid1 => "t1",
            TileKind::Trapezoid2 => "t2",
            TileKind::UnitUp => "unit-up",
            TileKind::UnitDown => "unit-down",
        }
    }
}

impl fmt::Display for TileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.flag())
    }
}

impl FromStr for TileKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        TileKind::ALL
            .into_iter()
            .find(|k| k.flag() == s)
            .ok_or_else(|| {
                format!("unknown tile kind {s:?} (expected rhombus, t1, t2, up or down)")
            })
    }
}

/// One placed tile. Shapes are checked on construction; [`validate_tiling`]
/// re-checks them for tiles that arrive through deserialization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tile {
    pub kind: TileKind,
    pub ups: SmallVec<[UpCell; 2]>,
    pub downs: SmallVec<[DownCell; 2]>,
}

impl Tile {
    pub fn new(kind: TileKind, ups: &[UpCell], downs: &[DownCell]) -> Result<Self> {
        let tile = Tile {
            kind,
            ups: ups.into(),
            downs: downs.into(),
        };
        match tile.shape_error() {
            None => Ok(tile),
            Some(e) => Err(crate::Error::InvalidTiling(e)),
        }
    }

    pub fn rhombus(u: UpCell, d: DownCell) -> Result<Self> {
        Self::new(TileKind::Rhombus, &[u], &[d])
    }

    pub fn unit_up(u: UpCell) -> Self {
        Tile {
            kind: TileKind::UnitUp,
            ups: [u].into_iter().collect(),
            downs: SmallVec::new(),
        }
    }

    pub fn unit_down(d: DownCell) -> Self {
        Tile {
            kind: TileKind::UnitDown,
            ups: SmallVec::new(),
            downs: [d].into_iter().collect(),
        }
    }

    /// A rhombus whose up cell sits directly above its down cell.
    pub fn is_vertical_rhombus(&self) -> bool {
        self.kind == TileKind::Rhombus && self.downs[0].above() == self.ups[0]
    }

    /// Describes why the cells do not form a tile of the stated kind.
    pub fn shape_error(&self) -> Option<String> {
        let (nu, nd) = self.kind.shape();
        if self.ups.len() != nu || self.downs.len() != nd {
            return Some(format!(
                "{} needs {nu} up and {nd} down cells, got {} and {}",
                self.kind,
                self.ups.len(),
                self.downs.len()
            ));
        }
        let adjacent = |u: &UpCell, d: &DownCell| d.up_neighbors().contains(u);
        let ok = match self.kind {
            TileKind::UnitUp | TileKind::UnitDown => true,
            TileKind::Rhombus => adjacent(&self.ups[0], &self.downs[0]),
            TileKind::Trapezoid1 => {
                self.ups[0] != self.ups[1]
                    && adjacent(&self.ups[0], &self.downs[0])
                    && adjacent(&self.ups[1], &self.downs[0])
            }
            TileKind::Trapezoid2 => {
                self.downs[0] != self.downs[1]
                    && adjacent(&self.ups[0], &self.downs[0])
                    && adjacent(&self.ups[0], &self.downs[1])
            }
        };
        (!ok).then(|| format!("cells {self} do not form a {}", self.kind))
    }

    /// Number of (up, down) cells of this tile lying inside `t`.
    pub fn cells_inside(&self, t: &LatticeTri) -> (usize, usize) {
        (
            self.ups.iter().filter(|&&u| t.contains_up(u)).count(),
            self.downs.iter().filter(|&&d| t.contains_down(d)).count(),
        )
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.kind)?;
        let cells = self
            .ups
            .iter()
            .map(|u| u.to_string())
            .chain(self.downs.iter().map(|d| d.to_string()));
        for (i, c) in cells.enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// `T_n` with the up cells of `holes` removed. Down cells all stay, except
/// those listed in `cut_downs`, which only cut-out regions such as
/// `T_n \ T` use.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HoleyRegion {
    holes: CellSet,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    cut_downs: Vec<DownCell>,
}

impl HoleyRegion {
    pub fn new(holes: CellSet) -> Self {
        HoleyRegion {
            holes,
            cut_downs: Vec::new(),
        }
    }

    /// `T_n` with every cell of the lattice triangle `t` removed.
    pub fn without_triangle(t: &LatticeTri) -> Self {
        HoleyRegion {
            holes: t.cells(),
            cut_downs: t.down_cells(),
        }
    }

    pub fn n(&self) -> u32 {
        self.holes.n()
    }

    pub fn holes(&self) -> &CellSet {
        &self.holes
    }

    /// Removed down cells.
    pub fn cut_downs(&self) -> &[DownCell] {
        &self.cut_downs
    }

    /// Up cells of the region, in canonical order.
    pub fn up_cells(&self) -> Vec<UpCell> {
        self.holes.complement().iter().collect()
    }

    /// Down cells of the region in canonical order; all of `d(T_n)` unless
    /// some were cut.
    pub fn down_cells(&self) -> Vec<DownCell> {
        let all = down_cells(self.n()).expect("valid n");
        if self.cut_downs.is_empty() {
            return all;
        }
        all.into_iter().filter(|d| self.contains_down(*d)).collect()
    }

    pub fn contains_up(&self, u: UpCell) -> bool {
        u.n() == self.n() && !self.holes.contains(u)
    }

    pub fn contains_down(&self, d: DownCell) -> bool {
        d.n() == self.n() && !self.cut_downs.contains(&d)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TileCounts {
    pub rhombus: usize,
    pub t1: usize,
    pub t2: usize,
    pub unit_up: usize,
    pub unit_down: usize,
}

impl TileCounts {
    pub fn get(&self, kind: TileKind) -> usize {
        match kind {
            TileKind::Rhombus => self.rhombus,
            TileKind::Trapezoid1 => self.t1,
            TileKind::Trapezoid2 => self.t2,
            TileKind::UnitUp => self.unit_up,
            TileKind::UnitDown => self.unit_down,
        }
    }

    fn bump(&mut self, kind: TileKind) {
        match kind {
            TileKind::Rhombus => self.rhombus += 1,
            TileKind::Trapezoid1 => self.t1 += 1,
            TileKind::Trapezoid2 => self.t2 += 1,
            TileKind::UnitUp => self.unit_up += 1,
            TileKind::UnitDown => self.unit_down += 1,
        }
    }
}

impl fmt::Display for TileCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rhombus={} t1={} t2={} up={} down={}",
            self.rhombus, self.t1, self.t2, self.unit_up, self.unit_down
        )
    }
}

/// A list of tiles meant to partition a holey region.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tiling {
    pub region: HoleyRegion,
    pub tiles: Vec<Tile>,
}

impl Tiling {
    pub fn new(region: HoleyRegion, tiles: Vec<Tile>) -> Self {
        Tiling { region, tiles }
    }

    pub fn n(&self) -> u32 {
        self.region.n()
    }

    pub fn counts(&self) -> TileCounts {
        let mut c = TileCounts::default();
        for t in &self.tiles {
            c.bump(t.kind);
        }
        c
    }
}

/// A cell of `T_n`, either orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "orientation", content = "cell", rename_all = "lowercase")]
pub enum AnyCell {
    Up(UpCell),
    Down(DownCell),
}

impl fmt::Display for AnyCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyCell::Up(u) => write!(f, "up {u}"),
            AnyCell::Down(d) => write!(f, "down {}", DownCellPlain(*d)),
        }
    }
}

struct DownCellPlain(DownCell);

impl fmt::Display for DownCellPlain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0.a, self.0.b, self.0.c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "issue", rename_all = "snake_case")]
pub enum TilingIssue {
    Malformed {
        tile: usize,
        reason: String,
    },
    OutsideRegion {
        tile: usize,
        cell: AnyCell,
    },
    Overlap {
        cell: AnyCell,
        tiles: (usize, usize),
    },
    Gap {
        cell: AnyCell,
    },
    CountIdentity {
        t1: usize,
        t2: usize,
        expected_difference: i64,
    },
}

impl fmt::Display for TilingIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TilingIssue::Malformed { tile, reason } => {
                write!(f, "tile #{tile} malformed: {reason}")
            }
            TilingIssue::OutsideRegion { tile, cell } => {
                write!(f, "tile #{tile} covers {cell}, which is not in the region")
            }
            TilingIssue::Overlap {
                cell,
                tiles: (x, y),
            } => {
                write!(f, "{cell} covered by tiles #{x} and #{y}")
            }
            TilingIssue::Gap { cell } => write!(f, "{cell} is not covered"),
            TilingIssue::CountIdentity {
                t1,
                t2,
                expected_difference,
            } => write!(
                f,
                "t1 - t2 = {} but the region's up/down surplus is {expected_difference}",
                *t1 as i64 - *t2 as i64
            ),
        }
    }
}

/// Outcome of [`validate_tiling`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingCheck {
    pub counts: TileCounts,
    pub issues: Vec<TilingIssue>,
}

impl TilingCheck {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Checks tile shapes, disjointness and exact coverage of the region. For
/// tilings using only rhombi and trapezoids, also checks
/// `t1 - t2 = |U| - |D|` (`n - |holes|` when no down cell is cut), which
/// cell counting forces.
pub fn validate_tiling(t: &Tiling) -> TilingCheck {
    let n = t.n();
    let mut issues = Vec::new();
    let mut owner: HashMap<AnyCell, usize> = HashMap::new();

    for (i, tile) in t.tiles.iter().enumerate() {
        if let Some(reason) = tile.shape_error() {
            issues.push(TilingIssue::Malformed { tile: i, reason });
        }
        let cells = tile
            .ups
            .iter()
            .map(|&u| (AnyCell::Up(u), t.region.contains_up(u)))
            .chain(
                tile.downs
                    .iter()
                    .map(|&d| (AnyCell::Down(d), t.region.contains_down(d))),
            );
        for (cell, inside) in cells {
            if !inside {
                issues.push(TilingIssue::OutsideRegion { tile: i, cell });
                continue;
            }
            if let Some(&prev) = owner.get(&cell) {
                issues.push(TilingIssue::Overlap {
                    cell,
                    tiles: (prev, i),
                });
            } else {
                owner.insert(cell, i);
            }
        }
    }

    let region_cells = t
        .region
        .up_cells()
        .into_iter()
        .map(AnyCell::Up)
        .chain(t.region.down_cells().into_iter().map(AnyCell::Down));
    for cell in region_cells {
        if !owner.contains_key(&cell) {
            issues.push(TilingIssue::Gap { cell });
        }
    }

    let counts = t.counts();
    if counts.unit_up == 0 && counts.unit_down == 0 {
        let expected = n as i64 - t.region.holes().len() as i64 + t.region.cut_downs().len() as i64;
        if counts.t1 as i64 - counts.t2 as i64 != expected {
            issues.push(TilingIssue::CountIdentity {
                t1: counts.t1,
                t2: counts.t2,
                expected_difference: expected,
            });
        }
    }
    TilingCheck { counts, issues }
}

/// Whether a rhombus or type-1 trapezoid covers at least as many up cells
/// inside `t` as down cells inside `t`. Holds for every placement; kept as
/// a checkable predicate.
pub fn tile_border_check(t: &LatticeTri, tile: &Tile) -> Result<bool> {
    if !matches!(tile.kind, TileKind::Rhombus | TileKind::Trapezoid1) {
        return Err(crate::Error::param(format!(
            "border check applies to rhombi and t1 tiles, not {}",
            tile.kind
        )));
    }
    let (ups, downs) = tile.cells_inside(t);
    Ok(downs <= ups)
}

/// Every rhombus and every type-1 trapezoid that fits in `T_n`.
pub fn all_placements(n: u32, kinds: &[TileKind]) -> Vec<Tile> {
    let mut out = Vec::new();
    for d in down_cells(n).expect("valid n") {
        let nb = d.up_neighbors();
        for &kind in kinds {
            match kind {
                TileKind::Rhombus => {
                    out.extend(nb.iter().map(|&u| Tile::rhombus(u, d).unwrap()));
                }
                TileKind::Trapezoid1 => {
                    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                        out.push(Tile::new(kind, &[nb[i], nb[j]], &[d]).unwrap());
                    }
                }
                _ => {}
            }
        }
    }
    if kinds.contains(&TileKind::Trapezoid2) {
        for u in crate::trigrid::up_cells(n).expect("valid n") {
            let dn = u.down_neighbors();
            for i in 0..dn.len() {
                for j in i + 1..dn.len() {
                    out.push(Tile::new(TileKind::Trapezoid2, &[u], &[dn[i], dn[j]]).unwrap());
                }
            }
        }
    }
    out
}
