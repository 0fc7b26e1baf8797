//! Exact-cover search over tile placements.
//!
//! Items are the region's up cells (canonical order) followed by its down
//! cells. At every node the search branches on the uncovered item with the
//! fewest placements still available, ties going to the earlier item.

use smallvec::SmallVec;

use super::{HoleyRegion, Tile, TileKind, Tiling};
use crate::error::{Error, Result};

/// Maximum number of search nodes one [`tile_exact`] call may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget(pub u64);

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget(50_000_000)
    }
}

/// Inclusive count range for one tile kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KindBounds {
    pub min: usize,
    pub max: usize,
}

impl KindBounds {
    pub const ANY: KindBounds = KindBounds {
        min: 0,
        max: usize::MAX,
    };
    pub const NONE: KindBounds = KindBounds { min: 0, max: 0 };

    pub fn exactly(v: usize) -> Self {
        KindBounds { min: v, max: v }
    }

    fn meet(self, other: KindBounds) -> KindBounds {
        KindBounds {
            min: self.min.max(other.min),
            max: self.max.min(other.max),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Objective {
    #[default]
    None,
    /// Smallest achievable count of this kind.
    Minimize(TileKind),
    RequireExact(TileKind, usize),
}

#[derive(Debug, Clone)]
pub struct TileRequest {
    bounds: [KindBounds; 5],
    pub objective: Objective,
    pub budget: SearchBudget,
    /// Highest level tried by [`Objective::Minimize`] before giving up with a
    /// resource-limit error. Defaults to `n`.
    pub minimize_bound: Option<usize>,
}

impl TileRequest {
    /// Allows exactly the listed kinds, with unbounded counts.
    pub fn new(allowed: &[TileKind]) -> Self {
        let mut bounds = [KindBounds::NONE; 5];
        for k in allowed {
            bounds[k.slot()] = KindBounds::ANY;
        }
        TileRequest {
            bounds,
            objective: Objective::None,
            budget: SearchBudget::default(),
            minimize_bound: None,
        }
    }

    /// Rhombi and both trapezoid types.
    pub fn trapezoids() -> Self {
        Self::new(&[
            TileKind::Rhombus,
            TileKind::Trapezoid1,
            TileKind::Trapezoid2,
        ])
    }

    pub fn bound(mut self, kind: TileKind, bounds: KindBounds) -> Self {
        self.bounds[kind.slot()] = self.bounds[kind.slot()].meet(bounds);
        self
    }

    pub fn objective(mut self, objective: Objective) -> Self {
        self.objective = objective;
        self
    }

    pub fn budget(mut self, budget: SearchBudget) -> Self {
        self.budget = budget;
        self
    }

    pub fn minimize_bound(mut self, bound: usize) -> Self {
        self.minimize_bound = Some(bound);
        self
    }

    pub fn allows(&self, kind: TileKind) -> bool {
        self.bounds[kind.slot()].max > 0
    }

    pub fn bounds(&self, kind: TileKind) -> KindBounds {
        self.bounds[kind.slot()]
    }
}

struct Placement {
    kind: TileKind,
    items: SmallVec<[u32; 3]>,
    tile: Tile,
}

struct Problem {
    n_up: usize,
    n_down: usize,
    placements: Vec<Placement>,
    by_item: Vec<Vec<u32>>,
    region: HoleyRegion,
}

impl Problem {
    fn build(region: &HoleyRegion, req: &TileRequest) -> Problem {
        let ups = region.up_cells();
        let downs = region.down_cells();
        let n_up = ups.len();
        let mut up_item = vec![u32::MAX; crate::trigrid::tri(region.n())];
        for (i, u) in ups.iter().enumerate() {
            up_item[u.index()] = i as u32;
        }
        let mut down_slot = vec![u32::MAX; crate::trigrid::binom2(region.n())];
        for (i, d) in downs.iter().enumerate() {
            down_slot[d.index()] = (n_up + i) as u32;
        }
        let down_item = |d: &crate::trigrid::DownCell| down_slot[d.index()];

        let mut placements = Vec::new();
        let mut push = |tile: Tile| {
            let items = tile
                .ups
                .iter()
                .map(|u| up_item[u.index()])
                .chain(tile.downs.iter().map(down_item))
                .collect();
            placements.push(Placement {
                kind: tile.kind,
                items,
                tile,
            });
        };

        for d in &downs {
            let nb: SmallVec<[_; 3]> = d
                .up_neighbors()
                .into_iter()
                .filter(|&u| region.contains_up(u))
                .collect();
            if req.allows(TileKind::Rhombus) {
                for &u in &nb {
                    push(Tile::rhombus(u, *d).unwrap());
                }
            }
            if req.allows(TileKind::Trapezoid1) {
                for i in 0..nb.len() {
                    for j in i + 1..nb.len() {
                        push(Tile::new(TileKind::Trapezoid1, &[nb[i], nb[j]], &[*d]).unwrap());
                    }
                }
            }
            if req.allows(TileKind::UnitDown) {
                push(Tile::unit_down(*d));
            }
        }
        for &u in &ups {
            if req.allows(TileKind::Trapezoid2) {
                let dn: SmallVec<[_; 3]> = u
                    .down_neighbors()
                    .into_iter()
                    .filter(|&d| region.contains_down(d))
                    .collect();
                for i in 0..dn.len() {
                    for j in i + 1..dn.len() {
                        push(Tile::new(TileKind::Trapezoid2, &[u], &[dn[i], dn[j]]).unwrap());
                    }
                }
            }
            if req.allows(TileKind::UnitUp) {
                push(Tile::unit_up(u));
            }
        }

        let mut by_item = vec![Vec::new(); n_up + downs.len()];
        for (pi, p) in placements.iter().enumerate() {
            for &it in &p.items {
                by_item[it as usize].push(pi as u32);
            }
        }
        Problem {
            n_up,
            n_down: downs.len(),
            placements,
            by_item,
            region: region.clone(),
        }
    }
}

/// Large stand-in for an unbounded count in the pruning arithmetic.
const UNBOUNDED: i64 = 1 << 40;

struct Search<'a> {
    problem: &'a Problem,
    bounds: [KindBounds; 5],
    covered: Vec<bool>,
    counts: [usize; 5],
    rem_up: usize,
    rem_down: usize,
    chosen: Vec<u32>,
    nodes: &'a mut u64,
    limit: u64,
}

impl Search<'_> {
    fn remaining(&self, kind: TileKind) -> (i64, i64) {
        let b = self.bounds[kind.slot()];
        let c = self.counts[kind.slot()];
        let lo = b.min.saturating_sub(c) as i64;
        let hi = if b.max == usize::MAX {
            UNBOUNDED
        } else {
            b.max.saturating_sub(c) as i64
        };
        (lo, hi)
    }

    /// Necessary cell-count conditions for completing the cover: each kind
    /// shifts `#up - #down` by a fixed amount, and forced tiles need cells.
    fn counts_feasible(&self) -> bool {
        let diff = self.rem_up as i64 - self.rem_down as i64;
        let (mut lo, mut hi) = (0i64, 0i64);
        let (mut need_up, mut need_down) = (0i64, 0i64);
        for kind in TileKind::ALL {
            let (klo, khi) = self.remaining(kind);
            if klo > khi {
                return false;
            }
            let (u, d) = kind.shape();
            let shift = u as i64 - d as i64;
            match shift.signum() {
                1 => {
                    lo += klo * shift;
                    hi += khi.min(UNBOUNDED) * shift;
                }
                -1 => {
                    lo += khi.min(UNBOUNDED) * shift;
                    hi += klo * shift;
                }
                _ => {}
            }
            need_up += klo * u as i64;
            need_down += klo * d as i64;
        }
        lo <= diff
            && diff <= hi
            && need_up <= self.rem_up as i64
            && need_down <= self.rem_down as i64
    }

    fn available(&self, pi: u32) -> bool {
        let p = &self.problem.placements[pi as usize];
        self.counts[p.kind.slot()] < self.bounds[p.kind.slot()].max
            && p.items.iter().all(|&it| !self.covered[it as usize])
    }

    fn apply(&mut self, pi: u32, on: bool) {
        let p = &self.problem.placements[pi as usize];
        for &it in &p.items {
            self.covered[it as usize] = on;
        }
        let (u, d) = p.kind.shape();
        if on {
            self.counts[p.kind.slot()] += 1;
            self.rem_up -= u;
            self.rem_down -= d;
            self.chosen.push(pi);
        } else {
            self.counts[p.kind.slot()] -= 1;
            self.rem_up += u;
            self.rem_down += d;
            self.chosen.pop();
        }
    }

    fn run(&mut self) -> Result<bool> {
        *self.nodes += 1;
        if *self.nodes > self.limit {
            return Err(Error::ResourceLimit {
                what: "exact-cover search nodes".into(),
                limit: self.limit,
            });
        }
        if !self.counts_feasible() {
            return Ok(false);
        }
        if self.rem_up == 0 && self.rem_down == 0 {
            return Ok(TileKind::ALL
                .iter()
                .all(|k| self.counts[k.slot()] >= self.bounds[k.slot()].min));
        }

        let mut best: Option<(usize, usize)> = None;
        for item in 0..self.covered.len() {
            if self.covered[item] {
                continue;
            }
            let options = self.problem.by_item[item]
                .iter()
                .filter(|&&pi| self.available(pi))
                .count();
            if best.is_none_or(|(_, b)| options < b) {
                best = Some((item, options));
                if options == 0 {
                    return Ok(false);
                }
            }
        }
        let (item, _) = best.expect("an uncovered item exists");
        let problem = self.problem;
        for &pi in &problem.by_item[item] {
            if !self.available(pi) {
                continue;
            }
            self.apply(pi, true);
            if self.run()? {
                return Ok(true);
            }
            self.apply(pi, false);
        }
        Ok(false)
    }
}

fn search(
    problem: &Problem,
    bounds: [KindBounds; 5],
    nodes: &mut u64,
    limit: u64,
) -> Result<Option<Tiling>> {
    let mut s = Search {
        problem,
        bounds,
        covered: vec![false; problem.n_up + problem.n_down],
        counts: [0; 5],
        rem_up: problem.n_up,
        rem_down: problem.n_down,
        chosen: Vec::new(),
        nodes,
        limit,
    };
    if !s.run()? {
        return Ok(None);
    }
    let tiles = s
        .chosen
        .iter()
        .map(|&pi| problem.placements[pi as usize].tile.clone())
        .collect();
    Ok(Some(Tiling::new(problem.region.clone(), tiles)))
}

/// Largest count of `kind` that the region's cell numbers allow.
fn natural_max(problem: &Problem, kind: TileKind) -> usize {
    let (u, d) = kind.shape();
    let by_up = problem.n_up.checked_div(u).unwrap_or(usize::MAX);
    let by_down = problem.n_down.checked_div(d).unwrap_or(usize::MAX);
    by_up.min(by_down)
}

/// Exact tiling of the region with the allowed tile kinds and count bounds.
///
/// Returns `Ok(None)` when no tiling exists. With [`Objective::Minimize`],
/// levels `0, 1, 2, ...` are tried in turn; if the minimum lies above the
/// configured bound the call fails with a resource-limit error.
pub fn tile_exact(region: &HoleyRegion, req: &TileRequest) -> Result<Option<Tiling>> {
    let problem = Problem::build(region, req);
    let mut nodes = 0u64;
    let limit = req.budget.0;
    match req.objective {
        Objective::None => search(&problem, req.bounds, &mut nodes, limit),
        Objective::RequireExact(kind, v) => {
            let mut bounds = req.bounds;
            bounds[kind.slot()] = bounds[kind.slot()].meet(KindBounds::exactly(v));
            search(&problem, bounds, &mut nodes, limit)
        }
        Objective::Minimize(kind) => {
            let base = req.bounds[kind.slot()];
            let cap = base.max.min(natural_max(&problem, kind));
            let bound = req.minimize_bound.unwrap_or(region.n() as usize);
            for level in base.min..=cap.min(bound) {
                let mut bounds = req.bounds;
                bounds[kind.slot()] = KindBounds::exactly(level);
                if let Some(t) = search(&problem, bounds, &mut nodes, limit)? {
                    return Ok(Some(t));
                }
            }
            if cap <= bound {
                return Ok(None);
            }
            // Distinguish "no tiling at all" from "minimum above the bound".
            let mut bounds = req.bounds;
            bounds[kind.slot()] = KindBounds {
                min: bound + 1,
                max: cap,
            };
            match search(&problem, bounds, &mut nodes, limit)? {
                None => Ok(None),
                Some(_) => Err(Error::ResourceLimit {
                    what: format!("minimum number of {kind} tiles exceeds the search bound"),
                    limit: bound as u64,
                }),
            }
        }
    }
}

/// Fewest type-2 trapezoids in a tiling of the region by rhombi and
/// trapezoids of both types; `None` if no such tiling exists.
pub fn min_type2(
    region: &HoleyRegion,
    budget: SearchBudget,
    bound: Option<usize>,
) -> Result<Option<usize>> {
    let mut req = TileRequest::trapezoids()
        .objective(Objective::Minimize(TileKind::Trapezoid2))
        .budget(budget);
    req.minimize_bound = bound;
    Ok(tile_exact(region, &req)?.map(|t| t.counts().t2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::MatroidContext;
    use crate::tiler::validate_tiling;
    use crate::trigrid::{CellSet, UpCell};

    fn region(n: u32, cells: &[[u32; 3]]) -> HoleyRegion {
        HoleyRegion::new(CellSet::from_cells(n, cells.iter().map(|&c| UpCell::from(c))).unwrap())
    }

    fn rhombus_t1() -> TileRequest {
        TileRequest::new(&[TileKind::Rhombus, TileKind::Trapezoid1])
    }

    #[test]
    fn independent_holes_take_n_minus_s_t1() {
        for (n, cells) in [
            (3u32, vec![]),
            (3, vec![[2, 0, 0]]),
            (4, vec![[3, 0, 0], [0, 3, 0], [0, 0, 3]]),
            (4, vec![[1, 1, 1], [2, 1, 0]]),
        ] {
            let r = region(n, &cells);
            let t = tile_exact(&r, &rhombus_t1())
                .unwrap()
                .expect("independent set tiles");
            let check = validate_tiling(&t);
            assert!(check.is_valid(), "{:?}", check.issues);
            assert_eq!(check.counts.t1, n as usize - cells.len());
            assert_eq!(check.counts.t2, 0);
        }
    }

    #[test]
    fn rank2_circuit_isolates_a_down_cell() {
        let r = region(3, &[[2, 0, 0], [1, 1, 0], [1, 0, 1]]);
        assert!(tile_exact(&r, &TileRequest::trapezoids())
            .unwrap()
            .is_none());
        assert_eq!(min_type2(&r, SearchBudget::default(), None).unwrap(), None);
    }

    #[test]
    fn min_type2_of_independent_is_zero() {
        let r = region(4, &[[1, 1, 1]]);
        assert_eq!(
            min_type2(&r, SearchBudget::default(), None).unwrap(),
            Some(0)
        );
    }

    #[test]
    fn large_circuits_need_one_type2() {
        let ctx = MatroidContext::new(4).unwrap();
        let mut seen = 0;
        for mask in 0..1u64 << 10 {
            let s = CellSet::from_mask(4, mask).unwrap();
            if s.len() >= 4 && ctx.is_circuit(&s) {
                seen += 1;
                let r = HoleyRegion::new(s);
                assert_eq!(
                    min_type2(&r, SearchBudget::default(), None).unwrap(),
                    Some(1)
                );
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn require_exact_and_bounds() {
        let r = region(3, &[]);
        // t1 - t2 = 3 is forced, so t1 = 2 is impossible without t2
        let req = rhombus_t1().objective(Objective::RequireExact(TileKind::Trapezoid1, 2));
        assert!(tile_exact(&r, &req).unwrap().is_none());
        let req =
            TileRequest::trapezoids().objective(Objective::RequireExact(TileKind::Trapezoid1, 3));
        let t = tile_exact(&r, &req)
            .unwrap()
            .expect("three t1 tiles cover T_3");
        assert_eq!(
            (t.counts().t1, t.counts().t2, t.counts().rhombus),
            (3, 0, 0)
        );
        assert!(validate_tiling(&t).is_valid());
    }

    #[test]
    fn unit_tiles_are_supported() {
        let r = region(3, &[[2, 0, 0], [1, 1, 0], [1, 0, 1]]);
        let req = TileRequest::new(&[TileKind::Rhombus, TileKind::UnitUp, TileKind::UnitDown])
            .objective(Objective::Minimize(TileKind::UnitDown));
        let t = tile_exact(&r, &req).unwrap().unwrap();
        assert!(validate_tiling(&t).is_valid());
        assert_eq!(t.counts().unit_down, 1);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let r = region(5, &[]);
        let req = rhombus_t1().budget(SearchBudget(3));
        assert!(matches!(
            tile_exact(&r, &req),
            Err(Error::ResourceLimit { limit: 3, .. })
        ));
    }

    #[test]
    fn minimize_bound_reports_resource_limit() {
        let ctx = MatroidContext::new(4).unwrap();
        let circuit = (0..1u64 << 10)
            .map(|m| CellSet::from_mask(4, m).unwrap())
            .find(|s| s.len() == 4 && ctx.is_circuit(s))
            .unwrap();
        let r = HoleyRegion::new(circuit);
        let req = TileRequest::trapezoids()
            .objective(Objective::Minimize(TileKind::Trapezoid2))
            .minimize_bound(0);
        assert!(matches!(
            tile_exact(&r, &req),
            Err(Error::ResourceLimit { .. })
        ));
        let req = req.minimize_bound(3);
        assert_eq!(tile_exact(&r, &req).unwrap().unwrap().counts().t2, 1);
    }
}
