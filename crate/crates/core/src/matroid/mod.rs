//! Definition-based oracles for the tiling matroid `T_n`.
//!
//! A set of up cells is independent when every lattice upward triangle of
//! size `k` holds at most `k` of its members. Everything else here (rank,
//! closure, circuits, flats) is derived from that one test.

mod enumerate;

pub use enumerate::{enumerate, Budget, Enumeration, SetKind};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tiler::{max_rhombi_tiling, HoleyRegion};
use crate::trigrid::{
    binom2, check_n, classify, lattice_triangles, CellSet, LatticeTri, Saturation, SaturationClass,
    UpCell,
};

/// `T_n` together with every lattice triangle and its member bitmask.
#[derive(Debug, Clone)]
pub struct MatroidContext {
    n: u32,
    triangles: Vec<LatticeTri>,
    masks: Vec<CellSet>,
}

impl MatroidContext {
    pub fn new(n: u32) -> Result<Self> {
        check_n(n)?;
        let triangles = lattice_triangles(n)?;
        let masks = triangles.iter().map(LatticeTri::cells).collect();
        Ok(MatroidContext {
            n,
            triangles,
            masks,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ground_set(&self) -> CellSet {
        CellSet::full(self.n).expect("validated n")
    }

    pub fn triangles(&self) -> &[LatticeTri] {
        &self.triangles
    }

    /// Lattice triangles paired with their `u(T)` bitmasks.
    pub fn triangles_with_cells(&self) -> impl Iterator<Item = (&LatticeTri, &CellSet)> {
        self.triangles.iter().zip(&self.masks)
    }

    fn check(&self, s: &CellSet) -> Result<()> {
        if s.n() != self.n {
            return Err(Error::param(format!(
                "cell set over T_{} passed to the T_{} matroid",
                s.n(),
                self.n
            )));
        }
        Ok(())
    }

    /// First lattice triangle (in the context's order) holding more members
    /// of `s` than its size, with that member count.
    pub fn violation(&self, s: &CellSet) -> Option<(LatticeTri, usize)> {
        assert_eq!(s.n(), self.n, "cell set over a different ambient size");
        let size = s.len();
        self.triangles_with_cells()
            // a size-k triangle can only be violated by more than k cells
            .filter(|(t, _)| (t.k as usize) < size)
            .map(|(t, m)| (*t, s.intersection_len(m)))
            .find(|&(t, count)| count > t.k as usize)
    }

    pub fn is_independent(&self, s: &CellSet) -> bool {
        self.violation(s).is_none()
    }

    /// Greedy rank over the canonical cell order.
    pub fn rank(&self, s: &CellSet) -> usize {
        self.greedy_basis(s).len()
    }

    /// A maximal independent subset of `s`, built greedily.
    pub fn greedy_basis(&self, s: &CellSet) -> CellSet {
        let mut acc = CellSet::empty(self.n).expect("validated n");
        for u in s.iter() {
            acc.insert(u).expect("same n");
            if !self.is_independent(&acc) {
                acc.remove(u);
            }
        }
        acc
    }

    /// Rank read off a maximum-rhombi tiling of the holey region of `s`:
    /// `|s| - (C(n,2) - rhombi)`.
    pub fn rank_via_matching(&self, s: &CellSet) -> Result<usize> {
        self.check(s)?;
        let region = HoleyRegion::new(s.clone());
        let tiling = max_rhombi_tiling(&region);
        let unmatched_down = binom2(self.n) - tiling.counts().rhombus;
        Ok(s.len() - unmatched_down)
    }

    pub fn closure(&self, s: &CellSet) -> CellSet {
        let base = self.rank(s);
        let mut out = s.clone();
        for u in s.complement().iter() {
            let ext = s.with(u).expect("same n");
            if self.rank(&ext) == base {
                out.insert(u).expect("same n");
            }
        }
        out
    }

    pub fn is_basis(&self, s: &CellSet) -> bool {
        s.len() == self.n as usize && self.is_independent(s)
    }

    /// Minimal dependent: dependent, and independent after removing any member.
    pub fn is_circuit(&self, s: &CellSet) -> bool {
        !s.is_empty()
            && !self.is_independent(s)
            && s.iter().all(|u| self.is_independent(&s.without(u)))
    }

    pub fn is_flat_closure(&self, s: &CellSet) -> bool {
        self.closure(s) == *s
    }

    /// Saturation record of every lattice triangle, in context order.
    pub fn saturations<'a>(
        &'a self,
        s: &'a CellSet,
    ) -> impl Iterator<Item = (LatticeTri, Saturation)> + 'a {
        self.triangles_with_cells()
            .map(move |(t, m)| (*t, classify(s.intersection_len(m), t)))
    }

    /// The literal geometric flat test: every triangle holding at least as
    /// many members as its size must lie entirely inside `s`.
    ///
    /// This disagrees with [`is_flat_closure`](Self::is_flat_closure) on some
    /// sets, e.g. the three cells of a size-2 triangle in `T_3`: that set is
    /// closed, yet `T_3` itself holds exactly 3 of its cells without being
    /// contained in it. The `flat_geometric` check reports these cases.
    pub fn is_flat_geometric(&self, s: &CellSet) -> bool {
        self.saturations(s)
            .all(|(_, sat)| !sat.is_over() || sat.complete)
    }

    /// Lattice triangles holding strictly more members of `s` than their size.
    pub fn strictly_oversaturated(&self, s: &CellSet) -> Vec<LatticeTri> {
        self.saturations(s)
            .filter(|(_, sat)| sat.class == SaturationClass::Strict)
            .map(|(t, _)| t)
            .collect()
    }

    /// Maximal lattice triangles lying entirely inside the flat `s`.
    pub fn flat_decomposition(&self, s: &CellSet) -> Result<FlatDecomposition> {
        self.check(s)?;
        if !self.is_flat_closure(s) {
            return Err(Error::Precondition(format!("{s} is not a flat")));
        }
        let complete: Vec<(LatticeTri, &CellSet)> = self
            .triangles_with_cells()
            .filter(|(_, m)| m.is_subset(s))
            .map(|(t, m)| (*t, m))
            .collect();
        let maximal: Vec<(LatticeTri, &CellSet)> = complete
            .iter()
            .filter(|(t, m)| !complete.iter().any(|(o, om)| o != t && m.is_subset(om)))
            .copied()
            .collect();

        let mut covered = CellSet::empty(self.n)?;
        let mut overlaps = Vec::new();
        for (i, (t, m)) in maximal.iter().enumerate() {
            for (o, om) in &maximal[i + 1..] {
                if m.intersection_len(om) > 0 {
                    overlaps.push((*t, *o));
                }
            }
            covered = covered.union(m)?;
        }
        Ok(FlatDecomposition {
            triangles: maximal.into_iter().map(|(t, _)| t).collect(),
            uncovered: s.difference(&covered)?,
            overlaps,
        })
    }
}

/// Result of [`MatroidContext::flat_decomposition`]. For the decomposition to
/// be a disjoint cover of the flat, `uncovered` and `overlaps` are empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlatDecomposition {
    pub triangles: Vec<LatticeTri>,
    pub uncovered: CellSet,
    pub overlaps: Vec<(LatticeTri, LatticeTri)>,
}

impl FlatDecomposition {
    pub fn is_disjoint_cover(&self) -> bool {
        self.uncovered.is_empty() && self.overlaps.is_empty()
    }
}

/// Translates a set so that its hull sits at the origin; two sets have the
/// same shape exactly when their normalized coordinates agree.
pub fn normalized_shape(s: &CellSet) -> Result<Vec<[u32; 3]>> {
    let hull = crate::trigrid::triangular_hull(s)?;
    Ok(s.iter()
        .map(|u: UpCell| [u.a - hull.p, u.b - hull.q, u.c - hull.r])
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trigrid::{triangular_hull, up_cells};

    fn set(n: u32, cells: &[[u32; 3]]) -> CellSet {
        CellSet::from_cells(n, cells.iter().map(|&c| UpCell::from(c))).unwrap()
    }

    /// Independence straight from coordinates: no bitmasks, no pruning.
    fn oracle_independent(s: &CellSet) -> bool {
        let n = s.n();
        for k in 1..=n {
            for p in 0..=n - k {
                for q in 0..=n - k - p {
                    let r = n - k - p - q;
                    let count = s
                        .iter()
                        .filter(|u| u.a >= p && u.b >= q && u.c >= r)
                        .count();
                    if count > k as usize {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Rank as the size of the largest independent subset, by exhaustion.
    fn oracle_rank(s: &CellSet) -> usize {
        let members: Vec<UpCell> = s.iter().collect();
        let mut best = 0;
        for mask in 0u32..(1 << members.len()) {
            let sub = CellSet::from_cells(
                s.n(),
                members
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &u)| u),
            )
            .unwrap();
            if oracle_independent(&sub) {
                best = best.max(sub.len());
            }
        }
        best
    }

    const RANK2_CIRCUIT: [[u32; 3]; 3] = [[2, 0, 0], [1, 1, 0], [1, 0, 1]];
    const BOTTOM_ROW: [[u32; 3]; 3] = [[2, 0, 0], [1, 1, 0], [0, 2, 0]];

    #[test]
    fn independence_examples() {
        let ctx = MatroidContext::new(3).unwrap();
        assert!(ctx.is_independent(&CellSet::empty(3).unwrap()));
        assert!(ctx.is_independent(&set(3, &BOTTOM_ROW)));
        let ctx2 = MatroidContext::new(2).unwrap();
        let full = ctx2.ground_set();
        assert!(!ctx2.is_independent(&full));
        assert_eq!(
            ctx2.violation(&full),
            Some((LatticeTri::whole(2).unwrap(), 3))
        );
    }

    #[test]
    fn independence_matches_oracle() {
        for n in 1..=4u32 {
            let ctx = MatroidContext::new(n).unwrap();
            let cap = n * (n + 1) / 2;
            for mask in 0..1u64 << cap {
                let s = CellSet::from_mask(n, mask).unwrap();
                assert_eq!(ctx.is_independent(&s), oracle_independent(&s), "{s}");
            }
        }
    }

    #[test]
    fn rank_examples() {
        for n in 1..=8 {
            let ctx = MatroidContext::new(n).unwrap();
            assert_eq!(ctx.rank(&ctx.ground_set()), n as usize);
            assert_eq!(ctx.rank(&CellSet::empty(n).unwrap()), 0);
        }
        let ctx = MatroidContext::new(3).unwrap();
        assert_eq!(ctx.rank(&set(3, &RANK2_CIRCUIT)), 2);
    }

    #[test]
    fn greedy_rank_matches_exhaustive_rank() {
        for n in 1..=3u32 {
            let ctx = MatroidContext::new(n).unwrap();
            let cap = n * (n + 1) / 2;
            for mask in 0..1u64 << cap {
                let s = CellSet::from_mask(n, mask).unwrap();
                assert_eq!(ctx.rank(&s), oracle_rank(&s), "{s}");
            }
        }
    }

    #[test]
    fn rank_via_matching_examples() {
        for n in 1..=5 {
            let ctx = MatroidContext::new(n).unwrap();
            assert_eq!(
                ctx.rank_via_matching(&CellSet::empty(n).unwrap()).unwrap(),
                0
            );
        }
        let ctx = MatroidContext::new(3).unwrap();
        assert_eq!(ctx.rank_via_matching(&set(3, &BOTTOM_ROW)).unwrap(), 3);
        assert_eq!(ctx.rank_via_matching(&set(3, &RANK2_CIRCUIT)).unwrap(), 2);
    }

    #[test]
    fn closure_examples() {
        let ctx = MatroidContext::new(3).unwrap();
        let empty = CellSet::empty(3).unwrap();
        assert_eq!(ctx.closure(&empty), empty);
        assert_eq!(ctx.closure(&set(3, &BOTTOM_ROW)), ctx.ground_set());
        assert_eq!(
            ctx.closure(&set(3, &[[2, 0, 0], [1, 1, 0]])),
            set(3, &RANK2_CIRCUIT)
        );
    }

    #[test]
    fn basis_and_circuit_examples() {
        let ctx2 = MatroidContext::new(2).unwrap();
        for mask in [0b011u64, 0b101, 0b110] {
            assert!(ctx2.is_basis(&CellSet::from_mask(2, mask).unwrap()));
        }
        let ctx = MatroidContext::new(3).unwrap();
        assert!(ctx.is_basis(&set(3, &BOTTOM_ROW)));
        assert!(!ctx.is_basis(&set(3, &RANK2_CIRCUIT)));
        assert!(ctx.is_circuit(&set(3, &RANK2_CIRCUIT)));
        for u in up_cells(3).unwrap() {
            assert!(!ctx.is_circuit(&CellSet::from_cells(3, [u]).unwrap()));
        }
        let ctx4 = MatroidContext::new(4).unwrap();
        let row = set(4, &[[3, 0, 0], [2, 1, 0], [1, 2, 0], [0, 3, 0]]);
        assert!(ctx4.is_basis(&row));
        assert!(!ctx4.is_circuit(&row));
    }

    #[test]
    fn flat_examples() {
        let ctx = MatroidContext::new(3).unwrap();
        let empty = CellSet::empty(3).unwrap();
        assert!(ctx.is_flat_closure(&ctx.ground_set()));
        assert!(ctx.is_flat_geometric(&ctx.ground_set()));
        assert!(ctx.is_flat_closure(&empty));
        assert!(!ctx.is_flat_closure(&set(3, &BOTTOM_ROW)));
        assert!(!ctx.is_flat_geometric(&set(3, &[[2, 0, 0], [1, 1, 0]])));

        // the documented disagreement between the two flat tests
        let f = set(3, &RANK2_CIRCUIT);
        assert!(ctx.is_flat_closure(&f));
        assert!(!ctx.is_flat_geometric(&f));
    }

    #[test]
    fn strictly_oversaturated_examples() {
        let ctx = MatroidContext::new(3).unwrap();
        assert!(ctx.strictly_oversaturated(&set(3, &BOTTOM_ROW)).is_empty());
        assert_eq!(
            ctx.strictly_oversaturated(&set(3, &RANK2_CIRCUIT)),
            vec![LatticeTri::new(1, 0, 0, 2).unwrap()]
        );
    }

    #[test]
    fn flat_decomposition_examples() {
        for n in 1..=4 {
            let ctx = MatroidContext::new(n).unwrap();
            let d = ctx.flat_decomposition(&ctx.ground_set()).unwrap();
            assert_eq!(d.triangles, vec![LatticeTri::whole(n).unwrap()]);
            assert!(d.is_disjoint_cover());
            let d = ctx.flat_decomposition(&CellSet::empty(n).unwrap()).unwrap();
            assert!(d.triangles.is_empty());
        }
        let ctx = MatroidContext::new(3).unwrap();
        let t = LatticeTri::new(1, 0, 0, 2).unwrap();
        let d = ctx.flat_decomposition(&t.cells()).unwrap();
        assert_eq!(d.triangles, vec![t]);
        assert!(matches!(
            ctx.flat_decomposition(&set(3, &BOTTOM_ROW)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn simple_matroid() {
        for n in 1..=8 {
            let ctx = MatroidContext::new(n).unwrap();
            let cells = up_cells(n).unwrap();
            for (i, &u) in cells.iter().enumerate() {
                assert!(ctx.is_independent(&CellSet::from_cells(n, [u]).unwrap()));
                for &v in &cells[i + 1..] {
                    assert!(ctx.is_independent(&CellSet::from_cells(n, [u, v]).unwrap()));
                }
            }
        }
    }

    #[test]
    fn circuits_have_unique_strict_triangle() {
        for n in 2..=4u32 {
            let ctx = MatroidContext::new(n).unwrap();
            let cap = n * (n + 1) / 2;
            for mask in 1..1u64 << cap {
                let s = CellSet::from_mask(n, mask).unwrap();
                if ctx.is_circuit(&s) {
                    assert_eq!(s.len() - ctx.rank(&s), 1);
                    assert_eq!(
                        ctx.strictly_oversaturated(&s),
                        vec![triangular_hull(&s).unwrap()]
                    );
                }
            }
        }
    }

    #[test]
    fn closure_laws() {
        let n = 3u32;
        let ctx = MatroidContext::new(n).unwrap();
        let all: Vec<CellSet> = (0..1u64 << 6)
            .map(|m| CellSet::from_mask(n, m).unwrap())
            .collect();
        for s in &all {
            let cl = ctx.closure(s);
            assert!(s.is_subset(&cl));
            assert_eq!(ctx.closure(&cl), cl);
            assert_eq!(ctx.rank(&cl), ctx.rank(s));
            for t in &all {
                if s.is_subset(t) {
                    assert!(cl.is_subset(&ctx.closure(t)));
                }
            }
        }
    }

    #[test]
    fn shapes() {
        let a = set(4, &[[3, 0, 0], [2, 1, 0], [2, 0, 1]]);
        let b = set(4, &[[1, 1, 1], [0, 2, 1], [0, 1, 2]]);
        assert_eq!(normalized_shape(&a).unwrap(), normalized_shape(&b).unwrap());
    }
}
