use std::fmt;

use serde::{Deserialize, Serialize};

use super::cell::{check_n, tri, DownCell, UpCell};
use super::cellset::CellSet;
use crate::error::{Error, Result};

/// A lattice upward triangle of `T_n`: the translate of `T_k` whose up cells
/// are exactly those with `a >= p`, `b >= q`, `c >= r`, where
/// `p + q + r = n - k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeTri {
    pub p: u32,
    pub q: u32,
    pub r: u32,
    pub k: u32,
}

impl LatticeTri {
    pub fn new(p: u32, q: u32, r: u32, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::param("lattice triangle size must be positive"));
        }
        check_n(p + q + r + k)?;
        Ok(LatticeTri { p, q, r, k })
    }

    /// `T_n` itself.
    pub fn whole(n: u32) -> Result<Self> {
        Self::new(0, 0, 0, n)
    }

    pub fn n(&self) -> u32 {
        self.p + self.q + self.r + self.k
    }

    pub fn size(&self) -> u32 {
        self.k
    }

    pub fn offset(&self) -> [u32; 3] {
        [self.p, self.q, self.r]
    }

    /// Number of up cells inside: `k(k+1)/2`.
    pub fn up_count(&self) -> usize {
        tri(self.k)
    }

    pub fn contains_up(&self, u: UpCell) -> bool {
        u.n() == self.n() && u.a >= self.p && u.b >= self.q && u.c >= self.r
    }

    pub fn contains_down(&self, d: DownCell) -> bool {
        d.n() == self.n() && d.a >= self.p && d.b >= self.q && d.c >= self.r
    }

    /// `u(T)` as a cell set.
    pub fn cells(&self) -> CellSet {
        let n = self.n();
        let mut s = CellSet::empty(n).expect("valid n");
        let k = self.k;
        for da in 0..k {
            for db in 0..k - da {
                let dc = k - 1 - da - db;
                s.insert(UpCell::new(self.p + da, self.q + db, self.r + dc))
                    .unwrap();
            }
        }
        s
    }

    /// Down cells inside the triangle: `k(k-1)/2` of them.
    pub fn down_cells(&self) -> Vec<DownCell> {
        let k = self.k;
        let mut out = Vec::new();
        if k < 2 {
            return out;
        }
        for da in 0..k - 1 {
            for db in 0..k - 1 - da {
                let dc = k - 2 - da - db;
                out.push(DownCell::new(self.p + da, self.q + db, self.r + dc));
            }
        }
        out
    }
}

impl fmt::Display for LatticeTri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.p, self.q, self.r, self.k)
    }
}

/// All `n(n+1)(n+2)/6` lattice upward triangles of `T_n`, ordered by size
/// and then by offset in the canonical cell order.
pub fn lattice_triangles(n: u32) -> Result<Vec<LatticeTri>> {
    check_n(n)?;
    let mut out = Vec::new();
    for k in 1..=n {
        let m = n - k;
        for p in (0..=m).rev() {
            for q in (0..=m - p).rev() {
                out.push(LatticeTri {
                    p,
                    q,
                    r: m - p - q,
                    k,
                });
            }
        }
    }
    Ok(out)
}

fn same_n(t: &LatticeTri, n: u32) -> Result<()> {
    if t.n() != n {
        return Err(Error::param(format!(
            "lattice triangle {t} lives in T_{} but T_{n} was expected",
            t.n()
        )));
    }
    Ok(())
}

/// Whether `u` lies in `t`. Errors when the two belong to different `T_n`.
pub fn tri_contains(t: &LatticeTri, u: UpCell) -> Result<bool> {
    same_n(t, u.n())?;
    Ok(t.contains_up(u))
}

/// Smallest lattice upward triangle containing every member of `s`.
pub fn triangular_hull(s: &CellSet) -> Result<LatticeTri> {
    let mut it = s.iter();
    let first = it
        .next()
        .ok_or(Error::EmptyInput("triangular hull of the empty set"))?;
    let (mut p, mut q, mut r) = (first.a, first.b, first.c);
    for u in it {
        p = p.min(u.a);
        q = q.min(u.b);
        r = r.min(u.c);
    }
    Ok(LatticeTri {
        p,
        q,
        r,
        k: s.n() - p - q - r,
    })
}

/// Saturation class of a triangle with respect to a cell set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SaturationClass {
    /// Fewer than `k` members inside.
    Under,
    /// Exactly `k` members inside.
    Saturated,
    /// More than `k` members inside.
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Saturation {
    pub count: usize,
    pub class: SaturationClass,
    /// All of `u(T)` lies in the set.
    pub complete: bool,
}

impl Saturation {
    /// Saturated or strictly over-saturated.
    pub fn is_over(&self) -> bool {
        self.class != SaturationClass::Under
    }
}

pub(crate) fn classify(count: usize, t: &LatticeTri) -> Saturation {
    let k = t.k as usize;
    let class = match count.cmp(&k) {
        std::cmp::Ordering::Less => SaturationClass::Under,
        std::cmp::Ordering::Equal => SaturationClass::Saturated,
        std::cmp::Ordering::Greater => SaturationClass::Strict,
    };
    Saturation {
        count,
        class,
        complete: count == t.up_count(),
    }
}

pub fn saturation(t: &LatticeTri, s: &CellSet) -> Result<Saturation> {
    same_n(t, s.n())?;
    let count = s.iter().filter(|&u| t.contains_up(u)).count();
    Ok(classify(count, t))
}

/// `T ∩ T'`, or `None` when the intersection holds no up cell.
pub fn tri_intersect(t: &LatticeTri, u: &LatticeTri) -> Result<Option<LatticeTri>> {
    same_n(u, t.n())?;
    let (p, q, r) = (t.p.max(u.p), t.q.max(u.q), t.r.max(u.r));
    let n = t.n();
    Ok((p + q + r < n).then(|| LatticeTri {
        p,
        q,
        r,
        k: n - p - q - r,
    }))
}

/// `T ∨ T'`, the triangular hull of `T ∪ T'`.
pub fn tri_join(t: &LatticeTri, u: &LatticeTri) -> Result<LatticeTri> {
    same_n(u, t.n())?;
    let (p, q, r) = (t.p.min(u.p), t.q.min(u.q), t.r.min(u.r));
    Ok(LatticeTri {
        p,
        q,
        r,
        k: t.n() - p - q - r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trigrid::up_cells;

    fn lt(p: u32, q: u32, r: u32, k: u32) -> LatticeTri {
        LatticeTri::new(p, q, r, k).unwrap()
    }

    fn set(n: u32, cells: &[[u32; 3]]) -> CellSet {
        CellSet::from_cells(n, cells.iter().map(|&c| UpCell::from(c))).unwrap()
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(lattice_triangles(1).unwrap(), vec![lt(0, 0, 0, 1)]);
        let t2 = lattice_triangles(2).unwrap();
        assert_eq!(t2.len(), 4);
        assert_eq!(t2.iter().filter(|t| t.k == 1).count(), 3);
        assert_eq!(t2.iter().filter(|t| t.k == 2).count(), 1);
        // sum_{k=1..4} (5-k)(6-k)/2 = 10 + 6 + 3 + 1
        assert_eq!(lattice_triangles(4).unwrap().len(), 20);
        for n in 1..=12u32 {
            let n_us = n as usize;
            assert_eq!(
                lattice_triangles(n).unwrap().len(),
                n_us * (n_us + 1) * (n_us + 2) / 6
            );
        }
    }

    #[test]
    fn containment_examples() {
        for u in up_cells(4).unwrap() {
            assert!(tri_contains(&lt(0, 0, 0, 4), u).unwrap());
        }
        assert!(tri_contains(&lt(1, 0, 0, 2), UpCell::new(1, 0, 1)).unwrap());
        assert!(!tri_contains(&lt(1, 0, 0, 2), UpCell::new(0, 2, 0)).unwrap());
        assert!(matches!(
            tri_contains(&lt(1, 0, 0, 2), UpCell::new(0, 0, 0)),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn triangle_cells_match_predicate() {
        for n in 1..=7 {
            let all = up_cells(n).unwrap();
            for t in lattice_triangles(n).unwrap() {
                let by_pred: Vec<_> = all.iter().copied().filter(|&u| t.contains_up(u)).collect();
                assert_eq!(by_pred.len(), t.up_count());
                assert_eq!(t.cells().iter().collect::<Vec<_>>(), by_pred);
                let k = t.k as usize;
                assert_eq!(t.down_cells().len(), k * (k - 1) / 2);
            }
        }
    }

    #[test]
    fn hull_examples() {
        assert_eq!(
            triangular_hull(&set(3, &[[1, 1, 0]])).unwrap(),
            lt(1, 1, 0, 1)
        );
        assert_eq!(
            triangular_hull(&set(3, &[[2, 0, 0], [0, 2, 0]])).unwrap(),
            lt(0, 0, 0, 3)
        );
        assert_eq!(
            triangular_hull(&set(3, &[[2, 0, 0], [1, 1, 0], [1, 0, 1]])).unwrap(),
            lt(1, 0, 0, 2)
        );
        assert_eq!(
            triangular_hull(&CellSet::empty(3).unwrap()),
            Err(Error::EmptyInput("triangular hull of the empty set"))
        );
    }

    #[test]
    fn hull_is_minimal() {
        for n in 1..=5u32 {
            let cap = tri(n);
            let tris = lattice_triangles(n).unwrap();
            for mask in 1u64..(1 << cap) {
                let s = CellSet::from_mask(n, mask).unwrap();
                let h = triangular_hull(&s).unwrap();
                assert!(s.is_subset(&h.cells()));
                for t in &tris {
                    if s.is_subset(&t.cells()) {
                        assert!(h.cells().is_subset(&t.cells()));
                    }
                }
            }
        }
    }

    #[test]
    fn saturation_examples() {
        let empty = CellSet::empty(3).unwrap();
        let s = saturation(&lt(0, 0, 0, 3), &empty).unwrap();
        assert_eq!(
            (s.count, s.class, s.complete),
            (0, SaturationClass::Under, false)
        );

        let s3 = set(3, &[[2, 0, 0], [1, 1, 0], [1, 0, 1]]);
        let s = saturation(&lt(1, 0, 0, 2), &s3).unwrap();
        assert_eq!(
            (s.count, s.class, s.complete),
            (3, SaturationClass::Strict, true)
        );
        let s = saturation(&lt(0, 0, 0, 3), &s3).unwrap();
        assert_eq!(
            (s.count, s.class, s.complete),
            (3, SaturationClass::Saturated, false)
        );
    }

    #[test]
    fn meet_and_join_examples() {
        let t = lt(1, 0, 0, 2);
        assert_eq!(tri_intersect(&t, &t).unwrap(), Some(t));
        assert_eq!(
            tri_intersect(&t, &lt(0, 1, 0, 2)).unwrap(),
            Some(lt(1, 1, 0, 1))
        );
        assert_eq!(
            tri_intersect(&t, &lt(0, 0, 1, 2)).unwrap(),
            Some(lt(1, 0, 1, 1))
        );
        assert_eq!(
            tri_intersect(&lt(2, 0, 0, 1), &lt(0, 2, 0, 1)).unwrap(),
            None
        );

        assert_eq!(tri_join(&t, &t).unwrap(), t);
        assert_eq!(tri_join(&t, &lt(0, 1, 0, 2)).unwrap(), lt(0, 0, 0, 3));
        assert_eq!(
            tri_join(&lt(2, 0, 0, 2), &lt(2, 0, 0, 2)).unwrap(),
            lt(2, 0, 0, 2)
        );
    }

    #[test]
    fn meet_and_join_laws() {
        for n in 1..=5 {
            let tris = lattice_triangles(n).unwrap();
            for t in &tris {
                for u in &tris {
                    let meet = tri_intersect(t, u).unwrap();
                    let common = t.cells().intersection(&u.cells()).unwrap();
                    match meet {
                        Some(m) => assert_eq!(m.cells(), common),
                        None => assert!(common.is_empty()),
                    }
                    assert_eq!(meet, tri_intersect(u, t).unwrap());
                    let join = tri_join(t, u).unwrap();
                    assert_eq!(join, tri_join(u, t).unwrap());
                    let union = t.cells().union(&u.cells()).unwrap();
                    assert!(union.is_subset(&join.cells()));
                    assert_eq!(join, triangular_hull(&union).unwrap());
                }
            }
        }
    }
}
