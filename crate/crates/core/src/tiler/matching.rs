use super::{HoleyRegion, Tile, Tiling};
use crate::trigrid::{DownCell, UpCell};

/// Maximum matching between the down cells of the region and its up cells,
/// by repeated augmenting-path search. Returns, per down cell (canonical
/// order), the matched up cell.
fn max_matching(region: &HoleyRegion) -> (Vec<DownCell>, Vec<Option<UpCell>>) {
    let downs = region.down_cells();
    let n = region.n();
    let up_count = crate::trigrid::tri(n);
    let adj: Vec<Vec<usize>> = downs
        .iter()
        .map(|d| {
            d.up_neighbors()
                .into_iter()
                .filter(|&u| region.contains_up(u))
                .map(|u| u.index())
                .collect()
        })
        .collect();

    let mut up_owner: Vec<Option<usize>> = vec![None; up_count];
    let mut seen = vec![0u32; up_count];
    let mut stamp = 0u32;

    fn augment(
        d: usize,
        adj: &[Vec<usize>],
        up_owner: &mut [Option<usize>],
        seen: &mut [u32],
        stamp: u32,
    ) -> bool {
        for &u in &adj[d] {
            if seen[u] == stamp {
                continue;
            }
            seen[u] = stamp;
            if up_owner[u].is_none_or(|other| augment(other, adj, up_owner, seen, stamp)) {
                up_owner[u] = Some(d);
                return true;
            }
        }
        false
    }

    for d in 0..downs.len() {
        stamp += 1;
        augment(d, &adj, &mut up_owner, &mut seen, stamp);
    }

    let mut matched = vec![None; downs.len()];
    for (u, owner) in up_owner.iter().enumerate() {
        if let Some(d) = owner {
            matched[*d] = UpCell::from_index(n, u);
        }
    }
    (downs, matched)
}

/// A tiling of the region by rhombi and unit triangles with the largest
/// possible number of rhombi. Unmatched cells become unit tiles.
pub fn max_rhombi_tiling(region: &HoleyRegion) -> Tiling {
    let (downs, matched) = max_matching(region);
    let mut tiles = Vec::with_capacity(downs.len());
    let mut used = region.holes().clone();
    for (d, m) in downs.iter().zip(&matched) {
        match m {
            Some(u) => {
                used.insert(*u).expect("same n");
                tiles.push(Tile::rhombus(*u, *d).expect("matched along an edge"));
            }
            None => tiles.push(Tile::unit_down(*d)),
        }
    }
    for u in used.complement().iter() {
        tiles.push(Tile::unit_up(u));
    }
    Tiling::new(region.clone(), tiles)
}

/// A tiling of the region by rhombi alone, if one exists.
pub fn lozenge_tiling(region: &HoleyRegion) -> Option<Tiling> {
    if region.up_cells().len() != region.down_cells().len() {
        return None;
    }
    let t = max_rhombi_tiling(region);
    (t.counts().rhombus == region.down_cells().len()).then_some(t)
}
