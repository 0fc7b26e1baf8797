use std::collections::HashMap;

use super::{validate_tiling, Tile, TileKind, Tiling};
use crate::error::{Error, Result};
use crate::trigrid::{DownCell, UpCell};

/// Unit down tiles whose above cell is covered by neither a hole nor a
/// unit up tile.
pub fn unsupported_unit_downs(t: &Tiling) -> Vec<DownCell> {
    let unit_ups: Vec<UpCell> = t
        .tiles
        .iter()
        .filter(|x| x.kind == TileKind::UnitUp)
        .map(|x| x.ups[0])
        .collect();
    t.tiles
        .iter()
        .filter(|x| x.kind == TileKind::UnitDown)
        .map(|x| x.downs[0])
        .filter(|d| {
            let above = d.above();
            !t.region.holes().contains(above) && !unit_ups.contains(&above)
        })
        .collect()
}

fn checked(t: &Tiling) -> Result<()> {
    let check = validate_tiling(t);
    if let Some(issue) = check.issues.first() {
        return Err(Error::InvalidTiling(issue.to_string()));
    }
    Ok(())
}

/// Slides unit down tiles upward until each sits directly below a hole or
/// a unit up tile. One move takes a unit down `X` whose above cell `A` is
/// covered by a rhombus with `D'` (necessarily in the row above `X`),
/// pairs `A` with `X`, and leaves `D'` as the unit down. The row sum of the
/// unit downs grows with every move, so the loop stops.
pub fn reconfigure_up(t: &Tiling) -> Result<Tiling> {
    checked(t)?;
    if let Some(x) = t.tiles.iter().find(|x| {
        !matches!(
            x.kind,
            TileKind::Rhombus | TileKind::UnitUp | TileKind::UnitDown
        )
    }) {
        return Err(Error::InvalidTiling(format!(
            "reconfiguration takes rhombi and unit triangles, found a {} tile",
            x.kind
        )));
    }

    let mut out = t.clone();
    let mut up_owner: HashMap<UpCell, usize> = HashMap::new();
    for (i, x) in out.tiles.iter().enumerate() {
        for &u in &x.ups {
            up_owner.insert(u, i);
        }
    }
    loop {
        let step = out.tiles.iter().enumerate().find_map(|(i, x)| {
            if x.kind != TileKind::UnitDown {
                return None;
            }
            let above = x.downs[0].above();
            let j = *up_owner.get(&above)?;
            (out.tiles[j].kind == TileKind::Rhombus).then_some((i, j))
        });
        let Some((i, j)) = step else { break };
        let x = out.tiles[i].downs[0];
        let above = x.above();
        let shifted = out.tiles[j].downs[0];
        debug_assert_eq!(shifted.row(), x.row() + 1);
        out.tiles[i] = Tile::rhombus(above, x)?;
        out.tiles[j] = Tile::unit_down(shifted);
        up_owner.insert(above, i);
        checked(&out)?;
    }
    Ok(out)
}
