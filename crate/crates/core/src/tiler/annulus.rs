use super::{HoleyRegion, Tile, TileKind, Tiling};
use crate::error::Result;
use crate::trigrid::{DownCell, LatticeTri, UpCell};

/// Cyclic rotation taking local coordinates (with `axis` as the row
/// coordinate) back to the triangle's own coordinates. Cyclic permutations
/// of barycentric coordinates preserve adjacency, so rotated tiles stay tiles.
fn unrotate(axis: usize, [a, b, c]: [u32; 3]) -> [u32; 3] {
    match axis {
        2 => [a, b, c],
        0 => [c, a, b],
        1 => [b, c, a],
        _ => unreachable!(),
    }
}

/// Tiles the strip of `outer` whose `axis` coordinate (relative to the
/// strip's triangle) is below `width`. Every row gets a horizontal type-1
/// trapezoid over its three leftmost triangles and rhombi for the rest.
fn tile_strip(outer: &LatticeTri, axis: usize, width: u32, tiles: &mut Vec<Tile>) {
    let k = outer.k;
    let off = outer.offset();
    let up = |[a, b, c]: [u32; 3]| {
        let [x, y, z] = unrotate(axis, [a, b, c]);
        UpCell::new(x + off[0], y + off[1], z + off[2])
    };
    let down = |[a, b, c]: [u32; 3]| {
        let [x, y, z] = unrotate(axis, [a, b, c]);
        DownCell::new(x + off[0], y + off[1], z + off[2])
    };
    for row in 0..width {
        // row has k - row up cells (a, b, row) with a + b = k - 1 - row
        let span = k - 1 - row;
        tiles.push(
            Tile::new(
                TileKind::Trapezoid1,
                &[up([span, 0, row]), up([span - 1, 1, row])],
                &[down([span - 1, 0, row])],
            )
            .expect("leftmost three triangles of a row"),
        );
        for b in 1..span {
            let d = down([span - 1 - b, b, row]);
            let u = up([span - 1 - b, b + 1, row]);
            tiles.push(Tile::rhombus(u, d).expect("right neighbour"));
        }
    }
}

/// Tiles `T_n \ T` with rhombi and exactly `n - size(T)` type-1 trapezoids,
/// without search: the annulus splits into the strips below `T` (width `r`),
/// beside it (width `q`) and on the remaining side (width `p`).
pub fn annulus_tiling(n: u32, t: &LatticeTri) -> Result<Tiling> {
    if t.n() != n {
        return Err(crate::Error::param(format!(
            "{t} is not a lattice triangle of T_{n}"
        )));
    }
    let mut tiles = Vec::new();
    let whole = LatticeTri::whole(n)?;
    tile_strip(&whole, 2, t.r, &mut tiles);
    let upper = LatticeTri::new(0, 0, t.r, n - t.r)?;
    tile_strip(&upper, 1, t.q, &mut tiles);
    let inner = LatticeTri::new(0, t.q, t.r, n - t.q - t.r)?;
    tile_strip(&inner, 0, t.p, &mut tiles);
    Ok(Tiling::new(HoleyRegion::without_triangle(t), tiles))
}
