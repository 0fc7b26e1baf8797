//! SVG and ASCII drawings of tilings.
//!
//! Lattice vertices are integer pairs `(i, j)` drawn at `(i + j/2, j·h)`
//! with `h = √3/2`; row `j = 0` is the bottom edge. Up cell `(a, b, c)` has
//! corners `(b, c)`, `(b+1, c)`, `(b, c+1)`; down cell `(a, b, c)` has
//! corners `(b+1, c)`, `(b, c+1)`, `(b+1, c+1)`.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::tiler::{Tile, TileKind, Tiling};
use crate::trigrid::{DownCell, UpCell};

type Vertex = (i64, i64);

const SCALE: f64 = 40.0;
const MARGIN: f64 = 10.0;

fn up_corners(u: UpCell) -> [Vertex; 3] {
    let (b, c) = (u.b as i64, u.c as i64);
    [(b, c), (b + 1, c), (b, c + 1)]
}

fn down_corners(d: DownCell) -> [Vertex; 3] {
    let (b, c) = (d.b as i64, d.c as i64);
    [(b + 1, c), (b, c + 1), (b + 1, c + 1)]
}

/// Corners of the boundary of a union of edge-connected triangles, as one
/// closed walk starting from the smallest vertex. Collinearity is tested on
/// lattice coordinates, which the drawing map preserves.
fn outline(triangles: &[[Vertex; 3]]) -> Vec<Vertex> {
    let mut edges: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
    for t in triangles {
        for i in 0..3 {
            let (p, q) = (t[i], t[(i + 1) % 3]);
            *edges.entry((p.min(q), p.max(q))).or_default() += 1;
        }
    }
    let boundary: Vec<(Vertex, Vertex)> = edges
        .into_iter()
        .filter(|&(_, c)| c == 1)
        .map(|(e, _)| e)
        .collect();
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for &(p, q) in &boundary {
        adj.entry(p).or_default().push(q);
        adj.entry(q).or_default().push(p);
    }
    let Some((&start, _)) = adj.iter().next() else {
        return Vec::new();
    };
    let mut walk = vec![start];
    let mut prev = None;
    let mut cur = start;
    loop {
        let next = adj[&cur]
            .iter()
            .copied()
            .find(|&v| Some(v) != prev)
            .expect("closed boundary");
        if next == start {
            break;
        }
        walk.push(next);
        prev = Some(cur);
        cur = next;
    }
    // drop vertices in the middle of straight runs
    let len = walk.len();
    (0..len)
        .filter(|&i| {
            let (p, c, q) = (walk[(i + len - 1) % len], walk[i], walk[(i + 1) % len]);
            (c.0 - p.0) * (q.1 - c.1) != (c.1 - p.1) * (q.0 - c.0)
        })
        .map(|i| walk[i])
        .collect()
}

fn tile_triangles(tile: &Tile) -> Vec<[Vertex; 3]> {
    tile.ups
        .iter()
        .map(|&u| up_corners(u))
        .chain(tile.downs.iter().map(|&d| down_corners(d)))
        .collect()
}

fn polygon(out: &mut String, class: &str, n: u32, pts: &[Vertex]) {
    let h = 3f64.sqrt() / 2.0;
    let coords: Vec<String> = pts
        .iter()
        .map(|&(i, j)| {
            let x = MARGIN + SCALE * (i as f64 + j as f64 / 2.0);
            let y = MARGIN + SCALE * h * (n as f64 - j as f64);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    writeln!(
        out,
        r#"  <polygon class="{class}" points="{}"/>"#,
        coords.join(" ")
    )
    .unwrap();
}

/// One polygon per tile (its outline) and one per removed cell, each with a
/// class attribute naming the tile kind or `hole`.
pub fn render_svg(t: &Tiling) -> String {
    let n = t.n();
    let h = 3f64.sqrt() / 2.0;
    let width = 2.0 * MARGIN + SCALE * n as f64;
    let height = 2.0 * MARGIN + SCALE * h * n as f64;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.3}" height="{height:.3}" viewBox="0 0 {width:.3} {height:.3}">"#
    )
    .unwrap();
    out.push_str(concat!(
        "  <style>polygon{stroke:#222;stroke-width:1;stroke-linejoin:round}",
        ".hole{fill:#333}.rhombus{fill:#f2d16b}.t1{fill:#7fb3d5}.t2{fill:#c39bd3}",
        ".unit-up{fill:#f5f5f5}.unit-down{fill:#d0d0d0}</style>\n"
    ));
    for u in t.region.holes().iter() {
        polygon(&mut out, "hole", n, &up_corners(u));
    }
    for &d in t.region.cut_downs() {
        polygon(&mut out, "hole", n, &down_corners(d));
    }
    for tile in &t.tiles {
        polygon(
            &mut out,
            tile.kind.css_class(),
            n,
            &outline(&tile_triangles(tile)),
        );
    }
    out.push_str("</svg>\n");
    out
}

fn glyph(kind: TileKind) -> char {
    match kind {
        TileKind::Rhombus => 'r',
        TileKind::Trapezoid1 => '1',
        TileKind::Trapezoid2 => '2',
        TileKind::UnitUp => 'u',
        TileKind::UnitDown => 'd',
    }
}

/// `n` text rows, top row first. Row `c` lists its cells left to right,
/// alternating up and down, one character each: `#` for a removed cell, a
/// kind letter (`r`, `1`, `2`, `u`, `d`) for a covered one, `.` otherwise.
pub fn render_ascii(t: &Tiling) -> String {
    let n = t.n();
    let mut up_glyph: BTreeMap<UpCell, char> = BTreeMap::new();
    let mut down_glyph: BTreeMap<DownCell, char> = BTreeMap::new();
    for tile in &t.tiles {
        for &u in &tile.ups {
            up_glyph.insert(u, glyph(tile.kind));
        }
        for &d in &tile.downs {
            down_glyph.insert(d, glyph(tile.kind));
        }
    }
    let mut out = String::new();
    for c in (0..n).rev() {
        out.push_str(&" ".repeat(c as usize));
        let width = n - c;
        for b in 0..width {
            let u = UpCell::new(width - 1 - b, b, c);
            let g = if t.region.holes().contains(u) {
                '#'
            } else {
                *up_glyph.get(&u).unwrap_or(&'.')
            };
            out.push(g);
            if b + 1 < width {
                let d = DownCell::new(width - 2 - b, b, c);
                let g = if !t.region.contains_down(d) {
                    '#'
                } else {
                    *down_glyph.get(&d).unwrap_or(&'.')
                };
                out.push(g);
            }
        }
        out.push('\n');
    }
    out
}
