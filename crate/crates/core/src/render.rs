//! Deterministic SVG pictures of regions and their tilings.
//!
//! Coordinates are fixed-point integers in hundredths of a pixel, computed
//! from the integer skew frame, so identical input gives identical bytes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::error::Result;
use crate::lattice::{Cell, Color, Point, SCALE};
use crate::matching::Matching;
use crate::region::Region;

/// Pixels per lattice spacing.
pub const UNIT: i64 = 60;
const MARGIN: i64 = 10;
/// `sqrt(3) / 2` to six places.
const HALF_ROOT3_MICRO: i128 = 866_025;

const TILE_FILLS: [&str; 6] = ["#e8c468", "#8fb9a8", "#d98c6c", "#a3a6d6", "#c9d68f", "#d6a3c4"];

/// A point in hundredths of a pixel, y pointing down, before translation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Fixed(i64, i64);

fn round_div(n: i128, d: i128) -> i64 {
    let q = if n >= 0 { (2 * n + d) / (2 * d) } else { -((-2 * n + d) / (2 * d)) };
    q as i64
}

fn fixed(p: Point) -> Fixed {
    let u = 100 * UNIT as i128;
    let s = SCALE as i128;
    let x = round_div(p.x as i128 * u * HALF_ROOT3_MICRO, s * 1_000_000);
    let y = round_div(-(p.x as i128 * u + 2 * p.y as i128 * u), 2 * s);
    Fixed(x, y)
}

fn num(v: i64) -> String {
    let sign = if v < 0 { "-" } else { "" };
    let a = v.unsigned_abs();
    format!("{sign}{}.{:02}", a / 100, a % 100)
}

type Edge = (Point, Point);

fn edge(p: Point, q: Point) -> Edge {
    (p.min(q), p.max(q))
}

fn cell_edges(c: Cell) -> [Edge; 3] {
    let [a, b, m] = c.corners();
    [edge(a, b), edge(b, m), edge(m, a)]
}

struct Canvas {
    origin: Fixed,
    width: i64,
    height: i64,
    body: String,
}

impl Canvas {
    fn new(points: impl Iterator<Item = Point>) -> Canvas {
        let pts: Vec<Fixed> = points.map(fixed).collect();
        let m = 100 * MARGIN;
        let (x0, x1, y0, y1) = if pts.is_empty() {
            (0, 0, 0, 0)
        } else {
            (
                pts.iter().map(|p| p.0).min().unwrap(),
                pts.iter().map(|p| p.0).max().unwrap(),
                pts.iter().map(|p| p.1).min().unwrap(),
                pts.iter().map(|p| p.1).max().unwrap(),
            )
        };
        Canvas { origin: Fixed(x0 - m, y0 - m), width: x1 - x0 + 2 * m, height: y1 - y0 + 2 * m, body: String::new() }
    }

    fn at(&self, p: Point) -> (String, String) {
        let f = fixed(p);
        (num(f.0 - self.origin.0), num(f.1 - self.origin.1))
    }

    fn polygon(&mut self, pts: &[Point], fill: &str) {
        let coords: Vec<String> = pts
            .iter()
            .map(|&p| {
                let (x, y) = self.at(p);
                format!("{x},{y}")
            })
            .collect();
        writeln!(self.body, r#"<polygon points="{}" fill="{fill}"/>"#, coords.join(" ")).unwrap();
    }

    fn lines(&mut self, edges: &BTreeSet<Edge>, class: &str) {
        if edges.is_empty() {
            return;
        }
        let mut d = String::new();
        for &(p, q) in edges {
            let ((x1, y1), (x2, y2)) = (self.at(p), self.at(q));
            write!(d, "M{x1} {y1}L{x2} {y2}").unwrap();
        }
        writeln!(self.body, r#"<path class="{class}" d="{d}"/>"#).unwrap();
    }

    fn finish(self) -> String {
        let (w, h) = (num(self.width), num(self.height));
        let mut s = String::new();
        writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#).unwrap();
        writeln!(
            s,
            "<style>.grid{{stroke:#9a9a9a;stroke-width:0.6;fill:none}}.tile{{stroke:#202020;stroke-width:1.2;fill:none}}.boundary{{stroke:#000;stroke-width:2.6;fill:none;stroke-linejoin:round}}</style>"
        )
        .unwrap();
        s.push_str(&self.body);
        s.push_str("</svg>\n");
        s
    }
}

/// Cell sides with the cells on either side that belong to `cells`.
fn side_map(cells: &BTreeSet<Cell>) -> BTreeMap<Edge, Vec<Cell>> {
    let mut map: BTreeMap<Edge, Vec<Cell>> = BTreeMap::new();
    for &c in cells {
        for e in cell_edges(c) {
            map.entry(e).or_default().push(c);
        }
    }
    map
}

fn boundary(sides: &BTreeMap<Edge, Vec<Cell>>) -> BTreeSet<Edge> {
    sides.iter().filter(|(_, cs)| cs.len() == 1).map(|(&e, _)| e).collect()
}

fn canvas_for(region: &Region) -> Canvas {
    Canvas::new(region.cells.iter().flat_map(|c| c.corners()))
}

/// The region's cells shaded by color class, every cell side drawn thin (so
/// unit triangles appear with their altitudes) and the boundary bold.
pub fn render_region(region: &Region) -> String {
    let mut canvas = canvas_for(region);
    for &c in &region.cells {
        canvas.polygon(&c.corners(), if c.color() == Color::White { "#ffffff" } else { "#dcdcdc" });
    }
    let sides = side_map(&region.cells);
    let grid: BTreeSet<Edge> = sides.keys().copied().collect();
    canvas.lines(&grid, "grid");
    canvas.lines(&boundary(&sides), "boundary");
    canvas.finish()
}

/// Direction class, 0..6, of a shared cell side, used to color its tile.
fn tile_class((p, q): Edge) -> usize {
    let (f, g) = (fixed(p), fixed(q));
    let (dx, dy) = ((g.0 - f.0) as f64, (g.1 - f.1) as f64);
    let deg = dy.atan2(dx).to_degrees().rem_euclid(180.0);
    ((deg + 15.0) / 30.0).floor() as usize % 6
}

/// A tiling given as a perfect matching of the region's dual: each tile is
/// a pair of cells filled together with the side between them left out.
pub fn render_tiling(region: &Region, m: &Matching) -> Result<String> {
    let g = region.dual()?;
    m.check_perfect(&g)?;
    let cell = |v: usize| g.vertex(v).cell.expect("region dual");
    let mut tile_of: BTreeMap<Cell, usize> = BTreeMap::new();
    let pairs: Vec<(Cell, Cell)> = m.pairs().map(|(u, v)| (cell(u), cell(v))).collect();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        tile_of.insert(a, i);
        tile_of.insert(b, i);
    }
    let mut canvas = canvas_for(region);
    let sides = side_map(&region.cells);
    for &(a, b) in &pairs {
        let shared = cell_edges(a).into_iter().find(|e| cell_edges(b).contains(e)).expect("adjacent cells");
        let fill = TILE_FILLS[tile_class(shared)];
        canvas.polygon(&a.corners(), fill);
        canvas.polygon(&b.corners(), fill);
    }
    let grid: BTreeSet<Edge> = sides.keys().copied().collect();
    canvas.lines(&grid, "grid");
    let cuts: BTreeSet<Edge> = sides
        .iter()
        .filter(|(_, cs)| cs.len() == 2 && tile_of[&cs[0]] != tile_of[&cs[1]])
        .map(|(&e, _)| e)
        .collect();
    canvas.lines(&cuts, "tile");
    canvas.lines(&boundary(&sides), "boundary");
    Ok(canvas.finish())
}
