//! Explicit cell sets for the dungeon region families.
//!
//! A region is described by a closed contour along lattice lines. Each unit
//! step `V -> W` of the contour is replaced by a jagged path that cuts one
//! cell off the unit triangle lying immediately inside the step. Which of
//! the two cells on that edge is cut is fixed per side: a *tail* notch
//! removes the cell at `V`, a *head* notch the cell at `W`. The region is
//! the set of cells whose centroid has nonzero winding number with respect
//! to the jagged contour.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::contour::{derive_contour, Side, Triple};
use crate::error::{Error, Result};
use crate::graph::PlanarGraph;
use crate::lattice::{winding_number, Cell, Direction, LatticeMap, LatticePoint, Orient, Point, TriCoord, SCALE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionKind {
    HD,
    D,
    E,
    #[serde(rename = "custom")]
    Custom,
}

impl fmt::Display for RegionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegionKind::HD => "HD",
            RegionKind::D => "D",
            RegionKind::E => "E",
            RegionKind::Custom => "custom",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Notch {
    Tail,
    Head,
}

impl Notch {
    pub fn flip(self) -> Notch {
        match self {
            Notch::Tail => Notch::Head,
            Notch::Head => Notch::Tail,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContourSide {
    pub dir: Direction,
    pub len: i64,
    pub notch: Notch,
}

impl ContourSide {
    pub const fn new(dir: Direction, len: i64, notch: Notch) -> Self {
        ContourSide { dir, len, notch }
    }
}

/// A closed jagged contour, as the polygon through its corners in scaled
/// coordinates.
pub fn jagged_polygon(start: LatticePoint, sides: &[ContourSide]) -> Result<Vec<Point>> {
    let mut pts = Vec::new();
    let mut v = start;
    for side in sides {
        if side.len < 0 {
            return Err(Error::Parse(format!("negative side length {}", side.len)));
        }
        for _ in 0..side.len {
            let w = v.offset(side.dir, 1);
            let apex = v.offset(side.dir.rotate(1), 1);
            let mid = Point::new(SCALE / 2 * (v.i + w.i), SCALE / 2 * (v.j + w.j));
            let k = SCALE / 3;
            let center = Point::new(k * (v.i + w.i + apex.i), k * (v.j + w.j + apex.j));
            pts.push(v.scaled());
            match side.notch {
                Notch::Tail => pts.extend([center, mid]),
                Notch::Head => pts.extend([mid, center]),
            }
            v = w;
        }
    }
    if v != start {
        return Err(Error::Parse(format!("contour does not close: ends at ({}, {})", v.i, v.j)));
    }
    Ok(pts)
}

/// Cells whose centroids the polygon winds around.
pub fn cells_inside(poly: &[Point]) -> BTreeSet<Cell> {
    let mut out = BTreeSet::new();
    if poly.is_empty() {
        return out;
    }
    let lo_i = poly.iter().map(|p| p.x.div_euclid(SCALE)).min().unwrap() - 1;
    let hi_i = poly.iter().map(|p| p.x.div_euclid(SCALE)).max().unwrap() + 1;
    let lo_j = poly.iter().map(|p| p.y.div_euclid(SCALE)).min().unwrap() - 1;
    let hi_j = poly.iter().map(|p| p.y.div_euclid(SCALE)).max().unwrap() + 1;
    for row in lo_j..=hi_j {
        for col in lo_i..=hi_i {
            for orient in [Orient::Up, Orient::Down] {
                for cell in TriCoord::new(row, col, orient).cells() {
                    if winding_number(cell.centroid(), poly) != 0 {
                        out.insert(cell);
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub kind: RegionKind,
    pub params: Vec<i64>,
    pub cells: BTreeSet<Cell>,
}

/// Removes connected pieces made of exactly two cells, which acute contour
/// corners leave behind.
pub fn prune_detached_tiles(cells: &mut BTreeSet<Cell>) {
    let mut seen = BTreeSet::new();
    let mut loose = Vec::new();
    for &start in cells.iter() {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut k = 0;
        while k < comp.len() {
            for n in comp[k].neighbors() {
                if cells.contains(&n) && seen.insert(n) {
                    comp.push(n);
                }
            }
            k += 1;
        }
        if comp.len() == 2 {
            loose.extend(comp);
        }
    }
    for c in loose {
        cells.remove(&c);
    }
}

/// Cells enclosed by a jagged contour, without detached two-cell pieces.
pub fn contour_cells(start: LatticePoint, sides: &[ContourSide]) -> Result<BTreeSet<Cell>> {
    let mut cells = cells_inside(&jagged_polygon(start, sides)?);
    prune_detached_tiles(&mut cells);
    Ok(cells)
}

fn contour_region(kind: RegionKind, params: Vec<i64>, start: LatticePoint, sides: &[ContourSide]) -> Result<Region> {
    Ok(Region { kind, params, cells: contour_cells(start, sides)? })
}

/// Notch pattern of the D family; the E family uses the opposite notch on
/// every side.
fn d_notch(side: Side, tall: bool) -> Notch {
    match side {
        Side::A | Side::C | Side::D => Notch::Tail,
        Side::B | Side::E => Notch::Head,
        Side::F if tall => Notch::Head,
        Side::F => Notch::Tail,
    }
}

fn six_sided(kind: RegionKind, t: Triple) -> Result<Region> {
    let p = derive_contour(t);
    p.require_valid()?;
    let sides: Vec<ContourSide> = p
        .sides()
        .into_iter()
        .map(|(side, dir, len)| {
            let n = d_notch(side, p.tall);
            ContourSide::new(dir, len, if kind == RegionKind::E { n.flip() } else { n })
        })
        .collect();
    contour_region(kind, vec![t.a, t.b, t.c], LatticePoint::new(0, 0), &sides)
}

pub fn build_d(t: Triple) -> Result<Region> {
    six_sided(RegionKind::D, t)
}

pub fn build_e(t: Triple) -> Result<Region> {
    six_sided(RegionKind::E, t)
}

pub fn build_aztec(n: i64) -> Result<Region> {
    if n < 1 {
        return Err(Error::InvalidAztecOrder(n));
    }
    build_e(Triple::new(n + 1, n + 1, 0))
}

/// Boundary of the hexagonal dungeon with sides `a, 2a, b, a, 2a, b`, walked
/// counterclockwise from its western corner.
pub fn hexagon_sides(a: i64, b: i64) -> [ContourSide; 6] {
    use Direction::*;
    use Notch::*;
    [
        ContourSide::new(SE, b, Head),
        ContourSide::new(NE, 2 * a, Tail),
        ContourSide::new(N, a, Head),
        ContourSide::new(NW, b, Tail),
        ContourSide::new(SW, 2 * a, Head),
        ContourSide::new(S, a, Tail),
    ]
}

fn check_hexagon(a: i64, b: i64) -> Result<()> {
    if a < 1 || b < 2 * a {
        Err(Error::InvalidHexagon { a, b })
    } else {
        Ok(())
    }
}

pub fn build_hd(a: i64, b: i64) -> Result<Region> {
    check_hexagon(a, b)?;
    contour_region(RegionKind::HD, vec![a, b], LatticePoint::new(0, 0), &hexagon_sides(a, b))
}

/// Number of unit triangles inside the straight hexagon of [`build_hd`].
pub fn hexagon_unit_triangles(a: i64, b: i64) -> i64 {
    let s = a + 2 * a + b;
    s * s - a * a - 4 * a * a - b * b
}

/// The two outer pieces cut off the hexagonal dungeon by the zigzag cuts.
///
/// The western piece is bounded by the hexagon's southwest and south sides,
/// the first `2a` units of its southeast side, and a northward zigzag of
/// length `3a`. The eastern piece is bounded by the northeast and north
/// sides, the first `2a` units of the northwest side, and a southward zigzag.
pub fn hexagon_end_pieces(a: i64, b: i64) -> Result<(BTreeSet<Cell>, BTreeSet<Cell>)> {
    check_hexagon(a, b)?;
    use Direction::*;
    use Notch::*;
    let west = [
        ContourSide::new(SE, 2 * a, Head),
        ContourSide::new(N, 3 * a, Tail),
        ContourSide::new(SW, 2 * a, Head),
        ContourSide::new(S, a, Tail),
    ];
    let east = [
        ContourSide::new(NE, 2 * a, Tail),
        ContourSide::new(N, a, Head),
        ContourSide::new(NW, 2 * a, Tail),
        ContourSide::new(S, 3 * a, Head),
    ];
    Ok((
        contour_cells(LatticePoint::new(0, 0), &west)?,
        contour_cells(LatticePoint::new(b, -b), &east)?,
    ))
}

#[derive(Serialize, Deserialize)]
struct RegionFile {
    kind: RegionKind,
    params: Vec<i64>,
    cells: Vec<[i64; 4]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionReport {
    pub cells: usize,
    pub white: usize,
    pub black: usize,
    pub components: usize,
    pub connected: bool,
    pub balanced: bool,
}

impl Region {
    pub fn custom(cells: impl IntoIterator<Item = Cell>) -> Region {
        Region { kind: RegionKind::Custom, params: Vec::new(), cells: cells.into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn name(&self) -> String {
        let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        format!("{}_{{{}}}", self.kind, ps.join(","))
    }

    pub fn transform(&self, m: &LatticeMap) -> Region {
        Region {
            kind: RegionKind::Custom,
            params: Vec::new(),
            cells: self.cells.iter().map(|c| c.transform(m)).collect(),
        }
    }

    pub fn dual(&self) -> Result<PlanarGraph> {
        PlanarGraph::dual(self)
    }

    /// Cell counts, color classes and connectivity of the dual graph.
    pub fn validate(&self) -> Result<RegionReport> {
        let g = self.dual()?;
        let (white, black) = g.color_counts();
        let components = g.components().len();
        Ok(RegionReport {
            cells: self.len(),
            white,
            black,
            components,
            connected: components <= 1,
            balanced: white == black,
        })
    }

    pub fn to_json(&self) -> String {
        let file = RegionFile {
            kind: self.kind,
            params: self.params.clone(),
            cells: self.cells.iter().map(|c| c.to_tuple()).collect(),
        };
        let mut s = serde_json::to_string(&file).expect("region serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Region> {
        let file: RegionFile = serde_json::from_str(text)?;
        let cells = file
            .cells
            .iter()
            .map(|&t| Cell::from_tuple(t).ok_or_else(|| Error::Parse(format!("bad cell {t:?}"))))
            .collect::<Result<BTreeSet<Cell>>>()?;
        if cells.len() != file.cells.len() {
            return Err(Error::Parse("duplicate cells".into()));
        }
        Ok(Region { kind: file.kind, params: file.params, cells })
    }

    pub fn load(path: &Path) -> Result<Region> {
        Region::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        Ok(std::fs::write(path, self.to_json())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_cell_counts() {
        assert_eq!(build_hd(1, 2).unwrap().len(), 86);
        assert_eq!(build_hd(2, 4).unwrap().len(), 364);
        assert!(build_hd(1, 1).is_err());
        assert_eq!(hexagon_unit_triangles(1, 2), 16);
        assert_eq!(hexagon_unit_triangles(2, 6), 88);
        // one notch per unit of boundary
        for (a, b) in [(1, 2), (1, 3), (2, 4), (2, 6)] {
            let peri = 2 * (3 * a + b);
            assert_eq!(build_hd(a, b).unwrap().len() as i64, 6 * hexagon_unit_triangles(a, b) - peri);
        }
    }

    #[test]
    fn six_sided_cell_counts() {
        assert_eq!(build_d(Triple::new(4, 6, 4)).unwrap().len(), 174);
        assert_eq!(build_d(Triple::new(0, 2, 1)).unwrap().len(), 82);
        assert_eq!(build_e(Triple::new(0, 2, 1)).unwrap().len(), 80);
        assert!(build_d(Triple::new(8, 2, 0)).is_err());
        assert!(build_aztec(0).is_err());
        assert_eq!(build_aztec(1).unwrap().params, vec![2, 2, 0]);
    }

    #[test]
    fn end_pieces() {
        let (w, e) = hexagon_end_pieces(1, 2).unwrap();
        assert_eq!(w.len(), 38);
        assert_eq!(e.len(), 38);
        let hd = build_hd(1, 2).unwrap();
        assert!(w.is_subset(&hd.cells) && e.is_subset(&hd.cells));
        assert!(w.is_disjoint(&e));
        assert_eq!(hexagon_end_pieces(2, 4).unwrap().0.len(), 174);
        assert_eq!(hexagon_end_pieces(2, 4).unwrap().1.len(), 174);
    }

    #[test]
    fn regions_are_balanced_and_connected() {
        for t in [(4, 6, 4), (2, 3, 2), (8, 8, 2), (5, 8, 4), (0, 2, 0), (2, 2, 1)] {
            for r in [build_d(t.into()).unwrap(), build_e(t.into()).unwrap()] {
                let rep = r.validate().unwrap();
                assert!(rep.balanced && rep.connected, "{} {rep:?}", r.name());
            }
        }
        let hd = build_hd(2, 5).unwrap().validate().unwrap();
        assert!(hd.balanced && hd.connected);
    }

    #[test]
    fn single_triangle_and_empty() {
        let r = Region::custom(TriCoord::new(0, 0, Orient::Up).cells());
        let rep = r.validate().unwrap();
        assert_eq!((rep.cells, rep.white, rep.black, rep.connected), (6, 3, 3, true));
        let e = Region::custom([]).validate().unwrap();
        assert!(e.balanced && e.cells == 0);
    }

    #[test]
    fn json_round_trip() {
        let r = build_d(Triple::new(2, 3, 2)).unwrap();
        let back = Region::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(Region::from_json(r#"{"kind":"D","params":[],"cells":[[0,0,3,0]]}"#).is_err());
    }
}
