//! Coordinates on the triangular lattice with all altitudes drawn in.
//!
//! Lattice points are integer combinations `i*u + j*v` of the unit vectors
//! `u` (pointing 30° above east) and `v` (pointing north), so lattice lines run
//! at 90°, 210° and 330° and altitudes at 0°, 60° and 120°. Every unit
//! triangle is split by its three altitudes into six fundamental 30-60-90
//! triangles, which we call cells.
//!
//! All geometry is done in this skewed frame with exact integers. The map to
//! the Euclidean plane is linear with positive determinant, so orientation
//! tests, winding numbers and cyclic angular order are the same in both.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Scale applied to skew coordinates so that every point we care about
/// (lattice points, edge midpoints, triangle centers, cell centroids) is an
/// integer.
pub const SCALE: i64 = 18;

/// A lattice point `(i, j)` = `i*u + j*v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub i: i64,
    pub j: i64,
}

impl LatticePoint {
    pub const fn new(i: i64, j: i64) -> Self {
        LatticePoint { i, j }
    }

    pub fn offset(self, d: Direction, steps: i64) -> Self {
        let (di, dj) = d.vector();
        LatticePoint::new(self.i + di * steps, self.j + dj * steps)
    }

    pub fn scaled(self) -> Point {
        Point::new(self.i * SCALE, self.j * SCALE)
    }
}

/// A point in scaled skew coordinates (see [`SCALE`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Euclidean coordinates in units of the lattice spacing.
    pub fn to_euclid(self) -> (f64, f64) {
        let s = SCALE as f64;
        let x = self.x as f64 / s;
        let y = self.y as f64 / s;
        (x * 3f64.sqrt() / 2.0, x / 2.0 + y)
    }
}

impl std::ops::Sub for Point {
    type Output = Point;

    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

/// Cross product of two skew-frame vectors. The sign agrees with the
/// Euclidean cross product.
pub fn cross(a: Point, b: Point) -> i128 {
    a.x as i128 * b.y as i128 - a.y as i128 * b.x as i128
}

/// Compares two nonzero vectors by counterclockwise angle measured from the
/// positive `x` axis of the skew frame.
pub fn angle_cmp(a: Point, b: Point) -> Ordering {
    let half = |p: Point| if p.y > 0 || (p.y == 0 && p.x > 0) { 0 } else { 1 };
    half(a)
        .cmp(&half(b))
        .then_with(|| 0.cmp(&cross(a, b)))
}

/// The six lattice-line directions, listed counterclockwise from 30°.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    NE,
    N,
    NW,
    SW,
    S,
    SE,
}

impl Direction {
    pub const ALL: [Direction; 6] = [
        Direction::NE,
        Direction::N,
        Direction::NW,
        Direction::SW,
        Direction::S,
        Direction::SE,
    ];

    pub fn vector(self) -> (i64, i64) {
        match self {
            Direction::NE => (1, 0),
            Direction::N => (0, 1),
            Direction::NW => (-1, 1),
            Direction::SW => (-1, 0),
            Direction::S => (0, -1),
            Direction::SE => (1, -1),
        }
    }

    fn index(self) -> usize {
        Direction::ALL.iter().position(|&d| d == self).unwrap()
    }

    /// Rotates by `k` multiples of 60° counterclockwise.
    pub fn rotate(self, k: i64) -> Direction {
        Direction::ALL[(self.index() as i64 + k).rem_euclid(6) as usize]
    }
}

/// Orientation class of a unit triangle.
///
/// `Up` is the triangle `(p, p+u, p+v)` and `Down` is `(p+u, p+u+v, p+v)`.
/// With vertical lattice lines drawn, `Up` triangles have their vertical side
/// on the west and `Down` triangles on the east.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orient {
    Up,
    Down,
}

impl Orient {
    pub fn code(self) -> u8 {
        match self {
            Orient::Up => 0,
            Orient::Down => 1,
        }
    }

    pub fn from_code(c: u8) -> Option<Orient> {
        match c {
            0 => Some(Orient::Up),
            1 => Some(Orient::Down),
            _ => None,
        }
    }
}

/// Address of one unit triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TriCoord {
    pub row: i64,
    pub col: i64,
    pub orient: Orient,
}

impl TriCoord {
    pub const fn new(row: i64, col: i64, orient: Orient) -> Self {
        TriCoord { row, col, orient }
    }

    /// Vertices in counterclockwise order, starting at the lowest vertex.
    pub fn vertices(self) -> [LatticePoint; 3] {
        let (i, j) = (self.col, self.row);
        match self.orient {
            Orient::Up => [
                LatticePoint::new(i, j),
                LatticePoint::new(i + 1, j),
                LatticePoint::new(i, j + 1),
            ],
            Orient::Down => [
                LatticePoint::new(i + 1, j),
                LatticePoint::new(i + 1, j + 1),
                LatticePoint::new(i, j + 1),
            ],
        }
    }

    /// The triangle with the given three vertices, if they form one.
    pub fn from_vertices(vs: [LatticePoint; 3]) -> Option<TriCoord> {
        let si = vs[0].i + vs[1].i + vs[2].i;
        let sj = vs[0].j + vs[1].j + vs[2].j;
        let t = match (si.rem_euclid(3), sj.rem_euclid(3)) {
            (1, 1) => TriCoord::new((sj - 1).div_euclid(3), (si - 1).div_euclid(3), Orient::Up),
            (2, 2) => TriCoord::new((sj - 2).div_euclid(3), (si - 2).div_euclid(3), Orient::Down),
            _ => return None,
        };
        let mut want = vs;
        want.sort();
        let mut have = t.vertices();
        have.sort();
        (want == have).then_some(t)
    }

    /// Center, in scaled coordinates.
    pub fn center(self) -> Point {
        let vs = self.vertices();
        let k = SCALE / 3;
        Point::new(
            k * (vs[0].i + vs[1].i + vs[2].i),
            k * (vs[0].j + vs[1].j + vs[2].j),
        )
    }

    pub fn cells(self) -> [Cell; 6] {
        std::array::from_fn(|k| Cell::new(self, k as u8))
    }

    /// The triangle sharing the side `p`–`q` with this one.
    pub fn across(self, p: LatticePoint, q: LatticePoint) -> TriCoord {
        let third = self
            .vertices()
            .into_iter()
            .find(|&v| v != p && v != q)
            .expect("p and q must be vertices of the triangle");
        // Reflect the third vertex through the midpoint of p–q.
        let r = LatticePoint::new(p.i + q.i - third.i, p.j + q.j - third.j);
        TriCoord::from_vertices([p, q, r]).expect("reflection of a lattice triangle")
    }
}

/// Corner and far-endpoint vertex indices of each sub-cell: sub-cell `k` is
/// the fundamental triangle with a corner at vertex `CORNER[k]` and its
/// lattice-edge side on the edge towards vertex `FAR[k]`.
const CORNER: [usize; 6] = [0, 1, 1, 2, 2, 0];
const FAR: [usize; 6] = [1, 0, 2, 1, 0, 2];

/// One fundamental region: a 30-60-90 triangle with corners at a lattice
/// point, the midpoint of a lattice edge, and the center of a unit triangle.
///
/// Sub-cells are numbered counterclockwise around the triangle center,
/// starting with the cell at the triangle's first vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub tri: TriCoord,
    pub sub: u8,
}

/// Color class of a cell in the natural bipartition of the dual lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Black => "black",
            Color::White => "white",
        })
    }
}

impl Cell {
    pub fn new(tri: TriCoord, sub: u8) -> Self {
        assert!(sub < 6, "sub-cell index out of range");
        Cell { tri, sub }
    }

    /// The cell of triangle `tri` with corner `corner` on the edge towards `far`.
    pub fn at(tri: TriCoord, corner: LatticePoint, far: LatticePoint) -> Option<Cell> {
        let vs = tri.vertices();
        (0..6u8)
            .find(|&k| vs[CORNER[k as usize]] == corner && vs[FAR[k as usize]] == far)
            .map(|k| Cell::new(tri, k))
    }

    /// The lattice point at this cell's 30° corner.
    pub fn corner(self) -> LatticePoint {
        self.tri.vertices()[CORNER[self.sub as usize]]
    }

    /// The other endpoint of the lattice edge this cell's short side lies on.
    pub fn far(self) -> LatticePoint {
        self.tri.vertices()[FAR[self.sub as usize]]
    }

    /// The third vertex of the unit triangle (not on this cell's lattice edge).
    pub fn apex(self) -> LatticePoint {
        self.tri.vertices()[3 - CORNER[self.sub as usize] - FAR[self.sub as usize]]
    }

    /// Triangle corners: lattice corner, edge midpoint, triangle center.
    pub fn corners(self) -> [Point; 3] {
        let v = self.corner().scaled();
        let w = self.far().scaled();
        let m = Point::new((v.x + w.x) / 2, (v.y + w.y) / 2);
        [v, m, self.tri.center()]
    }

    pub fn centroid(self) -> Point {
        let [a, b, c] = self.corners();
        Point::new((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3)
    }

    /// Lattice parity: even sub-cells are white, odd ones black.
    pub fn color(self) -> Color {
        if self.sub.is_multiple_of(2) {
            Color::White
        } else {
            Color::Black
        }
    }

    /// The (exactly three) cells sharing a side with this one: two in the
    /// same unit triangle and one across the lattice edge.
    pub fn neighbors(self) -> [Cell; 3] {
        let prev = Cell::new(self.tri, (self.sub + 5) % 6);
        let next = Cell::new(self.tri, (self.sub + 1) % 6);
        let (p, q) = (self.corner(), self.far());
        let other = self.tri.across(p, q);
        let across = Cell::at(other, p, q).expect("shared edge has a matching cell");
        [prev, next, across]
    }

    pub fn is_adjacent(self, other: Cell) -> bool {
        self.neighbors().contains(&other)
    }

    /// JSON tuple `[row, col, orient, sub]`.
    pub fn to_tuple(self) -> [i64; 4] {
        [
            self.tri.row,
            self.tri.col,
            self.tri.orient.code() as i64,
            self.sub as i64,
        ]
    }

    pub fn from_tuple(t: [i64; 4]) -> Option<Cell> {
        let orient = Orient::from_code(u8::try_from(t[2]).ok()?)?;
        let sub = u8::try_from(t[3]).ok().filter(|&s| s < 6)?;
        Some(Cell::new(TriCoord::new(t[0], t[1], orient), sub))
    }

    pub fn transform(self, m: &LatticeMap) -> Cell {
        let (c, f, a) = (m.apply(self.corner()), m.apply(self.far()), m.apply(self.apex()));
        let tri = TriCoord::from_vertices([c, f, a]).expect("isometry maps triangles to triangles");
        Cell::at(tri, c, f).expect("isometry maps cells to cells")
    }
}

/// A symmetry of the lattice: `p -> A p + t` with an integer matrix `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeMap {
    pub m: [[i64; 2]; 2],
    pub t: (i64, i64),
}

impl LatticeMap {
    pub const IDENTITY: LatticeMap = LatticeMap { m: [[1, 0], [0, 1]], t: (0, 0) };

    /// Counterclockwise rotation by 60° about the origin.
    pub const ROT60: LatticeMap = LatticeMap { m: [[0, -1], [1, 1]], t: (0, 0) };

    /// Reflection in the horizontal line through the origin.
    pub const MIRROR_H: LatticeMap = LatticeMap { m: [[1, 0], [-1, -1]], t: (0, 0) };

    pub fn translate(di: i64, dj: i64) -> LatticeMap {
        LatticeMap { m: [[1, 0], [0, 1]], t: (di, dj) }
    }

    pub fn apply(&self, p: LatticePoint) -> LatticePoint {
        LatticePoint::new(
            self.m[0][0] * p.i + self.m[0][1] * p.j + self.t.0,
            self.m[1][0] * p.i + self.m[1][1] * p.j + self.t.1,
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LatticeMap) -> LatticeMap {
        let a = self.m;
        let b = other.m;
        let m = [
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ];
        let t = self.apply(LatticePoint::new(other.t.0, other.t.1));
        LatticeMap { m, t: (t.i, t.j) }
    }

    pub fn rotation(k: i64) -> LatticeMap {
        let mut r = LatticeMap::IDENTITY;
        for _ in 0..k.rem_euclid(6) {
            r = LatticeMap::ROT60.compose(&r);
        }
        r
    }

    /// Determinant of the linear part; `-1` for reflections.
    pub fn det(&self) -> i64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }
}

/// Winding number of `pt` with respect to the closed polygon `poly`.
pub fn winding_number(pt: Point, poly: &[Point]) -> i32 {
    let mut wn = 0;
    let n = poly.len();
    for k in 0..n {
        let a = poly[k];
        let b = poly[(k + 1) % n];
        let side = cross(b - a, pt - a);
        if a.y <= pt.y {
            if b.y > pt.y && side > 0 {
                wn += 1;
            }
        } else if b.y <= pt.y && side < 0 {
            wn -= 1;
        }
    }
    wn
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(row: i64, col: i64, o: Orient) -> TriCoord {
        TriCoord::new(row, col, o)
    }

    #[test]
    fn vertices_are_counterclockwise() {
        for t in [tri(0, 0, Orient::Up), tri(-3, 2, Orient::Down)] {
            let v = t.vertices().map(|p| p.scaled());
            assert!(cross(v[1] - v[0], v[2] - v[0]) > 0);
            assert_eq!(TriCoord::from_vertices(t.vertices()), Some(t));
        }
    }

    #[test]
    fn neighbors_are_symmetric_and_three() {
        for t in [tri(0, 0, Orient::Up), tri(1, -1, Orient::Down)] {
            for c in t.cells() {
                let ns = c.neighbors();
                assert_eq!(ns.iter().filter(|n| n.tri == t).count(), 2);
                for n in ns {
                    assert!(n.neighbors().contains(&c), "{c:?} -> {n:?}");
                    assert_ne!(n.color(), c.color());
                }
            }
        }
    }

    #[test]
    fn across_edge_cell_shares_corner_and_edge() {
        let c = Cell::new(tri(0, 0, Orient::Up), 0);
        let n = c.neighbors()[2];
        assert_eq!(n.corner(), c.corner());
        assert_eq!(n.far(), c.far());
        assert_ne!(n.tri, c.tri);
    }

    #[test]
    fn rotation_has_order_six_and_preserves_colors() {
        let r6 = LatticeMap::rotation(6);
        assert_eq!(r6, LatticeMap::IDENTITY);
        let c = Cell::new(tri(2, 1, Orient::Down), 3);
        assert_eq!(c.transform(&LatticeMap::ROT60).color(), c.color());
        assert_ne!(c.transform(&LatticeMap::MIRROR_H).color(), c.color());
        assert_eq!(c.transform(&LatticeMap::MIRROR_H).transform(&LatticeMap::MIRROR_H), c);
    }

    #[test]
    fn direction_rotation_matches_lattice_rotation() {
        for d in Direction::ALL {
            let (i, j) = d.vector();
            let p = LatticeMap::ROT60.apply(LatticePoint::new(i, j));
            assert_eq!((p.i, p.j), d.rotate(1).vector());
        }
    }

    #[test]
    fn tuple_round_trip_rejects_bad_codes() {
        let c = Cell::new(tri(-1, 4, Orient::Down), 5);
        assert_eq!(Cell::from_tuple(c.to_tuple()), Some(c));
        assert_eq!(Cell::from_tuple([0, 0, 2, 0]), None);
        assert_eq!(Cell::from_tuple([0, 0, 0, 6]), None);
    }

    #[test]
    fn angle_order_is_counterclockwise() {
        let mut v = vec![Point::new(0, -1), Point::new(-1, 0), Point::new(1, 0), Point::new(0, 1)];
        v.sort_by(|a, b| angle_cmp(*a, *b));
        assert_eq!(v, vec![Point::new(1, 0), Point::new(0, 1), Point::new(-1, 0), Point::new(0, -1)]);
    }
}
