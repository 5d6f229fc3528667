//! Plane bipartite graphs given by a rotation system.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{angle_cmp, cross, Cell, Color, Point};
use crate::region::Region;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub color: Color,
    pub cell: Option<Cell>,
    /// Position in the plane, in scaled skew coordinates.
    pub pos: Point,
    /// Identifier carried over from the graph this one was cut out of.
    pub label: usize,
}

/// A directed edge `(from, to)`.
pub type Dart = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarGraph {
    vertices: Vec<Vertex>,
    /// Counterclockwise neighbor order around each vertex.
    rotation: Vec<Vec<usize>>,
}

/// Facial walks of an embedded graph.
#[derive(Debug, Clone)]
pub struct Faces {
    pub walks: Vec<Vec<Dart>>,
    /// `dart_face[v][k]` is the face to the left of the dart from `v` to its
    /// `k`-th neighbor.
    pub dart_face: Vec<Vec<usize>>,
}

impl Faces {
    pub fn face_of(&self, g: &PlanarGraph, (u, v): Dart) -> usize {
        let k = g.rotation[u].iter().position(|&w| w == v).expect("dart of graph");
        self.dart_face[u][k]
    }
}

fn sort_by_angle(pos: &[Point], v: usize, nbrs: &mut [usize]) {
    let p = pos[v];
    nbrs.sort_by(|&x, &y| angle_cmp(pos[x] - p, pos[y] - p));
}

impl PlanarGraph {
    pub fn empty() -> PlanarGraph {
        PlanarGraph { vertices: Vec::new(), rotation: Vec::new() }
    }

    /// Builds a graph from an explicit rotation system, checking that it is
    /// symmetric, simple and properly two-colored.
    pub fn from_rotation(vertices: Vec<Vertex>, rotation: Vec<Vec<usize>>) -> Result<PlanarGraph> {
        if vertices.len() != rotation.len() {
            return Err(Error::Rotation("one rotation list per vertex required".into()));
        }
        let n = vertices.len();
        for (v, nbrs) in rotation.iter().enumerate() {
            for (k, &u) in nbrs.iter().enumerate() {
                if u >= n {
                    return Err(Error::UnknownVertex(u));
                }
                if u == v || nbrs[..k].contains(&u) {
                    return Err(Error::Rotation(format!("vertex {v} has a loop or repeated neighbor {u}")));
                }
                if !rotation[u].contains(&v) {
                    return Err(Error::Rotation(format!("edge {v}-{u} missing at {u}")));
                }
                if vertices[u].color == vertices[v].color {
                    return Err(Error::NotBipartite(v, u));
                }
            }
        }
        Ok(PlanarGraph { vertices, rotation })
    }

    /// Straight-line embedding: rotations are read off the positions.
    pub fn from_embedding(pos: &[Point], colors: &[Color], edges: &[(usize, usize)]) -> Result<PlanarGraph> {
        let n = pos.len();
        let mut rotation = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(u.max(v)));
            }
            rotation[u].push(v);
            rotation[v].push(u);
        }
        for (v, nbrs) in rotation.iter_mut().enumerate() {
            sort_by_angle(pos, v, nbrs);
        }
        let vertices = (0..n)
            .map(|i| Vertex { color: colors[i], cell: None, pos: pos[i], label: i })
            .collect();
        PlanarGraph::from_rotation(vertices, rotation)
    }

    /// The dual graph of a region: one vertex per cell, in cell order, with
    /// an edge for every pair of cells sharing a side.
    pub fn dual(region: &Region) -> Result<PlanarGraph> {
        let cells: Vec<Cell> = region.cells.iter().copied().collect();
        let index: BTreeMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let pos: Vec<Point> = cells.iter().map(|c| c.centroid()).collect();
        let mut rotation: Vec<Vec<usize>> = cells
            .iter()
            .map(|c| c.neighbors().iter().filter_map(|n| index.get(n).copied()).collect())
            .collect();
        for (v, nbrs) in rotation.iter_mut().enumerate() {
            sort_by_angle(&pos, v, nbrs);
        }
        let colors = two_color(&rotation, |v| cells[v].color())?;
        let vertices = (0..cells.len())
            .map(|i| Vertex { color: colors[i], cell: Some(cells[i]), pos: pos[i], label: i })
            .collect();
        PlanarGraph::from_rotation(vertices, rotation)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, v: usize) -> &Vertex {
        &self.vertices[v]
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.rotation.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rotation[u].contains(&v)
    }

    /// Each edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rotation
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// `(white, black)` class sizes.
    pub fn color_counts(&self) -> (usize, usize) {
        let white = self.vertices.iter().filter(|v| v.color == Color::White).count();
        (white, self.len() - white)
    }

    pub fn is_balanced(&self) -> bool {
        let (w, b) = self.color_counts();
        w == b
    }

    pub fn find_label(&self, label: usize) -> Option<usize> {
        self.vertices.iter().position(|v| v.label == label)
    }

    pub fn find_cell(&self, cell: Cell) -> Option<usize> {
        self.vertices.iter().position(|v| v.cell == Some(cell))
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.rotation[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `keep` (in the given order). Labels are carried
    /// over unchanged.
    pub fn induced(&self, keep: &[usize]) -> PlanarGraph {
        let mut map = vec![usize::MAX; self.len()];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = i;
        }
        let vertices = keep.iter().map(|&v| self.vertices[v].clone()).collect();
        let rotation = keep
            .iter()
            .map(|&v| self.rotation[v].iter().filter(|&&u| map[u] != usize::MAX).map(|&u| map[u]).collect())
            .collect();
        PlanarGraph { vertices, rotation }
    }

    pub fn remove_vertices(&self, remove: &[usize]) -> Result<PlanarGraph> {
        let mut gone = vec![false; self.len()];
        for &v in remove {
            *gone.get_mut(v).ok_or(Error::UnknownVertex(v))? = true;
        }
        let keep: Vec<usize> = (0..self.len()).filter(|&v| !gone[v]).collect();
        Ok(self.induced(&keep))
    }

    /// Same graph with vertices renumbered by `order` (a permutation).
    pub fn permuted(&self, order: &[usize]) -> PlanarGraph {
        debug_assert_eq!(order.len(), self.len());
        self.induced(order)
    }

    /// Adjacency lists, for algorithms that ignore the embedding.
    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// Traces every facial walk. Bounded faces of a straight-line embedding
    /// come out counterclockwise, the outer face of each component clockwise.
    pub fn faces(&self) -> Faces {
        let n = self.len();
        let mut dart_face: Vec<Vec<usize>> = self.rotation.iter().map(|r| vec![usize::MAX; r.len()]).collect();
        let mut walks = Vec::new();
        for s in 0..n {
            for k0 in 0..self.rotation[s].len() {
                if dart_face[s][k0] != usize::MAX {
                    continue;
                }
                let id = walks.len();
                let mut walk = Vec::new();
                let (mut u, mut k) = (s, k0);
                while dart_face[u][k] == usize::MAX {
                    dart_face[u][k] = id;
                    let v = self.rotation[u][k];
                    walk.push((u, v));
                    let back = self.rotation[v].iter().position(|&w| w == u).expect("symmetric rotation");
                    let deg = self.rotation[v].len();
                    k = (back + deg - 1) % deg;
                    u = v;
                }
                walks.push(walk);
            }
        }
        Faces { walks, dart_face }
    }

    /// Twice the signed area enclosed by a facial walk.
    pub fn walk_area(&self, walk: &[Dart]) -> i128 {
        walk.iter()
            .map(|&(u, v)| cross(self.vertices[u].pos, self.vertices[v].pos))
            .sum()
    }

    /// Checks Euler's formula on every component, which holds exactly when
    /// the rotation system describes a plane embedding.
    pub fn check_embedding(&self) -> Result<()> {
        let faces = self.faces();
        let comps = self.components();
        let mut comp_of = vec![0; self.len()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut face_count = vec![0i64; comps.len()];
        for w in &faces.walks {
            face_count[comp_of[w[0].0]] += 1;
        }
        for (i, c) in comps.iter().enumerate() {
            let v = c.len() as i64;
            let e = c.iter().map(|&x| self.degree(x)).sum::<usize>() as i64 / 2;
            let f = face_count[i].max(1);
            if v - e + f != 2 {
                return Err(Error::Rotation(format!(
                    "component at vertex {} has V-E+F = {}",
                    c[0],
                    v - e + f
                )));
            }
        }
        Ok(())
    }

    /// Index of the outer face of each component, the walk of least signed
    /// area. `None` for isolated vertices.
    pub fn outer_faces(&self, faces: &Faces) -> Vec<Option<usize>> {
        self.components()
            .iter()
            .map(|comp| {
                let mut ids: Vec<usize> = comp.iter().flat_map(|&x| faces.dart_face[x].iter().copied()).collect();
                ids.sort_unstable();
                ids.dedup();
                ids.into_iter().min_by_key(|&f| (self.walk_area(&faces.walks[f]), f))
            })
            .collect()
    }

    /// Vertices on the outer faces, in walk order.
    pub fn outer_boundary(&self) -> Vec<usize> {
        let faces = self.faces();
        let mut out = Vec::new();
        for f in self.outer_faces(&faces).into_iter().flatten() {
            for &(u, _) in &faces.walks[f] {
                if !out.contains(&u) {
                    out.push(u);
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct V {
            id: usize,
            color: &'static str,
            cell: Option<[i64; 4]>,
            pos: [i64; 2],
        }
        #[derive(Serialize)]
        struct G {
            vertices: Vec<V>,
            rotation: Vec<Vec<usize>>,
        }
        let g = G {
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, v)| V {
                    id,
                    color: match v.color {
                        Color::White => "white",
                        Color::Black => "black",
                    },
                    cell: v.cell.map(Cell::to_tuple),
                    pos: [v.pos.x, v.pos.y],
                })
                .collect(),
            rotation: self.rotation.clone(),
        };
        serde_json::to_string(&g).expect("graph serializes")
    }
}

/// Breadth-first two-coloring. Each component's first vertex takes the color
/// given by `seed`.
fn two_color(adj: &[Vec<usize>], seed: impl Fn(usize) -> Color) -> Result<Vec<Color>> {
    let n = adj.len();
    let mut color: Vec<Option<Color>> = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(seed(s));
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for &u in &adj[v] {
                match color[u] {
                    None => {
                        color[u] = Some(cv.other());
                        queue.push_back(u);
                    }
                    Some(cu) if cu == cv => return Err(Error::NotBipartite(v, u)),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::contour::Triple;
    use crate::lattice::{Orient, TriCoord};
    use crate::region::{build_d, build_hd};

    /// Cycle on `n` (even) vertices placed on a regular-ish polygon.
    pub fn cycle(n: usize) -> PlanarGraph {
        let pts = [(10, 0), (7, 7), (0, 10), (-7, 7), (-10, 0), (-7, -7), (0, -10), (7, -7)];
        assert!(n <= pts.len() && n.is_multiple_of(2));
        let step = pts.len() / n;
        let pos: Vec<Point> = (0..n).map(|i| Point::new(pts[i * step].0, pts[i * step].1)).collect();
        let colors: Vec<Color> = (0..n).map(|i| if i % 2 == 0 { Color::White } else { Color::Black }).collect();
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        PlanarGraph::from_embedding(&pos, &colors, &edges).unwrap()
    }

    pub fn path(n: usize) -> PlanarGraph {
        let pos: Vec<Point> = (0..n).map(|i| Point::new(i as i64, 0)).collect();
        let colors: Vec<Color> = (0..n).map(|i| if i % 2 == 0 { Color::White } else { Color::Black }).collect();
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        PlanarGraph::from_embedding(&pos, &colors, &edges).unwrap()
    }

    #[test]
    fn single_triangle_is_a_hexagon() {
        let r = Region::custom(TriCoord::new(0, 0, Orient::Up).cells());
        let g = r.dual().unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(g.edge_count(), 6);
        assert!((0..6).all(|v| g.degree(v) == 2));
        let faces = g.faces();
        assert_eq!(faces.walks.len(), 2);
        g.check_embedding().unwrap();
    }

    #[test]
    fn dual_graphs_are_subcubic_plane_and_consistent() {
        for r in [build_hd(1, 2).unwrap(), build_d(Triple::new(4, 6, 4)).unwrap()] {
            let g = r.dual().unwrap();
            assert!(g.max_degree() <= 3);
            g.check_embedding().unwrap();
            for (u, v) in g.edges() {
                assert_ne!(g.vertex(u).color, g.vertex(v).color);
                assert!(g.has_edge(v, u));
            }
            // colors agree with lattice parity
            assert!(g.vertices().iter().all(|v| v.cell.unwrap().color() == v.color));
        }
        let g = build_hd(1, 2).unwrap().dual().unwrap();
        assert_eq!(g.len(), 86);
        assert_eq!(g.color_counts(), (43, 43));
    }

    #[test]
    fn outer_face_has_negative_area() {
        let g = cycle(6);
        let faces = g.faces();
        let outer = g.outer_faces(&faces)[0].unwrap();
        assert!(g.walk_area(&faces.walks[outer]) < 0);
        assert_eq!(g.outer_boundary().len(), 6);
    }

    #[test]
    fn removal() {
        let g = cycle(6);
        assert_eq!(g.remove_vertices(&[]).unwrap(), g);
        assert!(g.remove_vertices(&[0, 1, 2, 3, 4, 5]).unwrap().is_empty());
        let p = g.remove_vertices(&[0, 1]).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.edge_count(), 3);
        assert_eq!(p.components().len(), 1);
        assert!(matches!(g.remove_vertices(&[9]), Err(Error::UnknownVertex(9))));
    }

    #[test]
    fn rejects_bad_rotation() {
        let mk = |c| Vertex { color: c, cell: None, pos: Point::new(0, 0), label: 0 };
        let bad = PlanarGraph::from_rotation(vec![mk(Color::White), mk(Color::White)], vec![vec![1], vec![0]]);
        assert!(matches!(bad, Err(Error::NotBipartite(..))));
        let asym = PlanarGraph::from_rotation(vec![mk(Color::White), mk(Color::Black)], vec![vec![1], vec![]]);
        assert!(matches!(asym, Err(Error::Rotation(_))));
    }

    #[test]
    fn export_lists_every_vertex() {
        let g = path(4);
        let v: serde_json::Value = serde_json::from_str(&g.to_json()).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
        assert_eq!(v["rotation"][1], serde_json::json!([2, 0]));
    }
}
