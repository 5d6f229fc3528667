//! Pfaffian orientations of plane graphs.
//!
//! Every edge `u -> v` of a spanning tree is oriented from the smaller id to
//! the larger. The remaining edges form a spanning tree of the dual, which is
//! peeled from the leaves towards the outer face; each peeled face fixes the
//! one still unoriented edge on its boundary so that an odd number of its
//! boundary edges run clockwise.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Faces, PlanarGraph};

type Arc = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    /// `forward[&(u, v)]` with `u < v` is true when the edge points `u -> v`.
    forward: HashMap<(usize, usize), bool>,
}

impl Orientation {
    /// Whether the edge `{u, v}` is oriented `u -> v`.
    pub fn points(&self, u: usize, v: usize) -> bool {
        let f = self.forward[&(u.min(v), u.max(v))];
        if u < v {
            f
        } else {
            !f
        }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// Sign of `(u, v)` in the skew adjacency matrix.
    pub fn sign(&self, u: usize, v: usize) -> i8 {
        if self.points(u, v) {
            1
        } else {
            -1
        }
    }
}

fn clockwise_on_walk(o: &HashMap<(usize, usize), bool>, walk: &[(usize, usize)], skip: Option<(usize, usize)>) -> usize {
    walk.iter()
        .filter(|&&(u, v)| {
            let key = (u.min(v), u.max(v));
            if Some(key) == skip {
                return false;
            }
            // a bounded face is walked counterclockwise, so an edge pointing
            // against the walk is clockwise
            let along = if u < v { o[&key] } else { !o[&key] };
            !along
        })
        .count()
}

pub fn orient_pfaffian(g: &PlanarGraph) -> Result<Orientation> {
    g.check_embedding()?;
    let faces = g.faces();
    let outer = g.outer_faces(&faces);
    let mut forward: HashMap<(usize, usize), bool> = HashMap::with_capacity(g.edge_count());
    let mut in_tree = vec![false; g.len()];
    for (comp, root_face) in g.components().iter().zip(&outer) {
        let Some(root_face) = *root_face else { continue };
        // spanning tree by breadth-first search
        let mut tree_edges = Vec::new();
        in_tree[comp[0]] = true;
        let mut queue = VecDeque::from([comp[0]]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if !in_tree[u] {
                    in_tree[u] = true;
                    tree_edges.push((v.min(u), v.max(u)));
                    queue.push_back(u);
                }
            }
        }
        for &e in &tree_edges {
            forward.insert(e, true);
        }
        // dual tree over the remaining edges
        let mut dual: HashMap<usize, Vec<(usize, Arc)>> = HashMap::new();
        for &v in comp {
            for &u in g.neighbors(v) {
                if v < u && !forward.contains_key(&(v, u)) {
                    let f1 = faces.face_of(g, (v, u));
                    let f2 = faces.face_of(g, (u, v));
                    if f1 == f2 {
                        return Err(Error::Rotation(format!("non-tree edge {v}-{u} borders one face")));
                    }
                    dual.entry(f1).or_default().push((f2, (v, u)));
                    dual.entry(f2).or_default().push((f1, (v, u)));
                }
            }
        }
        let mut parent: HashMap<usize, (usize, (usize, usize))> = HashMap::new();
        let mut order = vec![root_face];
        let mut k = 0;
        while k < order.len() {
            let f = order[k];
            k += 1;
            for &(h, e) in dual.get(&f).map(Vec::as_slice).unwrap_or(&[]) {
                if h != root_face && !parent.contains_key(&h) {
                    parent.insert(h, (f, e));
                    order.push(h);
                }
            }
        }
        let face_total = comp_face_count(&faces, comp);
        if order.len() != face_total {
            return Err(Error::Rotation(format!(
                "dual tree reaches {} of {face_total} faces",
                order.len()
            )));
        }
        for &f in order.iter().skip(1).rev() {
            let (_, e) = parent[&f];
            let cw = clockwise_on_walk(&forward, &faces.walks[f], Some(e));
            // choose e so that the total is odd
            let walk_dir = faces.walks[f].iter().find(|&&(u, v)| (u.min(v), u.max(v)) == e).copied().unwrap();
            let along_is_forward = walk_dir.0 < walk_dir.1;
            // e is clockwise iff it points against walk_dir
            let want_cw = cw.is_multiple_of(2);
            let along = !want_cw;
            forward.insert(e, if along_is_forward { along } else { !along });
        }
    }
    Ok(Orientation { forward })
}

fn comp_face_count(faces: &Faces, comp: &[usize]) -> usize {
    let mut ids: Vec<usize> = comp.iter().flat_map(|&v| faces.dart_face[v].iter().copied()).collect();
    ids.sort_unstable();
    ids.dedup();
    ids.len()
}

/// Checks the odd-clockwise condition on every bounded face.
pub fn audit(g: &PlanarGraph, o: &Orientation) -> Result<()> {
    let faces = g.faces();
    let outer: Vec<usize> = g.outer_faces(&faces).into_iter().flatten().collect();
    for (f, walk) in faces.walks.iter().enumerate() {
        if outer.contains(&f) {
            continue;
        }
        let cw = clockwise_on_walk(&o.forward, walk, None);
        if cw.is_multiple_of(2) {
            return Err(Error::Rotation(format!("face {f} has {cw} clockwise edges")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contour::Triple;
    use crate::graph::tests::{cycle, path};
    use crate::region::{build_d, build_hd};

    #[test]
    fn edge_and_square() {
        let o = orient_pfaffian(&path(2)).unwrap();
        assert_eq!(o.len(), 1);
        let sq = cycle(4);
        let o = orient_pfaffian(&sq).unwrap();
        audit(&sq, &o).unwrap();
        let faces = sq.faces();
        let outer = sq.outer_faces(&faces)[0].unwrap();
        let inner = 1 - outer;
        let cw = clockwise_on_walk(&o.forward, &faces.walks[inner], None);
        assert!(cw == 1 || cw == 3);
    }

    #[test]
    fn region_duals_pass_audit() {
        for r in [build_hd(1, 2).unwrap(), build_d(Triple::new(5, 8, 4)).unwrap()] {
            let g = r.dual().unwrap();
            let o = orient_pfaffian(&g).unwrap();
            assert_eq!(o.len(), g.edge_count());
            audit(&g, &o).unwrap();
        }
    }

    #[test]
    fn disconnected_graph_is_oriented_per_component() {
        let g = cycle(4);
        let two = crate::region::Region::custom(
            crate::lattice::TriCoord::new(0, 0, crate::lattice::Orient::Up)
                .cells()
                .into_iter()
                .chain(crate::lattice::TriCoord::new(5, 5, crate::lattice::Orient::Down).cells()),
        )
        .dual()
        .unwrap();
        for h in [g, two] {
            let o = orient_pfaffian(&h).unwrap();
            audit(&h, &o).unwrap();
        }
    }
}
