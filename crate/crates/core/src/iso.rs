//! Isomorphism of plane maps by canonical breadth-first codes.

use crate::graph::PlanarGraph;

/// Code of the connected component containing `root`, traced from the dart
/// `root -> rotation[root][k]` and walking each rotation forwards or
/// backwards.
fn code_from(g: &PlanarGraph, root: usize, k: usize, backwards: bool) -> Vec<usize> {
    let n = g.len();
    let mut label = vec![usize::MAX; n];
    let mut entry = vec![0usize; n];
    let mut order = vec![root];
    label[root] = 0;
    entry[root] = k;
    let mut code = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        let rot = g.neighbors(v);
        let deg = rot.len();
        code.push(deg);
        for s in 0..deg {
            let idx = if backwards { (entry[v] + deg - s) % deg } else { (entry[v] + s) % deg };
            let u = rot[idx];
            if label[u] == usize::MAX {
                label[u] = order.len();
                entry[u] = g.neighbors(u).iter().position(|&w| w == v).unwrap();
                order.push(u);
            }
            code.push(label[u]);
        }
    }
    code
}

/// Lexicographically least code over all darts and both orientations, for
/// a connected graph. Equal codes mean the graphs are isomorphic as plane
/// maps, reflections allowed.
pub fn canonical_code(g: &PlanarGraph) -> Vec<usize> {
    if g.is_empty() {
        return Vec::new();
    }
    let mut best: Option<Vec<usize>> = None;
    for v in 0..g.len() {
        let deg = g.degree(v).max(1);
        for k in 0..deg {
            for backwards in [false, true] {
                let c = code_from(g, v, k, backwards);
                if best.as_ref().is_none_or(|b| c < *b) {
                    best = Some(c);
                }
            }
        }
    }
    best.unwrap()
}

fn component_codes(g: &PlanarGraph) -> Vec<Vec<usize>> {
    let mut codes: Vec<Vec<usize>> = g.components().iter().map(|c| canonical_code(&g.induced(c))).collect();
    codes.sort();
    codes
}

pub fn plane_isomorphic(g: &PlanarGraph, h: &PlanarGraph) -> bool {
    g.len() == h.len() && g.edge_count() == h.edge_count() && component_codes(g) == component_codes(h)
}

pub fn degree_sequence(g: &PlanarGraph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.len()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{cycle, path};
    use crate::lattice::LatticeMap;
    use crate::region::build_hd;

    #[test]
    fn small_graphs() {
        assert!(plane_isomorphic(&cycle(6), &cycle(6)));
        assert!(!plane_isomorphic(&cycle(6), &path(6)));
        assert!(plane_isomorphic(&path(5), &path(5).permuted(&[4, 2, 0, 1, 3])));
    }

    #[test]
    fn rigid_motions_preserve_the_code() {
        let r = build_hd(1, 2).unwrap();
        let g = r.dual().unwrap();
        for m in [LatticeMap::rotation(2), LatticeMap::MIRROR_H, LatticeMap::translate(3, -1)] {
            assert!(plane_isomorphic(&g, &r.transform(&m).dual().unwrap()));
        }
    }
}
