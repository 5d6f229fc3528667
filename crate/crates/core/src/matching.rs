use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::PlanarGraph;
use crate::lattice::Color;

/// A set of disjoint edges, each stored as `(min, max)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    pairs: BTreeSet<(usize, usize)>,
}

impl Matching {
    pub fn new() -> Matching {
        Matching::default()
    }

    pub fn insert(&mut self, u: usize, v: usize) {
        self.pairs.insert((u.min(v), u.max(v)));
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.pairs.contains(&(u.min(v), u.max(v)))
    }

    pub fn extend(&mut self, other: &Matching) {
        self.pairs.extend(other.pairs.iter().copied());
    }

    /// Checks that the pairs are edges of `g` that cover every vertex once.
    pub fn check_perfect(&self, g: &PlanarGraph) -> Result<()> {
        let mut covered = vec![false; g.len()];
        for (u, v) in self.pairs() {
            if u >= g.len() || v >= g.len() {
                return Err(Error::UnknownVertex(u.max(v)));
            }
            if !g.has_edge(u, v) {
                return Err(Error::BadMatching(format!("{u}-{v} is not an edge")));
            }
            for x in [u, v] {
                if std::mem::replace(&mut covered[x], true) {
                    return Err(Error::BadMatching(format!("vertex {x} matched twice")));
                }
            }
        }
        match covered.iter().position(|&c| !c) {
            Some(x) => Err(Error::BadMatching(format!("vertex {x} unmatched"))),
            None => Ok(()),
        }
    }
}

/// Some perfect matching of `g`, found by augmenting paths from the white
/// side.
pub fn find_matching(g: &PlanarGraph) -> Option<Matching> {
    if g.len() % 2 == 1 || !g.is_balanced() {
        return None;
    }
    let n = g.len();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    let whites: Vec<usize> = (0..n).filter(|&v| g.vertex(v).color == Color::White).collect();
    for &w in &whites {
        let mut visited = vec![false; n];
        if !augment(g, w, &mut mate, &mut visited) {
            return None;
        }
    }
    let mut m = Matching::new();
    for &w in &whites {
        m.insert(w, mate[w]?);
    }
    Some(m)
}

fn augment(g: &PlanarGraph, w: usize, mate: &mut [Option<usize>], visited: &mut [bool]) -> bool {
    for &b in g.neighbors(w) {
        if visited[b] {
            continue;
        }
        visited[b] = true;
        if mate[b].is_none_or(|next| augment(g, next, mate, visited)) {
            mate[w] = Some(b);
            mate[b] = Some(w);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{cycle, path};

    #[test]
    fn small_graphs() {
        let e = path(2);
        let m = find_matching(&e).unwrap();
        assert!(m.contains(0, 1));
        assert!(find_matching(&path(3)).is_none());
        let c = cycle(6);
        let m = find_matching(&c).unwrap();
        m.check_perfect(&c).unwrap();
        let both = [[(0, 1), (2, 3), (4, 5)], [(1, 2), (3, 4), (0, 5)]];
        assert!(both.iter().any(|ps| ps.iter().all(|&(u, v)| m.contains(u, v))));
    }

    #[test]
    fn region_matchings_are_perfect() {
        let r = crate::region::build_hd(1, 2).unwrap();
        let g = r.dual().unwrap();
        find_matching(&g).unwrap().check_perfect(&g).unwrap();
    }

    #[test]
    fn rejects_imperfect() {
        let g = path(4);
        let mut m = Matching::new();
        m.insert(0, 1);
        assert!(m.check_perfect(&g).is_err());
        m.insert(1, 2);
        assert!(m.check_perfect(&g).is_err());
    }
}
