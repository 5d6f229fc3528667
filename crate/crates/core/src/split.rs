//! Factoring matching counts across separating cuts.

use crate::error::{Error, Result};
use crate::graph::PlanarGraph;
use crate::lattice::Color;
use crate::region::{build_hd, hexagon_end_pieces};

/// Which color class of `h` (if any) has no neighbors outside `h`, and
/// whether `h` has equally many vertices of each color.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutReport {
    pub sealed: Option<Color>,
    pub balanced: bool,
}

impl CutReport {
    pub fn holds(&self) -> bool {
        self.sealed.is_some() && self.balanced
    }
}

pub fn check_cut(g: &PlanarGraph, h: &[usize]) -> CutReport {
    let colors: Vec<Color> = g.vertices().iter().map(|v| v.color).collect();
    check_cut_lists(g.adjacency(), &colors, h)
}

/// [`check_cut`] for a graph given only by adjacency lists and colors.
pub fn check_cut_lists(adj: &[Vec<usize>], colors: &[Color], h: &[usize]) -> CutReport {
    let mut inside = vec![false; adj.len()];
    for &v in h {
        inside[v] = true;
    }
    let leaks = |color: Color| {
        h.iter()
            .filter(|&&v| colors[v] == color)
            .any(|&v| adj[v].iter().any(|&u| !inside[u]))
    };
    let sealed = [Color::White, Color::Black].into_iter().find(|&c| !leaks(c));
    let white = h.iter().filter(|&&v| colors[v] == Color::White).count();
    CutReport { sealed, balanced: 2 * white == h.len() }
}

/// The three pieces of a hexagonal dungeon's dual, west to east, as vertex
/// lists of the input graph and as induced subgraphs.
#[derive(Debug, Clone)]
pub struct HexSplit {
    pub west: Vec<usize>,
    pub middle: Vec<usize>,
    pub east: Vec<usize>,
    pub g1: PlanarGraph,
    pub g2: PlanarGraph,
    pub g3: PlanarGraph,
    /// The west piece inside the whole graph.
    pub first_cut: CutReport,
    /// The east piece inside the graph with the west piece removed.
    pub second_cut: CutReport,
}

pub fn split_hd(g: &PlanarGraph, a: i64, b: i64) -> Result<HexSplit> {
    let hd = build_hd(a, b)?;
    if g.len() != hd.len() || hd.cells.iter().any(|&c| g.find_cell(c).is_none()) {
        return Err(Error::Hypothesis(format!("graph is not the dual of {}", hd.name())));
    }
    let (west_cells, east_cells) = hexagon_end_pieces(a, b)?;
    let mut west = Vec::new();
    let mut middle = Vec::new();
    let mut east = Vec::new();
    for v in 0..g.len() {
        let cell = g.vertex(v).cell.expect("region dual");
        if west_cells.contains(&cell) {
            west.push(v);
        } else if east_cells.contains(&cell) {
            east.push(v);
        } else {
            middle.push(v);
        }
    }
    let first_cut = check_cut(g, &west);
    let rest: Vec<usize> = middle.iter().chain(&east).copied().collect();
    let g_rest = g.induced(&rest);
    let east_in_rest: Vec<usize> = (middle.len()..rest.len()).collect();
    let second_cut = check_cut(&g_rest, &east_in_rest);
    Ok(HexSplit {
        g1: g.induced(&west),
        g2: g.induced(&middle),
        g3: g.induced(&east),
        west,
        middle,
        east,
        first_cut,
        second_cut,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::{count, CountConfig};
    use crate::graph::tests::cycle;
    use crate::iso::plane_isomorphic;
    use crate::reduce::{reduce_forced, ReduceStatus};
    use num_bigint::BigUint;

    #[test]
    fn cut_conditions_on_a_cycle() {
        let g = cycle(6);
        // an edge {0, 1}: both endpoints have outside neighbors
        assert_eq!(check_cut(&g, &[0, 1]).sealed, None);
        assert!(check_cut(&g, &[0, 1, 2, 3, 4, 5]).holds());
        assert!(!check_cut(&g, &[0]).balanced);
    }

    #[test]
    fn smallest_hexagon_splits() {
        let g = build_hd(1, 2).unwrap().dual().unwrap();
        let s = split_hd(&g, 1, 2).unwrap();
        assert!(s.first_cut.holds() && s.second_cut.holds());
        assert_eq!(s.west.len() + s.middle.len() + s.east.len(), g.len());
        let r = reduce_forced(&s.g2);
        assert_eq!(r.status, ReduceStatus::Ok);
        assert!(r.graph.is_empty());
        let cfg = CountConfig::default();
        assert_eq!(count(&s.g1, &cfg).unwrap(), BigUint::from(13u32));
        assert_eq!(count(&s.g3, &cfg).unwrap(), BigUint::from(13u32));
        assert!(plane_isomorphic(&s.g1, &s.g3));
    }

    #[test]
    fn wrong_graph_is_rejected() {
        let g = build_hd(1, 3).unwrap().dual().unwrap();
        assert!(split_hd(&g, 1, 2).is_err());
    }
}
