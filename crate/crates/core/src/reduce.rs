use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::PlanarGraph;
use crate::matching::Matching;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReduceStatus {
    Ok,
    /// A vertex lost all its neighbors, so the graph has no perfect matching.
    Infeasible,
}

#[derive(Debug, Clone)]
pub struct Reduction {
    pub graph: PlanarGraph,
    /// Forced edges, in vertex ids of the input graph.
    pub forced: Matching,
    pub status: ReduceStatus,
    /// For each vertex of `graph`, its id in the input graph.
    pub kept: Vec<usize>,
}

/// Repeatedly matches a degree-one vertex (smallest id first) to its only
/// neighbor and deletes both.
pub fn reduce_forced(g: &PlanarGraph) -> Reduction {
    let n = g.len();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut forced = Matching::new();
    let mut status = ReduceStatus::Ok;
    if deg.contains(&0) {
        status = ReduceStatus::Infeasible;
    }
    let mut heap: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| deg[v] == 1).map(Reverse).collect();
    while status == ReduceStatus::Ok {
        let Some(Reverse(v)) = heap.pop() else { break };
        if !alive[v] {
            continue;
        }
        if deg[v] == 0 {
            status = ReduceStatus::Infeasible;
            break;
        }
        let u = *g.neighbors(v).iter().find(|&&u| alive[u]).expect("degree one");
        forced.insert(v, u);
        alive[v] = false;
        alive[u] = false;
        for &w in g.neighbors(u).iter().chain(g.neighbors(v)) {
            if !alive[w] {
                continue;
            }
            deg[w] -= 1;
            match deg[w] {
                0 => status = ReduceStatus::Infeasible,
                1 => heap.push(Reverse(w)),
                _ => {}
            }
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    Reduction { graph: g.induced(&kept), forced, status, kept }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{cycle, path};

    #[test]
    fn single_edge_and_isolated_vertex() {
        let r = reduce_forced(&path(2));
        assert_eq!(r.status, ReduceStatus::Ok);
        assert!(r.graph.is_empty());
        assert!(r.forced.contains(0, 1));
        let r = reduce_forced(&path(1));
        assert_eq!(r.status, ReduceStatus::Infeasible);
        assert!(r.forced.is_empty());
    }

    #[test]
    fn paths_and_cycles() {
        let r = reduce_forced(&path(6));
        assert_eq!(r.status, ReduceStatus::Ok);
        assert_eq!(r.forced.len(), 3);
        assert_eq!(reduce_forced(&path(5)).status, ReduceStatus::Infeasible);
        let r = reduce_forced(&cycle(6));
        assert_eq!(r.graph.len(), 6);
        assert!(r.forced.is_empty());
    }
}
