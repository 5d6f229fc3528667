//! Seeded generators for the randomized suites.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::PlanarGraph;
use crate::lattice::{cross, Color, Point};
use crate::matching::find_matching;

fn on_segment(p: Point, q: Point, r: Point) -> bool {
    cross(q - p, r - p) == 0
        && r.x >= p.x.min(q.x)
        && r.x <= p.x.max(q.x)
        && r.y >= p.y.min(q.y)
        && r.y <= p.y.max(q.y)
}

/// Whether segments `pq` and `rs` meet anywhere other than a shared endpoint.
fn segments_clash(p: Point, q: Point, r: Point, s: Point) -> bool {
    let shared = [p, q].iter().filter(|x| **x == r || **x == s).count();
    if shared == 2 {
        return true;
    }
    if shared == 1 {
        // touching at the common endpoint is fine unless they overlap
        let (o, a, b) = if p == r {
            (p, q, s)
        } else if p == s {
            (p, q, r)
        } else if q == r {
            (q, p, s)
        } else {
            (q, p, r)
        };
        return on_segment(o, a, b) || on_segment(o, b, a);
    }
    let d1 = cross(q - p, r - p).signum();
    let d2 = cross(q - p, s - p).signum();
    let d3 = cross(s - r, p - r).signum();
    let d4 = cross(s - r, q - r).signum();
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && on_segment(p, q, r))
        || (d2 == 0 && on_segment(p, q, s))
        || (d3 == 0 && on_segment(r, s, p))
        || (d4 == 0 && on_segment(r, s, q))
}

/// A straight-line plane bipartite graph on `n` random lattice points, half
/// of each color, with black-white segments added in random order whenever
/// they cross nothing already drawn.
pub fn random_plane_bipartite<R: Rng>(rng: &mut R, n: usize) -> PlanarGraph {
    let mut pos: Vec<Point> = Vec::with_capacity(n);
    while pos.len() < n {
        let p = Point::new(rng.gen_range(0..64), rng.gen_range(0..64));
        if !pos.contains(&p) {
            pos.push(p);
        }
    }
    let colors: Vec<Color> = (0..n).map(|i| if i % 2 == 0 { Color::White } else { Color::Black }).collect();
    let mut candidates: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| u < v && (u + v) % 2 == 1).collect();
    candidates.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (u, v) in candidates {
        let (p, q) = (pos[u], pos[v]);
        let through_vertex = (0..n).any(|w| w != u && w != v && on_segment(p, q, pos[w]));
        if through_vertex || edges.iter().any(|&(r, s)| segments_clash(p, q, pos[r], pos[s])) {
            continue;
        }
        edges.push((u, v));
    }
    PlanarGraph::from_embedding(&pos, &colors, &edges).expect("straight-line drawing is plane")
}

/// Four vertices met in order along one facial walk, each exactly once,
/// alternating in color.
pub fn random_face_quadruple<R: Rng>(rng: &mut R, g: &PlanarGraph) -> Option<[usize; 4]> {
    let faces = g.faces();
    let mut order: Vec<usize> = (0..faces.walks.len()).collect();
    order.shuffle(rng);
    for f in order {
        let seq: Vec<usize> = faces.walks[f].iter().map(|&(u, _)| u).collect();
        let once: Vec<usize> =
            (0..seq.len()).filter(|&i| seq.iter().filter(|&&w| w == seq[i]).count() == 1).collect();
        for _ in 0..32 {
            if once.len() < 4 {
                break;
            }
            let mut pick: Vec<usize> = once.choose_multiple(rng, 4).copied().collect();
            pick.sort_unstable();
            let q = [seq[pick[0]], seq[pick[1]], seq[pick[2]], seq[pick[3]]];
            let c = |v: usize| g.vertex(v).color;
            if c(q[0]) == c(q[2]) && c(q[1]) == c(q[3]) && c(q[0]) != c(q[1]) {
                return Some(q);
            }
        }
    }
    None
}

/// A plane bipartite graph with a perfect matching and a valid
/// condensation quadruple; between 4 and `max_vertices` vertices (even).
pub fn kuo_instance<R: Rng>(rng: &mut R, max_vertices: usize) -> (PlanarGraph, [usize; 4]) {
    let top = (max_vertices / 2).max(2);
    loop {
        let n = 2 * rng.gen_range(2..=top);
        let g = random_plane_bipartite(rng, n);
        if find_matching(&g).is_none() {
            continue;
        }
        if let Some(q) = random_face_quadruple(rng, &g) {
            return (g, q);
        }
    }
}

/// A bipartite graph with an induced subgraph `h` whose white vertices have
/// no neighbors outside and whose color classes are equal; blacks of `h`
/// may see whites outside.
#[derive(Debug, Clone)]
pub struct PlantedSplit {
    pub adj: Vec<Vec<usize>>,
    pub colors: Vec<Color>,
    pub h: Vec<usize>,
}

pub fn planted_split<R: Rng>(rng: &mut R, max_vertices: usize) -> PlantedSplit {
    let k = rng.gen_range(1..=(max_vertices / 4).max(1));
    let rest = rng.gen_range(1..=((max_vertices - 2 * k) / 2).max(1));
    // h: whites 0..k, blacks k..2k; outside: whites, blacks
    let outside_white = rest;
    let outside_black = rest;
    let n = 2 * k + outside_white + outside_black;
    let mut colors = vec![Color::White; n];
    for c in colors.iter_mut().take(2 * k).skip(k) {
        *c = Color::Black;
    }
    let ow0 = 2 * k;
    let ob0 = ow0 + outside_white;
    for c in colors.iter_mut().skip(ob0) {
        *c = Color::Black;
    }
    let mut adj = vec![Vec::new(); n];
    let add = |adj: &mut Vec<Vec<usize>>, u: usize, v: usize| {
        adj[u].push(v);
        adj[v].push(u);
    };
    let p = rng.gen_range(0.3..0.8);
    for w in 0..k {
        for b in k..2 * k {
            if rng.gen_bool(p) {
                add(&mut adj, w, b);
            }
        }
    }
    for w in ow0..ob0 {
        for b in ob0..n {
            if rng.gen_bool(p) {
                add(&mut adj, w, b);
            }
        }
    }
    for b in k..2 * k {
        for w in ow0..ob0 {
            if rng.gen_bool(p / 2.0) {
                add(&mut adj, b, w);
            }
        }
    }
    PlantedSplit { adj, colors, h: (0..2 * k).collect() }
}

impl PlantedSplit {
    pub fn outside(&self) -> Vec<usize> {
        (0..self.adj.len()).filter(|v| !self.h.contains(v)).collect()
    }

    /// Adjacency lists of the subgraph induced by `keep`, renumbered.
    pub fn induced(&self, keep: &[usize]) -> Vec<Vec<usize>> {
        let mut map = vec![usize::MAX; self.adj.len()];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = i;
        }
        keep.iter()
            .map(|&v| self.adj[v].iter().filter(|&&u| map[u] != usize::MAX).map(|&u| map[u]).collect())
            .collect()
    }
}

/// A connected, color-balanced induced subgraph of one of `pool`, grown by
/// breadth-first search from a random vertex and then thinned at random.
/// At least half of `max_vertices` are grown; four in five have a perfect
/// matching.
pub fn dungeon_subgraph<R: Rng>(rng: &mut R, pool: &[PlanarGraph], max_vertices: usize) -> PlanarGraph {
    loop {
        let g = pool.choose(rng).expect("nonempty pool");
        let top = max_vertices.min(g.len());
        let target = rng.gen_range((top / 2).max(2)..=top);
        let start = rng.gen_range(0..g.len());
        let mut seen = vec![false; g.len()];
        let mut keep = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let mut nbrs = g.neighbors(v).to_vec();
            nbrs.shuffle(rng);
            for u in nbrs {
                if !seen[u] && keep.len() < target {
                    seen[u] = true;
                    keep.push(u);
                    queue.push_back(u);
                }
            }
        }
        if rng.gen_bool(0.3) && keep.len() > 4 {
            for _ in 0..2 {
                let i = rng.gen_range(1..keep.len());
                keep.swap_remove(i);
            }
        }
        keep.sort_unstable();
        let h = g.induced(&keep);
        if h.len().is_multiple_of(2) && h.is_balanced() && (rng.gen_bool(0.2) || find_matching(&h).is_some()) {
            return h;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::split::check_cut_lists;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn segment_tests() {
        let p = Point::new;
        assert!(segments_clash(p(0, 0), p(4, 4), p(0, 4), p(4, 0)));
        assert!(!segments_clash(p(0, 0), p(4, 4), p(4, 4), p(8, 0)));
        assert!(segments_clash(p(0, 0), p(4, 0), p(2, 0), p(6, 0)));
        assert!(segments_clash(p(0, 0), p(4, 0), p(0, 0), p(2, 0)));
        assert!(!segments_clash(p(0, 0), p(1, 0), p(0, 1), p(1, 1)));
        assert!(segments_clash(p(0, 0), p(4, 0), p(2, 0), p(2, 3)));
    }

    #[test]
    fn generators_are_reproducible() {
        let a = kuo_instance(&mut ChaCha8Rng::seed_from_u64(9), 12);
        let b = kuo_instance(&mut ChaCha8Rng::seed_from_u64(9), 12);
        assert_eq!(a, b);
    }

    #[test]
    fn generated_graphs_are_plane_and_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let (g, q) = kuo_instance(&mut rng, 16);
            assert!(g.len() <= 16 && g.len() % 2 == 0);
            g.check_embedding().unwrap();
            crate::verify::kuo::check_quadruple(&g, q).unwrap();
            let s = planted_split(&mut rng, 20);
            assert!(s.adj.len() <= 20);
            assert!(check_cut_lists(&s.adj, &s.colors, &s.h).holds());
        }
    }

    #[test]
    fn dungeon_subgraphs_are_balanced() {
        let pool = [crate::region::build_hd(1, 2).unwrap().dual().unwrap()];
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let h = dungeon_subgraph(&mut rng, &pool, 22);
            assert!(h.len() <= 22 && h.is_balanced());
            h.check_embedding().unwrap();
        }
    }
}
