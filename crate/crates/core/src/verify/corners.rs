//! Condensation quadruples at the corners of a region dual.
//!
//! The quadruple is located by search: each of `x, y, z, t` ranges over the
//! outer-boundary vertices nearest its named contour corner, and a quadruple
//! is accepted when the four pair deletions and the full deletion have the
//! counts of the smaller regions in the recurrence. The audit then checks the
//! part the search does not see: after stripping forced edges, every deleted
//! graph is isomorphic as a plane map to the dual of its smaller region.

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::Serialize;

use super::recurrence::{identity, region_hypothesis, Factor, Identity};
use super::{CountCache, Lemma, LemmaKind};
use crate::contour::{derive_contour, Triple};
use crate::count::count;
use crate::error::{Error, Result};
use crate::graph::PlanarGraph;
use crate::harness::Status;
use crate::iso::plane_isomorphic;
use crate::lattice::LatticePoint;
use crate::reduce::{reduce_forced, ReduceStatus};

/// How many boundary vertices nearest a corner are tried for each role.
pub const NEAR: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Corner {
    West,
    North,
    South,
    East,
    /// Any of the six contour corners.
    Any,
}

/// Corners of `x, y, z, t`.
pub fn roles(kind: LemmaKind) -> [Corner; 4] {
    use Corner::*;
    match kind {
        LemmaKind::Tall => [West, North, South, West],
        LemmaKind::Square | LemmaKind::SquareC0 => [West, East, East, West],
        LemmaKind::Short => [West, East, South, West],
        LemmaKind::ShortD0 => [Any; 4],
    }
}

fn contour_corners(t: Triple) -> Result<Vec<(f64, f64)>> {
    let p = derive_contour(t);
    p.require_valid()?;
    let mut at = LatticePoint::new(0, 0);
    let mut pts = Vec::with_capacity(6);
    for (_, dir, len) in p.sides() {
        pts.push(at.scaled().to_euclid());
        at = at.offset(dir, len);
    }
    Ok(pts)
}

/// Euclidean positions of the contour corners matching `corner`: the extreme
/// one in that direction (ties toward the earlier corner of the walk), or all
/// six for [`Corner::Any`].
pub fn corner_points(t: Triple, corner: Corner) -> Result<Vec<(f64, f64)>> {
    let pts = contour_corners(t)?;
    let key = |&(x, y): &(f64, f64)| match corner {
        Corner::West => x,
        Corner::East => -x,
        Corner::South => y,
        Corner::North => -y,
        Corner::Any => 0.0,
    };
    if corner == Corner::Any {
        return Ok(pts);
    }
    let mut best = pts[0];
    for q in &pts[1..] {
        if key(q) < key(&best) - 1e-9 {
            best = *q;
        }
    }
    Ok(vec![best])
}

/// The [`NEAR`] outer-boundary vertices closest to each point, in order of
/// first appearance.
fn nearest_boundary(g: &PlanarGraph, boundary: &[usize], points: &[(f64, f64)]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for &at in points {
        let dist = |v: usize| {
            let (x, y) = g.vertex(v).pos.to_euclid();
            (x - at.0).powi(2) + (y - at.1).powi(2)
        };
        let mut vs = boundary.to_vec();
        vs.sort_by(|&u, &v| dist(u).total_cmp(&dist(v)).then(u.cmp(&v)));
        for v in vs.into_iter().take(NEAR) {
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

/// Which smaller region each deletion should produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Assignment {
    pub xy: Factor,
    pub yz: Factor,
    pub zt: Factor,
    pub tx: Factor,
    pub xyzt: Factor,
}

/// The eight ways to match the four pair deletions with the right side.
fn assignments(id: &Identity) -> Vec<Assignment> {
    let mut out = Vec::with_capacity(8);
    for first in 0..2 {
        let (p, q) = (id.rhs[first], id.rhs[1 - first]);
        for flip_p in [false, true] {
            for flip_q in [false, true] {
                let (xy, zt) = if flip_p { (p[1], p[0]) } else { (p[0], p[1]) };
                let (yz, tx) = if flip_q { (q[1], q[0]) } else { (q[0], q[1]) };
                out.push(Assignment { xy, yz, zt, tx, xyzt: id.lhs[1] });
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct CornerFit {
    pub graph: PlanarGraph,
    pub quadruple: [usize; 4],
    pub assignment: Assignment,
}

fn deleted_count(g: &PlanarGraph, cache: &CountCache, memo: &mut HashMap<Vec<usize>, BigUint>, s: &[usize]) -> Result<BigUint> {
    let mut key = s.to_vec();
    key.sort_unstable();
    if let Some(v) = memo.get(&key) {
        return Ok(v.clone());
    }
    let v = count(&g.remove_vertices(&key)?, cache.config())?;
    memo.insert(key, v.clone());
    Ok(v)
}

/// Finds `x, y, z, t` near the corners of `roles(lemma.kind)` on the dual of
/// the lemma's region at `t`.
pub fn corner_vertices(lemma: Lemma, t: Triple, cache: &CountCache) -> Result<CornerFit> {
    region_hypothesis(lemma.kind, t).map_err(|m| Error::Hypothesis(format!("{lemma} at {t}: {m}")))?;
    let g = lemma.family.build(t)?.dual()?;
    let boundary = g.outer_boundary();
    let cand: Vec<Vec<usize>> = roles(lemma.kind)
        .iter()
        .map(|&c| corner_points(t, c).map(|p| nearest_boundary(&g, &boundary, &p)))
        .collect::<Result<_>>()?;
    let id = identity(lemma.kind, lemma.family, t);
    let color = |v: usize| g.vertex(v).color;
    let mut memo = HashMap::new();
    for asg in assignments(&id) {
        let want = |f: Factor| cache.get(f.0, f.1);
        let (wxy, wyz, wzt, wtx, wall) = (want(asg.xy)?, want(asg.yz)?, want(asg.zt)?, want(asg.tx)?, want(asg.xyzt)?);
        for &x in &cand[0] {
            for &y in &cand[1] {
                if color(x) == color(y) || deleted_count(&g, cache, &mut memo, &[x, y])? != wxy {
                    continue;
                }
                for &z in &cand[2] {
                    if z == x || color(z) != color(x) || deleted_count(&g, cache, &mut memo, &[y, z])? != wyz {
                        continue;
                    }
                    for &w in &cand[3] {
                        if w == y || color(w) != color(y) {
                            continue;
                        }
                        let q = [x, y, z, w];
                        if deleted_count(&g, cache, &mut memo, &[z, w])? != wzt
                            || deleted_count(&g, cache, &mut memo, &[w, x])? != wtx
                            || super::kuo::check_quadruple(&g, q).is_err()
                            || deleted_count(&g, cache, &mut memo, &q)? != wall
                        {
                            continue;
                        }
                        return Ok(CornerFit { graph: g, quadruple: q, assignment: asg });
                    }
                }
            }
        }
    }
    Err(Error::Unsupported(format!("{lemma} at {t}: no quadruple near the corners reproduces the smaller regions")))
}

#[derive(Debug, Clone, Serialize)]
pub struct RemovalCheck {
    pub removed: String,
    pub region: String,
    pub count: String,
    pub expected: String,
    pub counts_agree: bool,
    pub isomorphic: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionReport {
    pub id: String,
    pub params: [i64; 3],
    pub status: Status,
    pub note: Option<String>,
    /// `x, y, z, t` as cells `[row, col, orient, sub]`.
    pub corners: Option<[[i64; 4]; 4]>,
    pub removals: Vec<RemovalCheck>,
}

impl ReductionReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn stripped(g: &PlanarGraph) -> Option<PlanarGraph> {
    let r = reduce_forced(g);
    (r.status == ReduceStatus::Ok).then_some(r.graph)
}

/// Deletes each corner set from the lemma's region dual and compares the
/// result with the independently built smaller region.
pub fn reduction_check(lemma: Lemma, t: Triple, cache: &CountCache) -> Result<ReductionReport> {
    let fit = match corner_vertices(lemma, t, cache) {
        Ok(fit) => fit,
        Err(Error::Unsupported(m)) => {
            return Ok(ReductionReport {
                id: lemma.to_string(),
                params: [t.a, t.b, t.c],
                status: Status::Skipped,
                note: Some(m),
                corners: None,
                removals: Vec::new(),
            })
        }
        Err(e) => return Err(e),
    };
    let g = &fit.graph;
    let [x, y, z, w] = fit.quadruple;
    let asg = fit.assignment;
    let sets: [(&str, Vec<usize>, Factor); 6] = [
        ("{}", vec![], (lemma.family, t)),
        ("{x,y}", vec![x, y], asg.xy),
        ("{y,z}", vec![y, z], asg.yz),
        ("{z,t}", vec![z, w], asg.zt),
        ("{t,x}", vec![w, x], asg.tx),
        ("{x,y,z,t}", vec![x, y, z, w], asg.xyzt),
    ];
    let mut removals = Vec::with_capacity(sets.len());
    for (name, s, (fam, u)) in sets {
        let h = g.remove_vertices(&s)?;
        let small = fam.build(u)?.dual()?;
        let got = count(&h, cache.config())?;
        let expected = cache.get(fam, u)?;
        let isomorphic = match (stripped(&h), stripped(&small)) {
            (Some(a), Some(b)) => plane_isomorphic(&a, &b),
            _ => false,
        };
        removals.push(RemovalCheck {
            removed: name.to_string(),
            region: format!("{fam}{u}"),
            counts_agree: got == expected,
            count: got.to_string(),
            expected: expected.to_string(),
            isomorphic,
        });
    }
    let pass = removals.iter().all(|r| r.counts_agree && r.isomorphic);
    let cell = |v: usize| g.vertex(v).cell.expect("region dual").to_tuple();
    Ok(ReductionReport {
        id: lemma.to_string(),
        params: [t.a, t.b, t.c],
        status: if pass { Status::Pass } else { Status::Fail },
        note: None,
        corners: Some([cell(x), cell(y), cell(z), cell(w)]),
        removals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::CountConfig;
    use crate::verify::recurrence::smallest_admissible;
    use crate::verify::Family;

    #[test]
    fn corners_of_a_tall_contour() {
        let t = Triple::new(8, 8, 3);
        let one = |c| corner_points(t, c).unwrap()[0];
        let ((wx, _), (ex, _)) = (one(Corner::West), one(Corner::East));
        let ((_, ny), (_, sy)) = (one(Corner::North), one(Corner::South));
        assert!(wx < ex && sy < ny);
        assert_eq!(corner_points(t, Corner::Any).unwrap().len(), 6);
    }

    #[test]
    fn eight_assignments_cover_both_pairings() {
        let id = identity(LemmaKind::Tall, Family::D, Triple::new(8, 8, 3));
        let a = assignments(&id);
        assert_eq!(a.len(), 8);
        assert!(a.iter().all(|s| s.xyzt == id.lhs[1]));
    }

    #[test]
    fn empty_removal_is_the_region_itself() {
        let cache = CountCache::new(CountConfig::default());
        let lemma = Lemma { kind: LemmaKind::Tall, family: Family::D, target: crate::verify::recurrence::Target::Regions };
        let r = reduction_check(lemma, smallest_admissible(LemmaKind::Tall), &cache).unwrap();
        if let Some(first) = r.removals.first() {
            assert_eq!(first.removed, "{}");
            assert!(first.counts_agree && first.isomorphic);
        } else {
            assert_eq!(r.status, Status::Skipped);
        }
    }
}
