//! Kuo's condensation identity on a concrete plane graph.

use super::{IdentityReport, Term};
use crate::count::{count, CountConfig};
use crate::error::{Error, Result};
use crate::graph::PlanarGraph;

/// Whether `q` occurs in this cyclic order (either direction) on some face.
pub fn on_common_face(g: &PlanarGraph, q: [usize; 4]) -> bool {
    let faces = g.faces();
    faces.walks.iter().any(|walk| {
        let seq: Vec<usize> = walk.iter().map(|&(u, _)| u).collect();
        let pos: Option<Vec<usize>> = q.iter().map(|&v| seq.iter().position(|&w| w == v)).collect();
        let Some(pos) = pos else { return false };
        // a vertex met twice on the walk has no well-defined place on it
        if q.iter().any(|&v| seq.iter().filter(|&&w| w == v).count() > 1) {
            return false;
        }
        let cyclic = |p: &[usize]| (0..4).filter(|&i| p[i] > p[(i + 1) % 4]).count() == 1;
        let rev: Vec<usize> = pos.iter().rev().copied().collect();
        cyclic(&pos) || cyclic(&rev)
    })
}

pub fn check_quadruple(g: &PlanarGraph, q: [usize; 4]) -> Result<()> {
    let [x, y, z, t] = q;
    if let Some(&v) = q.iter().find(|&&v| v >= g.len()) {
        return Err(Error::UnknownVertex(v));
    }
    let color = |v: usize| g.vertex(v).color;
    let fail = |m: &str| Err(Error::Hypothesis(format!("condensation quadruple {q:?}: {m}")));
    if g.len() % 2 == 1 {
        return fail("graph has an odd number of vertices");
    }
    if color(x) != color(z) || color(y) != color(t) || color(x) == color(y) {
        return fail("x, z and y, t must lie in opposite color classes");
    }
    if !on_common_face(g, q) {
        return fail("vertices do not appear in cyclic order on one face");
    }
    Ok(())
}

/// `M(G) M(G-xyzt) = M(G-xy) M(G-zt) + M(G-tx) M(G-yz)`.
pub fn kuo_check(g: &PlanarGraph, q: [usize; 4], cfg: &CountConfig) -> Result<IdentityReport> {
    check_quadruple(g, q)?;
    let [x, y, z, t] = q;
    let sets: [(&str, Vec<usize>); 6] = [
        ("G", vec![]),
        ("G-{x,y,z,t}", vec![x, y, z, t]),
        ("G-{x,y}", vec![x, y]),
        ("G-{z,t}", vec![z, t]),
        ("G-{t,x}", vec![t, x]),
        ("G-{y,z}", vec![y, z]),
    ];
    let mut vals = Vec::with_capacity(6);
    let mut terms = Vec::with_capacity(6);
    for (name, s) in &sets {
        let v = count(&g.remove_vertices(s)?, cfg)?;
        terms.push(Term { name: format!("M({name})"), value: v.to_string() });
        vals.push(v);
    }
    let lhs = &vals[0] * &vals[1];
    let r0 = &vals[2] * &vals[3];
    let r1 = &vals[4] * &vals[5];
    Ok(IdentityReport {
        id: "kuo".into(),
        params: [g.len() as i64, 0, 0],
        pass: lhs == &r0 + &r1,
        lhs: lhs.to_string(),
        rhs: vec![r0.to_string(), r1.to_string()],
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::Method;
    use crate::graph::tests::cycle;

    #[test]
    fn square() {
        let g = cycle(4);
        let r = kuo_check(&g, [0, 1, 2, 3], &CountConfig::default().with_method(Method::Brute)).unwrap();
        assert!(r.pass);
        assert_eq!((r.lhs.as_str(), r.rhs.clone()), ("2", vec!["1".to_string(), "1".to_string()]));
    }

    #[test]
    fn bad_quadruples() {
        let g = cycle(6);
        let cfg = CountConfig::default();
        // same color for x and y
        assert!(kuo_check(&g, [0, 2, 1, 3], &cfg).is_err());
        // right colors, out of cyclic order
        assert!(kuo_check(&g, [0, 3, 4, 1], &cfg).is_err());
        assert!(kuo_check(&g, [0, 1, 2, 3], &cfg).unwrap().pass);
        assert!(kuo_check(&g, [0, 1, 2, 9], &cfg).is_err());
    }
}
