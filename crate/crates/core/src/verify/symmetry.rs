//! Coincidences between closed forms, and the reflections of regions that
//! realize them.

use std::fmt;
use std::str::FromStr;

use super::recurrence::formula_value;
use super::{CountCache, Family, IdentityReport, Term};
use crate::contour::{derive_contour, Triple};
use crate::error::{Error, Result};
use crate::iso::plane_isomorphic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// `phi(a-2,b-2,-1) = phi(3b-2a,2b-a,1)`; `c` is ignored.
    ShiftedFlat,
    /// `phi(a-1,b-1,c) = psi(c,b-1,a-1)` when `2b-a = 2c`.
    Transpose,
    /// `phi(a,b,c) = psi(f,e,d)` and `psi(a,b,c) = phi(f,e,d)`, with
    /// `f = c+d-a`: reflection across the side of length `b`.
    SideReflection,
    /// `phi(a,b,c) = phi(b,a,f)` and the same for `psi`, with `f = a-c-d`:
    /// reflection across the horizontal line through the western corner.
    HorizontalReflection,
}

impl Symmetry {
    pub const ALL: [Symmetry; 4] =
        [Symmetry::ShiftedFlat, Symmetry::Transpose, Symmetry::SideReflection, Symmetry::HorizontalReflection];

    pub fn name(self) -> &'static str {
        match self {
            Symmetry::ShiftedFlat => "shifted-flat",
            Symmetry::Transpose => "transpose",
            Symmetry::SideReflection => "side-reflection",
            Symmetry::HorizontalReflection => "horizontal-reflection",
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Symmetry> {
        Symmetry::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown symmetry {s:?}")))
    }
}

type Side = (Family, Triple);

fn formula_name((fam, t): Side) -> String {
    match fam {
        Family::D => format!("phi{t}"),
        Family::E => format!("psi{t}"),
    }
}

fn formula_report(id: String, t: Triple, l: Side, r: Side) -> IdentityReport {
    let (lv, rv) = (formula_value(l.0, l.1), formula_value(r.0, r.1));
    IdentityReport {
        id,
        params: [t.a, t.b, t.c],
        lhs: lv.to_string(),
        rhs: vec![rv.to_string()],
        pass: lv == rv,
        terms: vec![
            Term { name: formula_name(l), value: lv.to_string() },
            Term { name: formula_name(r), value: rv.to_string() },
        ],
    }
}

fn region_report(id: String, t: Triple, l: Side, r: Side, cache: &CountCache) -> Result<IdentityReport> {
    let (lv, rv) = (cache.get(l.0, l.1)?, cache.get(r.0, r.1)?);
    let congruent = plane_isomorphic(&l.0.build(l.1)?.dual()?, &r.0.build(r.1)?.dual()?);
    Ok(IdentityReport {
        id,
        params: [t.a, t.b, t.c],
        lhs: lv.to_string(),
        rhs: vec![rv.to_string()],
        pass: lv == rv && congruent,
        terms: vec![
            Term { name: format!("M({}{})", l.0, l.1), value: lv.to_string() },
            Term { name: format!("M({}{})", r.0, r.1), value: rv.to_string() },
            Term { name: "dual graphs isomorphic".into(), value: congruent.to_string() },
        ],
    })
}

/// Checks the formula identity at `t`. With a cache, reflections whose two
/// regions both exist are also checked on regions: equal counts and
/// isomorphic dual graphs.
pub fn symmetry_check(kind: Symmetry, t: Triple, cache: Option<&CountCache>) -> Result<Vec<IdentityReport>> {
    let Triple { a, b, c } = t;
    let d = 2 * b - a - 2 * c;
    let e = 3 * b - 2 * a - 2 * c;
    let name = kind.name();
    let pairs: Vec<(Side, Side)> = match kind {
        Symmetry::ShiftedFlat => {
            vec![((Family::D, Triple::new(a - 2, b - 2, -1)), (Family::D, Triple::new(3 * b - 2 * a, 2 * b - a, 1)))]
        }
        Symmetry::Transpose => {
            if d != 0 {
                return Err(Error::Hypothesis(format!("{name} at {t}: needs 2b - a = 2c")));
            }
            vec![((Family::D, Triple::new(a - 1, b - 1, c)), (Family::E, Triple::new(c, b - 1, a - 1)))]
        }
        Symmetry::SideReflection => {
            let r = Triple::new(c + d - a, e, d);
            vec![((Family::D, t), (Family::E, r)), ((Family::E, t), (Family::D, r))]
        }
        Symmetry::HorizontalReflection => {
            let r = Triple::new(b, a, a - c - d);
            vec![((Family::D, t), (Family::D, r)), ((Family::E, t), (Family::E, r))]
        }
    };
    let mut out: Vec<IdentityReport> =
        pairs.iter().map(|&(l, r)| formula_report(format!("{name}:{}", formula_name(l)), t, l, r)).collect();
    let Some(cache) = cache else { return Ok(out) };
    let p = derive_contour(t);
    let applies = match kind {
        Symmetry::SideReflection => p.valid && !p.tall,
        Symmetry::HorizontalReflection => p.valid && p.tall,
        _ => false,
    };
    if applies {
        for &(l, r) in &pairs {
            if derive_contour(r.1).valid {
                out.push(region_report(format!("{name}:M({})", l.0), t, l, r, cache)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::CountConfig;

    #[test]
    fn formula_instances() {
        let t = Triple::new;
        for kind in Symmetry::ALL {
            let u = if kind == Symmetry::Transpose { t(4, 5, 3) } else { t(3, 5, 2) };
            for r in symmetry_check(kind, u, None).unwrap() {
                assert!(r.pass, "{r}");
            }
        }
        assert!(symmetry_check(Symmetry::Transpose, t(4, 5, 2), None).is_err());
    }

    #[test]
    fn reflected_regions() {
        let cache = CountCache::new(CountConfig::default());
        let side = symmetry_check(Symmetry::SideReflection, Triple::new(1, 3, 2), Some(&cache)).unwrap();
        assert_eq!(side.len(), 4);
        assert!(side.iter().all(|r| r.pass), "{side:?}");
        let horiz = symmetry_check(Symmetry::HorizontalReflection, Triple::new(6, 5, 1), Some(&cache)).unwrap();
        assert_eq!(horiz.len(), 4);
        assert!(horiz.iter().all(|r| r.pass), "{horiz:?}");
    }
}
