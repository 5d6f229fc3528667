//! Base-case enumeration and end-to-end verification runs.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::contour::{derive_contour, Triple};
use crate::count::{count, count_fkt, Budget, CountConfig};
use crate::error::{Error, Result};
use crate::forms::{blum, phi, psi};
use crate::iso::plane_isomorphic;
use crate::reduce::{reduce_forced, ReduceStatus};
use crate::region::{build_d, build_e, build_hd};
use crate::split::split_hd;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseCaseSet {
    /// Perimeter at most 14.
    pub small_perimeter: Vec<Triple>,
    /// `b <= 4`.
    pub narrow: Vec<Triple>,
    /// `c + d <= 2`.
    pub thin_corner: Vec<Triple>,
}

impl BaseCaseSet {
    /// All triples, each once, ordered by `(perimeter, a, b, c)`.
    pub fn union(&self) -> Vec<Triple> {
        let mut all: Vec<Triple> =
            self.small_perimeter.iter().chain(&self.narrow).chain(&self.thin_corner).copied().collect();
        all.sort_by_key(|&t| (derive_contour(t).perimeter().expect("valid"), t));
        all.dedup();
        all
    }

    /// How many of the three lists contain `t`.
    pub fn multiplicity(&self, t: Triple) -> usize {
        [&self.small_perimeter, &self.narrow, &self.thin_corner].iter().filter(|l| l.contains(&t)).count()
    }

    pub fn tall_count(&self) -> usize {
        self.small_perimeter.iter().filter(|&&t| derive_contour(t).tall).count()
    }
}

fn scan(a_max: i64, b_max: i64, c_max: i64, keep: impl Fn(Triple) -> bool) -> Vec<Triple> {
    let mut out = Vec::new();
    for a in 0..=a_max {
        for b in 0..=b_max {
            for c in 0..=c_max {
                let t = Triple::new(a, b, c);
                if derive_contour(t).valid && keep(t) {
                    out.push(t);
                }
            }
        }
    }
    out
}

pub fn enumerate_base_cases() -> BaseCaseSet {
    BaseCaseSet {
        small_perimeter: scan(7, 7, 7, |t| derive_contour(t).perimeter().expect("valid") <= 14),
        narrow: scan(8, 4, 4, |t| t.b <= 4),
        thin_corner: scan(10, 8, 2, |t| t.c + derive_contour(t).d <= 2),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct TripleReport {
    pub params: Triple,
    pub perimeter: i64,
    pub tall: bool,
    pub count_d: Option<String>,
    pub phi: String,
    pub count_e: Option<String>,
    pub psi: String,
    pub status: Status,
    pub note: Option<String>,
    #[serde(skip)]
    pub millis: u128,
}

fn counted(r: Result<BigUint>) -> Result<Option<BigUint>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Budget) => Ok(None),
        Err(e) => Err(e),
    }
}

fn with_deadline(cfg: &CountConfig, per_count: Option<Duration>) -> CountConfig {
    CountConfig { budget: Budget(per_count.map(|d| Instant::now() + d)), ..*cfg }
}

/// Counts both regions of `t` and compares them with the closed forms.
pub fn verify_triple(t: Triple, cfg: &CountConfig, per_count: Option<Duration>) -> Result<TripleReport> {
    let p = derive_contour(t);
    p.require_valid()?;
    let start = Instant::now();
    let d = counted(count(&build_d(t)?.dual()?, &with_deadline(cfg, per_count)))?;
    let e = counted(count(&build_e(t)?.dual()?, &with_deadline(cfg, per_count)))?;
    let (fd, fe) = (phi(t).to_integer(), psi(t).to_integer());
    let (status, note) = match (&d, &e) {
        (Some(d), Some(e)) if Some(d) == fd.as_ref() && Some(e) == fe.as_ref() => (Status::Pass, None),
        (Some(_), Some(_)) => (Status::Fail, None),
        _ => (Status::Skipped, Some("budget".to_string())),
    };
    Ok(TripleReport {
        params: t,
        perimeter: p.perimeter()?,
        tall: p.tall,
        count_d: d.map(|v| v.to_string()),
        phi: phi(t).to_string(),
        count_e: e.map(|v| v.to_string()),
        psi: psi(t).to_string(),
        status,
        note,
        millis: start.elapsed().as_millis(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct MainReport {
    pub triples: Vec<TripleReport>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl MainReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0 && self.skipped == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn verify_triples(ts: &[Triple], cfg: &CountConfig, per_count: Option<Duration>) -> Result<MainReport> {
    let mut triples: Vec<TripleReport> =
        ts.par_iter().map(|&t| verify_triple(t, cfg, per_count)).collect::<Result<_>>()?;
    triples.sort_by_key(|r| (r.perimeter, r.params));
    let tally = |s: Status| triples.iter().filter(|r| r.status == s).count();
    Ok(MainReport { passed: tally(Status::Pass), failed: tally(Status::Fail), skipped: tally(Status::Skipped), triples })
}

/// Every valid triple whose contour has perimeter at most `max_perimeter`.
pub fn triples_up_to(max_perimeter: i64) -> Vec<Triple> {
    let m = max_perimeter.max(0) / 2;
    scan(m, m, m, |t| derive_contour(t).perimeter().expect("valid") <= max_perimeter)
}

pub fn verify_main_theorem(max_perimeter: i64, cfg: &CountConfig, per_count: Option<Duration>) -> Result<MainReport> {
    let ts = triples_up_to(max_perimeter);
    if ts.is_empty() {
        return Err(Error::Unsupported(format!("no valid contour has perimeter at most {max_perimeter}")));
    }
    verify_triples(&ts, cfg, per_count)
}

#[derive(Debug, Clone, Serialize)]
pub struct BlumReport {
    pub a: i64,
    pub b: i64,
    pub expected: String,
    /// Count of the whole dual graph, unless skipped.
    pub direct: Option<String>,
    pub direct_note: Option<String>,
    pub west: String,
    pub middle: String,
    pub east: String,
    pub middle_reduces_to_nothing: bool,
    pub cuts_hold: bool,
    pub ends_isomorphic: bool,
    pub half: String,
    pub direct_ok: Option<bool>,
    pub split_ok: bool,
    pub half_ok: bool,
}

impl BlumReport {
    pub fn all_pass(&self) -> bool {
        self.direct_ok == Some(true) && self.split_ok && self.half_ok
    }
}

/// Three independent routes to the hexagon count: the whole dual by FKT, the
/// product over the three split pieces, and the closed form for one end.
pub fn verify_blum(a: i64, b: i64, cfg: &CountConfig, per_count: Option<Duration>) -> Result<BlumReport> {
    let expected = blum(a)?;
    let g = build_hd(a, b)?.dual()?;
    let direct = counted(count_fkt(&g, cfg.det, with_deadline(cfg, per_count).budget))?;
    let s = split_hd(&g, a, b)?;
    let m1 = count(&s.g1, cfg)?;
    let m2 = count(&s.g2, cfg)?;
    let m3 = count(&s.g3, cfg)?;
    let reduced = reduce_forced(&s.g2);
    let middle_reduces_to_nothing = reduced.status == ReduceStatus::Ok && reduced.graph.is_empty();
    let cuts_hold = s.first_cut.holds() && s.second_cut.holds();
    let ends_isomorphic = plane_isomorphic(&s.g1, &s.g3);
    let half = phi(Triple::new(2 * a, 3 * a, 2 * a)).to_integer().expect("nonnegative exponents");
    let split_ok = cuts_hold && m2 == BigUint::from(1u32) && m1 == m3 && &m1 * &m3 == expected;
    Ok(BlumReport {
        a,
        b,
        expected: expected.to_string(),
        direct_ok: direct.as_ref().map(|d| *d == expected),
        direct_note: direct.is_none().then(|| "budget".to_string()),
        direct: direct.map(|d| d.to_string()),
        west: m1.to_string(),
        middle: m2.to_string(),
        east: m3.to_string(),
        middle_reduces_to_nothing,
        cuts_hold,
        ends_isomorphic,
        half_ok: m1 == half,
        half: half.to_string(),
        split_ok,
    })
}
