//! The five condensation recurrences, each for both region families, checked
//! on region counts and on the closed forms.
//!
//! | kind       | left side                  | right side                                                |
//! |------------|----------------------------|-----------------------------------------------------------|
//! | `tall`     | `M(a,b,c) M(a-3,b-3,c-2)`  | `M(a-2,b-1,c) M(a-1,b-2,c-2) + M(a-1,b-1,c-1) M(a-2,b-2,c-1)` |
//! | `square`   | `M(a,b,c) M(a-2,b-2,c)`    | `M(a-1,b-1,c)^2 + M(a,b,c+1) M(a-2,b-2,c-1)`              |
//! | `square-c0`| as `square`, `c = 0`       | last factor `M(e,d,1)`                                    |
//! | `short`    | `M(a,b,c) M(a-2,b-3,c-2)`  | `M(a-1,b-1,c) M(a-1,b-2,c-2) + M(a-2,b-2,c-1) M(a,b-1,c-1)` |
//! | `short-d0` | as `short`, `d = 0`        | first factor from the other family at `(c,b-1,a-1)`        |

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use super::{CountCache, Family, IdentityReport, Term};
use crate::contour::{derive_contour, Triple};
use crate::error::{Error, Result};
use crate::forms::{phi, psi};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaKind {
    Tall,
    Square,
    SquareC0,
    Short,
    ShortD0,
}

impl LemmaKind {
    pub const ALL: [LemmaKind; 5] =
        [LemmaKind::Tall, LemmaKind::Square, LemmaKind::SquareC0, LemmaKind::Short, LemmaKind::ShortD0];

    pub fn name(self) -> &'static str {
        match self {
            LemmaKind::Tall => "tall",
            LemmaKind::Square => "square",
            LemmaKind::SquareC0 => "square-c0",
            LemmaKind::Short => "short",
            LemmaKind::ShortD0 => "short-d0",
        }
    }
}

/// What an identity is evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Regions,
    Formulas,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lemma {
    pub kind: LemmaKind,
    pub family: Family,
    pub target: Target,
}

impl Lemma {
    pub fn all(target: Target) -> Vec<Lemma> {
        LemmaKind::ALL
            .iter()
            .flat_map(|&kind| [Family::D, Family::E].map(|family| Lemma { kind, family, target }))
            .collect()
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suffix = match (self.target, self.family) {
            (Target::Regions, fam) => fam.to_string(),
            (Target::Formulas, Family::D) => "phi".into(),
            (Target::Formulas, Family::E) => "psi".into(),
        };
        write!(f, "{}:{suffix}", self.kind.name())
    }
}

impl FromStr for Lemma {
    type Err = Error;

    /// `<kind>:<D|E|phi|psi>`, e.g. `square-c0:D` or `short:psi`.
    fn from_str(s: &str) -> Result<Lemma> {
        let bad = || Error::Parse(format!("unknown identity {s:?}; expected <kind>:<D|E|phi|psi>"));
        let (k, t) = s.split_once(':').ok_or_else(bad)?;
        let kind = *LemmaKind::ALL.iter().find(|x| x.name() == k).ok_or_else(bad)?;
        let (family, target) = match t {
            "D" => (Family::D, Target::Regions),
            "E" => (Family::E, Target::Regions),
            "phi" | "φ" => (Family::D, Target::Formulas),
            "psi" | "ψ" => (Family::E, Target::Formulas),
            _ => return Err(bad()),
        };
        Ok(Lemma { kind, family, target })
    }
}

pub type Factor = (Family, Triple);

/// `lhs[0] lhs[1] = rhs[0][0] rhs[0][1] + rhs[1][0] rhs[1][1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Identity {
    pub lhs: [Factor; 2],
    pub rhs: [[Factor; 2]; 2],
}

pub fn identity(kind: LemmaKind, fam: Family, t: Triple) -> Identity {
    let Triple { a, b, c } = t;
    let s = |da: i64, db: i64, dc: i64| (fam, t.shifted(-da, -db, -dc));
    match kind {
        LemmaKind::Tall => Identity { lhs: [s(0, 0, 0), s(3, 3, 2)], rhs: [[s(2, 1, 0), s(1, 2, 2)], [s(1, 1, 1), s(2, 2, 1)]] },
        LemmaKind::Square => Identity { lhs: [s(0, 0, 0), s(2, 2, 0)], rhs: [[s(1, 1, 0), s(1, 1, 0)], [s(0, 0, -1), s(2, 2, 1)]] },
        LemmaKind::SquareC0 => {
            let d = 2 * b - a - 2 * c;
            let e = 3 * b - 2 * a - 2 * c;
            Identity {
                lhs: [s(0, 0, 0), s(2, 2, 0)],
                rhs: [[s(1, 1, 0), s(1, 1, 0)], [s(0, 0, -1), (fam, Triple::new(e, d, 1))]],
            }
        }
        LemmaKind::Short => Identity { lhs: [s(0, 0, 0), s(2, 3, 2)], rhs: [[s(1, 1, 0), s(1, 2, 2)], [s(2, 2, 1), s(0, 1, 1)]] },
        LemmaKind::ShortD0 => Identity {
            lhs: [s(0, 0, 0), s(2, 3, 2)],
            rhs: [[(fam.other(), Triple::new(c, b - 1, a - 1)), s(1, 2, 2)], [s(2, 2, 1), s(0, 1, 1)]],
        },
    }
}

/// Side conditions under which the region recurrence is claimed.
pub fn region_hypothesis(kind: LemmaKind, t: Triple) -> std::result::Result<(), String> {
    let p = derive_contour(t);
    let Triple { a, b, c } = t;
    let (d, e) = (p.d, p.e);
    let mut need: Vec<(bool, &str)> = vec![(p.valid, "region parameters are valid")];
    match kind {
        LemmaKind::Tall => need.extend([(b >= 5, "b >= 5"), (c >= 2, "c >= 2"), (a > c + d, "a >= c + d + 1")]),
        LemmaKind::Square | LemmaKind::SquareC0 => {
            need.extend([(a >= 2, "a >= 2"), (b >= 4, "b >= 4"), (d >= 2, "d >= 2"), (e >= 2, "e >= 2")]);
            need.push(if kind == LemmaKind::Square { (c >= 1, "c >= 1") } else { (c == 0, "c = 0") });
        }
        LemmaKind::Short | LemmaKind::ShortD0 => {
            need.extend([(a >= 2, "a >= 2"), (b >= 5, "b >= 5"), (c >= 2, "c >= 2"), (a <= c + d, "a <= c + d")]);
            need.push(if kind == LemmaKind::Short { (d >= 1, "d >= 1") } else { (d == 0, "d = 0") });
        }
    }
    match need.iter().filter(|(ok, _)| !ok).map(|(_, m)| *m).collect::<Vec<_>>() {
        failed if failed.is_empty() => Ok(()),
        failed => Err(failed.join(", ")),
    }
}

/// Side conditions of the closed-form version, which holds for all integers
/// except for the two restricted variants.
pub fn formula_hypothesis(kind: LemmaKind, t: Triple) -> std::result::Result<(), String> {
    match kind {
        LemmaKind::SquareC0 if t.c != 0 => Err("c = 0".into()),
        LemmaKind::ShortD0 if 2 * t.b - t.a - 2 * t.c != 0 => Err("2b - a - 2c = 0".into()),
        _ => Ok(()),
    }
}

fn factor_name(target: Target, (fam, t): Factor) -> String {
    match (target, fam) {
        (Target::Regions, _) => format!("M({fam}{t})"),
        (Target::Formulas, Family::D) => format!("phi{t}"),
        (Target::Formulas, Family::E) => format!("psi{t}"),
    }
}

fn report<V: Clone + std::ops::Mul<Output = V> + std::ops::Add<Output = V> + PartialEq + fmt::Display>(
    lemma: Lemma,
    t: Triple,
    id: &Identity,
    mut value: impl FnMut(Factor) -> Result<V>,
) -> Result<IdentityReport> {
    let mut terms = Vec::new();
    let mut eval = |f: Factor| -> Result<V> {
        let v = value(f)?;
        let name = factor_name(lemma.target, f);
        if !terms.iter().any(|x: &Term| x.name == name) {
            terms.push(Term { name, value: v.to_string() });
        }
        Ok(v)
    };
    let lhs = eval(id.lhs[0])? * eval(id.lhs[1])?;
    let r0 = eval(id.rhs[0][0])? * eval(id.rhs[0][1])?;
    let r1 = eval(id.rhs[1][0])? * eval(id.rhs[1][1])?;
    let pass = lhs == r0.clone() + r1.clone();
    Ok(IdentityReport {
        id: lemma.to_string(),
        params: [t.a, t.b, t.c],
        lhs: lhs.to_string(),
        rhs: vec![r0.to_string(), r1.to_string()],
        pass,
        terms,
    })
}

/// Builds and counts all six regions of the recurrence.
pub fn region_recurrence_check(lemma: Lemma, t: Triple, cache: &CountCache) -> Result<IdentityReport> {
    region_hypothesis(lemma.kind, t).map_err(|m| Error::Hypothesis(format!("{lemma} at {t}: {m}")))?;
    let id = identity(lemma.kind, lemma.family, t);
    let lemma = Lemma { target: Target::Regions, ..lemma };
    report(lemma, t, &id, |(fam, u)| cache.get(fam, u))
}

pub fn formula_value(fam: Family, t: Triple) -> BigRational {
    match fam {
        Family::D => phi(t).value(),
        Family::E => psi(t).value(),
    }
}

pub fn formula_recurrence_check(lemma: Lemma, t: Triple) -> Result<IdentityReport> {
    formula_hypothesis(lemma.kind, t).map_err(|m| Error::Hypothesis(format!("{lemma} at {t}: {m}")))?;
    let id = identity(lemma.kind, lemma.family, t);
    let lemma = Lemma { target: Target::Formulas, ..lemma };
    report(lemma, t, &id, |(fam, u)| Ok(formula_value(fam, u)))
}

/// Triples with perimeter at most `max_perimeter` that satisfy the region
/// hypothesis, by increasing perimeter.
pub fn admissible(kind: LemmaKind, max_perimeter: i64) -> Vec<Triple> {
    let bound = max_perimeter.max(0) / 2;
    let mut out: Vec<(i64, Triple)> = Vec::new();
    for a in 0..=bound {
        for b in 0..=bound {
            for c in 0..=bound {
                let t = Triple::new(a, b, c);
                if region_hypothesis(kind, t).is_err() {
                    continue;
                }
                let p = derive_contour(t).perimeter().expect("valid");
                if p <= max_perimeter {
                    out.push((p, t));
                }
            }
        }
    }
    out.sort();
    out.into_iter().map(|(_, t)| t).collect()
}

/// The admissible triple of least perimeter, ties broken by `(a, b, c)`.
pub fn smallest_admissible(kind: LemmaKind) -> Triple {
    let mut p = 8;
    loop {
        if let Some(&t) = admissible(kind, p).first() {
            return t;
        }
        p += 2;
    }
}

pub fn rational_to_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
