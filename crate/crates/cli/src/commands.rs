use std::fmt::Write;
use std::time::{Duration, Instant};

use dungeon_core::count::Budget;
use dungeon_core::forms::{blum, components, factor_13_14, phi, psi, residue};
use dungeon_core::harness::{enumerate_base_cases, verify_blum, verify_main_theorem, Status};
use dungeon_core::matching::find_matching;
use dungeon_core::random::kuo_instance;
use dungeon_core::render::{render_region, render_tiling};
use dungeon_core::split::split_hd;
use dungeon_core::verify::corners::reduction_check;
use dungeon_core::verify::recurrence::{
    admissible, formula_hypothesis, formula_recurrence_check, rational_to_string, region_hypothesis, Target,
};
use dungeon_core::verify::{kuo_check, region_recurrence_check, symmetry_check, CountCache, IdentityReport, Lemma, Symmetry};
use dungeon_core::{
    build_aztec, build_d, build_e, build_hd, count, derive_contour, CountConfig, Error, Region, RegionKind, Result,
    Triple,
};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::{Cli, Command, FormulaArg, Range, RegionArg, RenderArg};

/// Output text and whether every check passed.
type Outcome = (String, bool);

fn config(cli: &Cli) -> CountConfig {
    CountConfig::from_env().with_method(cli.method)
}

fn per_count(cli: &Cli) -> Option<Duration> {
    cli.per_count_secs.map(Duration::from_secs)
}

fn build(r: &RegionArg) -> Result<Region> {
    match *r {
        RegionArg::Hd { a, b } => build_hd(a, b),
        RegionArg::D { a, b, c } => build_d(Triple::new(a, b, c)),
        RegionArg::E { a, b, c } => build_e(Triple::new(a, b, c)),
        RegionArg::Aztec { n } => build_aztec(n),
        RegionArg::File { ref path } => Region::load(path),
    }
}

/// The closed form predicting the region's count, if its kind has one.
fn prediction(r: &Region) -> Option<(String, BigUint)> {
    let p = &r.params;
    match r.kind {
        RegionKind::HD if p.len() == 2 => blum(p[0]).ok().map(|v| (format!("blum({})", p[0]), v)),
        RegionKind::D | RegionKind::E if p.len() == 3 => {
            let t = Triple::new(p[0], p[1], p[2]);
            if !derive_contour(t).valid {
                return None;
            }
            let (name, v) = if r.kind == RegionKind::D { ("phi", phi(t)) } else { ("psi", psi(t)) };
            v.to_integer().map(|v| (format!("{name}{t}"), v))
        }
        _ => None,
    }
}

fn factored(n: &BigUint) -> String {
    let (rest, g, f) = factor_13_14(n);
    format!("{rest} * 13^{g} * 14^{f}")
}

fn triple(params: &[i64]) -> Result<Triple> {
    match *params {
        [a, b, c] => Ok(Triple::new(a, b, c)),
        _ => Err(Error::Parse(format!("expected three parameters a b c, got {}", params.len()))),
    }
}

fn grid(lo: i64, hi: i64) -> impl Iterator<Item = Triple> {
    (lo..=hi).flat_map(move |a| (lo..=hi).flat_map(move |b| (lo..=hi).map(move |c| Triple::new(a, b, c))))
}

fn json_line(v: serde_json::Value) -> String {
    format!("{v}\n")
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Count { region } => run_count(cli, region),
        Command::Formula { formula } => run_formula(cli, formula),
        Command::VerifyBlum { a, b } => run_blum(cli, *a, *b),
        Command::VerifyMain { max_perimeter } => run_main(cli, *max_perimeter),
        Command::VerifyRecurrence { id, range, corners } => run_recurrence(cli, id, range, *corners),
        Command::VerifySymmetry { name, range, regions } => run_symmetry(cli, name, range, *regions),
        Command::VerifyKuo { random, max_vertices, seed } => run_kuo(cli, *random, *max_vertices, *seed),
        Command::Bases { list } => run_bases(cli, *list),
        Command::Render { what, output } => run_render(what, output.as_deref()),
        Command::SplitHd { a, b } => run_split(cli, *a, *b),
    }
}

fn run_count(cli: &Cli, arg: &RegionArg) -> Result<Outcome> {
    let region = build(arg)?;
    let g = region.dual()?;
    let mut cfg = config(cli);
    cfg.budget = Budget(per_count(cli).map(|d| Instant::now() + d));
    let n = count(&g, &cfg)?;
    let pred = prediction(&region);
    let agrees = pred.as_ref().map(|(_, v)| *v == n);
    let mut out = String::new();
    if cli.json {
        out = json_line(json!({
            "region": region.name(),
            "cells": region.len(),
            "count": n.to_string(),
            "factored": (n != BigUint::ZERO).then(|| factored(&n)),
            "formula": pred.as_ref().map(|(name, _)| name),
            "expected": pred.as_ref().map(|(_, v)| v.to_string()),
            "agrees": agrees,
        }));
    } else {
        writeln!(out, "{n}").unwrap();
        if n != BigUint::ZERO {
            writeln!(out, "factored {}", factored(&n)).unwrap();
        }
        if let Some((name, v)) = &pred {
            let verdict = if *v == n { "agrees" } else { "DISAGREES" };
            writeln!(out, "{name} = {v} {verdict}").unwrap();
        }
    }
    Ok((out, agrees != Some(false)))
}

fn run_formula(cli: &Cli, f: &FormulaArg) -> Result<Outcome> {
    let out = match *f {
        FormulaArg::Phi { a, b, c } | FormulaArg::Psi { a, b, c } => {
            let t = Triple::new(a, b, c);
            let (name, v) = if matches!(f, FormulaArg::Phi { .. }) { ("phi", phi(t)) } else { ("psi", psi(t)) };
            let value = rational_to_string(&v.value());
            if cli.json {
                json_line(json!({
                    "formula": format!("{name}{t}"),
                    "coefficient": v.coeff,
                    "exp13": v.exp13,
                    "exp14": v.exp14,
                    "value": value,
                }))
            } else {
                format!("{v} = {value}\n")
            }
        }
        FormulaArg::Blum { a } => {
            let v = blum(a)?;
            if cli.json {
                json_line(json!({ "formula": format!("blum({a})"), "factored": factored(&v), "value": v.to_string() }))
            } else {
                format!("{} = {v}\n", factored(&v))
            }
        }
        FormulaArg::Components { a, b, c } => {
            let t = Triple::new(a, b, c);
            let k = components(t);
            let r = residue(t);
            if cli.json {
                json_line(json!({ "params": t, "g": k.g, "f": k.f, "h": k.h, "p": k.p, "residue": r }))
            } else {
                format!("g = {}\nf = {}\nh = {}\np = {}\nresidue (3b+a-c) mod 6 = {r}\n", k.g, k.f, k.h, k.p)
            }
        }
    };
    Ok((out, true))
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn run_blum(cli: &Cli, a: i64, b: i64) -> Result<Outcome> {
    let r = verify_blum(a, b, &config(cli), per_count(cli))?;
    let ok = r.all_pass();
    if cli.json {
        return Ok((json_line(serde_json::to_value(&r).expect("report serializes")), ok));
    }
    let mut out = String::new();
    writeln!(out, "HD_{{{a},{b}}}: blum({a}) = {}", r.expected).unwrap();
    match (&r.direct, r.direct_ok) {
        (Some(d), Some(k)) => writeln!(out, "  whole graph        {d} {}", mark(k)).unwrap(),
        _ => writeln!(out, "  whole graph        skipped ({})", r.direct_note.as_deref().unwrap_or("budget")).unwrap(),
    }
    writeln!(out, "  west * middle * east = {} * {} * {} {}", r.west, r.middle, r.east, mark(r.split_ok)).unwrap();
    writeln!(out, "  cuts hold          {}", r.cuts_hold).unwrap();
    writeln!(out, "  middle is forced   {}", r.middle_reduces_to_nothing).unwrap();
    writeln!(out, "  ends isomorphic    {}", r.ends_isomorphic).unwrap();
    writeln!(out, "  end = phi({},{},{}) = {} {}", 2 * a, 3 * a, 2 * a, r.half, mark(r.half_ok)).unwrap();
    writeln!(out, "{}", if ok { "PASS" } else { "FAIL" }).unwrap();
    Ok((out, ok))
}

fn status_word(s: &Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skip",
    }
}

fn run_main(cli: &Cli, max_perimeter: i64) -> Result<Outcome> {
    let r = verify_main_theorem(max_perimeter, &config(cli), per_count(cli))?;
    let ok = r.all_pass();
    if cli.json {
        return Ok((format!("{}\n", r.to_json()), ok));
    }
    let mut out = String::new();
    for t in &r.triples {
        let shape = if t.tall { "tall" } else { "short" };
        let show = |v: &Option<String>| v.clone().unwrap_or_else(|| "-".into());
        writeln!(
            out,
            "{} {} P={} {shape}: D = {} (phi {}), E = {} (psi {})",
            status_word(&t.status),
            t.params,
            t.perimeter,
            show(&t.count_d),
            t.phi,
            show(&t.count_e),
            t.psi
        )
        .unwrap();
    }
    writeln!(out, "{} triples: {} passed, {} failed, {} skipped", r.triples.len(), r.passed, r.failed, r.skipped).unwrap();
    Ok((out, ok))
}

/// Triples selected by a range: a single triple, a cube filtered by `keep`,
/// or the triples admitted by `by_perimeter`.
fn select(
    range: &Range,
    keep: impl Fn(Triple) -> bool,
    by_perimeter: Option<&dyn Fn(i64) -> Vec<Triple>>,
) -> Result<(Vec<Triple>, bool)> {
    match (&range.grid, range.max_perimeter) {
        (Some(g), None) if range.params.is_empty() => Ok((grid(g[0], g[1]).filter(|&t| keep(t)).collect(), true)),
        (None, Some(p)) if range.params.is_empty() => match by_perimeter {
            Some(f) => Ok((f(p), true)),
            None => Err(Error::Unsupported("--max-perimeter applies to region identities only".into())),
        },
        (None, None) => Ok((vec![triple(&range.params)?], false)),
        _ => Err(Error::Parse("give either a b c, --grid LO HI, or --max-perimeter N".into())),
    }
}

fn summarize(cli: &Cli, id: &str, reports: &[IdentityReport], many: bool) -> Outcome {
    let failed: Vec<&IdentityReport> = reports.iter().filter(|r| !r.pass).collect();
    let ok = failed.is_empty();
    let mut out = String::new();
    if cli.json {
        if many {
            out = json_line(json!({
                "id": id,
                "checked": reports.len(),
                "failed": failed.len(),
                "failures": failed,
            }));
        } else {
            for r in reports {
                out.push_str(&r.to_json_line());
                out.push('\n');
            }
        }
        return (out, ok);
    }
    if many {
        for r in &failed {
            writeln!(out, "{r}").unwrap();
        }
        writeln!(out, "{id}: {} checked, {} failed", reports.len(), failed.len()).unwrap();
    } else {
        for r in reports {
            writeln!(out, "{r}").unwrap();
            for t in &r.terms {
                writeln!(out, "  {} = {}", t.name, t.value).unwrap();
            }
        }
    }
    (out, ok)
}

fn run_recurrence(cli: &Cli, id: &str, range: &Range, corners: bool) -> Result<Outcome> {
    let lemma: Lemma = id.parse()?;
    let kind = lemma.kind;
    let regions = lemma.target == Target::Regions;
    let (ts, many) = if regions {
        let by_p = move |p: i64| admissible(kind, p);
        select(range, |t| region_hypothesis(kind, t).is_ok(), Some(&by_p))?
    } else {
        select(range, |t| formula_hypothesis(kind, t).is_ok(), None)?
    };
    let cache = CountCache::new(config(cli));
    let reports: Vec<IdentityReport> = ts
        .iter()
        .map(|&t| if regions { region_recurrence_check(lemma, t, &cache) } else { formula_recurrence_check(lemma, t) })
        .collect::<Result<_>>()?;
    let (mut out, mut ok) = summarize(cli, id, &reports, many);
    if corners && regions {
        for &t in &ts {
            let r = reduction_check(lemma, t, &cache)?;
            ok &= r.status != Status::Fail;
            if cli.json {
                out.push_str(&r.to_json_line());
                out.push('\n');
                continue;
            }
            writeln!(out, "corners {} {}: {}", r.id, t, status_word(&r.status)).unwrap();
            if let Some(note) = &r.note {
                writeln!(out, "  {note}").unwrap();
            }
            for m in &r.removals {
                writeln!(
                    out,
                    "  G-{} ~ {}: count {} {}, isomorphic after forced edges {}",
                    m.removed,
                    m.region,
                    m.count,
                    mark(m.counts_agree),
                    m.isomorphic
                )
                .unwrap();
            }
        }
    }
    Ok((out, ok))
}

fn run_symmetry(cli: &Cli, name: &str, range: &Range, regions: bool) -> Result<Outcome> {
    let kind: Symmetry = name.parse()?;
    let keep = |t: Triple| kind != Symmetry::Transpose || 2 * t.b - t.a - 2 * t.c == 0;
    let (ts, many) = select(range, keep, None)?;
    let cache = regions.then(|| CountCache::new(config(cli)));
    let mut reports = Vec::new();
    for t in ts {
        reports.extend(symmetry_check(kind, t, cache.as_ref())?);
    }
    Ok(summarize(cli, name, &reports, many))
}

fn run_kuo(cli: &Cli, n: usize, max_vertices: usize, seed: u64) -> Result<Outcome> {
    if max_vertices < 4 {
        return Err(Error::Parse("--max-vertices must be at least 4".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = config(cli);
    let mut reports = Vec::with_capacity(n);
    for _ in 0..n {
        let (g, q) = kuo_instance(&mut rng, max_vertices);
        reports.push(kuo_check(&g, q, &cfg)?);
    }
    let (out, ok) = summarize(cli, "kuo", &reports, true);
    Ok((out, ok))
}

fn run_bases(cli: &Cli, list: bool) -> Result<Outcome> {
    let b = enumerate_base_cases();
    let union = b.union();
    if cli.json {
        let v = json!({
            "small_perimeter": b.small_perimeter.len(),
            "small_perimeter_tall": b.tall_count(),
            "narrow": b.narrow.len(),
            "thin_corner": b.thin_corner.len(),
            "distinct": union.len(),
            "lists": list.then_some(&b),
        });
        return Ok((json_line(v), true));
    }
    let mut out = String::new();
    let tall = b.tall_count();
    writeln!(out, "perimeter <= 14: {} ({tall} tall, {} short)", b.small_perimeter.len(), b.small_perimeter.len() - tall)
        .unwrap();
    writeln!(out, "b <= 4: {}", b.narrow.len()).unwrap();
    writeln!(out, "c + d <= 2: {}", b.thin_corner.len()).unwrap();
    writeln!(out, "distinct: {}", union.len()).unwrap();
    if list {
        for t in union {
            let p = derive_contour(t);
            let tags: Vec<&str> = [(&b.small_perimeter, "P<=14"), (&b.narrow, "b<=4"), (&b.thin_corner, "c+d<=2")]
                .iter()
                .filter(|(l, _)| l.contains(&t))
                .map(|(_, s)| *s)
                .collect();
            writeln!(out, "{t} P={} {}", p.perimeter()?, tags.join(" ")).unwrap();
        }
    }
    Ok((out, true))
}

fn run_render(what: &RenderArg, output: Option<&std::path::Path>) -> Result<Outcome> {
    let svg = match what {
        RenderArg::Region { region } => render_region(&build(region)?),
        RenderArg::Tiling { region } => {
            let r = build(region)?;
            let m = find_matching(&r.dual()?).ok_or_else(|| Error::BadMatching(format!("{} has no tiling", r.name())))?;
            render_tiling(&r, &m)?
        }
    };
    match output {
        Some(path) => {
            std::fs::write(path, &svg)?;
            Ok((format!("wrote {}\n", path.display()), true))
        }
        None => Ok((svg, true)),
    }
}

fn run_split(cli: &Cli, a: i64, b: i64) -> Result<Outcome> {
    let g = build_hd(a, b)?.dual()?;
    let s = split_hd(&g, a, b)?;
    let cfg = config(cli);
    let (m1, m2, m3) = (count(&s.g1, &cfg)?, count(&s.g2, &cfg)?, count(&s.g3, &cfg)?);
    let iso = dungeon_core::iso::plane_isomorphic(&s.g1, &s.g3);
    let ok = s.first_cut.holds() && s.second_cut.holds() && m2 == BigUint::from(1u32) && iso;
    let sealed = |c: &dungeon_core::split::CutReport| c.sealed.map_or("none".to_string(), |c| c.to_string());
    if cli.json {
        let v = json!({
            "a": a, "b": b, "vertices": g.len(),
            "west": { "vertices": s.west.len(), "count": m1.to_string() },
            "middle": { "vertices": s.middle.len(), "count": m2.to_string() },
            "east": { "vertices": s.east.len(), "count": m3.to_string() },
            "first_cut": { "sealed": sealed(&s.first_cut), "balanced": s.first_cut.balanced },
            "second_cut": { "sealed": sealed(&s.second_cut), "balanced": s.second_cut.balanced },
            "ends_isomorphic": iso,
            "product": (&m1 * &m2 * &m3).to_string(),
        });
        return Ok((json_line(v), ok));
    }
    let mut out = String::new();
    writeln!(out, "HD_{{{a},{b}}}: {} vertices", g.len()).unwrap();
    writeln!(out, "  west   {} vertices, {} matchings", s.west.len(), m1).unwrap();
    writeln!(out, "  middle {} vertices, {} matchings", s.middle.len(), m2).unwrap();
    writeln!(out, "  east   {} vertices, {} matchings", s.east.len(), m3).unwrap();
    writeln!(out, "  first cut: {} side sealed, balanced {}", sealed(&s.first_cut), s.first_cut.balanced).unwrap();
    writeln!(out, "  second cut: {} side sealed, balanced {}", sealed(&s.second_cut), s.second_cut.balanced).unwrap();
    writeln!(out, "  ends isomorphic {iso}").unwrap();
    writeln!(out, "  product {}", &m1 * &m2 * &m3).unwrap();
    Ok((out, ok))
}
