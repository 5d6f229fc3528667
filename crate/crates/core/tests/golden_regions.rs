//! Every base-case region, D and E, against its stored cell list. Set
//! `UPDATE_GOLDEN=1` to rewrite the files.

use std::path::PathBuf;

use dungeon_core::harness::enumerate_base_cases;
use dungeon_core::{build_d, build_e, build_hd, Region};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/regions")
}

fn check(name: String, region: Region) {
    let path = data_dir().join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(data_dir()).unwrap();
        region.save(&path).unwrap();
        return;
    }
    let stored = Region::load(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(stored, region, "{name} differs from {}", path.display());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), region.to_json(), "{name} is not in canonical form");
}

#[test]
fn base_case_regions_match_stored_cells() {
    let bases = enumerate_base_cases().union();
    assert_eq!(bases.len(), 44);
    for t in bases {
        check(format!("D_{}_{}_{}", t.a, t.b, t.c), build_d(t).unwrap());
        check(format!("E_{}_{}_{}", t.a, t.b, t.c), build_e(t).unwrap());
    }
}

#[test]
fn small_hexagons_match_stored_cells() {
    for (a, b) in [(1, 2), (1, 3), (2, 4)] {
        check(format!("HD_{a}_{b}"), build_hd(a, b).unwrap());
    }
}

#[test]
fn stored_files_round_trip() {
    let r = Region::load(&data_dir().join("HD_1_2.json")).unwrap();
    assert_eq!(r.len(), 86);
    assert_eq!(Region::from_json(&r.to_json()).unwrap(), r);
}
