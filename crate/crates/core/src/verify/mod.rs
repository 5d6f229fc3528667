//! Instance checkers for the identities relating region counts and closed
//! forms.

pub mod corners;
pub mod kuo;
pub mod recurrence;
pub mod symmetry;

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigUint;
use serde::Serialize;

use crate::contour::Triple;
use crate::count::{count, CountConfig};
use crate::error::Result;
use crate::region::{build_d, build_e, Region};

pub use kuo::kuo_check;
pub use recurrence::{formula_recurrence_check, region_recurrence_check, Lemma, LemmaKind};
pub use symmetry::{symmetry_check, Symmetry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    D,
    E,
}

impl Family {
    pub fn other(self) -> Family {
        match self {
            Family::D => Family::E,
            Family::E => Family::D,
        }
    }

    pub fn build(self, t: Triple) -> Result<Region> {
        match self {
            Family::D => build_d(t),
            Family::E => build_e(t),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::D => "D",
            Family::E => "E",
        })
    }
}

/// One factor of an identity with its value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub params: [i64; 3],
    pub lhs: String,
    pub rhs: Vec<String>,
    pub pass: bool,
    pub terms: Vec<Term>,
}

impl IdentityReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Self { id, params: [a, b, c], lhs, rhs, pass, .. } = self;
        let verdict = if *pass { "pass" } else { "FAIL" };
        write!(f, "{id} ({a},{b},{c}): {lhs} = {} {verdict}", rhs.join(" + "))
    }
}

/// Region counts shared between checks.
#[derive(Debug, Default)]
pub struct CountCache {
    cfg: CountConfig,
    memo: Mutex<HashMap<(Family, Triple), BigUint>>,
}

impl CountCache {
    pub fn new(cfg: CountConfig) -> CountCache {
        CountCache { cfg, memo: Mutex::new(HashMap::new()) }
    }

    pub fn get(&self, family: Family, t: Triple) -> Result<BigUint> {
        if let Some(v) = self.memo.lock().unwrap().get(&(family, t)) {
            return Ok(v.clone());
        }
        let g = family.build(t)?.dual()?;
        let v = count(&g, &self.cfg)?;
        self.memo.lock().unwrap().insert((family, t), v.clone());
        Ok(v)
    }

    pub fn config(&self) -> &CountConfig {
        &self.cfg
    }

    pub fn len(&self) -> usize {
        self.memo.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
