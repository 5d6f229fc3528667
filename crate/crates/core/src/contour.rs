//! Contour arithmetic for the six-sided regions.
//!
//! Starting from the western corner the contour runs `a` units southwest,
//! `b` southeast, `c` north, `d` northeast, `e` northwest and finally `f`
//! units north (when `a > c + d`) or south (otherwise) back to the start.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Direction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Triple {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        Triple { a, b, c }
    }

    pub fn shifted(self, da: i64, db: i64, dc: i64) -> Self {
        Triple::new(self.a + da, self.b + db, self.c + dc)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

impl From<(i64, i64, i64)> for Triple {
    fn from((a, b, c): (i64, i64, i64)) -> Self {
        Triple::new(a, b, c)
    }
}

/// One of the six straight sides of the contour, in traversal order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
    C,
    D,
    E,
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContourParams {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
    pub tall: bool,
    pub valid: bool,
}

pub fn derive_contour(t: Triple) -> ContourParams {
    let Triple { a, b, c } = t;
    let d = 2 * b - a - 2 * c;
    let e = b + d - a;
    let f = (c + d - a).abs();
    ContourParams {
        a,
        b,
        c,
        d,
        e,
        f,
        tall: a > c + d,
        valid: a >= 0 && b >= 2 && c >= 0 && d >= 0 && e >= 0,
    }
}

impl ContourParams {
    pub fn triple(&self) -> Triple {
        Triple::new(self.a, self.b, self.c)
    }

    pub fn require_valid(&self) -> Result<()> {
        let t = self.triple();
        if self.a < 0 {
            Err(Error::InvalidParams(t, "a must be nonnegative"))
        } else if self.b < 2 {
            Err(Error::InvalidParams(t, "b must be at least 2"))
        } else if self.c < 0 {
            Err(Error::InvalidParams(t, "c must be nonnegative"))
        } else if self.d < 0 {
            Err(Error::InvalidParams(t, "d = 2b-a-2c is negative"))
        } else if self.e < 0 {
            Err(Error::InvalidParams(t, "e = 3b-2a-2c is negative"))
        } else {
            Ok(())
        }
    }

    /// Total side length.
    pub fn perimeter(&self) -> Result<i64> {
        self.require_valid()?;
        Ok(if self.tall {
            4 * self.b - 2 * self.c
        } else {
            8 * self.b - 4 * self.a - 4 * self.c
        })
    }

    pub fn sides(&self) -> [(Side, Direction, i64); 6] {
        [
            (Side::A, Direction::SW, self.a),
            (Side::B, Direction::SE, self.b),
            (Side::C, Direction::N, self.c),
            (Side::D, Direction::NE, self.d),
            (Side::E, Direction::NW, self.e),
            (Side::F, if self.tall { Direction::N } else { Direction::S }, self.f),
        ]
    }

    /// `(a + c + d [+ f]) - (b + e [+ f])`, the side-length form of the
    /// color balance of the region. Zero for every derived contour.
    pub fn balance_defect(&self) -> i64 {
        if self.tall {
            self.a + self.c + self.d - self.b - self.e - self.f
        } else {
            self.a + self.c + self.d + self.f - self.b - self.e
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn trapezoid_example() {
        let p = derive_contour(Triple::new(4, 6, 4));
        assert_eq!((p.d, p.e, p.f, p.tall, p.valid), (0, 2, 0, false, true));
        assert_eq!(p.perimeter().unwrap(), 16);
    }

    #[test]
    fn small_examples() {
        let p = derive_contour(Triple::new(0, 2, 0));
        assert_eq!((p.d, p.e, p.f, p.tall, p.valid), (4, 6, 4, false, true));
        let q = derive_contour(Triple::new(8, 2, 0));
        assert_eq!(q.d, -4);
        assert!(!q.valid);
        assert!(q.perimeter().is_err());
        assert_eq!(derive_contour(Triple::new(2, 3, 2)).perimeter().unwrap(), 8);
        let t = derive_contour(Triple::new(8, 8, 2));
        assert!(t.tall);
        assert_eq!(t.perimeter().unwrap(), 28);
    }

    #[test]
    fn contour_closes() {
        for a in 0..8 {
            for b in 2..8 {
                for c in 0..8 {
                    let p = derive_contour(Triple::new(a, b, c));
                    if !p.valid {
                        continue;
                    }
                    let (mut i, mut j) = (0, 0);
                    for (_, dir, n) in p.sides() {
                        let (di, dj) = dir.vector();
                        i += di * n;
                        j += dj * n;
                    }
                    assert_eq!((i, j), (0, 0), "({a},{b},{c})");
                    assert_eq!(p.balance_defect(), 0);
                    let total: i64 = p.sides().iter().map(|s| s.2).sum();
                    assert_eq!(total, p.perimeter().unwrap());
                }
            }
        }
    }

    proptest! {
        #[test]
        fn side_relations(a in 0i64..40, b in 2i64..40, c in 0i64..40) {
            let p = derive_contour(Triple::new(a, b, c));
            prop_assert_eq!(p.a + p.e, p.b + p.d);
            if p.valid {
                let per = p.perimeter().unwrap();
                prop_assert_eq!(per % 2, 0);
                prop_assert!(per >= 2 * a.max(b).max(c));
            }
        }
    }
}
