//! Closed forms `h * 13^g * 14^f` and `p * 13^g * 14^f`, and the hexagon
//! product `13^(2a^2) * 14^floor(a^2 / 2)`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::contour::Triple;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Components {
    pub g: i64,
    pub f: i64,
    pub h: u8,
    pub p: u8,
}

/// `coeff * 13^exp13 * 14^exp14`, exact for negative exponents too.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormulaValue {
    pub coeff: u8,
    pub exp13: i64,
    pub exp14: i64,
}

pub fn residue(t: Triple) -> i64 {
    (3 * t.b + t.a - t.c).rem_euclid(6)
}

pub fn components(t: Triple) -> Components {
    let Triple { a, b, c } = t;
    let g = (b - a) * (b - c) + (a - c).pow(2).div_euclid(3);
    let f = (a - b + c).pow(2).div_euclid(4);
    let h = match residue(t) {
        4 => 2,
        1 => 3,
        5 => 5,
        _ => 1,
    };
    let p = match residue(t) {
        2 => 2,
        5 => 3,
        1 => 5,
        _ => 1,
    };
    Components { g, f, h, p }
}

pub fn phi(t: Triple) -> FormulaValue {
    let c = components(t);
    FormulaValue { coeff: c.h, exp13: c.g, exp14: c.f }
}

pub fn psi(t: Triple) -> FormulaValue {
    let c = components(t);
    FormulaValue { coeff: c.p, exp13: c.g, exp14: c.f }
}

fn power(base: u32, e: i64) -> BigRational {
    let n = BigInt::from(base).pow(e.unsigned_abs());
    if e >= 0 {
        BigRational::from_integer(n)
    } else {
        BigRational::new(BigInt::one(), n)
    }
}

impl FormulaValue {
    pub fn value(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.coeff)) * power(13, self.exp13) * power(14, self.exp14)
    }

    /// The value as a natural number, if both exponents are nonnegative.
    pub fn to_integer(&self) -> Option<BigUint> {
        if self.exp13 < 0 || self.exp14 < 0 {
            return None;
        }
        Some(BigUint::from(self.coeff) * BigUint::from(13u32).pow(self.exp13 as u64) * BigUint::from(14u32).pow(self.exp14 as u64))
    }
}

impl fmt::Display for FormulaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * 13^{} * 14^{}", self.coeff, self.exp13, self.exp14)
    }
}

pub fn blum(a: i64) -> Result<BigUint> {
    if a < 1 {
        return Err(Error::InvalidBlumOrder(a));
    }
    let a2 = (a * a) as u64;
    Ok(BigUint::from(13u32).pow(2 * a2) * BigUint::from(14u32).pow(a2 / 2))
}

/// Writes `n` as `13^i * 14^j * rest` with `rest` coprime to 13 and 14.
pub fn factor_13_14(n: &BigUint) -> (BigUint, u64, u64) {
    let mut rest = n.clone();
    let mut e = [0u64; 2];
    if rest == BigUint::ZERO {
        return (rest, 0, 0);
    }
    for (k, q) in [13u32, 14].into_iter().enumerate() {
        let q = BigUint::from(q);
        while (&rest % &q) == BigUint::ZERO {
            rest /= &q;
            e[k] += 1;
        }
    }
    (rest, e[0], e[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(a: i64, b: i64, c: i64) -> Triple {
        Triple::new(a, b, c)
    }

    fn f(a: i64, b: i64, c: i64) -> i64 {
        components(t(a, b, c)).f
    }

    fn g(a: i64, b: i64, c: i64) -> i64 {
        components(t(a, b, c)).g
    }

    // floor of x / y computed through f64, compared on small inputs
    fn float_floor(x: i64, y: i64) -> i64 {
        (x as f64 / y as f64).floor() as i64
    }

    #[test]
    fn component_examples() {
        assert_eq!(components(t(2, 3, 2)), Components { g: 1, f: 0, h: 1, p: 1 });
        assert_eq!(components(t(2, 2, 0)), Components { g: 1, f: 0, h: 1, p: 2 });
        assert_eq!(components(t(1, 1, 0)).h, 2);
        assert_eq!(phi(t(2, 3, 2)).to_integer().unwrap(), BigUint::from(13u32));
        assert_eq!(psi(t(2, 2, 0)).to_integer().unwrap(), BigUint::from(26u32));
        assert_eq!(phi(t(0, 0, 0)).to_integer().unwrap(), BigUint::one());
        assert_eq!(phi(t(2, 3, 2)).to_string(), "1 * 13^1 * 14^0");
    }

    #[test]
    fn negative_exponents_are_exact() {
        let v = FormulaValue { coeff: 3, exp13: -2, exp14: 1 };
        assert_eq!(v.value(), BigRational::new(BigInt::from(42), BigInt::from(169)));
        assert!(v.to_integer().is_none());
    }

    #[test]
    fn hexagon_product() {
        assert_eq!(blum(1).unwrap(), BigUint::from(169u32));
        assert_eq!(blum(2).unwrap(), BigUint::from(13u32).pow(8u32) * BigUint::from(196u32));
        assert!(blum(0).is_err());
        for a in 1..=6 {
            let half = phi(t(2 * a, 3 * a, 2 * a)).to_integer().unwrap();
            assert_eq!(&half * &half, blum(a).unwrap());
        }
    }

    #[test]
    fn factoring() {
        let n = BigUint::from(13u32).pow(5u32) * BigUint::from(14u32).pow(2u32) * BigUint::from(5u32);
        assert_eq!(factor_13_14(&n), (BigUint::from(5u32), 5, 2));
    }

    #[test]
    fn floors_agree_with_float_division() {
        for x in -200i64..200 {
            assert_eq!(x.div_euclid(3), float_floor(x, 3));
            assert_eq!(x.div_euclid(4), float_floor(x, 4));
        }
    }

    #[test]
    fn exponent_facts_of_the_first_recurrence() {
        let r = -8..=8;
        for a in r.clone() {
            for b in r.clone() {
                for c in r.clone() {
                    let s1 = f(a, b, c) + f(a - 3, b - 3, c - 2);
                    let s2 = f(a - 2, b - 1, c) + f(a - 1, b - 2, c - 2);
                    let s3 = f(a - 1, b - 1, c - 1) + f(a - 2, b - 2, c - 1);
                    let m = a - b + c;
                    if m.rem_euclid(2) == 0 {
                        let k = m / 2;
                        assert_eq!((s1, s2 + 1, s3 + 1), (2 * k * k - 2 * k + 1, s1, s1));
                    } else {
                        let k = (m - 1) / 2;
                        assert_eq!((s1, s2, s3), (2 * k * k, 2 * k * k, 2 * k * k));
                    }
                    let u1 = g(a, b, c) + g(a - 3, b - 3, c - 2);
                    let u2 = g(a - 2, b - 1, c) + g(a - 1, b - 2, c - 2);
                    let u3 = g(a - 1, b - 1, c - 1) + g(a - 2, b - 2, c - 1);
                    if (a - c).rem_euclid(3) == 2 {
                        assert_eq!((u1 + 1, u1 + 1), (u2, u3 + 1));
                    } else {
                        assert_eq!((u1, u1), (u2, u3));
                    }
                }
            }
        }
    }

    #[test]
    fn exponent_facts_of_the_second_recurrence() {
        let r = -8..=8;
        for a in r.clone() {
            for b in r.clone() {
                for c in r.clone() {
                    let s1 = f(a, b, c) + f(a - 2, b - 2, c);
                    let s2 = 2 * f(a - 1, b - 1, c);
                    let s3 = f(a, b, c + 1) + f(a - 2, b - 2, c - 1);
                    let m = a - b + c;
                    if m.rem_euclid(2) == 0 {
                        let k = m / 2;
                        assert_eq!((s1, s2, s3), (2 * k * k, 2 * k * k, 2 * k * k));
                    } else {
                        let k = (m - 1) / 2;
                        let v = 2 * k * k + 2 * k + 1;
                        assert_eq!((s1 + 1, s2 + 1, s3), (v, v, v));
                    }
                    let u1 = g(a, b, c) + g(a - 2, b - 2, c);
                    let u2 = 2 * g(a - 1, b - 1, c);
                    let u3 = g(a, b, c + 1) + g(a - 2, b - 2, c - 1);
                    if (a - c).rem_euclid(3) == 1 {
                        assert_eq!((u1, u1), (u2, u3));
                    } else {
                        assert_eq!((u1, u1), (u2 + 1, u3 + 1));
                    }
                }
            }
        }
    }

    #[test]
    fn exponent_facts_of_the_third_recurrence() {
        let r = -8..=8;
        for a in r.clone() {
            for b in r.clone() {
                for c in r.clone() {
                    let s1 = f(a, b, c) + f(a - 2, b - 3, c - 2);
                    let s2 = f(a - 1, b - 1, c) + f(a - 1, b - 2, c - 2);
                    let s3 = f(a - 2, b - 2, c - 1) + f(a, b - 1, c - 1);
                    assert_eq!((s1, s1), (s2, s3));
                    let u1 = g(a, b, c) + g(a - 2, b - 3, c - 2);
                    let u2 = g(a - 1, b - 1, c) + g(a - 1, b - 2, c - 2);
                    let u3 = g(a - 2, b - 2, c - 1) + g(a, b - 1, c - 1);
                    if (a - c).rem_euclid(3) == 0 {
                        assert_eq!((u1, u1), (u2 + 1, u3 + 1));
                    } else {
                        assert_eq!((u1, u1), (u2, u3));
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn coefficients_depend_only_on_residue(a in -50i64..50, b in -50i64..50, c in -50i64..50, k in -5i64..5) {
            let x = components(t(a, b, c));
            prop_assert!([1, 2, 3, 5].contains(&x.h) && [1, 2, 3, 5].contains(&x.p));
            let y = components(t(a + 6 * k, b, c));
            prop_assert_eq!((x.h, x.p), (y.h, y.p));
        }

        #[test]
        fn residue_transfer(a in -30i64..30, b in -30i64..30, c in -30i64..30, a2 in -30i64..30, b2 in -30i64..30) {
            // pick c2 so the two residues cancel
            let r = 3 * b + a - c + 3 * b2 + a2;
            let c2 = r;
            prop_assert_eq!(components(t(a, b, c)).h, components(t(a2, b2, c2)).p);
        }
    }
}
