//! Exact integer determinants.

use std::time::Instant;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Square integer matrix with skew-symmetric entries in `{-1, 0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix {
    n: usize,
    data: Vec<i8>,
}

impl SkewMatrix {
    pub fn zeros(n: usize) -> SkewMatrix {
        SkewMatrix { n, data: vec![0; n * n] }
    }

    pub fn from_rows(rows: &[Vec<i8>]) -> Result<SkewMatrix> {
        let n = rows.len();
        let mut m = SkewMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse("matrix is not square".into()));
            }
            for (j, &x) in row.iter().enumerate() {
                if !(-1..=1).contains(&x) || rows[j][i] != -x {
                    return Err(Error::Parse(format!("entry ({i},{j}) breaks skew symmetry")));
                }
                m.data[i * n + j] = x;
            }
        }
        Ok(m)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.data[i * self.n + j]
    }

    /// Sets `(i, j)` to `x` and `(j, i)` to `-x`.
    pub fn set(&mut self, i: usize, j: usize, x: i8) {
        assert!(i != j && (-1..=1).contains(&x));
        self.data[i * self.n + j] = x;
        self.data[j * self.n + i] = -x;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) as i64).collect())
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DetMethod {
    /// Fraction-free elimination below [`AUTO_BAREISS_LIMIT`], residues above.
    #[default]
    Auto,
    Bareiss,
    Modular,
}

pub const AUTO_BAREISS_LIMIT: usize = 128;

/// Cooperative wall-clock limit.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget(pub Option<Instant>);

impl Budget {
    pub fn check(&self) -> Result<()> {
        match self.0 {
            Some(t) if Instant::now() > t => Err(Error::Budget),
            _ => Ok(()),
        }
    }
}

pub fn det_exact(m: &SkewMatrix, method: DetMethod, budget: Budget) -> Result<BigInt> {
    let rows = m.rows();
    match method {
        DetMethod::Bareiss => bareiss(&rows, budget),
        DetMethod::Modular => det_modular(&rows, budget),
        DetMethod::Auto if m.len() <= AUTO_BAREISS_LIMIT => bareiss(&rows, budget),
        DetMethod::Auto => det_modular(&rows, budget),
    }
}

/// Bareiss fraction-free Gaussian elimination with row pivoting.
pub fn bareiss(rows: &[Vec<i64>], budget: Budget) -> Result<BigInt> {
    let n = rows.len();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        budget.check()?;
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        bottom.par_iter_mut().for_each(|row| {
            let factor = row[k].clone();
            for j in k + 1..n {
                let v = &row[j] * pivot - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        });
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Determinant by elimination modulo enough 62-bit primes to exceed twice
/// the Hadamard bound, recombined with the Chinese remainder theorem.
pub fn det_modular(rows: &[Vec<i64>], budget: Budget) -> Result<BigInt> {
    let n = rows.len();
    if n == 0 {
        return Ok(BigInt::one());
    }
    // product of squared row norms bounds det^2
    let mut bound_sq = BigUint::one();
    for r in rows {
        let s: u128 = r.iter().map(|&x| (x as i128 * x as i128) as u128).sum();
        if s == 0 {
            return Ok(BigInt::zero());
        }
        bound_sq *= BigUint::from(s);
    }
    let need = bound_sq * 4u32;
    let mut primes = Vec::new();
    let mut modulus_sq = BigUint::one();
    let mut candidate = (1u64 << 62) - 1;
    while modulus_sq <= need {
        if is_prime(candidate) {
            primes.push(candidate);
            modulus_sq *= BigUint::from(candidate) * BigUint::from(candidate);
        }
        candidate -= 2;
    }
    let residues: Vec<u64> = primes
        .par_iter()
        .map(|&p| det_mod_prime(rows, p, budget))
        .collect::<Result<_>>()?;
    let mut acc = BigUint::zero();
    let mut modulus = BigUint::one();
    for (&r, &p) in residues.iter().zip(&primes) {
        // acc + modulus * t = r (mod p)
        let acc_mod = (&acc % p).to_u64_digits().first().copied().unwrap_or(0);
        let m_mod = (&modulus % p).to_u64_digits().first().copied().unwrap_or(0);
        let diff = (r + p - acc_mod) % p;
        let t = mul_mod(diff, inv_mod(m_mod, p), p);
        acc += &modulus * t;
        modulus *= p;
    }
    let half = &modulus >> 1;
    Ok(if acc > half {
        BigInt::from_biguint(Sign::Minus, modulus - acc)
    } else {
        BigInt::from_biguint(Sign::Plus, acc)
    })
}

fn det_mod_prime(rows: &[Vec<i64>], p: u64, budget: Budget) -> Result<u64> {
    let n = rows.len();
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mut det = 1u64;
    for k in 0..n {
        if k % 32 == 0 {
            budget.check()?;
        }
        let Some(piv) = (k..n).find(|&i| a[i][k] != 0) else { return Ok(0) };
        if piv != k {
            a.swap(piv, k);
            det = (p - det) % p;
        }
        det = mul_mod(det, a[k][k], p);
        let inv = inv_mod(a[k][k], p);
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            if row[k] == 0 {
                continue;
            }
            let f = mul_mod(row[k], inv, p);
            for j in k + 1..n {
                if pivot_row[j] != 0 {
                    row[j] = (row[j] + p - mul_mod(f, pivot_row[j], p)) % p;
                }
            }
            row[k] = 0;
        }
    }
    Ok(det)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &b in &BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Exact square root of a nonnegative perfect square.
pub fn exact_sqrt(d: &BigInt) -> Result<BigUint> {
    if d.is_negative() {
        return Err(Error::NotPerfectSquare(d.to_string()));
    }
    let m = d.magnitude();
    let r = m.sqrt();
    if &(&r * &r) == m {
        Ok(r)
    } else {
        Err(Error::NotPerfectSquare(d.to_string()))
    }
}
