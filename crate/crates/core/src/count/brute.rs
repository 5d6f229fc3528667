//! Perfect matchings by exhaustive search over adjacency lists.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest graph the bitmask search can represent.
pub const MAX_BRUTE: usize = 128;

/// Counts perfect matchings of the graph with adjacency lists `adj`, which
/// need not be planar or bipartite. The search always branches on a vertex
/// of least remaining degree, so degree-one vertices are matched without
/// branching and degree-zero vertices cut the branch.
pub fn count_adjacency(adj: &[Vec<usize>], cap: usize) -> Result<BigUint> {
    let n = adj.len();
    if n > cap.min(MAX_BRUTE) {
        return Err(Error::BruteCapExceeded { size: n, cap: cap.min(MAX_BRUTE) });
    }
    if n % 2 == 1 {
        return Ok(BigUint::zero());
    }
    let masks: Vec<u128> = adj.iter().map(|ns| ns.iter().fold(0u128, |m, &u| m | (1u128 << u))).collect();
    let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut search = Search { masks: &masks, memo: HashMap::new() };
    Ok(search.go(full))
}

struct Search<'a> {
    masks: &'a [u128],
    memo: HashMap<u128, BigUint>,
}

impl Search<'_> {
    fn go(&mut self, alive: u128) -> BigUint {
        if alive == 0 {
            return BigUint::one();
        }
        if let Some(c) = self.memo.get(&alive) {
            return c.clone();
        }
        let mut best = (u32::MAX, 0usize);
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (self.masks[v] & alive).count_ones();
            if d < best.0 {
                best = (d, v);
                if d <= 1 {
                    break;
                }
            }
        }
        let (d, v) = best;
        let total = if d == 0 {
            BigUint::zero()
        } else {
            let without_v = alive & !(1u128 << v);
            let mut nbrs = self.masks[v] & alive;
            let mut total = BigUint::zero();
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                total += self.go(without_v & !(1u128 << u));
            }
            total
        };
        self.memo.insert(alive, total.clone());
        total
    }
}
