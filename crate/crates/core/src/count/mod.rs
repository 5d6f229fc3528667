//! Exact perfect-matching counts.

pub mod brute;
pub mod det;
pub mod pfaffian;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::PlanarGraph;
use crate::reduce::{reduce_forced, ReduceStatus};

pub use det::{det_exact, exact_sqrt, Budget, DetMethod, SkewMatrix};
pub use pfaffian::{audit, orient_pfaffian, Orientation};

pub const DEFAULT_BRUTE_CAP: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Brute force on components up to the cap, determinants above it.
    #[default]
    Auto,
    Fkt,
    Brute,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        match s {
            "auto" => Ok(Method::Auto),
            "fkt" => Ok(Method::Fkt),
            "brute" => Ok(Method::Brute),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CountConfig {
    pub method: Method,
    pub brute_cap: usize,
    pub det: DetMethod,
    pub budget: Budget,
}

impl Default for CountConfig {
    fn default() -> Self {
        CountConfig { method: Method::Auto, brute_cap: DEFAULT_BRUTE_CAP, det: DetMethod::Auto, budget: Budget::default() }
    }
}

impl CountConfig {
    /// Defaults, with the brute-force cap taken from `DUNGEON_BRUTE_CAP` when set.
    pub fn from_env() -> CountConfig {
        let brute_cap = std::env::var("DUNGEON_BRUTE_CAP")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_BRUTE_CAP);
        CountConfig { brute_cap, ..CountConfig::default() }
    }

    pub fn with_method(self, method: Method) -> CountConfig {
        CountConfig { method, ..self }
    }
}

/// Exhaustive count. Fails above `cap` vertices.
pub fn count_bruteforce(g: &PlanarGraph, cap: usize) -> Result<BigUint> {
    brute::count_adjacency(g.adjacency(), cap)
}

/// The signed adjacency matrix of an oriented graph.
pub fn kasteleyn_matrix(g: &PlanarGraph, o: &Orientation) -> SkewMatrix {
    let mut m = SkewMatrix::zeros(g.len());
    for (u, v) in g.edges() {
        m.set(u, v, o.sign(u, v));
    }
    m
}

/// Counts perfect matchings of a plane graph as the square root of the
/// determinant of a Pfaffian-oriented skew adjacency matrix.
pub fn count_fkt(g: &PlanarGraph, det: DetMethod, budget: Budget) -> Result<BigUint> {
    if g.len() % 2 == 1 || !g.is_balanced() {
        return Ok(BigUint::zero());
    }
    let o = orient_pfaffian(g)?;
    let m = kasteleyn_matrix(g, &o);
    let d = det_exact(&m, det, budget)?;
    exact_sqrt(&d)
}

/// Forced edges first, then each component by brute force or FKT according
/// to `cfg`, multiplied together.
pub fn count(g: &PlanarGraph, cfg: &CountConfig) -> Result<BigUint> {
    if cfg.method == Method::Fkt {
        return count_fkt(g, cfg.det, cfg.budget);
    }
    let r = reduce_forced(g);
    if r.status == ReduceStatus::Infeasible {
        return Ok(BigUint::zero());
    }
    let mut total = BigUint::one();
    for comp in r.graph.components() {
        let h = r.graph.induced(&comp);
        if h.len() % 2 == 1 || !h.is_balanced() {
            return Ok(BigUint::zero());
        }
        cfg.budget.check()?;
        let c = match cfg.method {
            Method::Brute => count_bruteforce(&h, cfg.brute_cap)?,
            _ if h.len() <= cfg.brute_cap => count_bruteforce(&h, cfg.brute_cap)?,
            _ => count_fkt(&h, cfg.det, cfg.budget)?,
        };
        if c.is_zero() {
            return Ok(c);
        }
        total *= c;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contour::Triple;
    use crate::graph::tests::{cycle, path};
    use crate::lattice::{Color, Point};
    use crate::region::{build_d, build_e, build_hd};

    fn cfg(method: Method) -> CountConfig {
        CountConfig::default().with_method(method)
    }

    #[test]
    fn small_graphs_all_methods() {
        for m in [Method::Auto, Method::Fkt, Method::Brute] {
            assert_eq!(count(&PlanarGraph::empty(), &cfg(m)).unwrap(), BigUint::one());
            assert_eq!(count(&cycle(4), &cfg(m)).unwrap(), BigUint::from(2u32));
            assert_eq!(count(&cycle(6), &cfg(m)).unwrap(), BigUint::from(2u32));
            assert_eq!(count(&path(4), &cfg(m)).unwrap(), BigUint::one());
            assert_eq!(count(&path(3), &cfg(m)).unwrap(), BigUint::zero());
        }
    }

    #[test]
    fn two_disjoint_edges() {
        let pos = [Point::new(0, 0), Point::new(1, 0), Point::new(0, 5), Point::new(1, 5)];
        let colors = [Color::White, Color::Black, Color::Black, Color::White];
        let g = PlanarGraph::from_embedding(&pos, &colors, &[(0, 1), (2, 3)]).unwrap();
        for m in [Method::Auto, Method::Fkt, Method::Brute] {
            assert_eq!(count(&g, &cfg(m)).unwrap(), BigUint::one());
        }
    }

    #[test]
    fn unbalanced_even_graph_is_zero() {
        let pos = [Point::new(0, 0), Point::new(1, 0), Point::new(2, 0), Point::new(1, 1)];
        let colors = [Color::White, Color::Black, Color::White, Color::White];
        let g = PlanarGraph::from_embedding(&pos, &colors, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(count_fkt(&g, DetMethod::Auto, Budget::default()).unwrap(), BigUint::zero());
        assert_eq!(count(&g, &cfg(Method::Auto)).unwrap(), BigUint::zero());
    }

    #[test]
    fn small_hexagon_all_paths() {
        let g = build_hd(1, 2).unwrap().dual().unwrap();
        let brute = count(&g, &CountConfig { brute_cap: 128, ..cfg(Method::Brute) }).unwrap();
        let fkt = count_fkt(&g, DetMethod::Bareiss, Budget::default()).unwrap();
        let modular = count_fkt(&g, DetMethod::Modular, Budget::default()).unwrap();
        assert_eq!(brute, BigUint::from(169u32));
        assert_eq!(fkt, brute);
        assert_eq!(modular, brute);
    }

    #[test]
    fn small_six_sided_regions() {
        let g = build_d(Triple::new(2, 3, 2)).unwrap().dual().unwrap();
        assert_eq!(count(&g, &cfg(Method::Fkt)).unwrap(), BigUint::from(13u32));
        let g = build_e(Triple::new(2, 2, 0)).unwrap().dual().unwrap();
        assert_eq!(count(&g, &cfg(Method::Auto)).unwrap(), BigUint::from(26u32));
    }

    #[test]
    fn brute_cap_is_reported() {
        let g = build_hd(1, 2).unwrap().dual().unwrap();
        let err = count(&g, &CountConfig { brute_cap: 10, ..cfg(Method::Brute) }).unwrap_err();
        assert!(matches!(err, Error::BruteCapExceeded { .. }));
    }
}
