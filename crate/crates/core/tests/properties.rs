use dungeon_core::count::{count_bruteforce, count_fkt, det_exact, exact_sqrt, kasteleyn_matrix, orient_pfaffian, Budget, DetMethod};
use dungeon_core::iso::{canonical_code, plane_isomorphic};
use dungeon_core::lattice::LatticeMap;
use dungeon_core::matching::find_matching;
use dungeon_core::random::{dungeon_subgraph, planted_split};
use dungeon_core::reduce::{reduce_forced, ReduceStatus};
use dungeon_core::split::split_hd;
use dungeon_core::{build_aztec, build_d, build_e, build_hd, count, CountConfig, PlanarGraph, Triple};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pool() -> Vec<PlanarGraph> {
    [
        build_hd(1, 2).unwrap(),
        build_d(Triple::new(8, 8, 2)).unwrap(),
        build_e(Triple::new(5, 8, 4)).unwrap(),
        build_aztec(3).unwrap(),
    ]
    .iter()
    .map(|r| r.dual().unwrap())
    .collect()
}

const CAP: usize = 64;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn forced_edges_do_not_change_the_count(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = dungeon_subgraph(&mut rng, &pool(), 18);
        let before = count_bruteforce(&g, CAP).unwrap();
        let r = reduce_forced(&g);
        let after = match r.status {
            ReduceStatus::Ok => count_bruteforce(&r.graph, CAP).unwrap(),
            ReduceStatus::Infeasible => BigUint::ZERO,
        };
        prop_assert_eq!(before, after);
    }

    #[test]
    fn relabeling_preserves_counts_and_codes(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = dungeon_subgraph(&mut rng, &pool(), 22);
        let mut order: Vec<usize> = (0..g.len()).collect();
        order.shuffle(&mut rng);
        let h = g.permuted(&order);
        prop_assert_eq!(count_bruteforce(&g, CAP).unwrap(), count_bruteforce(&h, CAP).unwrap());
        prop_assert_eq!(count_fkt(&g, DetMethod::Auto, Budget::default()).unwrap(),
                        count_fkt(&h, DetMethod::Auto, Budget::default()).unwrap());
        if g.components().len() == 1 {
            prop_assert_eq!(canonical_code(&g), canonical_code(&h));
        }
        prop_assert!(plane_isomorphic(&g, &h));
    }

    #[test]
    fn fkt_agrees_with_brute_force(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = dungeon_subgraph(&mut rng, &pool(), 22);
        let brute = count_bruteforce(&g, CAP).unwrap();
        for det in [DetMethod::Bareiss, DetMethod::Modular] {
            prop_assert_eq!(&count_fkt(&g, det, Budget::default()).unwrap(), &brute);
        }
        let o = orient_pfaffian(&g).unwrap();
        let d = det_exact(&kasteleyn_matrix(&g, &o), DetMethod::Bareiss, Budget::default()).unwrap();
        prop_assert_eq!(exact_sqrt(&d).unwrap(), brute);
    }

    #[test]
    fn find_matching_exists_iff_count_positive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = dungeon_subgraph(&mut rng, &pool(), 22);
        let n = count_bruteforce(&g, CAP).unwrap();
        match find_matching(&g) {
            Some(m) => {
                m.check_perfect(&g).unwrap();
                prop_assert!(n > BigUint::ZERO);
            }
            None => prop_assert_eq!(n, BigUint::ZERO),
        }
    }

    #[test]
    fn planted_splits_factor(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = planted_split(&mut rng, 20);
        let whole = dungeon_core::count::brute::count_adjacency(&s.adj, CAP).unwrap();
        let inside = dungeon_core::count::brute::count_adjacency(&s.induced(&s.h), CAP).unwrap();
        let outside = dungeon_core::count::brute::count_adjacency(&s.induced(&s.outside()), CAP).unwrap();
        prop_assert_eq!(whole, inside * outside);
    }
}

#[test]
fn rigid_motions_preserve_region_counts() {
    let cfg = CountConfig::default();
    for r in [build_d(Triple::new(3, 3, 1)).unwrap(), build_e(Triple::new(2, 3, 2)).unwrap(), build_hd(1, 2).unwrap()] {
        let n = count(&r.dual().unwrap(), &cfg).unwrap();
        for k in 0..6 {
            let m = LatticeMap::rotation(k).compose(&LatticeMap::translate(3, -2));
            let moved = r.transform(&m);
            assert_eq!(count(&moved.dual().unwrap(), &cfg).unwrap(), n);
            assert!(plane_isomorphic(&moved.dual().unwrap(), &r.dual().unwrap()));
        }
    }
}

#[test]
fn hexagon_splits_factor() {
    let cfg = CountConfig::default();
    for a in 1..=2 {
        for b in 2 * a..=6 {
            let g = build_hd(a, b).unwrap().dual().unwrap();
            let s = split_hd(&g, a, b).unwrap();
            assert_eq!(s.west.len(), s.east.len());
            let (m1, m2, m3) = (count(&s.g1, &cfg).unwrap(), count(&s.g2, &cfg).unwrap(), count(&s.g3, &cfg).unwrap());
            assert_eq!(m2, BigUint::from(1u32), "HD({a},{b})");
            assert_eq!(m1, m3, "HD({a},{b})");
            assert_eq!(count(&g, &cfg).unwrap(), &m1 * &m2 * &m3, "HD({a},{b})");
        }
    }
}
