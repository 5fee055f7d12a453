mod common;

use common::{brute_force_delaunay_edges, edge_keys, in_general_position, nearest_distance};
use delaunay_hierarchy::costmodel::{c0, c_k, c_msz, c_star_k, c_walk};
use delaunay_hierarchy::datasets::{generate, DatasetKind, DatasetSpec};
use delaunay_hierarchy::predicates::squared_distance;
use delaunay_hierarchy::{
    Counters, Hierarchy, HierarchyConfig, Insertion, Phase3Mode, Point, Triangulation,
};
use proptest::prelude::*;

fn points(bound: i32, max: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec((-bound..=bound, -bound..=bound), 1..max).prop_map(|v| {
        let mut seen = std::collections::HashSet::new();
        v.into_iter()
            .map(|(x, y)| Point::new_unchecked(x, y))
            .filter(|p| seen.insert(*p))
            .collect()
    })
}

fn exact() -> HierarchyConfig {
    HierarchyConfig {
        phase3_mode: Phase3Mode::Exact,
        min_hierarchy_size: 4,
        alpha: 3.0,
        ..HierarchyConfig::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matches_brute_force_in_general_position(pts in points(1 << 20, 40)) {
        prop_assume!(pts.len() >= 3 && in_general_position(&pts));
        let t = Triangulation::from_points(pts.iter().copied());
        prop_assert_eq!(edge_keys(&t), brute_force_delaunay_edges(&pts));
    }

    // Tiny coordinates force collinear runs and cocircular quadruples.
    #[test]
    fn degenerate_inputs_stay_valid(pts in points(4, 60)) {
        let t = Triangulation::from_points(pts.iter().copied());
        prop_assert!(t.validate_exhaustive().is_empty(), "{}", t.dump());
        prop_assert_eq!(t.len(), pts.len());
        if t.has_triangles() {
            let total: usize = t.vertices().map(|v| t.degree(v)).sum();
            prop_assert!(total < 6 * t.len());
        }
    }

    #[test]
    fn walks_terminate_and_land(pts in points(6, 50), qx in -8i32..=8, qy in -8i32..=8) {
        let t = Triangulation::from_points(pts.iter().copied());
        prop_assume!(t.has_triangles());
        let q = Point::new_unchecked(qx, qy);
        for v in t.vertices() {
            let found = t.walk_from_vertex(v, q, &mut Counters::default());
            prop_assert!(t.contains(found, q));
        }
    }

    #[test]
    fn insert_then_delete_is_identity(pts in points(1 << 16, 40), x in -(1i32 << 16)..(1 << 16), y in -(1i32 << 16)..(1 << 16)) {
        let p = Point::new_unchecked(x, y);
        prop_assume!(!pts.contains(&p));
        let mut all = pts.clone();
        all.push(p);
        prop_assume!(all.len() >= 4 && in_general_position(&all));
        let mut t = Triangulation::from_points(pts.iter().copied());
        let before = edge_keys(&t);
        let hint = t.locate(p, &mut Counters::default());
        let Insertion::Inserted(v) = t.insert_located(p, hint, 1 << 40, 0, &mut Counters::default()) else {
            panic!("fresh point reported as duplicate");
        };
        prop_assert!(t.delete_vertex(v));
        prop_assert!(t.validate().is_empty());
        prop_assert_eq!(edge_keys(&t), before);
    }

    #[test]
    fn exact_nearest_equals_scan(pts in points(1000, 80), qs in prop::collection::vec((-1100i32..=1100, -1100i32..=1100), 1..20)) {
        let mut h = Hierarchy::new(exact()).unwrap();
        for &p in &pts {
            h.insert(p).unwrap();
        }
        for (x, y) in qs {
            let q = Point::new_unchecked(x, y);
            let loc = h.locate(q).unwrap();
            let got = h.point(loc.site()).unwrap();
            prop_assert_eq!(squared_distance(got, q), nearest_distance(pts.iter().copied(), q));
            if let Some(t) = loc.triangle {
                prop_assert!(h.level(0).contains(t, q));
            }
            // Each level's nearest is no farther than the coarser one's.
            let d: Vec<u64> = loc.nearest.iter().flatten()
                .map(|s| squared_distance(h.point(*s).unwrap(), q))
                .collect();
            prop_assert!(d.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn level_sets_ignore_insertion_order(pts in points(1 << 20, 60), seed in any::<u64>()) {
        let draw = |h: &mut Hierarchy, p: Point| h.insert_traced(p).unwrap().site;
        let mut a = Hierarchy::new(HierarchyConfig { rng_seed: seed, ..exact() }).unwrap();
        let levels: Vec<usize> = pts.iter().map(|&p| {
            let s = draw(&mut a, p);
            a.top_level(s).unwrap()
        }).collect();
        let mut b = Hierarchy::new(exact()).unwrap();
        for (&p, &l) in pts.iter().zip(&levels).rev() {
            b.insert_at_level(p, l).unwrap();
        }
        prop_assert_eq!(a.level_sizes(), b.level_sizes());
        for i in 0..a.levels().len() {
            prop_assert_eq!(edge_keys(a.level(i)), edge_keys(b.level(i)));
        }
    }

    #[test]
    fn updates_keep_every_level_valid(pts in points(50, 80), remove in prop::collection::vec(any::<prop::sample::Index>(), 0..40)) {
        let mut h = Hierarchy::new(exact()).unwrap();
        let mut ids: Vec<_> = pts.iter().map(|&p| h.insert(p).unwrap()).collect();
        for r in remove {
            if ids.is_empty() {
                break;
            }
            let s = ids.swap_remove(r.index(ids.len()));
            h.remove(s).unwrap();
            prop_assert!(h.validate().is_empty(), "{:?}", h.validate());
        }
        prop_assert_eq!(h.len(), ids.len());
    }

    #[test]
    fn datasets_are_deterministic_and_bounded(seed in any::<u64>(), n in 0usize..300, k in 0usize..5) {
        let spec = DatasetSpec::new(DatasetKind::ALL[k], n, seed);
        let a = generate(&spec);
        prop_assert!(a.iter().all(|p| p.in_bounds()));
        prop_assert_eq!(a, generate(&spec));
    }

    #[test]
    fn cost_formulas_are_monotone(n in 1.0f64..1e9, dn in 0.0f64..1e6, alpha in 1.5f64..200.0, beta in 0.1f64..5.0, k in 0.0f64..5.0) {
        let m = n + dn;
        prop_assert!(c_walk(m) >= c_walk(n));
        prop_assert!(c_msz(m, beta) >= c_msz(n, beta));
        prop_assert!(c_k(m, k, alpha) >= c_k(n, k, alpha));
        prop_assert!(c_star_k(m, k, alpha, beta) >= c_star_k(n, k, alpha, beta));
        if n >= 2.0 {
            prop_assert!(c0(m, alpha) >= c0(n, alpha));
        }
    }
}
