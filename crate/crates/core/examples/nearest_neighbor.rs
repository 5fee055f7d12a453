// Nearest-site queries through the hierarchy, checked against a scan.

use delaunay_hierarchy::datasets::{generate, DatasetKind, DatasetSpec};
use delaunay_hierarchy::{Hierarchy, HierarchyConfig, Phase3Mode, Point};

fn main() {
    let config = HierarchyConfig {
        phase3_mode: Phase3Mode::Exact,
        rng_seed: 7,
        ..HierarchyConfig::default()
    };
    let mut h = Hierarchy::new(config).unwrap();
    for p in generate(&DatasetSpec::new(DatasetKind::Random, 5000, 7)) {
        h.insert(p).unwrap();
    }

    let d2 = |a: Point, b: Point| {
        let (dx, dy) = (a.x as i64 - b.x as i64, a.y as i64 - b.y as i64);
        dx * dx + dy * dy
    };
    for q in generate(&DatasetSpec::new(DatasetKind::Random, 5, 8)) {
        let site = h.nearest_neighbor(q).unwrap();
        let p = h.point(site).unwrap();
        let best = h.sites().map(|s| d2(h.point(s).unwrap(), q)).min().unwrap();
        assert_eq!(d2(p, q), best);
        println!(
            "({}, {}) -> site {} at ({}, {})",
            q.x, q.y, site.0, p.x, p.y
        );
    }
}
