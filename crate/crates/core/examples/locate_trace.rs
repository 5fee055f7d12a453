// Per-level predicate counts of one point location.

use delaunay_hierarchy::datasets::{generate, DatasetKind, DatasetSpec};
use delaunay_hierarchy::{Hierarchy, HierarchyConfig, Point};

fn main() {
    let mut h = Hierarchy::new(HierarchyConfig::default()).unwrap();
    for p in generate(&DatasetSpec::new(DatasetKind::Random, 20_000, 11)) {
        h.insert(p).unwrap();
    }
    println!("level sizes {:?}", h.level_sizes());

    let loc = h.locate(Point::new(12345, -67890).unwrap()).unwrap();
    let t = &loc.trace;
    println!(
        "entered at level {}, sample used: {}",
        t.entry_level, t.used_sample
    );
    for (i, c) in t.levels().iter().enumerate().rev() {
        println!(
            "level {i}: {} orientation tests, {} crossings, {} distances",
            c.locate_orientation_tests(),
            c.phase2_crossings,
            c.distance_computations
        );
    }
    println!("total predicates {}", t.totals().locate_predicates());
    println!("nearest on level 0: site {}", loc.site().0);
}
