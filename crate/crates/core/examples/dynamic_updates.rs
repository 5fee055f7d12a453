// Insert, remove, and check that the structure stays Delaunay.

use delaunay_hierarchy::datasets::{generate, DatasetKind, DatasetSpec};
use delaunay_hierarchy::{Hierarchy, HierarchyConfig};

fn main() {
    let mut h = Hierarchy::new(HierarchyConfig::default()).unwrap();
    let sites: Vec<_> = generate(&DatasetSpec::new(DatasetKind::Random, 2000, 3))
        .into_iter()
        .map(|p| h.insert(p).unwrap())
        .collect();
    println!("after inserts: levels {:?}", h.level_sizes());

    for s in sites.iter().step_by(2) {
        h.remove(*s).unwrap();
    }
    println!("after removing half: levels {:?}", h.level_sizes());
    assert_eq!(h.len(), 1000);

    // A duplicate returns the existing id; new points get ids never used before.
    let p = h.point(sites[1]).unwrap();
    assert_eq!(h.insert(p).unwrap(), sites[1]);
    let q = generate(&DatasetSpec::new(DatasetKind::Random, 1, 99))[0];
    let fresh = h.insert(q).unwrap();
    println!("new site id {}", fresh.0);

    let problems = h.validate();
    assert!(problems.is_empty(), "{problems:?}");
}
