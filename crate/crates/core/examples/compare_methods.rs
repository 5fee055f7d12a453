// Compare the four location strategies by predicate counts.

use delaunay_hierarchy::bench::{emit_csv, run_bench, BenchOptions, BenchReport, Method};
use delaunay_hierarchy::datasets::{generate, DatasetKind, DatasetSpec};

fn main() {
    let mut report = BenchReport::default();
    for kind in [DatasetKind::Random, DatasetKind::Ellipse2] {
        let pts = generate(&DatasetSpec::new(kind, 10_000, 5));
        for method in Method::ALL {
            let opts = BenchOptions {
                method,
                seed: 5,
                ..BenchOptions::default()
            };
            let row = run_bench(kind.name(), &pts, &opts).unwrap();
            assert!(row.valid);
            println!(
                "{kind:>8} {method:>13}: {:>9} orientation tests, {:>6.1} location predicates per insert",
                row.total_orientation_tests(),
                row.mean_locate_predicates_per_insert()
            );
            report.rows.push(row);
        }
    }
    print!("{}", emit_csv(&report));
}
