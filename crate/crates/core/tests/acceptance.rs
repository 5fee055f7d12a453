// Acceptance suite. Each test prints one PASS/FAIL line to stderr, bypassing
// the test harness capture, then asserts.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use common::{brute_force_delaunay_edges, edge_keys, nearest_distance, random_points};
use delaunay_hierarchy::bench::{run_bench, BenchOptions, Method};
use delaunay_hierarchy::costmodel::{
    argmin, c0, c0_continuous, c_k, c_msz, c_star_k, c_walk, crossover, levels_cost,
    levels_cost_sampled,
};
use delaunay_hierarchy::datasets::{generate, DatasetKind, DatasetSpec};
use delaunay_hierarchy::predicates::{squared_distance, COORD_BOUND};
use delaunay_hierarchy::{Counters, Hierarchy, HierarchyConfig, Phase3Mode, Point, Triangulation};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn report(id: u32, title: &str, pass: bool, detail: String) {
    let line = format!(
        "criterion {id:>2} {}: {title}: {detail}\n",
        if pass { "PASS" } else { "FAIL" }
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
}

fn build(points: &[Point], config: HierarchyConfig) -> Hierarchy {
    let mut h = Hierarchy::new(config).unwrap();
    for &p in points {
        h.insert(p).unwrap();
    }
    h
}

fn queries(seed: u64, n: usize) -> Vec<Point> {
    generate(&DatasetSpec::new(
        DatasetKind::Random,
        n,
        seed ^ 0xabcd_ef01,
    ))
}

#[test]
fn c01_oracle_correctness() {
    let start = Instant::now();
    let mut mismatches = 0;
    for seed in 0..50u64 {
        let n = 64 + (seed as usize * 192) / 49;
        let pts = random_points(seed, n, COORD_BOUND);
        let h = build(
            &pts,
            HierarchyConfig {
                rng_seed: seed,
                ..HierarchyConfig::default()
            },
        );
        if edge_keys(h.level(0)) != brute_force_delaunay_edges(&pts) {
            mismatches += 1;
        }
    }
    let elapsed = start.elapsed();
    let pass = mismatches == 0 && elapsed < Duration::from_secs(120);
    report(
        1,
        "level-0 edges equal brute-force oracle, 50 seeds, n=64..256",
        pass,
        format!("{mismatches} mismatches in {:.1}s", elapsed.as_secs_f64()),
    );
    assert!(pass);
}

#[test]
fn c02_validity_at_scale() {
    let start = Instant::now();
    let mut violations = 0;
    let mut per_kind = Vec::new();
    for kind in DatasetKind::ALL {
        let pts = generate(&DatasetSpec::new(kind, 2000, 2));
        let h = build(&pts, HierarchyConfig::default());
        let v = h.level(0).validate_exhaustive().len();
        violations += v;
        per_kind.push(format!("{kind}={v}"));
    }
    let elapsed = start.elapsed();
    let pass = violations == 0 && elapsed < Duration::from_secs(60);
    report(
        2,
        "full empty-circle validation, n=2000, five distributions",
        pass,
        format!("{} in {:.1}s", per_kind.join(" "), elapsed.as_secs_f64()),
    );
    assert!(pass);
}

#[test]
fn c03_dynamic_round_trip() {
    let mut mismatches = 0;
    for seed in 0..20u64 {
        let pts = random_points(1000 + seed, 500, COORD_BOUND);
        let mut h = build(
            &pts,
            HierarchyConfig {
                rng_seed: seed,
                ..HierarchyConfig::default()
            },
        );
        let mut ids: Vec<_> = h.sites().collect();
        ids.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        for &s in &ids[..250] {
            h.remove(s).unwrap();
        }
        let base = h.level(0);
        let mut rest: Vec<_> = base
            .vertices()
            .map(|v| (base.stamp(v), base.point(v), base.tag(v)))
            .collect();
        rest.sort();
        let mut fresh = Triangulation::new();
        for (stamp, p, tag) in rest {
            fresh.insert_with(p, stamp, tag, &mut Counters::default());
        }
        if edge_keys(base) != edge_keys(&fresh) || !h.validate().is_empty() {
            mismatches += 1;
        }
    }
    let pass = mismatches == 0;
    report(
        3,
        "insert 500, delete 250, rebuild with same stamps, 20 seeds",
        pass,
        format!("{mismatches} mismatches"),
    );
    assert!(pass);
}

#[test]
fn c04_nearest_neighbor_exactness() {
    let mut mismatches = 0;
    for seed in 0..10u64 {
        let pts = generate(&DatasetSpec::new(DatasetKind::Random, 1000, 40 + seed));
        let config = HierarchyConfig {
            phase3_mode: Phase3Mode::Exact,
            rng_seed: seed,
            ..HierarchyConfig::default()
        };
        let h = build(&pts, config);
        for q in queries(seed, 1000) {
            let got = h.point(h.nearest_neighbor(q).unwrap()).unwrap();
            if squared_distance(got, q) != nearest_distance(pts.iter().copied(), q) {
                mismatches += 1;
            }
        }
    }
    let pass = mismatches == 0;
    report(
        4,
        "exact nearest equals linear scan, 10 structures x 1000 queries",
        pass,
        format!("{mismatches} mismatches"),
    );
    assert!(pass);
}

#[test]
fn c05_sampling_statistics() {
    let n = 100_000usize;
    let alpha = 30.0;
    let pts = generate(&DatasetSpec::new(DatasetKind::Random, n, 5));
    let config = HierarchyConfig {
        alpha,
        phase3_mode: Phase3Mode::Exact,
        rng_seed: 5,
        ..HierarchyConfig::default()
    };
    let h = build(&pts, config);
    let n = h.len() as f64;
    let p = 1.0 / alpha;
    let level1 = h.level_sizes()[1] as f64;
    let sigma = (n * p * (1.0 - p)).sqrt();
    let z = (level1 - n * p) / sigma;

    let level_points: Vec<Vec<Point>> = h
        .levels()
        .iter()
        .map(|t| t.vertices().map(|v| t.point(v)).collect())
        .collect();
    let (mut total, mut samples) = (0u64, 0u64);
    for q in queries(5, 1000) {
        let loc = h.locate(q).unwrap();
        for i in 0..loc.nearest.len() - 1 {
            let Some(upper) = loc.nearest[i + 1] else {
                continue;
            };
            let r = squared_distance(h.point(upper).unwrap(), q);
            total += level_points[i]
                .iter()
                .filter(|&&s| squared_distance(s, q) < r)
                .count() as u64;
            samples += 1;
        }
    }
    let mean = total as f64 / samples as f64;
    let target = alpha - 1.0;
    let pass = z.abs() <= 3.0 && (mean - target).abs() <= 0.25 * target;
    report(
        5,
        "level-1 share and closer-site count, alpha=30, n=1e5",
        pass,
        format!(
            "|S1|={level1} (z={z:.2}), mean closer sites {mean:.2} over {samples} level visits (target {target})"
        ),
    );
    assert!(pass);
}

#[test]
fn c06_walk_length_constant() {
    let alpha: f64 = 30.0;
    let pts = generate(&DatasetSpec::new(DatasetKind::Random, 100_000, 6));
    let h = build(
        &pts,
        HierarchyConfig {
            alpha,
            rng_seed: 6,
            ..HierarchyConfig::default()
        },
    );
    let (mut crossings, mut walks) = (0u64, 0u64);
    for q in queries(6, 10_000) {
        let trace = h.locate(q).unwrap().trace;
        for i in 0..trace.entry_level {
            crossings += trace.level(i).phase2_crossings;
            walks += 1;
        }
    }
    let mean = crossings as f64 / walks as f64;
    let target = 2.0 * (alpha / std::f64::consts::PI).sqrt();
    let pass = mean >= 0.5 * target && mean <= 2.0 * target;
    report(
        6,
        "mean crossings per level below the entry level, alpha=30, n=1e5",
        pass,
        format!("{mean:.2} over {walks} walks (target {target:.2})"),
    );
    assert!(pass);
}

#[test]
fn c07_memory_shape() {
    let n = 100_000;
    let mut worst: f64 = 0.0;
    for seed in 0..10u64 {
        let pts = generate(&DatasetSpec::new(DatasetKind::Random, n, 70 + seed));
        let h = build(
            &pts,
            HierarchyConfig {
                rng_seed: seed,
                ..HierarchyConfig::default()
            },
        );
        worst = worst.max(h.total_finite_triangles() as f64 / h.len() as f64);
    }
    let pass = worst <= 2.5;
    report(
        7,
        "finite triangles over all levels per site, alpha=30, n=1e5, 10 seeds",
        pass,
        format!("worst {worst:.4} (bound 2.5)"),
    );
    assert!(pass);
}

#[test]
fn c08_scaling() {
    let mean = |method: Method, n: usize| {
        let pts = generate(&DatasetSpec::new(DatasetKind::Random, n, 8));
        let opts = BenchOptions {
            method,
            seed: 8,
            queries: 10_000,
            ..BenchOptions::default()
        };
        let row = run_bench("random", &pts, &opts).unwrap();
        assert!(row.valid);
        row.mean_query_predicates()
    };
    let (h3, h5) = (
        mean(Method::HierarchyMsz, 1000),
        mean(Method::HierarchyMsz, 100_000),
    );
    let (w3, w5) = (mean(Method::Walk, 1000), mean(Method::Walk, 100_000));
    let (hr, wr) = (h5 / h3, w5 / w3);
    let pass = hr <= 4.0 && wr >= 6.0;
    report(
        8,
        "locate predicates per query, n=1e5 over n=1e3",
        pass,
        format!("hierarchy {h3:.1} -> {h5:.1} (x{hr:.2}, bound 4), walk {w3:.1} -> {w5:.1} (x{wr:.2}, bound 6)"),
    );
    assert!(pass);
}

#[test]
fn c09_method_comparison() {
    let n = 50_000;
    let run = |kind: DatasetKind, method: Method| {
        let pts = generate(&DatasetSpec::new(kind, n, 9));
        let opts = BenchOptions {
            method,
            seed: 9,
            ..BenchOptions::default()
        };
        let row = run_bench(kind.name(), &pts, &opts).unwrap();
        assert!(row.valid, "{kind} {method} failed validation");
        row
    };
    let ratio = |kind| {
        run(kind, Method::HierarchyMsz).total_orientation_tests() as f64
            / run(kind, Method::Walk).total_orientation_tests() as f64
    };
    let random = ratio(DatasetKind::Random);
    let ellipse2 = ratio(DatasetKind::Ellipse2);
    // Sample scans are distance computations, so the circle band compares
    // every predicate, not orientation tests alone.
    let circle: Vec<f64> = Method::ALL
        .iter()
        .map(|&m| run(DatasetKind::Circle, m).build.predicates() as f64)
        .collect();
    let spread = circle.iter().cloned().fold(f64::MIN, f64::max)
        / circle.iter().cloned().fold(f64::MAX, f64::min);
    let pass = random <= 1.0 / 3.0 && ellipse2 <= 0.2 && spread <= 3.0;
    report(
        9,
        "build counters vs walk at n=50000",
        pass,
        format!(
            "random {random:.3} (bound 0.333), ellipse2 {ellipse2:.3} (bound 0.2), circle spread {spread:.2} (bound 3)"
        ),
    );
    assert!(pass);
}

#[test]
fn c10_cost_model() {
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-9;
    let mut failures = Vec::new();
    let mut check = |name: &str, ok: bool| {
        if !ok {
            failures.push(name.to_string());
        }
    };
    check("c_walk(1)", close(c_walk(1.0), 23.2));
    check("c_walk(100)", close(c_walk(100.0), 79.0));
    check("c_walk(1e4)", close(c_walk(1e4), 637.0));
    // 20 / log2(40) = 3.76, so four levels.
    let per_level = 32.0 + 6.2 * 40f64.sqrt();
    check(
        "c0(2^20, 40)",
        close(c0(2f64.powi(20), 40.0), 4.0 * per_level),
    );
    check(
        "c0(2^20, 40) ~ 284.85",
        (4.0 * per_level - 284.85).abs() < 0.01,
    );
    check("c_msz(1e6, 1)", close(c_msz(1e6, 1.0), 17.0 + 100.0 * 11.2));
    check("c_msz(1, 1)", close(c_msz(1.0, 1.0), 28.2));
    for n in [1.0, 37.0, 1e4, 1e7] {
        check("c_0 = c_walk", close(c_k(n, 0.0, 40.0), c_walk(n)));
        check(
            "c*_0 = c_msz",
            close(c_star_k(n, 0.0, 40.0, 1.0), c_msz(n, 1.0)),
        );
    }

    let n = 2f64.powi(20);
    let band = |f: &dyn Fn(f64) -> f64| argmin(f, 18.0, 90.0, 0.01).1 / 20.0;
    let ceil_band = band(&|a| c0(n, a));
    let cont_band = band(&|a| c0_continuous(n, a));
    check("band (ceiling)", (13.3..=14.0).contains(&ceil_band));
    check("band (continuous)", (13.3..=14.0).contains(&cont_band));
    let (best_alpha, _) = argmin(|a| c0_continuous(n, a), 2.0, 200.0, 0.01);
    check("argmin alpha ~ 40", (best_alpha - 40.0).abs() <= 5.0);
    let (best_beta, _) = argmin(|b| 6.2 / b.sqrt() + 5.0 * b, 0.01, 5.0, 0.001);
    check(
        "beta bracket minimum in (0.5, 1)",
        best_beta > 0.5 && best_beta < 1.0,
    );

    let alpha = 40.0;
    let sampled = crossover(
        |n| levels_cost_sampled(n, 1, alpha, 1.0),
        |n| levels_cost(n, 1, alpha),
        100_000,
    );
    let two = crossover(
        |n| levels_cost(n, 2, alpha),
        |n| levels_cost(n, 1, alpha),
        100_000,
    );
    let two_vs_sampled = crossover(
        |n| levels_cost(n, 2, alpha),
        |n| levels_cost_sampled(n, 1, alpha, 1.0),
        100_000,
    );
    let within = |x: Option<u64>, lo: u64, hi: u64| x.is_some_and(|x| (lo..=hi).contains(&x));
    check(
        "sampled walk crossover in (20, 80)",
        within(sampled, 21, 79),
    );
    check("two-level crossover 180 +-50%", within(two, 90, 270));
    check(
        "two-level vs sampled crossover 600 +-50%",
        within(two_vs_sampled, 300, 900),
    );

    let pass = failures.is_empty();
    report(
        10,
        "cost formulas and crossovers",
        pass,
        format!(
            "band {ceil_band:.3}/{cont_band:.3}, argmin alpha {best_alpha:.2}, beta {best_beta:.3}, crossovers {sampled:?} {two:?} {two_vs_sampled:?}{}",
            if pass { String::new() } else { format!(", failed: {}", failures.join("; ")) }
        ),
    );
    assert!(pass);
}
