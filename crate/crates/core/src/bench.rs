//! Build benchmarks for the four location strategies.
//!
//! Comparisons rely on predicate counters, which are machine independent
//! and deterministic under fixed seeds; wall time is reported alongside.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hierarchy::{Hierarchy, HierarchyConfig};
use crate::predicates::{Point, COORD_BOUND};
use crate::trace::Counters;
use crate::triangulation::Phase3Mode;

/// Location strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// One level, walk from the last inserted site.
    Walk,
    /// One level, walk from the nearest of a random sample.
    Msz,
    /// Full hierarchy entered at its designated start.
    Hierarchy,
    /// Full hierarchy entered from a sample of its entry level.
    HierarchyMsz,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Walk,
        Method::Msz,
        Method::Hierarchy,
        Method::HierarchyMsz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Walk => "walk",
            Method::Msz => "msz",
            Method::Hierarchy => "hierarchy",
            Method::HierarchyMsz => "hierarchy-msz",
        }
    }

    /// The hierarchy configuration implementing this strategy.
    pub fn config(self, alpha: f64, beta: f64, seed: u64) -> HierarchyConfig {
        let base = HierarchyConfig {
            alpha,
            beta,
            rng_seed: seed,
            ..HierarchyConfig::default()
        };
        match self {
            Method::Walk => HierarchyConfig {
                max_levels: Some(1),
                min_msz_size: None,
                ..base
            },
            Method::Msz => HierarchyConfig {
                max_levels: Some(1),
                ..base
            },
            Method::Hierarchy => HierarchyConfig {
                min_msz_size: None,
                ..base
            },
            Method::HierarchyMsz => base,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase().replace('_', "-");
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or(Error::UnknownName {
                what: "method",
                value: s,
            })
    }
}

#[derive(Clone, Debug)]
pub struct BenchOptions {
    pub method: Method,
    pub alpha: f64,
    pub beta: f64,
    pub seed: u64,
    /// Insert in a seeded random order instead of the given one.
    pub shuffle: bool,
    /// Builds to time; counters come from the first.
    pub repeats: usize,
    /// Random queries located after the build.
    pub queries: usize,
    pub phase3_mode: Phase3Mode,
    /// Abandon a build that runs longer than this.
    pub time_limit: Option<Duration>,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            method: Method::HierarchyMsz,
            alpha: 30.0,
            beta: 1.0,
            seed: 0,
            shuffle: false,
            repeats: 1,
            queries: 0,
            phase3_mode: Phase3Mode::Modified,
            time_limit: None,
        }
    }
}

/// One (distribution, size, method) measurement.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub distribution: String,
    pub n: usize,
    pub method: Method,
    pub alpha: f64,
    pub beta: f64,
    pub seed: u64,
    pub shuffle: bool,
    pub levels: usize,
    /// Finite triangles over all levels once built.
    pub peak_triangles: usize,
    /// Counters summed over every insertion (location and update).
    pub build: Counters,
    pub queries: usize,
    /// Location counters summed over the queries.
    pub query: Counters,
    /// Level 0 passed validation.
    pub valid: bool,
    /// Fastest build, in seconds.
    pub build_time_s: f64,
}

impl BenchRow {
    pub fn total_orientation_tests(&self) -> u64 {
        self.build.orientation_tests()
    }

    pub fn mean_locate_predicates_per_insert(&self) -> f64 {
        self.build.locate_predicates() as f64 / self.n.max(1) as f64
    }

    pub fn mean_query_predicates(&self) -> f64 {
        if self.queries == 0 {
            0.0
        } else {
            self.query.locate_predicates() as f64 / self.queries as f64
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

/// Builds the structure over `points` and measures it.
pub fn run_bench(distribution: &str, points: &[Point], opts: &BenchOptions) -> Result<BenchRow> {
    let mut order = points.to_vec();
    if opts.shuffle {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(
            opts.seed ^ 0x243f_6a88_85a3_08d3,
        ));
    }
    let mut config = opts.method.config(opts.alpha, opts.beta, opts.seed);
    config.phase3_mode = opts.phase3_mode;
    let mut best_time = f64::INFINITY;
    let mut first: Option<(Hierarchy, Counters)> = None;
    for _ in 0..opts.repeats.max(1) {
        let start = Instant::now();
        let mut h = Hierarchy::new(config.clone())?;
        let mut counters = Counters::default();
        for (i, &p) in order.iter().enumerate() {
            counters += h.insert_traced(p)?.trace.totals();
            if let Some(limit) = opts.time_limit {
                if i % 1024 == 0 && start.elapsed() > limit {
                    return Err(Error::TimeLimit(limit));
                }
            }
        }
        best_time = best_time.min(start.elapsed().as_secs_f64());
        if first.is_none() {
            first = Some((h, counters));
        }
    }
    let (h, build) = first.expect("at least one build");
    let valid = h.level(0).validate().is_empty();
    let mut query = Counters::default();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x1319_8a2e_0370_7344);
    for _ in 0..opts.queries {
        let q = Point::new_unchecked(
            rng.gen_range(-COORD_BOUND..=COORD_BOUND),
            rng.gen_range(-COORD_BOUND..=COORD_BOUND),
        );
        query += h.locate(q)?.trace.totals();
    }
    Ok(BenchRow {
        distribution: distribution.to_string(),
        n: h.len(),
        method: opts.method,
        alpha: opts.alpha,
        beta: opts.beta,
        seed: opts.seed,
        shuffle: opts.shuffle,
        levels: h.levels().len(),
        peak_triangles: h.total_finite_triangles(),
        build,
        queries: opts.queries,
        query,
        valid,
        build_time_s: best_time,
    })
}

pub const CSV_HEADER: &str = "distribution,n,method,alpha,beta,seed,shuffle,levels,peak_triangles,\
locate_orientation_tests,phase2_crossings,distance_computations,angle_tests,update_orientation_tests,\
incircle_tests,total_orientation_tests,total_predicates,mean_locate_predicates_per_insert,\
queries,mean_query_predicates,valid,build_time_s";

/// CSV with a fixed header; only the last column depends on timing.
pub fn emit_csv(report: &BenchReport) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in &report.rows {
        let b = &r.build;
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{:.4},{},{:.4},{},{:.6}",
            r.distribution,
            r.n,
            r.method,
            r.alpha,
            r.beta,
            r.seed,
            r.shuffle,
            r.levels,
            r.peak_triangles,
            b.locate_orientation_tests(),
            b.phase2_crossings,
            b.distance_computations,
            b.angle_tests,
            b.update_orientation_tests,
            b.incircle_tests,
            b.orientation_tests(),
            b.predicates(),
            r.mean_locate_predicates_per_insert(),
            r.queries,
            r.mean_query_predicates(),
            r.valid,
            r.build_time_s,
        );
    }
    s
}
