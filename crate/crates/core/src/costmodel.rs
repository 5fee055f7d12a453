//! Analytic operation-count model of the location strategies.
//!
//! Costs are floating point operation counts per location:
//!
//! * `c_walk(n)`: straight walk from an arbitrary vertex of `n` sites.
//! * `c0(n, alpha)`: full hierarchy, `ceil(log n / log alpha)` levels of
//!   `32 + 6.2 sqrt(alpha)` each.
//! * `c_msz(n, beta)`: walk from the nearest of `beta n^(1/3)` samples.
//! * `c_k(n, k, alpha)`: `k` levels above a walk in the top `n / alpha^k`
//!   sites; `c_star_k` starts that top walk from a sample.
//!
//! In `c_k` and `c_star_k`, `k` counts the levels *above* the walked one, so
//! a structure with `L` levels in total is `k = L - 1`. The CSV table and
//! the crossover helpers label structures by their total level count.

use std::fmt::Write as _;

const WALK_BASE: f64 = 17.0;
const PER_SQRT: f64 = 6.2;
const LEVEL_BASE: f64 = 32.0;
const LEVEL_STEP: f64 = 15.0;
const SAMPLE_SCAN: f64 = 5.0;

pub fn c_walk(n: f64) -> f64 {
    WALK_BASE + PER_SQRT * n.sqrt()
}

/// Number of levels `ceil(log n / log alpha)`, robust to ratios that are
/// integers up to rounding.
pub fn level_count(n: f64, alpha: f64) -> f64 {
    let r = n.log2() / alpha.log2();
    let near = r.round();
    if (r - near).abs() < 1e-9 {
        near
    } else {
        r.ceil()
    }
}

/// Per-level cost times the number of levels, with the ceiling.
pub fn c0(n: f64, alpha: f64) -> f64 {
    (LEVEL_BASE + PER_SQRT * alpha.sqrt()) * level_count(n, alpha)
}

/// `c0` with a fractional level count.
pub fn c0_continuous(n: f64, alpha: f64) -> f64 {
    (LEVEL_BASE + PER_SQRT * alpha.sqrt()) * (n.log2() / alpha.log2())
}

pub fn c_msz(n: f64, beta: f64) -> f64 {
    WALK_BASE + n.cbrt() * (PER_SQRT / beta.sqrt() + SAMPLE_SCAN * beta)
}

/// `k` levels above a straight walk among `n / alpha^k` sites.
pub fn c_k(n: f64, k: f64, alpha: f64) -> f64 {
    c_walk(n / alpha.powf(k)) + LEVEL_STEP * k + k * c_walk(alpha)
}

/// `k` levels above a sampled walk among `n / alpha^k` sites.
pub fn c_star_k(n: f64, k: f64, alpha: f64, beta: f64) -> f64 {
    c_msz(n / alpha.powf(k), beta) + LEVEL_STEP * k + k * c_walk(alpha)
}

/// Cost of a structure with `levels` levels in total (at least 1).
pub fn levels_cost(n: f64, levels: u32, alpha: f64) -> f64 {
    c_k(n, levels.saturating_sub(1) as f64, alpha)
}

/// Sampled-start cost of a structure with `levels` levels in total.
pub fn levels_cost_sampled(n: f64, levels: u32, alpha: f64, beta: f64) -> f64 {
    c_star_k(n, levels.saturating_sub(1) as f64, alpha, beta)
}

/// Smallest integer `n` in `1..=max_n` with `better(n) < worse(n)`.
pub fn crossover<F, G>(better: F, worse: G, max_n: u64) -> Option<u64>
where
    F: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    (1..=max_n).find(|&n| better(n as f64) < worse(n as f64))
}

/// The alpha minimizing `cost(alpha)` over an evenly stepped range.
pub fn argmin<F: Fn(f64) -> f64>(cost: F, lo: f64, hi: f64, step: f64) -> (f64, f64) {
    let mut best = (lo, cost(lo));
    let mut a = lo;
    while a <= hi + 1e-12 {
        let c = cost(a);
        if c < best.1 {
            best = (a, c);
        }
        a += step;
    }
    best
}

/// CSV of every model curve at the given sizes. Columns `c_L` and
/// `c_star_L` are structures with `L` levels in total.
pub fn table(ns: &[u64], alpha: f64, beta: f64, max_levels: u32) -> String {
    let mut s = String::from("n,c_walk,c0,c_msz");
    for l in 1..=max_levels {
        let _ = write!(s, ",c_{l}");
    }
    for l in 1..=max_levels {
        let _ = write!(s, ",c_star_{l}");
    }
    s.push('\n');
    for &n in ns {
        let x = n as f64;
        let c0v = if n >= 2 { c0(x, alpha) } else { 0.0 };
        let _ = write!(s, "{n},{:.4},{:.4},{:.4}", c_walk(x), c0v, c_msz(x, beta));
        for l in 1..=max_levels {
            let _ = write!(s, ",{:.4}", levels_cost(x, l, alpha));
        }
        for l in 1..=max_levels {
            let _ = write!(s, ",{:.4}", levels_cost_sampled(x, l, alpha, beta));
        }
        s.push('\n');
    }
    s
}
