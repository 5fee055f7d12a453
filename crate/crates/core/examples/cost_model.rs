// Evaluate the analytic location costs and where the curves cross.

use delaunay_hierarchy::costmodel::{
    argmin, c0_continuous, c_msz, c_walk, crossover, levels_cost, levels_cost_sampled, table,
};

fn main() {
    let n = 2f64.powi(20);
    let (alpha, cost) = argmin(|a| c0_continuous(n, a), 2.0, 200.0, 0.5);
    println!("best ratio for 2^20 sites: {alpha} ({cost:.1} operations)");

    let alpha = 40.0;
    let sampled = crossover(|n| c_msz(n, 1.0), c_walk, 10_000);
    let two = crossover(|n| levels_cost(n, 2, alpha), c_walk, 10_000);
    let two_vs_sampled = crossover(
        |n| levels_cost(n, 2, alpha),
        |n| levels_cost_sampled(n, 1, alpha, 1.0),
        10_000,
    );
    println!("sampled walk beats plain walk from n = {sampled:?}");
    println!("two levels beat plain walk from n = {two:?}");
    println!("two levels beat sampled walk from n = {two_vs_sampled:?}");

    print!(
        "{}",
        table(&[10, 100, 1000, 10_000, 100_000], alpha, 1.0, 3)
    );
}
