// Build a single Delaunay triangulation and inspect it.

use delaunay_hierarchy::{Point, Triangulation};

fn main() {
    let pts = [(0, 0), (8, 0), (8, 8), (0, 8), (3, 5), (6, 2)];
    let tri = Triangulation::from_points(pts.iter().map(|&(x, y)| Point::new(x, y).unwrap()));

    println!(
        "{} sites, {} finite triangles, {} on the hull",
        tri.len(),
        tri.finite_triangle_count(),
        tri.hull_size()
    );
    for (a, b) in tri.edge_points() {
        println!("edge ({}, {}) - ({}, {})", a.x, a.y, b.x, b.y);
    }
    assert!(tri.validate_exhaustive().is_empty());
}
