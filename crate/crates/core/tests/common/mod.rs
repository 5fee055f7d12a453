#![allow(dead_code)]

use std::collections::BTreeSet;

use delaunay_hierarchy::predicates::{in_circle, orientation, squared_distance};
use delaunay_hierarchy::{CirclePosition, Orientation, Point, Triangulation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Edge = (Point, Point);

fn key(p: Point) -> (i32, i32) {
    (p.x, p.y)
}

pub fn edge(a: Point, b: Point) -> Edge {
    if key(a) <= key(b) {
        (a, b)
    } else {
        (b, a)
    }
}

/// Delaunay edges by testing every triple against every other point.
/// Only meaningful when no four points are cocircular.
pub fn brute_force_delaunay_edges(pts: &[Point]) -> BTreeSet<((i32, i32), (i32, i32))> {
    let n = pts.len();
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, mut b, mut c) = (pts[i], pts[j], pts[k]);
                match orientation(a, b, c) {
                    Orientation::Collinear => continue,
                    Orientation::Cw => std::mem::swap(&mut b, &mut c),
                    Orientation::Ccw => {}
                }
                let empty = (0..n)
                    .filter(|&l| l != i && l != j && l != k)
                    .all(|l| in_circle(a, b, c, pts[l]) != CirclePosition::Inside);
                if empty {
                    for (p, q) in [(a, b), (b, c), (c, a)] {
                        let (p, q) = edge(p, q);
                        out.insert((key(p), key(q)));
                    }
                }
            }
        }
    }
    out
}

pub fn edge_keys(t: &Triangulation) -> BTreeSet<((i32, i32), (i32, i32))> {
    t.edge_points()
        .into_iter()
        .map(|(a, b)| {
            let (a, b) = edge(a, b);
            (key(a), key(b))
        })
        .collect()
}

pub fn random_points(seed: u64, n: usize, bound: i32) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let p = Point::new_unchecked(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if seen.insert(p) {
            out.push(p);
        }
    }
    out
}

pub fn nearest_distance(pts: impl IntoIterator<Item = Point>, q: Point) -> u64 {
    pts.into_iter()
        .map(|p| squared_distance(p, q))
        .min()
        .unwrap()
}

/// No four points cocircular and no three collinear.
pub fn in_general_position(pts: &[Point]) -> bool {
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, mut b, mut c) = (pts[i], pts[j], pts[k]);
                match orientation(a, b, c) {
                    Orientation::Collinear => return false,
                    Orientation::Cw => std::mem::swap(&mut b, &mut c),
                    Orientation::Ccw => {}
                }
                for l in k + 1..n {
                    if in_circle(a, b, c, pts[l]) == CirclePosition::Cocircular {
                        return false;
                    }
                }
            }
        }
    }
    true
}
