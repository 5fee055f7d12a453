//! Nearest vertex search around a located triangle.

use super::{ccw, cw, Phase3Mode, TriangleRef, Triangulation, VertexRef};
use crate::predicates::{angle_acute_at, squared_distance, Point};
use crate::trace::Counters;

/// Small memo of distances already computed during one search.
struct Distances {
    q: Point,
    seen: Vec<(VertexRef, u64)>,
}

impl Distances {
    fn new(q: Point) -> Self {
        Distances {
            q,
            seen: Vec::with_capacity(16),
        }
    }

    fn get(&mut self, tri: &Triangulation, v: VertexRef, c: &mut Counters) -> u64 {
        if let Some(&(_, d)) = self.seen.iter().find(|(w, _)| *w == v) {
            return d;
        }
        c.distance_computations += 1;
        let d = squared_distance(tri.point(v), self.q);
        self.seen.push((v, d));
        d
    }
}

impl Triangulation {
    /// Nearest vertex to `q` starting from the triangle `t` that holds it.
    /// Ties go to the smaller insertion stamp.
    pub fn nearest_from_triangle(
        &self,
        t: TriangleRef,
        q: Point,
        mode: Phase3Mode,
        c: &mut Counters,
    ) -> VertexRef {
        match mode {
            Phase3Mode::Modified => self.nearest_corner(t, q, c),
            Phase3Mode::Exact => self.nearest_exact(t, q, c),
        }
    }

    fn key(&self, v: VertexRef, d: u64) -> (u64, u64) {
        (d, self.stamp(v))
    }

    fn nearest_corner(&self, t: TriangleRef, q: Point, c: &mut Counters) -> VertexRef {
        c.phase3_visits += 1;
        let mut best: Option<(VertexRef, (u64, u64))> = None;
        for v in self.tris[t.index()].v {
            if v.is_infinite() {
                continue;
            }
            c.distance_computations += 1;
            let k = self.key(v, squared_distance(self.point(v), q));
            if best.is_none_or(|(_, b)| k < b) {
                best = Some((v, k));
            }
        }
        best.expect("triangle without finite vertex").0
    }

    fn nearest_exact(&self, t: TriangleRef, q: Point, c: &mut Counters) -> VertexRef {
        let mut dist = Distances::new(q);
        let mut visited: Vec<TriangleRef> = vec![t];
        let mut queue: Vec<(TriangleRef, bool)> = vec![(t, true)];
        let mut best: Option<(VertexRef, (u64, u64))> = None;
        while let Some((x, first)) = queue.pop() {
            c.phase3_visits += 1;
            let vs = self.tris[x.index()].v;
            // Nearest corner of this triangle.
            let mut local: Option<(usize, (u64, u64))> = None;
            for (i, &v) in vs.iter().enumerate() {
                if v.is_infinite() {
                    continue;
                }
                let k = self.key(v, dist.get(self, v, c));
                if local.is_none_or(|(_, b)| k < b) {
                    local = Some((i, k));
                }
            }
            let Some((wi, wk)) = local else { continue };
            let w = vs[wi];
            if best.is_none_or(|(_, b)| wk < b) {
                best = Some((w, wk));
            }
            // Expand through the two edges at w: w - v[ccw] is opposite
            // v[cw] and vice versa.
            for (other, across) in [(ccw(wi), cw(wi)), (cw(wi), ccw(wi))] {
                let w2 = vs[other];
                if w2.is_infinite() {
                    continue;
                }
                let u = self.tris[x.index()].n[across];
                if visited.contains(&u) || self.is_infinite(u) {
                    continue;
                }
                if !first {
                    c.angle_tests += 1;
                    if !angle_acute_at(self.point(w), q, self.point(w2)) {
                        continue;
                    }
                }
                visited.push(u);
                queue.push((u, false));
            }
        }
        let (start, _) = best.expect("triangle without finite vertex");
        self.polish(start, &mut dist, c)
    }

    /// Greedy descent along edges, then the lowest stamp among equally near
    /// neighbors. In a Delaunay triangulation a vertex with no strictly
    /// nearer neighbor is at the minimum distance, and the sites at that
    /// distance are connected by edges.
    fn polish(&self, start: VertexRef, dist: &mut Distances, c: &mut Counters) -> VertexRef {
        let mut cur = start;
        let mut d = dist.get(self, cur, c);
        'descend: loop {
            for w in self.neighbors_of(cur) {
                let dw = dist.get(self, w, c);
                if dw < d {
                    cur = w;
                    d = dw;
                    continue 'descend;
                }
            }
            break;
        }
        let mut best = cur;
        let mut stack = vec![cur];
        let mut tie = vec![cur];
        while let Some(x) = stack.pop() {
            for w in self.neighbors_of(x) {
                if tie.contains(&w) || dist.get(self, w, c) != d {
                    continue;
                }
                tie.push(w);
                stack.push(w);
                if self.stamp(w) < self.stamp(best) {
                    best = w;
                }
            }
        }
        best
    }

    /// Nearest site by linear scan; ties go to the smaller stamp.
    pub fn nearest_linear(&self, q: Point) -> Option<VertexRef> {
        self.vertices()
            .min_by_key(|&v| (squared_distance(self.point(v), q), self.stamp(v)))
    }
}
