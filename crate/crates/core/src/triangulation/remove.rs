//! Vertex deletion: flip the vertex down to degree three (or onto the
//! hull), drop it, then restore the empty-circle property with flips.

use super::{ccw, TriangleRef, Triangulation, VertexRef};
use crate::predicates::{in_circle, orientation, CirclePosition, Orientation};
use crate::trace::Counters;

impl Triangulation {
    /// Removes `v`. Returns `false` if `v` is not a live finite vertex.
    pub fn delete_vertex(&mut self, v: VertexRef) -> bool {
        self.delete_vertex_counted(v, &mut Counters::default())
    }

    pub fn delete_vertex_counted(&mut self, v: VertexRef, c: &mut Counters) -> bool {
        if !self.is_live_vertex(v) {
            return false;
        }
        if !self.has_triangles {
            self.chain.retain(|&w| w != v);
        } else if self.n_sites <= 3 || self.rest_is_collinear(v, c) {
            self.collapse_to_chain(Some(v));
        } else {
            let star = self.star(v);
            let on_hull = star.iter().any(|&t| self.is_infinite(t));
            let done = if on_hull {
                self.remove_hull_vertex(v, c)
            } else {
                self.remove_interior_vertex(v, c)
            };
            if !done {
                self.rebuild_without(v, c);
            }
        }
        self.free_vertex(v);
        self.n_sites -= 1;
        if self.last_inserted == v || !self.is_live_vertex(self.last_inserted) {
            let any = self.vertices().next();
            self.last_inserted = any.unwrap_or(VertexRef::INFINITE);
        }
        true
    }

    /// Whether removing `v` leaves only collinear sites. That can only
    /// happen when every finite triangle touches `v`.
    fn rest_is_collinear(&self, v: VertexRef, c: &mut Counters) -> bool {
        let star = self.star(v);
        let finite = star.iter().filter(|&&t| !self.is_infinite(t)).count();
        if finite != self.finite_triangle_count() {
            return false;
        }
        let ring = self.neighbors_of(v);
        let (a, b) = (self.point(ring[0]), self.point(ring[1]));
        ring[2..].iter().all(|&w| {
            c.update_orientation_tests += 1;
            orientation(a, b, self.point(w)) == Orientation::Collinear
        })
    }

    /// Finds a flippable edge `v - w` among the link positions in `range`
    /// of the counterclockwise link `ring` and flips it.
    fn flip_one(
        &mut self,
        v: VertexRef,
        ring: &[(VertexRef, TriangleRef)],
        range: std::ops::Range<usize>,
        created: &mut Vec<TriangleRef>,
        c: &mut Counters,
    ) -> bool {
        let m = ring.len();
        let pv = self.point(v);
        for j in range {
            let prev = ring[(j + m - 1) % m].0;
            let (w, t) = ring[j];
            let next = ring[(j + 1) % m].0;
            if prev.is_infinite() || next.is_infinite() || w.is_infinite() {
                continue;
            }
            let (pp, pw, pn) = (self.point(prev), self.point(w), self.point(next));
            c.update_orientation_tests += 1;
            if orientation(pp, pw, pn) != Orientation::Ccw {
                continue;
            }
            c.update_orientation_tests += 1;
            if orientation(pv, pp, pn) == Orientation::Cw {
                continue;
            }
            // `t` = (v, w, next); the edge v - w is opposite `next`.
            let i = self.index_of(t, next);
            let u = self.flip(t, i);
            // flip leaves the ear (next's side) in the neighbor.
            let ear = if self.tris[u.index()].v.contains(&v) {
                t
            } else {
                u
            };
            created.push(ear);
            return true;
        }
        false
    }

    /// Counterclockwise link of `v`: each neighbor `w` with the triangle
    /// `(v, w, next)`.
    fn ring(&self, v: VertexRef) -> Vec<(VertexRef, TriangleRef)> {
        self.star(v)
            .into_iter()
            .map(|t| {
                let i = self.index_of(t, v);
                (self.tris[t.index()].v[ccw(i)], t)
            })
            .collect()
    }

    fn remove_interior_vertex(&mut self, v: VertexRef, c: &mut Counters) -> bool {
        let mut created = Vec::new();
        loop {
            let ring = self.ring(v);
            if ring.len() <= 3 {
                break;
            }
            let m = ring.len();
            if !self.flip_one(v, &ring, 0..m, &mut created, c) {
                return false;
            }
        }
        let ring = self.ring(v);
        debug_assert_eq!(ring.len(), 3);
        let [(a, t0), (b, t1), (cc, t2)] = [ring[0], ring[1], ring[2]];
        // Outer neighbors across the link edges a-b, b-c, c-a.
        let out = |tri: &Self, t: TriangleRef| {
            let i = tri.index_of(t, v);
            tri.tris[t.index()].n[i]
        };
        let (o0, o1, o2) = (out(self, t0), out(self, t1), out(self, t2));
        self.free_triangle(t1);
        self.free_triangle(t2);
        self.set_vertices(t0, [a, b, cc]);
        self.glue(t0, a, b, o0);
        self.glue(t0, b, cc, o1);
        self.glue(t0, cc, a, o2);
        self.set_incident(t0);
        created.push(t0);
        self.restore_delaunay(created, c);
        true
    }

    fn remove_hull_vertex(&mut self, v: VertexRef, c: &mut Counters) -> bool {
        let mut created = Vec::new();
        loop {
            let ring = self.ring(v);
            // Rotate so the ring reads w_0 .. w_m, INF.
            let k = ring
                .iter()
                .position(|(w, _)| w.is_infinite())
                .expect("hull vertex without infinite neighbor");
            let ring: Vec<_> = ring[k + 1..].iter().chain(&ring[..=k]).copied().collect();
            let m = ring.len() - 2;
            if m < 2 {
                break;
            }
            if !self.flip_one(v, &ring, 1..m, &mut created, c) {
                break;
            }
        }
        let ring = self.ring(v);
        let k = ring.iter().position(|(w, _)| w.is_infinite()).unwrap();
        let ring: Vec<_> = ring[k + 1..].iter().chain(&ring[..=k]).copied().collect();
        let m = ring.len() - 2;
        // The chain w_0 .. w_m must now be the new hull: no convex turn.
        for j in 1..m {
            let (p, w, n) = (ring[j - 1].0, ring[j].0, ring[j + 1].0);
            c.update_orientation_tests += 1;
            if orientation(self.point(p), self.point(w), self.point(n)) == Orientation::Ccw {
                return false;
            }
        }
        // Triangles (v, w_m, INF) and (v, INF, w_0).
        let a_tri = ring[m].1;
        let b_tri = ring[m + 1].1;
        let outer = |tri: &Self, t: TriangleRef| {
            let i = tri.index_of(t, v);
            tri.tris[t.index()].n[i]
        };
        let o_a = outer(self, a_tri);
        let o_b = outer(self, b_tri);
        let w0 = ring[0].0;
        let wm = ring[m].0;
        let mut finite = Vec::with_capacity(m);
        for &(_, t) in &ring[..m] {
            let i = self.index_of(t, v);
            let mut vs = self.tris[t.index()].v;
            vs[i] = VertexRef::INFINITE;
            self.set_vertices(t, vs);
            finite.push(t);
        }
        self.free_triangle(a_tri);
        self.free_triangle(b_tri);
        let first = ring[0].1;
        let last = ring[m - 1].1;
        self.glue(last, wm, VertexRef::INFINITE, o_a);
        self.glue(first, VertexRef::INFINITE, w0, o_b);
        for &t in &finite {
            self.set_incident(t);
        }
        self.restore_delaunay(created, c);
        true
    }

    /// Lawson flips with strict inside tests until every edge of the
    /// touched region is locally Delaunay.
    fn restore_delaunay(&mut self, mut stack: Vec<TriangleRef>, c: &mut Counters) {
        while let Some(t) = stack.pop() {
            if !self.is_live_triangle(t) || self.is_infinite(t) {
                continue;
            }
            for i in 0..3 {
                let u = self.tris[t.index()].n[i];
                if self.is_infinite(u) {
                    continue;
                }
                let j = self.mirror_index(t, i);
                let d = self.tris[u.index()].v[j];
                let [a, b, cc] = self.triangle_points(t);
                c.incircle_tests += 1;
                if in_circle(a, b, cc, self.point(d)) == CirclePosition::Inside {
                    let u2 = self.flip(t, i);
                    stack.push(t);
                    stack.push(u2);
                    break;
                }
            }
        }
    }

    /// Rebuilds the structure from scratch without `v`, keeping every other
    /// vertex reference. Only reached if no flip sequence was found.
    fn rebuild_without(&mut self, v: VertexRef, c: &mut Counters) {
        debug_assert!(false, "deletion fell back to a rebuild");
        let mut rest: Vec<VertexRef> = self.vertices().filter(|&w| w != v).collect();
        rest.sort_by_key(|&w| self.stamp(w));
        for t in self.triangles().collect::<Vec<_>>() {
            self.free_triangle(t);
        }
        for &w in &rest {
            self.verts[w.index()].incident = TriangleRef::NONE;
        }
        self.chain.clear();
        self.has_triangles = false;
        self.last_inserted = VertexRef::INFINITE;
        for w in rest {
            self.place_vertex(w, c);
            self.last_inserted = w;
        }
    }
}
