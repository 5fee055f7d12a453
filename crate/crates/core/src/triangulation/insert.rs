//! Incremental insertion with Lawson flips.

use super::walk::Position;
use super::{ccw, cw, Insertion, TriangleRef, Triangulation, VertexRef};
use crate::predicates::{in_circle, orientation, CirclePosition, Orientation, Point};
use crate::trace::Counters;

impl Triangulation {
    /// Inserts `p` with the next insertion stamp and tag 0.
    pub fn insert(&mut self, p: Point) -> Insertion {
        let stamp = self.next_stamp;
        self.insert_with(p, stamp, 0, &mut Counters::default())
    }

    /// Inserts `p`, locating it from the most recent vertex.
    pub fn insert_with(&mut self, p: Point, stamp: u64, tag: u32, c: &mut Counters) -> Insertion {
        let hint = self.locate(p, c);
        self.insert_located(p, hint, stamp, tag, c)
    }

    /// Inserts `p` given a triangle `hint` that holds it (as returned by a
    /// walk). A wrong hint costs a visibility walk, never correctness.
    ///
    /// Larger stamps mean later insertions; when `p` is cocircular with a
    /// triangle it is treated as inside, so the flip is done.
    pub fn insert_located(
        &mut self,
        p: Point,
        hint: Option<TriangleRef>,
        stamp: u64,
        tag: u32,
        c: &mut Counters,
    ) -> Insertion {
        if !self.has_triangles {
            if let Some(&v) = self.chain.iter().find(|&&v| self.point(v) == p) {
                return Insertion::Duplicate(v);
            }
            let v = self.alloc_vertex(p, stamp, tag);
            self.n_sites += 1;
            self.add_to_chain(v, c);
            self.last_inserted = v;
            return Insertion::Inserted(v);
        }
        let start = match hint {
            Some(t) if self.is_live_triangle(t) => t,
            _ => self.any_triangle(),
        };
        let mut tests = 0;
        let pos = self.settle(start, p, &mut tests);
        c.update_orientation_tests += tests;
        if let Position::Vertex(v) = pos {
            return Insertion::Duplicate(v);
        }
        let v = self.alloc_vertex(p, stamp, tag);
        self.n_sites += 1;
        self.insert_at(v, pos, c);
        self.last_inserted = v;
        Insertion::Inserted(v)
    }

    fn any_triangle(&self) -> TriangleRef {
        if self.is_live_vertex(self.last_inserted) {
            if let Some(t) = self.incident_triangle(self.last_inserted) {
                return t;
            }
        }
        self.triangles().next().expect("no triangle")
    }

    /// Places an allocated vertex into the structure (used by insertion and
    /// by the rebuild path of deletion).
    pub(crate) fn place_vertex(&mut self, v: VertexRef, c: &mut Counters) {
        if !self.has_triangles {
            self.add_to_chain(v, c);
            return;
        }
        let p = self.point(v);
        let start = self.any_triangle();
        let mut walk = Counters::default();
        let hint = if self.is_live_vertex(self.last_inserted) {
            self.walk_from_vertex(self.last_inserted, p, &mut walk)
        } else {
            start
        };
        let mut tests = walk.orientation_tests();
        let pos = self.settle(hint, p, &mut tests);
        c.update_orientation_tests += tests;
        debug_assert!(
            !matches!(pos, Position::Vertex(_)),
            "duplicate during rebuild"
        );
        self.insert_at(v, pos, c);
    }

    fn add_to_chain(&mut self, v: VertexRef, c: &mut Counters) {
        let p = self.point(v);
        if self.chain.len() >= 2 {
            let a = self.point(self.chain[0]);
            let b = self.point(self.chain[self.chain.len() - 1]);
            c.update_orientation_tests += 1;
            if orientation(a, b, p) != Orientation::Collinear {
                self.lift_chain(v);
                return;
            }
        }
        let pos = self
            .chain
            .binary_search_by_key(&p, |&w| self.point(w))
            .unwrap_err();
        self.chain.insert(pos, v);
    }

    fn insert_at(&mut self, v: VertexRef, pos: Position, c: &mut Counters) {
        match pos {
            Position::Interior(t) => self.split_triangle(t, v, c),
            Position::Edge(t, i) => self.split_edge(t, i, v, c),
            Position::Outside(t) => self.extend_hull(t, v, c),
            Position::Vertex(_) => unreachable!(),
        }
    }

    /// 1-to-3 split of `t` around the interior vertex `p`.
    fn split_triangle(&mut self, t: TriangleRef, p: VertexRef, c: &mut Counters) {
        let [a, b, cc] = self.tris[t.index()].v;
        let [na, nb, nc] = self.tris[t.index()].n;
        self.set_vertices(t, [p, b, cc]);
        let t2 = self.alloc_triangle([a, p, cc]);
        let t3 = self.alloc_triangle([a, b, p]);
        self.glue(t, b, cc, na);
        self.glue(t2, cc, a, nb);
        self.glue(t3, a, b, nc);
        self.glue(t, cc, p, t2);
        self.glue(t, p, b, t3);
        self.glue(t2, a, p, t3);
        for x in [t, t2, t3] {
            self.set_incident(x);
        }
        self.legalize(p, vec![t, t2, t3], c);
    }

    /// 2-to-4 split of the edge opposite vertex `i` of the finite `t`.
    fn split_edge(&mut self, t: TriangleRef, i: usize, p: VertexRef, c: &mut Counters) {
        let s = self.tris[t.index()].clone();
        let (x, b, cc) = (s.v[i], s.v[ccw(i)], s.v[cw(i)]);
        let u = s.n[i];
        let j = self.mirror_index(t, i);
        let us = self.tris[u.index()].clone();
        let d = us.v[j];
        let t_xb = s.n[cw(i)];
        let t_cx = s.n[ccw(i)];
        let u_bd = us.n[ccw(j)];
        let u_dc = us.n[cw(j)];
        self.set_vertices(t, [x, b, p]);
        self.set_vertices(u, [d, cc, p]);
        let t2 = self.alloc_triangle([x, p, cc]);
        let u2 = self.alloc_triangle([d, p, b]);
        self.glue(t, x, b, t_xb);
        self.glue(t, b, p, u2);
        self.glue(t, p, x, t2);
        self.glue(t2, p, cc, u);
        self.glue(t2, cc, x, t_cx);
        self.glue(u, d, cc, u_dc);
        self.glue(u, p, d, u2);
        self.glue(u2, b, d, u_bd);
        for y in [t, t2, u, u2] {
            self.set_incident(y);
        }
        self.legalize(p, vec![t, t2, u, u2], c);
    }

    /// Connects `p`, strictly outside the hull edge of `t`, to every hull
    /// edge it sees.
    fn extend_hull(&mut self, t: TriangleRef, p: VertexRef, c: &mut Counters) {
        let pp = self.point(p);
        let visible = |tri: &Self, x: TriangleRef, c: &mut Counters| {
            let (a, b, _) = tri.hull_edge(x);
            c.update_orientation_tests += 1;
            orientation(tri.point(a), tri.point(b), pp) == Orientation::Ccw
        };
        // Runs T_0 .. T_{r-1}, each (x_k, x_{k+1}, INF).
        let next = |tri: &Self, x: TriangleRef| {
            let (_, _, k) = tri.hull_edge(x);
            tri.tris[x.index()].n[ccw(k)]
        };
        let prev = |tri: &Self, x: TriangleRef| {
            let (_, _, k) = tri.hull_edge(x);
            tri.tris[x.index()].n[cw(k)]
        };
        let mut first = t;
        loop {
            let q = prev(self, first);
            if q == t || !visible(self, q, c) {
                break;
            }
            first = q;
        }
        let mut run = vec![first];
        let mut last = first;
        loop {
            let q = next(self, last);
            if q == first || !visible(self, q, c) {
                break;
            }
            run.push(q);
            last = q;
        }
        let u_left = prev(self, first);
        let u_right = next(self, last);
        let (x0, _, _) = self.hull_edge(first);
        let (_, xr, _) = self.hull_edge(last);
        for &x in &run {
            let (a, b, _) = self.hull_edge(x);
            let k = self.index_of(x, VertexRef::INFINITE);
            let mut v = self.tris[x.index()].v;
            v[k] = p;
            debug_assert_eq!((v[ccw(k)], v[cw(k)]), (a, b));
            self.set_vertices(x, v);
        }
        let left = self.alloc_triangle([x0, p, VertexRef::INFINITE]);
        let right = self.alloc_triangle([p, xr, VertexRef::INFINITE]);
        self.glue(first, p, x0, left);
        self.glue(last, xr, p, right);
        self.glue(left, p, VertexRef::INFINITE, right);
        self.glue(left, VertexRef::INFINITE, x0, u_left);
        self.glue(right, xr, VertexRef::INFINITE, u_right);
        for &x in &run {
            self.set_incident(x);
        }
        self.set_incident(left);
        self.set_incident(right);
        self.legalize(p, run, c);
    }

    /// Lawson flips around the new vertex `p`. Cocircular counts as inside.
    fn legalize(&mut self, p: VertexRef, mut stack: Vec<TriangleRef>, c: &mut Counters) {
        let pp = self.point(p);
        while let Some(t) = stack.pop() {
            let i = self.index_of(t, p);
            let u = self.tris[t.index()].n[i];
            let uv = self.tris[u.index()].v;
            if uv.contains(&VertexRef::INFINITE) {
                continue;
            }
            c.incircle_tests += 1;
            let pos = in_circle(self.point(uv[0]), self.point(uv[1]), self.point(uv[2]), pp);
            if pos != CirclePosition::Outside {
                let u2 = self.flip(t, i);
                stack.push(t);
                stack.push(u2);
            }
        }
    }

    /// Flips the edge opposite vertex `i` of `t`. With `t = (a, b, c)` and
    /// `d` across, `t` becomes `(a, b, d)` and the neighbor `(d, c, a)`.
    /// Returns the neighbor.
    pub(crate) fn flip(&mut self, t: TriangleRef, i: usize) -> TriangleRef {
        let s = self.tris[t.index()].clone();
        let (a, b, cc) = (s.v[i], s.v[ccw(i)], s.v[cw(i)]);
        let u = s.n[i];
        let j = self.mirror_index(t, i);
        let us = self.tris[u.index()].clone();
        let d = us.v[j];
        let t_ab = s.n[cw(i)];
        let t_ca = s.n[ccw(i)];
        let u_bd = us.n[ccw(j)];
        let u_dc = us.n[cw(j)];
        self.set_vertices(t, [a, b, d]);
        self.set_vertices(u, [d, cc, a]);
        self.tris[t.index()].n = [u_bd, u, t_ab];
        self.tris[u.index()].n = [t_ca, t, u_dc];
        self.glue(t, b, d, u_bd);
        self.glue(u, cc, a, t_ca);
        self.set_incident(t);
        self.set_incident(u);
        u
    }
}
