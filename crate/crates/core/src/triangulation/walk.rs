//! Point location inside one triangulation.

use super::{ccw, cw, TriangleRef, Triangulation, VertexRef};
use crate::predicates::{orientation, Orientation, Point};
use crate::trace::Counters;

/// Where a point falls relative to the triangulation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Position {
    /// Coincides with a vertex.
    Vertex(VertexRef),
    /// On the open edge opposite vertex `i` of the finite triangle.
    Edge(TriangleRef, usize),
    /// Strictly inside a finite triangle.
    Interior(TriangleRef),
    /// Strictly outside the hull edge of this infinite triangle.
    Outside(TriangleRef),
}

/// Index of the infinite vertex of `t`, if any.
pub(crate) fn infinite_index(v: &[VertexRef; 3]) -> Option<usize> {
    v.iter().position(|w| w.is_infinite())
}

/// Whether `p` lies strictly between `a` and `b` on their common line.
fn strictly_between(a: Point, b: Point, p: Point) -> bool {
    let d1 = (p.x as i64 - a.x as i64) * (b.x as i64 - a.x as i64)
        + (p.y as i64 - a.y as i64) * (b.y as i64 - a.y as i64);
    let d2 = (p.x as i64 - b.x as i64) * (a.x as i64 - b.x as i64)
        + (p.y as i64 - b.y as i64) * (a.y as i64 - b.y as i64);
    d1 > 0 && d2 > 0
}

enum Step {
    Done(Position),
    Move(TriangleRef),
}

impl Triangulation {
    /// Hull edge `(a, b)` of an infinite triangle; `p` is outside iff
    /// `orientation(a, b, p)` is counterclockwise.
    pub(crate) fn hull_edge(&self, t: TriangleRef) -> (VertexRef, VertexRef, usize) {
        let v = self.tris[t.index()].v;
        let k = infinite_index(&v).expect("not an infinite triangle");
        (v[ccw(k)], v[cw(k)], k)
    }

    /// One step of the visibility walk: either settles `q` in `t` or names
    /// the neighbor to move to. `from` is the triangle we came from.
    fn visibility_step(
        &self,
        t: TriangleRef,
        from: Option<TriangleRef>,
        q: Point,
        tests: &mut u64,
    ) -> Step {
        let s = &self.tris[t.index()];
        if let Some(k) = infinite_index(&s.v) {
            let (a, b) = (s.v[ccw(k)], s.v[cw(k)]);
            let (pa, pb) = (self.point(a), self.point(b));
            *tests += 1;
            return match orientation(pa, pb, q) {
                Orientation::Ccw => Step::Done(Position::Outside(t)),
                Orientation::Cw => Step::Move(s.n[k]),
                Orientation::Collinear => {
                    if q == pa {
                        Step::Done(Position::Vertex(a))
                    } else if q == pb {
                        Step::Done(Position::Vertex(b))
                    } else if strictly_between(pa, pb, q) {
                        let u = s.n[k];
                        Step::Done(Position::Edge(u, self.mirror_index(t, k)))
                    } else if strictly_between(pa, q, pb) {
                        // Beyond b: the next hull edge starts at b.
                        Step::Move(s.n[ccw(k)])
                    } else {
                        Step::Move(s.n[cw(k)])
                    }
                }
            };
        }
        let pts = [self.point(s.v[0]), self.point(s.v[1]), self.point(s.v[2])];
        for (i, &p) in pts.iter().enumerate() {
            if p == q {
                return Step::Done(Position::Vertex(s.v[i]));
            }
        }
        let mut zero = None;
        let mut exit: Option<usize> = None;
        for i in 0..3 {
            if Some(s.n[i]) == from {
                // Known to be on the inner side of the entry edge.
                continue;
            }
            *tests += 1;
            match orientation(pts[ccw(i)], pts[cw(i)], q) {
                Orientation::Cw => {
                    // Two exits: take the one opposite the smaller vertex ref.
                    exit = match exit {
                        Some(e) if s.v[e] < s.v[i] => Some(e),
                        _ => Some(i),
                    };
                }
                Orientation::Collinear => zero = Some(i),
                Orientation::Ccw => {}
            }
        }
        if let Some(e) = exit {
            return Step::Move(s.n[e]);
        }
        if from.is_some() && zero.is_none() {
            // The entry edge may still hold q.
            if let Some(i) = (0..3).find(|&i| Some(s.n[i]) == from) {
                *tests += 1;
                if orientation(pts[ccw(i)], pts[cw(i)], q) == Orientation::Collinear {
                    zero = Some(i);
                }
            }
        }
        match zero {
            Some(i) => Step::Done(Position::Edge(t, i)),
            None => Step::Done(Position::Interior(t)),
        }
    }

    /// Visibility walk from `t`; robust on every input.
    pub(crate) fn walk_visibility(&self, t: TriangleRef, q: Point, tests: &mut u64) -> Position {
        self.walk_visibility_counted(t, q, tests, &mut 0)
    }

    /// Visibility walk that also counts the edges it crosses.
    pub(crate) fn walk_visibility_counted(
        &self,
        t: TriangleRef,
        q: Point,
        tests: &mut u64,
        crossings: &mut u64,
    ) -> Position {
        let mut cur = t;
        let mut from = None;
        let cap = self.live_tris + 16;
        for _ in 0..cap {
            match self.visibility_step(cur, from, q, tests) {
                Step::Done(pos) => return pos,
                Step::Move(next) => {
                    *crossings += 1;
                    from = Some(cur);
                    cur = next;
                }
            }
        }
        debug_assert!(false, "visibility walk did not terminate");
        self.locate_brute_force(q)
    }

    /// Classifies `q` by scanning every triangle.
    pub(crate) fn locate_brute_force(&self, q: Point) -> Position {
        let mut outside = None;
        for t in self.triangles() {
            let mut tests = 0;
            match self.visibility_step(t, None, q, &mut tests) {
                Step::Done(Position::Outside(u)) => outside = Some(u),
                Step::Done(pos) => return pos,
                Step::Move(_) => {}
            }
        }
        Position::Outside(outside.expect("point in no triangle"))
    }

    /// Classifies `q` relative to `t` and walks on if `t` does not hold it.
    pub(crate) fn settle(&self, t: TriangleRef, q: Point, tests: &mut u64) -> Position {
        self.walk_visibility(t, q, tests)
    }

    /// Finds an incident triangle of `v` whose wedge at `v` holds the ray
    /// toward `q`. The rotation direction follows the first test.
    ///
    /// Returns an infinite triangle when the ray leaves the hull through
    /// one of `v`'s hull edges; `q` is then strictly outside that edge.
    pub fn turn_around(&self, v: VertexRef, q: Point, c: &mut Counters) -> TriangleRef {
        self.turn_around_flags(v, q, c).0
    }

    /// `turn_around` plus whether `q` lies on the line through `v` and the
    /// wedge's right (first) or left (second) side.
    pub(crate) fn turn_around_flags(
        &self,
        v: VertexRef,
        q: Point,
        c: &mut Counters,
    ) -> (TriangleRef, bool, bool) {
        let pv = self.point(v);
        let mut t = self
            .incident_triangle(v)
            .expect("turn_around needs triangles");
        // Start from a finite incident triangle.
        let mut guard = 0;
        while self.is_infinite(t) {
            let i = self.index_of(t, v);
            t = self.tris[t.index()].n[ccw(i)];
            guard += 1;
            debug_assert!(guard < 4);
        }
        let cap = self.live_tris + 4;
        let i = self.index_of(t, v);
        let s = &self.tris[t.index()];
        let (a, b) = (s.v[ccw(i)], s.v[cw(i)]);
        c.phase1_orientation_tests += 1;
        let sa = orientation(pv, self.point(a), q);
        if sa == Orientation::Cw {
            // Rotate clockwise until q is left of (or on) v -> a'.
            let mut cur = t;
            for _ in 0..cap {
                let i = self.index_of(cur, v);
                let next = self.tris[cur.index()].n[cw(i)];
                if self.is_infinite(next) {
                    return (next, false, false);
                }
                let j = self.index_of(next, v);
                let a2 = self.tris[next.index()].v[ccw(j)];
                c.phase1_orientation_tests += 1;
                let o = orientation(pv, self.point(a2), q);
                if o != Orientation::Cw {
                    return (next, o == Orientation::Collinear, false);
                }
                cur = next;
            }
            debug_assert!(false, "turn_around did not terminate");
            return (t, false, false);
        }
        c.phase1_orientation_tests += 1;
        let sb = orientation(pv, self.point(b), q);
        if sb != Orientation::Ccw {
            return (
                t,
                sa == Orientation::Collinear,
                sb == Orientation::Collinear,
            );
        }
        let mut cur = t;
        for _ in 0..cap {
            let i = self.index_of(cur, v);
            let next = self.tris[cur.index()].n[ccw(i)];
            if self.is_infinite(next) {
                return (next, false, false);
            }
            let j = self.index_of(next, v);
            let b2 = self.tris[next.index()].v[cw(j)];
            c.phase1_orientation_tests += 1;
            let o = orientation(pv, self.point(b2), q);
            if o != Orientation::Ccw {
                return (next, false, o == Orientation::Collinear);
            }
            cur = next;
        }
        debug_assert!(false, "turn_around did not terminate");
        (t, false, false)
    }

    /// Walks along the segment `from -> q` starting at `start`, which holds
    /// `from` (possibly as a vertex). Returns the triangle holding `q`, or
    /// an infinite triangle whose outer side holds it.
    pub fn straight_walk(
        &self,
        start: TriangleRef,
        from: Point,
        q: Point,
        c: &mut Counters,
    ) -> TriangleRef {
        if from == q {
            return self.fallback(start, q, c);
        }
        if self.is_infinite(start) {
            let vs = self.tris[start.index()].v;
            return match vs
                .iter()
                .find(|w| !w.is_infinite() && self.point(**w) == from)
            {
                Some(&v) => self.walk_from_vertex_counted(v, q, c, true),
                None => self.fallback(start, q, c),
            };
        }
        let s = &self.tris[start.index()];
        let pts = [self.point(s.v[0]), self.point(s.v[1]), self.point(s.v[2])];
        if let Some(i) = pts.iter().position(|&p| p == from) {
            let v = s.v[i];
            let (a, b) = (pts[ccw(i)], pts[cw(i)]);
            c.phase2_orientation_tests += 2;
            let sa = orientation(from, a, q);
            let sb = orientation(from, b, q);
            if sa == Orientation::Ccw && sb == Orientation::Cw {
                return self.march(start, s.v[ccw(i)], s.v[cw(i)], from, q, c);
            }
            if sa != Orientation::Cw && sb != Orientation::Ccw {
                return self.fallback(start, q, c);
            }
            return self.walk_from_vertex_counted(v, q, c, true);
        }
        // `from` inside: pick the edge whose ends straddle the line.
        let mut side = [Orientation::Collinear; 3];
        for k in 0..3 {
            c.phase2_orientation_tests += 1;
            side[k] = orientation(from, q, pts[k]);
        }
        for k in 0..3 {
            if side[k] == Orientation::Cw && side[ccw(k)] == Orientation::Ccw {
                return self.march(start, s.v[k], s.v[ccw(k)], from, q, c);
            }
        }
        self.fallback(start, q, c)
    }

    /// Phase 1 then phase 2 from vertex `v`.
    pub fn walk_from_vertex(&self, v: VertexRef, q: Point, c: &mut Counters) -> TriangleRef {
        self.walk_from_vertex_counted(v, q, c, false)
    }

    fn walk_from_vertex_counted(
        &self,
        v: VertexRef,
        q: Point,
        c: &mut Counters,
        as_phase2: bool,
    ) -> TriangleRef {
        let pv = self.point(v);
        if pv == q {
            let t = self.incident_triangle(v).expect("walk needs triangles");
            return self.finite_around(t, v);
        }
        let mut local = Counters::default();
        let (t, on_a, on_b) = self.turn_around_flags(v, q, &mut local);
        if as_phase2 {
            c.phase2_orientation_tests += local.phase1_orientation_tests;
        } else {
            c.phase1_orientation_tests += local.phase1_orientation_tests;
        }
        if self.is_infinite(t) {
            return t;
        }
        if on_a || on_b {
            return self.fallback(t, q, c);
        }
        let i = self.index_of(t, v);
        let s = &self.tris[t.index()];
        self.march(t, s.v[ccw(i)], s.v[cw(i)], pv, q, c)
    }

    fn finite_around(&self, t: TriangleRef, v: VertexRef) -> TriangleRef {
        let mut cur = t;
        for _ in 0..4 {
            if !self.is_infinite(cur) {
                return cur;
            }
            let i = self.index_of(cur, v);
            cur = self.tris[cur.index()].n[ccw(i)];
        }
        t
    }

    /// Straight walk proper. `t` has the counterclockwise edge `r -> l`
    /// crossing the segment, `r` strictly right of `from -> q`, `l` strictly
    /// left.
    fn march(
        &self,
        t: TriangleRef,
        mut r: VertexRef,
        mut l: VertexRef,
        from: Point,
        q: Point,
        c: &mut Counters,
    ) -> TriangleRef {
        let mut cur = t;
        let cap = self.live_tris + 16;
        for _ in 0..cap {
            c.phase2_orientation_tests += 1;
            match orientation(self.point(r), self.point(l), q) {
                Orientation::Cw => {}
                Orientation::Ccw => return cur,
                // q on the exit edge: the current triangle holds it.
                Orientation::Collinear => return cur,
            }
            let k = self
                .opposite_of_edge(cur, r, l)
                .expect("march lost its exit edge");
            let u = self.tris[cur.index()].n[k];
            c.phase2_crossings += 1;
            let m = self.mirror_index(cur, k);
            let s = self.tris[u.index()].v[m];
            if s.is_infinite() {
                return u;
            }
            c.phase2_orientation_tests += 1;
            match orientation(from, q, self.point(s)) {
                Orientation::Ccw => l = s,
                Orientation::Cw => r = s,
                Orientation::Collinear => return self.fallback(u, q, c),
            }
            cur = u;
        }
        debug_assert!(false, "straight walk did not terminate");
        self.fallback(t, q, c)
    }

    /// Visibility walk used for degenerate segments; returns a triangle.
    fn fallback(&self, t: TriangleRef, q: Point, c: &mut Counters) -> TriangleRef {
        let mut tests = 0;
        let pos = self.walk_visibility_counted(t, q, &mut tests, &mut c.phase2_crossings);
        c.phase2_orientation_tests += tests;
        match pos {
            Position::Vertex(v) => {
                let t = self.incident_triangle(v).expect("vertex without triangle");
                self.finite_around(t, v)
            }
            Position::Edge(t, _) | Position::Interior(t) | Position::Outside(t) => t,
        }
    }

    /// Locates `q` starting from the most recently inserted vertex.
    ///
    /// Returns `None` while there are no triangles.
    pub fn locate(&self, q: Point, c: &mut Counters) -> Option<TriangleRef> {
        if !self.has_triangles {
            return None;
        }
        let start = if self.is_live_vertex(self.last_inserted) {
            self.last_inserted
        } else {
            self.vertices().next()?
        };
        Some(self.walk_from_vertex(start, q, c))
    }

    /// Whether `q` lies in the closed triangle `t`, or strictly outside the
    /// hull edge of an infinite `t`.
    pub fn contains(&self, t: TriangleRef, q: Point) -> bool {
        let s = &self.tris[t.index()];
        if let Some(k) = infinite_index(&s.v) {
            let (a, b) = (self.point(s.v[ccw(k)]), self.point(s.v[cw(k)]));
            return orientation(a, b, q) == Orientation::Ccw;
        }
        let [a, b, c] = [self.point(s.v[0]), self.point(s.v[1]), self.point(s.v[2])];
        orientation(a, b, q) != Orientation::Cw
            && orientation(b, c, q) != Orientation::Cw
            && orientation(c, a, q) != Orientation::Cw
    }
}
