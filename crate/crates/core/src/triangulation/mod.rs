//! A single dynamic Delaunay triangulation.
//!
//! Triangles store three counterclockwise vertices and three neighbors, the
//! neighbor `i` lying across the edge opposite vertex `i`. The convex hull is
//! closed off by one infinite vertex: every hull edge `b -> a` (hull listed
//! counterclockwise) carries an infinite triangle `(a, b, INF)`, so walks and
//! insertions outside the hull need no special casing.
//!
//! While the sites are fewer than three or all collinear there is no
//! triangle at all; the sites are kept as a sorted chain and queries fall
//! back to linear scans.
//!
//! Vertex and triangle slots are recycled through free lists, so references
//! stay valid until the element they name is deleted.

mod insert;
mod nearest;
mod remove;
mod validate;
mod walk;

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::predicates::{orientation, Orientation, Point};

pub use validate::Violation;

const NIL: u32 = u32::MAX;

/// Handle to a vertex of one triangulation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexRef(pub(crate) u32);

/// Handle to a triangle of one triangulation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangleRef(pub(crate) u32);

impl VertexRef {
    /// The distinguished vertex closing the convex hull.
    pub const INFINITE: VertexRef = VertexRef(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_infinite(self) -> bool {
        self == Self::INFINITE
    }
}

impl TriangleRef {
    const NONE: TriangleRef = TriangleRef(NIL);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// How the per-level nearest vertex is searched after the walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Phase3Mode {
    /// Pruned traversal around the containing triangle; returns the true
    /// nearest site.
    Exact,
    /// Nearest of the containing triangle's corners. Cheaper, but not the
    /// true nearest site in general.
    #[default]
    Modified,
}

/// Result of an insertion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Insertion {
    Inserted(VertexRef),
    /// The point already exists; nothing was changed.
    Duplicate(VertexRef),
}

impl Insertion {
    pub fn vertex(self) -> VertexRef {
        match self {
            Insertion::Inserted(v) | Insertion::Duplicate(v) => v,
        }
    }
}

#[derive(Clone, Debug)]
struct VertexSlot {
    point: Point,
    stamp: u64,
    tag: u32,
    incident: TriangleRef,
    alive: bool,
}

#[derive(Clone, Debug)]
struct TriangleSlot {
    v: [VertexRef; 3],
    n: [TriangleRef; 3],
    alive: bool,
}

#[inline]
pub(crate) fn ccw(i: usize) -> usize {
    if i == 2 {
        0
    } else {
        i + 1
    }
}

#[inline]
pub(crate) fn cw(i: usize) -> usize {
    if i == 0 {
        2
    } else {
        i - 1
    }
}

/// Dynamic planar Delaunay triangulation over integer points.
#[derive(Clone, Debug)]
pub struct Triangulation {
    verts: Vec<VertexSlot>,
    tris: Vec<TriangleSlot>,
    free_verts: Vec<u32>,
    free_tris: Vec<u32>,
    /// Sites sorted lexicographically while there is no triangle.
    chain: Vec<VertexRef>,
    has_triangles: bool,
    n_sites: usize,
    live_tris: usize,
    infinite_tris: usize,
    next_stamp: u64,
    /// Start vertex for standalone location.
    last_inserted: VertexRef,
}

impl Default for Triangulation {
    fn default() -> Self {
        Self::new()
    }
}

impl Triangulation {
    pub fn new() -> Self {
        let infinite = VertexSlot {
            point: Point::new_unchecked(0, 0),
            stamp: 0,
            tag: u32::MAX,
            incident: TriangleRef::NONE,
            alive: true,
        };
        Triangulation {
            verts: vec![infinite],
            tris: Vec::new(),
            free_verts: Vec::new(),
            free_tris: Vec::new(),
            chain: Vec::new(),
            has_triangles: false,
            n_sites: 0,
            live_tris: 0,
            infinite_tris: 0,
            next_stamp: 1,
            last_inserted: VertexRef::INFINITE,
        }
    }

    /// Builds a triangulation by inserting `points` in order.
    pub fn from_points<I: IntoIterator<Item = Point>>(points: I) -> Self {
        let mut t = Triangulation::new();
        for p in points {
            t.insert(p);
        }
        t
    }

    /// Number of sites.
    pub fn len(&self) -> usize {
        self.n_sites
    }

    pub fn is_empty(&self) -> bool {
        self.n_sites == 0
    }

    /// 2 once three non-collinear sites exist, 1 for collinear sites, 0 for
    /// at most one site and -1 when empty.
    pub fn dimension(&self) -> i32 {
        if self.has_triangles {
            2
        } else if self.n_sites >= 2 {
            1
        } else {
            self.n_sites as i32 - 1
        }
    }

    pub fn has_triangles(&self) -> bool {
        self.has_triangles
    }

    pub fn point(&self, v: VertexRef) -> Point {
        debug_assert!(!v.is_infinite(), "the infinite vertex has no point");
        self.verts[v.index()].point
    }

    /// Insertion stamp; later insertions carry larger stamps.
    pub fn stamp(&self, v: VertexRef) -> u64 {
        self.verts[v.index()].stamp
    }

    /// Caller supplied payload attached at insertion.
    pub fn tag(&self, v: VertexRef) -> u32 {
        self.verts[v.index()].tag
    }

    pub fn is_live_vertex(&self, v: VertexRef) -> bool {
        !v.is_infinite() && self.verts.get(v.index()).is_some_and(|s| s.alive)
    }

    pub fn is_live_triangle(&self, t: TriangleRef) -> bool {
        self.tris.get(t.index()).is_some_and(|s| s.alive)
    }

    /// Live finite vertices.
    pub fn vertices(&self) -> impl Iterator<Item = VertexRef> + '_ {
        self.verts
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, s)| s.alive)
            .map(|(i, _)| VertexRef(i as u32))
    }

    /// Upper bound (exclusive) on vertex slot indices, for random probing.
    pub fn vertex_slots(&self) -> usize {
        self.verts.len()
    }

    pub fn vertex_at_slot(&self, slot: usize) -> Option<VertexRef> {
        let v = VertexRef(slot as u32);
        self.is_live_vertex(v).then_some(v)
    }

    pub fn vertices_of(&self, t: TriangleRef) -> [VertexRef; 3] {
        self.tris[t.index()].v
    }

    pub fn neighbor(&self, t: TriangleRef, i: usize) -> TriangleRef {
        self.tris[t.index()].n[i]
    }

    pub fn is_infinite(&self, t: TriangleRef) -> bool {
        self.tris[t.index()].v.contains(&VertexRef::INFINITE)
    }

    /// All live triangles, infinite ones included.
    pub fn triangles(&self) -> impl Iterator<Item = TriangleRef> + '_ {
        self.tris
            .iter()
            .enumerate()
            .filter(|(_, s)| s.alive)
            .map(|(i, _)| TriangleRef(i as u32))
    }

    pub fn finite_triangles(&self) -> impl Iterator<Item = TriangleRef> + '_ {
        self.triangles().filter(move |&t| !self.is_infinite(t))
    }

    pub fn finite_triangle_count(&self) -> usize {
        self.live_tris - self.infinite_tris
    }

    /// Number of convex hull edges; zero without triangles.
    pub fn hull_size(&self) -> usize {
        self.infinite_tris
    }

    /// The corner points of a finite triangle.
    pub fn triangle_points(&self, t: TriangleRef) -> [Point; 3] {
        let [a, b, c] = self.vertices_of(t);
        [self.point(a), self.point(b), self.point(c)]
    }

    /// A triangle incident to `v`, or `None` while there are no triangles.
    pub fn incident_triangle(&self, v: VertexRef) -> Option<TriangleRef> {
        let t = self.verts[v.index()].incident;
        (t != TriangleRef::NONE).then_some(t)
    }

    /// Sites kept in line order while there are no triangles.
    pub fn chain(&self) -> &[VertexRef] {
        &self.chain
    }

    /// Triangles around `v` in counterclockwise order.
    pub fn star(&self, v: VertexRef) -> Vec<TriangleRef> {
        let mut out = Vec::with_capacity(8);
        let Some(start) = self.incident_triangle(v) else {
            return out;
        };
        let mut t = start;
        loop {
            out.push(t);
            let i = self.index_of(t, v);
            t = self.tris[t.index()].n[ccw(i)];
            if t == start || out.len() > self.live_tris {
                break;
            }
        }
        out
    }

    /// Finite vertices adjacent to `v`, counterclockwise.
    pub fn neighbors_of(&self, v: VertexRef) -> Vec<VertexRef> {
        if !self.has_triangles {
            return self.chain_neighbors(v);
        }
        self.star(v)
            .into_iter()
            .map(|t| {
                let i = self.index_of(t, v);
                self.tris[t.index()].v[ccw(i)]
            })
            .filter(|w| !w.is_infinite())
            .collect()
    }

    fn chain_neighbors(&self, v: VertexRef) -> Vec<VertexRef> {
        let Some(pos) = self.chain.iter().position(|&w| w == v) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        if pos > 0 {
            out.push(self.chain[pos - 1]);
        }
        if pos + 1 < self.chain.len() {
            out.push(self.chain[pos + 1]);
        }
        out
    }

    /// Number of finite neighbors of `v`.
    pub fn degree(&self, v: VertexRef) -> usize {
        self.neighbors_of(v).len()
    }

    /// Finite edges as vertex pairs with the smaller reference first.
    pub fn edges(&self) -> Vec<(VertexRef, VertexRef)> {
        if !self.has_triangles {
            return self.chain.windows(2).map(|w| order(w[0], w[1])).collect();
        }
        let mut out = Vec::with_capacity(self.n_sites * 3);
        for t in self.triangles() {
            let s = &self.tris[t.index()];
            for i in 0..3 {
                let a = s.v[ccw(i)];
                let b = s.v[cw(i)];
                if a.is_infinite() || b.is_infinite() {
                    continue;
                }
                // Each finite edge is reported by the triangle seeing it as a -> b
                // with a < b; hull edges have an infinite triangle on one side.
                let other = s.n[i];
                let other_infinite = self.is_infinite(other);
                if a < b || other_infinite {
                    out.push(order(a, b));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Finite edges as point pairs, each pair sorted.
    pub fn edge_points(&self) -> Vec<(Point, Point)> {
        let mut out: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let (p, q) = (self.point(a), self.point(b));
                if p <= q {
                    (p, q)
                } else {
                    (q, p)
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Text dump, one triangle per line: `tid: v0 v1 v2 | n0 n1 n2`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let name = |v: VertexRef| {
            if v.is_infinite() {
                "INF".to_string()
            } else {
                v.0.to_string()
            }
        };
        for t in self.triangles() {
            let slot = &self.tris[t.index()];
            let _ = writeln!(
                s,
                "{}: {} {} {} | {} {} {}",
                t.0,
                name(slot.v[0]),
                name(slot.v[1]),
                name(slot.v[2]),
                slot.n[0].0,
                slot.n[1].0,
                slot.n[2].0
            );
        }
        s
    }

    pub(crate) fn index_of(&self, t: TriangleRef, v: VertexRef) -> usize {
        let s = &self.tris[t.index()].v;
        if s[0] == v {
            0
        } else if s[1] == v {
            1
        } else {
            debug_assert_eq!(s[2], v, "vertex {v:?} not in triangle {t:?}");
            2
        }
    }

    /// Index of the vertex opposite the directed edge `a -> b` of `t`.
    fn opposite_of_edge(&self, t: TriangleRef, a: VertexRef, b: VertexRef) -> Option<usize> {
        let s = &self.tris[t.index()].v;
        (0..3).find(|&k| s[ccw(k)] == a && s[cw(k)] == b)
    }

    /// Makes `t` and `x` neighbors across `t`'s directed edge `a -> b`.
    fn glue(&mut self, t: TriangleRef, a: VertexRef, b: VertexRef, x: TriangleRef) {
        let k = self
            .opposite_of_edge(t, a, b)
            .expect("glue: edge missing from first triangle");
        let m = self
            .opposite_of_edge(x, b, a)
            .expect("glue: reversed edge missing from second triangle");
        self.tris[t.index()].n[k] = x;
        self.tris[x.index()].n[m] = t;
    }

    /// Index in `t.n[i]` of the vertex facing `t`.
    pub(crate) fn mirror_index(&self, t: TriangleRef, i: usize) -> usize {
        let s = &self.tris[t.index()];
        let u = s.n[i];
        self.opposite_of_edge(u, s.v[cw(i)], s.v[ccw(i)])
            .expect("broken adjacency")
    }

    fn alloc_triangle(&mut self, v: [VertexRef; 3]) -> TriangleRef {
        self.live_tris += 1;
        if v.contains(&VertexRef::INFINITE) {
            self.infinite_tris += 1;
        }
        let slot = TriangleSlot {
            v,
            n: [TriangleRef::NONE; 3],
            alive: true,
        };
        if let Some(i) = self.free_tris.pop() {
            self.tris[i as usize] = slot;
            TriangleRef(i)
        } else {
            self.tris.push(slot);
            TriangleRef(self.tris.len() as u32 - 1)
        }
    }

    fn free_triangle(&mut self, t: TriangleRef) {
        let s = &mut self.tris[t.index()];
        debug_assert!(s.alive);
        s.alive = false;
        self.live_tris -= 1;
        if s.v.contains(&VertexRef::INFINITE) {
            self.infinite_tris -= 1;
        }
        self.free_tris.push(t.0);
    }

    /// Rewrites the vertices of a live triangle, keeping the counts right.
    fn set_vertices(&mut self, t: TriangleRef, v: [VertexRef; 3]) {
        let was = self.tris[t.index()].v.contains(&VertexRef::INFINITE);
        let now = v.contains(&VertexRef::INFINITE);
        match (was, now) {
            (true, false) => self.infinite_tris -= 1,
            (false, true) => self.infinite_tris += 1,
            _ => {}
        }
        self.tris[t.index()].v = v;
    }

    fn alloc_vertex(&mut self, point: Point, stamp: u64, tag: u32) -> VertexRef {
        let slot = VertexSlot {
            point,
            stamp,
            tag,
            incident: TriangleRef::NONE,
            alive: true,
        };
        self.next_stamp = self.next_stamp.max(stamp + 1);
        if let Some(i) = self.free_verts.pop() {
            self.verts[i as usize] = slot;
            VertexRef(i)
        } else {
            self.verts.push(slot);
            VertexRef(self.verts.len() as u32 - 1)
        }
    }

    fn free_vertex(&mut self, v: VertexRef) {
        let s = &mut self.verts[v.index()];
        s.alive = false;
        s.incident = TriangleRef::NONE;
        self.free_verts.push(v.0);
    }

    fn set_incident(&mut self, t: TriangleRef) {
        let v = self.tris[t.index()].v;
        for w in v {
            self.verts[w.index()].incident = t;
        }
    }

    /// Replaces every triangle by `faces`, wiring adjacency from shared edges.
    fn rebuild_from_faces(&mut self, faces: &[[VertexRef; 3]]) {
        for t in self.triangles().collect::<Vec<_>>() {
            self.free_triangle(t);
        }
        let mut by_edge: HashMap<(VertexRef, VertexRef), (TriangleRef, usize)> =
            HashMap::with_capacity(faces.len() * 3);
        let refs: Vec<TriangleRef> = faces.iter().map(|&f| self.alloc_triangle(f)).collect();
        for (&t, f) in refs.iter().zip(faces) {
            for k in 0..3 {
                by_edge.insert((f[ccw(k)], f[cw(k)]), (t, k));
            }
        }
        for (&t, f) in refs.iter().zip(faces) {
            for k in 0..3 {
                let (u, _) = by_edge[&(f[cw(k)], f[ccw(k)])];
                self.tris[t.index()].n[k] = u;
            }
            self.set_incident(t);
        }
        self.has_triangles = !faces.is_empty();
    }

    /// Turns the collinear chain plus the off-line vertex `apex` into a
    /// triangulation: a fan from `apex` and the matching infinite triangles.
    fn lift_chain(&mut self, apex: VertexRef) {
        let chain = std::mem::take(&mut self.chain);
        debug_assert!(chain.len() >= 2);
        let first = self.point(chain[0]);
        let last = self.point(chain[chain.len() - 1]);
        let left = orientation(first, last, self.point(apex)) == Orientation::Ccw;
        let mut faces = Vec::with_capacity(2 * chain.len() + 2);
        // Hull listed counterclockwise.
        let mut hull: Vec<VertexRef> = Vec::with_capacity(chain.len() + 1);
        if left {
            for w in chain.windows(2) {
                faces.push([w[0], w[1], apex]);
            }
            hull.extend(chain.iter().copied());
        } else {
            for w in chain.windows(2) {
                faces.push([w[1], w[0], apex]);
            }
            hull.extend(chain.iter().rev().copied());
        }
        hull.push(apex);
        for i in 0..hull.len() {
            let a = hull[i];
            let b = hull[(i + 1) % hull.len()];
            faces.push([b, a, VertexRef::INFINITE]);
        }
        self.rebuild_from_faces(&faces);
    }

    /// Drops every triangle and keeps the sites (minus `except`) as a chain.
    ///
    /// Only valid when the remaining sites are collinear or fewer than three.
    fn collapse_to_chain(&mut self, except: Option<VertexRef>) {
        let mut rest: Vec<VertexRef> = self.vertices().filter(|&v| Some(v) != except).collect();
        for t in self.triangles().collect::<Vec<_>>() {
            self.free_triangle(t);
        }
        for &v in &rest {
            self.verts[v.index()].incident = TriangleRef::NONE;
        }
        self.verts[0].incident = TriangleRef::NONE;
        rest.sort_by_key(|&v| self.point(v));
        self.chain = rest;
        self.has_triangles = false;
    }
}

fn order(a: VertexRef, b: VertexRef) -> (VertexRef, VertexRef) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}
