//! Structural and geometric consistency checks.

use std::fmt;

use super::walk::infinite_index;
use super::{ccw, cw, TriangleRef, Triangulation, VertexRef};
use crate::predicates::{in_circle, orientation, CirclePosition, Orientation};

/// One broken invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Neighbor `index` of `triangle` does not point back across the same edge.
    Adjacency { triangle: u32, index: usize },
    /// A finite triangle is not counterclockwise.
    Orientation { triangle: u32 },
    /// A live vertex's incident triangle is dead or does not contain it.
    IncidentLink { vertex: u32 },
    /// Face, edge or site counts disagree with Euler's relation.
    Counts { detail: String },
    /// Consecutive hull edges turn the wrong way.
    HullNotConvex { triangle: u32 },
    /// A site lies strictly inside the circumcircle of a triangle.
    NotDelaunay { triangle: u32, vertex: u32 },
    /// The collinear chain is unsorted, not collinear, or has triangles.
    Chain { detail: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Adjacency { triangle, index } => {
                write!(f, "triangle {triangle}: neighbor {index} is not mutual")
            }
            Violation::Orientation { triangle } => {
                write!(f, "triangle {triangle} is not counterclockwise")
            }
            Violation::IncidentLink { vertex } => {
                write!(f, "vertex {vertex} has a broken incident link")
            }
            Violation::Counts { detail } => write!(f, "count mismatch: {detail}"),
            Violation::HullNotConvex { triangle } => {
                write!(f, "hull turns inward after triangle {triangle}")
            }
            Violation::NotDelaunay { triangle, vertex } => {
                write!(
                    f,
                    "vertex {vertex} inside circumcircle of triangle {triangle}"
                )
            }
            Violation::Chain { detail } => write!(f, "collinear chain: {detail}"),
        }
    }
}

impl Triangulation {
    /// Checks adjacency, orientation, incident links, Euler counts, hull
    /// convexity and the local empty-circle property (cocircular accepted).
    /// Local checks imply the global property.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let live = self.vertices().count();
        if live != self.n_sites {
            out.push(Violation::Counts {
                detail: format!("{live} live vertices, {} recorded", self.n_sites),
            });
        }
        if !self.has_triangles {
            self.validate_chain(&mut out);
            return out;
        }
        self.validate_topology(&mut out);
        if !out.is_empty() {
            return out;
        }
        self.validate_counts(&mut out);
        self.validate_geometry(&mut out);
        out
    }

    /// `validate` plus an empty-circle test of every triangle against
    /// every site. Quadratic; meant for tests.
    pub fn validate_exhaustive(&self) -> Vec<Violation> {
        let mut out = self.validate();
        if !out.is_empty() || !self.has_triangles {
            return out;
        }
        let sites: Vec<VertexRef> = self.vertices().collect();
        for t in self.finite_triangles() {
            let vs = self.vertices_of(t);
            let [a, b, c] = self.triangle_points(t);
            for &d in &sites {
                if vs.contains(&d) {
                    continue;
                }
                if in_circle(a, b, c, self.point(d)) == CirclePosition::Inside {
                    out.push(Violation::NotDelaunay {
                        triangle: t.0,
                        vertex: d.0,
                    });
                }
            }
        }
        out
    }

    fn validate_chain(&self, out: &mut Vec<Violation>) {
        if self.live_tris != 0 {
            out.push(Violation::Chain {
                detail: format!("{} triangles without a triangulation", self.live_tris),
            });
        }
        if self.chain.len() != self.n_sites {
            out.push(Violation::Chain {
                detail: format!("{} chained of {} sites", self.chain.len(), self.n_sites),
            });
        }
        for w in self.chain.windows(2) {
            if self.point(w[0]) >= self.point(w[1]) {
                out.push(Violation::Chain {
                    detail: format!("vertices {} and {} out of order", w[0].0, w[1].0),
                });
            }
        }
        if self.chain.len() >= 3 {
            let a = self.point(self.chain[0]);
            let b = self.point(self.chain[self.chain.len() - 1]);
            for &v in &self.chain[1..self.chain.len() - 1] {
                if orientation(a, b, self.point(v)) != Orientation::Collinear {
                    out.push(Violation::Chain {
                        detail: format!("vertex {} off the line", v.0),
                    });
                }
            }
        }
    }

    fn validate_topology(&self, out: &mut Vec<Violation>) {
        for t in self.triangles() {
            let s = &self.tris[t.index()];
            for i in 0..3 {
                let u = s.n[i];
                let ok = self.is_live_triangle(u)
                    && self
                        .opposite_of_edge(u, s.v[cw(i)], s.v[ccw(i)])
                        .is_some_and(|j| self.tris[u.index()].n[j] == t);
                if !ok {
                    out.push(Violation::Adjacency {
                        triangle: t.0,
                        index: i,
                    });
                }
            }
            if infinite_index(&s.v).is_none() {
                let [a, b, c] = self.triangle_points(t);
                if orientation(a, b, c) != Orientation::Ccw {
                    out.push(Violation::Orientation { triangle: t.0 });
                }
            }
        }
        for v in self.vertices() {
            let t = self.verts[v.index()].incident;
            let ok = t != TriangleRef::NONE
                && self.is_live_triangle(t)
                && self.tris[t.index()].v.contains(&v);
            if !ok {
                out.push(Violation::IncidentLink { vertex: v.0 });
            }
        }
    }

    fn validate_counts(&self, out: &mut Vec<Violation>) {
        let n = self.n_sites as i64;
        let all = self.triangles().count();
        let h = self.triangles().filter(|&t| self.is_infinite(t)).count() as i64;
        let f = all as i64 - h;
        if all != self.live_tris || h as usize != self.infinite_tris {
            out.push(Violation::Counts {
                detail: format!(
                    "stored {}/{} triangles, found {all}/{h}",
                    self.live_tris, self.infinite_tris
                ),
            });
        }
        if f != 2 * n - 2 - h {
            out.push(Violation::Counts {
                detail: format!("{f} faces for {n} sites and hull {h}"),
            });
        }
        let e = self.edges().len() as i64;
        if e != 3 * n - 3 - h {
            out.push(Violation::Counts {
                detail: format!("{e} edges for {n} sites and hull {h}"),
            });
        }
    }

    fn validate_geometry(&self, out: &mut Vec<Violation>) {
        for t in self.triangles() {
            let s = &self.tris[t.index()];
            if let Some(k) = infinite_index(&s.v) {
                let (a, b) = (s.v[ccw(k)], s.v[cw(k)]);
                let next = s.n[ccw(k)];
                let (b2, c, _) = self.hull_edge(next);
                debug_assert_eq!(b, b2);
                let (pa, pb, pc) = (self.point(a), self.point(b), self.point(c));
                let bad = match orientation(pa, pb, pc) {
                    Orientation::Ccw => true,
                    Orientation::Cw => false,
                    Orientation::Collinear => {
                        let dot = (pb.x as i64 - pa.x as i64) * (pc.x as i64 - pb.x as i64)
                            + (pb.y as i64 - pa.y as i64) * (pc.y as i64 - pb.y as i64);
                        dot <= 0
                    }
                };
                if bad {
                    out.push(Violation::HullNotConvex { triangle: t.0 });
                }
                continue;
            }
            let [a, b, c] = self.triangle_points(t);
            for i in 0..3 {
                let u = s.n[i];
                if self.is_infinite(u) {
                    continue;
                }
                let j = self.mirror_index(t, i);
                let d = self.tris[u.index()].v[j];
                if in_circle(a, b, c, self.point(d)) == CirclePosition::Inside {
                    out.push(Violation::NotDelaunay {
                        triangle: t.0,
                        vertex: d.0,
                    });
                }
            }
        }
    }

    /// Overwrites one neighbor link. Only for fault-injection tests.
    #[doc(hidden)]
    pub fn corrupt_neighbor(&mut self, t: TriangleRef, i: usize, to: TriangleRef) {
        self.tris[t.index()].n[i] = to;
    }
}
