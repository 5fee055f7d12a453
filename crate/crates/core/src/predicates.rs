//! Exact geometric predicates on integer points.
//!
//! Coordinates are bounded by `2^24` in absolute value, so every predicate
//! can be evaluated exactly with wide integer arithmetic: orientation and
//! squared distance fit in `i64`, the in-circle determinant fits in `i128`.
//! No floating point filter is involved and results are bit-reproducible.

use std::fmt;

use crate::error::Error;

/// Largest admissible absolute coordinate value.
pub const COORD_BOUND: i32 = 1 << 24;

/// A planar site with integer coordinates in `[-2^24, 2^24]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i32,
    pub y: i32,
}

impl Point {
    /// Builds a point, rejecting coordinates outside the bound.
    pub fn new(x: i64, y: i64) -> Result<Self, Error> {
        let bound = COORD_BOUND as i64;
        if x.abs() > bound || y.abs() > bound {
            return Err(Error::CoordinateOutOfRange { x, y });
        }
        Ok(Point {
            x: x as i32,
            y: y as i32,
        })
    }

    /// Builds a point without checking the bound.
    ///
    /// Intended for literals in tests and examples; out of range values make
    /// the predicates unreliable.
    pub const fn new_unchecked(x: i32, y: i32) -> Self {
        Point { x, y }
    }

    pub fn in_bounds(&self) -> bool {
        self.x.abs() <= COORD_BOUND && self.y.abs() <= COORD_BOUND
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(i32, i32)> for Point {
    fn from((x, y): (i32, i32)) -> Self {
        Point { x, y }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Counterclockwise, a left turn.
    Ccw,
    /// Clockwise, a right turn.
    Cw,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
            Orientation::Collinear => Orientation::Collinear,
        }
    }

    fn from_sign(v: i64) -> Self {
        match v.signum() {
            1 => Orientation::Ccw,
            -1 => Orientation::Cw,
            _ => Orientation::Collinear,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CirclePosition {
    Inside,
    Outside,
    Cocircular,
}

/// Twice the signed area of `abc`; positive for a left turn.
#[inline]
pub fn orientation_det(a: Point, b: Point, c: Point) -> i64 {
    let abx = b.x as i64 - a.x as i64;
    let aby = b.y as i64 - a.y as i64;
    let acx = c.x as i64 - a.x as i64;
    let acy = c.y as i64 - a.y as i64;
    abx * acy - aby * acx
}

/// Orientation of the triple `abc` (degree 2).
#[inline]
pub fn orientation(a: Point, b: Point, c: Point) -> Orientation {
    Orientation::from_sign(orientation_det(a, b, c))
}

/// The in-circle determinant, positive when `d` lies inside the circle
/// through the counterclockwise triangle `abc`.
#[inline]
pub fn in_circle_det(a: Point, b: Point, c: Point, d: Point) -> i128 {
    let adx = a.x as i64 - d.x as i64;
    let ady = a.y as i64 - d.y as i64;
    let bdx = b.x as i64 - d.x as i64;
    let bdy = b.y as i64 - d.y as i64;
    let cdx = c.x as i64 - d.x as i64;
    let cdy = c.y as i64 - d.y as i64;

    let alift = (adx * adx + ady * ady) as i128;
    let blift = (bdx * bdx + bdy * bdy) as i128;
    let clift = (cdx * cdx + cdy * cdy) as i128;

    let bc = (bdx * cdy - bdy * cdx) as i128;
    let ca = (cdx * ady - cdy * adx) as i128;
    let ab = (adx * bdy - ady * bdx) as i128;

    alift * bc + blift * ca + clift * ab
}

/// Position of `d` relative to the circumcircle of `abc` (degree 4).
///
/// `abc` must be counterclockwise; this is checked in debug builds.
#[inline]
pub fn in_circle(a: Point, b: Point, c: Point, d: Point) -> CirclePosition {
    debug_assert_eq!(
        orientation(a, b, c),
        Orientation::Ccw,
        "in_circle requires a counterclockwise triangle"
    );
    match in_circle_det(a, b, c, d).signum() {
        1 => CirclePosition::Inside,
        -1 => CirclePosition::Outside,
        _ => CirclePosition::Cocircular,
    }
}

/// Exact squared Euclidean distance (degree 2).
#[inline]
pub fn squared_distance(a: Point, b: Point) -> u64 {
    let dx = (a.x as i64 - b.x as i64).unsigned_abs();
    let dy = (a.y as i64 - b.y as i64).unsigned_abs();
    dx * dx + dy * dy
}

/// Whether the angle `q w w2` at `w` is strictly smaller than a right angle.
#[inline]
pub fn angle_acute_at(w: Point, q: Point, w2: Point) -> bool {
    let ux = q.x as i64 - w.x as i64;
    let uy = q.y as i64 - w.y as i64;
    let vx = w2.x as i64 - w.x as i64;
    let vy = w2.y as i64 - w.y as i64;
    ux * vx + uy * vy > 0
}
