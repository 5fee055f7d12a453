//! Benchmark point distributions and the plain-text point file format.
//!
//! Every generator works on the `[-2^24, 2^24]` square. Curves are sampled
//! by a real-valued parameter and rounded to the nearest integer point, so
//! points lie on them only up to rounding. Rounded points can collide; the
//! later copies are dropped, so a dataset may hold slightly fewer than `n`
//! points.

use std::collections::HashSet;
use std::f64::consts::TAU;
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::predicates::{Point, COORD_BOUND};

/// Half-width of the ellipses' minor axis: the ellipses are 2:1.
pub const ELLIPSE_MINOR: i32 = COORD_BOUND / 2;

/// Share of square points in `Ellipse2`.
pub const ELLIPSE2_SQUARE_SHARE: f64 = 0.05;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DatasetKind {
    /// Uniform in the square.
    Random,
    /// Uniform by angle on the axis-aligned ellipse with semi-axes `2^24`
    /// and `2^23`.
    Ellipse,
    /// `Ellipse` mixed with `Random`, 5% of points drawn from the square.
    Ellipse2,
    /// Uniform by angle on the circle of radius `2^24` around the origin.
    Circle,
    /// `x` uniform, `y = round(x^2 / 2^24) - 2^23`.
    Parabola,
}

impl DatasetKind {
    pub const ALL: [DatasetKind; 5] = [
        DatasetKind::Random,
        DatasetKind::Ellipse,
        DatasetKind::Ellipse2,
        DatasetKind::Circle,
        DatasetKind::Parabola,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DatasetKind::Random => "random",
            DatasetKind::Ellipse => "ellipse",
            DatasetKind::Ellipse2 => "ellipse2",
            DatasetKind::Circle => "circle",
            DatasetKind::Parabola => "parabola",
        }
    }
}

impl fmt::Display for DatasetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for DatasetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DatasetKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName {
                what: "distribution",
                value: s.to_string(),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DatasetSpec {
    pub kind: DatasetKind,
    pub n: usize,
    pub seed: u64,
}

impl DatasetSpec {
    pub fn new(kind: DatasetKind, n: usize, seed: u64) -> Self {
        DatasetSpec { kind, n, seed }
    }
}

fn square<R: Rng>(rng: &mut R) -> Point {
    Point::new_unchecked(
        rng.gen_range(-COORD_BOUND..=COORD_BOUND),
        rng.gen_range(-COORD_BOUND..=COORD_BOUND),
    )
}

fn on_ellipse<R: Rng>(rng: &mut R, a: f64, b: f64) -> Point {
    let t = rng.gen_range(0.0..TAU);
    Point::new_unchecked((a * t.cos()).round() as i32, (b * t.sin()).round() as i32)
}

fn on_parabola<R: Rng>(rng: &mut R) -> Point {
    let x = rng.gen_range(-COORD_BOUND..=COORD_BOUND) as i64;
    let scale = COORD_BOUND as i64;
    // Round half up in integer arithmetic.
    let y = (x * x + scale / 2) / scale - scale / 2;
    Point::new_unchecked(x as i32, y as i32)
}

/// Generates the dataset; deterministic in the spec.
pub fn generate(spec: &DatasetSpec) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let r = COORD_BOUND as f64;
    let mut seen = HashSet::with_capacity(spec.n);
    let mut out = Vec::with_capacity(spec.n);
    for _ in 0..spec.n {
        let p = match spec.kind {
            DatasetKind::Random => square(&mut rng),
            DatasetKind::Ellipse => on_ellipse(&mut rng, r, ELLIPSE_MINOR as f64),
            DatasetKind::Ellipse2 => {
                if rng.gen_bool(ELLIPSE2_SQUARE_SHARE) {
                    square(&mut rng)
                } else {
                    on_ellipse(&mut rng, r, ELLIPSE_MINOR as f64)
                }
            }
            DatasetKind::Circle => on_ellipse(&mut rng, r, r),
            DatasetKind::Parabola => on_parabola(&mut rng),
        };
        debug_assert!(p.in_bounds());
        if seen.insert(p) {
            out.push(p);
        }
    }
    out
}

/// Reads `x y` lines. Blank lines and `#` comments are ignored.
pub fn read_points<R: BufRead>(reader: R) -> Result<Vec<Point>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let bad = |message: String| Error::PointFile {
            line: i + 1,
            message,
        };
        let mut parts = body.split_whitespace();
        let mut coord = || -> Result<i64> {
            let s = parts
                .next()
                .ok_or_else(|| bad("expected two integers".into()))?;
            s.parse::<i64>().map_err(|e| bad(format!("`{s}`: {e}")))
        };
        let (x, y) = (coord()?, coord()?);
        if parts.next().is_some() {
            return Err(bad("trailing data".into()));
        }
        out.push(Point::new(x, y).map_err(|e| bad(e.to_string()))?);
    }
    Ok(out)
}

/// Writes one `x y` line per point.
pub fn write_points<W: Write>(mut writer: W, points: &[Point]) -> Result<()> {
    for p in points {
        writeln!(writer, "{} {}", p.x, p.y)?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_is_bounded_and_deterministic() {
        let spec = DatasetSpec::new(DatasetKind::Random, 5, 42);
        let a = generate(&spec);
        assert_eq!(a.len(), 5);
        assert!(a.iter().all(|p| p.in_bounds()));
        assert_eq!(a, generate(&spec));
        assert_ne!(a, generate(&DatasetSpec::new(DatasetKind::Random, 5, 43)));
    }

    #[test]
    fn every_kind_stays_in_bounds() {
        for kind in DatasetKind::ALL {
            let pts = generate(&DatasetSpec::new(kind, 20_000, 1));
            assert!(pts.iter().all(|p| p.in_bounds()), "{kind}");
            assert!(pts.len() > 19_000, "{kind}: {}", pts.len());
            let unique: HashSet<_> = pts.iter().collect();
            assert_eq!(unique.len(), pts.len());
        }
    }

    #[test]
    fn circle_rounding_band() {
        let r = COORD_BOUND as i64;
        let pts = generate(&DatasetSpec::new(DatasetKind::Circle, 10_000, 3));
        let worst = pts
            .iter()
            .map(|p| {
                let d = p.x as i64 * p.x as i64 + p.y as i64 * p.y as i64;
                (d - r * r).abs()
            })
            .max()
            .unwrap();
        assert!(worst <= 3 * r, "{worst}");
    }

    #[test]
    fn parabola_shape() {
        for p in generate(&DatasetSpec::new(DatasetKind::Parabola, 1000, 4)) {
            let exact = (p.x as f64).powi(2) / COORD_BOUND as f64 - (COORD_BOUND / 2) as f64;
            assert!((p.y as f64 - exact).abs() <= 0.5 + 1e-9);
        }
    }

    #[test]
    fn names_round_trip() {
        for kind in DatasetKind::ALL {
            assert_eq!(kind.name().parse::<DatasetKind>().unwrap(), kind);
        }
        assert!("square".parse::<DatasetKind>().is_err());
    }

    #[test]
    fn point_file_round_trip() {
        let pts = generate(&DatasetSpec::new(DatasetKind::Ellipse2, 100, 5));
        let mut buf = Vec::new();
        write_points(&mut buf, &pts).unwrap();
        assert_eq!(read_points(buf.as_slice()).unwrap(), pts);
    }

    #[test]
    fn point_file_comments_and_errors() {
        let text = "# header\n1 2\n\n  -3 4 # trailing\n";
        let pts = read_points(text.as_bytes()).unwrap();
        assert_eq!(
            pts,
            vec![Point::new(1, 2).unwrap(), Point::new(-3, 4).unwrap()]
        );
        let err = read_points("1 2\n3\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::PointFile { line: 2, .. }));
        let err = read_points("1 x\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::PointFile { line: 1, .. }));
        let err = read_points("99999999 0\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::PointFile { line: 1, .. }));
    }
}
