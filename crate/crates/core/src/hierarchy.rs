//! Multi-level location structure.
//!
//! Level 0 triangulates every site; each site of level `i` also belongs to
//! level `i + 1` with probability `1 / alpha`. A query starts at the highest
//! level large enough to be worth it and, at each level, turns around the
//! previous level's nearest vertex, walks to the triangle holding the query
//! and picks that level's nearest vertex as the next start.
//!
//! The analysis assumes a random insertion order. Adversarial orders keep
//! every result correct but void the expected cost bounds.

use std::fmt::Write as _;

use rand::seq::index::sample as sample_indices;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::predicates::{squared_distance, Point};
use crate::trace::{Counters, LocateTrace};
use crate::triangulation::{Insertion, Phase3Mode, TriangleRef, Triangulation, VertexRef};

/// Stable handle of a site. Ids are never reused.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SiteId(pub u32);

#[derive(Clone, Debug, PartialEq)]
pub struct HierarchyConfig {
    /// Inverse promotion probability; must exceed 1.
    pub alpha: f64,
    /// Cap on the number of levels, level 0 included. `None` for no cap.
    pub max_levels: Option<usize>,
    /// Levels smaller than this are skipped when descending.
    pub min_hierarchy_size: usize,
    /// Entry levels at least this large start from the nearest member of a
    /// random sample. `None` disables sampling.
    pub min_msz_size: Option<usize>,
    /// Sample size factor: the sample holds `ceil(beta * m^(1/3))` sites.
    pub beta: f64,
    pub phase3_mode: Phase3Mode,
    pub rng_seed: u64,
}

impl Default for HierarchyConfig {
    fn default() -> Self {
        HierarchyConfig {
            alpha: 30.0,
            max_levels: None,
            min_hierarchy_size: 20,
            min_msz_size: Some(20),
            beta: 1.0,
            phase3_mode: Phase3Mode::Modified,
            rng_seed: 0,
        }
    }
}

impl HierarchyConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 1.0) {
            return Err(Error::InvalidConfig(format!(
                "alpha must exceed 1, got {}",
                self.alpha
            )));
        }
        if !(self.beta > 0.0) || !self.beta.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "beta must be positive, got {}",
                self.beta
            )));
        }
        if self.max_levels == Some(0) {
            return Err(Error::InvalidConfig("max_levels must be at least 1".into()));
        }
        Ok(())
    }
}

/// Draws a site's top level: `l` with probability `(1 - 1/alpha) alpha^-l`,
/// capped at `max_levels - 1`.
pub fn draw_top_level<R: Rng + ?Sized>(
    rng: &mut R,
    alpha: f64,
    max_levels: Option<usize>,
) -> usize {
    let cap = max_levels.map_or(usize::MAX, |m| m.saturating_sub(1));
    let p = 1.0 / alpha;
    let mut level = 0;
    while level < cap && rng.gen::<f64>() < p {
        level += 1;
    }
    level
}

/// `ceil(beta * m^(1/3))`, exact when the product is an integer.
pub fn msz_sample_size(m: usize, beta: f64) -> usize {
    let s = beta * (m as f64).cbrt();
    let r = s.round();
    let size = if (s - r).abs() < 1e-9 { r } else { s.ceil() };
    (size as usize).clamp(1, m.max(1))
}

#[derive(Clone, Debug)]
struct SiteRecord {
    point: Point,
    top_level: usize,
    refs: Vec<VertexRef>,
}

#[derive(Clone, Debug)]
struct Sample {
    level: usize,
    built_size: usize,
    members: Vec<SiteId>,
}

/// Result of a location.
#[derive(Clone, Debug)]
pub struct Location {
    /// Level-0 triangle holding the query; `None` while level 0 has no
    /// triangle (fewer than three sites, or all collinear).
    pub triangle: Option<TriangleRef>,
    /// Nearest site found at each walked level, indexed by level.
    pub nearest: Vec<Option<SiteId>>,
    pub trace: LocateTrace,
    triangles: Vec<Option<TriangleRef>>,
}

impl Location {
    /// Triangle holding the query at each walked level.
    pub fn triangles(&self) -> &[Option<TriangleRef>] {
        &self.triangles
    }

    /// The level-0 nearest site.
    pub fn site(&self) -> SiteId {
        self.nearest[0].expect("level 0 is always walked")
    }
}

/// Outcome of an insertion.
#[derive(Clone, Debug)]
pub struct InsertOutcome {
    pub site: SiteId,
    /// False when the point already existed.
    pub inserted: bool,
    pub trace: LocateTrace,
}

#[derive(Clone, Debug)]
pub struct Hierarchy {
    config: HierarchyConfig,
    levels: Vec<Triangulation>,
    sites: Vec<Option<SiteRecord>>,
    live: usize,
    level_rng: ChaCha8Rng,
    sample_rng: ChaCha8Rng,
    sample: Option<Sample>,
    designated: Option<SiteId>,
}

impl Hierarchy {
    pub fn new(config: HierarchyConfig) -> Result<Self> {
        config.validate()?;
        let level_rng = ChaCha8Rng::seed_from_u64(config.rng_seed);
        let sample_rng = ChaCha8Rng::seed_from_u64(config.rng_seed ^ 0x5bd1_e995_9e37_79b9);
        Ok(Hierarchy {
            config,
            levels: vec![Triangulation::new()],
            sites: Vec::new(),
            live: 0,
            level_rng,
            sample_rng,
            sample: None,
            designated: None,
        })
    }

    pub fn config(&self) -> &HierarchyConfig {
        &self.config
    }

    /// Number of live sites.
    pub fn len(&self) -> usize {
        self.live
    }

    pub fn is_empty(&self) -> bool {
        self.live == 0
    }

    pub fn levels(&self) -> &[Triangulation] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> &Triangulation {
        &self.levels[i]
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|t| t.len()).collect()
    }

    /// Finite triangles summed over all levels.
    pub fn total_finite_triangles(&self) -> usize {
        self.levels.iter().map(|t| t.finite_triangle_count()).sum()
    }

    fn record(&self, s: SiteId) -> Option<&SiteRecord> {
        self.sites.get(s.0 as usize).and_then(|r| r.as_ref())
    }

    pub fn point(&self, s: SiteId) -> Option<Point> {
        self.record(s).map(|r| r.point)
    }

    pub fn top_level(&self, s: SiteId) -> Option<usize> {
        self.record(s).map(|r| r.top_level)
    }

    /// Vertex of site `s` in level `level`, if it belongs there.
    pub fn vertex(&self, s: SiteId, level: usize) -> Option<VertexRef> {
        self.record(s).and_then(|r| r.refs.get(level).copied())
    }

    /// Live site ids in increasing order.
    pub fn sites(&self) -> impl Iterator<Item = SiteId> + '_ {
        self.sites
            .iter()
            .enumerate()
            .filter(|(_, r)| r.is_some())
            .map(|(i, _)| SiteId(i as u32))
    }

    /// Site owning the vertex `v` of any level.
    pub fn site_of(&self, level: usize, v: VertexRef) -> SiteId {
        SiteId(self.levels[level].tag(v))
    }

    /// The highest level with at least `min_hierarchy_size` sites, or `None`
    /// while even level 0 is smaller.
    pub fn entry_level(&self) -> Option<usize> {
        let min = self.config.min_hierarchy_size.max(1);
        (0..self.levels.len())
            .rev()
            .find(|&i| self.levels[i].len() >= min)
    }

    /// The site every sample-free location starts from: the latest site
    /// promoted to the top level.
    pub fn designated_start(&self) -> Option<SiteId> {
        self.designated
    }

    /// Members of the current start sample and the level hosting it.
    pub fn sample(&self) -> Option<(usize, &[SiteId])> {
        self.sample
            .as_ref()
            .map(|s| (s.level, s.members.as_slice()))
    }

    /// Nearest sample member to `q`, by linear scan over the sample.
    /// Returns the host level and the member.
    pub fn msz_start(&self, q: Point, c: &mut Counters) -> Option<(usize, SiteId)> {
        let s = self.sample.as_ref()?;
        let best = s.members.iter().copied().min_by_key(|&m| {
            c.distance_computations += 1;
            (
                squared_distance(self.point(m).expect("dead sample member"), q),
                m,
            )
        })?;
        Some((s.level, best))
    }

    /// Locates `q` with the configured nearest-vertex mode.
    pub fn locate(&self, q: Point) -> Result<Location> {
        self.locate_with(q, self.config.phase3_mode)
    }

    /// Locates `q`, choosing the nearest-vertex mode for every level.
    pub fn locate_with(&self, q: Point, mode: Phase3Mode) -> Result<Location> {
        if self.live == 0 {
            return Err(Error::EmptyStructure);
        }
        let mut trace = LocateTrace::new();
        let Some(entry) = self.entry_level() else {
            // Too small for any descent: scan level 0, then walk from the
            // nearest site.
            let base = &self.levels[0];
            let c = trace.level_mut(0);
            c.distance_computations += base.len() as u64;
            let v = base.nearest_linear(q).expect("non-empty level");
            let mut loc = Location {
                triangle: None,
                nearest: vec![Some(SiteId(base.tag(v)))],
                trace: LocateTrace::new(),
                triangles: vec![None],
            };
            if base.has_triangles() {
                let t = base.walk_from_vertex(v, q, c);
                loc.triangle = Some(t);
                loc.triangles[0] = Some(t);
            }
            trace.levels_descended = 1;
            loc.trace = trace;
            return Ok(loc);
        };
        let mut start = match self.sample.as_ref() {
            Some(s) if s.level == entry => {
                trace.used_sample = true;
                self.msz_start(q, trace.level_mut(entry)).unwrap().1
            }
            _ => self.designated.expect("non-empty hierarchy has a start"),
        };
        trace.entry_level = entry;
        trace.levels_descended = entry + 1;
        let mut nearest = vec![None; entry + 1];
        let mut triangles = vec![None; entry + 1];
        for i in (0..=entry).rev() {
            let level = &self.levels[i];
            let c = trace.level_mut(i);
            let v = self
                .vertex(start, i)
                .expect("start site missing from level");
            let found = if level.has_triangles() {
                let t = level.walk_from_vertex(v, q, c);
                triangles[i] = Some(t);
                level.nearest_from_triangle(t, q, mode, c)
            } else {
                c.distance_computations += level.len() as u64;
                level.nearest_linear(q).expect("non-empty level")
            };
            start = SiteId(level.tag(found));
            nearest[i] = Some(start);
        }
        Ok(Location {
            triangle: triangles[0],
            nearest,
            trace,
            triangles,
        })
    }

    /// Nearest site to `q`; exact in `Exact` mode, ties to the older site.
    /// In `Modified` mode the answer is the nearest corner of the level-0
    /// triangle holding `q`, which need not be the nearest site.
    pub fn nearest_neighbor(&self, q: Point) -> Result<SiteId> {
        Ok(self.locate(q)?.site())
    }

    pub fn insert(&mut self, q: Point) -> Result<SiteId> {
        Ok(self.insert_traced(q)?.site)
    }

    /// Inserts `q`, returning the location and update counters.
    pub fn insert_traced(&mut self, q: Point) -> Result<InsertOutcome> {
        self.insert_inner(q, None)
    }

    /// Inserts `q` with a given top level instead of a random draw.
    pub fn insert_at_level(&mut self, q: Point, top_level: usize) -> Result<InsertOutcome> {
        self.insert_inner(q, Some(top_level))
    }

    fn insert_inner(&mut self, q: Point, forced: Option<usize>) -> Result<InsertOutcome> {
        if !q.in_bounds() {
            return Err(Error::CoordinateOutOfRange {
                x: q.x as i64,
                y: q.y as i64,
            });
        }
        let mut loc = if self.live == 0 {
            Location {
                triangle: None,
                nearest: vec![None],
                trace: LocateTrace::new(),
                triangles: vec![None],
            }
        } else {
            let loc = self.locate(q)?;
            let near = loc.site();
            if self.point(near) == Some(q) {
                return Ok(InsertOutcome {
                    site: near,
                    inserted: false,
                    trace: loc.trace,
                });
            }
            loc
        };
        let top = match forced {
            Some(l) => l,
            None => draw_top_level(
                &mut self.level_rng,
                self.config.alpha,
                self.config.max_levels,
            ),
        };
        let id = SiteId(self.sites.len() as u32);
        let stamp = id.0 as u64 + 1;
        while self.levels.len() <= top {
            self.levels.push(Triangulation::new());
        }
        let mut refs = Vec::with_capacity(top + 1);
        for i in 0..=top {
            let hint = loc.triangles.get(i).copied().flatten();
            let c = loc.trace.level_mut(i);
            let level = &mut self.levels[i];
            let res = if hint.is_some() {
                level.insert_located(q, hint, stamp, id.0, c)
            } else {
                level.insert_with(q, stamp, id.0, c)
            };
            match res {
                Insertion::Inserted(v) => refs.push(v),
                Insertion::Duplicate(_) => unreachable!("duplicate escaped level-0 check"),
            }
        }
        self.sites.push(Some(SiteRecord {
            point: q,
            top_level: top,
            refs,
        }));
        self.live += 1;
        if top + 1 >= self.levels.len() || self.designated.is_none() {
            self.designated = Some(id);
        }
        self.refresh_sample();
        Ok(InsertOutcome {
            site: id,
            inserted: true,
            trace: loc.trace,
        })
    }

    /// Deletes site `s` from every level it belongs to.
    pub fn remove(&mut self, s: SiteId) -> Result<()> {
        let rec = self
            .sites
            .get_mut(s.0 as usize)
            .and_then(|r| r.take())
            .ok_or(Error::UnknownHandle(s.0))?;
        for (i, &v) in rec.refs.iter().enumerate() {
            let removed = self.levels[i].delete_vertex(v);
            debug_assert!(removed);
        }
        self.live -= 1;
        while self.levels.len() > 1 && self.levels.last().is_some_and(|t| t.is_empty()) {
            self.levels.pop();
        }
        let top = self.levels.len() - 1;
        if self.designated == Some(s)
            || self.designated.and_then(|d| self.top_level(d)) != Some(top)
        {
            let level = &self.levels[top];
            self.designated = level
                .vertices()
                .max_by_key(|&v| level.stamp(v))
                .map(|v| SiteId(level.tag(v)));
        }
        if self
            .sample
            .as_ref()
            .is_some_and(|smp| smp.members.contains(&s))
        {
            self.sample = None;
        }
        self.refresh_sample();
        Ok(())
    }

    /// Keeps the start sample on the entry level, rebuilding it when that
    /// level changes, its size doubles or halves, or a member dies.
    fn refresh_sample(&mut self) {
        let Some(min) = self.config.min_msz_size else {
            self.sample = None;
            return;
        };
        let host = match self.entry_level() {
            Some(l) if self.levels[l].len() >= min.max(1) => l,
            _ => {
                self.sample = None;
                return;
            }
        };
        let m = self.levels[host].len();
        let fresh = match &self.sample {
            Some(s) => s.level == host && m < 2 * s.built_size && 2 * m > s.built_size,
            None => false,
        };
        if fresh {
            return;
        }
        let level = &self.levels[host];
        let all: Vec<VertexRef> = level.vertices().collect();
        let k = msz_sample_size(m, self.config.beta);
        let members = sample_indices(&mut self.sample_rng, all.len(), k)
            .into_iter()
            .map(|i| SiteId(level.tag(all[i])))
            .collect();
        self.sample = Some(Sample {
            level: host,
            built_size: m,
            members,
        });
    }

    /// Per-level validation plus consistency of the site directory.
    /// Each entry names the level (or `None` for the directory).
    pub fn validate(&self) -> Vec<(Option<usize>, String)> {
        let mut out = Vec::new();
        for (i, t) in self.levels.iter().enumerate() {
            for v in t.validate() {
                out.push((Some(i), v.to_string()));
            }
        }
        let mut counts = vec![0usize; self.levels.len()];
        for s in self.sites() {
            let r = self.record(s).unwrap();
            if r.refs.len() != r.top_level + 1 || r.top_level >= self.levels.len() {
                out.push((None, format!("site {} has a bad level list", s.0)));
                continue;
            }
            for (i, &v) in r.refs.iter().enumerate() {
                counts[i] += 1;
                let t = &self.levels[i];
                if !t.is_live_vertex(v) || t.tag(v) != s.0 || t.point(v) != r.point {
                    out.push((Some(i), format!("site {} has a stale vertex", s.0)));
                }
            }
        }
        for (i, t) in self.levels.iter().enumerate() {
            if counts[i] != t.len() {
                out.push((
                    Some(i),
                    format!("{} sites recorded, {} stored", counts[i], t.len()),
                ));
            }
        }
        if self.live > 0 {
            let top = self.levels.len() - 1;
            match self.designated.and_then(|d| self.top_level(d)) {
                Some(l) if l == top => {}
                _ => out.push((None, "designated start is not on the top level".into())),
            }
        }
        if let Some(s) = &self.sample {
            if s.members.iter().any(|&m| self.vertex(m, s.level).is_none()) {
                out.push((None, "sample holds a dead site".into()));
            }
        }
        out
    }

    /// Text snapshot: every level's triangle dump, then the site directory
    /// as `site_id x y top_level` lines.
    pub fn snapshot(&self) -> String {
        let mut s = String::new();
        for (i, t) in self.levels.iter().enumerate() {
            let _ = writeln!(s, "# level {i}");
            s.push_str(&t.dump());
        }
        s.push_str("# sites\n");
        for id in self.sites() {
            let r = self.record(id).unwrap();
            let _ = writeln!(s, "{} {} {} {}", id.0, r.point.x, r.point.y, r.top_level);
        }
        s
    }
}
