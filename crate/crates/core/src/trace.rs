//! Predicate and visit counters collected during location and updates.

use std::ops::AddAssign;

/// Counters for one level of one operation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counters {
    /// Orientation tests spent turning around the entry vertex.
    pub phase1_orientation_tests: u64,
    /// Edges crossed while walking toward the query.
    pub phase2_crossings: u64,
    pub phase2_orientation_tests: u64,
    /// Triangles visited while searching for the level's nearest vertex.
    pub phase3_visits: u64,
    pub distance_computations: u64,
    /// Right-angle comparisons (dot product signs) in the nearest search.
    pub angle_tests: u64,
    /// Orientation tests spent by insertion and deletion.
    pub update_orientation_tests: u64,
    pub incircle_tests: u64,
}

impl Counters {
    pub fn orientation_tests(&self) -> u64 {
        self.phase1_orientation_tests
            + self.phase2_orientation_tests
            + self.update_orientation_tests
    }

    /// Orientation tests spent by location only.
    pub fn locate_orientation_tests(&self) -> u64 {
        self.phase1_orientation_tests + self.phase2_orientation_tests
    }

    /// Every predicate evaluation, location and update alike.
    pub fn predicates(&self) -> u64 {
        self.orientation_tests()
            + self.distance_computations
            + self.angle_tests
            + self.incircle_tests
    }

    /// Predicate evaluations spent by location only.
    pub fn locate_predicates(&self) -> u64 {
        self.locate_orientation_tests() + self.distance_computations + self.angle_tests
    }
}

impl AddAssign for Counters {
    fn add_assign(&mut self, o: Counters) {
        self.phase1_orientation_tests += o.phase1_orientation_tests;
        self.phase2_crossings += o.phase2_crossings;
        self.phase2_orientation_tests += o.phase2_orientation_tests;
        self.phase3_visits += o.phase3_visits;
        self.distance_computations += o.distance_computations;
        self.angle_tests += o.angle_tests;
        self.update_orientation_tests += o.update_orientation_tests;
        self.incircle_tests += o.incircle_tests;
    }
}

/// Per-level counters of one hierarchy location (and, for insertions, the
/// update that followed it).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LocateTrace {
    levels: Vec<Counters>,
    /// Level at which the descent started.
    pub entry_level: usize,
    /// Number of levels walked, entry level included.
    pub levels_descended: usize,
    /// Whether the entry vertex came from the brute-force sample.
    pub used_sample: bool,
}

impl LocateTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn level_mut(&mut self, level: usize) -> &mut Counters {
        if self.levels.len() <= level {
            self.levels.resize(level + 1, Counters::default());
        }
        &mut self.levels[level]
    }

    pub fn level(&self, level: usize) -> Counters {
        self.levels.get(level).copied().unwrap_or_default()
    }

    pub fn levels(&self) -> &[Counters] {
        &self.levels
    }

    pub fn totals(&self) -> Counters {
        let mut t = Counters::default();
        for c in &self.levels {
            t += *c;
        }
        t
    }

    /// Adds `other` level by level.
    pub fn absorb(&mut self, other: &LocateTrace) {
        for (i, c) in other.levels.iter().enumerate() {
            *self.level_mut(i) += *c;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_sum_levels() {
        let mut t = LocateTrace::new();
        t.level_mut(2).phase2_crossings = 5;
        t.level_mut(0).phase2_crossings = 3;
        t.level_mut(0).phase1_orientation_tests = 4;
        t.level_mut(1).incircle_tests = 7;
        let tot = t.totals();
        assert_eq!(tot.phase2_crossings, 8);
        assert_eq!(tot.orientation_tests(), 4);
        assert_eq!(tot.predicates(), 11);
        assert_eq!(t.levels().len(), 3);
        assert_eq!(t.level(9), Counters::default());
    }
}
