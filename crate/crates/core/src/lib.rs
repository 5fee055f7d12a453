//! Dynamic planar Delaunay triangulation with a multi-level randomized
//! location hierarchy.
//!
//! The [`Hierarchy`] keeps a stack of Delaunay triangulations over nested
//! random samples of the sites. A query descends from the sparsest level,
//! using each level's nearest vertex as the starting point of a short walk
//! in the level below. Points have integer coordinates bounded by `2^24`
//! and every predicate is evaluated exactly.
//!
//! ```
//! use delaunay_hierarchy::{Hierarchy, HierarchyConfig, Phase3Mode, Point};
//!
//! let config = HierarchyConfig {
//!     phase3_mode: Phase3Mode::Exact,
//!     ..HierarchyConfig::default()
//! };
//! let mut h = Hierarchy::new(config).unwrap();
//! for (x, y) in [(0, 0), (10, 0), (0, 10), (7, 7)] {
//!     h.insert(Point::new(x, y).unwrap()).unwrap();
//! }
//! let near = h.nearest_neighbor(Point::new(6, 5).unwrap()).unwrap();
//! assert_eq!(h.point(near), Some(Point::new(7, 7).unwrap()));
//! ```

pub mod bench;
pub mod costmodel;
pub mod datasets;
pub mod error;
pub mod hierarchy;
pub mod predicates;
pub mod trace;
pub mod triangulation;

pub use error::{Error, Result};
pub use hierarchy::{Hierarchy, HierarchyConfig, Location, SiteId};
pub use predicates::{CirclePosition, Orientation, Point};
pub use trace::{Counters, LocateTrace};
pub use triangulation::{Insertion, Phase3Mode, TriangleRef, Triangulation, VertexRef, Violation};
