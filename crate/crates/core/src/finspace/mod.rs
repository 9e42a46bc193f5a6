//! Finite T0 spaces as posets, continuous maps and their homotopy theory.

pub mod builtin;
mod homotopy;
mod io;
mod map;
mod pointset;
mod space;

pub use homotopy::{
    are_homotopic, continuous_maps, contractible_oracle, core_of, enumerate_self_maps_homotopic_to_id,
    find_beat_points, homotopy_oracle, is_contractible_in, BeatKind, BeatPoint, MapEnumeration, MapPoset,
    DEFAULT_MAP_CAP, DEFAULT_ORACLE_BOUND,
};
pub use io::{parse_space_json, space_to_json, SpaceJson};
pub use map::ContMap;
pub use pointset::{PointSet, Points, Subsets};
pub use space::FinSpace;

/// Largest supported number of points (point sets are 64-bit masks).
pub const MAX_POINTS: usize = 64;
