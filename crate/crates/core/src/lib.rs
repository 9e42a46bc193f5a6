//! Ljusternik–Schnirelmann type categories on finite topological spaces.
//!
//! Finite T0 spaces are posets ([`finspace`]); open sets are up-sets. On top
//! of the homotopy engine sit the covering categories ([`cover`]), F2
//! cohomology with cup products ([`cohom`]), the algebra of categories,
//! precategories and T-collections ([`framework`]), and randomized
//! verification suites ([`harness`]).

pub mod cohom;
pub mod cover;
pub mod error;
pub mod finspace;
pub mod framework;
pub mod harness;
mod invariants;

pub use error::{LsError, Result};
pub use finspace::{ContMap, FinSpace, PointSet};
pub use invariants::{Caps, Invariants, INVARIANT_NAMES};
