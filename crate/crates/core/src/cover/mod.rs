//! Covering categories: exact minimum covers, the homotopy categories
//! `ν_H` (open sets contractible in the space) and `ν_LS` (closed ones),
//! and T-collections with their covering numbers.

mod solver;
mod tcollection;
mod value;

use std::sync::Arc;

pub use solver::{maximal_trivial_closeds, maximal_trivial_opens, maximal_trivial_sets, min_cover, Cover, Side};
pub use tcollection::{
    nu_t, pullback_family, t_of_nu, verify_t_collection, SetPredicate, TCollectionReport, TCollectionSpec, TKind,
    TViolation, Verification,
};
pub use value::CategoryValue;

use crate::error::Result;
use crate::finspace::{FinSpace, PointSet};
use crate::invariants::{Caps, Invariants};

/// Minimum number of open sets contractible in `space` covering `a`.
///
/// Covers `a`, not the whole space: the definition reads "required to cover
/// M", which would make the value independent of `a`.
pub fn nu_h(space: &Arc<FinSpace>, a: PointSet, caps: Caps) -> Result<Cover> {
    Invariants::new(space.clone(), caps).nu_h(a)
}

/// Minimum number of closed sets contractible in `space` covering `a`.
pub fn nu_ls(space: &Arc<FinSpace>, a: PointSet, caps: Caps) -> Result<Cover> {
    Invariants::new(space.clone(), caps).nu_ls(a)
}
