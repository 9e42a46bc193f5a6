use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{LsError, Result};
use crate::finspace::{enumerate_self_maps_homotopic_to_id, FinSpace, PointSet};
use crate::framework::{Axiom, CategoryFn};

use super::{maximal_trivial_opens, min_cover, Cover};

pub type SetPredicate = Arc<dyn Fn(PointSet) -> Result<bool> + Send + Sync>;

#[derive(Clone)]
pub enum TKind {
    /// A listed family of open sets.
    Explicit(Vec<PointSet>),
    /// The open sets satisfying a predicate.
    Predicate {
        test: SetPredicate,
        /// Whether subsets (open) of members are members; lets covers use
        /// maximal members only.
        downward_closed: bool,
    },
}

/// A family of open sets, candidate T-collection.
///
/// Closure under preimages of self-maps homotopic to the identity is not
/// assumed; [`verify_t_collection`] tests it.
#[derive(Clone)]
pub struct TCollectionSpec {
    space: Arc<FinSpace>,
    name: String,
    kind: TKind,
}

impl fmt::Debug for TCollectionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TCollectionSpec")
            .field("name", &self.name)
            .field("points", &self.space.len())
            .finish_non_exhaustive()
    }
}

impl TCollectionSpec {
    pub fn explicit(space: Arc<FinSpace>, name: impl Into<String>, sets: Vec<PointSet>) -> Result<Self> {
        for &u in &sets {
            space.check_fits(u)?;
            if !space.is_open(u) {
                return Err(LsError::NotOpen);
            }
        }
        let mut sets = sets;
        sets.sort();
        sets.dedup();
        Ok(TCollectionSpec {
            space,
            name: name.into(),
            kind: TKind::Explicit(sets),
        })
    }

    pub fn predicate(
        space: Arc<FinSpace>,
        name: impl Into<String>,
        downward_closed: bool,
        test: impl Fn(PointSet) -> Result<bool> + Send + Sync + 'static,
    ) -> Self {
        TCollectionSpec {
            space,
            name: name.into(),
            kind: TKind::Predicate {
                test: Arc::new(test),
                downward_closed,
            },
        }
    }

    /// Every open set.
    pub fn all_opens(space: Arc<FinSpace>) -> Self {
        Self::predicate(space, "opens", true, |_| Ok(true))
    }

    pub fn space(&self) -> &Arc<FinSpace> {
        &self.space
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &TKind {
        &self.kind
    }

    pub fn is_downward_closed(&self) -> bool {
        matches!(
            self.kind,
            TKind::Predicate {
                downward_closed: true,
                ..
            }
        )
    }

    pub fn contains(&self, u: PointSet) -> Result<bool> {
        if !self.space.fits(u) || !self.space.is_open(u) {
            return Ok(false);
        }
        match &self.kind {
            TKind::Explicit(sets) => Ok(sets.binary_search(&u).is_ok()),
            TKind::Predicate { test, .. } => test(u),
        }
    }

    /// All members, including `∅` when it belongs, sorted by bit value.
    pub fn members(&self) -> Result<Vec<PointSet>> {
        match &self.kind {
            TKind::Explicit(sets) => Ok(sets.clone()),
            TKind::Predicate { test, .. } => {
                let mut out = Vec::new();
                for u in self.space.open_sets() {
                    if test(u)? {
                        out.push(u);
                    }
                }
                Ok(out)
            }
        }
    }

    /// Nonempty members sufficient for covering: maximal ones when the
    /// family is downward closed, all of them otherwise.
    pub fn cover_candidates(&self) -> Result<Vec<PointSet>> {
        match &self.kind {
            TKind::Predicate {
                test,
                downward_closed: true,
            } => maximal_trivial_opens(&self.space, |u| test(u)),
            _ => Ok(self.members()?.into_iter().filter(|u| !u.is_empty()).collect()),
        }
    }

    pub fn intersection(&self, other: &TCollectionSpec) -> TCollectionSpec {
        let (a, b) = (self.clone(), other.clone());
        let closed = self.is_downward_closed() && other.is_downward_closed();
        TCollectionSpec::predicate(
            self.space.clone(),
            format!("({} ∩ {})", self.name, other.name),
            closed,
            move |u| Ok(a.contains(u)? && b.contains(u)?),
        )
    }

    pub fn union(&self, other: &TCollectionSpec) -> TCollectionSpec {
        let (a, b) = (self.clone(), other.clone());
        let closed = self.is_downward_closed() && other.is_downward_closed();
        TCollectionSpec::predicate(
            self.space.clone(),
            format!("({} ∪ {})", self.name, other.name),
            closed,
            move |u| Ok(a.contains(u)? || b.contains(u)?),
        )
    }
}

/// Covering number of `a` by members of `t`.
pub fn nu_t(t: &TCollectionSpec, a: PointSet) -> Result<Cover> {
    t.space.check_fits(a)?;
    Ok(min_cover(a, &t.cover_candidates()?))
}

/// `T_{ν,n}`: open sets `U` with `ν(U) <= n`.
pub fn t_of_nu(nu: &CategoryFn, n: u32) -> TCollectionSpec {
    let inner = nu.clone();
    TCollectionSpec::predicate(
        nu.space().clone(),
        format!("T[{}, {n}]", nu.provenance()),
        nu.claims().contains(Axiom::Monotone),
        move |u| Ok(inner.eval(u)?.finite().is_some_and(|v| v <= n)),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verification {
    /// Every self-map homotopic to the identity was checked.
    Complete,
    /// Map enumeration hit its cap; only a prefix was checked.
    Sampled,
    Violated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TViolation {
    pub map: Vec<usize>,
    pub set: PointSet,
    pub preimage: PointSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TCollectionReport {
    pub status: Verification,
    pub maps_checked: usize,
    pub members_checked: usize,
    pub violations: Vec<TViolation>,
}

/// Checks `f^{-1}(U) ∈ T` for every enumerated `f ≃ id` and every member `U`.
///
/// An empty preimage is accepted: the empty set covers nothing and is
/// treated as trivial by every family.
pub fn verify_t_collection(t: &TCollectionSpec, cap: usize) -> Result<TCollectionReport> {
    let maps = enumerate_self_maps_homotopic_to_id(&t.space, cap);
    let members: Vec<PointSet> = if t.is_downward_closed() {
        t.cover_candidates()?
    } else {
        t.members()?
    };
    let mut violations = Vec::new();
    for f in &maps.maps {
        for &u in &members {
            let pre = f.preimage(u);
            if !pre.is_empty() && !t.contains(pre)? {
                violations.push(TViolation {
                    map: f.image().to_vec(),
                    set: u,
                    preimage: pre,
                });
            }
        }
    }
    let status = if !violations.is_empty() {
        Verification::Violated
    } else if maps.truncated {
        Verification::Sampled
    } else {
        Verification::Complete
    };
    Ok(TCollectionReport {
        status,
        maps_checked: maps.maps.len(),
        members_checked: members.len(),
        violations,
    })
}

/// `{f^{-1}(U) : f ≃ id}` over the enumerated maps, nonempty sets only.
pub fn pullback_family(space: &Arc<FinSpace>, u: PointSet, cap: usize) -> (Vec<PointSet>, bool) {
    let maps = enumerate_self_maps_homotopic_to_id(space, cap);
    let mut sets: Vec<PointSet> = maps
        .maps
        .iter()
        .map(|f| f.preimage(u))
        .filter(|p| !p.is_empty())
        .collect();
    sets.sort();
    sets.dedup();
    (sets, maps.truncated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::CategoryValue;
    use crate::finspace::builtin;

    #[test]
    fn nu_t_examples() {
        let s = Arc::new(builtin::circle4());
        let all = TCollectionSpec::all_opens(s.clone());
        assert_eq!(
            nu_t(&all, s.parse_subset("c").unwrap()).unwrap().value,
            CategoryValue::ONE
        );
        let none = TCollectionSpec::explicit(s.clone(), "none", vec![]).unwrap();
        assert_eq!(nu_t(&none, s.points()).unwrap().value, CategoryValue::Infinite);
        let minimal = TCollectionSpec::explicit(s.clone(), "U_x", (0..4).map(|x| s.up(x)).collect()).unwrap();
        assert_eq!(nu_t(&minimal, s.points()).unwrap().value, CategoryValue::Finite(2));
        assert!(matches!(
            TCollectionSpec::explicit(s.clone(), "bad", vec![s.parse_subset("c").unwrap()]),
            Err(LsError::NotOpen)
        ));
    }

    #[test]
    fn violation_reported_on_chain() {
        let s = Arc::new(builtin::chain(3));
        let top = PointSet::singleton(2);
        let t = TCollectionSpec::explicit(s.clone(), "top", vec![top]).unwrap();
        let report = verify_t_collection(&t, 1000).unwrap();
        assert_eq!(report.status, Verification::Violated);
        // The constant map at the top pulls {top} back to the whole space.
        assert!(report
            .violations
            .iter()
            .any(|v| v.map == vec![2, 2, 2] && v.preimage == s.points()));
        let all = TCollectionSpec::all_opens(s);
        assert_eq!(verify_t_collection(&all, 1000).unwrap().status, Verification::Complete);
    }
}
