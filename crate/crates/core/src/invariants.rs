use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::cohom::SpaceCohomology;
use crate::cover::{maximal_trivial_closeds, maximal_trivial_opens, min_cover, CategoryValue, Cover};
use crate::error::{LsError, Result};
use crate::finspace::{
    enumerate_self_maps_homotopic_to_id, is_contractible_in, FinSpace, MapEnumeration, PointSet, DEFAULT_MAP_CAP,
    DEFAULT_ORACLE_BOUND,
};

/// Search limits shared by every computation on one space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Maximum maps visited by one homotopy search or self-map enumeration.
    pub maps: usize,
    /// Maximum `|cod|^|dom|` for exhaustive oracles.
    pub oracle: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            maps: DEFAULT_MAP_CAP,
            oracle: DEFAULT_ORACLE_BOUND,
        }
    }
}

/// All category computations on one finite space, with the expensive
/// pieces (trivial-set families, cohomology, self-maps) built once.
pub struct Invariants {
    space: Arc<FinSpace>,
    caps: Caps,
    contractible: Mutex<HashMap<PointSet, bool>>,
    contractible_opens: OnceLock<Result<Vec<PointSet>>>,
    contractible_closeds: OnceLock<Result<Vec<PointSet>>>,
    trivial_opens: OnceLock<Vec<PointSet>>,
    cohomology: OnceLock<SpaceCohomology>,
    cuplengths: Mutex<HashMap<PointSet, u32>>,
    self_maps: OnceLock<MapEnumeration>,
}

impl Invariants {
    pub fn new(space: Arc<FinSpace>, caps: Caps) -> Self {
        Invariants {
            space,
            caps,
            contractible: Mutex::default(),
            contractible_opens: OnceLock::new(),
            contractible_closeds: OnceLock::new(),
            trivial_opens: OnceLock::new(),
            cohomology: OnceLock::new(),
            cuplengths: Mutex::default(),
            self_maps: OnceLock::new(),
        }
    }

    pub fn space(&self) -> &Arc<FinSpace> {
        &self.space
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    /// Memoized [`is_contractible_in`].
    pub fn is_contractible_in(&self, a: PointSet) -> Result<bool> {
        if let Some(&v) = self.contractible.lock().unwrap().get(&a) {
            return Ok(v);
        }
        let v = is_contractible_in(&self.space, a, self.caps.maps)?;
        self.contractible.lock().unwrap().insert(a, v);
        Ok(v)
    }

    /// Maximal open sets contractible in the space.
    pub fn contractible_opens(&self) -> Result<&[PointSet]> {
        self.contractible_opens
            .get_or_init(|| maximal_trivial_opens(&self.space, |u| self.is_contractible_in(u)))
            .as_deref()
            .map_err(Clone::clone)
    }

    /// Maximal closed sets contractible in the space.
    pub fn contractible_closeds(&self) -> Result<&[PointSet]> {
        self.contractible_closeds
            .get_or_init(|| maximal_trivial_closeds(&self.space, |u| self.is_contractible_in(u)))
            .as_deref()
            .map_err(Clone::clone)
    }

    fn checked(&self, a: PointSet) -> Result<()> {
        self.space.check_fits(a)
    }

    pub fn nu_h(&self, a: PointSet) -> Result<Cover> {
        self.checked(a)?;
        if a.is_empty() {
            return Ok(Cover::empty());
        }
        Ok(min_cover(a, self.contractible_opens()?))
    }

    pub fn nu_ls(&self, a: PointSet) -> Result<Cover> {
        self.checked(a)?;
        if a.is_empty() {
            return Ok(Cover::empty());
        }
        Ok(min_cover(a, self.contractible_closeds()?))
    }

    pub fn cohomology(&self) -> &SpaceCohomology {
        self.cohomology.get_or_init(|| SpaceCohomology::new(self.space.clone()))
    }

    pub fn cuplength(&self, a: PointSet) -> Result<u32> {
        self.checked(a)?;
        if let Some(&v) = self.cuplengths.lock().unwrap().get(&a) {
            return Ok(v);
        }
        let v = self.cohomology().cuplength(a);
        self.cuplengths.lock().unwrap().insert(a, v);
        Ok(v)
    }

    pub fn is_cohomologically_trivial(&self, a: PointSet) -> Result<bool> {
        self.checked(a)?;
        Ok(self.cohomology().is_cohomologically_trivial(a))
    }

    /// Maximal cohomologically trivial open sets.
    pub fn trivial_opens(&self) -> &[PointSet] {
        self.trivial_opens.get_or_init(|| {
            maximal_trivial_opens(&self.space, |u| Ok(self.cohomology().is_cohomologically_trivial(u)))
                .expect("predicate is infallible")
        })
    }

    /// Covering number by cohomologically trivial open sets.
    pub fn nu_c(&self, a: PointSet) -> Result<Cover> {
        self.checked(a)?;
        if a.is_empty() {
            return Ok(Cover::empty());
        }
        Ok(min_cover(a, self.trivial_opens()))
    }

    /// Cup-length category: cup length of the smallest open set containing `a`.
    ///
    /// Cup length only grows with the set (restriction to a smaller set
    /// factors through the larger one), so the minimum over open supersets
    /// is attained at the minimal open hull.
    pub fn nu_cl(&self, a: PointSet) -> Result<CategoryValue> {
        self.checked(a)?;
        if a.is_empty() {
            return Ok(CategoryValue::ZERO);
        }
        Ok(self.cuplength(self.space.minimal_open_hull(a))?.into())
    }

    /// `ν_CL` by its definition: minimum of the cup length over all open
    /// sets containing `a`.
    pub fn nu_cl_by_definition(&self, a: PointSet) -> Result<CategoryValue> {
        self.checked(a)?;
        if a.is_empty() {
            return Ok(CategoryValue::ZERO);
        }
        let mut best = CategoryValue::Infinite;
        for u in self.space.open_sets() {
            if a.is_subset(u) {
                best = best.min(self.cuplength(u)?.into());
            }
        }
        Ok(best)
    }

    /// Self-maps homotopic to the identity, enumerated once up to the map cap.
    pub fn self_maps(&self) -> &MapEnumeration {
        self.self_maps
            .get_or_init(|| enumerate_self_maps_homotopic_to_id(&self.space, self.caps.maps))
    }

    /// Named invariant lookup used by the CLI and reports.
    pub fn by_name(&self, name: &str, a: PointSet) -> Result<Cover> {
        match name {
            "nu_H" => self.nu_h(a),
            "nu_LS" => self.nu_ls(a),
            "nu_c" => self.nu_c(a),
            "nu_CL" => Ok(Cover {
                value: self.nu_cl(a)?,
                witness: Vec::new(),
            }),
            "cuplength" => Ok(Cover {
                value: if a.is_empty() {
                    CategoryValue::ZERO
                } else {
                    self.cuplength(a)?.into()
                },
                witness: Vec::new(),
            }),
            other => Err(LsError::Invalid(format!("unknown invariant `{other}`"))),
        }
    }
}

/// Names accepted by [`Invariants::by_name`].
pub const INVARIANT_NAMES: &[&str] = &["nu_H", "nu_LS", "nu_c", "nu_CL", "cuplength"];
