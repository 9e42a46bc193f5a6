//! Categories and precategories as evaluable set functions, the combinators
//! relating them to T-collections, and finite checkers for the axioms and
//! the structural results about them.

mod checks;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Serialize, Serializer};

use crate::cover::{min_cover, nu_t, t_of_nu, CategoryValue, TCollectionSpec};
use crate::error::{LsError, Result};
use crate::finspace::{FinSpace, PointSet};
use crate::invariants::Invariants;

pub use checks::{
    check_axioms, check_axioms_with_maps, check_chain, check_cor43_nu, check_cor43_t, check_lemma41, check_prop33,
    check_prop42_nu, check_prop42_t, check_t_nu_cl, is_normal, AxiomReport, AxiomResult, Budget, Certificate,
    CheckStatus, LabeledSet, Prop33Report, RelationReport,
};

/// The category axioms, numbered (i)-(v).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// (i) `A ⊆ B ⇒ ν(A) <= ν(B)`.
    Monotone,
    /// (ii) `ν(A ∪ B) <= ν(A) + ν(B)`.
    Subadditive,
    /// (iii) some open `U ⊇ A` has `ν(U) = ν(A)`.
    OpenExtension,
    /// (iv) `ν(A) <= ν(f(A))` for `f` homotopic to the identity.
    HomotopyMonotone,
    /// (v) `ν({x}) = 1`.
    Singleton,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [
        Axiom::Monotone,
        Axiom::Subadditive,
        Axiom::OpenExtension,
        Axiom::HomotopyMonotone,
        Axiom::Singleton,
    ];

    pub fn numeral(self) -> &'static str {
        match self {
            Axiom::Monotone => "i",
            Axiom::Subadditive => "ii",
            Axiom::OpenExtension => "iii",
            Axiom::HomotopyMonotone => "iv",
            Axiom::Singleton => "v",
        }
    }

    pub fn from_numeral(s: &str) -> Option<Axiom> {
        Axiom::ALL.into_iter().find(|a| a.numeral() == s)
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.numeral())
    }
}

impl Serialize for Axiom {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.numeral())
    }
}

/// A set of axioms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Claims(u8);

impl Claims {
    pub const NONE: Claims = Claims(0);
    pub const ALL: Claims = Claims(0b11111);
    /// (i)-(iv): what every category satisfies.
    pub const CATEGORY: Claims = Claims(0b01111);

    pub fn of(axioms: &[Axiom]) -> Claims {
        Claims(axioms.iter().fold(0, |acc, a| acc | a.bit()))
    }

    pub fn contains(self, a: Axiom) -> bool {
        self.0 & a.bit() != 0
    }

    pub fn with(self, a: Axiom) -> Claims {
        Claims(self.0 | a.bit())
    }

    pub fn without(self, a: Axiom) -> Claims {
        Claims(self.0 & !a.bit())
    }

    pub fn intersect(self, other: Claims) -> Claims {
        Claims(self.0 & other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = Axiom> {
        Axiom::ALL.into_iter().filter(move |a| self.contains(*a))
    }
}

impl fmt::Debug for Claims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for Claims {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

type EvalFn = dyn Fn(PointSet) -> Result<CategoryValue> + Send + Sync;

struct Inner {
    space: Arc<FinSpace>,
    eval: Box<EvalFn>,
    memo: Mutex<HashMap<PointSet, CategoryValue>>,
    claims: Claims,
    provenance: String,
}

/// A function `2^M -> Z ∪ {+∞}` with the axioms its construction asserts.
///
/// Evaluation is memoized and `ν(∅) = 0` always. Cloning shares the memo.
#[derive(Clone)]
pub struct CategoryFn(Arc<Inner>);

impl fmt::Debug for CategoryFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CategoryFn")
            .field("provenance", &self.0.provenance)
            .field("claims", &self.0.claims)
            .finish_non_exhaustive()
    }
}

impl CategoryFn {
    pub fn new(
        space: Arc<FinSpace>,
        provenance: impl Into<String>,
        claims: Claims,
        eval: impl Fn(PointSet) -> Result<CategoryValue> + Send + Sync + 'static,
    ) -> Self {
        CategoryFn(Arc::new(Inner {
            space,
            eval: Box::new(eval),
            memo: Mutex::default(),
            claims,
            provenance: provenance.into(),
        }))
    }

    pub fn space(&self) -> &Arc<FinSpace> {
        &self.0.space
    }

    pub fn claims(&self) -> Claims {
        self.0.claims
    }

    pub fn provenance(&self) -> &str {
        &self.0.provenance
    }

    pub fn eval(&self, a: PointSet) -> Result<CategoryValue> {
        self.0.space.check_fits(a)?;
        if a.is_empty() {
            return Ok(CategoryValue::ZERO);
        }
        if let Some(&v) = self.0.memo.lock().unwrap().get(&a) {
            return Ok(v);
        }
        let v = (self.0.eval)(a)?;
        self.0.memo.lock().unwrap().insert(a, v);
        Ok(v)
    }

    pub fn clear_cache(&self) {
        self.0.memo.lock().unwrap().clear();
    }

    /// Same function under a different name and claim set.
    pub fn relabel(&self, provenance: impl Into<String>, claims: Claims) -> CategoryFn {
        let inner = self.clone();
        CategoryFn::new(self.space().clone(), provenance, claims, move |a| inner.eval(a))
    }

    pub fn constant(space: Arc<FinSpace>, value: CategoryValue) -> Self {
        let claims = match value {
            CategoryValue::Finite(1) => Claims::ALL,
            _ => Claims::CATEGORY,
        };
        CategoryFn::new(space, format!("const({value})"), claims, move |_| Ok(value))
    }

    pub fn nu_h(inv: &Arc<Invariants>) -> Self {
        let inv2 = inv.clone();
        CategoryFn::new(inv.space().clone(), "nu_H", Claims::ALL, move |a| {
            Ok(inv2.nu_h(a)?.value)
        })
    }

    pub fn nu_ls(inv: &Arc<Invariants>) -> Self {
        let inv2 = inv.clone();
        CategoryFn::new(
            inv.space().clone(),
            "nu_LS",
            Claims::ALL.without(Axiom::OpenExtension),
            move |a| Ok(inv2.nu_ls(a)?.value),
        )
    }

    pub fn nu_c(inv: &Arc<Invariants>) -> Self {
        let inv2 = inv.clone();
        CategoryFn::new(inv.space().clone(), "nu_c", Claims::ALL, move |a| {
            Ok(inv2.nu_c(a)?.value)
        })
    }

    pub fn nu_cl(inv: &Arc<Invariants>) -> Self {
        let inv2 = inv.clone();
        CategoryFn::new(inv.space().clone(), "nu_CL", Claims::ALL, move |a| inv2.nu_cl(a))
    }

    /// One of `nu_H`, `nu_LS`, `nu_c`, `nu_CL`.
    pub fn by_name(inv: &Arc<Invariants>, name: &str) -> Result<Self> {
        match name {
            "nu_H" => Ok(Self::nu_h(inv)),
            "nu_LS" => Ok(Self::nu_ls(inv)),
            "nu_c" => Ok(Self::nu_c(inv)),
            "nu_CL" => Ok(Self::nu_cl(inv)),
            other => Err(LsError::Invalid(format!("unknown category `{other}`"))),
        }
    }
}

/// Category names accepted by [`CategoryFn::by_name`].
pub const CATEGORY_NAMES: &[&str] = &["nu_H", "nu_LS", "nu_c", "nu_CL"];

/// A function on open sets only, satisfying (ii) and (iv).
#[derive(Clone)]
pub struct PrecategoryFn {
    space: Arc<FinSpace>,
    eval: Arc<EvalFn>,
    memo: Arc<Mutex<HashMap<PointSet, CategoryValue>>>,
    monotone: bool,
    provenance: String,
}

impl fmt::Debug for PrecategoryFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PrecategoryFn")
            .field("provenance", &self.provenance)
            .field("monotone", &self.monotone)
            .finish_non_exhaustive()
    }
}

impl PrecategoryFn {
    /// `monotone` asserts `U ⊆ V ⇒ ν₀(U) <= ν₀(V)` on open sets, which lets
    /// [`tilde`] evaluate at the minimal open hull.
    pub fn new(
        space: Arc<FinSpace>,
        provenance: impl Into<String>,
        monotone: bool,
        eval: impl Fn(PointSet) -> Result<CategoryValue> + Send + Sync + 'static,
    ) -> Self {
        PrecategoryFn {
            space,
            eval: Arc::new(eval),
            memo: Arc::default(),
            monotone,
            provenance: provenance.into(),
        }
    }

    pub fn space(&self) -> &Arc<FinSpace> {
        &self.space
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn is_monotone(&self) -> bool {
        self.monotone
    }

    pub fn claims(&self) -> Claims {
        Claims::of(&[Axiom::Subadditive, Axiom::HomotopyMonotone])
    }

    /// Fails with [`LsError::NotOpen`] off the topology.
    pub fn eval(&self, u: PointSet) -> Result<CategoryValue> {
        self.space.check_fits(u)?;
        if !self.space.is_open(u) {
            return Err(LsError::NotOpen);
        }
        if let Some(&v) = self.memo.lock().unwrap().get(&u) {
            return Ok(v);
        }
        let v = (self.eval)(u)?;
        self.memo.lock().unwrap().insert(u, v);
        Ok(v)
    }

    /// Cup length of open sets.
    pub fn cuplength(inv: &Arc<Invariants>) -> Self {
        let inv2 = inv.clone();
        PrecategoryFn::new(inv.space().clone(), "cuplength", true, move |u| {
            if u.is_empty() {
                return Ok(CategoryValue::ZERO);
            }
            Ok(inv2.cuplength(u)?.into())
        })
    }

    /// `ν_LS` restricted to open sets.
    pub fn nu_ls(inv: &Arc<Invariants>) -> Self {
        let inv2 = inv.clone();
        PrecategoryFn::new(inv.space().clone(), "nu_LS", true, move |u| Ok(inv2.nu_ls(u)?.value))
    }

    pub fn constant(space: Arc<FinSpace>, value: CategoryValue) -> Self {
        PrecategoryFn::new(space, format!("const({value})"), true, move |u| {
            Ok(if u.is_empty() { CategoryValue::ZERO } else { value })
        })
    }
}

/// `ν̃₀(A) = min { ν₀(U) : U open, A ⊆ U }`.
pub fn tilde(nu0: &PrecategoryFn) -> CategoryFn {
    let p = nu0.clone();
    let space = nu0.space.clone();
    let opens: OnceLock<Vec<PointSet>> = OnceLock::new();
    CategoryFn::new(
        space.clone(),
        format!("tilde({})", nu0.provenance),
        Claims::CATEGORY,
        move |a| {
            if p.monotone {
                return p.eval(space.minimal_open_hull(a));
            }
            let mut best = CategoryValue::Infinite;
            for &u in opens.get_or_init(|| space.open_sets()) {
                if a.is_subset(u) {
                    best = best.min(p.eval(u)?);
                }
            }
            Ok(best)
        },
    )
}

/// `ν̄(A) = ν(Ā)`. (iii) needs normality and is only claimed on normal spaces.
pub fn bar(nu: &CategoryFn) -> CategoryFn {
    let inner = nu.clone();
    let space = nu.space().clone();
    let mut claims = nu.claims().intersect(Claims::of(&[
        Axiom::Monotone,
        Axiom::Subadditive,
        Axiom::HomotopyMonotone,
        Axiom::Singleton,
    ]));
    if nu.claims().contains(Axiom::OpenExtension) && is_normal(&space) {
        claims = claims.with(Axiom::OpenExtension);
    }
    CategoryFn::new(space.clone(), format!("bar({})", nu.provenance()), claims, move |a| {
        inner.eval(space.closure_of(a))
    })
}

/// `ν_T`: covering number by members of `T`.
pub fn nu_from_t(t: &TCollectionSpec) -> CategoryFn {
    let spec = t.clone();
    let candidates: OnceLock<Result<Vec<PointSet>>> = OnceLock::new();
    CategoryFn::new(
        t.space().clone(),
        format!("nu_T({})", t.name()),
        Claims::CATEGORY,
        move |a| {
            let cands = candidates
                .get_or_init(|| spec.cover_candidates())
                .as_ref()
                .map_err(Clone::clone)?;
            Ok(min_cover(a, cands).value)
        },
    )
}

/// `T_{ν,n}`: open sets with `ν(U) <= n`.
pub fn t_from_nu(nu: &CategoryFn, n: u32) -> TCollectionSpec {
    t_of_nu(nu, n)
}

/// Uncached [`nu_t`] re-exported for symmetry with [`nu_from_t`].
pub fn nu_t_value(t: &TCollectionSpec, a: PointSet) -> Result<CategoryValue> {
    Ok(nu_t(t, a)?.value)
}
