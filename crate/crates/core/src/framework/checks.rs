use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cover::{verify_t_collection, CategoryValue, TCollectionSpec, Verification};
use crate::error::Result;
use crate::finspace::{
    are_homotopic, enumerate_self_maps_homotopic_to_id, ContMap, FinSpace, MapEnumeration, PointSet, DEFAULT_MAP_CAP,
};
use crate::invariants::Invariants;

use super::{nu_from_t, t_from_nu, Axiom, CategoryFn, Claims};

/// How far the checkers enumerate before switching to sampling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Spaces up to this size get every subset (and pair of subsets).
    pub exhaustive_points: usize,
    /// Spaces up to this size get every (map, subset) pair for axiom (iv).
    pub map_exhaustive_points: usize,
    /// Draws per check when sampling.
    pub samples: usize,
    pub map_cap: usize,
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            exhaustive_points: 8,
            map_exhaustive_points: 6,
            samples: 4000,
            map_cap: DEFAULT_MAP_CAP,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    /// Every instance checked, no violation.
    Pass,
    /// No violation among the instances checked, which were not all of them.
    Sampled,
    Fail,
    /// Hypotheses not met; nothing asserted.
    Skipped,
}

/// A point set with its labels, for reports meant to be read.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledSet {
    pub bits: PointSet,
    pub points: Vec<String>,
}

impl LabeledSet {
    pub fn new(space: &FinSpace, set: PointSet) -> Self {
        LabeledSet {
            bits: set,
            points: space.format_set(set),
        }
    }
}

/// A counterexample, precise enough to be re-verified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Monotone {
        a: LabeledSet,
        b: LabeledSet,
        nu_a: CategoryValue,
        nu_b: CategoryValue,
    },
    Subadditive {
        a: LabeledSet,
        b: LabeledSet,
        nu_a: CategoryValue,
        nu_b: CategoryValue,
        nu_union: CategoryValue,
    },
    OpenExtension {
        a: LabeledSet,
        nu_a: CategoryValue,
    },
    HomotopyMonotone {
        map: Vec<usize>,
        a: LabeledSet,
        nu_a: CategoryValue,
        nu_image: CategoryValue,
    },
    Singleton {
        point: LabeledSet,
        value: CategoryValue,
    },
    Inequality {
        relation: String,
        set: LabeledSet,
        lhs: CategoryValue,
        rhs: CategoryValue,
    },
    Membership {
        relation: String,
        set: LabeledSet,
        left: bool,
        right: bool,
    },
}

impl Certificate {
    /// Re-evaluates an axiom certificate against `nu`; `true` when it still
    /// shows a violation. Relation certificates return `None`.
    pub fn recheck(&self, nu: &CategoryFn) -> Result<Option<bool>> {
        let space = nu.space();
        Ok(Some(match self {
            Certificate::Monotone { a, b, .. } => a.bits.is_subset(b.bits) && nu.eval(a.bits)? > nu.eval(b.bits)?,
            Certificate::Subadditive { a, b, .. } => nu.eval(a.bits | b.bits)? > nu.eval(a.bits)? + nu.eval(b.bits)?,
            Certificate::OpenExtension { a, .. } => {
                let va = nu.eval(a.bits)?;
                let mut found = false;
                for u in space.open_sets() {
                    if a.bits.is_subset(u) && nu.eval(u)? == va {
                        found = true;
                        break;
                    }
                }
                !found
            }
            Certificate::HomotopyMonotone { map, a, .. } => {
                let f = ContMap::new(space.clone(), space.clone(), map.clone())?;
                let id = ContMap::identity(space.clone());
                are_homotopic(&f, &id, DEFAULT_MAP_CAP)? && nu.eval(a.bits)? > nu.eval(f.image_of(a.bits))?
            }
            Certificate::Singleton { point, .. } => nu.eval(point.bits)? != CategoryValue::ONE,
            Certificate::Inequality { .. } | Certificate::Membership { .. } => return Ok(None),
        }))
    }
}

const KEEP_CERTIFICATES: usize = 5;

/// Counters shared by every check.
#[derive(Default)]
struct Tally {
    instances: u64,
    violations: u64,
    strict: u64,
    certificates: Vec<Certificate>,
}

impl Tally {
    fn violation(&mut self, cert: impl FnOnce() -> Certificate) {
        self.violations += 1;
        if self.certificates.len() < KEEP_CERTIFICATES {
            self.certificates.push(cert());
        }
    }

    fn status(&self, complete: bool) -> CheckStatus {
        if self.violations > 0 {
            CheckStatus::Fail
        } else if complete {
            CheckStatus::Pass
        } else {
            CheckStatus::Sampled
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    /// Whether the function's construction asserts this axiom; failures of
    /// unclaimed axioms are findings, not violations.
    pub claimed: bool,
    pub status: CheckStatus,
    pub instances: u64,
    pub violations: u64,
    pub certificates: Vec<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub invariant: String,
    pub claims: Claims,
    pub points: usize,
    pub maps: usize,
    pub maps_truncated: bool,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    /// Failures of claimed axioms.
    pub fn violations(&self) -> u64 {
        self.results.iter().filter(|r| r.claimed).map(|r| r.violations).sum()
    }

    pub fn result(&self, axiom: Axiom) -> &AxiomResult {
        self.results
            .iter()
            .find(|r| r.axiom == axiom)
            .expect("every axiom is reported")
    }
}

fn rng_for(budget: &Budget, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(budget.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn random_subset(rng: &mut ChaCha8Rng, within: PointSet) -> PointSet {
    PointSet::from_bits(rng.gen::<u64>() & within.bits())
}

/// Every subset when the space is small enough, else a seeded sample.
fn subsets_for(space: &FinSpace, budget: &Budget, salt: u64) -> (Vec<PointSet>, bool) {
    let full = space.points();
    if space.len() <= budget.exhaustive_points {
        (full.subsets().collect(), true)
    } else {
        let mut rng = rng_for(budget, salt);
        (
            (0..budget.samples).map(|_| random_subset(&mut rng, full)).collect(),
            false,
        )
    }
}

/// Checks axioms (i)-(v) against `nu`, enumerating self-maps for (iv).
pub fn check_axioms(nu: &CategoryFn, budget: &Budget) -> Result<AxiomReport> {
    let maps = enumerate_self_maps_homotopic_to_id(nu.space(), budget.map_cap);
    check_axioms_with_maps(nu, budget, &maps)
}

/// [`check_axioms`] with a precomputed enumeration of maps homotopic to the
/// identity.
pub fn check_axioms_with_maps(nu: &CategoryFn, budget: &Budget, maps: &MapEnumeration) -> Result<AxiomReport> {
    let space = nu.space().clone();
    let full = space.points();
    let small = space.len() <= budget.exhaustive_points;
    let label = |a: PointSet| LabeledSet::new(&space, a);
    let mut results = Vec::new();

    // (i)
    let mut t = Tally::default();
    let mut rng = rng_for(budget, 1);
    let pairs: Box<dyn Iterator<Item = (PointSet, PointSet)>> = if small {
        Box::new(full.subsets().flat_map(|b| b.subsets().map(move |a| (a, b))))
    } else {
        let v: Vec<_> = (0..budget.samples)
            .map(|_| {
                let b = random_subset(&mut rng, full);
                (random_subset(&mut rng, b), b)
            })
            .collect();
        Box::new(v.into_iter())
    };
    for (a, b) in pairs {
        t.instances += 1;
        let (va, vb) = (nu.eval(a)?, nu.eval(b)?);
        if va > vb {
            t.violation(|| Certificate::Monotone {
                a: label(a),
                b: label(b),
                nu_a: va,
                nu_b: vb,
            });
        }
    }
    results.push((Axiom::Monotone, t, small));

    // (ii)
    let mut t = Tally::default();
    let mut rng = rng_for(budget, 2);
    let pairs: Box<dyn Iterator<Item = (PointSet, PointSet)>> = if small {
        Box::new(full.subsets().flat_map(move |a| full.subsets().map(move |b| (a, b))))
    } else {
        let v: Vec<_> = (0..budget.samples)
            .map(|_| (random_subset(&mut rng, full), random_subset(&mut rng, full)))
            .collect();
        Box::new(v.into_iter())
    };
    for (a, b) in pairs {
        t.instances += 1;
        let (va, vb, vu) = (nu.eval(a)?, nu.eval(b)?, nu.eval(a | b)?);
        if vu > va + vb {
            t.violation(|| Certificate::Subadditive {
                a: label(a),
                b: label(b),
                nu_a: va,
                nu_b: vb,
                nu_union: vu,
            });
        }
    }
    results.push((Axiom::Subadditive, t, small));

    // (iii)
    let mut t = Tally::default();
    let (sets, complete) = subsets_for(&space, budget, 3);
    let mut opens: Option<Vec<PointSet>> = None;
    for a in sets {
        t.instances += 1;
        let va = nu.eval(a)?;
        if nu.eval(space.minimal_open_hull(a))? == va {
            continue;
        }
        let opens = opens.get_or_insert_with(|| space.open_sets());
        let mut found = false;
        for &u in opens.iter() {
            if a.is_subset(u) && nu.eval(u)? == va {
                found = true;
                break;
            }
        }
        if !found {
            t.violation(|| Certificate::OpenExtension { a: label(a), nu_a: va });
        }
    }
    results.push((Axiom::OpenExtension, t, complete));

    // (iv)
    let mut t = Tally::default();
    let complete = space.len() <= budget.map_exhaustive_points && !maps.truncated;
    let check = |f: &ContMap, a: PointSet, t: &mut Tally| -> Result<()> {
        t.instances += 1;
        let (va, vf) = (nu.eval(a)?, nu.eval(f.image_of(a))?);
        if va > vf {
            t.violation(|| Certificate::HomotopyMonotone {
                map: f.image().to_vec(),
                a: label(a),
                nu_a: va,
                nu_image: vf,
            });
        }
        Ok(())
    };
    if complete {
        for f in &maps.maps {
            for a in full.subsets() {
                check(f, a, &mut t)?;
            }
        }
    } else if !maps.maps.is_empty() {
        let mut rng = rng_for(budget, 4);
        for _ in 0..budget.samples {
            let f = &maps.maps[rng.gen_range(0..maps.maps.len())];
            let a = random_subset(&mut rng, full);
            check(f, a, &mut t)?;
        }
    }
    results.push((Axiom::HomotopyMonotone, t, complete));

    // (v)
    let mut t = Tally::default();
    for x in full.iter() {
        t.instances += 1;
        let v = nu.eval(PointSet::singleton(x))?;
        if v != CategoryValue::ONE {
            t.violation(|| Certificate::Singleton {
                point: label(PointSet::singleton(x)),
                value: v,
            });
        }
    }
    results.push((Axiom::Singleton, t, true));

    Ok(AxiomReport {
        invariant: nu.provenance().to_string(),
        claims: nu.claims(),
        points: space.len(),
        maps: maps.maps.len(),
        maps_truncated: maps.truncated,
        results: results
            .into_iter()
            .map(|(axiom, t, complete)| AxiomResult {
                axiom,
                claimed: nu.claims().contains(axiom),
                status: t.status(complete),
                instances: t.instances,
                violations: t.violations,
                certificates: t.certificates,
            })
            .collect(),
    })
}

/// Outcome of one relation check on one space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub check: String,
    pub status: CheckStatus,
    pub instances: u64,
    pub violations: u64,
    /// Instances of an inequality that were strict.
    pub strict: u64,
    pub notes: Vec<String>,
    pub certificates: Vec<Certificate>,
}

impl RelationReport {
    fn from_tally(check: impl Into<String>, t: Tally, complete: bool, notes: Vec<String>) -> Self {
        RelationReport {
            check: check.into(),
            status: t.status(complete),
            instances: t.instances,
            violations: t.violations,
            strict: t.strict,
            notes,
            certificates: t.certificates,
        }
    }

    pub fn skipped(check: impl Into<String>, reason: impl Into<String>) -> Self {
        RelationReport {
            check: check.into(),
            status: CheckStatus::Skipped,
            instances: 0,
            violations: 0,
            strict: 0,
            notes: vec![reason.into()],
            certificates: Vec::new(),
        }
    }
}

fn compare_le(t: &mut Tally, space: &FinSpace, relation: &str, a: PointSet, lhs: CategoryValue, rhs: CategoryValue) {
    t.instances += 1;
    if lhs > rhs {
        t.violation(|| Certificate::Inequality {
            relation: relation.to_string(),
            set: LabeledSet::new(space, a),
            lhs,
            rhs,
        });
    } else if lhs < rhs {
        t.strict += 1;
    }
}

fn compare_eq(t: &mut Tally, space: &FinSpace, relation: &str, a: PointSet, lhs: CategoryValue, rhs: CategoryValue) {
    t.instances += 1;
    if lhs != rhs {
        t.violation(|| Certificate::Inequality {
            relation: relation.to_string(),
            set: LabeledSet::new(space, a),
            lhs,
            rhs,
        });
    }
}

fn compare_membership(t: &mut Tally, space: &FinSpace, relation: &str, u: PointSet, left: bool, right: bool) {
    t.instances += 1;
    if left != right {
        t.violation(|| Certificate::Membership {
            relation: relation.to_string(),
            set: LabeledSet::new(space, u),
            left,
            right,
        });
    }
}

/// `ν(A) <= n · ν_{T_{ν,n}}(A)`.
pub fn check_lemma41(nu: &CategoryFn, n: u32, budget: &Budget) -> Result<RelationReport> {
    let space = nu.space().clone();
    let nu_tn = nu_from_t(&t_from_nu(nu, n));
    let relation = format!("{} <= {n} * nu_T[{}, {n}]", nu.provenance(), nu.provenance());
    let (sets, complete) = subsets_for(&space, budget, 41);
    let mut t = Tally::default();
    for a in sets {
        compare_le(&mut t, &space, &relation, a, nu.eval(a)?, n * nu_tn.eval(a)?);
    }
    Ok(RelationReport::from_tally(
        format!("lemma41:{n}"),
        t,
        complete,
        Vec::new(),
    ))
}

/// `ν_CL(A) <= ν_c(A) <= ν_H(A)`, each link counted as an instance.
pub fn check_chain(inv: &Arc<Invariants>, budget: &Budget) -> Result<RelationReport> {
    let space = inv.space().clone();
    let (sets, complete) = subsets_for(&space, budget, 55);
    let mut t = Tally::default();
    for a in sets {
        let (cl, c, h) = (inv.nu_cl(a)?, inv.nu_c(a)?.value, inv.nu_h(a)?.value);
        compare_le(&mut t, &space, "nu_CL <= nu_c", a, cl, c);
        compare_le(&mut t, &space, "nu_c <= nu_H", a, c, h);
    }
    Ok(RelationReport::from_tally("chain", t, complete, Vec::new()))
}

/// `T_{ν_CL} = T_c ∪ {∅}` over every open set.
pub fn check_t_nu_cl(inv: &Arc<Invariants>) -> Result<RelationReport> {
    let space = inv.space().clone();
    let mut t = Tally::default();
    for u in space.open_sets() {
        let left = inv.nu_cl(u)? <= CategoryValue::ONE;
        let right = u.is_empty() || inv.is_cohomologically_trivial(u)?;
        compare_membership(&mut t, &space, "T_nu_CL = T_c + {}", u, left, right);
    }
    Ok(RelationReport::from_tally("t_nu_cl", t, true, Vec::new()))
}

/// Membership of every open set in two collections.
fn compare_collections(
    t: &mut Tally,
    space: &FinSpace,
    relation: &str,
    left: &TCollectionSpec,
    right: &TCollectionSpec,
) -> Result<()> {
    for u in space.open_sets() {
        compare_membership(t, space, relation, u, left.contains(u)?, right.contains(u)?);
    }
    Ok(())
}

/// Pointwise equality of two category functions.
fn compare_functions(
    t: &mut Tally,
    space: &FinSpace,
    relation: &str,
    sets: &[PointSet],
    left: &CategoryFn,
    right: &CategoryFn,
) -> Result<()> {
    for &a in sets {
        compare_eq(t, space, relation, a, left.eval(a)?, right.eval(a)?);
    }
    Ok(())
}

/// Both identities `T_{ν_{T_ν}} = T_ν` and `ν_{T_{ν_T}} = ν_T` with `T = T_ν`.
pub fn check_prop42_nu(nu: &CategoryFn, budget: &Budget) -> Result<RelationReport> {
    let space = nu.space().clone();
    let t_nu = t_from_nu(nu, 1);
    let nu_t = nu_from_t(&t_nu);
    let t_nu_t = t_from_nu(&nu_t, 1);
    let nu_t_nu_t = nu_from_t(&t_nu_t);
    let mut t = Tally::default();
    compare_collections(&mut t, &space, "T[nu_T[T_nu]] = T_nu", &t_nu_t, &t_nu)?;
    let (sets, complete) = subsets_for(&space, budget, 42);
    compare_functions(&mut t, &space, "nu_T[T[nu_T]] = nu_T", &sets, &nu_t_nu_t, &nu_t)?;
    Ok(RelationReport::from_tally(
        format!("prop42[{}]", nu.provenance()),
        t,
        complete,
        Vec::new(),
    ))
}

/// Both identities starting from a collection: `ν_{T_{ν_T}} = ν_T` and
/// `T_{ν_{T_ν}} = T_ν` with `ν = ν_T`.
pub fn check_prop42_t(t_spec: &TCollectionSpec, budget: &Budget) -> Result<RelationReport> {
    let nu = nu_from_t(t_spec);
    let mut report = check_prop42_nu(&nu, budget)?;
    report.check = format!("prop42[{}]", t_spec.name());
    Ok(report)
}

/// `ν = ν_{T_ν}` iff `ν = ν_T` for some T-collection.
///
/// With `of_t_form`, the function is known to be some `ν_T` and the fixed
/// point equation is asserted. Whenever it holds, `T_ν` is checked to be a
/// T-collection, which is the witness for the converse.
pub fn check_cor43_nu(nu: &CategoryFn, of_t_form: bool, budget: &Budget) -> Result<RelationReport> {
    let space = nu.space().clone();
    let t_nu = t_from_nu(nu, 1);
    let nu_t_nu = nu_from_t(&t_nu);
    let (sets, complete) = subsets_for(&space, budget, 43);
    let mut fixed = Tally::default();
    compare_functions(&mut fixed, &space, "nu = nu_T[T_nu]", &sets, nu, &nu_t_nu)?;
    let is_fixed = fixed.violations == 0;
    let mut notes = vec![format!("fixed_point={is_fixed}")];
    let mut t = if of_t_form {
        fixed
    } else {
        Tally {
            instances: fixed.instances,
            ..Tally::default()
        }
    };
    let mut complete = complete;
    if is_fixed {
        let report = verify_t_collection(&t_nu, budget.map_cap)?;
        t.instances += report.maps_checked as u64;
        notes.push(format!("t_collection={:?}", report.status).to_lowercase());
        match report.status {
            Verification::Violated => {
                for v in report.violations.iter().take(KEEP_CERTIFICATES) {
                    t.violation(|| Certificate::Membership {
                        relation: format!("preimage under {:?} of member", v.map),
                        set: LabeledSet::new(&space, v.preimage),
                        left: true,
                        right: false,
                    });
                }
            }
            Verification::Sampled => complete = false,
            Verification::Complete => {}
        }
    }
    Ok(RelationReport::from_tally(
        format!("cor43[{}]", nu.provenance()),
        t,
        complete,
        notes,
    ))
}

/// `T = T_{ν_T}` iff `T = T_ν` for some category. With `source`, `T` was
/// built as `T_ν` and the fixed point equation is asserted.
pub fn check_cor43_t(t_spec: &TCollectionSpec, source: Option<&CategoryFn>) -> Result<RelationReport> {
    let space = t_spec.space().clone();
    let nu_t = nu_from_t(t_spec);
    let t_nu_t = t_from_nu(&nu_t, 1);
    let mut fixed = Tally::default();
    compare_collections(&mut fixed, &space, "T = T[nu_T]", t_spec, &t_nu_t)?;
    let is_fixed = fixed.violations == 0;
    let mut notes = vec![format!("fixed_point={is_fixed}")];
    let t = match source {
        Some(nu) => {
            notes.push(format!("source={}", nu.provenance()));
            fixed
        }
        None => Tally {
            instances: fixed.instances,
            ..Tally::default()
        },
    };
    Ok(RelationReport::from_tally(
        format!("cor43[{}]", t_spec.name()),
        t,
        true,
        notes,
    ))
}

/// Whether disjoint closed sets have disjoint open neighbourhoods.
///
/// A closed set's smallest neighbourhood is its open hull, and hulls of
/// disjoint closed `C`, `D` meet exactly when some `up(c) ∩ up(d)` is
/// nonempty. Since `down(c)` and `down(d)` are themselves disjoint closed
/// sets, it suffices to test pairs of points with disjoint down-sets.
pub fn is_normal(space: &FinSpace) -> bool {
    let n = space.len();
    (0..n)
        .all(|x| (x + 1..n).all(|y| !space.down(x).is_disjoint(space.down(y)) || space.up(x).is_disjoint(space.up(y))))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prop33Report {
    pub normal: bool,
    /// Whether `ν_LS` satisfies axiom (iii) on this space.
    pub ls_open_extension: bool,
    /// `ν_LS(A) = ν_LS(Ā)`.
    pub step1: RelationReport,
    /// `ν_H(A) <= ν_LS(A)`, given (iii) for `ν_LS`.
    pub step2: RelationReport,
    /// `ν_LS(A) <= ν_H(A)` on closed `A`, given normality.
    pub step3: RelationReport,
    /// `ν_LS(A) = ν_H(Ā)`, given both.
    pub conclusion: RelationReport,
}

impl Prop33Report {
    pub fn violations(&self) -> u64 {
        self.step1.violations + self.step2.violations + self.step3.violations + self.conclusion.violations
    }
}

pub fn check_prop33(inv: &Arc<Invariants>, budget: &Budget) -> Result<Prop33Report> {
    let space = inv.space().clone();
    let h = CategoryFn::nu_h(inv);
    let ls = CategoryFn::nu_ls(inv);
    let normal = is_normal(&space);
    let (sets, complete) = subsets_for(&space, budget, 33);

    // ν_LS is monotone, so (iii) holds at A exactly when the minimal open
    // hull already has the same value.
    let mut ls_open_extension = true;
    for &a in &sets {
        if ls.eval(space.minimal_open_hull(a))? != ls.eval(a)? {
            ls_open_extension = false;
            break;
        }
    }

    let mut t = Tally::default();
    for &a in &sets {
        compare_eq(
            &mut t,
            &space,
            "nu_LS(A) = nu_LS(cl A)",
            a,
            ls.eval(a)?,
            ls.eval(space.closure_of(a))?,
        );
    }
    let step1 = RelationReport::from_tally("prop33:step1", t, complete, Vec::new());

    let step2 = if ls_open_extension {
        let mut t = Tally::default();
        for &a in &sets {
            compare_le(&mut t, &space, "nu_H(A) <= nu_LS(A)", a, h.eval(a)?, ls.eval(a)?);
        }
        RelationReport::from_tally("prop33:step2", t, complete, Vec::new())
    } else {
        RelationReport::skipped("prop33:step2", "nu_LS fails axiom (iii)")
    };

    let step3 = if normal {
        let mut t = Tally::default();
        for &a in &sets {
            if space.is_closed(a) {
                compare_le(
                    &mut t,
                    &space,
                    "nu_LS(A) <= nu_H(A), A closed",
                    a,
                    ls.eval(a)?,
                    h.eval(a)?,
                );
            }
        }
        RelationReport::from_tally("prop33:step3", t, complete, Vec::new())
    } else {
        RelationReport::skipped("prop33:step3", "space is not normal")
    };

    let conclusion = if normal && ls_open_extension {
        let mut t = Tally::default();
        for &a in &sets {
            compare_eq(
                &mut t,
                &space,
                "nu_LS(A) = nu_H(cl A)",
                a,
                ls.eval(a)?,
                h.eval(space.closure_of(a))?,
            );
        }
        RelationReport::from_tally("prop33", t, complete, Vec::new())
    } else {
        let reason = if normal {
            "nu_LS fails axiom (iii)"
        } else {
            "space is not normal"
        };
        RelationReport::skipped("prop33", reason)
    };

    Ok(Prop33Report {
        normal,
        ls_open_extension,
        step1,
        step2,
        step3,
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finspace::builtin;
    use crate::Caps;

    fn inv(s: FinSpace) -> Arc<Invariants> {
        Arc::new(Invariants::new(Arc::new(s), Caps::default()))
    }

    /// Definitional normality: every pair of disjoint nonempty closed sets has
    /// disjoint open supersets.
    fn normal_by_search(space: &FinSpace) -> bool {
        let closed = space.closed_sets();
        let opens = space.open_sets();
        closed.iter().all(|&c| {
            closed.iter().all(|&d| {
                c.is_empty()
                    || d.is_empty()
                    || !c.is_disjoint(d)
                    || opens
                        .iter()
                        .any(|&u| c.is_subset(u) && opens.iter().any(|&v| d.is_subset(v) && u.is_disjoint(v)))
            })
        })
    }

    #[test]
    fn normality_examples() {
        assert!(!is_normal(&builtin::circle4()));
        assert!(is_normal(&builtin::chain(4)));
        assert!(is_normal(&builtin::antichain(3)));
        assert!(is_normal(&builtin::cone(3)));
        for s in [
            builtin::circle4(),
            builtin::chain(3),
            builtin::antichain(3),
            builtin::wedge2circles(),
            builtin::sphere(1),
            builtin::cone(3).opposite(),
        ] {
            assert_eq!(is_normal(&s), normal_by_search(&s));
        }
    }

    #[test]
    fn axioms_on_circle() {
        let i = inv(builtin::circle4());
        for nu in [
            CategoryFn::nu_h(&i),
            CategoryFn::nu_ls(&i),
            CategoryFn::nu_c(&i),
            CategoryFn::nu_cl(&i),
        ] {
            let report = check_axioms(&nu, &Budget::default()).unwrap();
            for axiom in [
                Axiom::Monotone,
                Axiom::Subadditive,
                Axiom::HomotopyMonotone,
                Axiom::Singleton,
            ] {
                assert_eq!(
                    report.result(axiom).status,
                    CheckStatus::Pass,
                    "{} {axiom}",
                    nu.provenance()
                );
            }
        }
    }

    #[test]
    fn constant_zero_fails_singleton() {
        let s = Arc::new(builtin::chain(2));
        let zero = CategoryFn::constant(s, CategoryValue::ZERO);
        let report = check_axioms(&zero, &Budget::default()).unwrap();
        let r = report.result(Axiom::Singleton);
        assert_eq!(r.status, CheckStatus::Fail);
        assert!(!r.claimed);
        assert_eq!(report.violations(), 0);
        assert_eq!(r.certificates[0].recheck(&zero).unwrap(), Some(true));
    }

    #[test]
    fn certificates_recheck() {
        // ν(A) = |A| on a chain: (iv) fails through the constant maps.
        let s = Arc::new(builtin::chain(2));
        let size = CategoryFn::new(s, "size", Claims::ALL, |a| Ok((a.len() as u32).into()));
        let report = check_axioms(&size, &Budget::default()).unwrap();
        let r = report.result(Axiom::HomotopyMonotone);
        assert_eq!(r.status, CheckStatus::Fail);
        assert!(report.violations() > 0);
        for c in &r.certificates {
            assert_eq!(c.recheck(&size).unwrap(), Some(true));
        }
    }

    #[test]
    fn lemma41_and_prop42_on_circle() {
        let i = inv(builtin::circle4());
        let b = Budget::default();
        for nu in [CategoryFn::nu_h(&i), CategoryFn::nu_cl(&i)] {
            for n in [1, 2] {
                assert_eq!(check_lemma41(&nu, n, &b).unwrap().violations, 0);
            }
            assert_eq!(check_prop42_nu(&nu, &b).unwrap().status, CheckStatus::Pass);
        }
        let h = check_lemma41(&CategoryFn::nu_h(&i), 1, &b).unwrap();
        assert_eq!(h.strict, 0);
        let all = TCollectionSpec::all_opens(i.space().clone());
        assert_eq!(check_prop42_t(&all, &b).unwrap().status, CheckStatus::Pass);
        let cor = check_cor43_nu(&CategoryFn::nu_h(&i), true, &b).unwrap();
        assert_eq!(cor.status, CheckStatus::Pass, "{cor:?}");
        let cor = check_cor43_t(&t_from_nu(&CategoryFn::nu_h(&i), 1), Some(&CategoryFn::nu_h(&i))).unwrap();
        assert_eq!(cor.status, CheckStatus::Pass);
    }

    #[test]
    fn prop33_examples() {
        let b = Budget::default();
        let circle = check_prop33(&inv(builtin::circle4()), &b).unwrap();
        assert!(!circle.normal);
        assert_eq!(circle.conclusion.status, CheckStatus::Skipped);
        for s in [builtin::chain(3), builtin::antichain(2), builtin::cone(3)] {
            let r = check_prop33(&inv(s), &b).unwrap();
            assert!(r.normal && r.ls_open_extension);
            assert_eq!(r.conclusion.status, CheckStatus::Pass);
            assert_eq!(r.violations(), 0);
        }
    }
}
