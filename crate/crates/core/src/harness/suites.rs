use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cohom::{check_prop51, CohomClass, Lemma57Checker, Lemma57Outcome, Prop51Outcome, SpaceCohomology};
use crate::cover::{pullback_family, verify_t_collection, CategoryValue, TCollectionSpec, Verification};
use crate::error::{LsError, Result};
use crate::finspace::{are_homotopic, find_beat_points, ContMap, FinSpace, MapPoset, PointSet, SpaceJson};
use crate::framework::{
    check_axioms_with_maps, check_cor43_nu, check_cor43_t, check_lemma41, check_prop33, check_prop42_nu,
    check_prop42_t, nu_from_t, t_from_nu, Budget, CategoryFn, CheckStatus, RelationReport, CATEGORY_NAMES,
};
use crate::invariants::Invariants;

use super::generate::{gen_posets, rng, GenConfig, Instance};

const KEEP_CERTIFICATES: usize = 10;

/// A violation or error found on one named space.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteCertificate {
    pub space: String,
    pub structure: SpaceJson,
    pub detail: Value,
}

/// Aggregated outcome of one suite over many spaces.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    /// Spaces the suite looked at.
    pub spaces: u64,
    /// Instances whose hypotheses held and were checked.
    pub checked: u64,
    /// Instances whose hypotheses failed.
    pub skipped: u64,
    pub violations: u64,
    /// Computations that hit a cap or failed; never counted as passes.
    pub errors: u64,
    /// Strict inequalities seen in inequality suites.
    pub strict: u64,
    pub min_checked: u64,
    pub notes: BTreeMap<String, u64>,
    pub certificates: Vec<SuiteCertificate>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, min_checked: u64) -> Self {
        SuiteReport {
            suite: suite.into(),
            spaces: 0,
            checked: 0,
            skipped: 0,
            violations: 0,
            errors: 0,
            strict: 0,
            min_checked,
            notes: BTreeMap::new(),
            certificates: Vec::new(),
        }
    }

    /// Enough instances were checked and none failed.
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.errors == 0 && self.checked >= self.min_checked
    }

    pub fn exercised(&self) -> bool {
        self.checked >= self.min_checked
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.spaces += other.spaces;
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.violations += other.violations;
        self.errors += other.errors;
        self.strict += other.strict;
        for (k, v) in other.notes {
            *self.notes.entry(k).or_default() += v;
        }
        for c in other.certificates {
            if self.certificates.len() < KEEP_CERTIFICATES {
                self.certificates.push(c);
            }
        }
    }

    fn note(&mut self, key: impl Into<String>) {
        *self.notes.entry(key.into()).or_default() += 1;
    }

    fn certify(&mut self, name: &str, space: &FinSpace, detail: Value) {
        if self.certificates.len() < KEEP_CERTIFICATES {
            self.certificates.push(SuiteCertificate {
                space: name.to_string(),
                structure: SpaceJson::from_space(space),
                detail,
            });
        }
    }

    fn violation(&mut self, name: &str, space: &FinSpace, detail: Value) {
        self.violations += 1;
        self.certify(name, space, detail);
    }

    fn error(&mut self, name: &str, space: &FinSpace, err: &LsError) {
        self.errors += 1;
        self.certify(name, space, json!({ "error": err.to_string() }));
    }

    /// Folds a framework relation report in as one instance.
    fn relation(&mut self, name: &str, space: &FinSpace, r: &RelationReport) {
        if r.status == CheckStatus::Skipped {
            self.skipped += 1;
            return;
        }
        self.checked += 1;
        self.strict += r.strict;
        if r.violations > 0 {
            self.violations += r.violations;
            self.certify(name, space, serde_json::to_value(r).expect("serializable"));
        }
    }
}

/// Runs `body`, recording an error instead of propagating it.
fn guarded(report: &mut SuiteReport, inst: &Instance, body: impl FnOnce(&mut SuiteReport) -> Result<()>) {
    report.spaces += 1;
    if let Err(e) = body(report) {
        report.error(&inst.name, &inst.space, &e);
    }
}

fn subsets(space: &FinSpace, budget: &Budget, rng: &mut ChaCha8Rng) -> Vec<PointSet> {
    let full = space.points();
    if space.len() <= budget.exhaustive_points {
        full.subsets().collect()
    } else {
        (0..budget.samples)
            .map(|_| PointSet::from_bits(rng.gen::<u64>() & full.bits()))
            .collect()
    }
}

/// Spaces at most this large get the exhaustive definitional suites.
pub const DEFINITIONAL_POINTS: usize = 8;
/// Spaces at most this large get the chain suite over every subset.
pub const CHAIN_EXHAUSTIVE_POINTS: usize = 6;
/// Map enumeration for T-collection checks stays complete up to this size.
pub const TCOLLECTION_POINTS: usize = 7;
pub const PROP51_TRIALS_PER_SPACE: usize = 3;

pub const SUITE_NAMES: &[&str] = &[
    "homotopy",
    "axioms:nu_H",
    "axioms:nu_LS",
    "axioms:nu_c",
    "axioms:nu_CL",
    "lemma31",
    "tcollection",
    "prop33",
    "lemma41",
    "prop42",
    "cor43",
    "prop51",
    "lemma57",
    "chain",
    "t_nu_cl",
    "nu_cl_fast_path",
];

fn min_checked(suite: &str) -> u64 {
    match suite {
        "homotopy" => 500,
        "prop51" => 100,
        _ => 20,
    }
}

pub fn empty_reports() -> Vec<SuiteReport> {
    SUITE_NAMES
        .iter()
        .map(|s| SuiteReport::new(*s, min_checked(s)))
        .collect()
}

/// Every per-space suite on one instance, in [`SUITE_NAMES`] order (the
/// homotopy slot is left empty; it runs on pairs of spaces).
pub fn run_instance(id: u64, inst: &Instance, cfg: &GenConfig, budget: &Budget) -> Vec<SuiteReport> {
    let space = Arc::new(inst.space.clone());
    let inv = Arc::new(Invariants::new(space.clone(), cfg.caps));
    let mut r = rng(cfg.seed, 1000 + id);
    let mut reports = empty_reports();
    let slot = |name: &str| -> usize { SUITE_NAMES.iter().position(|s| *s == name).expect("known suite") };

    for name in CATEGORY_NAMES {
        let idx = slot(&format!("axioms:{name}"));
        guarded(&mut reports[idx], inst, |rep| axioms(rep, inst, &inv, name, budget));
    }
    let idx = slot("lemma31");
    guarded(&mut reports[idx], inst, |rep| lemma31(rep, inst, &inv, budget, &mut r));
    let idx = slot("tcollection");
    guarded(&mut reports[idx], inst, |rep| tcollection(rep, inst, &inv));
    let idx = slot("prop33");
    guarded(&mut reports[idx], inst, |rep| prop33(rep, inst, &inv, budget));
    let idx = slot("lemma41");
    guarded(&mut reports[idx], inst, |rep| lemma41(rep, inst, &inv, budget));
    let idx = slot("prop42");
    guarded(&mut reports[idx], inst, |rep| prop42(rep, inst, &inv, budget));
    let idx = slot("cor43");
    guarded(&mut reports[idx], inst, |rep| cor43(rep, inst, &inv, budget));
    let idx = slot("prop51");
    guarded(&mut reports[idx], inst, |rep| {
        prop51(rep, inst, inv.cohomology(), PROP51_TRIALS_PER_SPACE, &mut r)
    });
    let idx = slot("lemma57");
    guarded(&mut reports[idx], inst, |rep| {
        lemma57(rep, inst, &space, budget, &mut r)
    });
    let idx = slot("chain");
    guarded(&mut reports[idx], inst, |rep| chain(rep, inst, &inv, budget, &mut r));
    if space.len() <= DEFINITIONAL_POINTS {
        let idx = slot("t_nu_cl");
        guarded(&mut reports[idx], inst, |rep| t_nu_cl(rep, inst, &inv));
        let idx = slot("nu_cl_fast_path");
        guarded(&mut reports[idx], inst, |rep| nu_cl_fast_path(rep, inst, &inv));
    }
    reports
}

fn axioms(rep: &mut SuiteReport, inst: &Instance, inv: &Arc<Invariants>, name: &str, budget: &Budget) -> Result<()> {
    let nu = CategoryFn::by_name(inv, name)?;
    let maps = inv.self_maps();
    let report = check_axioms_with_maps(&nu, budget, maps)?;
    rep.checked += 1;
    for r in &report.results {
        match r.status {
            CheckStatus::Fail if !r.claimed => rep.note(format!("unclaimed_fail:{}", r.axiom)),
            CheckStatus::Sampled => rep.note(format!("sampled:{}", r.axiom)),
            _ => {}
        }
    }
    let v = report.violations();
    if v > 0 {
        rep.violations += v;
        rep.certify(
            &inst.name,
            &inst.space,
            serde_json::to_value(&report).expect("serializable"),
        );
    }
    Ok(())
}

/// Domination by beat-point retractions, in both directions.
fn lemma31(
    rep: &mut SuiteReport,
    inst: &Instance,
    inv: &Arc<Invariants>,
    budget: &Budget,
    r: &mut ChaCha8Rng,
) -> Result<()> {
    let space = inv.space();
    let beats = find_beat_points(space);
    if beats.is_empty() {
        rep.skipped += 1;
        return Ok(());
    }
    for beat in beats {
        rep.checked += 1;
        let reduced = Invariants::new(beat.reduced.clone(), inv.caps());
        let round = beat.inclusion.then(&beat.retraction)?;
        let id = ContMap::identity(space.clone());
        if !are_homotopic(&beat.retraction.then(&beat.inclusion)?, &id, inv.caps().maps)? {
            rep.violation(&inst.name, space, json!({ "beat": beat.point, "failed": "i∘r ≃ id" }));
            continue;
        }
        if round.image().iter().enumerate().any(|(i, &y)| i != y) {
            rep.violation(&inst.name, space, json!({ "beat": beat.point, "failed": "r∘i = id" }));
            continue;
        }
        // Y = X' dominates X through f = r, g = i.
        for a in subsets(&beat.reduced, budget, r) {
            let lhs = inv.nu_h(beat.retraction.preimage(a))?.value;
            let rhs = reduced.nu_h(a)?.value;
            if lhs > rhs {
                rep.violation(
                    &inst.name,
                    space,
                    json!({ "beat": beat.point, "map": "r", "a": a, "lhs": lhs, "rhs": rhs }),
                );
            } else if lhs < rhs {
                rep.strict += 1;
            }
        }
        // X dominates X' through f = i, g = r.
        for b in subsets(space, budget, r) {
            let lhs = reduced.nu_h(beat.inclusion.preimage(b))?.value;
            let rhs = inv.nu_h(b)?.value;
            if lhs > rhs {
                rep.violation(
                    &inst.name,
                    space,
                    json!({ "beat": beat.point, "map": "i", "a": b, "lhs": lhs, "rhs": rhs }),
                );
            }
        }
        let (whole, part) = (
            inv.nu_h(space.points())?.value,
            reduced.nu_h(beat.reduced.points())?.value,
        );
        if whole != part {
            rep.violation(
                &inst.name,
                space,
                json!({ "beat": beat.point, "failed": "homotopy invariance", "X": whole, "X'": part }),
            );
        }
    }
    Ok(())
}

fn record_verification(
    rep: &mut SuiteReport,
    inst: &Instance,
    what: &str,
    t: &TCollectionSpec,
    cap: usize,
) -> Result<()> {
    let report = verify_t_collection(t, cap)?;
    match report.status {
        Verification::Complete => rep.checked += 1,
        Verification::Sampled => {
            rep.checked += 1;
            rep.note("sampled");
        }
        Verification::Violated => {
            rep.checked += 1;
            rep.violation(
                &inst.name,
                &inst.space,
                json!({ "collection": what, "violations": report.violations.iter().take(3).collect::<Vec<_>>() }),
            );
        }
    }
    Ok(())
}

/// Pullback collections of single open sets, the contractible opens, and
/// intersections and unions of pullback collections.
fn tcollection(rep: &mut SuiteReport, inst: &Instance, inv: &Arc<Invariants>) -> Result<()> {
    let space = inv.space();
    let maps = inv.self_maps();
    if space.len() > TCOLLECTION_POINTS || maps.truncated {
        rep.skipped += 1;
        return Ok(());
    }
    let cap = inv.caps().maps;
    let mut families = Vec::new();
    let mut seeds: Vec<PointSet> = (0..space.len()).map(|x| space.up(x)).collect();
    seeds.push(space.points());
    seeds.sort();
    seeds.dedup();
    for u in seeds {
        let (sets, truncated) = pullback_family(space, u, cap);
        if truncated {
            rep.skipped += 1;
            continue;
        }
        let name = format!("pullbacks({:?})", space.format_set(u));
        let t = TCollectionSpec::explicit(space.clone(), name.clone(), sets)?;
        record_verification(rep, inst, &name, &t, cap)?;
        families.push(t);
    }
    let inv2 = inv.clone();
    let contractible = TCollectionSpec::predicate(space.clone(), "contractible", true, move |u| {
        if u.is_empty() {
            return Ok(true);
        }
        inv2.is_contractible_in(u)
    });
    record_verification(rep, inst, "contractible", &contractible, cap)?;
    for pair in families.windows(2) {
        let both = pair[0].intersection(&pair[1]);
        record_verification(rep, inst, both.name(), &both, cap)?;
        let either = pair[0].union(&pair[1]);
        record_verification(rep, inst, either.name(), &either, cap)?;
    }
    Ok(())
}

fn prop33(rep: &mut SuiteReport, inst: &Instance, inv: &Arc<Invariants>, budget: &Budget) -> Result<()> {
    let r = check_prop33(inv, budget)?;
    if r.normal {
        rep.note("normal");
    }
    if r.ls_open_extension {
        rep.note("nu_LS_axiom_iii");
    }
    for step in [&r.step1, &r.step2, &r.step3] {
        if step.status != CheckStatus::Skipped {
            rep.note(step.check.clone());
        }
    }
    if r.conclusion.status == CheckStatus::Skipped {
        rep.skipped += 1;
    } else {
        rep.checked += 1;
    }
    let v = r.violations();
    if v > 0 {
        rep.violations += v;
        rep.certify(&inst.name, &inst.space, serde_json::to_value(&r).expect("serializable"));
    }
    Ok(())
}

fn lemma41(rep: &mut SuiteReport, inst: &Instance, inv: &Arc<Invariants>, budget: &Budget) -> Result<()> {
    for name in CATEGORY_NAMES {
        let nu = CategoryFn::by_name(inv, name)?;
        for n in [1, 2] {
            let r = check_lemma41(&nu, n, budget)?;
            if r.strict > 0 {
                rep.note(format!("strict:{name}:{n}"));
            }
            rep.relation(&inst.name, &inst.space, &r);
        }
    }
    Ok(())
}

fn prop42(rep: &mut SuiteReport, inst: &Instance, inv: &Arc<Invariants>, budget: &Budget) -> Result<()> {
    for name in ["nu_H", "nu_c", "nu_CL"] {
        let nu = CategoryFn::by_name(inv, name)?;
        rep.relation(&inst.name, &inst.space, &check_prop42_nu(&nu, budget)?);
    }
    let all = TCollectionSpec::all_opens(inv.space().clone());
    rep.relation(&inst.name, &inst.space, &check_prop42_t(&all, budget)?);
    Ok(())
}

fn cor43(rep: &mut SuiteReport, inst: &Instance, inv: &Arc<Invariants>, budget: &Budget) -> Result<()> {
    for (name, of_t_form) in [("nu_H", true), ("nu_c", true), ("nu_CL", false), ("nu_LS", false)] {
        let nu = CategoryFn::by_name(inv, name)?;
        let r = check_cor43_nu(&nu, of_t_form, budget)?;
        if r.notes.iter().any(|n| n == "fixed_point=true") {
            rep.note(format!("fixed_point:{name}"));
        }
        rep.relation(&inst.name, &inst.space, &r);
    }
    for name in ["nu_H", "nu_CL"] {
        let nu = CategoryFn::by_name(inv, name)?;
        let t = t_from_nu(&nu, 1);
        rep.relation(&inst.name, &inst.space, &check_cor43_t(&t, Some(&nu))?);
    }
    Ok(())
}

/// A random nonzero class: a nonempty sum of basis classes of one degree.
fn random_class(coh: &SpaceCohomology, r: &mut ChaCha8Rng) -> Option<CohomClass> {
    let c = coh.cohomology();
    let degrees: Vec<usize> = (1..c.betti_numbers().len()).filter(|&k| c.betti(k) > 0).collect();
    let &k = degrees.choose(r)?;
    let basis = c.basis(k);
    let mut class = c.zero(k);
    while class.rep.is_zero() || !r.gen_bool(0.5) {
        let b = &basis[r.gen_range(0..basis.len())];
        class.rep.xor_assign(&b.rep);
        if !class.rep.is_zero() && c.betti(k) == 1 {
            break;
        }
    }
    Some(class)
}

/// An open set on which `class` vanishes: unions of one or two minimal
/// neighbourhoods or hulls of random sets, whichever is found first.
fn vanishing_open(coh: &SpaceCohomology, class: &CohomClass, r: &mut ChaCha8Rng) -> Option<PointSet> {
    let space = coh.space();
    let n = space.len();
    for _ in 0..24 {
        let u = if r.gen_bool(0.5) {
            let k = r.gen_range(1..=2);
            (0..k).fold(PointSet::EMPTY, |acc, _| acc | space.up(r.gen_range(0..n)))
        } else {
            space.minimal_open_hull(PointSet::from_bits(r.gen::<u64>() & space.points().bits()))
        };
        if !u.is_empty() && coh.restricts_to_zero(class, u) {
            return Some(u);
        }
    }
    None
}

/// Random trials of the vanishing of `a ∪ b` on `U ∪ V`.
pub fn prop51(
    rep: &mut SuiteReport,
    inst: &Instance,
    coh: &SpaceCohomology,
    trials: usize,
    r: &mut ChaCha8Rng,
) -> Result<()> {
    let space = coh.space();
    for _ in 0..trials {
        let (Some(a), Some(b)) = (random_class(coh, r), random_class(coh, r)) else {
            rep.skipped += 1;
            continue;
        };
        let (Some(u), Some(v)) = (vanishing_open(coh, &a, r), vanishing_open(coh, &b, r)) else {
            rep.skipped += 1;
            continue;
        };
        match check_prop51(coh, u, v, &a, &b) {
            Prop51Outcome::PreconditionUnmet => rep.skipped += 1,
            Prop51Outcome::Holds => {
                rep.checked += 1;
                if !coh.cohomology().is_zero(&coh.cohomology().cup(&a, &b)) {
                    rep.note("nonzero_product");
                }
                if (u | v) == space.points() {
                    rep.note("covering_pair");
                }
            }
            Prop51Outcome::Violated => rep.violation(
                &inst.name,
                space,
                json!({ "u": space.format_set(u), "v": space.format_set(v), "degrees": [a.degree, b.degree] }),
            ),
        }
    }
    Ok(())
}

fn lemma57_map(rep: &mut SuiteReport, inst: &Instance, what: &str, f: ContMap, budget: &Budget, r: &mut ChaCha8Rng) {
    let checker = Lemma57Checker::new(f);
    if !checker.is_surjective() {
        rep.skipped += 1;
        return;
    }
    rep.checked += 1;
    let dom = checker.map().dom().clone();
    for a in subsets(&dom, budget, r) {
        if let Lemma57Outcome::Violated { source, image } = checker.check(a) {
            rep.violation(
                &inst.name,
                &inst.space,
                json!({ "map": what, "image": checker.map().image(), "a": a, "source": source, "image_cuplength": image }),
            );
        }
    }
}

/// Beat-point retractions and inclusions (isomorphisms on cohomology) and a
/// constant self-map (skipped unless the space is acyclic).
fn lemma57(
    rep: &mut SuiteReport,
    inst: &Instance,
    space: &Arc<FinSpace>,
    budget: &Budget,
    r: &mut ChaCha8Rng,
) -> Result<()> {
    for beat in find_beat_points(space) {
        lemma57_map(rep, inst, "retraction", beat.retraction, budget, r);
        lemma57_map(rep, inst, "inclusion", beat.inclusion, budget, r);
    }
    let constant = ContMap::constant(space.clone(), space.clone(), 0)?;
    lemma57_map(rep, inst, "constant", constant, budget, r);
    lemma57_map(rep, inst, "identity", ContMap::identity(space.clone()), budget, r);
    Ok(())
}

/// `ν_CL <= ν_c <= ν_H` on every subset (sampled on large spaces).
fn chain(
    rep: &mut SuiteReport,
    inst: &Instance,
    inv: &Arc<Invariants>,
    budget: &Budget,
    r: &mut ChaCha8Rng,
) -> Result<()> {
    let space = inv.space();
    let local = Budget {
        exhaustive_points: budget.exhaustive_points.max(CHAIN_EXHAUSTIVE_POINTS),
        ..*budget
    };
    let sets = subsets(space, &local, r);
    if space.len() <= CHAIN_EXHAUSTIVE_POINTS {
        rep.note("exhaustive");
    }
    rep.checked += 1;
    for a in sets {
        let cl = inv.nu_cl(a)?;
        let c = inv.nu_c(a)?.value;
        let h = inv.nu_h(a)?.value;
        if cl > c || c > h {
            rep.violation(
                &inst.name,
                space,
                json!({ "a": space.format_set(a), "nu_CL": cl, "nu_c": c, "nu_H": h }),
            );
        } else if cl < h {
            rep.strict += 1;
        }
    }
    Ok(())
}

/// `T_{ν_CL} = T_c ∪ {∅}` by enumerating open sets, and `ν_c = ν_{T_{ν_CL}}`.
fn t_nu_cl(rep: &mut SuiteReport, inst: &Instance, inv: &Arc<Invariants>) -> Result<()> {
    let space = inv.space();
    rep.checked += 1;
    for u in space.open_sets() {
        let in_t_cl = inv.nu_cl(u)? <= CategoryValue::ONE;
        let in_tc = u.is_empty() || inv.is_cohomologically_trivial(u)?;
        if in_t_cl != in_tc {
            rep.violation(
                &inst.name,
                space,
                json!({ "u": space.format_set(u), "in_T_nu_CL": in_t_cl, "in_T_c_or_empty": in_tc }),
            );
        }
    }
    let nu_t = nu_from_t(&t_from_nu(&CategoryFn::nu_cl(inv), 1));
    for a in space.points().subsets() {
        let (c, t) = (inv.nu_c(a)?.value, nu_t.eval(a)?);
        if c != t {
            rep.violation(
                &inst.name,
                space,
                json!({ "a": space.format_set(a), "nu_c": c, "nu_T_nu_CL": t }),
            );
        }
    }
    Ok(())
}

fn nu_cl_fast_path(rep: &mut SuiteReport, inst: &Instance, inv: &Arc<Invariants>) -> Result<()> {
    let space = inv.space();
    rep.checked += 1;
    for a in space.points().subsets() {
        let (fast, slow) = (inv.nu_cl(a)?, inv.nu_cl_by_definition(a)?);
        if fast != slow {
            rep.violation(
                &inst.name,
                space,
                json!({ "a": space.format_set(a), "hull": fast, "definition": slow }),
            );
        }
    }
    Ok(())
}

/// Agreement of the move search with the exhaustive map-poset oracle on
/// `groups` random (domain, codomain) pairs, `per_group` map pairs each.
pub fn run_homotopy_suite(cfg: &GenConfig, groups: usize, per_group: usize) -> SuiteReport {
    use rayon::prelude::*;
    let pool_cfg = GenConfig {
        min_points: 2,
        max_points: 5,
        count: 60,
        ..cfg.clone()
    };
    let pool: Vec<Arc<FinSpace>> = gen_posets(&pool_cfg).into_iter().map(Arc::new).collect();
    let parts: Vec<SuiteReport> = (0..groups)
        .into_par_iter()
        .map(|g| homotopy_group(cfg, &pool, g as u64, per_group))
        .collect();
    let mut total = SuiteReport::new("homotopy", min_checked("homotopy"));
    for p in parts {
        total.merge(p);
    }
    total
}

fn homotopy_group(cfg: &GenConfig, pool: &[Arc<FinSpace>], g: u64, per_group: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("homotopy", 0);
    let mut r = rng(cfg.seed, 500_000 + g);
    let dom = pool[r.gen_range(0..pool.len())].clone();
    let cod = pool[r.gen_range(0..pool.len())].clone();
    let name = format!("maps {} -> {} points", dom.len(), cod.len());
    rep.spaces += 1;
    let oracle = match MapPoset::build(&dom, &cod, cfg.caps.oracle) {
        Ok(o) => o,
        Err(LsError::OracleBound { .. }) => {
            rep.skipped += 1;
            return rep;
        }
        Err(e) => {
            rep.error(&name, &dom, &e);
            return rep;
        }
    };
    let maps: Vec<Vec<usize>> = oracle.maps().collect();
    rep.note(format!("pairs:{}->{}", dom.len(), cod.len()));
    for _ in 0..per_group {
        let f = maps[r.gen_range(0..maps.len())].clone();
        let g = if r.gen_bool(0.5) {
            let same = oracle.component_members(&f);
            same[r.gen_range(0..same.len())].clone()
        } else {
            maps[r.gen_range(0..maps.len())].clone()
        };
        let fm = ContMap::new(dom.clone(), cod.clone(), f.clone()).expect("oracle maps are continuous");
        let gm = ContMap::new(dom.clone(), cod.clone(), g.clone()).expect("oracle maps are continuous");
        let expected = oracle.homotopic(&f, &g).expect("both enumerated");
        match are_homotopic(&fm, &gm, cfg.caps.maps) {
            Ok(got) => {
                rep.checked += 1;
                rep.note(if expected { "homotopic" } else { "not_homotopic" });
                if got != expected {
                    rep.violation(
                        &name,
                        &dom,
                        json!({ "codomain": SpaceJson::from_space(&cod), "f": f, "g": g, "search": got, "oracle": expected }),
                    );
                }
            }
            Err(e) => rep.error(&name, &dom, &e),
        }
    }
    rep
}
