use std::sync::Arc;

use lscat::cohom::Cohomology;
use lscat::framework::{
    check_axioms_with_maps, check_chain, check_cor43_nu, check_lemma41, check_prop33, check_prop42_nu, check_t_nu_cl,
    Budget, CategoryFn, CheckStatus, RelationReport, CATEGORY_NAMES,
};
use lscat::harness::{run_full_report, GenConfig};
use lscat::{Invariants, LsError, PointSet, Result, INVARIANT_NAMES};
use serde::Serialize;
use serde_json::{json, Value};

use crate::demo;
use crate::manifest::{Command, Loaded, RunManifest};

/// A finished report and whether it records a failure.
pub struct Outcome {
    pub report: Value,
    pub failed: bool,
}

pub fn run(manifest: &RunManifest, threads: usize) -> Result<Outcome> {
    let (body, failed) = match manifest.command {
        Command::Compute => compute(manifest)?,
        Command::Axioms => axioms(manifest)?,
        Command::Relations => relations(manifest)?,
        Command::Verify => verify(manifest, threads)?,
        Command::Demo => (demo::catalog(), false),
    };
    let mut report = json!({ "manifest": manifest });
    if let (Value::Object(out), Value::Object(body)) = (&mut report, body) {
        out.extend(body);
    }
    Ok(Outcome { report, failed })
}

fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn load(manifest: &RunManifest) -> Result<Loaded> {
    manifest
        .input
        .as_ref()
        .ok_or_else(|| LsError::Invalid("this command needs --space or --complex".into()))?
        .load()
}

fn invariants(manifest: &RunManifest) -> Result<Arc<Invariants>> {
    Ok(Arc::new(Invariants::new(load(manifest)?.space, manifest.caps)))
}

fn budget(manifest: &RunManifest) -> Budget {
    Budget {
        seed: manifest.seed,
        map_cap: manifest.caps.maps,
        ..Budget::default()
    }
}

fn labeled(inv: &Invariants, sets: &[PointSet]) -> Vec<Vec<String>> {
    sets.iter().map(|&s| inv.space().format_set(s)).collect()
}

/// Expands `all` into the names it stands for.
fn expand<'a>(ops: &'a [String], all: &'a [&'a str]) -> Vec<&'a str> {
    if ops.iter().any(|o| o == "all") {
        all.to_vec()
    } else {
        ops.iter().map(String::as_str).collect()
    }
}

fn compute(manifest: &RunManifest) -> Result<(Value, bool)> {
    let loaded = load(manifest)?;
    let inv = Arc::new(Invariants::new(loaded.space, manifest.caps));
    let space = inv.space().clone();
    let a = space.parse_subset(manifest.subset.as_deref().unwrap_or("full"))?;
    let mut results = Vec::new();
    let mut values = serde_json::Map::new();
    let mut failed = false;
    for name in expand(&manifest.operations, INVARIANT_NAMES) {
        let outcome = inv.by_name(name, a).map(|mut cover| {
            if name == "nu_CL" && !a.is_empty() {
                cover.witness = vec![space.minimal_open_hull(a)];
            }
            cover
        });
        match outcome {
            Ok(cover) => {
                values.insert(name.to_string(), to_value(&cover.value));
                results.push(json!({
                    "invariant": name,
                    "value": cover.value,
                    "witness": labeled(&inv, &cover.witness),
                    "status": "ok",
                }));
            }
            Err(e) => {
                failed = true;
                results.push(json!({ "invariant": name, "status": "error", "error": crate::error_json(&e) }));
            }
        }
    }
    let mut body = json!({
        "points": space.len(),
        "subset": space.format_set(a),
        "values": values,
        "results": results,
    });
    if manifest.operations.iter().any(|o| o == "all" || o == "cuplength") {
        body["betti"] = to_value(&inv.cohomology().cohomology().betti_numbers());
    }
    if let Some(complex) = loaded.complex {
        body["complex"] = json!({
            "vertices": complex.vertex_count(),
            "euler_characteristic": complex.euler_characteristic(),
            "betti": Cohomology::new(Arc::new(complex)).betti_numbers(),
        });
    }
    Ok((body, failed))
}

fn axioms(manifest: &RunManifest) -> Result<(Value, bool)> {
    let inv = invariants(manifest)?;
    let budget = budget(manifest);
    let mut reports = Vec::new();
    let mut violations = 0;
    for name in expand(&manifest.operations, CATEGORY_NAMES) {
        let nu = CategoryFn::by_name(&inv, name)?;
        let report = check_axioms_with_maps(&nu, &budget, inv.self_maps())?;
        violations += report.violations();
        reports.push(to_value(&report));
    }
    let body = json!({
        "points": inv.space().len(),
        "status": if violations == 0 { "pass" } else { "fail" },
        "violations": violations,
        "reports": reports,
    });
    Ok((body, violations > 0))
}

/// Categories a relation check runs on when `--invariant all` is given.
fn relation_targets(check: &str) -> &'static [&'static str] {
    match check {
        "prop42" | "cor43" => &["nu_H", "nu_c", "nu_CL"],
        _ => CATEGORY_NAMES,
    }
}

fn relation_check(inv: &Arc<Invariants>, check: &str, nu_names: &[String], budget: &Budget) -> Result<Vec<Value>> {
    let names = expand(nu_names, relation_targets(check));
    let mut out = Vec::new();
    let (head, arg) = check.split_once(':').unwrap_or((check, ""));
    match head {
        "chain" => out.push(to_value(&check_chain(inv, budget)?)),
        "t_nu_cl" => out.push(to_value(&check_t_nu_cl(inv)?)),
        "prop33" => out.push(to_value(&check_prop33(inv, budget)?)),
        "lemma41" => {
            let n: u32 = arg.parse().ok().filter(|&n| n >= 1).ok_or_else(|| {
                LsError::Invalid(format!("lemma41 needs a positive n, as in lemma41:2; got `{check}`"))
            })?;
            for name in names {
                let r = check_lemma41(&CategoryFn::by_name(inv, name)?, n, budget)?;
                out.push(json!({ "invariant": name, "report": r }));
            }
        }
        "prop42" => {
            for name in names {
                let r = if name == "nu_LS" {
                    RelationReport::skipped("prop42", "nu_LS lacks axiom (iii) in general")
                } else {
                    check_prop42_nu(&CategoryFn::by_name(inv, name)?, budget)?
                };
                out.push(json!({ "invariant": name, "report": r }));
            }
        }
        "cor43" => {
            for name in names {
                let of_t_form = matches!(name, "nu_H" | "nu_c");
                let r = check_cor43_nu(&CategoryFn::by_name(inv, name)?, of_t_form, budget)?;
                out.push(json!({ "invariant": name, "report": r }));
            }
        }
        _ => {
            return Err(LsError::Invalid(format!(
                "unknown check `{check}`; expected prop42, prop33, lemma41:n, chain, cor43 or t_nu_cl"
            )))
        }
    }
    Ok(out)
}

/// Overall status of one serialized relation or prop33 report.
fn status_of(v: &Value) -> (CheckStatus, u64) {
    let r = v.get("report").unwrap_or(v);
    if let Some(c) = r.get("conclusion") {
        let violations = ["step1", "step2", "step3", "conclusion"]
            .iter()
            .filter_map(|k| r[k]["violations"].as_u64())
            .sum();
        let status = serde_json::from_value(c["status"].clone()).unwrap_or(CheckStatus::Skipped);
        return (if violations > 0 { CheckStatus::Fail } else { status }, violations);
    }
    let status = serde_json::from_value(r["status"].clone()).unwrap_or(CheckStatus::Skipped);
    (status, r["violations"].as_u64().unwrap_or(0))
}

fn relations(manifest: &RunManifest) -> Result<(Value, bool)> {
    let inv = invariants(manifest)?;
    let budget = budget(manifest);
    let mut reports = Vec::new();
    let (mut violations, mut any_checked) = (0, false);
    for check in &manifest.checks {
        for r in relation_check(&inv, check, &manifest.operations, &budget)? {
            let (status, v) = status_of(&r);
            violations += v;
            any_checked |= status != CheckStatus::Skipped;
            reports.push(json!({ "check": check, "status": status, "result": r }));
        }
    }
    let status = match (violations, any_checked) {
        (0, false) => "skipped",
        (0, true) => "pass",
        _ => "fail",
    };
    let body = json!({
        "points": inv.space().len(),
        "status": status,
        "violations": violations,
        "reports": reports,
    });
    Ok((body, violations > 0))
}

fn verify(manifest: &RunManifest, threads: usize) -> Result<(Value, bool)> {
    let (min_points, max_points) = manifest.sizes.unwrap_or((3, 7));
    let cfg = GenConfig {
        seed: manifest.seed,
        min_points,
        max_points,
        count: manifest.count.unwrap_or(200),
        caps: manifest.caps,
        ..GenConfig::default()
    };
    let report = run_full_report(&cfg, threads);
    let failed = report.violations > 0 || report.errors > 0;
    let status = if failed {
        "fail"
    } else if report.exercised {
        "pass"
    } else {
        "underexercised"
    };
    let body = json!({ "status": status, "report": report });
    Ok((body, failed))
}
