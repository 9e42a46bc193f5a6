//! Random instance generation and the theorem suites run over it.

mod generate;
mod suites;

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

pub use generate::{gen_posets, isomorphic, random_poset, targeted_families, Dedup, GenConfig, Instance};
pub use suites::{
    empty_reports, prop51, run_homotopy_suite, run_instance, SuiteCertificate, SuiteReport, CHAIN_EXHAUSTIVE_POINTS,
    DEFINITIONAL_POINTS, PROP51_TRIALS_PER_SPACE, SUITE_NAMES, TCOLLECTION_POINTS,
};

use crate::finspace::builtin;
pub use crate::framework::is_normal;
use crate::framework::Budget;

/// Homotopy suite shape: groups of map pairs sharing a domain and codomain.
pub const HOMOTOPY_GROUPS: usize = 120;
pub const HOMOTOPY_PAIRS_PER_GROUP: usize = 5;

/// Suite results over targeted families and `cfg.count` random spaces.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FullReport {
    pub config: GenConfig,
    pub instances: usize,
    pub suites: Vec<SuiteReport>,
    pub violations: u64,
    pub errors: u64,
    /// Every suite reached its minimum number of checked instances.
    pub exercised: bool,
}

impl FullReport {
    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.suite == name)
    }

    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }
}

/// Every instance the full report runs on, in a fixed order.
pub fn instances(cfg: &GenConfig) -> Vec<Instance> {
    let mut out = targeted_families(cfg.seed);
    out.extend(gen_posets(cfg).into_iter().enumerate().map(|(i, space)| Instance {
        name: format!("random#{i}"),
        space,
    }));
    out
}

/// Extra cohomologically rich spaces for the cup-product trials.
fn prop51_extras(cfg: &GenConfig, report: &mut SuiteReport) {
    let names = ["torus16", "face(rp2_6)", "face(torus7)", "circle4", "wedge2circles"];
    for (i, name) in names.iter().enumerate() {
        let space = Arc::new(builtin::parse(name).expect("known builtin"));
        let coh = crate::cohom::SpaceCohomology::new(space.clone());
        let inst = Instance {
            name: name.to_string(),
            space: (*space).clone(),
        };
        let mut r = generate::rng(cfg.seed, 900_000 + i as u64);
        report.spaces += 1;
        if let Err(e) = prop51(report, &inst, &coh, 30, &mut r) {
            report.errors += 1;
            report.notes.insert(format!("error:{name}:{e}"), 1);
        }
    }
}

/// Runs every suite. The result depends only on `cfg`, never on `threads`.
pub fn run_full_report(cfg: &GenConfig, threads: usize) -> FullReport {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        let insts = instances(cfg);
        let budget = Budget {
            seed: cfg.seed,
            map_cap: cfg.caps.maps,
            ..Budget::default()
        };
        let per_instance: Vec<Vec<SuiteReport>> = insts
            .par_iter()
            .enumerate()
            .map(|(i, inst)| run_instance(i as u64, inst, cfg, &budget))
            .collect();
        let mut suites = empty_reports();
        suites[0] = run_homotopy_suite(cfg, HOMOTOPY_GROUPS, HOMOTOPY_PAIRS_PER_GROUP);
        for reports in per_instance {
            for (total, part) in suites.iter_mut().zip(reports).skip(1) {
                total.merge(part);
            }
        }
        let idx = SUITE_NAMES.iter().position(|s| *s == "prop51").expect("known suite");
        prop51_extras(cfg, &mut suites[idx]);
        FullReport {
            config: cfg.clone(),
            instances: insts.len(),
            violations: suites.iter().map(|s| s.violations).sum(),
            errors: suites.iter().map(|s| s.errors).sum(),
            exercised: suites.iter().all(SuiteReport::exercised),
            suites,
        }
    })
}
