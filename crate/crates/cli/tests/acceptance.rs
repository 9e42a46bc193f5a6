//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach stdout; exits nonzero on any FAIL.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use lscat::cohom::f2::F2Vec;
use lscat::cohom::{builtin as complexes, Cohomology, CupStructure, SimplicialComplex};
use lscat::cover::CategoryValue;
use lscat::finspace::{are_homotopic, builtin, continuous_maps, contractible_oracle, homotopy_oracle};
use lscat::framework::check_t_nu_cl;
use lscat::harness::{gen_posets, run_full_report, FullReport, GenConfig};
use lscat::{ContMap, FinSpace, Invariants, PointSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{brute_min_cover, up_sets, Complex};

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn widen(image: &[u8]) -> Vec<usize> {
    image.iter().map(|&y| y as usize).collect()
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

/// Criterion 1: move search against the exhaustive oracle.
fn homotopy_oracle_equivalence() -> Verdict {
    let start = Instant::now();
    let pool: Vec<Arc<FinSpace>> = gen_posets(&GenConfig {
        seed: 11,
        min_points: 2,
        max_points: 5,
        count: 80,
        ..GenConfig::default()
    })
    .into_iter()
    .map(Arc::new)
    .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut instances, mut agree, mut homotopic, mut skipped) = (0u64, 0u64, 0u64, 0u64);
    let mut sizes = std::collections::BTreeSet::new();
    // Sizes first, so the few 2-point classes are drawn as often as the rest.
    let pick = |rng: &mut ChaCha8Rng| {
        let n = rng.gen_range(2..=5);
        let of_size: Vec<&Arc<FinSpace>> = pool.iter().filter(|s| s.len() == n).collect();
        of_size[rng.gen_range(0..of_size.len())].clone()
    };
    while instances < 600 {
        let dom = pick(&mut rng);
        let cod = pick(&mut rng);
        if (cod.len() as f64).powi(dom.len() as i32) > 1e6 {
            skipped += 1;
            continue;
        }
        let maps = continuous_maps(&dom, &cod, 1_000_000).expect("within bound");
        for _ in 0..5 {
            let f = ContMap::new(dom.clone(), cod.clone(), widen(&maps[rng.gen_range(0..maps.len())])).unwrap();
            let g = if rng.gen_bool(0.3) {
                // Walk f a few single-point moves to bias toward homotopic pairs.
                let mut img = f.image().to_vec();
                for _ in 0..rng.gen_range(1..4) {
                    let x = rng.gen_range(0..dom.len());
                    let y = rng.gen_range(0..cod.len());
                    let mut next = img.clone();
                    next[x] = y;
                    if cod.comparable(img[x], y) && ContMap::new(dom.clone(), cod.clone(), next.clone()).is_ok() {
                        img = next;
                    }
                }
                ContMap::new(dom.clone(), cod.clone(), img).unwrap()
            } else {
                ContMap::new(dom.clone(), cod.clone(), widen(&maps[rng.gen_range(0..maps.len())])).unwrap()
            };
            let oracle = homotopy_oracle(&f, &g, 1_000_000).expect("within bound");
            let search = are_homotopic(&f, &g, 1_000_000).expect("decided");
            instances += 1;
            agree += u64::from(oracle == search);
            homotopic += u64::from(oracle);
            sizes.insert(dom.len());
            sizes.insert(cod.len());
        }
    }
    let elapsed = start.elapsed();
    let pass = agree == instances
        && instances >= 500
        && elapsed < Duration::from_secs(120)
        && sizes.contains(&2)
        && sizes.contains(&5);
    verdict(
        pass,
        format!(
            "{agree}/{instances} agree ({homotopic} homotopic pairs, sizes {sizes:?}, {skipped} over-bound pairs skipped) in {}",
            secs(elapsed)
        ),
    )
}

/// ν_H and ν_LS from oracle-checked up-sets/down-sets and brute-force covers;
/// ν_c from reference cohomology of every up-set; cuplength from ranks.
fn reference_values(space: &FinSpace) -> [u32; 5] {
    let cx = Complex::order_complex(space);
    let full = space.points().bits();
    let opens = up_sets(space);
    let closeds: Vec<u64> = opens.iter().map(|&u| full & !u).collect();
    let contractible = |sets: &[u64]| -> Vec<u64> {
        sets.iter()
            .copied()
            .filter(|&s| s != 0 && contractible_oracle(space, PointSet::from_bits(s), 1_000_000).unwrap())
            .collect()
    };
    let trivial: Vec<u64> = opens.iter().copied().filter(|&u| u != 0 && cx.trivial_on(u)).collect();
    let cover = |fam: &[u64]| brute_min_cover(full, fam).expect("singletons' hulls cover") as u32;
    [
        cover(&contractible(&opens)),
        cover(&contractible(&closeds)),
        cover(&trivial),
        // X is open, so the cup-length category of X is the cup length of X.
        cx.cuplength(),
        cx.cuplength(),
    ]
}

fn library_values(space: FinSpace) -> [CategoryValue; 5] {
    let inv = Invariants::new(Arc::new(space), Default::default());
    let full = inv.space().points();
    ["nu_H", "nu_LS", "nu_c", "nu_CL", "cuplength"].map(|name| inv.by_name(name, full).unwrap().value)
}

/// Criterion 2.
fn known_invariants() -> Verdict {
    let mut notes = Vec::new();
    let mut pass = true;
    let mut slowest = Duration::ZERO;
    let start = Instant::now();
    let lib = library_values(builtin::circle4());
    let t_lib = start.elapsed();
    let reference = reference_values(&builtin::circle4());
    let two = CategoryValue::Finite(2);
    pass &= lib.iter().all(|&v| v == two) && reference.iter().all(|&v| v == 2);
    slowest = slowest.max(t_lib);
    notes.push(format!("circle4 library {lib:?} reference {reference:?}"));
    for k in 1..=5 {
        let start = Instant::now();
        let lib = library_values(builtin::cone(k));
        slowest = slowest.max(start.elapsed());
        let ok = lib.iter().all(|&v| v == CategoryValue::ONE);
        pass &= ok;
        if !ok {
            notes.push(format!("cone({k}) {lib:?}"));
        }
    }
    pass &= slowest < Duration::from_secs(1);
    verdict(
        pass,
        format!("{}; cones 1..5 all 1; slowest {}", notes.join("; "), secs(slowest)),
    )
}

/// Representatives of the class of `z`: `z` plus every coboundary.
fn representatives(cx: &Complex, k: usize, z: u64) -> Vec<u64> {
    let gens: Vec<u64> = (0..cx.count(k - 1)).map(|i| cx.coboundary(k - 1, 1 << i)).collect();
    let mut span = common::Span::default();
    let basis: Vec<u64> = gens.into_iter().filter(|&g| span.insert(g)).collect();
    (0u64..1 << basis.len())
        .map(|m| {
            basis
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .fold(z, |acc, (_, &b)| acc ^ b)
        })
        .collect()
}

/// Betti numbers and cup length of a shipped complex, the library against
/// the reference, with every pair of degree-1 representatives checked.
fn cohomology_benchmark(name: &str, complex: &SimplicialComplex, betti: &[usize]) -> (bool, String) {
    let reference = Complex::from_maximal(&complex.maximal_faces());
    let lib = Arc::new(complex.clone());
    let coh = Cohomology::new(lib.clone());
    let cups = CupStructure::new(lib.clone());
    let all = PointSet::from_bits((1u64 << complex.vertex_count()) - 1);
    let lib_betti = coh.betti_numbers();
    let ref_betti = reference.betti();
    let lib_cl = cups.cuplength(all);
    let ref_cl = reference.cuplength();

    // All products of all representatives of the degree-1 basis classes.
    let h1 = reference.cohomology_basis(1);
    let mut classes = std::collections::BTreeSet::new();
    let mut pairs = 0u64;
    let mut consistent = true;
    for (i, &a) in h1.iter().enumerate() {
        for &b in &h1[i..] {
            let exact_for_basis = reference.is_exact(2, reference.cup(1, a, 1, b));
            for ra in representatives(&reference, 1, a) {
                for rb in representatives(&reference, 1, b) {
                    let c = reference.cup(1, ra, 1, rb);
                    pairs += 1;
                    consistent &= reference.is_exact(2, c) == exact_for_basis
                        && reference.is_exact(2, c ^ reference.cup(1, a, 1, b));
                }
            }
            classes.insert(exact_for_basis);
        }
    }
    // The library's own product, on perturbed representatives.
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let basis = coh.basis(1);
    for a in &basis {
        for b in &basis {
            let base = coh.cup(a, b);
            for _ in 0..20 {
                let mut pa = a.clone();
                let mut pb = b.clone();
                for v in 0..complex.vertex_count() {
                    if rng.gen_bool(0.5) {
                        pa.rep.xor_assign(&coh.coboundary(0, &unit(complex, v)));
                    }
                    if rng.gen_bool(0.5) {
                        pb.rep.xor_assign(&coh.coboundary(0, &unit(complex, v)));
                    }
                }
                consistent &= coh.same_class(&coh.cup(&pa, &pb), &base);
            }
        }
    }
    let pass = lib_betti == betti && ref_betti == betti && lib_cl == 3 && ref_cl == 3 && consistent;
    (
        pass,
        format!(
            "{name}: betti lib {lib_betti:?} ref {ref_betti:?}, cuplength lib {lib_cl} ref {ref_cl}, {pairs} representative pairs consistent={consistent}"
        ),
    )
}

fn unit(complex: &SimplicialComplex, v: usize) -> F2Vec {
    F2Vec::unit(complex.count(0), v)
}

/// Criterion 3.
fn cohomology_benchmarks() -> Verdict {
    let start = Instant::now();
    let (p1, d1) = cohomology_benchmark("rp2_6", &complexes::rp2_6(), &[1, 1, 1]);
    let (p2, d2) = cohomology_benchmark("torus7", &complexes::torus7(), &[1, 2, 1]);
    let elapsed = start.elapsed();
    verdict(
        p1 && p2 && elapsed < Duration::from_secs(60),
        format!("{d1}; {d2}; {}", secs(elapsed)),
    )
}

fn suite_line(report: &FullReport, names: &[&str]) -> (bool, String) {
    let mut pass = true;
    let mut parts = Vec::new();
    for name in names {
        let s = report.suite(name).expect("suite present");
        pass &= s.passed();
        parts.push(format!(
            "{name} {} checked/{} skipped/{} violations/{} errors",
            s.checked, s.skipped, s.violations, s.errors
        ));
    }
    (pass, parts.join(", "))
}

/// Criterion 4.
fn axiom_suites(report: &FullReport, random: usize, elapsed: Duration) -> Verdict {
    let (mut pass, detail) = suite_line(report, &["axioms:nu_H", "axioms:nu_LS", "axioms:nu_c", "axioms:nu_CL"]);
    pass &= random >= 200 && elapsed < Duration::from_secs(300);
    verdict(
        pass,
        format!("{random} random spaces; {detail}; full report {}", secs(elapsed)),
    )
}

/// Criterion 5, with the T_{ν_CL} identity also run on a batch of 8-point spaces.
fn theorem_suites(report: &FullReport, big: &[Arc<Invariants>], elapsed: Duration) -> Verdict {
    let start = Instant::now();
    let (mut pass, detail) = suite_line(
        report,
        &[
            "lemma31", "prop33", "lemma41", "prop42", "cor43", "prop51", "lemma57", "chain", "t_nu_cl",
        ],
    );
    let mut big_violations = 0;
    for inv in big {
        big_violations += check_t_nu_cl(inv).unwrap().violations;
    }
    pass &= big_violations == 0 && report.suite("prop51").unwrap().checked >= 100;
    let total = elapsed + start.elapsed();
    pass &= total < Duration::from_secs(600);
    verdict(
        pass,
        format!(
            "{detail}; t_nu_cl on {} 8-point spaces: {big_violations} violations; {}",
            big.len(),
            secs(total)
        ),
    )
}

/// Criterion 6.
fn fast_path(report: &FullReport, big: &[Arc<Invariants>]) -> Verdict {
    let s = report.suite("nu_cl_fast_path").unwrap();
    let (mut subsets, mut mismatches) = (0u64, 0u64);
    for inv in big {
        for a in inv.space().points().subsets() {
            subsets += 1;
            mismatches += u64::from(inv.nu_cl(a).unwrap() != inv.nu_cl_by_definition(a).unwrap());
        }
    }
    verdict(
        s.passed() && mismatches == 0,
        format!(
            "report: {} spaces, {} violations; 8-point batch: {subsets} subsets over {} spaces, {mismatches} mismatches",
            s.checked,
            s.violations,
            big.len()
        ),
    )
}

/// Criterion 7.
fn determinism() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let run = |threads: &str, out: &str| {
        let path = dir.path().join(out);
        let status = Command::new(env!("CARGO_BIN_EXE_lscat"))
            .args(["verify", "--seed", "42", "--sizes", "3..7", "--count", "200", "--out"])
            .arg(&path)
            .env("LSCAT_THREADS", threads)
            .status()
            .unwrap();
        (status.success(), std::fs::read(path).unwrap_or_default())
    };
    let start = Instant::now();
    let (ok1, a) = run("1", "a.json");
    let (ok2, b) = run("1", "b.json");
    let (ok3, c) = run("3", "c.json");
    let replay = Command::new(env!("CARGO_BIN_EXE_lscat"))
        .arg("replay")
        .arg(dir.path().join("a.json"))
        .output()
        .unwrap();
    let pass = ok1 && ok2 && ok3 && !a.is_empty() && a == b && a == c && replay.stdout == a;
    verdict(
        pass,
        format!(
            "{} bytes; repeat identical {}, LSCAT_THREADS=1 vs 3 identical {}, replay identical {}; {}",
            a.len(),
            a == b,
            a == c,
            replay.stdout == a,
            secs(start.elapsed())
        ),
    )
}

fn main() -> ExitCode {
    let mut all = true;
    let mut line = |n: u32, title: &str, v: Verdict| {
        all &= v.pass;
        println!(
            "criterion {n} {title}: {} ({})",
            if v.pass { "PASS" } else { "FAIL" },
            v.detail
        );
    };
    line(1, "homotopy oracle equivalence", homotopy_oracle_equivalence());
    line(2, "known invariants", known_invariants());
    line(3, "cohomology benchmarks", cohomology_benchmarks());

    let cfg = GenConfig {
        seed: 42,
        count: 200,
        ..GenConfig::default()
    };
    let random = gen_posets(&cfg).len();
    let start = Instant::now();
    let report = run_full_report(&cfg, 2);
    let elapsed = start.elapsed();
    let big: Vec<Arc<Invariants>> = gen_posets(&GenConfig {
        seed: 43,
        min_points: 8,
        max_points: 8,
        count: 60,
        ..GenConfig::default()
    })
    .into_iter()
    .map(|s| Arc::new(Invariants::new(Arc::new(s), Default::default())))
    .collect();

    line(4, "axiom suites", axiom_suites(&report, random, elapsed));
    line(5, "theorem suites", theorem_suites(&report, &big, elapsed));
    line(6, "nu_CL fast path", fast_path(&report, &big));
    line(7, "determinism", determinism());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
