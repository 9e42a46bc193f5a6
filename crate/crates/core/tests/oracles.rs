mod common;

use std::sync::Arc;

use lscat::finspace::{builtin, contractible_oracle, DEFAULT_ORACLE_BOUND};
use lscat::harness::random_poset;
use lscat::{FinSpace, Invariants, PointSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{brute_min_cover, up_sets, Complex};

struct Brute {
    space: Arc<FinSpace>,
    opens: Vec<u64>,
    closeds: Vec<u64>,
    complex: Complex,
}

impl Brute {
    fn new(space: Arc<FinSpace>) -> Self {
        let full = space.points().bits();
        let opens = up_sets(&space);
        let closeds = opens.iter().map(|u| full & !u).collect();
        let complex = Complex::order_complex(&space);
        Brute {
            space,
            opens,
            closeds,
            complex,
        }
    }

    fn contractible(&self, family: &[u64]) -> Vec<u64> {
        family
            .iter()
            .copied()
            .filter(|&u| {
                u != 0 && contractible_oracle(&self.space, PointSet::from_bits(u), DEFAULT_ORACLE_BOUND).unwrap()
            })
            .collect()
    }

    fn nu_h(&self, a: u64) -> Option<usize> {
        brute_min_cover(a, &self.contractible(&self.opens))
    }

    fn nu_ls(&self, a: u64) -> Option<usize> {
        brute_min_cover(a, &self.contractible(&self.closeds))
    }

    fn nu_c(&self, a: u64) -> Option<usize> {
        let trivial: Vec<u64> = self
            .opens
            .iter()
            .copied()
            .filter(|&u| u != 0 && self.complex.trivial_on(u))
            .collect();
        brute_min_cover(a, &trivial)
    }
}

fn as_count(v: lscat::cover::CategoryValue) -> Option<usize> {
    v.finite().map(|n| n as usize)
}

fn spaces(count: usize, max: usize, seed: u64) -> Vec<Arc<FinSpace>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max);
            let d = rng.gen_range(0.1..0.7);
            Arc::new(random_poset(&mut rng, n, d))
        })
        .collect()
}

#[test]
fn covering_numbers_match_brute_force() {
    for space in spaces(40, 6, 7) {
        let brute = Brute::new(space.clone());
        let inv = Invariants::new(space.clone(), Default::default());
        for a in space.points().subsets() {
            let bits = a.bits();
            assert_eq!(as_count(inv.nu_h(a).unwrap().value), brute.nu_h(bits), "nu_H {bits:b}");
            assert_eq!(
                as_count(inv.nu_ls(a).unwrap().value),
                brute.nu_ls(bits),
                "nu_LS {bits:b}"
            );
            assert_eq!(as_count(inv.nu_c(a).unwrap().value), brute.nu_c(bits), "nu_c {bits:b}");
        }
    }
}

#[test]
fn cup_length_category_matches_its_definition() {
    for space in spaces(40, 7, 11) {
        let complex = Complex::order_complex(&space);
        let inv = Invariants::new(space.clone(), Default::default());
        let opens = up_sets(&space);
        for a in space.points().subsets().filter(|a| !a.is_empty()) {
            let best = opens
                .iter()
                .filter(|&&u| a.bits() & !u == 0)
                .map(|&u| {
                    let inside = complex.simplices.iter().flatten().copied().filter(|&s| s & !u == 0);
                    Complex::from_simplices(inside).cuplength()
                })
                .min()
                .unwrap();
            assert_eq!(inv.nu_cl(a).unwrap().finite(), Some(best), "{:b}", a.bits());
        }
    }
}

#[test]
fn circle_and_its_relatives() {
    let circle = Arc::new(builtin::circle4());
    let brute = Brute::new(circle.clone());
    let full = circle.points().bits();
    assert_eq!(brute.nu_h(full), Some(2));
    assert_eq!(brute.nu_ls(full), Some(2));
    assert_eq!(brute.nu_c(full), Some(2));
    assert_eq!(Complex::order_complex(&circle).cuplength(), 2);

    let discrete = Arc::new(builtin::antichain(3));
    assert_eq!(Brute::new(discrete.clone()).nu_h(discrete.points().bits()), Some(3));
    for n in 1..5 {
        let c = Arc::new(builtin::chain(n));
        assert_eq!(Brute::new(c.clone()).nu_h(c.points().bits()), Some(1));
    }
}
