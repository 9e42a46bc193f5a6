use serde::Serialize;

use crate::error::Result;
use crate::finspace::{FinSpace, PointSet};

use super::CategoryValue;

/// A minimum cover and one witness achieving it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cover {
    pub value: CategoryValue,
    /// Chosen candidates, sorted by bit value; empty when `value` is 0 or ∞.
    pub witness: Vec<PointSet>,
}

impl Cover {
    pub fn empty() -> Self {
        Cover {
            value: CategoryValue::ZERO,
            witness: Vec::new(),
        }
    }

    pub fn infinite() -> Self {
        Cover {
            value: CategoryValue::Infinite,
            witness: Vec::new(),
        }
    }
}

/// Exact minimum number of `candidates` whose union contains `a`.
///
/// Branch and bound: a greedy cover gives the first incumbent; the search
/// branches on the uncovered point lying in the fewest candidates and tries
/// those candidates in bit-value order. Candidates may reach outside `a`.
pub fn min_cover(a: PointSet, candidates: &[PointSet]) -> Cover {
    if a.is_empty() {
        return Cover::empty();
    }
    let mut sets: Vec<PointSet> = candidates.iter().copied().filter(|c| !c.is_disjoint(a)).collect();
    sets.sort();
    sets.dedup();
    if !a.is_subset(sets.iter().fold(PointSet::EMPTY, |acc, &c| acc | c)) {
        return Cover::infinite();
    }

    // Drop candidates whose trace on `a` is inside another's (keep the first
    // of equal traces).
    let traces: Vec<PointSet> = sets.iter().map(|&c| c & a).collect();
    let keep: Vec<usize> = (0..sets.len())
        .filter(|&i| {
            !(0..sets.len()).any(|j| j != i && traces[i].is_subset(traces[j]) && (traces[i] != traces[j] || j < i))
        })
        .collect();
    let originals: Vec<PointSet> = keep.iter().map(|&i| sets[i]).collect();
    let traces: Vec<PointSet> = keep.iter().map(|&i| traces[i]).collect();

    let greedy = greedy_cover(a, &traces);
    let mut solver = Solver {
        traces: &traces,
        best: greedy.clone(),
    };
    let mut chosen = Vec::new();
    solver.search(a, &mut chosen);

    let mut witness: Vec<PointSet> = solver.best.iter().map(|&i| originals[i]).collect();
    witness.sort();
    Cover {
        value: CategoryValue::Finite(witness.len() as u32),
        witness,
    }
}

fn greedy_cover(a: PointSet, traces: &[PointSet]) -> Vec<usize> {
    let mut uncovered = a;
    let mut picked = Vec::new();
    while !uncovered.is_empty() {
        let (i, _) = traces
            .iter()
            .enumerate()
            .max_by_key(|(i, t)| ((**t & uncovered).len(), std::cmp::Reverse(*i)))
            .expect("coverable");
        picked.push(i);
        uncovered = uncovered - traces[i];
    }
    picked
}

struct Solver<'a> {
    traces: &'a [PointSet],
    best: Vec<usize>,
}

impl Solver<'_> {
    fn search(&mut self, uncovered: PointSet, chosen: &mut Vec<usize>) {
        if uncovered.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        let largest = self.traces.iter().map(|&t| (t & uncovered).len()).max().unwrap_or(0);
        let lower = uncovered.len().div_ceil(largest.max(1));
        if chosen.len() + lower >= self.best.len() {
            return;
        }
        let pivot = uncovered
            .iter()
            .min_by_key(|&p| (self.traces.iter().filter(|t| t.contains(p)).count(), p))
            .expect("nonempty");
        for i in 0..self.traces.len() {
            if !self.traces[i].contains(pivot) {
                continue;
            }
            chosen.push(i);
            self.search(uncovered - self.traces[i], chosen);
            chosen.pop();
        }
    }
}

/// Which family of sets a descent walks through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Open,
    Closed,
}

/// All ⊆-maximal nonempty open (or closed) sets satisfying `pred`.
///
/// Walks down from the full space, removing one minimal point (maximal for
/// closed sets) at a time, and stops descending at sets that satisfy the
/// predicate. For a downward-closed predicate every maximal satisfying set
/// is reached through a chain of failing supersets, so none is missed.
/// The empty set is never a candidate.
pub fn maximal_trivial_sets(
    space: &FinSpace,
    side: Side,
    mut pred: impl FnMut(PointSet) -> Result<bool>,
) -> Result<Vec<PointSet>> {
    let full = space.points();
    let mut found = Vec::new();
    if full.is_empty() {
        return Ok(found);
    }
    let mut seen = std::collections::HashSet::from([full]);
    let mut queue = std::collections::VecDeque::from([full]);
    while let Some(u) = queue.pop_front() {
        if pred(u)? {
            found.push(u);
            continue;
        }
        let removable = match side {
            Side::Open => space.minimal_points(u),
            Side::Closed => space.maximal_points(u),
        };
        for x in removable {
            let v = u.without(x);
            if !v.is_empty() && seen.insert(v) {
                queue.push_back(v);
            }
        }
    }
    let mut maximal: Vec<PointSet> = found
        .iter()
        .copied()
        .filter(|&u| !found.iter().any(|&w| w != u && u.is_subset(w)))
        .collect();
    maximal.sort();
    Ok(maximal)
}

pub fn maximal_trivial_opens(space: &FinSpace, pred: impl FnMut(PointSet) -> Result<bool>) -> Result<Vec<PointSet>> {
    maximal_trivial_sets(space, Side::Open, pred)
}

pub fn maximal_trivial_closeds(space: &FinSpace, pred: impl FnMut(PointSet) -> Result<bool>) -> Result<Vec<PointSet>> {
    maximal_trivial_sets(space, Side::Closed, pred)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finspace::builtin;
    use proptest::prelude::*;

    fn brute_cover(a: PointSet, cands: &[PointSet]) -> CategoryValue {
        if a.is_empty() {
            return CategoryValue::ZERO;
        }
        let n = cands.len();
        let mut best = CategoryValue::Infinite;
        for mask in 0u32..(1 << n) {
            let union = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .fold(PointSet::EMPTY, |acc, i| acc | cands[i]);
            if a.is_subset(union) {
                best = best.min(CategoryValue::Finite(mask.count_ones()));
            }
        }
        best
    }

    #[test]
    fn spec_examples() {
        let s = |v: &[usize]| PointSet::from_points(v.iter().copied());
        let c = min_cover(s(&[1, 2, 3]), &[s(&[1, 2]), s(&[2, 3]), s(&[1, 3])]);
        assert_eq!(c.value, CategoryValue::Finite(2));
        assert_eq!(min_cover(PointSet::EMPTY, &[s(&[1])]), Cover::empty());
        assert_eq!(min_cover(s(&[1, 4]), &[s(&[1])]).value, CategoryValue::Infinite);

        let six = s(&[1, 2, 3, 4, 5, 6]);
        let triples: Vec<PointSet> = six.subsets().filter(|t| t.len() == 3).collect();
        assert_eq!(triples.len(), 20);
        let expected = brute_cover(six, &triples);
        assert_eq!(expected, CategoryValue::Finite(2));
        assert_eq!(min_cover(six, &triples).value, expected);
    }

    #[test]
    fn witness_is_a_cover() {
        let s = |v: &[usize]| PointSet::from_points(v.iter().copied());
        let a = s(&[0, 1, 2, 3, 4]);
        let cands = [s(&[0, 1, 7]), s(&[2, 3]), s(&[3, 4]), s(&[0, 4]), s(&[1, 2, 3])];
        let c = min_cover(a, &cands);
        assert_eq!(c.value, CategoryValue::Finite(2));
        let union = c.witness.iter().fold(PointSet::EMPTY, |acc, &w| acc | w);
        assert!(a.is_subset(union));
        assert!(c.witness.iter().all(|w| cands.contains(w)));
    }

    #[test]
    fn maximal_sets_examples() {
        let circle = std::sync::Arc::new(builtin::circle4());
        let maximal =
            maximal_trivial_opens(&circle, |u| crate::finspace::is_contractible_in(&circle, u, 10_000)).unwrap();
        let expect = vec![
            circle.parse_subset("a,b,c").unwrap(),
            circle.parse_subset("a,b,d").unwrap(),
        ];
        assert_eq!(maximal, expect);
        assert_eq!(
            maximal_trivial_opens(&circle, |_| Ok(true)).unwrap(),
            vec![circle.points()]
        );
        assert!(maximal_trivial_opens(&circle, |_| Ok(false)).unwrap().is_empty());
        let closed =
            maximal_trivial_closeds(&circle, |u| crate::finspace::is_contractible_in(&circle, u, 10_000)).unwrap();
        assert_eq!(
            closed,
            vec![
                circle.parse_subset("a,c,d").unwrap(),
                circle.parse_subset("b,c,d").unwrap()
            ]
        );
    }

    proptest! {
        #[test]
        fn agrees_with_exhaustive_search(
            a in 0u64..(1 << 10),
            raw in prop::collection::vec(0u64..(1 << 10), 0..14),
        ) {
            let a = PointSet::from_bits(a);
            let cands: Vec<PointSet> = raw.into_iter().map(PointSet::from_bits).collect();
            let got = min_cover(a, &cands);
            prop_assert_eq!(got.value, brute_cover(a, &cands));
            if let CategoryValue::Finite(_) = got.value {
                let union = got.witness.iter().fold(PointSet::EMPTY, |acc, &w| acc | w);
                prop_assert!(a.is_subset(union));
            }
        }
    }
}
