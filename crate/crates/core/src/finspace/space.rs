use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{LsError, Result};

use super::{ContMap, PointSet, MAX_POINTS};

/// A finite T0 space, stored as the partial order of its specialization.
///
/// Open sets are up-sets: the minimal open neighbourhood of `x` is
/// `up(x) = {y : x <= y}` and the closure of `{x}` is `down(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinSpace {
    labels: Vec<String>,
    up: Vec<PointSet>,
    down: Vec<PointSet>,
}

impl FinSpace {
    /// Builds a space from labelled points and strict order pairs `(x, y)`
    /// meaning `x < y`. The reflexive-transitive closure is taken; a cycle is
    /// rejected because the result would not be antisymmetric.
    pub fn new<S: Into<String>>(labels: Vec<S>, order: &[(usize, usize)]) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        if n > MAX_POINTS {
            return Err(LsError::TooManyPoints(n));
        }
        let mut seen = HashSet::with_capacity(n);
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(LsError::DuplicateLabel(label.clone()));
            }
        }

        let mut up: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for &(x, y) in order {
            for p in [x, y] {
                if p >= n {
                    return Err(LsError::PointOutOfRange { index: p, len: n });
                }
            }
            up[x].insert(y);
        }
        // Warshall on bit rows.
        for k in 0..n {
            for x in 0..n {
                if up[x].contains(k) {
                    up[x] = up[x] | up[k];
                }
            }
        }
        for x in 0..n {
            for y in up[x].without(x) {
                if up[y].contains(x) {
                    return Err(LsError::Cycle(labels[x].clone()));
                }
            }
        }
        let mut down = vec![PointSet::EMPTY; n];
        for x in 0..n {
            for y in up[x] {
                down[y].insert(x);
            }
        }
        Ok(FinSpace { labels, up, down })
    }

    /// Builds a space from labels and `(smaller, larger)` label pairs.
    pub fn from_labelled(labels: &[&str], order: &[(&str, &str)]) -> Result<Self> {
        let find = |l: &str| {
            labels
                .iter()
                .position(|x| *x == l)
                .ok_or_else(|| LsError::UnknownPoint {
                    field: "order".into(),
                    label: l.to_string(),
                })
        };
        let pairs = order
            .iter()
            .map(|(a, b)| Ok((find(a)?, find(b)?)))
            .collect::<Result<Vec<_>>>()?;
        FinSpace::new(labels.to_vec(), &pairs)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn points(&self) -> PointSet {
        PointSet::full(self.len())
    }

    /// `x <= y` in the specialization order.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Minimal open neighbourhood `U_x`.
    pub fn up(&self, x: usize) -> PointSet {
        self.up[x]
    }

    /// Closure of `{x}`.
    pub fn down(&self, x: usize) -> PointSet {
        self.down[x]
    }

    /// Strict order pairs `(x, y)` with `x < y`.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| self.up[x].without(x).iter().map(move |y| (x, y)))
            .collect()
    }

    /// Covering pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.upper_covers(x) {
                out.push((x, y));
            }
        }
        out
    }

    /// Points covering `x` from above.
    pub fn upper_covers(&self, x: usize) -> PointSet {
        let above = self.up[x].without(x);
        above
            .iter()
            .filter(|&y| (self.down[y] & above).without(y).is_empty())
            .collect()
    }

    /// Points covered by `x`.
    pub fn lower_covers(&self, x: usize) -> PointSet {
        let below = self.down[x].without(x);
        below
            .iter()
            .filter(|&y| (self.up[y] & below).without(y).is_empty())
            .collect()
    }

    pub fn fits(&self, a: PointSet) -> bool {
        a.is_subset(self.points())
    }

    pub(crate) fn check_fits(&self, a: PointSet) -> Result<()> {
        if self.fits(a) {
            Ok(())
        } else {
            Err(LsError::PointOutOfRange {
                index: 63 - a.bits().leading_zeros() as usize,
                len: self.len(),
            })
        }
    }

    pub fn is_open(&self, a: PointSet) -> bool {
        a.iter().all(|x| self.up[x].is_subset(a))
    }

    pub fn is_closed(&self, a: PointSet) -> bool {
        a.iter().all(|x| self.down[x].is_subset(a))
    }

    /// Smallest open set containing `a`.
    pub fn minimal_open_hull(&self, a: PointSet) -> PointSet {
        a.iter().fold(PointSet::EMPTY, |acc, x| acc | self.up[x])
    }

    /// Topological closure of `a`.
    pub fn closure_of(&self, a: PointSet) -> PointSet {
        a.iter().fold(PointSet::EMPTY, |acc, x| acc | self.down[x])
    }

    /// Largest open set inside `a`.
    pub fn interior_of(&self, a: PointSet) -> PointSet {
        a.iter().filter(|&x| self.up[x].is_subset(a)).collect()
    }

    pub fn minimal_points(&self, a: PointSet) -> PointSet {
        a.iter().filter(|&x| (self.down[x] & a).without(x).is_empty()).collect()
    }

    pub fn maximal_points(&self, a: PointSet) -> PointSet {
        a.iter().filter(|&x| (self.up[x] & a).without(x).is_empty()).collect()
    }

    /// All open sets, sorted by bit value. Exponential; meant for small spaces.
    pub fn open_sets(&self) -> Vec<PointSet> {
        self.lattice(true)
    }

    /// All closed sets, sorted by bit value.
    pub fn closed_sets(&self) -> Vec<PointSet> {
        self.lattice(false)
    }

    fn lattice(&self, open: bool) -> Vec<PointSet> {
        // Every open set is reached from the full space by repeatedly removing
        // a minimal point (dually, a maximal point for closed sets).
        let mut seen = HashSet::new();
        let mut stack = vec![self.points()];
        seen.insert(self.points());
        while let Some(u) = stack.pop() {
            let removable = if open {
                self.minimal_points(u)
            } else {
                self.maximal_points(u)
            };
            for x in removable {
                let v = u.without(x);
                if seen.insert(v) {
                    stack.push(v);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Connected components of the subspace `a` (comparability graph).
    pub fn components_of(&self, a: PointSet) -> Vec<PointSet> {
        let mut rest = a;
        let mut out = Vec::new();
        while let Some(x) = rest.first() {
            let mut comp = PointSet::singleton(x);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = PointSet::EMPTY;
                for y in frontier {
                    next = next | ((self.up[y] | self.down[y]) & a);
                }
                frontier = next - comp;
                comp = comp | next;
            }
            out.push(comp);
            rest = rest - comp;
        }
        out
    }

    pub fn components(&self) -> Vec<PointSet> {
        self.components_of(self.points())
    }

    /// Induced subspace on a nonempty `a`, with the embedding into `self`.
    /// Points of the subspace keep their relative order and labels.
    pub fn subspace(self: &Arc<Self>, a: PointSet) -> Result<(Arc<FinSpace>, ContMap)> {
        self.check_fits(a)?;
        if a.is_empty() {
            return Err(LsError::EmptySubset);
        }
        let sub = Arc::new(self.induced(a));
        let embedding = ContMap::new(sub.clone(), self.clone(), a.iter().collect())?;
        Ok((sub, embedding))
    }

    /// Induced subposet on `a` (which may be empty).
    pub fn induced(&self, a: PointSet) -> FinSpace {
        let pts: Vec<usize> = a.iter().collect();
        let pos = |y: usize| pts.iter().position(|&p| p == y).unwrap();
        let up: Vec<PointSet> = pts
            .iter()
            .map(|&x| (self.up[x] & a).iter().map(pos).collect())
            .collect();
        let down: Vec<PointSet> = pts
            .iter()
            .map(|&x| (self.down[x] & a).iter().map(pos).collect())
            .collect();
        FinSpace {
            labels: pts.iter().map(|&x| self.labels[x].clone()).collect(),
            up,
            down,
        }
    }

    /// Same underlying set with the order reversed (open and closed swap).
    pub fn opposite(&self) -> FinSpace {
        FinSpace {
            labels: self.labels.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Product order on pairs; labels are concatenated.
    pub fn product(&self, other: &FinSpace) -> Result<FinSpace> {
        let n = self.len() * other.len();
        if n > MAX_POINTS {
            return Err(LsError::TooManyPoints(n));
        }
        let m = other.len();
        let mut labels = Vec::with_capacity(n);
        for x in 0..self.len() {
            for y in 0..m {
                labels.push(format!("{}{}", self.labels[x], other.labels[y]));
            }
        }
        let mut pairs = Vec::new();
        for (x1, x2) in self.order_pairs().into_iter().chain((0..self.len()).map(|x| (x, x))) {
            for (y1, y2) in other.order_pairs().into_iter().chain((0..m).map(|y| (y, y))) {
                if (x1, y1) != (x2, y2) {
                    pairs.push((x1 * m + y1, x2 * m + y2));
                }
            }
        }
        FinSpace::new(labels, &pairs)
    }

    /// Disjoint union; labels of the second summand get a `'` suffix on clash.
    pub fn disjoint_union(&self, other: &FinSpace) -> Result<FinSpace> {
        let shift = self.len();
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut l = l.clone();
            while labels.contains(&l) {
                l.push('\'');
            }
            labels.push(l);
        }
        let pairs: Vec<_> = self
            .order_pairs()
            .into_iter()
            .chain(other.order_pairs().into_iter().map(|(x, y)| (x + shift, y + shift)))
            .collect();
        FinSpace::new(labels, &pairs)
    }

    pub fn format_set(&self, a: PointSet) -> Vec<String> {
        a.iter().map(|x| self.labels[x].clone()).collect()
    }

    /// Parses `"a,b,c"`, `"full"`/`"*"`, or `""` (empty set).
    pub fn parse_subset(&self, text: &str) -> Result<PointSet> {
        let text = text.trim();
        if text == "full" || text == "*" {
            return Ok(self.points());
        }
        let mut set = PointSet::EMPTY;
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let x = self.index_of(part).ok_or_else(|| LsError::UnknownPoint {
                field: "subset".into(),
                label: part.to_string(),
            })?;
            set.insert(x);
        }
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finspace::builtin;

    fn brute_up_sets(s: &FinSpace) -> Vec<PointSet> {
        s.points()
            .subsets()
            .filter(|a| (0..s.len()).all(|x| (0..s.len()).all(|y| !(a.contains(x) && s.leq(x, y)) || a.contains(y))))
            .collect()
    }

    #[test]
    fn antichain_is_discrete() {
        let s = builtin::antichain(3);
        for a in s.points().subsets() {
            assert!(s.is_open(a) && s.is_closed(a));
        }
    }

    #[test]
    fn two_chain_opens() {
        let s = FinSpace::from_labelled(&["a", "c"], &[("c", "a")]).unwrap();
        let opens = s.open_sets();
        let a = PointSet::singleton(0);
        assert_eq!(opens, vec![PointSet::EMPTY, a, s.points()]);
    }

    #[test]
    fn circle4_up_sets_by_brute_force() {
        let s = builtin::circle4();
        let brute = brute_up_sets(&s);
        // ∅, {a}, {b}, {a,b}, {a,b,c}, {a,b,d}, full
        assert_eq!(brute.len(), 7);
        assert_eq!(s.open_sets(), brute);
    }

    #[test]
    fn open_closed_examples() {
        let s = builtin::circle4();
        let p = |l: &str| PointSet::singleton(s.index_of(l).unwrap());
        assert!(s.is_open(p("a")));
        assert!(!s.is_open(p("c")));
        assert!(s.is_open(s.points()));
        assert!(s.is_closed(p("c")));
        assert!(!s.is_closed(p("a")));
        assert!(s.is_closed(s.points()));
    }

    #[test]
    fn hull_and_closure_examples() {
        let s = builtin::circle4();
        let set = |t: &str| s.parse_subset(t).unwrap();
        assert_eq!(s.minimal_open_hull(set("a")), set("a"));
        assert_eq!(s.minimal_open_hull(set("c")), set("a,b,c"));
        assert_eq!(s.minimal_open_hull(set("c,d")), set("full"));
        assert_eq!(s.closure_of(set("a")), set("a,c,d"));
        assert_eq!(s.closure_of(set("c")), set("c"));
        assert_eq!(s.closure_of(PointSet::EMPTY), PointSet::EMPTY);
    }

    #[test]
    fn rejects_cycle_and_duplicates() {
        assert!(matches!(
            FinSpace::new(vec!["x", "y"], &[(0, 1), (1, 0)]),
            Err(LsError::Cycle(_))
        ));
        assert!(matches!(
            FinSpace::new(vec!["x", "x"], &[]),
            Err(LsError::DuplicateLabel(_))
        ));
        assert!(matches!(
            FinSpace::new(vec!["x"], &[(0, 3)]),
            Err(LsError::PointOutOfRange { .. })
        ));
    }

    #[test]
    fn subspace_restrictions_are_continuous() {
        let s = Arc::new(builtin::circle4());
        for text in ["a,c", "a,b", "full"] {
            let a = s.parse_subset(text).unwrap();
            let (sub, emb) = s.subspace(a).unwrap();
            assert_eq!(sub.len(), a.len());
            assert_eq!(emb.image_of(sub.points()), a);
        }
        assert_eq!(s.subspace(PointSet::EMPTY).unwrap_err(), LsError::EmptySubset);
    }

    #[test]
    fn components_and_covers() {
        let s = builtin::antichain(3).disjoint_union(&builtin::chain(2)).unwrap();
        assert_eq!(s.components().len(), 4);
        let c = builtin::circle4();
        assert_eq!(c.cover_pairs().len(), 4);
    }

    #[test]
    fn torus16_is_product() {
        let t = builtin::torus16();
        assert_eq!(t.len(), 16);
        let c = builtin::circle4();
        // (x1,y1) <= (x2,y2) iff componentwise.
        for x1 in 0..4 {
            for y1 in 0..4 {
                for x2 in 0..4 {
                    for y2 in 0..4 {
                        assert_eq!(t.leq(x1 * 4 + y1, x2 * 4 + y2), c.leq(x1, x2) && c.leq(y1, y2));
                    }
                }
            }
        }
    }
}
