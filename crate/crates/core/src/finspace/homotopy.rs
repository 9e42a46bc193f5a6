//! Homotopy of maps between finite spaces.
//!
//! Two continuous maps `X -> Y` are homotopic exactly when they lie in the
//! same connected component of the poset `Y^X` under the pointwise order.
//! The search here walks that poset by single-point moves: change `f` at one
//! point `x` to a value comparable with `f(x)`, keeping `f` order preserving.
//! If `f <= g` pointwise, changing `f` at a maximal point of `{f != g}` to
//! `g(x)` is such a move and stays between `f` and `g`, so fences in `Y^X`
//! decompose into single-point moves and the two relations agree.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{LsError, Result};

use super::{ContMap, FinSpace, PointSet};

/// Default bound on the number of maps a single search may visit.
pub const DEFAULT_MAP_CAP: usize = 200_000;

/// Default bound on `|cod|^|dom|` for exhaustive oracles.
pub const DEFAULT_ORACLE_BOUND: u64 = 1_000_000;

type Image = Vec<u8>;

/// Move generator for maps `dom -> cod`.
struct Moves<'a> {
    dom: &'a FinSpace,
    cod: &'a FinSpace,
}

impl<'a> Moves<'a> {
    fn new(dom: &'a FinSpace, cod: &'a FinSpace) -> Self {
        Moves { dom, cod }
    }

    /// Calls `visit` with every neighbour of `f`, point-major; for each point,
    /// values above `f(x)` in index order, then values below in index order.
    fn for_each(&self, f: &[u8], mut visit: impl FnMut(Image) -> bool) -> bool {
        for x in 0..self.dom.len() {
            let fx = f[x] as usize;
            // Bounds from the rest of the map: lower <= new value <= upper.
            let mut allowed = self.cod.points();
            for z in self.dom.down(x).without(x) {
                allowed = allowed & self.cod.up(f[z] as usize);
            }
            for z in self.dom.up(x).without(x) {
                allowed = allowed & self.cod.down(f[z] as usize);
            }
            let above = self.cod.up(fx).without(fx) & allowed;
            let below = self.cod.down(fx).without(fx) & allowed;
            for y in above.iter().chain(below.iter()) {
                let mut g = f.to_vec();
                g[x] = y as u8;
                if visit(g) {
                    return true;
                }
            }
        }
        false
    }
}

enum Search {
    Found,
    Exhausted,
}

fn bfs(
    dom: &FinSpace,
    cod: &FinSpace,
    start: Image,
    cap: usize,
    mut is_goal: impl FnMut(&[u8]) -> bool,
) -> Result<Search> {
    if is_goal(&start) {
        return Ok(Search::Found);
    }
    let moves = Moves::new(dom, cod);
    let mut seen: HashSet<Image> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        let mut overflow = false;
        let found = moves.for_each(&f, |g| {
            if seen.contains(&g) {
                return false;
            }
            if is_goal(&g) {
                return true;
            }
            if seen.len() >= cap {
                overflow = true;
                return true;
            }
            seen.insert(g.clone());
            queue.push_back(g);
            false
        });
        if overflow {
            return Err(LsError::Undecided { explored: seen.len() });
        }
        if found {
            return Ok(Search::Found);
        }
    }
    Ok(Search::Exhausted)
}

fn to_image(map: &ContMap) -> Image {
    map.image().iter().map(|&y| y as u8).collect()
}

/// Decides whether `f ≃ g` by breadth-first search over single-point moves.
///
/// Returns [`LsError::Undecided`] instead of guessing when more than `cap`
/// maps would have to be visited.
pub fn are_homotopic(f: &ContMap, g: &ContMap, cap: usize) -> Result<bool> {
    if !f.same_ends(g) {
        return Err(LsError::MapMismatch);
    }
    let target = to_image(g);
    let found = bfs(f.dom(), f.cod(), to_image(f), cap, |h| h == target.as_slice())?;
    Ok(matches!(found, Search::Found))
}

/// Whether the inclusion of the nonempty set `a` into `space` is homotopic
/// to a constant map.
pub fn is_contractible_in(space: &Arc<FinSpace>, a: PointSet, cap: usize) -> Result<bool> {
    space.check_fits(a)?;
    if a.is_empty() {
        return Err(LsError::EmptySubset);
    }
    // Constants in one component are homotopic; a set meeting two components
    // of the ambient space can never be deformed to a single point.
    if space.components().iter().filter(|c| !c.is_disjoint(a)).count() > 1 {
        return Ok(false);
    }
    // A common lower or upper bound gives a one-step homotopy to a constant.
    let lower = a.iter().fold(space.points(), |acc, x| acc & space.down(x));
    let upper = a.iter().fold(space.points(), |acc, x| acc & space.up(x));
    if !lower.is_empty() || !upper.is_empty() {
        return Ok(true);
    }
    let sub = space.induced(a);
    let start: Image = a.iter().map(|x| x as u8).collect();
    let found = bfs(&sub, space, start, cap, |h| h.windows(2).all(|w| w[0] == w[1]))?;
    Ok(matches!(found, Search::Found))
}

/// Self-maps reachable from the identity, in breadth-first order.
#[derive(Debug, Clone)]
pub struct MapEnumeration {
    pub maps: Vec<ContMap>,
    /// True when the cap stopped the search before the component was exhausted.
    pub truncated: bool,
}

/// All self-maps of `space` homotopic to the identity, up to `cap` of them.
pub fn enumerate_self_maps_homotopic_to_id(space: &Arc<FinSpace>, cap: usize) -> MapEnumeration {
    let cap = cap.max(1);
    let moves = Moves::new(space, space);
    let start: Image = (0..space.len()).map(|x| x as u8).collect();
    let mut seen: HashSet<Image> = HashSet::from([start.clone()]);
    let mut order = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    let mut truncated = false;
    while let Some(f) = queue.pop_front() {
        truncated = moves.for_each(&f, |g| {
            if seen.contains(&g) {
                return false;
            }
            if order.len() >= cap {
                return true;
            }
            seen.insert(g.clone());
            order.push(g.clone());
            queue.push_back(g);
            false
        });
        if truncated {
            break;
        }
    }
    let maps = order
        .into_iter()
        .map(|img| ContMap::new_unchecked(space.clone(), space.clone(), img.into_iter().map(usize::from).collect()))
        .collect();
    MapEnumeration { maps, truncated }
}

/// All continuous maps `dom -> cod` together with the connected components
/// of their comparability graph. Independent of the move search; used as an
/// oracle.
pub struct MapPoset {
    maps: Vec<Image>,
    index: HashMap<Image, usize>,
    component: Vec<usize>,
}

impl MapPoset {
    pub fn build(dom: &FinSpace, cod: &FinSpace, bound: u64) -> Result<Self> {
        let maps = continuous_maps(dom, cod, bound)?;
        let n = maps.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let leq = |f: &Image, g: &Image| f.iter().zip(g).all(|(&a, &b)| cod.leq(a as usize, b as usize));
        for i in 0..n {
            for j in i + 1..n {
                if leq(&maps[i], &maps[j]) || leq(&maps[j], &maps[i]) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                }
            }
        }
        let component = (0..n).map(|i| find(&mut parent, i)).collect();
        let index = maps.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(MapPoset { maps, index, component })
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    fn component_of(&self, image: &[usize]) -> Option<usize> {
        let key: Image = image.iter().map(|&y| y as u8).collect();
        self.index.get(&key).map(|&i| self.component[i])
    }

    pub fn homotopic(&self, f: &[usize], g: &[usize]) -> Option<bool> {
        Some(self.component_of(f)? == self.component_of(g)?)
    }

    /// Images of every map in the component of `f`.
    pub fn component_members(&self, f: &[usize]) -> Vec<Vec<usize>> {
        let Some(c) = self.component_of(f) else {
            return Vec::new();
        };
        self.maps
            .iter()
            .zip(&self.component)
            .filter(|(_, &k)| k == c)
            .map(|(m, _)| m.iter().map(|&y| y as usize).collect())
            .collect()
    }

    pub fn maps(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.maps.iter().map(|m| m.iter().map(|&y| y as usize).collect())
    }
}

/// Enumerates every order-preserving map `dom -> cod`.
pub fn continuous_maps(dom: &FinSpace, cod: &FinSpace, bound: u64) -> Result<Vec<Image>> {
    let candidates = (cod.len() as f64).powi(dom.len() as i32);
    if candidates > bound as f64 {
        return Err(LsError::OracleBound { candidates, bound });
    }
    // Assign points in a linear extension so every smaller point is fixed first.
    let mut order: Vec<usize> = (0..dom.len()).collect();
    order.sort_by_key(|&x| (dom.down(x).len(), x));
    let mut out = Vec::new();
    let mut current = vec![0u8; dom.len()];
    fn rec(depth: usize, order: &[usize], dom: &FinSpace, cod: &FinSpace, current: &mut Vec<u8>, out: &mut Vec<Image>) {
        if depth == order.len() {
            out.push(current.clone());
            return;
        }
        let x = order[depth];
        let mut allowed = cod.points();
        for z in dom.down(x).without(x) {
            allowed = allowed & cod.up(current[z] as usize);
        }
        for y in allowed {
            current[x] = y as u8;
            rec(depth + 1, order, dom, cod, current, out);
        }
    }
    rec(0, &order, dom, cod, &mut current, &mut out);
    Ok(out)
}

/// Exact homotopy test by enumerating the whole map poset.
pub fn homotopy_oracle(f: &ContMap, g: &ContMap, bound: u64) -> Result<bool> {
    if !f.same_ends(g) {
        return Err(LsError::MapMismatch);
    }
    let poset = MapPoset::build(f.dom(), f.cod(), bound)?;
    Ok(poset
        .homotopic(f.image(), g.image())
        .expect("continuous maps are enumerated"))
}

/// Exact contractibility-in test by enumerating all maps `a -> space`.
pub fn contractible_oracle(space: &FinSpace, a: PointSet, bound: u64) -> Result<bool> {
    if a.is_empty() {
        return Err(LsError::EmptySubset);
    }
    let sub = space.induced(a);
    let poset = MapPoset::build(&sub, space, bound)?;
    let inclusion: Vec<usize> = a.iter().collect();
    Ok(poset
        .component_members(&inclusion)
        .iter()
        .any(|m| m.windows(2).all(|w| w[0] == w[1])))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BeatKind {
    /// Exactly one point covers `x` from above.
    Up,
    /// Exactly one point is covered by `x`.
    Down,
}

/// A beat point and the retraction that removes it.
#[derive(Debug, Clone)]
pub struct BeatPoint {
    pub point: usize,
    pub target: usize,
    pub kind: BeatKind,
    /// `space \ {point}`.
    pub reduced: Arc<FinSpace>,
    /// `reduced -> space`.
    pub inclusion: ContMap,
    /// `space -> reduced`, sending `point` to `target`.
    pub retraction: ContMap,
}

/// Every up- and down-beat point of `space` with its retraction.
pub fn find_beat_points(space: &Arc<FinSpace>) -> Vec<BeatPoint> {
    let mut out = Vec::new();
    for x in 0..space.len() {
        for kind in [BeatKind::Up, BeatKind::Down] {
            let covers = match kind {
                BeatKind::Up => space.upper_covers(x),
                BeatKind::Down => space.lower_covers(x),
            };
            if covers.len() != 1 {
                continue;
            }
            let target = covers.first().expect("one cover");
            let keep = space.points().without(x);
            let reduced = Arc::new(space.induced(keep));
            let shrink = |z: usize| if z > x { z - 1 } else { z };
            let inclusion = ContMap::new_unchecked(reduced.clone(), space.clone(), keep.iter().collect());
            let retraction = ContMap::new_unchecked(
                space.clone(),
                reduced.clone(),
                (0..space.len())
                    .map(|z| shrink(if z == x { target } else { z }))
                    .collect(),
            );
            out.push(BeatPoint {
                point: x,
                target,
                kind,
                reduced,
                inclusion,
                retraction,
            });
        }
    }
    out
}

/// Repeatedly removes the first beat point until none is left.
pub fn core_of(space: &Arc<FinSpace>) -> Arc<FinSpace> {
    let mut current = space.clone();
    while let Some(beat) = find_beat_points(&current).into_iter().next() {
        current = beat.reduced;
    }
    current
}
