use std::collections::HashMap;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::finspace::{builtin, FinSpace};
use crate::invariants::Caps;

/// Parameters of a random instance stream.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenConfig {
    pub seed: u64,
    pub min_points: usize,
    pub max_points: usize,
    /// Each pair `i < j` of a random linear order becomes a relation with a
    /// probability drawn per instance from this range.
    pub density: (f64, f64),
    pub count: usize,
    pub caps: Caps,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            min_points: 3,
            max_points: 7,
            density: (0.15, 0.6),
            count: 200,
            caps: Caps::default(),
        }
    }
}

impl GenConfig {
    pub fn sizes(&self) -> RangeInclusive<usize> {
        self.min_points..=self.max_points
    }
}

pub(crate) fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// One random poset on `n` points: a random DAG along a shuffled order,
/// then transitive closure.
pub fn random_poset(rng: &mut ChaCha8Rng, n: usize, density: f64) -> FinSpace {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((order[i], order[j]));
            }
        }
    }
    FinSpace::new((0..n).map(|i| format!("p{i}")).collect(), &pairs).expect("acyclic by construction")
}

/// Degree and level data invariant under isomorphism.
fn signature(space: &FinSpace) -> Vec<(usize, usize, usize, usize)> {
    let mut sig: Vec<_> = (0..space.len())
        .map(|x| {
            (
                space.up(x).len(),
                space.down(x).len(),
                space.upper_covers(x).len(),
                space.lower_covers(x).len(),
            )
        })
        .collect();
    sig.sort_unstable();
    sig
}

/// Exact isomorphism test by backtracking over signature-compatible points.
pub fn isomorphic(a: &FinSpace, b: &FinSpace) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let key = |s: &FinSpace, x: usize| (s.up(x).len(), s.down(x).len());
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        x: usize,
        a: &FinSpace,
        b: &FinSpace,
        image: &mut [usize],
        used: &mut [bool],
        key: &dyn Fn(&FinSpace, usize) -> (usize, usize),
    ) -> bool {
        if x == a.len() {
            return true;
        }
        for y in 0..b.len() {
            if used[y] || key(a, x) != key(b, y) {
                continue;
            }
            if (0..x).any(|z| a.leq(z, x) != b.leq(image[z], y) || a.leq(x, z) != b.leq(y, image[z])) {
                continue;
            }
            image[x] = y;
            used[y] = true;
            if extend(x + 1, a, b, image, used, key) {
                return true;
            }
            used[y] = false;
        }
        false
    }
    signature(a) == signature(b) && extend(0, a, b, &mut image, &mut used, &key)
}

/// Largest size at which duplicates are removed exactly.
const ISO_CHECK_POINTS: usize = 9;

/// Collects spaces, dropping isomorphic repeats.
#[derive(Default)]
pub struct Dedup {
    seen: HashMap<Vec<(usize, usize, usize, usize)>, Vec<FinSpace>>,
}

impl Dedup {
    /// `true` if `space` is new.
    pub fn insert(&mut self, space: &FinSpace) -> bool {
        let bucket = self.seen.entry(signature(space)).or_default();
        if space.len() <= ISO_CHECK_POINTS && bucket.iter().any(|s| isomorphic(s, space)) {
            return false;
        }
        bucket.push(space.clone());
        true
    }
}

/// `cfg.count` pairwise non-isomorphic random posets (fewer if the size
/// range has too few isomorphism classes).
pub fn gen_posets(cfg: &GenConfig) -> Vec<FinSpace> {
    let mut r = rng(cfg.seed, 0);
    let mut dedup = Dedup::default();
    let mut out = Vec::with_capacity(cfg.count);
    let (lo, hi) = (cfg.density.0.min(cfg.density.1), cfg.density.0.max(cfg.density.1));
    let attempts = cfg.count.saturating_mul(50).max(100);
    for _ in 0..attempts {
        if out.len() >= cfg.count {
            break;
        }
        let n = r.gen_range(cfg.sizes());
        let p = if hi > lo { r.gen_range(lo..=hi) } else { lo };
        let s = random_poset(&mut r, n, p.clamp(0.0, 1.0));
        if dedup.insert(&s) {
            out.push(s);
        }
    }
    out
}

/// A named space in a suite run.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub space: FinSpace,
}

/// Hand-picked spaces guaranteeing coverage of conditional results: normal
/// spaces (chains, antichains, cones and their disjoint unions), spaces with
/// beat points, and spaces with nontrivial cohomology.
pub fn targeted_families(seed: u64) -> Vec<Instance> {
    let mut out = Vec::new();
    let mut push = |name: String, space: FinSpace| out.push(Instance { name, space });
    for k in 1..=6 {
        push(format!("chain({k})"), builtin::chain(k));
        push(format!("antichain({k})"), builtin::antichain(k));
    }
    for k in 1..=5 {
        push(format!("cone({k})"), builtin::cone(k));
        push(format!("cocone({k})"), builtin::cone(k).opposite());
    }
    push("circle4".into(), builtin::circle4());
    push("sphere(2)".into(), builtin::sphere(2));
    push("wedge2circles".into(), builtin::wedge2circles());
    let unions = [
        ("chain(2)+chain(3)", builtin::chain(2), builtin::chain(3)),
        ("cone(2)+chain(1)", builtin::cone(2), builtin::chain(1)),
        ("cone(3)+chain(2)", builtin::cone(3), builtin::chain(2)),
        ("cone(2)+cone(2)", builtin::cone(2), builtin::cone(2)),
        ("chain(3)+antichain(2)", builtin::chain(3), builtin::antichain(2)),
        ("cone(4)+chain(3)", builtin::cone(4), builtin::chain(3)),
        ("circle4+chain(2)", builtin::circle4(), builtin::chain(2)),
    ];
    for (name, a, b) in unions {
        push(name.into(), a.disjoint_union(&b).expect("small"));
    }

    let mut r = rng(seed, 1);
    // Cones over random posets: a bottom point makes every pair of nonempty
    // closed sets meet.
    for i in 0..8 {
        let n = r.gen_range(2..=5);
        let base = random_poset(&mut r, n, 0.4);
        let coned = add_bottom(&base);
        push(format!("random_cone#{i}"), coned);
    }
    // Beat points hung on the circle and on random posets.
    for i in 0..8 {
        let n = r.gen_range(3..=5);
        let base = if i < 2 {
            builtin::circle4()
        } else {
            random_poset(&mut r, n, 0.4)
        };
        let extra = r.gen_range(1..=2);
        push(format!("beat_rich#{i}"), add_beat_points(&mut r, &base, extra));
    }
    out
}

fn add_bottom(space: &FinSpace) -> FinSpace {
    let n = space.len();
    let mut labels = space.labels().to_vec();
    labels.push("bot".into());
    let mut pairs = space.order_pairs();
    pairs.extend((0..n).map(|x| (n, x)));
    FinSpace::new(labels, &pairs).expect("adding a minimum keeps a poset")
}

/// Adds points each covering exactly one existing point (or covered by
/// exactly one), which are beat points of the result.
fn add_beat_points(rng: &mut ChaCha8Rng, space: &FinSpace, extra: usize) -> FinSpace {
    let mut labels = space.labels().to_vec();
    let mut pairs = space.order_pairs();
    for k in 0..extra {
        let n = labels.len();
        let anchor = rng.gen_range(0..space.len());
        labels.push(format!("q{k}"));
        if rng.gen_bool(0.5) {
            pairs.push((anchor, n));
        } else {
            pairs.push((n, anchor));
        }
    }
    FinSpace::new(labels, &pairs).expect("pendant points keep a poset")
}
