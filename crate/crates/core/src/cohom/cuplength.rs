use std::sync::Arc;

use serde::Serialize;

use crate::finspace::{ContMap, FinSpace, PointSet};

use super::cohomology::{CohomClass, Cohomology};
use super::complex::{order_complex, SimplicialComplex};
use super::f2::{Echelon, F2Vec};

/// Cohomology together with the filtration by products:
/// `levels[0]` spans the positive-degree classes and `levels[k]` spans the
/// `(k+1)`-fold products of them. Each level is a list of homogeneous
/// classes independent modulo coboundaries.
pub struct CupStructure {
    cohomology: Cohomology,
    levels: Vec<Vec<CohomClass>>,
}

impl CupStructure {
    pub fn new(complex: Arc<SimplicialComplex>) -> Self {
        let cohomology = Cohomology::new(complex);
        let levels = product_levels(&cohomology);
        CupStructure { cohomology, levels }
    }

    pub fn cohomology(&self) -> &Cohomology {
        &self.cohomology
    }

    pub fn levels(&self) -> &[Vec<CohomClass>] {
        &self.levels
    }

    /// Least `N >= 1` such that every `N`-fold product of positive-degree
    /// classes restricts to zero on the subcomplex induced by `vertices`.
    pub fn cuplength(&self, vertices: PointSet) -> u32 {
        let mut restrictor = Restrictor::new(&self.cohomology, vertices);
        for (i, level) in self.levels.iter().enumerate() {
            if level.iter().all(|c| restrictor.is_zero(c)) {
                return i as u32 + 1;
            }
        }
        self.levels.len() as u32 + 1
    }

    /// Whether every positive-degree class restricts to zero.
    pub fn is_trivial(&self, vertices: PointSet) -> bool {
        let mut restrictor = Restrictor::new(&self.cohomology, vertices);
        self.cohomology.positive_basis().iter().all(|c| restrictor.is_zero(c))
    }
}

/// `V_1` = positive basis; `V_{k+1}` = span of `v ∪ b` over bases of `V_k`
/// and `V_1`. Bilinearity means basis products span every product.
fn product_levels(coh: &Cohomology) -> Vec<Vec<CohomClass>> {
    let generators = coh.positive_basis();
    let mut levels = Vec::new();
    let mut current = generators.clone();
    while !current.is_empty() {
        let mut next: Vec<CohomClass> = Vec::new();
        let mut spans: Vec<Option<Echelon>> = Vec::new();
        for v in &current {
            for b in &generators {
                let c = coh.cup(v, b);
                if c.rep.is_zero() {
                    continue;
                }
                let k = c.degree;
                if spans.len() <= k {
                    spans.resize(k + 1, None);
                }
                let span = spans[k].get_or_insert_with(|| Echelon::new(coh.betti(k), 0));
                // Coordinates are canonical for the class; zero classes never push.
                if span.push(coh.coordinates(&c)) {
                    next.push(c);
                }
            }
        }
        levels.push(std::mem::replace(&mut current, next));
    }
    levels
}

/// Caches the coboundary spaces of one induced subcomplex.
struct Restrictor<'a> {
    coh: &'a Cohomology,
    vertices: PointSet,
    boundaries: Vec<Option<Echelon>>,
}

impl<'a> Restrictor<'a> {
    fn new(coh: &'a Cohomology, vertices: PointSet) -> Self {
        Restrictor {
            coh,
            vertices,
            boundaries: Vec::new(),
        }
    }

    fn is_zero(&mut self, class: &CohomClass) -> bool {
        let masked = self.coh.mask_to(class.degree, &class.rep, self.vertices);
        if masked.is_zero() {
            return true;
        }
        let k = class.degree;
        if self.boundaries.len() <= k {
            self.boundaries.resize(k + 1, None);
        }
        let (coh, vertices) = (self.coh, self.vertices);
        self.boundaries[k]
            .get_or_insert_with(|| coh.sub_boundaries(k, vertices))
            .contains(&masked)
    }
}

/// Cohomology of a finite space, computed on its order complex. Point `x`
/// of the space is vertex `x` of the complex, so a point set is also the
/// vertex set of its induced subcomplex (the order complex of the subspace).
pub struct SpaceCohomology {
    space: Arc<FinSpace>,
    cup: CupStructure,
}

impl SpaceCohomology {
    pub fn new(space: Arc<FinSpace>) -> Self {
        let complex = Arc::new(order_complex(&space));
        SpaceCohomology {
            space,
            cup: CupStructure::new(complex),
        }
    }

    pub fn space(&self) -> &Arc<FinSpace> {
        &self.space
    }

    pub fn cohomology(&self) -> &Cohomology {
        self.cup.cohomology()
    }

    pub fn cup_structure(&self) -> &CupStructure {
        &self.cup
    }

    pub fn cuplength(&self, a: PointSet) -> u32 {
        self.cup.cuplength(a)
    }

    pub fn is_cohomologically_trivial(&self, a: PointSet) -> bool {
        self.cup.is_trivial(a)
    }

    pub fn restricts_to_zero(&self, class: &CohomClass, a: PointSet) -> bool {
        self.cohomology().restricts_to_zero(class, a)
    }
}

/// Pulls a cochain on the order complex of `f.cod()` back along `f`.
/// A chain whose image has repeated points is degenerate and gets zero.
pub fn pullback(f: &ContMap, source: &Cohomology, target: &Cohomology, class: &CohomClass) -> CohomClass {
    let k = class.degree;
    let complex = source.complex();
    let mut rep = F2Vec::zeros(complex.count(k));
    for (i, &sigma) in complex.simplices(k).iter().enumerate() {
        let image = f.image_of(PointSet::from_bits(sigma));
        if image.len() != k + 1 {
            continue;
        }
        let j = target
            .complex()
            .index_of(image.bits())
            .expect("order-preserving maps send chains to chains");
        if class.rep.get(j) {
            rep.flip(i);
        }
    }
    CohomClass { degree: k, rep }
}

/// Outcome of one instance of the cup-product vanishing check on an open pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Prop51Outcome {
    PreconditionUnmet,
    Holds,
    Violated,
}

/// Given `a|_U = 0` and `b|_V = 0` for open `U`, `V`, checks that
/// `(a ∪ b)|_{U ∪ V} = 0`.
pub fn check_prop51(coh: &SpaceCohomology, u: PointSet, v: PointSet, a: &CohomClass, b: &CohomClass) -> Prop51Outcome {
    let space = coh.space();
    if !space.is_open(u) || !space.is_open(v) {
        return Prop51Outcome::PreconditionUnmet;
    }
    if !coh.restricts_to_zero(a, u) || !coh.restricts_to_zero(b, v) {
        return Prop51Outcome::PreconditionUnmet;
    }
    let product = coh.cohomology().cup(a, b);
    if coh.restricts_to_zero(&product, u | v) {
        Prop51Outcome::Holds
    } else {
        Prop51Outcome::Violated
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Lemma57Outcome {
    /// `f^*` fails to be surjective in some positive degree.
    Skipped {
        degree: usize,
    },
    Holds {
        source: u32,
        image: u32,
    },
    Violated {
        source: u32,
        image: u32,
    },
}

/// Checks `cuplength(A) <= cuplength(f(A))` for maps whose induced map is
/// surjective in positive degrees. Cohomology of both ends is built once.
pub struct Lemma57Checker {
    map: ContMap,
    source: SpaceCohomology,
    target: SpaceCohomology,
    non_surjective_degree: Option<usize>,
}

impl Lemma57Checker {
    pub fn new(map: ContMap) -> Self {
        let source = SpaceCohomology::new(map.dom().clone());
        let target = SpaceCohomology::new(map.cod().clone());
        let src = source.cohomology();
        let tgt = target.cohomology();
        let top = src.betti_numbers().len();
        let mut non_surjective_degree = None;
        for k in 1..top {
            let images: Vec<F2Vec> = tgt
                .basis(k)
                .iter()
                .map(|b| src.coordinates(&pullback(&map, src, tgt, b)))
                .collect();
            if super::f2::rank_of(&images) < src.betti(k) {
                non_surjective_degree = Some(k);
                break;
            }
        }
        Lemma57Checker {
            map,
            source,
            target,
            non_surjective_degree,
        }
    }

    pub fn is_surjective(&self) -> bool {
        self.non_surjective_degree.is_none()
    }

    pub fn map(&self) -> &ContMap {
        &self.map
    }

    pub fn check(&self, a: PointSet) -> Lemma57Outcome {
        if let Some(degree) = self.non_surjective_degree {
            return Lemma57Outcome::Skipped { degree };
        }
        let source = self.source.cuplength(a);
        let image = self.target.cuplength(self.map.image_of(a));
        if source <= image {
            Lemma57Outcome::Holds { source, image }
        } else {
            Lemma57Outcome::Violated { source, image }
        }
    }
}

/// One-shot form of [`Lemma57Checker`].
pub fn induced_map_and_check_lemma57(f: &ContMap, a: PointSet) -> Lemma57Outcome {
    Lemma57Checker::new(f.clone()).check(a)
}
