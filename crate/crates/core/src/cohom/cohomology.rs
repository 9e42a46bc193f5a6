use std::sync::Arc;

use crate::finspace::PointSet;

use super::complex::SimplicialComplex;
use super::f2::{kernel_and_image, Echelon, F2Vec};

/// A cohomology class of degree `degree`, held by a cocycle representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohomClass {
    pub degree: usize,
    pub rep: F2Vec,
}

struct Degree {
    /// Coboundaries `B^k`.
    boundaries: Echelon,
    /// Basis representatives reduced modulo `B^k`; tags are class coordinates.
    classes: Echelon,
    reps: Vec<F2Vec>,
}

/// Simplicial cohomology with F2 coefficients, computed by Gaussian
/// elimination on the coboundary matrices.
pub struct Cohomology {
    complex: Arc<SimplicialComplex>,
    /// `cofaces[k][i]`: indices of (k+1)-simplices having k-simplex `i` as a face.
    cofaces: Vec<Vec<Vec<usize>>>,
    degrees: Vec<Degree>,
}

impl Cohomology {
    pub fn new(complex: Arc<SimplicialComplex>) -> Self {
        let top = complex.dim().map_or(0, |d| d + 1);
        let mut cofaces: Vec<Vec<Vec<usize>>> = Vec::with_capacity(top);
        for k in 0..top {
            let mut cf = vec![Vec::new(); complex.count(k)];
            for (j, &tau) in complex.simplices(k + 1).iter().enumerate() {
                for v in PointSet::from_bits(tau) {
                    let face = tau & !(1u64 << v);
                    let i = complex.index_of(face).expect("complex is closed under faces");
                    cf[i].push(j);
                }
            }
            cofaces.push(cf);
        }

        let mut degrees = Vec::with_capacity(top);
        let mut boundaries = Echelon::new(complex.count(0), 0);
        for k in 0..top {
            let next_len = complex.count(k + 1);
            let cols: Vec<F2Vec> = cofaces[k]
                .iter()
                .map(|cf| F2Vec::from_ones(next_len, cf.iter().copied()))
                .collect();
            let (kernel, image) = kernel_and_image(&cols, next_len);
            let rank = kernel.len() - boundaries.rank();
            let mut classes = Echelon::new(complex.count(k), rank);
            let mut reps = Vec::with_capacity(rank);
            for z in kernel {
                let r = boundaries.reduce(&z);
                if !classes.contains(&r) {
                    classes.insert(r).expect("independent modulo coboundaries");
                    reps.push(z);
                }
            }
            debug_assert_eq!(reps.len(), rank);
            degrees.push(Degree {
                boundaries,
                classes,
                reps,
            });
            boundaries = image;
        }
        Cohomology {
            complex,
            cofaces,
            degrees,
        }
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    /// Dimension of `H^k`.
    pub fn betti(&self, k: usize) -> usize {
        self.degrees.get(k).map_or(0, |d| d.reps.len())
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        (0..self.degrees.len()).map(|k| self.betti(k)).collect()
    }

    pub fn basis(&self, k: usize) -> Vec<CohomClass> {
        self.degrees.get(k).map_or_else(Vec::new, |d| {
            d.reps
                .iter()
                .map(|r| CohomClass {
                    degree: k,
                    rep: r.clone(),
                })
                .collect()
        })
    }

    /// Basis classes of all positive degrees.
    pub fn positive_basis(&self) -> Vec<CohomClass> {
        (1..self.degrees.len()).flat_map(|k| self.basis(k)).collect()
    }

    pub fn zero(&self, k: usize) -> CohomClass {
        CohomClass {
            degree: k,
            rep: F2Vec::zeros(self.complex.count(k)),
        }
    }

    /// Coboundary of a k-cochain.
    pub fn coboundary(&self, k: usize, v: &F2Vec) -> F2Vec {
        let len = self.complex.count(k + 1);
        let mut out = F2Vec::zeros(len);
        if let Some(cf) = self.cofaces.get(k) {
            for i in v.ones() {
                for &j in &cf[i] {
                    out.flip(j);
                }
            }
        }
        out
    }

    pub fn is_cocycle(&self, k: usize, v: &F2Vec) -> bool {
        self.coboundary(k, v).is_zero()
    }

    pub fn is_coboundary(&self, k: usize, v: &F2Vec) -> bool {
        match self.degrees.get(k) {
            Some(d) => d.boundaries.contains(v),
            None => v.is_zero(),
        }
    }

    pub fn is_zero(&self, class: &CohomClass) -> bool {
        self.is_coboundary(class.degree, &class.rep)
    }

    pub fn same_class(&self, a: &CohomClass, b: &CohomClass) -> bool {
        if a.degree != b.degree {
            return self.is_zero(a) && self.is_zero(b);
        }
        let mut d = a.rep.clone();
        d.xor_assign(&b.rep);
        self.is_coboundary(a.degree, &d)
    }

    /// Coordinates of a cocycle class in the basis returned by [`Self::basis`].
    pub fn coordinates(&self, class: &CohomClass) -> F2Vec {
        let Some(d) = self.degrees.get(class.degree) else {
            return F2Vec::zeros(0);
        };
        let mut r = d.boundaries.reduce(&class.rep);
        let tag = d.classes.reduce_tagged(&mut r);
        debug_assert!(r.is_zero(), "coordinates of a non-cocycle");
        tag
    }

    /// Alexander–Whitney cup product under the global vertex order.
    pub fn cup(&self, a: &CohomClass, b: &CohomClass) -> CohomClass {
        let (p, q) = (a.degree, b.degree);
        let k = p + q;
        let mut out = F2Vec::zeros(self.complex.count(k));
        for (i, &sigma) in self.complex.simplices(k).iter().enumerate() {
            let (front, back) = split_faces(sigma, p);
            let fi = self.complex.index_of(front).expect("front face");
            let bi = self.complex.index_of(back).expect("back face");
            if a.rep.get(fi) && b.rep.get(bi) {
                out.flip(i);
            }
        }
        CohomClass { degree: k, rep: out }
    }

    /// Drops the coefficients of simplices not spanned by `vertices`; the
    /// result is a cochain on the induced subcomplex, still indexed by the
    /// simplices of the ambient complex.
    pub fn mask_to(&self, k: usize, v: &F2Vec, vertices: PointSet) -> F2Vec {
        let mut out = v.clone();
        for i in v.ones() {
            if self.complex.simplices(k)[i] & !vertices.bits() != 0 {
                out.flip(i);
            }
        }
        out
    }

    /// Coboundaries of the induced subcomplex on `vertices`, in ambient indices.
    pub fn sub_boundaries(&self, k: usize, vertices: PointSet) -> Echelon {
        let len = self.complex.count(k);
        let mut e = Echelon::new(len, 0);
        if k == 0 {
            return e;
        }
        let inside = |m: u64| m & !vertices.bits() == 0;
        for (i, &sigma) in self.complex.simplices(k - 1).iter().enumerate() {
            if !inside(sigma) {
                continue;
            }
            let col = F2Vec::from_ones(
                len,
                self.cofaces[k - 1][i]
                    .iter()
                    .copied()
                    .filter(|&j| inside(self.complex.simplices(k)[j])),
            );
            e.push(col);
        }
        e
    }

    /// Whether `class` restricts to zero on the subcomplex induced by `vertices`.
    pub fn restricts_to_zero(&self, class: &CohomClass, vertices: PointSet) -> bool {
        let masked = self.mask_to(class.degree, &class.rep, vertices);
        if masked.is_zero() {
            return true;
        }
        self.sub_boundaries(class.degree, vertices).contains(&masked)
    }

    /// The class restricted to `sub`, which must be a subcomplex on the same
    /// vertex labelling.
    pub fn restrict(&self, class: &CohomClass, sub: &Cohomology) -> CohomClass {
        let k = class.degree;
        let mut rep = F2Vec::zeros(sub.complex.count(k));
        for (j, &sigma) in sub.complex.simplices(k).iter().enumerate() {
            if let Some(i) = self.complex.index_of(sigma) {
                if class.rep.get(i) {
                    rep.flip(j);
                }
            }
        }
        CohomClass { degree: k, rep }
    }
}

/// Front `p`-face and back `(k-p)`-face of a k-simplex mask.
pub(crate) fn split_faces(sigma: u64, p: usize) -> (u64, u64) {
    let mut front = 0u64;
    let mut rest = sigma;
    for _ in 0..=p {
        let low = rest & rest.wrapping_neg();
        front |= low;
        rest &= !low;
    }
    let top_of_front = 1u64 << (63 - front.leading_zeros());
    (front, rest | top_of_front)
}
