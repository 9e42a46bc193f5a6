use std::fmt;
use std::sync::Arc;

use crate::error::{LsError, Result};

use super::{FinSpace, PointSet};

/// An order-preserving (equivalently, continuous) map between finite spaces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ContMap {
    dom: Arc<FinSpace>,
    cod: Arc<FinSpace>,
    image: Vec<usize>,
}

impl ContMap {
    pub fn new(dom: Arc<FinSpace>, cod: Arc<FinSpace>, image: Vec<usize>) -> Result<Self> {
        if image.len() != dom.len() {
            return Err(LsError::NotContinuous(format!(
                "image has {} entries, domain has {} points",
                image.len(),
                dom.len()
            )));
        }
        if let Some(&y) = image.iter().find(|&&y| y >= cod.len()) {
            return Err(LsError::PointOutOfRange {
                index: y,
                len: cod.len(),
            });
        }
        for (x, y) in dom.order_pairs() {
            if !cod.leq(image[x], image[y]) {
                return Err(LsError::NotContinuous(format!(
                    "{} <= {} but {} !<= {}",
                    dom.label(x),
                    dom.label(y),
                    cod.label(image[x]),
                    cod.label(image[y])
                )));
            }
        }
        Ok(ContMap { dom, cod, image })
    }

    pub(crate) fn new_unchecked(dom: Arc<FinSpace>, cod: Arc<FinSpace>, image: Vec<usize>) -> Self {
        debug_assert!(ContMap::new(dom.clone(), cod.clone(), image.clone()).is_ok());
        ContMap { dom, cod, image }
    }

    pub fn identity(space: Arc<FinSpace>) -> Self {
        let image = (0..space.len()).collect();
        ContMap {
            dom: space.clone(),
            cod: space,
            image,
        }
    }

    pub fn constant(dom: Arc<FinSpace>, cod: Arc<FinSpace>, value: usize) -> Result<Self> {
        let image = vec![value; dom.len()];
        ContMap::new(dom, cod, image)
    }

    pub fn dom(&self) -> &Arc<FinSpace> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FinSpace> {
        &self.cod
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn is_constant(&self) -> bool {
        self.image.windows(2).all(|w| w[0] == w[1])
    }

    /// `f(A)`.
    pub fn image_of(&self, a: PointSet) -> PointSet {
        a.iter().map(|x| self.image[x]).collect()
    }

    /// `f^{-1}(B)`.
    pub fn preimage(&self, b: PointSet) -> PointSet {
        (0..self.dom.len()).filter(|&x| b.contains(self.image[x])).collect()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ContMap) -> Result<ContMap> {
        if *self.cod != *other.dom {
            return Err(LsError::MapMismatch);
        }
        Ok(ContMap {
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            image: self.image.iter().map(|&y| other.image[y]).collect(),
        })
    }

    /// Pointwise order `self <= other`.
    pub fn pointwise_leq(&self, other: &ContMap) -> bool {
        self.image.iter().zip(&other.image).all(|(&a, &b)| self.cod.leq(a, b))
    }

    pub(crate) fn same_ends(&self, other: &ContMap) -> bool {
        *self.dom == *other.dom && *self.cod == *other.cod
    }
}

impl fmt::Debug for ContMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (x, &y) in self.image.iter().enumerate() {
            m.entry(&self.dom.label(x), &self.cod.label(y));
        }
        m.finish()
    }
}
