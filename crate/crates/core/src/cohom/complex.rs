use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{LsError, Result};
use crate::finspace::{FinSpace, PointSet, MAX_POINTS};

/// A finite abstract simplicial complex on at most 64 ordered vertices.
///
/// A simplex is the bit mask of its vertices; the global vertex order is the
/// index order, which fixes front and back faces for cup products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    /// `simplices[k]` lists the k-simplices in increasing mask order.
    simplices: Vec<Vec<u64>>,
    index: Vec<HashMap<u64, usize>>,
}

impl SimplicialComplex {
    /// Closes the given faces under taking subsets.
    pub fn from_faces<S: Into<String>>(labels: Vec<S>, faces: &[Vec<usize>]) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_POINTS {
            return Err(LsError::TooManyPoints(labels.len()));
        }
        let mut masks = Vec::with_capacity(faces.len());
        for face in faces {
            if face.is_empty() {
                return Err(LsError::InvalidComplex("empty face".into()));
            }
            let mut mask = 0u64;
            for &v in face {
                if v >= labels.len() {
                    return Err(LsError::PointOutOfRange {
                        index: v,
                        len: labels.len(),
                    });
                }
                if mask & (1 << v) != 0 {
                    return Err(LsError::InvalidComplex(format!("face repeats vertex `{}`", labels[v])));
                }
                mask |= 1 << v;
            }
            masks.push(mask);
        }
        // Every vertex is a simplex, even if no face names it.
        masks.extend((0..labels.len()).map(|v| 1u64 << v));
        Ok(Self::close(labels, masks))
    }

    fn close(labels: Vec<String>, maximal: Vec<u64>) -> Self {
        let mut all: BTreeSet<u64> = BTreeSet::new();
        for m in maximal {
            if all.contains(&m) {
                continue;
            }
            // All nonempty submasks.
            let mut sub = m;
            while sub != 0 {
                all.insert(sub);
                sub = (sub - 1) & m;
            }
        }
        Self::from_closed_set(labels, all)
    }

    fn from_closed_set(labels: Vec<String>, all: BTreeSet<u64>) -> Self {
        let dim = all.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);
        let mut simplices = vec![Vec::new(); dim];
        for m in all {
            simplices[m.count_ones() as usize - 1].push(m);
        }
        let index = simplices
            .iter()
            .map(|s| s.iter().enumerate().map(|(i, &m)| (m, i)).collect())
            .collect();
        SimplicialComplex {
            labels,
            simplices,
            index,
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Top dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    /// Number of k-simplices.
    pub fn count(&self, k: usize) -> usize {
        self.simplices.get(k).map_or(0, Vec::len)
    }

    pub fn simplices(&self, k: usize) -> &[u64] {
        self.simplices.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn index_of(&self, simplex: u64) -> Option<usize> {
        let k = (simplex.count_ones() as usize).checked_sub(1)?;
        self.index.get(k)?.get(&simplex).copied()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(k, s)| if k % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    /// Full subcomplex on a vertex subset.
    pub fn induced(&self, vertices: PointSet) -> SimplicialComplex {
        let all: BTreeSet<u64> = self
            .simplices
            .iter()
            .flatten()
            .copied()
            .filter(|&m| m & !vertices.bits() == 0)
            .collect();
        Self::from_closed_set(self.labels.clone(), all)
    }

    /// Maximal faces as vertex index lists.
    pub fn maximal_faces(&self) -> Vec<Vec<usize>> {
        let all: Vec<u64> = self.simplices.iter().flatten().copied().collect();
        all.iter()
            .filter(|&&m| !all.iter().any(|&o| o != m && o & m == m))
            .map(|&m| PointSet::from_bits(m).iter().collect())
            .collect()
    }

    /// Relabels vertices: new vertex `perm[v]` is old vertex `v`.
    pub fn permuted(&self, perm: &[usize]) -> SimplicialComplex {
        let mut labels = vec![String::new(); self.labels.len()];
        for (v, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[v].clone();
        }
        let all: BTreeSet<u64> = self
            .simplices
            .iter()
            .flatten()
            .map(|&m| permute_mask(m, perm))
            .collect();
        Self::from_closed_set(labels, all)
    }
}

pub(crate) fn permute_mask(m: u64, perm: &[usize]) -> u64 {
    PointSet::from_bits(m).iter().fold(0, |acc, v| acc | 1 << perm[v])
}

/// Simplices are the chains of the poset; vertex order is point index order.
pub fn order_complex(space: &FinSpace) -> SimplicialComplex {
    let mut all = BTreeSet::new();
    fn extend(space: &FinSpace, chain: u64, top: usize, all: &mut BTreeSet<u64>) {
        all.insert(chain);
        for y in space.up(top).without(top) {
            extend(space, chain | 1 << y, y, all);
        }
    }
    for x in 0..space.len() {
        extend(space, 1 << x, x, &mut all);
    }
    SimplicialComplex::from_closed_set(space.labels().to_vec(), all)
}

/// Face poset: one point per simplex, ordered by inclusion. Labels join the
/// vertex labels with `.`.
pub fn face_poset(complex: &SimplicialComplex) -> Result<FinSpace> {
    let all: Vec<u64> = complex.simplices.iter().flatten().copied().collect();
    if all.len() > MAX_POINTS {
        return Err(LsError::TooManyPoints(all.len()));
    }
    let labels: Vec<String> = all
        .iter()
        .map(|&m| {
            PointSet::from_bits(m)
                .iter()
                .map(|v| complex.labels[v].as_str())
                .collect::<Vec<_>>()
                .join(".")
        })
        .collect();
    let mut pairs = Vec::new();
    for (i, &a) in all.iter().enumerate() {
        for (j, &b) in all.iter().enumerate() {
            if i != j && a & b == a {
                pairs.push((i, j));
            }
        }
    }
    FinSpace::new(labels, &pairs)
}

/// Wire form of a complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    /// Optional vertex order; when present every face vertex must be listed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    pub maximal_faces: Vec<Vec<String>>,
}

/// Parses `{"maximal_faces": [["v1","v2","v3"], ...]}`. Vertices are ordered
/// by the `vertices` list if given, else by first appearance.
pub fn parse_complex_json(text: &str) -> Result<SimplicialComplex> {
    let raw: ComplexJson = serde_json::from_str(text)?;
    let fixed = raw.vertices.is_some();
    let mut labels: Vec<String> = Vec::new();
    for v in raw.vertices.into_iter().flatten() {
        if labels.contains(&v) {
            return Err(LsError::DuplicateLabel(v));
        }
        if labels.len() == MAX_POINTS {
            return Err(LsError::TooManyPoints(MAX_POINTS + 1));
        }
        labels.push(v);
    }
    let mut faces = Vec::with_capacity(raw.maximal_faces.len());
    for (fi, face) in raw.maximal_faces.iter().enumerate() {
        let mut idx = Vec::with_capacity(face.len());
        for (vi, v) in face.iter().enumerate() {
            let i = match labels.iter().position(|l| l == v) {
                Some(i) => i,
                None if fixed => {
                    return Err(LsError::UnknownPoint {
                        field: format!("maximal_faces[{fi}][{vi}]"),
                        label: v.clone(),
                    })
                }
                None => {
                    if labels.len() == MAX_POINTS {
                        return Err(LsError::TooManyPoints(MAX_POINTS + 1));
                    }
                    labels.push(v.clone());
                    labels.len() - 1
                }
            };
            idx.push(i);
        }
        faces.push(idx);
    }
    SimplicialComplex::from_faces(labels, &faces)
}

pub fn complex_to_json(complex: &SimplicialComplex) -> String {
    let faces = complex
        .maximal_faces()
        .into_iter()
        .map(|f| f.into_iter().map(|v| complex.labels[v].clone()).collect())
        .collect();
    serde_json::to_string(&ComplexJson {
        vertices: Some(complex.labels.clone()),
        maximal_faces: faces,
    })
    .expect("serializable")
}
