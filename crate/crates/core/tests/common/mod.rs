//! Brute-force reference computations, written without the library's
//! cohomology or cover code.

#![allow(dead_code)]

use std::collections::HashMap;

use lscat::FinSpace;

/// Row-reduced F2 span of `u64` vectors.
#[derive(Default, Clone)]
pub struct Span {
    rows: Vec<u64>,
}

impl Span {
    pub fn reduce(&self, mut v: u64) -> u64 {
        for &r in &self.rows {
            let top = 63 - r.leading_zeros();
            if v >> top & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    /// Adds `v`; `false` if it was already in the span.
    pub fn insert(&mut self, v: u64) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let top = 63 - v.leading_zeros();
        for r in &mut self.rows {
            if *r >> top & 1 == 1 {
                *r ^= v;
            }
        }
        self.rows.push(v);
        self.rows.sort_unstable_by(|a, b| b.cmp(a));
        true
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// A simplicial complex as vertex masks per dimension.
pub struct Complex {
    pub simplices: Vec<Vec<u64>>,
    index: Vec<HashMap<u64, usize>>,
}

impl Complex {
    pub fn from_simplices(all: impl IntoIterator<Item = u64>) -> Complex {
        let mut simplices: Vec<Vec<u64>> = Vec::new();
        for s in all {
            let d = s.count_ones() as usize - 1;
            if simplices.len() <= d {
                simplices.resize(d + 1, Vec::new());
            }
            simplices[d].push(s);
        }
        for level in &mut simplices {
            level.sort_unstable();
            level.dedup();
            assert!(level.len() <= 64, "reference cochains are single words");
        }
        let index = simplices
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, &s)| (s, i)).collect())
            .collect();
        Complex { simplices, index }
    }

    /// Closure of the given maximal faces under taking nonempty subsets.
    pub fn from_maximal(faces: &[Vec<usize>]) -> Complex {
        let mut all = Vec::new();
        for f in faces {
            let mask: u64 = f.iter().map(|&v| 1u64 << v).sum();
            let mut sub = mask;
            while sub != 0 {
                all.push(sub);
                sub = (sub - 1) & mask;
            }
        }
        Complex::from_simplices(all)
    }

    /// Chains of the order, one simplex per nonempty chain.
    pub fn order_complex(space: &FinSpace) -> Complex {
        let n = space.len();
        let mut all = Vec::new();
        for mask in 1u64..(1 << n) {
            let pts: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if pts.iter().all(|&x| pts.iter().all(|&y| space.comparable(x, y))) {
                all.push(mask);
            }
        }
        Complex::from_simplices(all)
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices.get(k).map_or(0, Vec::len)
    }

    pub fn euler(&self) -> i64 {
        (0..self.simplices.len())
            .map(|k| {
                if k % 2 == 0 {
                    self.count(k) as i64
                } else {
                    -(self.count(k) as i64)
                }
            })
            .sum()
    }

    /// `δ` of a k-cochain, as a (k+1)-cochain.
    pub fn coboundary(&self, k: usize, c: u64) -> u64 {
        let mut out = 0;
        for (j, &s) in self.simplices.get(k + 1).into_iter().flatten().enumerate() {
            let mut bit = 0;
            let mut rest = s;
            while rest != 0 {
                let v = rest & rest.wrapping_neg();
                rest ^= v;
                if let Some(&i) = self.index[k].get(&(s ^ v)) {
                    bit ^= c >> i & 1;
                }
            }
            out |= bit << j;
        }
        out
    }

    /// Coboundaries of (k-1)-cochains supported on simplices inside `within`,
    /// restricted to k-simplices inside `within`.
    pub fn coboundary_span(&self, k: usize, within: u64) -> Span {
        let mut span = Span::default();
        if k == 0 {
            return span;
        }
        let inside = self.inside(k, within);
        for (i, &s) in self.simplices[k - 1].iter().enumerate() {
            if s & !within == 0 {
                span.insert(self.coboundary(k - 1, 1 << i) & inside);
            }
        }
        span
    }

    /// Mask of k-simplices with every vertex in `within`.
    pub fn inside(&self, k: usize, within: u64) -> u64 {
        self.simplices
            .get(k)
            .into_iter()
            .flatten()
            .enumerate()
            .filter(|(_, &s)| s & !within == 0)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn all_vertices(&self) -> u64 {
        self.simplices[0].iter().fold(0, |m, &s| m | s)
    }

    /// Cocycle representatives of a basis of `H^k`.
    pub fn cohomology_basis(&self, k: usize) -> Vec<u64> {
        let m = self.count(k);
        let mut images = Span::default();
        // Kernel of δ_k by elimination with tracked combinations.
        let mut pivots: Vec<(u64, u64)> = Vec::new();
        let mut kernel = Vec::new();
        for i in 0..m {
            let (mut img, mut comb) = (self.coboundary(k, 1 << i), 1u64 << i);
            for &(pi, pc) in &pivots {
                let top = 63 - pi.leading_zeros();
                if img >> top & 1 == 1 {
                    img ^= pi;
                    comb ^= pc;
                }
            }
            if img == 0 {
                kernel.push(comb);
            } else {
                pivots.push((img, comb));
                pivots.sort_unstable_by(|a, b| b.0.cmp(&a.0));
            }
        }
        if k > 0 {
            for i in 0..self.count(k - 1) {
                images.insert(self.coboundary(k - 1, 1 << i));
            }
        }
        kernel.into_iter().filter(|&z| images.insert(z)).collect()
    }

    pub fn betti(&self) -> Vec<usize> {
        (0..self.simplices.len())
            .map(|k| self.cohomology_basis(k).len())
            .collect()
    }

    /// Alexander-Whitney product with vertices ordered by index.
    pub fn cup(&self, p: usize, a: u64, q: usize, b: u64) -> u64 {
        let mut out = 0;
        for (j, &s) in self.simplices.get(p + q).into_iter().flatten().enumerate() {
            let verts: Vec<u64> = (0..64).filter(|&v| s >> v & 1 == 1).map(|v| 1u64 << v).collect();
            let front: u64 = verts[..=p].iter().sum();
            let back: u64 = verts[p..].iter().sum();
            let fa = a >> self.index[p][&front] & 1;
            let bb = b >> self.index[q][&back] & 1;
            out |= (fa & bb) << j;
        }
        out
    }

    /// Whether the degree-k cocycle `z` is a coboundary.
    pub fn is_exact(&self, k: usize, z: u64) -> bool {
        self.coboundary_span(k, self.all_vertices()).contains(z)
    }

    /// Least `N >= 1` with every `N`-fold product of positive-degree classes
    /// zero on the whole complex. Products are multilinear, so basis
    /// products suffice.
    pub fn cuplength(&self) -> u32 {
        let basis: Vec<(usize, u64)> = (1..self.simplices.len())
            .flat_map(|k| self.cohomology_basis(k).into_iter().map(move |z| (k, z)))
            .collect();
        let mut level: Vec<(usize, u64)> = basis.clone();
        let mut n = 1;
        loop {
            level.retain(|&(k, z)| !self.is_exact(k, z));
            if level.is_empty() {
                return n;
            }
            n += 1;
            level = level
                .iter()
                .flat_map(|&(k, z)| basis.iter().map(move |&(l, w)| (k, z, l, w)))
                .filter(|&(k, _, l, _)| k + l < self.simplices.len())
                .map(|(k, z, l, w)| (k + l, self.cup(k, z, l, w)))
                .collect();
        }
    }

    /// Every positive-degree class restricts to zero on the vertices `within`.
    pub fn trivial_on(&self, within: u64) -> bool {
        (1..self.simplices.len()).all(|k| {
            let span = self.coboundary_span(k, within);
            let inside = self.inside(k, within);
            self.cohomology_basis(k).into_iter().all(|z| span.contains(z & inside))
        })
    }
}

/// All up-sets by testing every subset.
pub fn up_sets(space: &FinSpace) -> Vec<u64> {
    let n = space.len();
    (0u64..1 << n)
        .filter(|&m| (0..n).all(|x| m >> x & 1 == 0 || (0..n).all(|y| !space.leq(x, y) || m >> y & 1 == 1)))
        .collect()
}

/// Fewest members of `family` whose union contains `target`, by trying
/// every combination of increasing size.
pub fn brute_min_cover(target: u64, family: &[u64]) -> Option<usize> {
    if target == 0 {
        return Some(0);
    }
    for k in 1..=family.len() {
        if combos(family, k).any(|u| target & !u == 0) {
            return Some(k);
        }
    }
    None
}

fn combos(family: &[u64], k: usize) -> Box<dyn Iterator<Item = u64> + '_> {
    if k == 0 {
        return Box::new(std::iter::once(0));
    }
    Box::new((0..family.len()).flat_map(move |i| combos(&family[i + 1..], k - 1).map(move |u| u | family[i])))
}
