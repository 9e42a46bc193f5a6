//! Dense bit vectors over F2 and incremental row echelon forms.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vec {
    len: usize,
    words: Vec<u64>,
}

impl F2Vec {
    pub fn zeros(len: usize) -> Self {
        F2Vec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = F2Vec::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_ones<I: IntoIterator<Item = usize>>(len: usize, ones: I) -> Self {
        let mut v = F2Vec::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range {}", self.len);
        let bit = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= bit;
        } else {
            self.words[i / 64] &= !bit;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "index {i} out of range {}", self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &F2Vec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn and_assign(&mut self, other: &F2Vec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn dot(&self, other: &F2Vec) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .fold(0, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Lowest set index at or after `from`.
    pub fn next_one(&self, from: usize) -> Option<usize> {
        if from >= self.len {
            return None;
        }
        let mut w = from / 64;
        let mut word = self.words[w] & (u64::MAX << (from % 64));
        loop {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
            w += 1;
            if w == self.words.len() {
                return None;
            }
            word = self.words[w];
        }
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            })
        })
    }
}

impl fmt::Debug for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "F2Vec({s})")
    }
}

/// Row echelon basis of a subspace of `F2^len`, with each row tagged by the
/// combination of inserted generators it equals.
///
/// Rows have distinct pivots (lowest set index), so reducing a vector walks
/// its set bits upwards once.
#[derive(Clone, Debug)]
pub struct Echelon {
    len: usize,
    rows: Vec<F2Vec>,
    tags: Vec<F2Vec>,
    pivot_row: Vec<Option<usize>>,
    generators: usize,
    tag_len: usize,
}

impl Echelon {
    /// An empty basis; `tag_len` bounds the number of generators tracked.
    pub fn new(len: usize, tag_len: usize) -> Self {
        Echelon {
            len,
            rows: Vec::new(),
            tags: Vec::new(),
            pivot_row: vec![None; len],
            generators: 0,
            tag_len,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_len(&self) -> usize {
        self.len
    }

    /// Reduces `v` in place and returns the tag of the subtracted combination.
    pub fn reduce_tagged(&self, v: &mut F2Vec) -> F2Vec {
        let mut tag = F2Vec::zeros(self.tag_len);
        let mut at = 0;
        while let Some(p) = v.next_one(at) {
            if let Some(r) = self.pivot_row[p] {
                v.xor_assign(&self.rows[r]);
                tag.xor_assign(&self.tags[r]);
            }
            at = p + 1;
        }
        tag
    }

    pub fn reduce(&self, v: &F2Vec) -> F2Vec {
        let mut v = v.clone();
        let mut at = 0;
        while let Some(p) = v.next_one(at) {
            if let Some(r) = self.pivot_row[p] {
                v.xor_assign(&self.rows[r]);
            }
            at = p + 1;
        }
        v
    }

    pub fn contains(&self, v: &F2Vec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts the next generator. Returns `Err(tag)` with the dependency
    /// (a combination of earlier generators plus this one summing to zero)
    /// when `v` is already in the span.
    pub fn insert(&mut self, v: F2Vec) -> Result<(), F2Vec> {
        assert_eq!(v.len(), self.len);
        let index = self.generators;
        self.generators += 1;
        let mut v = v;
        let mut tag = self.reduce_tagged(&mut v);
        if index < self.tag_len {
            tag.flip(index);
        }
        match v.next_one(0) {
            None => Err(tag),
            Some(p) => {
                self.pivot_row[p] = Some(self.rows.len());
                self.rows.push(v);
                self.tags.push(tag);
                Ok(())
            }
        }
    }

    /// Inserts without tag bookkeeping; returns whether the rank grew.
    pub fn push(&mut self, v: F2Vec) -> bool {
        let v = self.reduce(&v);
        match v.next_one(0) {
            None => false,
            Some(p) => {
                self.pivot_row[p] = Some(self.rows.len());
                self.rows.push(v);
                self.tags.push(F2Vec::zeros(self.tag_len));
                true
            }
        }
    }
}

/// Kernel basis and image echelon of the linear map whose columns are `cols`.
pub fn kernel_and_image(cols: &[F2Vec], rows: usize) -> (Vec<F2Vec>, Echelon) {
    let mut image = Echelon::new(rows, cols.len());
    let mut kernel = Vec::new();
    for col in cols {
        if let Err(dep) = image.insert(col.clone()) {
            kernel.push(dep);
        }
    }
    (kernel, image)
}

/// Rank by plain Gaussian elimination on a row list.
pub fn rank_of(rows: &[F2Vec]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let mut e = Echelon::new(first.len(), 0);
    rows.iter().filter(|r| e.push((*r).clone())).count()
}
