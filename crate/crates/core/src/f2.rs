//! Dense bit vectors over the two-element field and incremental row reduction.

use std::fmt;

const WORD: usize = 64;

/// A fixed-width vector over F₂ stored as packed 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vec {
    len: usize,
    words: Vec<u64>,
}

impl F2Vec {
    pub fn zeros(len: usize) -> Self {
        F2Vec {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.toggle(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &F2Vec) {
        assert_eq!(self.len, other.len, "F2Vec length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Lowest set index, if any.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b)
            })
        })
    }

    /// Dot product over F₂.
    pub fn dot(&self, other: &F2Vec) -> bool {
        assert_eq!(self.len, other.len, "F2Vec length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    /// Reorders coordinates: bit `i` of `self` moves to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> F2Vec {
        debug_assert_eq!(perm.len(), self.len);
        F2Vec::from_indices(self.len, self.ones().map(|i| perm[i]))
    }
}

impl fmt::Debug for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        write!(f, "]")
    }
}

/// Row-echelon basis of a subspace of F₂ⁿ, built one vector at a time.
///
/// Each stored row has a pivot (its lowest set bit) that is zero in every
/// row inserted after it, so a single ordered sweep fully reduces a vector
/// against the pivots.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<F2Vec>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[F2Vec] {
        &self.rows
    }

    /// Clears every pivot position of `v`.
    pub fn reduce(&self, v: &F2Vec) -> F2Vec {
        let mut v = v.clone();
        self.reduce_in_place(&mut v);
        v
    }

    pub fn reduce_in_place(&self, v: &mut F2Vec) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
    }

    pub fn contains(&self, v: &F2Vec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the basis; returns false if it was already in the span.
    pub fn insert(&mut self, v: &F2Vec) -> bool {
        assert_eq!(v.len(), self.width, "Echelon width mismatch");
        let r = self.reduce(v);
        match r.first_one() {
            Some(p) => {
                self.rows.push(r);
                self.pivots.push(p);
                true
            }
            None => false,
        }
    }
}

/// Kernel of the linear map whose i-th column is `columns[i]` (each of length
/// `target_len`). Returns a basis as vectors of length `columns.len()`.
pub fn kernel(columns: &[F2Vec], target_len: usize) -> Vec<F2Vec> {
    let n = columns.len();
    let width = target_len + n;
    let mut ech = Echelon::new(width);
    let mut out = Vec::new();
    for (i, col) in columns.iter().enumerate() {
        debug_assert_eq!(col.len(), target_len);
        let mut aug = F2Vec::zeros(width);
        for j in col.ones() {
            aug.set(j, true);
        }
        aug.set(target_len + i, true);
        ech.reduce_in_place(&mut aug);
        match aug.first_one() {
            Some(p) if p < target_len => {
                ech.rows.push(aug);
                ech.pivots.push(p);
            }
            _ => {
                out.push(F2Vec::from_indices(
                    n,
                    aug.ones().filter(|&j| j >= target_len).map(|j| j - target_len),
                ));
            }
        }
    }
    out
}

/// Rank of the span of `vectors`.
pub fn rank(vectors: &[F2Vec], width: usize) -> usize {
    let mut ech = Echelon::new(width);
    vectors.iter().filter(|v| ech.insert(v)).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_ops() {
        let mut v = F2Vec::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(v.count_ones(), 3);
        v.toggle(0);
        assert_eq!(v.first_one(), Some(64));
        let w = F2Vec::from_indices(130, [64, 1]);
        v.xor_assign(&w);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![1, 129]);
        assert!(v.dot(&w));
    }

    #[test]
    fn echelon_span() {
        let mut e = Echelon::new(4);
        assert!(e.insert(&F2Vec::from_indices(4, [0, 1])));
        assert!(e.insert(&F2Vec::from_indices(4, [1, 2])));
        assert!(!e.insert(&F2Vec::from_indices(4, [0, 2])));
        assert!(e.contains(&F2Vec::from_indices(4, [0, 2])));
        assert!(!e.contains(&F2Vec::from_indices(4, [3])));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn kernel_of_cycle_graph() {
        // boundary of a triangle: edges e0=(0,1), e1=(1,2), e2=(0,2)
        let cols = vec![
            F2Vec::from_indices(3, [0, 1]),
            F2Vec::from_indices(3, [1, 2]),
            F2Vec::from_indices(3, [0, 2]),
        ];
        let k = kernel(&cols, 3);
        assert_eq!(k, vec![F2Vec::from_indices(3, [0, 1, 2])]);
        assert_eq!(rank(&cols, 3), 2);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let cols = vec![F2Vec::zeros(2); 3];
        assert_eq!(kernel(&cols, 2).len(), 3);
    }
}
