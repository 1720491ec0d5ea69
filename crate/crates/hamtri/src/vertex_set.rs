//! Fixed-capacity vertex sets.
//!
//! Graphs in this crate have at most 255 vertices (the planar_code byte
//! limit), so a set of vertices fits in four machine words. `VertexSet` is
//! `Copy`, which keeps the backtracking searches allocation-free.

const WORDS: usize = 4;

/// A set of vertex ids in `0..256`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const CAPACITY: usize = WORDS * 64;

    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn all_below(n: usize) -> Self {
        assert!(n <= Self::CAPACITY);
        let mut s = Self::new();
        for w in 0..WORDS {
            let lo = w * 64;
            if n >= lo + 64 {
                s.words[w] = u64::MAX;
            } else if n > lo {
                s.words[w] = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < Self::CAPACITY);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < Self::CAPACITY);
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < Self::CAPACITY);
        self.words[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        for w in 0..WORDS {
            out.words[w] |= other.words[w];
        }
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = *self;
        for w in 0..WORDS {
            out.words[w] &= other.words[w];
        }
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = *self;
        for w in 0..WORDS {
            out.words[w] &= !other.words[w];
        }
        out
    }

    pub fn intersects(&self, other: &Self) -> bool {
        (0..WORDS).any(|w| self.words[w] & other.words[w] != 0)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        (0..WORDS).all(|w| self.words[w] & !other.words[w] == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> VertexSetIter {
        VertexSetIter { set: *self, word: 0 }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct VertexSetIter {
    set: VertexSet,
    word: usize,
}

impl Iterator for VertexSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.set.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.set.words[self.word] &= w - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_iterate() {
        let mut s = VertexSet::new();
        assert!(s.is_empty());
        for v in [3usize, 200, 64, 0, 63] {
            s.insert(v);
        }
        assert_eq!(s.len(), 5);
        assert_eq!(s.to_vec(), vec![0, 3, 63, 64, 200]);
        assert_eq!(s.first(), Some(0));
        s.remove(0);
        s.remove(64);
        assert_eq!(s.to_vec(), vec![3, 63, 200]);
        assert!(!s.contains(64));
        assert!(s.contains(200));
    }

    #[test]
    fn all_below_and_set_algebra() {
        let a = VertexSet::all_below(70);
        assert_eq!(a.len(), 70);
        assert!(a.contains(69) && !a.contains(70));
        let b = VertexSet::from_iter([1usize, 69, 100]);
        assert_eq!(a.intersection(&b).to_vec(), vec![1, 69]);
        assert_eq!(a.union(&b).len(), 71);
        assert_eq!(b.difference(&a).to_vec(), vec![100]);
        assert!(b.intersects(&a));
        assert!(VertexSet::from_iter([1usize, 69]).is_subset_of(&a));
        assert!(!b.is_subset_of(&a));
    }
}
