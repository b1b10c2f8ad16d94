//! Fixed-width bit sets used as characteristic vectors over a finite
//! point set (join-irreducibles, generators, models).

use smallvec::SmallVec;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bits {
    words: SmallVec<[u64; 2]>,
    len: usize,
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        let n = len.div_ceil(64);
        Bits {
            words: SmallVec::from_elem(0, n),
            len,
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut b = Bits::zeros(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Bits::zeros(len);
        for i in idx {
            b.insert(i);
        }
        b
    }

    /// Number of positions (not the number of set bits).
    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn set(&mut self, i: usize, on: bool) {
        if on {
            self.insert(i)
        } else {
            self.remove(i)
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Bits) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    pub fn and(&self, other: &Bits) -> Bits {
        let mut r = self.clone();
        r.and_assign(other);
        r
    }

    pub fn or(&self, other: &Bits) -> Bits {
        let mut r = self.clone();
        r.or_assign(other);
        r
    }

    pub fn minus(&self, other: &Bits) -> Bits {
        let mut r = self.clone();
        for (a, b) in r.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
        r
    }

    pub fn complement(&self) -> Bits {
        let mut r = self.clone();
        for w in r.words.iter_mut() {
            *w = !*w;
        }
        r.trim();
        r
    }

    pub fn and_assign(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    pub fn or_assign(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }

    fn trim(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops_across_word_boundary() {
        let a = Bits::from_indices(130, [0, 63, 64, 129]);
        let b = Bits::from_indices(130, [63, 100]);
        assert_eq!(a.and(&b).iter().collect::<Vec<_>>(), vec![63]);
        assert_eq!(a.or(&b).count(), 5);
        assert_eq!(a.minus(&b).iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(a.complement().count(), 126);
        assert!(Bits::zeros(130).is_subset(&a));
        assert!(!a.is_subset(&b));
    }

    #[test]
    fn zero_length_sets() {
        let e = Bits::zeros(0);
        assert!(e.is_empty());
        assert_eq!(e.complement(), e);
        assert_eq!(Bits::ones(0), e);
    }
}
