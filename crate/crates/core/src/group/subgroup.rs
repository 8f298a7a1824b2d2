use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use super::FiniteGroup;

/// A set of element indices stored as little-endian 64-bit words, with a
/// cached popcount. Used for every subgroup in the crate.
///
/// Ordering is by size, then lexicographically on the bit sequence read from
/// index 0 (a set whose first differing bit is clear sorts first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupSet {
    len: usize,
    words: Vec<u64>,
    size: usize,
}

impl Hash for SubgroupSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.words.hash(state);
    }
}

impl PartialOrd for SubgroupSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SubgroupSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size.cmp(&other.size).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words) {
                let d = a ^ b;
                if d != 0 {
                    let bit = d & d.wrapping_neg();
                    return if a & bit == 0 { Ordering::Less } else { Ordering::Greater };
                }
            }
            self.len.cmp(&other.len)
        })
    }
}

impl SubgroupSet {
    pub fn word_count(len: usize) -> usize {
        len.div_ceil(64)
    }

    pub fn empty(len: usize) -> Self {
        SubgroupSet { len, words: vec![0; Self::word_count(len)], size: 0 }
    }

    pub fn trivial(len: usize) -> Self {
        let mut s = Self::empty(len);
        s.insert(0);
        s
    }

    pub fn full(len: usize) -> Self {
        Self::from_indices(len, 0..len)
    }

    /// Builds the set without checking closure; see [`SubgroupSet::is_subgroup`].
    pub fn from_indices(len: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(len);
        for i in items {
            s.insert(i);
        }
        s
    }

    /// Rebuilds a set from raw words, e.g. when reading a cache.
    pub fn from_words(len: usize, words: Vec<u64>) -> Option<Self> {
        if words.len() != Self::word_count(len) {
            return None;
        }
        if !len.is_multiple_of(64) && words[words.len() - 1] >> (len % 64) != 0 {
            return None;
        }
        let size = words.iter().map(|w| w.count_ones() as usize).sum();
        Some(SubgroupSet { len, words, size })
    }

    /// Number of elements in the ambient group.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    /// Returns `true` if `i` was newly inserted.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let w = &mut self.words[i >> 6];
        let bit = 1u64 << (i & 63);
        if *w & bit == 0 {
            *w |= bit;
            self.size += 1;
            true
        } else {
            false
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

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &SubgroupSet) -> bool {
        self.size <= other.size && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection_size(&self, other: &SubgroupSet) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn intersection(&self, other: &SubgroupSet) -> SubgroupSet {
        let words: Vec<u64> = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        let size = words.iter().map(|w| w.count_ones() as usize).sum();
        SubgroupSet { len: self.len, words, size }
    }

    /// Closure test: contains the identity, closed under products and inverses.
    pub fn is_subgroup<G: FiniteGroup + ?Sized>(&self, g: &G) -> bool {
        if self.len != g.order() || !self.contains(0) || !g.order().is_multiple_of(self.size) {
            return false;
        }
        let elems = self.to_vec();
        elems.iter().all(|&a| self.contains(g.inv(a)) && elems.iter().all(|&b| self.contains(g.mul(a, b))))
    }
}
