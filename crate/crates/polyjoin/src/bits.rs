//! Bit-packed vertex subsets, indexed against a complex's vertex table.
//!
//! Subsets of a fixed universe of `n` vertices are stored as `ceil(n/64)`
//! machine words, so subset tests, unions and intersections are word
//! operations. Universes of at most 64 vertices (the common case under the
//! construction guardrail) use a single word.

/// A subset of `{0, .., n-1}` packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub(crate) struct Mask {
    words: Box<[u64]>,
}

pub(crate) fn word_count(universe: usize) -> usize {
    universe.div_ceil(64).max(1)
}

impl Mask {
    pub fn empty(universe: usize) -> Self {
        Mask {
            words: vec![0u64; word_count(universe)].into_boxed_slice(),
        }
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Mask::empty(universe);
        for i in indices {
            m.set(i);
        }
        m
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        match self.words.get(i / 64) {
            Some(w) => (w >> (i % 64)) & 1 == 1,
            None => false,
        }
    }

    #[inline]
    pub fn is_subset(&self, other: &Mask) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn union(&self, other: &Mask) -> Mask {
        Mask {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersect(&self, other: &Mask) -> Mask {
        Mask {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, w)| {
            let mut w = *w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

impl std::fmt::Debug for Mask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter_ones()).finish()
    }
}

/// Drops masks contained in another mask of the list, and deduplicates.
/// The surviving facets keep no particular order.
pub(crate) fn maximalize(mut masks: Vec<Mask>) -> Vec<Mask> {
    masks.sort_by_key(|m| std::cmp::Reverse(m.count()));
    masks.dedup();
    let mut kept: Vec<Mask> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|k| m.is_subset(k)) {
            kept.push(m);
        }
    }
    kept
}
