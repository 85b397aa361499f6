//! Dense word-vector bit sets with a fixed domain size.

use std::cmp::Ordering;
use std::fmt;

pub type Word = u64;
pub const WORD_BITS: usize = Word::BITS as usize;

#[inline]
fn num_words(domain_size: usize) -> usize {
    domain_size.div_ceil(WORD_BITS)
}

/// A fixed-size bit set. Binary operations require equal domain sizes and
/// panic otherwise; callers that accept foreign sets check domains first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    domain_size: usize,
    words: Vec<Word>,
}

impl BitSet {
    pub fn new_empty(domain_size: usize) -> Self {
        BitSet {
            domain_size,
            words: vec![0; num_words(domain_size)],
        }
    }

    pub fn new_filled(domain_size: usize) -> Self {
        let mut set = BitSet {
            domain_size,
            words: vec![!0; num_words(domain_size)],
        };
        set.clear_excess_bits();
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(domain_size: usize, indices: I) -> Self {
        let mut set = Self::new_empty(domain_size);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// Builds a set of `domain_size` bits from the leading words of `words`.
    pub fn from_word_slice(domain_size: usize, words: &[Word]) -> Self {
        let n = num_words(domain_size);
        let mut set = BitSet {
            domain_size,
            words: words[..n].to_vec(),
        };
        set.clear_excess_bits();
        set
    }

    /// Popcount of the words in `range`.
    pub fn count_words(&self, range: std::ops::Range<usize>) -> usize {
        self.words[range]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    fn clear_excess_bits(&mut self) {
        let rem = self.domain_size % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    #[inline]
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        assert!(i < self.domain_size);
        self.words[i / WORD_BITS] & (1 << (i % WORD_BITS)) != 0
    }

    /// Returns `true` if the bit changed.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(
            i < self.domain_size,
            "index {i} out of domain {}",
            self.domain_size
        );
        let w = &mut self.words[i / WORD_BITS];
        let mask = 1 << (i % WORD_BITS);
        let old = *w;
        *w |= mask;
        old != *w
    }

    #[inline]
    pub fn remove(&mut self, i: usize) -> bool {
        assert!(i < self.domain_size);
        let w = &mut self.words[i / WORD_BITS];
        let mask = 1 << (i % WORD_BITS);
        let old = *w;
        *w &= !mask;
        old != *w
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn intersection_count(&self, other: &BitSet) -> usize {
        assert_eq!(self.domain_size, other.domain_size);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `|self ∩ other| >= t`, stopping as soon as the threshold is reached.
    #[inline]
    pub fn intersects_at_least(&self, other: &BitSet, t: usize) -> bool {
        assert_eq!(self.domain_size, other.domain_size);
        if t == 0 {
            return true;
        }
        let mut acc = 0usize;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc += (a & b).count_ones() as usize;
            if acc >= t {
                return true;
            }
        }
        false
    }

    #[inline]
    pub fn is_subset(&self, other: &BitSet) -> bool {
        assert_eq!(self.domain_size, other.domain_size);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn intersect_with(&mut self, other: &BitSet) {
        assert_eq!(self.domain_size, other.domain_size);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    #[inline]
    pub fn union_with(&mut self, other: &BitSet) {
        assert_eq!(self.domain_size, other.domain_size);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    #[inline]
    pub fn subtract(&mut self, other: &BitSet) {
        assert_eq!(self.domain_size, other.domain_size);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn iter(&self) -> BitIter<'_> {
        BitIter {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the ascending index lists.
    pub fn cmp_lex(&self, other: &BitSet) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct BitIter<'a> {
    words: &'a [Word],
    word_idx: usize,
    current: Word,
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD_BITS + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
    }
}
