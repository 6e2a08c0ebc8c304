//! Fixed-width argument sets.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A set of argument indices drawn from a framework of a fixed arity.
///
/// Set algebra is only defined between sets of equal arity; mixing arities
/// is a programming error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArgSet {
    arity: usize,
    words: Vec<u64>,
}

impl ArgSet {
    pub fn empty(arity: usize) -> Self {
        ArgSet {
            arity,
            words: vec![0; arity.div_ceil(WORD)],
        }
    }

    pub fn full(arity: usize) -> Self {
        let mut s = ArgSet::empty(arity);
        for (i, w) in s.words.iter_mut().enumerate() {
            let rem = arity - i * WORD;
            *w = if rem >= WORD { u64::MAX } else { (1u64 << rem) - 1 };
        }
        s
    }

    pub fn singleton(arity: usize, a: usize) -> Self {
        let mut s = ArgSet::empty(arity);
        s.insert(a);
        s
    }

    /// Builds a set from indices. Panics on an out-of-range index.
    pub fn from_indices<I: IntoIterator<Item = usize>>(arity: usize, it: I) -> Self {
        let mut s = ArgSet::empty(arity);
        for a in it {
            s.insert(a);
        }
        s
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.arity
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        a < self.arity && self.words[a / WORD] & (1u64 << (a % WORD)) != 0
    }

    #[inline]
    pub fn insert(&mut self, a: usize) -> bool {
        assert!(
            a < self.arity,
            "argument {a} out of range for arity {}",
            self.arity
        );
        let (w, b) = (a / WORD, 1u64 << (a % WORD));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, a: usize) -> bool {
        if a >= self.arity {
            return false;
        }
        let (w, b) = (a / WORD, 1u64 << (a % WORD));
        let present = self.words[w] & b != 0;
        self.words[w] &= !b;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    fn check(&self, other: &ArgSet) {
        assert_eq!(
            self.arity, other.arity,
            "argument sets of different arity ({} vs {})",
            self.arity, other.arity
        );
    }

    pub fn union_with(&mut self, other: &ArgSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ArgSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &ArgSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &ArgSet) -> ArgSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &ArgSet) -> ArgSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &ArgSet) -> ArgSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> ArgSet {
        ArgSet::full(self.arity).difference(self)
    }

    pub fn is_subset(&self, other: &ArgSet) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &ArgSet) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_disjoint(&self, other: &ArgSet) -> bool {
        !self.intersects(other)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

impl<'a> IntoIterator for &'a ArgSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Lexicographic order on the ascending member tuples; `{0,5} < {1}`, and a
/// proper prefix sorts first.
impl Ord for ArgSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.arity.cmp(&other.arity))
    }
}

impl PartialOrd for ArgSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
