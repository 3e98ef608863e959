//! Growable bit sets over `0..n` with numeric ordering.

use std::cmp::Ordering;
use std::fmt;

/// A finite set of element indices stored as little-endian 64-bit words.
///
/// Trailing zero words are never stored, so two sets are equal exactly when
/// their words are equal, independent of the universe they were built for.
/// Sets order by the numeric value of their bit mask.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ElemSet {
    words: Vec<u64>,
}

impl ElemSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_u64(mask: u64) -> Self {
        let mut s = ElemSet { words: vec![mask] };
        s.trim();
        s
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        let mut s = ElemSet { words };
        s.trim();
        s
    }

    /// The set `{0, .., len-1}`.
    pub fn full(len: usize) -> Self {
        let mut words = vec![u64::MAX; len / 64];
        if !len.is_multiple_of(64) {
            words.push((1u64 << (len % 64)) - 1);
        }
        ElemSet { words }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The mask as a single word, if every element is below 64.
    pub fn as_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn insert(&mut self, elem: usize) {
        let (w, b) = (elem / 64, elem % 64);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn remove(&mut self, elem: usize) {
        let (w, b) = (elem / 64, elem % 64);
        if w < self.words.len() {
            self.words[w] &= !(1 << b);
            self.trim();
        }
    }

    pub fn contains(&self, elem: usize) -> bool {
        let (w, b) = (elem / 64, elem % 64);
        self.words.get(w).is_some_and(|x| x >> b & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Largest element, if any.
    pub fn max_element(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        let words = self
            .words
            .iter()
            .enumerate()
            .map(|(i, w)| w & !other.words.get(i).copied().unwrap_or(0))
            .collect();
        ElemSet::from_words(words)
    }

    pub fn intersects(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    /// Elements in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// Shift every element up by `offset`.
    pub fn shifted(&self, offset: usize) -> ElemSet {
        self.iter().map(|e| e + offset).collect()
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::new();
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
