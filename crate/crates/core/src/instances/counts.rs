use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Solution counts keyed by solution size. Only nonzero counts are stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SizeIndexedCounts {
    counts: BTreeMap<usize, BigUint>,
}

impl SizeIndexedCounts {
    pub fn new() -> Self {
        Self::default()
    }

    /// From a dense table where entry `s` is the count for size `s`.
    pub fn from_dense<T: Into<BigUint> + Clone>(dense: &[T]) -> Self {
        let mut out = Self::new();
        for (s, c) in dense.iter().enumerate() {
            out.add(s, c.clone().into());
        }
        out
    }

    pub fn get(&self, size: usize) -> BigUint {
        self.counts.get(&size).cloned().unwrap_or_default()
    }

    pub fn add(&mut self, size: usize, amount: BigUint) {
        if amount.is_zero() {
            return;
        }
        *self.counts.entry(size).or_default() += amount;
    }

    pub fn increment(&mut self, size: usize) {
        self.add(size, BigUint::one());
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Parity of the total.
    pub fn parity(&self) -> bool {
        self.total().bit(0)
    }

    pub fn parity_at(&self, size: usize) -> bool {
        self.counts.get(&size).is_some_and(|c| c.bit(0))
    }

    /// Smallest size with a nonzero count.
    pub fn min_size(&self) -> Option<usize> {
        self.counts.keys().next().copied()
    }

    pub fn max_size(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().map(|(&s, c)| (s, c))
    }
}

impl fmt::Debug for SizeIndexedCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.counts.iter()).finish()
    }
}

impl fmt::Display for SizeIndexedCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|(s, c)| format!("{s}:{c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_entries_are_absent() {
        let c = SizeIndexedCounts::from_dense(&[0u32, 3, 0, 1]);
        assert_eq!(c.get(0), BigUint::zero());
        assert_eq!(c.get(1), BigUint::from(3u32));
        assert_eq!(c.min_size(), Some(1));
        assert_eq!(c.total(), BigUint::from(4u32));
        assert!(!c.parity());
        assert!(c.parity_at(1));
        assert_eq!(c.to_string(), "{1:3, 3:1}");
        assert_eq!(c, SizeIndexedCounts::from_dense(&[0u32, 3, 0, 1, 0]));
    }
}
