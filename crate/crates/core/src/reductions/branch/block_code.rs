use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::parity_math::binom_u128;

/// Largest supported block size; keeps a block's elements inside one word.
const MAX_P: usize = 21;

/// Injective code from assignments of a `p`-variable block to
/// `⌈p'/2⌉`-subsets of a `p'`-element block, `p' = p + 2⌈log2 p⌉`.
///
/// Assignment `v` (bit `j` is the value of the block's `j`-th variable) maps
/// to the `v`-th `⌈p'/2⌉`-subset of `0..p'` in lexicographic order.
#[derive(Clone, Debug)]
pub struct BlockCode {
    p: usize,
    p_prime: usize,
    images: Vec<u64>,
    inverse: HashMap<u64, u64>,
}

pub fn make_block_code(p: usize) -> Result<BlockCode> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::param(format!("block size must be odd and at least 3, got {p}")));
    }
    if p > MAX_P {
        return Err(Error::param(format!("block size {p} exceeds {MAX_P}")));
    }
    let log = (usize::BITS - (p - 1).leading_zeros()) as usize;
    let p_prime = p + 2 * log;
    let half = p_prime.div_ceil(2);
    let available = binom_u128(p_prime as u64, half as u64).unwrap_or(u128::MAX);
    if available < 1u128 << p {
        return Err(Error::Invariant(format!(
            "only {available} subsets of size {half} for 2^{p} assignments"
        )));
    }
    let images: Vec<u64> = (0..p_prime)
        .combinations(half)
        .take(1 << p)
        .map(|c| c.into_iter().fold(0u64, |m, e| m | 1 << e))
        .collect();
    let inverse = images.iter().enumerate().map(|(v, &m)| (m, v as u64)).collect();
    Ok(BlockCode {
        p,
        p_prime,
        images,
        inverse,
    })
}

impl BlockCode {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn p_prime(&self) -> usize {
        self.p_prime
    }

    /// `⌈p'/2⌉`, the size of every image.
    pub fn image_size(&self) -> usize {
        self.p_prime.div_ceil(2)
    }

    /// Mask of `0..p'`.
    pub fn block_mask(&self) -> u64 {
        (1u64 << self.p_prime) - 1
    }

    pub fn encode(&self, assignment: u64) -> u64 {
        self.images[assignment as usize]
    }

    pub fn decode(&self, image: u64) -> Option<u64> {
        self.inverse.get(&image).copied()
    }

    pub fn is_image(&self, subset: u64) -> bool {
        self.inverse.contains_key(&subset)
    }
}

/// All `size`-subsets of `0..len` as masks, lexicographic.
pub(crate) fn subsets_of_size(len: usize, size: usize) -> impl Iterator<Item = u64> {
    (0..len)
        .combinations(size)
        .map(|c| c.into_iter().fold(0u64, |m, e| m | 1 << e))
}
