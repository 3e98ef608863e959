use num_bigint::BigUint;

use crate::bits::ElemSet;
use crate::error::{Error, Result};
use crate::instances::{SetSystem, SubsetSumInstance};

/// Largest set size whose subsets are expanded.
const MAX_EXPANDED_SET: usize = 20;

/// Set Cover to Set Partitioning: every nonempty subset of every set.
/// A cover with at most `t` sets exists iff a partitioning with at most `t`
/// sets does.
pub fn set_cover_to_set_partitioning(system: &SetSystem) -> Result<SetSystem> {
    let k = system.max_set_size();
    if k > MAX_EXPANDED_SET {
        return Err(Error::Capacity {
            what: "set to expand into subsets",
            size: k,
            cap: MAX_EXPANDED_SET,
        });
    }
    let mut out = Vec::new();
    for s in system.sets() {
        let elems: Vec<usize> = s.iter().collect();
        for mask in 1u32..1 << elems.len() {
            out.push(
                elems
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect::<ElemSet>(),
            );
        }
    }
    SetSystem::dedup(system.universe_size(), out)
}

fn bit_len(x: usize) -> usize {
    (usize::BITS - x.leading_zeros()) as usize
}

/// Set Partitioning with exactly `t0` sets to Subset Sum.
///
/// Each number has three fields, least significant first: the element
/// indicator (`n` bits), the set size (`⌈log2(n+1)⌉` bits) and a count
/// (`⌈log2(t0+1)⌉` bits). The first two fields are followed by
/// `⌈log2(t0+1)⌉` zero bits so sums never carry between fields. The target
/// is `(all ones, n, t0)`.
pub fn set_partitioning_to_subset_sum(system: &SetSystem, t0: usize) -> Result<SubsetSumInstance> {
    if t0 == 0 {
        return Err(Error::param("the partition size must be at least 1"));
    }
    let n = system.universe_size();
    let pad = bit_len(t0);
    let off2 = n + pad;
    let off1 = off2 + bit_len(n) + pad;
    let encode = |mask: BigUint, size: usize, count: usize| -> BigUint {
        mask + (BigUint::from(size) << off2) + (BigUint::from(count) << off1)
    };
    let items = system
        .sets()
        .iter()
        .map(|s| {
            let mask = s.iter().fold(BigUint::ZERO, |acc, e| acc | BigUint::from(1u8) << e);
            encode(mask, s.len(), 1)
        })
        .collect();
    let ones = (BigUint::from(1u8) << n) - 1u8;
    SubsetSumInstance::new(items, encode(ones, n, t0))
}

/// One Subset Sum instance for each `t0` in `1..=t`.
pub fn set_partitioning_to_subset_sum_all(
    system: &SetSystem,
    t: usize,
) -> Result<Vec<SubsetSumInstance>> {
    if t == 0 {
        return Err(Error::param("the size bound must be at least 1"));
    }
    (1..=t).map(|t0| set_partitioning_to_subset_sum(system, t0)).collect()
}
