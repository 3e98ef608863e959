use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::instances::SubsetSumInstance;

use super::Caps;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SubsetSumMode {
    /// Reachability table over `0..=t`, pseudo-polynomial in the target.
    Dp,
    /// Depth-first enumeration of subsets with overshoot pruning.
    Brute,
}

impl FromStr for SubsetSumMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dp" => Ok(SubsetSumMode::Dp),
            "brute" => Ok(SubsetSumMode::Brute),
            _ => Err(Error::param(format!("unknown subset-sum mode `{s}`"))),
        }
    }
}

impl fmt::Display for SubsetSumMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubsetSumMode::Dp => "dp",
            SubsetSumMode::Brute => "brute",
        })
    }
}

/// Whether some subset of the items sums exactly to the target.
pub fn subset_sum_decide(
    instance: &SubsetSumInstance,
    mode: SubsetSumMode,
    caps: &Caps,
) -> Result<bool> {
    match mode {
        SubsetSumMode::Dp => decide_dp(instance, caps),
        SubsetSumMode::Brute => decide_brute(instance, caps),
    }
}

fn decide_dp(instance: &SubsetSumInstance, caps: &Caps) -> Result<bool> {
    let t = instance
        .target()
        .to_usize()
        .filter(|&t| t <= caps.subset_sum_table)
        .ok_or_else(|| Error::Capacity {
            what: "subset-sum target",
            size: instance.target().to_usize().unwrap_or(usize::MAX),
            cap: caps.subset_sum_table,
        })?;
    let words = t / 64 + 1;
    let mut reach = vec![0u64; words];
    reach[0] = 1;
    for a in instance.items() {
        let Some(a) = a.to_usize().filter(|&a| a <= t) else {
            continue;
        };
        shift_or(&mut reach, a);
    }
    Ok(reach[t / 64] >> (t % 64) & 1 == 1)
}

/// `bits |= bits << shift`, in place.
fn shift_or(bits: &mut [u64], shift: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    for i in (ws..bits.len()).rev() {
        let mut v = bits[i - ws] << bs;
        if bs != 0 && i > ws {
            v |= bits[i - ws - 1] >> (64 - bs);
        }
        bits[i] |= v;
    }
}

fn decide_brute(instance: &SubsetSumInstance, caps: &Caps) -> Result<bool> {
    caps.check("item list", instance.items().len())?;
    let t = instance.target();
    let items: Vec<&BigUint> = instance.items().iter().filter(|a| *a <= t).collect();
    if let Some(t) = t.to_u128() {
        let small: Vec<u128> = items.iter().map(|a| a.to_u128().unwrap()).collect();
        return Ok(brute_u128(&small, 0, t));
    }
    Ok(brute_big(&items, BigUint::ZERO, t))
}

fn brute_u128(items: &[u128], sum: u128, t: u128) -> bool {
    if sum == t {
        return true;
    }
    let Some((&a, rest)) = items.split_first() else {
        return false;
    };
    (sum + a <= t && brute_u128(rest, sum + a, t)) || brute_u128(rest, sum, t)
}

fn brute_big(items: &[&BigUint], sum: BigUint, t: &BigUint) -> bool {
    if &sum == t {
        return true;
    }
    let Some((&a, rest)) = items.split_first() else {
        return false;
    };
    let with = &sum + a;
    (&with <= t && brute_big(rest, with, t)) || brute_big(rest, sum, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::random::random_subset_sum;

    fn both(items: &[u64], t: u64) -> (bool, bool) {
        let s = SubsetSumInstance::from_u64(items, t).unwrap();
        let caps = Caps::default();
        (
            subset_sum_decide(&s, SubsetSumMode::Dp, &caps).unwrap(),
            subset_sum_decide(&s, SubsetSumMode::Brute, &caps).unwrap(),
        )
    }

    #[test]
    fn examples() {
        assert_eq!(both(&[3, 5, 7], 12), (true, true));
        assert_eq!(both(&[2, 4], 5), (false, false));
        assert_eq!(both(&[], 0), (true, true));
        assert_eq!(both(&[64, 1, 63], 126), (false, false));
        assert_eq!(both(&[64, 1, 63, 65], 129), (true, true));
    }

    #[test]
    fn modes_agree_on_random_instances() {
        let caps = Caps::default();
        for seed in 0..200 {
            let s = random_subset_sum(12, 10, seed).unwrap();
            assert_eq!(
                subset_sum_decide(&s, SubsetSumMode::Dp, &caps).unwrap(),
                subset_sum_decide(&s, SubsetSumMode::Brute, &caps).unwrap(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn caps_per_mode() {
        let huge = SubsetSumInstance::new(vec![1u32.into()], BigUint::from(1u64) << 100).unwrap();
        let caps = Caps::default();
        assert!(matches!(
            subset_sum_decide(&huge, SubsetSumMode::Dp, &caps),
            Err(Error::Capacity { .. })
        ));
        assert!(!subset_sum_decide(&huge, SubsetSumMode::Brute, &caps).unwrap());
        let many = SubsetSumInstance::from_u64(&[1; 30], 3).unwrap();
        assert!(subset_sum_decide(&many, SubsetSumMode::Brute, &caps).is_err());
        assert!(subset_sum_decide(&many, SubsetSumMode::Dp, &caps).unwrap());
    }
}
