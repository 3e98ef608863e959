use std::collections::HashMap;

use itertools::Itertools;
use num_rational::Ratio;

use crate::bits::ElemSet;
use crate::error::{Error, Result};
use crate::instances::SetSystem;
use crate::parity_math::binom_u128;

/// Upper limit on the number of q-fold unions formed.
pub(crate) const MAX_GROUPED_SETS: u128 = 1 << 22;

/// A Set Cover instance whose sets are unions of exactly `q` sets of a
/// source family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupedCoverInstance {
    pub system: SetSystem,
    pub target: usize,
    /// For each output set (in `system` order) the indices of the `q` source
    /// sets it was formed from; empty for sets not formed by grouping.
    pub provenance: Vec<Vec<usize>>,
    /// The padded source family that `provenance` indexes into.
    pub source: SetSystem,
    pub q: usize,
    /// Number of tag elements appended to the universe.
    pub z: usize,
}

/// `⌈1/α⌉`, the least `q` with `1/q ≤ α`.
pub(crate) fn group_size(alpha: Ratio<u64>) -> Result<usize> {
    if *alpha.numer() == 0 {
        return Err(Error::param("alpha must be positive"));
    }
    Ok(alpha.recip().ceil().to_integer() as usize)
}

/// Append `count` fresh elements, each with its own singleton set.
pub(crate) fn add_singletons(system: &SetSystem, count: usize) -> Result<SetSystem> {
    let n = system.universe_size();
    let mut sets = system.sets().to_vec();
    sets.extend((n..n + count).map(|e| ElemSet::from_iter([e])));
    SetSystem::new(n + count, sets)
}

/// All unions of `q` distinct sets, in lexicographic order of the index
/// tuples, with their index tuples.
pub(crate) fn q_unions(system: &SetSystem, q: usize) -> Result<Vec<(ElemSet, Vec<usize>)>> {
    let m = system.num_sets();
    let total = binom_u128(m as u64, q as u64).unwrap_or(u128::MAX);
    if total > MAX_GROUPED_SETS {
        return Err(Error::Capacity {
            what: "q-fold union family",
            size: total.min(usize::MAX as u128) as usize,
            cap: MAX_GROUPED_SETS as usize,
        });
    }
    let sets = system.sets();
    Ok((0..m)
        .combinations(q)
        .map(|idx| {
            let mut u = ElemSet::new();
            for &i in &idx {
                u.union_with(&sets[i]);
            }
            (u, idx)
        })
        .collect())
}

/// Set Cover with target `t` to Set Cover with target `t' ≤ α·|U'|`, by
/// taking all unions of exactly `q = ⌈1/α⌉` sets.
///
/// The target is first padded to a multiple of `q` with fresh singleton
/// elements and sets; when fewer than `q` sets would exist, `q` more are
/// added so every cover can be filled up to whole groups.
pub fn group_set_cover(
    system: &SetSystem,
    t: usize,
    alpha: Ratio<u64>,
) -> Result<GroupedCoverInstance> {
    if t > system.universe_size() {
        return Err(Error::param(format!(
            "target {t} exceeds universe size {}",
            system.universe_size()
        )));
    }
    let q = group_size(alpha)?;
    let mut pad = (q - t % q) % q;
    if system.num_sets() + pad < q && t + pad > 0 {
        pad += q;
    }
    let source = add_singletons(system, pad)?;
    let target = (t + pad) / q;

    let mut seen: HashMap<ElemSet, usize> = HashMap::new();
    let mut sets = Vec::new();
    let mut origin = Vec::new();
    for (u, idx) in q_unions(&source, q)? {
        if let std::collections::hash_map::Entry::Vacant(v) = seen.entry(u.clone()) {
            v.insert(sets.len());
            sets.push(u);
            origin.push(idx);
        }
    }
    // `SetSystem` sorts its sets; carry provenance along.
    let mut paired: Vec<_> = sets.into_iter().zip(origin).collect();
    paired.sort();
    let (sets, provenance): (Vec<_>, Vec<_>) = paired.into_iter().unzip();
    let out = SetSystem::new(source.universe_size(), sets)?;

    let bound = alpha * Ratio::from_integer(out.universe_size() as u64);
    if Ratio::from_integer(target as u64) > bound {
        return Err(Error::Invariant(format!(
            "grouped target {target} exceeds alpha times the universe"
        )));
    }
    Ok(GroupedCoverInstance {
        system: out,
        target,
        provenance,
        source,
        q,
        z: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::random::random_set_system;
    use crate::oracles::{min_set_cover_dp, Caps};

    fn yes(sys: &SetSystem, t: usize) -> bool {
        min_set_cover_dp(sys, &Caps::default()).unwrap().is_some_and(|c| c <= t)
    }

    #[test]
    fn singletons_pairwise() {
        let sys = SetSystem::from_lists(4, &[&[0], &[1], &[2], &[3]]).unwrap();
        let g = group_set_cover(&sys, 4, Ratio::new(1, 2)).unwrap();
        assert_eq!((g.q, g.target, g.system.universe_size()), (2, 2, 4));
        assert_eq!(g.system.num_sets(), 6);
        assert!(g.system.sets().iter().all(|s| s.len() == 2));
        assert!(yes(&g.system, g.target));
        for (s, idx) in g.system.sets().iter().zip(&g.provenance) {
            assert_eq!(idx.len(), 2);
            let u = g.source.sets()[idx[0]].union(&g.source.sets()[idx[1]]);
            assert_eq!(&u, s);
        }
    }

    #[test]
    fn padding() {
        let sys = SetSystem::from_lists(3, &[&[0, 1], &[2]]).unwrap();
        let g = group_set_cover(&sys, 3, Ratio::new(1, 3)).unwrap();
        assert_eq!((g.q, g.target, g.system.universe_size()), (3, 2, 6));
        let g = group_set_cover(&sys, 2, Ratio::new(1, 3)).unwrap();
        assert_eq!((g.target, g.system.universe_size()), (1, 4));
        let g = group_set_cover(&SetSystem::from_lists(2, &[&[0, 1]]).unwrap(), 2, Ratio::new(1, 3)).unwrap();
        assert!(yes(&g.system, g.target));
        assert!(group_set_cover(&sys, 4, Ratio::new(1, 2)).is_err());
        assert!(group_set_cover(&sys, 1, Ratio::new(0, 1)).is_err());
    }

    #[test]
    fn decision_is_preserved() {
        for seed in 0..100u64 {
            let n = 2 + seed as usize % 9;
            let sys = random_set_system(n, (1 + seed as usize % 10).min((1 << n) - 1), 3, seed).unwrap();
            for (a, b) in [(1, 2), (1, 3), (2, 3), (1, 1)] {
                let alpha = Ratio::new(a, b);
                for t in 0..=n {
                    let g = group_set_cover(&sys, t, alpha).unwrap();
                    assert!(Ratio::from_integer(g.target as u64) <= alpha * Ratio::from_integer(g.system.universe_size() as u64));
                    assert!(g.system.max_set_size() <= g.q * sys.max_set_size().max(1));
                    assert_eq!(yes(&g.system, g.target), yes(&sys, t), "seed {seed} alpha {alpha} t {t}");
                }
            }
        }
    }
}
