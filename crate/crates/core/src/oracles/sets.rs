use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::bits::ElemSet;
use crate::error::Result;
use crate::instances::{SetSystem, SizeIndexedCounts};

use super::Caps;

fn word_masks(system: &SetSystem, caps: &Caps) -> Result<Vec<u64>> {
    caps.check("universe", system.universe_size())?;
    Ok(system.masks().expect("cap keeps the universe below 64"))
}

/// Fixed-width word vectors so subfamily enumeration works for any universe.
fn padded_words(system: &SetSystem) -> (usize, Vec<Vec<u64>>, Vec<u64>) {
    let width = system.universe_size().div_ceil(64).max(1);
    let pad = |s: &ElemSet| {
        let mut w = s.words().to_vec();
        w.resize(width, 0);
        w
    };
    let sets = system.sets().iter().map(pad).collect();
    let full = pad(&system.universe());
    (width, sets, full)
}

/// Hitting sets, i.e. `H` meeting every set, counted by `|H|`.
pub fn count_hitting_sets_by_size(system: &SetSystem, caps: &Caps) -> Result<SizeIndexedCounts> {
    let sets = word_masks(system, caps)?;
    let n = system.universe_size();
    let mut dense = vec![0u64; n + 1];
    for h in 0..1u64 << n {
        if sets.iter().all(|&s| s & h != 0) {
            dense[h.count_ones() as usize] += 1;
        }
    }
    Ok(SizeIndexedCounts::from_dense(&dense))
}

/// Subfamilies whose union is the universe, counted by the number of sets.
/// Duplicates in a multiset are distinct choices.
pub fn count_set_covers_by_size(system: &SetSystem, caps: &Caps) -> Result<SizeIndexedCounts> {
    let m = system.num_sets();
    caps.check("set family", m)?;
    let (width, sets, full) = padded_words(system);
    // suffix[i] = union of sets i..m
    let mut suffix = vec![vec![0u64; width]; m + 1];
    for i in (0..m).rev() {
        suffix[i] = or(&suffix[i + 1], &sets[i]);
    }
    let mut dense = vec![0u64; m + 1];
    let mut stack = vec![vec![0u64; width]; m + 1];
    cover_rec(0, 0, &sets, &suffix, &full, &mut stack, &mut dense);
    Ok(SizeIndexedCounts::from_dense(&dense))
}

fn or(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x | y).collect()
}

fn cover_rec(
    i: usize,
    depth: usize,
    sets: &[Vec<u64>],
    suffix: &[Vec<u64>],
    full: &[u64],
    stack: &mut [Vec<u64>],
    dense: &mut [u64],
) {
    let (cur, rest) = stack.split_at_mut(depth + 1);
    let cur = &cur[depth];
    if cur.iter().zip(&suffix[i]).zip(full).any(|((c, s), f)| (c | s) != *f) {
        return;
    }
    if i == sets.len() {
        dense[depth] += 1;
        return;
    }
    let next = &mut rest[0];
    for (w, (c, s)) in next.iter_mut().zip(cur.iter().zip(&sets[i])) {
        *w = c | s;
    }
    cover_rec(i + 1, depth + 1, sets, suffix, full, stack, dense);
    cover_rec(i + 1, depth, sets, suffix, full, stack, dense);
}

/// Minimum number of sets covering the universe, by dynamic programming
/// over all subsets of the universe; `None` if some element is uncoverable.
pub fn min_set_cover_dp(system: &SetSystem, caps: &Caps) -> Result<Option<usize>> {
    let sets = word_masks(system, caps)?;
    let n = system.universe_size();
    Ok(subset_dp(n, &sets, false))
}

/// Minimum number of pairwise disjoint sets whose union is the universe,
/// by the same subset dynamic program restricted to sets inside the target.
pub fn min_set_partition_dp(system: &SetSystem, caps: &Caps) -> Result<Option<usize>> {
    let sets = word_masks(system, caps)?;
    let n = system.universe_size();
    Ok(subset_dp(n, &sets, true))
}

/// `best[X]` = fewest sets covering (or exactly partitioning) `X`. Branching
/// on the lowest element of `X` suffices since some chosen set contains it.
fn subset_dp(n: usize, sets: &[u64], exact: bool) -> Option<usize> {
    const INF: u32 = u32::MAX;
    let by_low: Vec<Vec<u64>> = (0..n)
        .map(|e| sets.iter().copied().filter(|s| s >> e & 1 == 1).collect())
        .collect();
    let mut best = vec![INF; 1 << n];
    best[0] = 0;
    for x in 1u64..1 << n {
        let low = x.trailing_zeros() as usize;
        let mut b = INF;
        for &s in &by_low[low] {
            if exact && s & !x != 0 {
                continue;
            }
            let prev = best[(x & !s) as usize];
            if prev < b {
                b = prev;
            }
        }
        best[x as usize] = b.saturating_add(1);
    }
    let r = best[(1usize << n) - 1];
    (r != INF).then_some(r as usize)
}

/// Number of `X ⊆ U` such that every set meets both `X` and `U \ X`.
pub fn count_set_splittings(system: &SetSystem, caps: &Caps) -> Result<BigUint> {
    let sets = word_masks(system, caps)?;
    let n = system.universe_size();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut count = 0u64;
    for x in 0..1u64 << n {
        let y = full & !x;
        if sets.iter().all(|&s| s & x != 0 && s & y != 0) {
            count += 1;
        }
    }
    Ok(count.into())
}

/// Pairwise disjoint subfamilies whose union is the universe, by size.
pub fn count_set_partitionings_by_size(
    system: &SetSystem,
    caps: &Caps,
) -> Result<SizeIndexedCounts> {
    let m = system.num_sets();
    caps.check("set family", m)?;
    let (width, sets, full) = padded_words(system);
    let mut dense = vec![0u64; m + 1];
    let mut cur = vec![0u64; width];
    partition_rec(0, 0, &sets, &full, &mut cur, &mut dense);
    Ok(SizeIndexedCounts::from_dense(&dense))
}

fn partition_rec(
    i: usize,
    depth: usize,
    sets: &[Vec<u64>],
    full: &[u64],
    cur: &mut Vec<u64>,
    dense: &mut [u64],
) {
    if i == sets.len() {
        if cur == full {
            dense[depth] += 1;
        }
        return;
    }
    partition_rec(i + 1, depth, sets, full, cur, dense);
    if cur.iter().zip(&sets[i]).all(|(c, s)| c & s == 0) {
        for (c, s) in cur.iter_mut().zip(&sets[i]) {
            *c |= s;
        }
        partition_rec(i + 1, depth + 1, sets, full, cur, dense);
        for (c, s) in cur.iter_mut().zip(&sets[i]) {
            *c &= !s;
        }
    }
}

/// Number of covers using exactly `t` sets, for large families over wide
/// universes.
///
/// Elements whose containing sets form a superset of another element's are
/// implied and dropped; on the remaining `r` elements (at most the cap) the
/// count is `Σ_{Y ⊆ R} (-1)^{r-|Y|} C(a(Y), t)` with `a(Y)` the number of
/// sets whose trace lies inside `Y`.
pub fn count_covers_exact_size(system: &SetSystem, t: usize, caps: &Caps) -> Result<BigUint> {
    let n = system.universe_size();
    let m = system.num_sets();
    let mut columns: Vec<(usize, ElemSet)> = (0..n)
        .map(|e| {
            let col = system
                .sets()
                .iter()
                .enumerate()
                .filter(|(_, s)| s.contains(e))
                .map(|(i, _)| i)
                .collect();
            (e, col)
        })
        .collect();
    if columns.iter().any(|(_, c)| c.is_empty()) {
        return Ok(BigUint::zero());
    }
    columns.sort_by_key(|(e, c)| (c.len(), *e));
    let mut kept: Vec<(usize, ElemSet)> = Vec::new();
    for (e, col) in columns {
        if !kept.iter().any(|(_, k)| k.is_subset(&col)) {
            kept.push((e, col));
        }
    }
    let r = kept.len();
    caps.check("essential universe", r)?;
    let mut a = vec![0u64; 1 << r];
    for s in system.sets() {
        let trace = kept
            .iter()
            .enumerate()
            .filter(|(_, (e, _))| s.contains(*e))
            .fold(0usize, |acc, (i, _)| acc | 1 << i);
        a[trace] += 1;
    }
    for bit in 0..r {
        for y in 0..1usize << r {
            if y >> bit & 1 == 1 {
                a[y] += a[y ^ 1 << bit];
            }
        }
    }
    let choose: Vec<BigUint> = (0..=m as u64).map(|x| binom_small_k(x, t as u64)).collect();
    let mut total = BigInt::zero();
    for (y, &ay) in a.iter().enumerate() {
        let term = BigInt::from(choose[ay as usize].clone());
        if (r - y.count_ones() as usize).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total.to_biguint().expect("inclusion-exclusion count is nonnegative"))
}

fn binom_small_k(a: u64, k: u64) -> BigUint {
    if k > a {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::random::random_set_system;
    use proptest::prelude::*;

    fn sys(n: usize, sets: &[&[usize]]) -> SetSystem {
        SetSystem::from_lists(n, sets).unwrap()
    }

    fn dense(c: &SizeIndexedCounts, upto: usize) -> Vec<u64> {
        (0..=upto).map(|s| u64::try_from(c.get(s)).unwrap()).collect()
    }

    #[test]
    fn hitting_sets() {
        let caps = Caps::default();
        let c = count_hitting_sets_by_size(&sys(2, &[]), &caps).unwrap();
        assert_eq!(dense(&c, 2), vec![1, 2, 1]);
        let c = count_hitting_sets_by_size(&sys(2, &[&[0], &[1]]), &caps).unwrap();
        assert_eq!(dense(&c, 2), vec![0, 0, 1]);
        let c = count_hitting_sets_by_size(&sys(2, &[&[]]), &caps).unwrap();
        assert!(c.is_zero());
    }

    // Independent inclusion–exclusion over the sets: #subsets missing no set
    // = Σ_{G ⊆ F} (-1)^{|G|} 2^{n - |∪G|}.
    fn hitting_total_by_ie(system: &SetSystem) -> i64 {
        let masks = system.masks().unwrap();
        let n = system.universe_size() as u32;
        let mut total = 0i64;
        for g in 0u32..1 << masks.len() {
            let u = (0..masks.len())
                .filter(|i| g >> i & 1 == 1)
                .fold(0u64, |acc, i| acc | masks[i]);
            let term = 1i64 << (n - u.count_ones());
            total += if g.count_ones() % 2 == 0 { term } else { -term };
        }
        total
    }

    #[test]
    fn hitting_total_matches_inclusion_exclusion() {
        for seed in 0..20 {
            let s = random_set_system(8, 10, 3, seed).unwrap();
            let c = count_hitting_sets_by_size(&s, &Caps::default()).unwrap();
            assert_eq!(i64::try_from(c.total()).unwrap(), hitting_total_by_ie(&s));
        }
    }

    #[test]
    fn set_covers() {
        let caps = Caps::default();
        let c = count_set_covers_by_size(&sys(2, &[&[0], &[1], &[0, 1]]), &caps).unwrap();
        assert_eq!(dense(&c, 3), vec![0, 1, 3, 1]);
        let c = count_set_covers_by_size(&sys(0, &[]), &caps).unwrap();
        assert_eq!(dense(&c, 0), vec![1]);
        assert!(count_set_covers_by_size(&sys(2, &[&[0]]), &caps).unwrap().is_zero());
        let multi = SetSystem::new_multiset(
            1,
            vec![ElemSet::from_u64(1), ElemSet::from_u64(1)],
        )
        .unwrap();
        let c = count_set_covers_by_size(&multi, &caps).unwrap();
        assert_eq!(dense(&c, 2), vec![0, 2, 1]);
    }

    #[test]
    fn wide_universe_covers() {
        let a: ElemSet = [0, 100].into_iter().collect();
        let b: ElemSet = (1..100).collect();
        let s = SetSystem::new(101, vec![a.clone(), b, a.union(&ElemSet::from_u64(2))]).unwrap();
        let c = count_set_covers_by_size(&s, &Caps::default()).unwrap();
        assert_eq!(dense(&c, 3), vec![0, 0, 2, 1]);
        for t in 0..=3 {
            assert_eq!(count_covers_exact_size(&s, t, &Caps::default()).unwrap(), c.get(t));
        }
    }

    #[test]
    fn cover_dp() {
        let caps = Caps::default();
        assert_eq!(min_set_cover_dp(&sys(2, &[&[0], &[1], &[0, 1]]), &caps).unwrap(), Some(1));
        assert_eq!(min_set_cover_dp(&sys(2, &[&[0]]), &caps).unwrap(), None);
        let singles: Vec<Vec<usize>> = (0..7).map(|i| vec![i]).collect();
        let refs: Vec<&[usize]> = singles.iter().map(Vec::as_slice).collect();
        assert_eq!(min_set_cover_dp(&sys(7, &refs), &caps).unwrap(), Some(7));
        assert_eq!(min_set_cover_dp(&sys(0, &[]), &caps).unwrap(), Some(0));
    }

    #[test]
    fn splittings() {
        let caps = Caps::default();
        assert_eq!(count_set_splittings(&sys(2, &[&[0, 1]]), &caps).unwrap(), 2u32.into());
        assert_eq!(count_set_splittings(&sys(1, &[&[0]]), &caps).unwrap(), 0u32.into());
        assert_eq!(count_set_splittings(&sys(2, &[]), &caps).unwrap(), 4u32.into());
    }

    #[test]
    fn partitionings() {
        let caps = Caps::default();
        let c = count_set_partitionings_by_size(&sys(2, &[&[0], &[1], &[0, 1]]), &caps).unwrap();
        assert_eq!(dense(&c, 3), vec![0, 1, 1, 0]);
        let c = count_set_partitionings_by_size(&sys(2, &[&[0, 1]]), &caps).unwrap();
        assert_eq!(dense(&c, 1), vec![0, 1]);
        let c = count_set_partitionings_by_size(&sys(2, &[&[0], &[0, 1]]), &caps).unwrap();
        assert_eq!(dense(&c, 2), vec![0, 1, 0]);
        assert_eq!(min_set_partition_dp(&sys(2, &[&[0], &[0, 1]]), &caps).unwrap(), Some(1));
        assert_eq!(min_set_partition_dp(&sys(3, &[&[0, 1], &[1, 2]]), &caps).unwrap(), None);
    }

    #[test]
    fn caps() {
        let big = SetSystem::new(30, vec![]).unwrap();
        assert!(count_hitting_sets_by_size(&big, &Caps::default()).is_err());
        assert!(min_set_cover_dp(&big, &Caps::default()).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn dp_minimum_matches_brute_force(n in 1usize..8, m in 1usize..10, k in 1usize..4, seed: u64) {
            prop_assume!(k <= n);
            let Ok(s) = random_set_system(n, m, k, seed) else { return Ok(()); };
            let caps = Caps::default();
            let covers = count_set_covers_by_size(&s, &caps).unwrap();
            prop_assert_eq!(min_set_cover_dp(&s, &caps).unwrap(), covers.min_size());
            let parts = count_set_partitionings_by_size(&s, &caps).unwrap();
            prop_assert_eq!(min_set_partition_dp(&s, &caps).unwrap(), parts.min_size());
            for t in 0..=m {
                prop_assert_eq!(count_covers_exact_size(&s, t, &caps).unwrap(), covers.get(t));
            }
        }

        #[test]
        fn adding_a_set_never_adds_hitting_sets(n in 1usize..8, m in 1usize..8, seed: u64) {
            let k = n.min(3);
            let Ok(s) = random_set_system(n, m, k, seed) else { return Ok(()); };
            let caps = Caps::default();
            let full = count_hitting_sets_by_size(&s, &caps).unwrap();
            let fewer = SetSystem::new(n, s.sets()[1..].to_vec()).unwrap();
            let less = count_hitting_sets_by_size(&fewer, &caps).unwrap();
            for size in 0..=n {
                prop_assert!(full.get(size) <= less.get(size));
            }
        }
    }
}
