//! Binary-digit arithmetic for binomial coefficients modulo two.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest `a` accepted by [`big_binom`].
pub const BIG_BINOM_MAX: u64 = 10_000;

/// The positions of the one bits of a nonnegative integer.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct OnesSet {
    positions: BTreeSet<u64>,
}

impl OnesSet {
    pub fn of(x: &BigUint) -> Self {
        OnesSet {
            positions: (0..x.bits()).filter(|&i| x.bit(i)).collect(),
        }
    }

    pub fn positions(&self) -> impl Iterator<Item = u64> + '_ {
        self.positions.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn is_subset(&self, other: &OnesSet) -> bool {
        self.positions.is_subset(&other.positions)
    }

    /// Rebuild the integer.
    pub fn value(&self) -> BigUint {
        let mut x = BigUint::zero();
        for &p in &self.positions {
            x.set_bit(p, true);
        }
        x
    }
}

/// `C(a, b) mod 2`: odd exactly when the ones of `b` are among the ones of `a`.
pub fn binom_parity(a: &BigUint, b: &BigUint) -> Result<bool> {
    if b > a {
        return Err(Error::param(format!("binomial C({a}, {b}) has b > a")));
    }
    Ok(&(a & b) == b)
}

pub fn binom_parity_u64(a: u64, b: u64) -> Result<bool> {
    if b > a {
        return Err(Error::param(format!("binomial C({a}, {b}) has b > a")));
    }
    Ok(a & b == b)
}

/// Exact `C(a, b)` for `0 <= b <= a <= 10^4`; zero when `b > a`.
pub fn big_binom(a: u64, b: u64) -> Result<BigUint> {
    if a > BIG_BINOM_MAX {
        return Err(Error::Capacity {
            what: "binomial argument",
            size: a as usize,
            cap: BIG_BINOM_MAX as usize,
        });
    }
    if b > a {
        return Ok(BigUint::zero());
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    Ok(acc)
}

/// Parity of `C(C(i, q), t_star)`, with the inner binomial computed exactly.
pub fn nested_binom_parity(i: u64, q: u64, t_star: u64) -> Result<bool> {
    let inner = big_binom(i, q)?;
    let t = BigUint::from(t_star);
    if t > inner {
        return Ok(false);
    }
    binom_parity(&inner, &t)
}

/// `C(a, b)` as a machine integer if it fits; used by small-instance code.
pub(crate) fn binom_u128(a: u64, b: u64) -> Option<u128> {
    big_binom(a, b).ok()?.to_u128()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn binom_parity_examples() {
        assert!(binom_parity(&big(5), &big(1)).unwrap());
        assert!(!binom_parity(&big(4), &big(2)).unwrap());
        for a in 0..50 {
            assert!(binom_parity(&big(a), &big(0)).unwrap());
        }
        assert!(binom_parity(&big(1), &big(2)).is_err());
        assert!(binom_parity_u64(1, 2).is_err());
    }

    #[test]
    fn exact_binomials() {
        assert_eq!(big_binom(7, 4).unwrap(), big(35));
        assert_eq!(big_binom(11, 6).unwrap(), big(462));
        for n in 0..30 {
            assert_eq!(big_binom(n, n).unwrap(), big(1));
        }
        assert_eq!(big_binom(3, 5).unwrap(), big(0));
        assert!(matches!(big_binom(10_001, 2), Err(Error::Capacity { .. })));
        // C(10000, 5000) has 3009 decimal digits.
        assert_eq!(big_binom(10_000, 5_000).unwrap().to_string().len(), 3009);
        assert_eq!(binom_u128(60, 30), Some(118264581564861424));
    }

    #[test]
    fn nested() {
        assert!(nested_binom_parity(3, 3, 1).unwrap());
        // C(C(4,2), 2) = C(6, 2) = 15
        assert!(nested_binom_parity(4, 2, 2).unwrap());
        // C(3, 2) = 3 < 4
        assert!(!nested_binom_parity(3, 2, 4).unwrap());
    }

    #[test]
    fn ones_set() {
        let x = big(0b1011_0000_0001);
        let ones = OnesSet::of(&x);
        assert_eq!(ones.positions().collect::<Vec<_>>(), vec![0, 8, 9, 11]);
        assert_eq!(ones.value(), x);
        assert!(OnesSet::of(&big(1)).is_subset(&OnesSet::of(&big(5))));
        assert!(OnesSet::of(&big(0)).is_empty());
    }

    // Pascal's triangle mod 2, built by additions only.
    fn pascal_mod2(rows: usize) -> Vec<Vec<bool>> {
        let mut t: Vec<Vec<bool>> = vec![vec![true]];
        for a in 1..=rows {
            let prev = &t[a - 1];
            let row = (0..=a)
                .map(|b| {
                    let l = if b > 0 { prev[b - 1] } else { false };
                    let r = prev.get(b).copied().unwrap_or(false);
                    l ^ r
                })
                .collect();
            t.push(row);
        }
        t
    }

    #[test]
    fn matches_pascal_and_sierpinski_row_weight() {
        let t = pascal_mod2(64);
        for a in 0..=64u64 {
            let mut weight = 0u64;
            for b in 0..=a {
                let p = binom_parity_u64(a, b).unwrap();
                assert_eq!(p, t[a as usize][b as usize], "C({a},{b})");
                assert_eq!(p, binom_parity_u64(a, a - b).unwrap());
                assert_eq!(p, OnesSet::of(&big(b)).is_subset(&OnesSet::of(&big(a))));
                weight += p as u64;
            }
            assert_eq!(weight, 1 << a.count_ones());
        }
    }
}
