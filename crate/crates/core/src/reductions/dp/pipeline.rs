use std::collections::{BTreeMap, HashMap};

use num_rational::Ratio;

use crate::bits::ElemSet;
use crate::error::{Error, Result};
use crate::instances::SetSystem;
use crate::parity_math::{binom_parity_u64, nested_binom_parity};

use super::grouping::{add_singletons, q_unions, GroupedCoverInstance};

/// Parity of `|Φ⁻¹(A₀)|` for a cover `A₀` of size `j`: the number of ways to
/// pick `t_star` distinct `q`-subsets of a `j`-set whose union is all of it,
/// modulo two.
pub fn dj_coefficient(j: usize, q: usize, t_star: usize) -> Result<bool> {
    if q == 0 {
        return Err(Error::param("group size must be positive"));
    }
    let mut acc = false;
    for i in 0..=j {
        if binom_parity_u64(j as u64, i as u64)? {
            acc ^= nested_binom_parity(i as u64, q as u64, t_star as u64)?;
        }
    }
    Ok(acc)
}

/// Smallest power of two `q` with `m/q + 2 ≤ α·n`.
pub fn pipeline_q(m: usize, n: usize, alpha: Ratio<u64>) -> Result<usize> {
    let budget = alpha * Ratio::from_integer(n as u64);
    if budget < Ratio::from_integer(3) {
        return Err(Error::param(format!(
            "alpha * n = {budget} is below 3; solve such instances directly"
        )));
    }
    let mut q = 1usize;
    while Ratio::new(m as u64, q as u64) + 2 > budget {
        q *= 2;
    }
    Ok(q)
}

/// Parities recovered along the pipeline.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ParityLedger {
    /// `s[j]`: parity of the covers of the input using exactly `j` sets.
    pub s: BTreeMap<usize, bool>,
    /// `d[j]` for the most recent grouping round.
    pub d: BTreeMap<usize, bool>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PipelineReport {
    /// Parity of the total number of set covers.
    pub parity: bool,
    pub q: usize,
    pub z: usize,
    pub ledger: ParityLedger,
    /// Number of callback invocations.
    pub rounds: usize,
    /// Largest number of identical unions seen in any round.
    pub max_multiplicity: usize,
    /// Largest `(target, universe)` handed to the callback, by target.
    pub max_target: usize,
}

/// Parity of the total number of set covers of `system`, computed with one
/// call per cover size to `size_parity`, which must return the parity of the
/// covers of its instance that use exactly `target` sets.
///
/// Every instance passed to the callback has `target ≤ α·n` for the input's
/// universe size `n`. `density`, when given, is enforced as `m ≤ c·n`.
pub fn parity_cover_pipeline<F>(
    system: &SetSystem,
    alpha: Ratio<u64>,
    density: Option<Ratio<u64>>,
    mut size_parity: F,
) -> Result<PipelineReport>
where
    F: FnMut(&GroupedCoverInstance) -> Result<bool>,
{
    let n = system.universe_size();
    let m = system.num_sets();
    if system.is_multiset() {
        return Err(Error::param("the pipeline needs a family without duplicates"));
    }
    if let Some(c) = density {
        if Ratio::from_integer(m as u64) > c * Ratio::from_integer(n as u64) {
            return Err(Error::param(format!("{m} sets exceed density {c} over {n} elements")));
        }
    }
    let q = pipeline_q(m, n, alpha)?;
    let k = system.max_set_size().max(1);
    let z = 1 + k * q * q;
    let mult_cap = 1usize.checked_shl((k * q * q) as u32).unwrap_or(usize::MAX);
    let budget = alpha * Ratio::from_integer(n as u64);

    let mut ledger = ParityLedger::default();
    // no covers of size 0 since the universe is nonempty
    ledger.s.insert(0, false);
    let mut report = PipelineReport {
        parity: false,
        q,
        z,
        ledger: ParityLedger::default(),
        rounds: 0,
        max_multiplicity: 0,
        max_target: 0,
    };

    for j in 1..=m {
        let pad = q - j % q;
        let j0 = j + pad;
        let t_star = j0 / q;
        let padded = add_singletons(system, pad)?;
        let (instance, multiplicity) = tagged_instance(&padded, q, z, t_star + 1)?;
        if multiplicity > mult_cap {
            return Err(Error::Invariant(format!(
                "a union occurs {multiplicity} times, above 2^{}",
                k * q * q
            )));
        }
        if Ratio::from_integer(instance.target as u64) > budget {
            return Err(Error::Invariant(format!(
                "callback target {} exceeds alpha * n",
                instance.target
            )));
        }
        report.max_multiplicity = report.max_multiplicity.max(multiplicity);
        report.max_target = report.max_target.max(instance.target);
        report.rounds += 1;

        let mut acc = size_parity(&instance)?;
        ledger.d.clear();
        for jp in 1..j0 {
            let d = dj_coefficient(jp, q, t_star)?;
            ledger.d.insert(jp, d);
            // covers of the padded family of size jp contain all `pad` new
            // singletons plus a cover of the input of size jp - pad
            let s0 = jp
                .checked_sub(pad)
                .is_some_and(|orig| ledger.s[&orig]);
            acc ^= s0 && d;
        }
        let d0 = dj_coefficient(j0, q, t_star)?;
        ledger.d.insert(j0, d0);
        if !d0 {
            return Err(Error::Invariant(format!("d_{j0} is even for q = {q}")));
        }
        ledger.s.insert(j, acc);
    }
    report.parity = ledger.s.values().fold(false, |a, &b| a ^ b);
    report.ledger = ledger;
    Ok(report)
}

/// q-fold unions of `padded`, with duplicate copies told apart by distinct
/// subsets of the tag elements `e_1..e_{z-1}`, plus the set `{e_1..e_z}`.
/// Returns the instance and the largest duplicate count.
fn tagged_instance(
    padded: &SetSystem,
    q: usize,
    z: usize,
    target: usize,
) -> Result<(GroupedCoverInstance, usize)> {
    let base = padded.universe_size();
    let mut copies: HashMap<ElemSet, usize> = HashMap::new();
    let mut paired = Vec::new();
    for (mut u, idx) in q_unions(padded, q)? {
        let slot = copies.entry(u.clone()).or_insert(0);
        let tag = *slot;
        *slot += 1;
        // the tag-th copy receives the tag elements at the one bits of `tag`
        if tag != 0 && (usize::BITS - tag.leading_zeros()) as usize > z - 1 {
            return Err(Error::Invariant(format!("{} copies of one union", tag + 1)));
        }
        let mut bits = tag;
        while bits != 0 {
            u.insert(base + bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
        paired.push((u, idx));
    }
    paired.push((ElemSet::from_iter(base..base + z), Vec::new()));
    paired.sort();
    let multiplicity = copies.values().copied().max().unwrap_or(0);
    let (sets, provenance): (Vec<_>, Vec<_>) = paired.into_iter().unzip();
    let system = SetSystem::new(base + z, sets)?;
    Ok((
        GroupedCoverInstance {
            system,
            target,
            provenance,
            source: padded.clone(),
            q,
            z,
        },
        multiplicity,
    ))
}
