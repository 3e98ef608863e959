//! Seeded verification suites: each one checks a reduction contract against
//! the oracles over a random corpus and reports one record per case.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instances::random::{random_instance, random_cnf, random_set_system, Family, RandomParams};
use crate::instances::{parse_instance, serialize_instance, InstanceFormat, SetSystem};
use crate::oracles::*;
use crate::parity_math::{big_binom, binom_parity_u64};
use crate::reductions::branch::*;
use crate::reductions::dp::*;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    SatToHit,
    ParitySatToHit,
    Flip,
    Lucas,
    Splitting,
    SetCoverGrouping,
    ParityPipeline,
    OddPartition,
    Steiner,
    Cvc,
    Partition,
    Vsp,
    RoundTrip,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::SatToHit,
        Suite::ParitySatToHit,
        Suite::Flip,
        Suite::Lucas,
        Suite::Splitting,
        Suite::SetCoverGrouping,
        Suite::ParityPipeline,
        Suite::OddPartition,
        Suite::Steiner,
        Suite::Cvc,
        Suite::Partition,
        Suite::Vsp,
        Suite::RoundTrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SatToHit => "sattohit",
            Suite::ParitySatToHit => "psattophit",
            Suite::Flip => "flip",
            Suite::Lucas => "lucas",
            Suite::Splitting => "splitting",
            Suite::SetCoverGrouping => "setcovera",
            Suite::ParityPipeline => "psetcover-pipeline",
            Suite::OddPartition => "oddpartition",
            Suite::Steiner => "steiner",
            Suite::Cvc => "cvc",
            Suite::Partition => "partition",
            Suite::Vsp => "vsp",
            Suite::RoundTrip => "roundtrip",
        }
    }

    /// Universe or variable counts drawn from when no sizes are given.
    pub fn default_sizes(self) -> Vec<usize> {
        match self {
            Suite::SatToHit | Suite::ParitySatToHit => vec![3, 6],
            Suite::Flip | Suite::SetCoverGrouping => (1..=10).collect(),
            Suite::Lucas => vec![64],
            Suite::Splitting => (1..=8).collect(),
            Suite::ParityPipeline => vec![6, 7, 8],
            Suite::OddPartition => vec![6],
            Suite::Steiner | Suite::Cvc => (1..=5).collect(),
            Suite::Partition => (1..=10).collect(),
            Suite::Vsp => (1..=8).collect(),
            Suite::RoundTrip => (1..=8).collect(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::param(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyConfig {
    /// Number of seeded cases; suites with a fixed exhaustive range ignore it.
    pub seeds: u64,
    pub base_seed: u64,
    pub sizes: Option<Vec<usize>>,
    pub caps: Caps,
}

impl VerifyConfig {
    pub fn new(seeds: u64) -> Self {
        VerifyConfig {
            seeds,
            base_seed: 0,
            sizes: None,
            caps: Caps::default(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CaseRecord {
    pub case: usize,
    pub seed: u64,
    pub params: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub records: Vec<CaseRecord>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.records.iter().filter(|r| !r.pass)
    }
}

/// Outcome of one case: parameters and either success or a mismatch.
struct Outcome {
    params: String,
    mismatch: Option<String>,
}

fn check(params: String, ok: bool, what: impl FnOnce() -> String) -> Outcome {
    Outcome {
        params,
        mismatch: (!ok).then(what),
    }
}

fn mismatch<T: fmt::Debug>(what: &str, left: T, right: T) -> String {
    format!("{what}: {left:?} vs {right:?}")
}

/// Run a suite. Capacity errors abort the run; other reduction errors are
/// recorded as failed cases.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<SuiteReport> {
    let sizes = config.sizes.clone().unwrap_or_else(|| suite.default_sizes());
    if sizes.is_empty() {
        return Err(Error::param("no sizes given"));
    }
    let cases: Vec<u64> = match suite {
        Suite::Lucas => (0..=sizes.iter().copied().max().unwrap_or(0) as u64).collect(),
        Suite::OddPartition => (0..=sizes[0] as u64).collect(),
        _ => (0..config.seeds).map(|i| config.base_seed + i).collect(),
    };
    let mut records = Vec::with_capacity(cases.len());
    for (case, &seed) in cases.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = sizes[rng.random_range(0..sizes.len())];
        let outcome = match run_case(suite, seed, n, &mut rng, &config.caps) {
            Ok(o) => o,
            Err(e @ Error::Capacity { .. }) => return Err(e),
            Err(e) => Outcome {
                params: format!("n={n}"),
                mismatch: Some(format!("error: {e}")),
            },
        };
        records.push(CaseRecord {
            case,
            seed,
            params: outcome.params,
            pass: outcome.mismatch.is_none(),
            detail: outcome.mismatch.unwrap_or_default(),
        });
    }
    Ok(SuiteReport { suite, records })
}

/// Number of sets to draw so that `m` distinct sets of size ≤ 3 exist.
fn fit_m(n: usize, m: usize) -> usize {
    let available = n + n * n.saturating_sub(1) / 2 + n * n.saturating_sub(1) * n.saturating_sub(2) / 6;
    m.min(available).max(1)
}

/// A random system in which every element lies in some set, when `m` sets
/// of size at most 3 can manage that; otherwise any random system.
fn coverable_system(n: usize, m: usize, seed: u64) -> Result<SetSystem> {
    let mut sys = random_set_system(n, m, 3, seed)?;
    for attempt in 1..64u64 {
        if sys.uncovered_elements().is_empty() || 3 * m < n {
            break;
        }
        sys = random_set_system(n, m, 3, seed ^ attempt << 32)?;
    }
    Ok(sys)
}

fn run_case(suite: Suite, seed: u64, n: usize, rng: &mut ChaCha8Rng, caps: &Caps) -> Result<Outcome> {
    Ok(match suite {
        Suite::SatToHit => {
            let m = rng.random_range(1..=6);
            let f = random_cnf(n, m, 3, seed)?;
            let (f, _) = pad_to_multiple(&f, 3)?;
            let inst = cnf_to_hitting_set(&f, 3)?;
            let sat = count_satisfying(&f, caps)?;
            let hit = count_hitting_sets_by_size(inst.system(), caps)?.get(inst.target());
            check(format!("n={n} m={m} p=3"), sat == hit, || mismatch("#SAT vs hitting sets", &sat, &hit))
        }
        Suite::ParitySatToHit => {
            let m = rng.random_range(1..=6);
            let f = random_cnf(n, m, 3, seed)?;
            let (f, _) = pad_to_multiple(&f, 3)?;
            let sys = cnf_to_parity_hitting_set(&f, 3)?;
            let sat = count_satisfying(&f, caps)?.bit(0);
            let hit = count_hitting_sets_by_size(&sys, caps)?.parity();
            check(format!("n={n} m={m} p=3"), sat == hit, || mismatch("parities", sat, hit))
        }
        Suite::Flip => {
            let m = fit_m(n, rng.random_range(1..=10));
            let sys = random_set_system(n, m, 3, seed)?;
            let f = flip_parities(&sys, caps)?;
            check(format!("n={n} m={m}"), f.agree(), || format!("{f:?}"))
        }
        Suite::Lucas => {
            let a = seed;
            let bad = (0..=a).find(|&b| {
                let exact = big_binom(a, b).map(|c| c.bit(0));
                binom_parity_u64(a, b).ok() != exact.ok()
            });
            check(format!("a={a}"), bad.is_none(), || format!("b={bad:?}"))
        }
        Suite::Splitting => splitting_case(seed, n, rng, caps)?,
        Suite::SetCoverGrouping => {
            let m = fit_m(n, rng.random_range(1..=10));
            let sys = coverable_system(n, m, seed)?;
            let t = rng.random_range(0..=n);
            let alpha = Ratio::new(1, 2);
            let g = group_set_cover(&sys, t, alpha)?;
            let before = min_set_cover_dp(&sys, caps)?.is_some_and(|c| c <= t);
            let after = min_set_cover_dp(&g.system, caps)?.is_some_and(|c| c <= g.target);
            let bounded = Ratio::from_integer(g.target as u64)
                <= alpha * Ratio::from_integer(g.system.universe_size() as u64);
            check(format!("n={n} m={m} t={t}"), before == after && bounded, || {
                format!("decision {before} vs {after}, t'={} over {}", g.target, g.system.universe_size())
            })
        }
        Suite::ParityPipeline => {
            let m = rng.random_range(n.div_ceil(3)..=n);
            let sys = coverable_system(n, m, seed)?;
            let alpha = Ratio::new(1, 2);
            let budget = alpha * Ratio::from_integer(n as u64);
            let mut within = true;
            let r = parity_cover_pipeline(&sys, alpha, None, |inst| {
                within &= Ratio::from_integer(inst.target as u64) <= budget;
                Ok(count_covers_exact_size(&inst.system, inst.target, caps)?.bit(0))
            })?;
            let expected = count_set_covers_by_size(&sys, caps)?.parity();
            let k = sys.max_set_size().max(1);
            let mult_ok = (k * r.q * r.q >= 64) || r.max_multiplicity <= 1 << (k * r.q * r.q);
            check(format!("n={n} m={m} q={} odd={expected}", r.q), r.parity == expected && within && mult_ok, || {
                format!("parity {} vs {expected}, targets bounded {within}, multiplicity {}", r.parity, r.max_multiplicity)
            })
        }
        Suite::OddPartition => {
            let t = seed as usize;
            let mut bad = Vec::new();
            for q in [1, 2, 4] {
                if !dj_coefficient(q * t, q, t)? {
                    bad.push(format!("d({}, {q}, {t}) = 0", q * t));
                }
            }
            for q in [1, 2] {
                for j in 0..=6 {
                    let brute = fiber_count_brute(j, q, t) % 2 == 1;
                    if dj_coefficient(j, q, t)? != brute {
                        bad.push(format!("d({j}, {q}, {t}) disagrees with enumeration"));
                    }
                }
            }
            check(format!("t*={t}"), bad.is_empty(), || bad.join("; "))
        }
        Suite::Steiner => {
            let m = fit_m(n, rng.random_range(1..=6));
            let sys = coverable_system(n, m, seed)?;
            let covers = count_set_covers_by_size(&sys, caps)?;
            let params = format!("n={n} m={m}");
            match set_cover_to_steiner(&sys, 0) {
                Err(Error::TriviallyNo(_)) => check(params, covers.is_zero(), || "flagged NO but covers exist".into()),
                Err(e) => return Err(e),
                Ok(r) => {
                    let st = count_steiner_sets_by_size(&r.graph, caps)?;
                    let bad = (0..=m).find(|&i| covers.get(i) != st.get(i + r.offset));
                    check(params, bad.is_none() && st.total() == covers.total(), || format!("size {bad:?}: {covers} vs {st}"))
                }
            }
        }
        Suite::Cvc => {
            let m = fit_m(n, rng.random_range(1..=6));
            let sys = coverable_system(n, m, seed)?;
            let covers = count_set_covers_by_size(&sys, caps)?;
            let params = format!("n={n} m={m}");
            match set_cover_to_cvc(&sys, 0) {
                Err(Error::TriviallyNo(_)) => check(params, covers.is_zero(), || "flagged NO but covers exist".into()),
                Err(e) => return Err(e),
                Ok(r) => {
                    let c = count_cvc_by_size(&r.graph, caps)?;
                    let top = r.graph.num_vertices();
                    let mut bad = None;
                    for j in 0..=top {
                        let mut expected = BigUint::ZERO;
                        for i in 0..=m {
                            if let Some(rest) = j.checked_sub(i + n + 1) {
                                expected += covers.get(i) * big_binom((n + 1) as u64, rest as u64)?;
                            }
                        }
                        if c.get(j) != expected {
                            bad = Some(j);
                            break;
                        }
                    }
                    let bits: Vec<bool> = (0..=top).map(|j| c.parity_at(j)).collect();
                    let s = cvc_parity_recover(&bits, n, m)?;
                    let recovered = s.iter().enumerate().all(|(i, &b)| b == covers.parity_at(i));
                    check(params, bad.is_none() && recovered, || {
                        format!("convolution fails at {bad:?}, recovery ok {recovered}")
                    })
                }
            }
        }
        Suite::Partition => {
            let m = fit_m(n, rng.random_range(1..=8));
            let sys = coverable_system(n, m, seed)?;
            let t = rng.random_range(1..=n);
            let part = set_cover_to_set_partitioning(&sys)?;
            let cover_yes = min_set_cover_dp(&sys, caps)?.is_some_and(|c| c <= t);
            let part_yes = min_set_partition_dp(&part, caps)?.is_some_and(|c| c <= t);
            let exact = count_set_partitionings_by_size(&sys, caps)?;
            let mut bad = Vec::new();
            for (i, inst) in set_partitioning_to_subset_sum_all(&sys, t)?.iter().enumerate() {
                let yes = subset_sum_decide(inst, SubsetSumMode::Brute, caps)?;
                if yes != (exact.get(i + 1) > BigUint::ZERO) {
                    bad.push(i + 1);
                }
            }
            check(format!("n={n} m={m} t={t}"), cover_yes == part_yes && bad.is_empty(), || {
                format!("cover {cover_yes} vs partition {part_yes}; subset-sum mismatch at t0 {bad:?}")
            })
        }
        Suite::Vsp => {
            let m = rng.random_range(1..=10);
            let f = random_cnf(n, m, 3, seed)?;
            let c = cnf_to_vsp_circuit(&f)?;
            let (a, b) = (circuit_count_sat(&c, caps)?, count_satisfying(&f, caps)?);
            let labeled = verify_vsp_labeling(&c)?;
            let wires = c.wire_count() <= 4 * f.width() * f.num_clauses();
            check(format!("n={n} m={m}"), a == b && labeled && wires, || {
                format!("counts {a} vs {b}, labeling {labeled}, wires {}", c.wire_count())
            })
        }
        Suite::RoundTrip => {
            let mut bad = Vec::new();
            for (family, format) in [
                (Family::Cnf, InstanceFormat::DimacsCnf),
                (Family::SetSys, InstanceFormat::SetSys),
                (Family::Graph, InstanceFormat::Graph),
                (Family::BipartiteGraph, InstanceFormat::Graph),
                (Family::SubsetSum, InstanceFormat::SubsetSum),
                (Family::Circuit, InstanceFormat::Circuit),
            ] {
                let m = fit_m(n, rng.random_range(1..=10));
                let k = match family {
                    Family::SubsetSum => rng.random_range(1..=40),
                    _ => 3,
                };
                let params = RandomParams::new(n, m, k, seed);
                let inst = random_instance(family, &params)?;
                let bytes = serialize_instance(&inst);
                let back = parse_instance(format, &bytes)?;
                if back != inst || serialize_instance(&back) != bytes {
                    bad.push(format.name());
                }
            }
            check(format!("n={n}"), bad.is_empty(), || format!("formats {bad:?}"))
        }
    })
}

fn splitting_case(seed: u64, n: usize, rng: &mut ChaCha8Rng, caps: &Caps) -> Result<Outcome> {
    let m = fit_m(n, rng.random_range(1..=6));
    let sys = random_set_system(n, m, 3, seed)?;
    let p = rng.random_range(1..=2);
    let t = rng.random_range(0..=n);
    let best = count_hitting_sets_by_size(&sys, caps)?.min_size();
    let cases = hitting_set_to_set_splitting(&HittingSetInstance::new(sys.clone(), t)?, p)?;
    let mut any = false;
    for c in &cases {
        if count_set_splittings(&c.system, caps)? > BigUint::ZERO {
            any = true;
            break;
        }
    }
    let expected = best.is_some_and(|b| b <= t);
    let nae = set_splitting_to_nae_cnf(&sys)?;
    let splits = count_set_splittings(&sys, caps)?;
    let nae_ok = count_nae_assignments(&nae, caps)? == splits
        && exists_nae_assignment(&nae, caps)? == (splits > BigUint::ZERO);
    let cnf = nae_to_cnf(&nae)?;
    let cnf_ok = count_satisfying(&cnf, caps)? == splits;
    Ok(check(format!("n={n} m={m} p={p} t={t}"), any == expected && nae_ok && cnf_ok, || {
        format!("splittable {any} vs hitting {expected}; nae {nae_ok}; cnf {cnf_ok}")
    }))
}

/// Families of `t` distinct `q`-subsets of `0..j` whose union is `0..j`.
pub fn fiber_count_brute(j: usize, q: usize, t: usize) -> usize {
    let blocks: Vec<u64> = (0..j)
        .combinations(q)
        .map(|c| c.into_iter().fold(0, |m, e| m | 1 << e))
        .collect();
    let full = (1u64 << j) - 1;
    blocks
        .iter()
        .combinations(t)
        .filter(|h| h.iter().fold(0, |m, &&b| m | b) == full)
        .count()
}
