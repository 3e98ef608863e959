//! Empirical growth-rate measurement: time a solver over a size sweep and
//! fit `log2(time)` against the size parameter by least squares.

use std::fmt;
use std::hint::black_box;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::instances::random::{random_cnf, random_set_system};
use crate::instances::SubsetSumInstance;
use crate::oracles::{count_satisfying, min_set_cover_dp, subset_sum_decide, Caps, SubsetSumMode};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BenchTarget {
    /// Subset dynamic program for minimum Set Cover; `m = 2n`, sets of size ≤ 3.
    SetCoverDp,
    /// Exhaustive model counting; `m = 4n` clauses of width ≤ 3.
    CnfBrute,
    /// Subset Sum reachability table; the size parameter is `log2 t`.
    SubsetSumDp,
}

impl BenchTarget {
    pub const ALL: [BenchTarget; 3] = [
        BenchTarget::SetCoverDp,
        BenchTarget::CnfBrute,
        BenchTarget::SubsetSumDp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchTarget::SetCoverDp => "setcover-dp",
            BenchTarget::CnfBrute => "cnf-brute",
            BenchTarget::SubsetSumDp => "subsetsum-dp",
        }
    }
}

impl fmt::Display for BenchTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::param(format!("unknown benchmark `{s}`")))
    }
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct GrowthPoint {
    pub size: usize,
    /// Mean seconds per solver call.
    pub seconds: f64,
}

#[derive(Clone, PartialEq, Debug)]
pub struct GrowthFit {
    /// Fitted `d log2(time) / d size`.
    pub slope: f64,
    pub intercept: f64,
    pub points: Vec<GrowthPoint>,
}

/// Least-squares line through `(size, log2 seconds)`.
pub fn fit_log2_growth(points: Vec<GrowthPoint>) -> Result<GrowthFit> {
    if points.len() < 2 {
        return Err(Error::param("need at least two sizes to fit a slope"));
    }
    if points.iter().any(|p| p.seconds <= 0.0) {
        return Err(Error::param("timings must be positive"));
    }
    let k = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.size as f64).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.seconds.log2()).collect();
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::param("sizes must not all be equal"));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    Ok(GrowthFit {
        slope,
        intercept: my - slope * mx,
        points,
    })
}

/// Mean wall time of `f`, repeated until at least `budget` has elapsed.
pub fn mean_seconds(budget: Duration, mut f: impl FnMut()) -> f64 {
    let start = Instant::now();
    let mut runs = 0u32;
    loop {
        f();
        runs += 1;
        let elapsed = start.elapsed();
        if elapsed >= budget {
            return elapsed.as_secs_f64() / runs as f64;
        }
    }
}

/// Time `target` at every size and fit the growth slope. Instances are built
/// before timing starts.
pub fn measure_growth(
    target: BenchTarget,
    sizes: &[usize],
    seed: u64,
    budget: Duration,
) -> Result<GrowthFit> {
    let caps = Caps::with_brute(62);
    let mut points = Vec::with_capacity(sizes.len());
    for &size in sizes {
        let seconds = match target {
            BenchTarget::SetCoverDp => {
                let sys = random_set_system(size, 2 * size, 3, seed)?;
                mean_seconds(budget, || {
                    black_box(min_set_cover_dp(black_box(&sys), &caps).unwrap());
                })
            }
            BenchTarget::CnfBrute => {
                let f = random_cnf(size, 4 * size, 3, seed)?;
                mean_seconds(budget, || {
                    black_box(count_satisfying(black_box(&f), &caps).unwrap());
                })
            }
            BenchTarget::SubsetSumDp => {
                let inst = subset_sum_for_log_target(size, seed)?;
                let caps = Caps {
                    subset_sum_table: 1 << 30,
                    ..caps
                };
                mean_seconds(budget, || {
                    black_box(subset_sum_decide(black_box(&inst), SubsetSumMode::Dp, &caps).unwrap());
                })
            }
        };
        points.push(GrowthPoint { size, seconds });
    }
    fit_log2_growth(points)
}

/// 32 items below `2^bits` and an unreachable odd target `2^bits - 1`
/// over even items, so the table is filled completely.
fn subset_sum_for_log_target(bits: usize, seed: u64) -> Result<SubsetSumInstance> {
    use rand::{Rng, SeedableRng};
    if !(2..=30).contains(&bits) {
        return Err(Error::param("subset-sum benchmark sizes must be in 2..=30"));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let half = 1u64 << (bits - 1);
    let items: Vec<u64> = (0..32).map(|_| 2 * rng.random_range(1..half)).collect();
    SubsetSumInstance::from_u64(&items, (1u64 << bits) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_fit() {
        let points = (0..5)
            .map(|i| GrowthPoint {
                size: 10 + i,
                seconds: 0.001 * 2f64.powi(i as i32),
            })
            .collect();
        let fit = fit_log2_growth(points).unwrap();
        assert!((fit.slope - 1.0).abs() < 1e-12);
        assert!(fit_log2_growth(vec![GrowthPoint { size: 1, seconds: 1.0 }]).is_err());
    }

    #[test]
    fn names_round_trip() {
        for t in BenchTarget::ALL {
            assert_eq!(t.name().parse::<BenchTarget>().unwrap(), t);
        }
        assert!("nope".parse::<BenchTarget>().is_err());
    }

    #[test]
    fn small_sweep_runs() {
        let fit = measure_growth(BenchTarget::CnfBrute, &[4, 6], 1, Duration::from_millis(1)).unwrap();
        assert_eq!(fit.points.len(), 2);
    }
}
