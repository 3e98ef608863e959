//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use setheq_core::growth::{measure_growth, BenchTarget};
use setheq_core::parity_math::binom_parity_u64;
use setheq_core::verify::{run_suite, Suite, VerifyConfig};

/// Allowed deviation of a fitted growth exponent from 1.
const SLOPE_TOLERANCE: f64 = 0.2;
/// Minimum timing window per sweep size.
const BENCH_BUDGET: Duration = Duration::from_millis(40);

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Result<String, String>,
}

fn suite(suite: Suite, seeds: u64, sizes: Option<Vec<usize>>) -> Result<String, String> {
    let config = VerifyConfig {
        sizes,
        ..VerifyConfig::new(seeds)
    };
    let report = run_suite(suite, &config).map_err(|e| e.to_string())?;
    let total = report.records.len();
    let failures: Vec<_> = report.failures().collect();
    match failures.first() {
        None => Ok(format!("{total}/{total} cases")),
        Some(r) => Err(format!(
            "{} of {total} cases failed; first: seed {} ({}) {}",
            failures.len(),
            r.seed,
            r.params,
            r.detail
        )),
    }
}

fn pascal_mod_two() -> Result<String, String> {
    let mut row = vec![1u8];
    let mut pairs = 0;
    for a in 0..=64u64 {
        for (b, &bit) in row.iter().enumerate() {
            let lucas = binom_parity_u64(a, b as u64).map_err(|e| e.to_string())?;
            if lucas != (bit == 1) {
                return Err(format!("C({a},{b}) parity mismatch"));
            }
            pairs += 1;
        }
        let mut next = vec![1u8; row.len() + 1];
        for b in 1..row.len() {
            next[b] = row[b - 1] ^ row[b];
        }
        row = next;
    }
    if pairs != 2145 {
        return Err(format!("checked {pairs} pairs"));
    }
    Ok(format!("{pairs} pairs"))
}

fn growth() -> Result<String, String> {
    let sizes: Vec<usize> = (10..=20).collect();
    let mut notes = Vec::new();
    let mut ok = true;
    for target in [BenchTarget::SetCoverDp, BenchTarget::CnfBrute] {
        let fit = measure_growth(target, &sizes, 7, BENCH_BUDGET).map_err(|e| e.to_string())?;
        ok &= (fit.slope - 1.0).abs() <= SLOPE_TOLERANCE;
        notes.push(format!("{target} slope {:.3}", fit.slope));
    }
    let joined = notes.join(", ");
    if ok {
        Ok(joined)
    } else {
        Err(joined)
    }
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "CNF to hitting set preserves counts", limit: Duration::from_secs(60), run: || suite(Suite::SatToHit, 200, Some(vec![3, 6])) },
        Criterion { id: 2, name: "parity hitting set preserves #SAT parity", limit: Duration::from_secs(120), run: || suite(Suite::ParitySatToHit, 200, Some(vec![3, 6])) },
        Criterion { id: 3, name: "independent set / hitting set / cover parities agree", limit: Duration::from_secs(30), run: || suite(Suite::Flip, 200, None) },
        Criterion { id: 4, name: "binomial parity matches Pascal mod 2", limit: Duration::from_secs(1), run: pascal_mod_two },
        Criterion { id: 5, name: "hitting set / splitting / NAE / CNF chain", limit: Duration::from_secs(120), run: || suite(Suite::Splitting, 100, None) },
        Criterion { id: 6, name: "set cover grouping preserves decisions", limit: Duration::from_secs(60), run: || suite(Suite::SetCoverGrouping, 100, None) },
        Criterion { id: 7, name: "parity cover pipeline matches oracle", limit: Duration::from_secs(300), run: || suite(Suite::ParityPipeline, 100, None) },
        Criterion { id: 8, name: "fiber coefficients", limit: Duration::from_secs(5), run: || suite(Suite::OddPartition, 0, Some(vec![6])) },
        Criterion { id: 9, name: "Steiner size correspondence", limit: Duration::from_secs(120), run: || suite(Suite::Steiner, 100, None) },
        Criterion { id: 10, name: "connected vertex cover convolution and recovery", limit: Duration::from_secs(180), run: || suite(Suite::Cvc, 100, None) },
        Criterion { id: 11, name: "partitioning and subset-sum encodings", limit: Duration::from_secs(120), run: || suite(Suite::Partition, 100, None) },
        Criterion { id: 12, name: "CNF to labeled circuit", limit: Duration::from_secs(30), run: || suite(Suite::Vsp, 50, None) },
        Criterion { id: 13, name: "format round trips", limit: Duration::from_secs(10), run: || suite(Suite::RoundTrip, 100, None) },
        Criterion { id: 14, name: "growth exponents of 2^n solvers", limit: Duration::from_secs(600), run: growth },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(d) if elapsed <= c.limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {elapsed:.1?}, limit {:?}", c.limit)),
            Err(d) => ("FAIL", d),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {:>2} {status} [{:.2?}] {}: {detail}", c.id, elapsed, c.name);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
