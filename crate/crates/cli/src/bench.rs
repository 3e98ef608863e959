use std::time::Duration;

use anyhow::{bail, Result};
use clap::Args;
use serde_json::{json, Map};
use setheq_core::growth::{measure_growth, BenchTarget};

use crate::report::Report;
use crate::{Context, Verdict};

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// setcover-dp, cnf-brute or subsetsum-dp.
    target: BenchTarget,
    /// Sizes as `a..b` (inclusive) or a comma-separated list. For
    /// subsetsum-dp the size is log2 of the target.
    #[arg(long, default_value = "10..20")]
    n: String,
    /// Minimum timing window per size, in milliseconds.
    #[arg(long, default_value_t = 20)]
    budget_ms: u64,
}

fn parse_sizes(s: &str) -> Result<Vec<usize>> {
    if let Some((a, b)) = s.split_once("..") {
        let (a, b): (usize, usize) = (a.trim().parse()?, b.trim().parse()?);
        if a > b {
            bail!("empty size range {s}");
        }
        return Ok((a..=b).collect());
    }
    Ok(s.split(',').map(|x| x.trim().parse()).collect::<Result<_, _>>()?)
}

pub fn run(ctx: &Context, args: BenchArgs) -> Result<Verdict> {
    let sizes = parse_sizes(&args.n)?;
    for &n in &sizes {
        if args.target != BenchTarget::SubsetSumDp && n > ctx.caps.brute {
            return Err(setheq_core::Error::Capacity {
                what: "benchmark size",
                size: n,
                cap: ctx.caps.brute,
            }
            .into());
        }
    }
    let fit = measure_growth(args.target, &sizes, ctx.seed, Duration::from_millis(args.budget_ms))?;
    let mut report = Report::new();
    for p in &fit.points {
        let mut rec = Map::new();
        rec.insert("n".into(), json!(p.size));
        rec.insert("seconds".into(), json!(p.seconds));
        report.record(rec);
    }
    report
        .field("target", args.target.name())
        .field("seed", ctx.seed)
        .field("slope", (fit.slope * 1000.0).round() / 1000.0)
        .field("growth_base", (2f64.powf(fit.slope) * 1000.0).round() / 1000.0);
    report.print(ctx.format);
    Ok(Verdict::Yes)
}
