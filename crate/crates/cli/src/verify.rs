use anyhow::Result;
use clap::Args;
use serde_json::{json, Map};
use setheq_core::verify::{run_suite, Suite, VerifyConfig};

use crate::report::Report;
use crate::{Context, Verdict};

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    suite: String,
    /// Number of seeded cases.
    #[arg(long, default_value_t = 100)]
    seeds: u64,
    /// Comma-separated sizes to draw instances from.
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<usize>>,
}

pub fn run(ctx: &Context, args: VerifyArgs) -> Result<Verdict> {
    let suites = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse::<Suite>()?]
    };
    let config = VerifyConfig {
        seeds: args.seeds,
        base_seed: ctx.seed,
        sizes: args.n.clone(),
        caps: ctx.caps,
    };
    let mut report = Report::new();
    let (mut cases, mut failed) = (0usize, 0usize);
    for suite in &suites {
        let result = run_suite(*suite, &config)?;
        for r in &result.records {
            let mut rec = Map::new();
            rec.insert("suite".into(), json!(suite.name()));
            rec.insert("case".into(), json!(r.case));
            rec.insert("seed".into(), json!(r.seed));
            rec.insert("status".into(), json!(if r.pass { "pass" } else { "fail" }));
            rec.insert("params".into(), json!(r.params));
            if !r.pass {
                rec.insert("detail".into(), json!(r.detail));
            }
            report.record(rec);
        }
        cases += result.records.len();
        failed += result.failures().count();
    }
    report
        .field("suites", suites.iter().map(|s| s.name()).collect::<Vec<_>>().join(","))
        .field("base_seed", ctx.seed)
        .field("cases", cases)
        .field("failed", failed)
        .field("status", if failed == 0 { "pass" } else { "fail" });
    report.print(ctx.format);
    Ok(if failed == 0 { Verdict::Yes } else { Verdict::No })
}
