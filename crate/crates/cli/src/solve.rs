use std::path::PathBuf;

use anyhow::Result;
use clap::{ArgGroup, Args, ValueEnum};
use num_rational::Ratio;
use setheq_core::oracles::{
    circuit_count_sat, count_bipartite_independent_sets_grouped, count_covers_exact_size,
    count_cvc_by_size, count_hitting_sets_by_size, count_independent_sets, count_nae_assignments,
    count_satisfying, count_set_covers_by_size, count_set_partitionings_by_size,
    count_set_splittings, count_steiner_sets_by_size, min_set_cover_dp, min_set_partition_dp,
    subset_sum_decide, SubsetSumMode,
};
use setheq_core::reductions::branch::verify_vsp_labeling;
use setheq_core::reductions::dp::parity_cover_pipeline;
use setheq_core::{Error, SizeIndexedCounts};

use crate::report::Report;
use crate::{input, Context, Verdict};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Problem {
    /// Satisfying assignments of a CNF formula.
    Cnf,
    /// Not-all-equal assignments of a CNF formula.
    Nae,
    /// Hitting sets of a set system, by size.
    Hittingset,
    /// Set covers, by number of sets.
    Setcover,
    /// Two-colorings leaving no set monochromatic.
    Setsplitting,
    /// Exact covers by pairwise disjoint sets, by number of sets.
    Setpart,
    /// Connected vertex sets containing the terminals, by size.
    Steiner,
    /// Connected vertex covers, by size.
    Cvc,
    /// Independent sets of a graph.
    IndependentSets,
    /// Subset Sum decision.
    Subsetsum,
    /// Satisfying inputs of a circuit.
    Circuit,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("task").args(["count", "parity", "decide"])))]
pub struct SolveArgs {
    #[arg(value_enum)]
    problem: Problem,
    /// Input instance, `-` for standard input.
    input: PathBuf,
    /// Count solutions (the default, except for subsetsum).
    #[arg(long)]
    count: bool,
    /// Parity of the number of solutions; exit status 0 when odd.
    #[arg(long)]
    parity: bool,
    /// Decide whether a solution exists; exit status 0 for YES.
    #[arg(long)]
    decide: bool,
    /// Restrict counts and parities to this solution size; decisions ask for
    /// a solution of at most this size.
    #[arg(long)]
    size: Option<usize>,
    /// Subset Sum algorithm.
    #[arg(long, value_enum, default_value_t = Mode::Dp)]
    mode: Mode,
    /// Compute a set-cover parity through the grouping pipeline instead of
    /// direct enumeration.
    #[arg(long, requires = "parity")]
    pipeline: bool,
    /// Target ratio for --pipeline.
    #[arg(long, default_value = "1/2")]
    alpha: Ratio<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Mode {
    Dp,
    Brute,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Task {
    Count,
    Parity,
    Decide,
}

enum Answer {
    BySize(SizeIndexedCounts),
    Total { count: String, odd: bool },
}

macro_rules! total {
    ($e:expr) => {{
        let c = $e;
        Answer::Total {
            count: c.to_string(),
            odd: c.bit(0),
        }
    }};
}

pub fn run(ctx: &Context, args: SolveArgs) -> Result<Verdict> {
    let caps = &ctx.caps;
    let task = if args.parity {
        Task::Parity
    } else if args.decide || (!args.count && args.problem == Problem::Subsetsum) {
        Task::Decide
    } else {
        Task::Count
    };
    let mut report = Report::new();
    report.field("problem", format!("{:?}", args.problem).to_lowercase());

    if args.problem == Problem::Subsetsum {
        if task != Task::Decide {
            return Err(Error::Param("subsetsum supports --decide only".into()).into());
        }
        let inst = input::subset_sum(&args.input)?;
        let mode = match args.mode {
            Mode::Dp => SubsetSumMode::Dp,
            Mode::Brute => SubsetSumMode::Brute,
        };
        let yes = subset_sum_decide(&inst, mode, caps)?;
        report.field("mode", mode.to_string());
        return Ok(decision(ctx, report, yes));
    }

    if args.problem == Problem::Setcover {
        let sys = input::set_system(&args.input)?;
        if args.pipeline {
            let r = parity_cover_pipeline(&sys, args.alpha, None, |inst| {
                Ok(count_covers_exact_size(&inst.system, inst.target, caps)?.bit(0))
            })?;
            report.field("q", r.q).field("rounds", r.rounds).field("method", "pipeline");
            return Ok(parity(ctx, report, r.parity));
        }
        match (task, args.size) {
            (Task::Decide, size) => {
                let best = min_set_cover_dp(&sys, caps)?;
                if let Some(b) = best {
                    report.field("minimum", b);
                }
                let yes = best.is_some_and(|b| size.is_none_or(|s| b <= s));
                return Ok(decision(ctx, report, yes));
            }
            (_, Some(size)) if sys.num_sets() > caps.brute => {
                let c = count_covers_exact_size(&sys, size, caps)?;
                report.field("size", size);
                return Ok(finish(ctx, report, task, total!(c)));
            }
            _ => {}
        }
        let counts = count_set_covers_by_size(&sys, caps)?;
        return Ok(finish_sized(ctx, report, task, args.size, counts));
    }

    if args.problem == Problem::Setpart && task == Task::Decide {
        let best = min_set_partition_dp(&input::set_system(&args.input)?, caps)?;
        let yes = best.is_some_and(|b| args.size.is_none_or(|s| b <= s));
        return Ok(decision(ctx, report, yes));
    }

    let answer = match args.problem {
        Problem::Cnf => total!(count_satisfying(&input::cnf(&args.input)?, caps)?),
        Problem::Nae => total!(count_nae_assignments(&input::cnf(&args.input)?, caps)?),
        Problem::Setsplitting => total!(count_set_splittings(&input::set_system(&args.input)?, caps)?),
        Problem::IndependentSets => {
            let g = input::graph(&args.input)?;
            if g.bipartition().is_some() {
                total!(count_bipartite_independent_sets_grouped(&g, caps)?)
            } else {
                total!(count_independent_sets(&g, caps)?)
            }
        }
        Problem::Circuit => {
            let c = input::circuit(&args.input)?;
            if c.labels().is_some() {
                report.field("vsp_labeling", verify_vsp_labeling(&c)?);
            }
            total!(circuit_count_sat(&c, caps)?)
        }
        Problem::Hittingset => Answer::BySize(count_hitting_sets_by_size(&input::set_system(&args.input)?, caps)?),
        Problem::Setpart => Answer::BySize(count_set_partitionings_by_size(&input::set_system(&args.input)?, caps)?),
        Problem::Steiner => Answer::BySize(count_steiner_sets_by_size(&input::graph(&args.input)?, caps)?),
        Problem::Cvc => Answer::BySize(count_cvc_by_size(&input::graph(&args.input)?, caps)?),
        Problem::Setcover | Problem::Subsetsum => unreachable!("handled above"),
    };
    Ok(match answer {
        Answer::BySize(counts) => finish_sized(ctx, report, task, args.size, counts),
        total => {
            if args.size.is_some() {
                return Err(Error::Param("--size does not apply to this problem".into()).into());
            }
            finish(ctx, report, task, total)
        }
    })
}

fn finish_sized(
    ctx: &Context,
    mut report: Report,
    task: Task,
    size: Option<usize>,
    counts: SizeIndexedCounts,
) -> Verdict {
    match (task, size) {
        (Task::Decide, size) => {
            let yes = counts.min_size().is_some_and(|b| size.is_none_or(|s| b <= s));
            if let Some(b) = counts.min_size() {
                report.field("minimum", b);
            }
            decision(ctx, report, yes)
        }
        (_, Some(s)) => {
            report.field("size", s);
            let c = counts.get(s);
            finish(ctx, report, task, total!(c))
        }
        (_, None) => {
            report.field("counts", counts.to_string());
            let t = counts.total();
            finish(ctx, report, task, total!(t))
        }
    }
}

fn finish(ctx: &Context, mut report: Report, task: Task, answer: Answer) -> Verdict {
    let Answer::Total { count, odd } = answer else {
        unreachable!("sized answers are resolved first")
    };
    match task {
        Task::Count => {
            report.field("count", count);
            report.print(ctx.format);
            Verdict::Yes
        }
        Task::Parity => parity(ctx, report, odd),
        Task::Decide => decision(ctx, report, count != "0"),
    }
}

fn parity(ctx: &Context, mut report: Report, odd: bool) -> Verdict {
    report.field("parity", u8::from(odd));
    report.print(ctx.format);
    if odd {
        Verdict::Yes
    } else {
        Verdict::No
    }
}

fn decision(ctx: &Context, mut report: Report, yes: bool) -> Verdict {
    report.field("answer", if yes { "YES" } else { "NO" });
    report.print(ctx.format);
    if yes {
        Verdict::Yes
    } else {
        Verdict::No
    }
}
