use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context as _, Result};
use clap::{Args, ValueEnum};
use num_rational::Ratio;
use serde_json::{json, Value};
use setheq_core::reductions::branch::{
    cnf_to_hitting_set, cnf_to_parity_hitting_set, cnf_to_vsp_circuit, hitting_set_to_monotone_cnf,
    hitting_set_to_set_splitting, make_block_code, nae_to_cnf, pad_to_multiple,
    set_splitting_to_nae_cnf, HittingSetInstance,
};
use setheq_core::reductions::dp::{
    group_set_cover, incidence_graph, set_cover_to_cvc, set_cover_to_set_partitioning,
    set_cover_to_steiner, set_partitioning_to_subset_sum_all,
};
use setheq_core::Instance;

use crate::report::Report;
use crate::{input, Context, Verdict};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Reduction {
    /// CNF to Hitting Set; #SAT equals the hitting sets of size `target`.
    CnfToHittingset,
    /// CNF to Hitting Set; #SAT parity equals the total hitting-set parity.
    CnfToParityHittingset,
    /// Hitting Set (with --t) to one Set Splitting instance per composition.
    HsToSplitting,
    /// Set Splitting to monotone NAE-CNF.
    SplittingToNae,
    /// NAE-CNF to CNF with the same solutions.
    NaeToCnf,
    /// Hitting Set to monotone CNF, parsimonious.
    HsToCnf,
    /// CNF to a labeled fan-in-2 circuit.
    CnfToVsp,
    /// Set Cover (with --t) to Set Cover over unions of q sets.
    SetcoverGroup,
    /// Set Cover (with --t) to Steiner Tree.
    SetcoverToSteiner,
    /// Set Cover (with --t) to Connected Vertex Cover.
    SetcoverToCvc,
    /// Set Cover to Set Partitioning.
    SetcoverToSetpart,
    /// Set Partitioning (with --t) to one Subset Sum instance per size 1..=t.
    SetpartToSubsetsum,
    /// Set system to its bipartite incidence graph.
    SetsysToIncidence,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    #[arg(value_enum)]
    reduction: Reduction,
    /// Input instance, `-` for standard input.
    input: PathBuf,
    /// Output file, or directory for reductions with several outputs;
    /// `-` writes a single output to standard output.
    output: PathBuf,
    /// Block size.
    #[arg(long)]
    p: Option<usize>,
    /// Solution-size target.
    #[arg(long)]
    t: Option<usize>,
    /// Target ratio for grouping, e.g. `1/2`.
    #[arg(long, default_value = "1/2")]
    alpha: Ratio<u64>,
}

fn need_t(args: &ReduceArgs) -> Result<usize> {
    args.t
        .ok_or_else(|| setheq_core::Error::Param("this reduction needs --t".into()).into())
}

pub fn run(ctx: &Context, args: ReduceArgs) -> Result<Verdict> {
    let mut report = Report::new();
    let name = args.reduction.to_possible_value().expect("no skipped variants");
    report.field("reduction", name.get_name());
    let out = &args.output;
    match args.reduction {
        Reduction::CnfToHittingset | Reduction::CnfToParityHittingset => {
            let p = args.p.unwrap_or(3);
            let code = make_block_code(p)?;
            let (f, pad) = pad_to_multiple(&input::cnf(&args.input)?, p)?;
            report.field("p", p).field("p_prime", code.p_prime()).field("padding_vars", pad);
            let sys = if args.reduction == Reduction::CnfToHittingset {
                let inst = cnf_to_hitting_set(&f, p)?;
                report.field("target", inst.target());
                inst.system().clone()
            } else {
                cnf_to_parity_hitting_set(&f, p)?
            };
            report.field("universe", sys.universe_size()).field("sets", sys.num_sets());
            input::write(out, &Instance::SetSystem(sys))?;
        }
        Reduction::HsToSplitting => {
            let t = need_t(&args)?;
            let p = args.p.unwrap_or(1);
            let inst = HittingSetInstance::new(input::set_system(&args.input)?, t)?;
            let cases = hitting_set_to_set_splitting(&inst, p)?;
            let entries = cases
                .into_iter()
                .map(|c| (json!({ "composition": c.composition }), Instance::SetSystem(c.system)))
                .collect();
            report.field("p", p).field("t", t);
            write_many(out, "splitting", "setsys", entries, &mut report)?;
        }
        Reduction::SplittingToNae => {
            let f = set_splitting_to_nae_cnf(&input::set_system(&args.input)?)?;
            report.field("clauses", f.num_clauses());
            input::write(out, &Instance::Cnf(f))?;
        }
        Reduction::NaeToCnf => {
            let f = nae_to_cnf(&input::cnf(&args.input)?)?;
            report.field("clauses", f.num_clauses());
            input::write(out, &Instance::Cnf(f))?;
        }
        Reduction::HsToCnf => {
            let f = hitting_set_to_monotone_cnf(&input::set_system(&args.input)?)?;
            report.field("clauses", f.num_clauses());
            input::write(out, &Instance::Cnf(f))?;
        }
        Reduction::CnfToVsp => {
            let c = cnf_to_vsp_circuit(&input::cnf(&args.input)?)?;
            report.field("gates", c.gates().len()).field("wires", c.wire_count());
            input::write(out, &Instance::Circuit(c))?;
        }
        Reduction::SetcoverGroup => {
            let g = group_set_cover(&input::set_system(&args.input)?, need_t(&args)?, args.alpha)?;
            report
                .field("q", g.q)
                .field("target", g.target)
                .field("universe", g.system.universe_size())
                .field("sets", g.system.num_sets());
            input::write(out, &Instance::SetSystem(g.system))?;
        }
        Reduction::SetcoverToSteiner => {
            let r = set_cover_to_steiner(&input::set_system(&args.input)?, need_t(&args)?)?;
            report.field("target", r.target).field("size_offset", r.offset);
            input::write(out, &Instance::Graph(r.graph))?;
        }
        Reduction::SetcoverToCvc => {
            let r = set_cover_to_cvc(&input::set_system(&args.input)?, need_t(&args)?)?;
            report.field("target", r.target);
            input::write(out, &Instance::Graph(r.graph))?;
        }
        Reduction::SetcoverToSetpart => {
            let sys = set_cover_to_set_partitioning(&input::set_system(&args.input)?)?;
            report.field("sets", sys.num_sets());
            input::write(out, &Instance::SetSystem(sys))?;
        }
        Reduction::SetpartToSubsetsum => {
            let all = set_partitioning_to_subset_sum_all(&input::set_system(&args.input)?, need_t(&args)?)?;
            let entries = all
                .into_iter()
                .enumerate()
                .map(|(i, s)| (json!({ "t0": i + 1 }), Instance::SubsetSum(s)))
                .collect();
            write_many(out, "subsetsum", "ss", entries, &mut report)?;
        }
        Reduction::SetsysToIncidence => {
            let g = incidence_graph(&input::set_system(&args.input)?)?;
            report.field("vertices", g.num_vertices());
            input::write(out, &Instance::Graph(g))?;
        }
    }
    let text = report.render(ctx.format);
    if out == Path::new("-") {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    Ok(Verdict::Yes)
}

/// Write numbered instances into `dir` together with `manifest.json`.
fn write_many(
    dir: &Path,
    stem: &str,
    ext: &str,
    entries: Vec<(Value, Instance)>,
    report: &mut Report,
) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut listed = Vec::with_capacity(entries.len());
    for (i, (mut meta, inst)) in entries.into_iter().enumerate() {
        let name = format!("{stem}-{:04}.{ext}", i + 1);
        input::write(&dir.join(&name), &inst)?;
        meta["file"] = Value::String(name);
        listed.push(meta);
    }
    report.field("outputs", listed.len());
    let manifest = json!({ "outputs": listed });
    let path = dir.join("manifest.json");
    fs::write(&path, serde_json::to_string_pretty(&manifest)? + "\n")
        .with_context(|| format!("writing {}", path.display()))?;
    report.field("manifest", path.display().to_string());
    Ok(())
}
