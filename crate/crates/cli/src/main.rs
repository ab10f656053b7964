mod input;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use zc_core::bounds::{bound_for, TheoremId};
use zc_core::constructions::{construct_extremal, recipe};
use zc_core::enumeration::{enumerate_cacti, reports_to_csv, verify_theorem, Verdict};
use zc_core::graph::io::{to_edge_list, to_graph6};
use zc_core::graph::random::{random_cactus, random_cactus_with_k};
use zc_core::graph::CactusGraph;
use zc_core::indices::{Exponent, Index};
use zc_core::rewrite::{local_search, pro_algorithm, Objective, SearchConfig, TieBreak};

use output::{Report, Table};

#[derive(Parser, Debug, Serialize)]
#[command(name = "zc", version, about = "Multiplicative Zagreb indices of cactus graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true, env = "ZC_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
    Graph6,
    Text,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "subcommand", rename_all = "lowercase")]
enum Command {
    /// Index table for each input graph.
    Compute {
        #[command(flatten)]
        input: input::InputArgs,
        /// Exponent of the first index, `p` or `p/q`.
        #[arg(long, default_value = "1")]
        c: Exponent,
    },
    /// Check closed-form bounds against exhaustive enumeration.
    Verify {
        /// T1..T5, or `all`.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n_max: usize,
        /// Exponents of the first index, comma separated or repeated.
        #[arg(long, value_delimiter = ',', default_value = "1")]
        c: Vec<Exponent>,
    },
    /// Build a graph attaining a bound.
    Construct {
        #[arg(long)]
        theorem: TheoremId,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "1")]
        c: Exponent,
    },
    /// List every cactus on n vertices up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Only those with k pendant vertices.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Local search with improving rewrite moves.
    Optimize(OptimizeArgs),
    /// Redistribute pendant trees over the cycles.
    Reattach {
        #[command(flatten)]
        input: input::InputArgs,
    },
}

#[derive(Args, Debug, Serialize)]
#[command(group(ArgGroup::new("objective").required(true).args(["max", "min"])))]
struct OptimizeArgs {
    #[arg(long)]
    max: bool,
    #[arg(long)]
    min: bool,
    #[arg(long, value_enum)]
    index: IndexArg,
    #[arg(long, default_value = "1")]
    c: Exponent,
    #[arg(long, default_value_t = 10_000)]
    max_steps: usize,
    /// Try moves in a seeded random order instead of lexicographic order.
    #[arg(long)]
    shuffle: bool,
    /// Start from a random cactus on `--n` vertices.
    #[arg(long, requires = "n")]
    random: bool,
    #[arg(long)]
    n: Option<usize>,
    /// With `--random`: number of pendant vertices.
    #[arg(long)]
    k: Option<usize>,
    /// With `--random`: draw a tree.
    #[arg(long)]
    tree: bool,
    #[command(flatten)]
    input: input::InputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum IndexArg {
    Pi1,
    Pi2,
}

/// Exit status: 0 success, 1 a mismatch or failed check, 2 bad usage or input.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Check(String),
}

impl From<zc_core::Error> for Failure {
    fn from(e: zc_core::Error) -> Self {
        use zc_core::Error::*;
        match e {
            PostCheck(_) | Internal(_) | StaleMove(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("zc: cannot set up {jobs} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("zc: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("zc: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> CliResult<u8> {
    let report = Report::new(cli);
    let mut out = std::io::stdout().lock();
    match &cli.command {
        Command::Compute { input, c } => {
            let graphs = input.load(true)?;
            let rows: Vec<output::IndexRow> = graphs.iter().map(|g| output::IndexRow::new(g, *c)).collect();
            match cli.format {
                Format::Json => report.json(&mut out, json!({ "graphs": rows }))?,
                Format::Csv => output::IndexRow::csv(&mut out, &rows)?,
                Format::Text => output::IndexRow::text(&mut out, &rows)?,
                Format::Graph6 => return Err(Failure::Usage("compute has no graph6 output".into())),
            }
            Ok(0)
        }
        Command::Verify { theorem, n_max, c } => {
            let theorems =
                if theorem.eq_ignore_ascii_case("all") { TheoremId::ALL.to_vec() } else { vec![theorem.parse()?] };
            let mut reports = Vec::new();
            for t in theorems {
                reports.extend(verify_theorem(t, *n_max, c)?);
            }
            let mismatches = reports.iter().filter(|r| r.verdict == Verdict::Mismatch).count();
            match cli.format {
                Format::Json => report
                    .json(&mut out, json!({ "reports": reports, "total": reports.len(), "mismatches": mismatches }))?,
                Format::Csv => out.write_all(reports_to_csv(&reports)?.as_bytes())?,
                Format::Text => {
                    let mut table =
                        Table::new(["theorem", "n", "k", "c", "predicted", "observed", "verdict", "witnesses"]);
                    for r in &reports {
                        table.row([
                            r.theorem_id.to_string(),
                            r.n.to_string(),
                            r.k.to_string(),
                            r.c.map_or_else(|| "-".into(), |c| c.to_string()),
                            r.predicted.as_ref().map_or_else(|| "condition".into(), |b| b.value.to_string()),
                            r.observed_extreme.as_ref().map_or_else(|| "-".into(), |v| v.to_string()),
                            format!("{:?}", r.verdict).to_lowercase(),
                            r.witnesses.len().to_string(),
                        ]);
                    }
                    table.write(&mut out)?;
                    writeln!(out, "{} reports, {mismatches} mismatches", reports.len())?;
                }
                Format::Graph6 => {
                    for w in reports.iter().flat_map(|r| &r.witnesses) {
                        writeln!(out, "{w}")?;
                    }
                }
            }
            Ok(if mismatches == 0 { 0 } else { 1 })
        }
        Command::Construct { theorem, n, k, c } => {
            let g = construct_extremal(*theorem, *n, *k)?;
            let bound = bound_for(*theorem, *n, *k, *c)?;
            let value = bound.index().evaluate(g.graph());
            let g6 = to_graph6(g.graph());
            match cli.format {
                Format::Json => report.json(
                    &mut out,
                    json!({
                        "recipe": recipe(*theorem, *n, *k)?,
                        "graph6": g6,
                        "edges": g.graph().edges().collect::<Vec<_>>(),
                        "degree_sequence": g.degree_sequence(),
                        "value": value,
                        "bound": bound,
                    }),
                )?,
                Format::Graph6 => writeln!(out, "{g6}")?,
                Format::Csv => {
                    writeln!(out, "theorem,n,k,c,graph6,value,bound")?;
                    let c_col = bound.c.map_or_else(String::new, |c| c.to_string());
                    writeln!(out, "{theorem},{n},{k},{c_col},{g6},{value},{}", bound.value)?;
                }
                Format::Text => {
                    writeln!(out, "{theorem} n={n} k={k}: {g6}")?;
                    writeln!(out, "degrees: {:?}", g.degree_sequence())?;
                    writeln!(out, "{} = {value} (bound {})", bound.index(), bound.value)?;
                    write!(out, "{}", to_edge_list(g.graph()))?;
                }
            }
            Ok(0)
        }
        Command::Enumerate { n, k } => {
            let result = enumerate_cacti(*n, *k)?;
            match cli.format {
                Format::Json => report.json(&mut out, json!({ "enumeration": result }))?,
                Format::Csv => {
                    writeln!(out, "graph6,k,degree_sequence")?;
                    for c in &result.classes {
                        let seq: Vec<String> = c.graph.degree_sequence().iter().map(|d| d.to_string()).collect();
                        writeln!(out, "{},{},{}", c.form, c.graph.pendant_count(), seq.join(" "))?;
                    }
                }
                Format::Graph6 | Format::Text => {
                    for g6 in &result.graphs {
                        writeln!(out, "{g6}")?;
                    }
                }
            }
            Ok(0)
        }
        Command::Optimize(args) => optimize(cli, args, &report, &mut out),
        Command::Reattach { input } => {
            let graphs = input.load(false)?;
            let mut results = Vec::new();
            for g in &graphs {
                let g = CactusGraph::new(g.clone())?;
                results.push((g.clone(), pro_algorithm(&g)?));
            }
            match cli.format {
                Format::Json => {
                    let items: Vec<_> = results
                        .iter()
                        .map(|(a, b)| {
                            json!({
                                "input": to_graph6(a.graph()),
                                "output": to_graph6(b.graph()),
                                "degree_sequence": b.degree_sequence(),
                                "nk_before": zc_core::indices::narumi_katayama(a.graph()).to_string(),
                                "nk_after": zc_core::indices::narumi_katayama(b.graph()).to_string(),
                            })
                        })
                        .collect();
                    report.json(&mut out, json!({ "results": items }))?
                }
                Format::Csv => {
                    writeln!(out, "input,output,nk_before,nk_after")?;
                    for (a, b) in &results {
                        writeln!(
                            out,
                            "{},{},{},{}",
                            to_graph6(a.graph()),
                            to_graph6(b.graph()),
                            zc_core::indices::narumi_katayama(a.graph()),
                            zc_core::indices::narumi_katayama(b.graph())
                        )?;
                    }
                }
                Format::Graph6 | Format::Text => {
                    for (_, b) in &results {
                        writeln!(out, "{}", to_graph6(b.graph()))?;
                    }
                }
            }
            Ok(0)
        }
    }
}

fn optimize(cli: &Cli, args: &OptimizeArgs, report: &Report, out: &mut impl Write) -> CliResult<u8> {
    let objective = if args.max { Objective::Maximize } else { Objective::Minimize };
    let index = match args.index {
        IndexArg::Pi1 => Index::Pi1(args.c),
        IndexArg::Pi2 => Index::Pi2,
    };
    let start = if args.random {
        let n = args.n.expect("clap enforces --n");
        if n == 0 {
            return Err(Failure::Usage("--n must be at least 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
        let g = match args.k {
            Some(k) => random_cactus_with_k(n, k, &mut rng, args.tree, 100_000)
                .ok_or_else(|| Failure::Usage(format!("no random cactus with n={n}, k={k} found")))?,
            None => random_cactus(n, &mut rng, args.tree),
        };
        CactusGraph::new(g)?
    } else {
        let graphs = args.input.load(false)?;
        if graphs.len() != 1 {
            return Err(Failure::Usage(format!("optimize takes one graph, got {}", graphs.len())));
        }
        CactusGraph::new(graphs.into_iter().next().unwrap())?
    };
    let tie_break = if args.shuffle { TieBreak::Seeded(cli.seed) } else { TieBreak::Lexicographic };
    let cfg = SearchConfig::new(objective, index).with_max_steps(args.max_steps).with_tie_break(tie_break);
    let outcome = local_search(&start, &cfg)?;
    let (g6_start, g6_end) = (to_graph6(start.graph()), to_graph6(outcome.graph.graph()));
    match cli.format {
        Format::Json => report.json(
            out,
            json!({
                "start": g6_start,
                "start_value": index.evaluate(start.graph()),
                "trace": outcome.trace,
                "steps": outcome.steps,
                "exhausted": outcome.exhausted,
                "final": g6_end,
                "final_degree_sequence": outcome.graph.degree_sequence(),
                "final_value": outcome.final_value,
            }),
        )?,
        Format::Csv => {
            writeln!(out, "step,lemma_id,site,index_before,index_after")?;
            for (i, t) in outcome.trace.iter().enumerate() {
                let site: Vec<String> = t.site.iter().map(|v| v.to_string()).collect();
                writeln!(out, "{},{},{},{},{}", i + 1, t.lemma_id, site.join(" "), t.index_before, t.index_after)?;
            }
        }
        Format::Graph6 => writeln!(out, "{g6_end}")?,
        Format::Text => {
            writeln!(out, "start {g6_start}: {index} = {}", index.evaluate(start.graph()))?;
            for (i, t) in outcome.trace.iter().enumerate() {
                writeln!(out, "{:>4} {:<8} {:?}: {} -> {}", i + 1, t.lemma_id, t.site, t.index_before, t.index_after)?;
            }
            let status = if outcome.exhausted { "step budget reached" } else { "local optimum" };
            writeln!(
                out,
                "final {g6_end}: {index} = {} ({status} after {} steps)",
                outcome.final_value, outcome.steps
            )?;
            writeln!(out, "degrees: {:?}", outcome.graph.degree_sequence())?;
        }
    }
    Ok(0)
}
