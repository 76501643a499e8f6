//! The `assort` command line.
//!
//! Exit codes: 0 on success, 2 for unreadable or invalid input and usage
//! errors, 3 when the label partition is degenerate (`n1` is 0 or `n`),
//! 4 when the observed assortativity is undefined.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{BoundVariant, Space};
use crate::error::{Error, Result};
use crate::explore::{
    enumerate_metadata_space, permutation_pvalue, rewire_graph_space, swap_heuristic, with_threads,
    ExplorationReport, HeuristicConfig, Objective, RewireConfig, Side, DEFAULT_BINS,
    DEFAULT_ENUMERATION_CAP,
};
use crate::graph::{Graph, MetadataAssignment};
use crate::io::{read_edge_list, read_metadata, EdgeListOptions};
use crate::report::{analyze, AnalysisReport};

#[derive(Debug, Parser)]
#[command(
    name = "assort",
    version,
    about = "Bounds and null models for binary assortativity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Attainable assortativity range from the degree sequence.
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        /// `all` means mgs plus gs when metadata is given, mgs otherwise.
        #[arg(long, value_enum, default_value_t = SpaceArg::All)]
        space: SpaceArg,
        /// Use the weaker published lower bounds on m11 and m10.
        #[arg(long)]
        original_bounds: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate every assignment with n1 ones.
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
        /// Refuse to enumerate more assignments than this.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u128,
        #[command(flatten)]
        histogram: HistogramArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Label-swap search for the extreme assortativity of the metadata space.
    Heuristic {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Max)]
        objective: ObjectiveArg,
        /// Swap proposals per restart.
        #[arg(long, default_value_t = 10_000)]
        iters: usize,
        #[arg(long, default_value_t = 10)]
        restarts: usize,
        /// Probability of accepting a swap that does not improve.
        #[arg(long, default_value_t = 0.001)]
        p_accept: f64,
        /// Start every restart from the observed assignment.
        #[arg(long)]
        start_observed: bool,
        #[command(flatten)]
        random: RandomArgs,
        #[command(flatten)]
        histogram: HistogramArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Permutation test of the observed assortativity.
    Permtest {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, value_enum, default_value_t = SideArg::Upper)]
        side: SideArg,
        #[command(flatten)]
        random: RandomArgs,
        #[command(flatten)]
        histogram: HistogramArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sample the graph space by double-edge swaps.
    Rewire {
        #[command(flatten)]
        input: InputArgs,
        /// Accepted swaps applied to the observed graph per sample.
        #[arg(long, default_value_t = 1000)]
        swaps: usize,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        /// Also accept swaps that disconnect the graph.
        #[arg(long)]
        allow_disconnected: bool,
        #[command(flatten)]
        random: RandomArgs,
        #[command(flatten)]
        histogram: HistogramArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Edge list, one whitespace-separated pair of node ids per line.
    pub graph: PathBuf,
    /// `node<TAB>label` file with labels 0 and 1.
    #[arg(long)]
    pub metadata: Option<PathBuf>,
    /// Number of nodes labeled 1 when no metadata is given.
    #[arg(long)]
    pub n1: Option<usize>,
    /// Collapse repeated edges.
    #[arg(long)]
    pub dedupe: bool,
    /// Read `a b` and `b a` as one undirected edge.
    #[arg(long)]
    pub symmetrize: bool,
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    /// Seed for all random draws; generated and printed when absent.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct HistogramArgs {
    #[arg(long, default_value_t = DEFAULT_BINS)]
    pub bins: usize,
    /// Also write the histogram as `bin_left,bin_right,count` rows.
    #[arg(long)]
    pub histogram_csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the JSON report here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Print a short human-readable summary.
    #[arg(long)]
    pub summary: bool,
    #[arg(long, env = "ASSORT_THREADS")]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    Mgs,
    Gs,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Upper,
    Lower,
}

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DegeneratePartition { .. } => 3,
        Error::UndefinedObserved | Error::DegenerateDenominator => 4,
        _ => 2,
    }
}

struct Input {
    graph: Graph,
    assignment: Option<MetadataAssignment>,
    n1: usize,
}

fn usage(message: impl Into<String>) -> Error {
    Error::InvalidConfig(message.into())
}

fn load(args: &InputArgs) -> Result<Input> {
    let opts = EdgeListOptions {
        dedupe: args.dedupe,
        symmetrize: args.symmetrize,
    };
    let graph = read_edge_list(&args.graph, opts)?;
    let (graph, assignment) = match &args.metadata {
        Some(path) => {
            let (g, a) = read_metadata(path, &graph)?;
            (g, Some(a))
        }
        None => (graph, None),
    };
    let n1 = match (&assignment, args.n1) {
        (Some(a), Some(n1)) if a.n1() != n1 => {
            return Err(usage(format!(
                "--n1 {n1} disagrees with the metadata (n1 = {})",
                a.n1()
            )))
        }
        (Some(a), _) => a.n1(),
        (None, Some(n1)) => n1,
        (None, None) => return Err(usage("either --metadata or --n1 is required")),
    };
    let n = graph.node_count();
    if n1 == 0 || n1 >= n {
        return Err(Error::DegeneratePartition { n1, n });
    }
    Ok(Input {
        graph,
        assignment,
        n1,
    })
}

fn require_metadata(input: &Input, what: &str) -> Result<MetadataAssignment> {
    input
        .assignment
        .clone()
        .ok_or_else(|| usage(format!("{what} needs --metadata")))
}

fn seed_or_fresh(args: &RandomArgs, err: &mut dyn Write) -> u64 {
    args.seed.unwrap_or_else(|| {
        let seed = rand::random::<u64>();
        let _ = writeln!(err, "seed: {seed}");
        seed
    })
}

fn write_file(path: &PathBuf, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map_or_else(|| "undefined".to_string(), |v| format!("{v:.4}"))
}

/// Short plain-text rendering of a report.
pub fn summary(report: &AnalysisReport) -> String {
    let d = &report.input;
    let mut out = format!(
        "nodes {}  edges {}  n1 {}  n0 {}\n",
        d.nodes, d.edges, d.n1, d.n0
    );
    if let Some(obs) = &report.observed {
        let c = obs.counts;
        out.push_str(&format!(
            "observed r = {:.4}  (m11 {}, m10 {}, m00 {})\n",
            obs.r, c.m11, c.m10, c.m00
        ));
    }
    for range in &report.ranges {
        out.push_str(&format!(
            "{} range [{:.4}, {:.4}]\n",
            range.space, range.r_lower, range.r_upper
        ));
    }
    for ex in &report.exploration {
        out.push_str(&format!(
            "{:?}: {} samples ({} undefined)  min {}  max {}  mean {}\n",
            ex.method,
            ex.sample_count,
            ex.undefined_count,
            fmt_opt(ex.r_min_observed),
            fmt_opt(ex.r_max_observed),
            fmt_opt(ex.mean_r)
        ));
    }
    if let Some(t) = &report.permutation_test {
        out.push_str(&format!("p = {}  ({:?} side)\n", t.p_value, t.side));
    }
    out
}

fn emit(
    report: &AnalysisReport,
    output: &OutputArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<()> {
    let json = report.to_json();
    let io = |e: std::io::Error| Error::Io(e.to_string());
    match &output.output {
        Some(path) => {
            write_file(path, &json)?;
            if output.summary {
                out.write_all(summary(report).as_bytes()).map_err(io)?;
            }
        }
        None => {
            out.write_all(json.as_bytes()).map_err(io)?;
            if output.summary {
                err.write_all(summary(report).as_bytes()).map_err(io)?;
            }
        }
    }
    Ok(())
}

fn with_exploration(
    input: &Input,
    exploration: ExplorationReport,
    histogram: &HistogramArgs,
) -> Result<AnalysisReport> {
    if let Some(path) = &histogram.histogram_csv {
        write_file(path, &exploration.histogram.to_csv())?;
    }
    let mut report = AnalysisReport::empty(&input.graph, input.n1, BoundVariant::Improved);
    report.seed = exploration.seed;
    report.exploration.push(exploration);
    Ok(report)
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Bounds {
            input,
            space,
            original_bounds,
            output,
        } => {
            let input = load(&input)?;
            let spaces = match (space, &input.assignment) {
                (SpaceArg::Mgs, _) => vec![Space::Mgs],
                (SpaceArg::Gs, Some(_)) => vec![Space::Gs],
                (SpaceArg::Gs, None) => return Err(usage("--space gs needs --metadata")),
                (SpaceArg::All, Some(_)) => vec![Space::Mgs, Space::Gs],
                (SpaceArg::All, None) => vec![Space::Mgs],
            };
            let variant = if original_bounds {
                BoundVariant::Original
            } else {
                BoundVariant::Improved
            };
            let report = analyze(
                &input.graph,
                input.n1,
                input.assignment.as_ref(),
                &spaces,
                variant,
            )?;
            emit(&report, &output, out, err)
        }
        Command::Enumerate {
            input,
            cap,
            histogram,
            output,
        } => {
            let input = load(&input)?;
            let ex = with_threads(output.threads, || {
                enumerate_metadata_space(&input.graph, input.n1, cap, histogram.bins)
            })??;
            emit(
                &with_exploration(&input, ex, &histogram)?,
                &output,
                out,
                err,
            )
        }
        Command::Heuristic {
            input,
            objective,
            iters,
            restarts,
            p_accept,
            start_observed,
            random,
            histogram,
            output,
        } => {
            let input = load(&input)?;
            let objective = match objective {
                ObjectiveArg::Min => Objective::Min,
                ObjectiveArg::Max => Objective::Max,
            };
            let mut cfg = HeuristicConfig::new(objective, seed_or_fresh(&random, err));
            cfg.iterations = iters;
            cfg.restarts = restarts;
            cfg.p_accept = p_accept;
            if start_observed {
                cfg.initial = Some(require_metadata(&input, "--start-observed")?);
            }
            let ex = with_threads(output.threads, || {
                swap_heuristic(&input.graph, input.n1, &cfg, histogram.bins)
            })??;
            emit(
                &with_exploration(&input, ex, &histogram)?,
                &output,
                out,
                err,
            )
        }
        Command::Permtest {
            input,
            samples,
            side,
            random,
            histogram,
            output,
        } => {
            let input = load(&input)?;
            let a = require_metadata(&input, "permtest")?;
            let side = match side {
                SideArg::Upper => Side::Upper,
                SideArg::Lower => Side::Lower,
            };
            let seed = seed_or_fresh(&random, err);
            let test = with_threads(output.threads, || {
                permutation_pvalue(&input.graph, &a, samples, seed, side, histogram.bins)
            })??;
            if let Some(path) = &histogram.histogram_csv {
                write_file(path, &test.report.histogram.to_csv())?;
            }
            let mut report = AnalysisReport::empty(&input.graph, input.n1, BoundVariant::Improved);
            report.seed = Some(seed);
            report.permutation_test = Some(test);
            emit(&report, &output, out, err)
        }
        Command::Rewire {
            input,
            swaps,
            samples,
            allow_disconnected,
            random,
            histogram,
            output,
        } => {
            let input = load(&input)?;
            let a = require_metadata(&input, "rewire")?;
            let mut cfg = RewireConfig::new(swaps, samples, seed_or_fresh(&random, err));
            cfg.keep_connected = !allow_disconnected;
            let ex = with_threads(output.threads, || {
                rewire_graph_space(&input.graph, &a, &cfg, histogram.bins)
            })??;
            emit(
                &with_exploration(&input, ex, &histogram)?,
                &output,
                out,
                err,
            )
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
