//! The `mcds` command line: enumerate, verify, bench and extremal.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use mcds_core::generate::{connected_gnp, gnp, rng_from_seed};
use mcds_core::{
    enumerate_mcds, extremal_search, format_sets, parse_graph, write_edge_list, Algo, Error,
    Fraction, Graph, InputFormat, ProbeParams, RunConfig,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "mcds",
    version,
    about = "Enumerate minimal connected dominating sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print every minimal CDS of a graph, one per line.
    Enumerate(EnumerateArgs),
    /// Check the structured enumerator against the brute-force oracle.
    Verify(InputArgs),
    /// Time enumeration on random graphs and write CSV rows.
    Bench(BenchArgs),
    /// Largest minimal CDS count over connected graphs on n labeled vertices.
    Extremal(ExtremalArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    file: PathBuf,
    #[arg(long, default_value = "edgelist")]
    format: InputFormat,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args, Debug)]
struct ParamArgs {
    #[arg(long, default_value_t = ProbeParams::default().ell)]
    ell: usize,
    #[arg(long, default_value_t = ProbeParams::default().h)]
    h: usize,
    #[arg(long, default_value_t = ProbeParams::default().delta)]
    delta: Fraction,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Largest n sent to the oracle by `--algo auto`.
    #[arg(long, default_value_t = mcds_core::driver::DEFAULT_AUTO_THRESHOLD)]
    auto_threshold: usize,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value = "auto")]
    algo: Algo,
    /// Print only the number of sets.
    #[arg(long)]
    count_only: bool,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 10)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write rows here instead of standard output.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Redraw until the sample is connected.
    #[arg(long)]
    connected: bool,
    #[arg(long, default_value = "auto")]
    algo: Algo,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args, Debug)]
struct ExtremalArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

/// A failure with the exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: i32,
    error: anyhow::Error,
}

impl Failure {
    fn input(error: impl Into<anyhow::Error>) -> Self {
        Self {
            code: EXIT_INPUT,
            error: error.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Argument(_) => EXIT_USAGE,
            Error::PreconditionFallback(_) => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        };
        Self {
            code,
            error: e.into(),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

impl ParamArgs {
    fn config(&self, algo: Algo, format: InputFormat, count_only: bool) -> RunConfig {
        RunConfig {
            probe: ProbeParams {
                ell: self.ell,
                h: self.h,
                delta: self.delta,
            },
            algo,
            count_only,
            format,
            workers: self.workers,
            auto_threshold: self.auto_threshold,
            ..RunConfig::default()
        }
    }
}

fn read_graph(path: &Path, format: InputFormat) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(Failure::input)?;
    parse_graph(&text, format)
        .with_context(|| format!("in {}", path.display()))
        .map_err(Failure::input)
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::input(anyhow::Error::from(e).context("write failed"))
}

fn cmd_enumerate(args: &EnumerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let cfg = args
        .input
        .params
        .config(args.algo, args.input.format, args.count_only);
    cfg.validate()?;
    let g = read_graph(&args.input.file, args.input.format)?;
    let (sets, report) = enumerate_mcds(&g, &cfg)?;
    if cfg.count_only {
        writeln!(out, "{}", sets.len()).map_err(io_failure)?;
    } else {
        out.write_all(format_sets(&sets).as_bytes())
            .map_err(io_failure)?;
    }
    for line in report.kv_lines() {
        writeln!(err, "{line}").map_err(io_failure)?;
    }
    Ok(())
}

fn cmd_verify(args: &InputArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let structured = args.params.config(Algo::Structured, args.format, false);
    structured.validate()?;
    let g = read_graph(&args.file, args.format)?;
    let (got, report) = enumerate_mcds(&g, &structured)?;
    let oracle = RunConfig {
        algo: Algo::Oracle,
        ..structured
    };
    let (expected, _) = enumerate_mcds(&g, &oracle)?;
    for line in report.kv_lines() {
        writeln!(err, "{line}").map_err(io_failure)?;
    }
    if got == expected {
        writeln!(out, "ok count={}", got.len()).map_err(io_failure)?;
        return Ok(());
    }
    let missing = expected.iter().filter(|s| !got.contains(s)).count();
    let extra = got.iter().filter(|s| !expected.contains(s)).count();
    writeln!(out, "mismatch missing={missing} extra={extra}").map_err(io_failure)?;
    Err(Failure {
        code: EXIT_INTERNAL,
        error: anyhow::anyhow!("structured output differs from the oracle"),
    })
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Outcome {
    let cfg = args.params.config(args.algo, InputFormat::EdgeList, true);
    cfg.validate()?;
    let sink: Box<dyn Write + '_> = match &args.csv {
        Some(path) => Box::new(
            std::fs::File::create(path)
                .with_context(|| format!("cannot create {}", path.display()))
                .map_err(Failure::input)?,
        ),
        None => Box::new(out),
    };
    let mut writer = csv::Writer::from_writer(sink);
    let csv_failure = |e: csv::Error| Failure::input(anyhow::Error::from(e));
    writer
        .write_record([
            "n",
            "p",
            "seed",
            "trial",
            "mcds_count",
            "case_taken",
            "wall_ms",
        ])
        .map_err(csv_failure)?;
    let mut rng = rng_from_seed(args.seed);
    for trial in 0..args.trials {
        let g = if args.connected {
            connected_gnp(args.n, args.p, &mut rng, 10_000)?
        } else {
            gnp(args.n, args.p, &mut rng)?
        };
        let start = Instant::now();
        let (sets, report) = enumerate_mcds(&g, &cfg)?;
        let wall_ms = start.elapsed().as_secs_f64() * 1e3;
        writer
            .write_record([
                args.n.to_string(),
                args.p.to_string(),
                args.seed.to_string(),
                trial.to_string(),
                sets.len().to_string(),
                report.case_taken.to_string(),
                format!("{wall_ms:.3}"),
            ])
            .map_err(csv_failure)?;
    }
    writer.flush().map_err(io_failure)?;
    Ok(())
}

fn cmd_extremal(args: &ExtremalArgs, out: &mut dyn Write) -> Outcome {
    let result = extremal_search(args.n, args.workers)?;
    writeln!(out, "n={} max_mcds={}", result.n, result.max_count).map_err(io_failure)?;
    out.write_all(write_edge_list(&result.witness).as_bytes())
        .map_err(io_failure)?;
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Enumerate(a) => cmd_enumerate(a, out, err),
        Command::Verify(a) => cmd_verify(a, out, err),
        Command::Bench(a) => cmd_bench(a, out),
        Command::Extremal(a) => cmd_extremal(a, out),
    }
}

/// A closed downstream pipe, as with `mcds enumerate g.txt | head`.
fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<std::io::Error>()
        .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match catch_unwind(AssertUnwindSafe(|| dispatch(&cli, out, err))) {
        Ok(Ok(())) => EXIT_OK,
        Ok(Err(f)) if is_broken_pipe(&f.error) => EXIT_OK,
        Ok(Err(f)) => {
            let _ = writeln!(err, "error: {:#}", f.error);
            f.code
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| panic.downcast_ref::<&str>().copied())
                .unwrap_or("unknown panic");
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}
