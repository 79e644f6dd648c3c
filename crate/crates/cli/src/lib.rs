//! Command-line front end: argument parsing, document assembly and rendering.

mod documents;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use compedge::classify::{gorenstein_census, run_sweep, Mode, SweepConfig, SweepError, VerifyOptions};
use compedge::graphs::{parse_graph, validate_standing_assumptions, Graph, GraphError, GraphFormat};
use compedge::ideals::IdealError;
use compedge::FieldSpec;
use thiserror::Error;

pub use documents::{
    AnalysisDocument, BettiDocument, CensusDocument, DualDocument, OrderDocument, OrderOutcome,
    SweepDocument, SCHEMA_VERSION,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: io::Error },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Sweep(#[from] SweepError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Sweep(SweepError::Range(..) | SweepError::NoWorkers) => {
                EXIT_USAGE
            }
            _ => EXIT_INVALID,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "compedge", version, about = "Complementary edge ideals of small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full analysis of one graph: ideal, primes, dual, Betti table, properties, checks
    Analyze(GraphArgs),
    /// Graded Betti table of I_c(G)
    Betti(GraphArgs),
    /// Alexander dual, split into nonedges and triangles
    Dual(GraphArgs),
    /// Linear quotient order certificate, or the components witnessing that none exists
    Order(GraphArgs),
    /// Verify every prediction over all graphs in a range of vertex counts
    Sweep(SweepArgs),
    /// List the graphs whose quotient ring is Gorenstein
    Census(CensusArgs),
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
pub enum InputFormat {
    Graph6,
    EdgeList,
}

impl From<InputFormat> for GraphFormat {
    fn from(f: InputFormat) -> Self {
        match f {
            InputFormat::Graph6 => GraphFormat::Graph6,
            InputFormat::EdgeList => GraphFormat::EdgeList,
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Emit JSON (the default)
    #[arg(long, conflicts_with = "text")]
    pub json: bool,
    /// Emit human-readable text
    #[arg(long)]
    pub text: bool,
    /// Write the document to a file instead of stdout
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Input file; reads stdin when omitted or "-"
    #[arg(value_name = "FILE", conflicts_with = "graph")]
    pub input: Option<PathBuf>,
    /// The graph itself, instead of a file
    #[arg(long, short = 'g')]
    pub graph: Option<String>,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: InputFormat,
    /// Coefficient field: 2, 3, another prime, or q
    #[arg(long, default_value = "2")]
    pub field: FieldSpec,
    #[arg(long, default_value = "corrected", value_parser = parse_mode)]
    pub mode: Mode,
    /// Also compute the Betti table with the upper-Koszul oracle and compare
    #[arg(long)]
    pub cross_check: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Vertex counts, as `a..b` (inclusive) or a single number
    #[arg(long = "n", value_name = "RANGE", default_value = "4..6", value_parser = parse_range)]
    pub range: (usize, usize),
    #[arg(long, default_value = "2")]
    pub field: FieldSpec,
    #[arg(long, default_value = "corrected", value_parser = parse_mode)]
    pub mode: Mode,
    /// Run over GF(2), GF(3) and Q and report table disagreements
    #[arg(long)]
    pub cross_field: bool,
    /// Also compare every table with the upper-Koszul oracle
    #[arg(long)]
    pub cross_check: bool,
    /// Check well-ordered facet covers with at most this many facets
    #[arg(long, default_value_t = 0, value_name = "K")]
    pub facet_covers: usize,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Suppress progress lines on stderr
    #[arg(long, short = 'q')]
    pub quiet: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long = "n", value_name = "N", default_value_t = 4)]
    pub n: usize,
    #[arg(long, default_value = "2")]
    pub field: FieldSpec,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad vertex count {t:?}"));
    match s.split_once("..") {
        Some((a, b)) => Ok((num(a)?, num(b.strip_prefix('=').unwrap_or(b))?)),
        None => num(s).map(|n| (n, n)),
    }
}

pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut (dyn Write + Send),
}

fn read_graph(args: &GraphArgs, stdin: &mut dyn Read) -> Result<Graph, CliError> {
    let text = match (&args.graph, &args.input) {
        (Some(g), _) => g.clone(),
        (None, Some(p)) if p.as_os_str() != "-" => fs::read_to_string(p).map_err(|e| CliError::Read {
            path: p.display().to_string(),
            source: e,
        })?,
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| CliError::Read {
                path: "stdin".into(),
                source: e,
            })?;
            s
        }
    };
    let g = parse_graph(text.trim_end(), args.format.into())?;
    validate_standing_assumptions(&g)?;
    Ok(g)
}

fn emit<T: serde::Serialize>(
    out: &OutputArgs,
    doc: &T,
    text: impl FnOnce() -> String,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let body = if out.text {
        text()
    } else {
        let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
        s.push('\n');
        s
    };
    match &out.out {
        Some(path) => fs::write(path, body).map_err(|e| CliError::Write {
            path: path.display().to_string(),
            source: e,
        }),
        None => stdout.write_all(body.as_bytes()).map_err(|e| CliError::Write {
            path: "stdout".into(),
            source: e,
        }),
    }
}

fn execute(cli: Cli, io: &mut Io<'_>) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze(args) => {
            let g = read_graph(&args, io.stdin)?;
            let opts = VerifyOptions {
                cross_check: args.cross_check,
                facet_cover_limit: 0,
            };
            let doc = AnalysisDocument::build(&g, args.field, args.mode, &opts)?;
            emit(&args.output, &doc, || doc.render_text(), io.stdout)?;
            Ok(if doc.consistency.all_match() { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Betti(args) => {
            let g = read_graph(&args, io.stdin)?;
            let doc = BettiDocument::build(&g, args.field, args.cross_check)?;
            emit(&args.output, &doc, || doc.render_text(), io.stdout)?;
            Ok(if doc.oracle_agrees == Some(false) { EXIT_MISMATCH } else { EXIT_OK })
        }
        Command::Dual(args) => {
            let g = read_graph(&args, io.stdin)?;
            let doc = DualDocument::build(&g)?;
            emit(&args.output, &doc, || doc.render_text(), io.stdout)?;
            Ok(EXIT_OK)
        }
        Command::Order(args) => {
            let g = read_graph(&args, io.stdin)?;
            let doc = OrderDocument::build(&g)?;
            emit(&args.output, &doc, || doc.render_text(), io.stdout)?;
            Ok(EXIT_OK)
        }
        Command::Sweep(args) => {
            let cfg = SweepConfig {
                n_min: args.range.0,
                n_max: args.range.1,
                field: args.field,
                mode: args.mode,
                cross_field: args.cross_field,
                verify: VerifyOptions {
                    cross_check: args.cross_check,
                    facet_cover_limit: args.facet_covers,
                },
                workers: args.workers,
            };
            let report = if args.quiet {
                run_sweep(&cfg, None)?
            } else {
                let progress = std::sync::Mutex::new(&mut *io.stderr);
                let cb = |p: compedge::classify::SweepProgress| {
                    let mut err = progress.lock().unwrap();
                    let _ = writeln!(
                        err,
                        "sweep: {}/{} chunks, {} graphs",
                        p.chunks_done, p.chunks_total, p.graphs_done
                    );
                };
                run_sweep(&cfg, Some(&cb))?
            };
            let _ = writeln!(
                io.stderr,
                "sweep: {} graphs, {} mismatches, {:.2}s",
                report.graph_count,
                report.mismatches.len(),
                report.wall_time.as_secs_f64()
            );
            let doc = SweepDocument::new(report);
            emit(&args.output, &doc, || doc.render_text(), io.stdout)?;
            Ok(if doc.report.has_mismatches() { EXIT_MISMATCH } else { EXIT_OK })
        }
        Command::Census(args) => {
            let graphs = gorenstein_census(args.n, args.field)?;
            let doc = CensusDocument::new(args.n, args.field, graphs);
            emit(&args.output, &doc, || doc.render_text(), io.stdout)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { io.stderr } else { io.stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli, io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            e.exit_code()
        }
    }
}
