//! Command-line front end for exact fractal-square classification.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use fracsq::render::render_pgm;
use fracsq::report::Report;
use fracsq::scan::{scan, write_jsonl, ScanConfig};
use fracsq_core::automaton::OffsetAutomaton;
use fracsq_core::classify::classify_with_limit;
use fracsq_core::digits::{DigitSet, DEFAULT_CELL_LIMIT};
use fracsq_core::fixtures::{builtin, generate_exact_m, BUILTIN_NAMES};
use fracsq_core::graphs::{digit_components, dstar, level1_graph, level2_graph, to_dot};
use fracsq_core::grid::component_trace;
use fracsq_core::pattern::{parse_pattern, to_pattern};

type BoxError = Box<dyn std::error::Error>;

#[derive(Parser)]
#[command(
    name = "fracsq",
    version,
    about = "Exact connectedness classification for fractal squares and cubes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a digit set and print a JSON report
    Classify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Render an iterate as a plain PGM image
    Render {
        #[command(flatten)]
        input: InputArgs,
        /// Iterate depth (grid side is base^depth)
        #[arg(long, default_value_t = 3)]
        depth: u32,
        /// Write to a file instead of standard output
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit a component graph in DOT format
    Graph {
        #[command(flatten)]
        input: InputArgs,
        /// Which graph: 1 (digit × component) or 2 (digit × refined part)
        #[arg(long, default_value_t = 1)]
        level: u32,
        /// Write to a file instead of standard output
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Count components of the first iterates by brute force
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        /// Deepest iterate to materialize
        #[arg(long, default_value_t = 4)]
        depth: u32,
    },
    /// Emit a pattern whose attractor has exactly the given number of
    /// components (at least 5)
    Generate {
        #[arg(long)]
        components: u32,
    },
    /// Sweep a whole family of digit sets, cross-checking every verdict
    Scan {
        /// Base of the family (every subset of the digit grid is a set)
        #[arg(long)]
        base: i64,
        /// Dimension of the family: 2 or 3
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Depth of the brute-force trace cross-check
        #[arg(long, default_value_t = 4)]
        depth: u32,
        /// Sample this many sets instead of sweeping exhaustively
        #[arg(long)]
        sample: Option<u64>,
        /// Seed for sampling
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write JSON lines to a file instead of standard output
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the built-in digit sets
    Builtins,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Built-in digit set name (see `fracsq builtins`)
    #[arg(long)]
    builtin: Option<String>,
    /// Pattern file path, or '-' for standard input
    #[arg(long)]
    input: Option<PathBuf>,
}

impl InputArgs {
    fn load(&self) -> Result<DigitSet, BoxError> {
        if let Some(name) = &self.builtin {
            return Ok(builtin(name)?);
        }
        let path = self.input.as_ref().expect("clap enforces one input source");
        let text = if path.as_os_str() == "-" {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            buf
        } else {
            fs::read_to_string(path)
                .map_err(|e| format!("{}: {e}", path.display()))?
        };
        Ok(parse_pattern(&text)?)
    }
}

/// Cell budget for every materializing operation, overridable through the
/// `FRACSQ_CELL_LIMIT` environment variable.
fn cell_limit() -> Result<u64, BoxError> {
    match std::env::var("FRACSQ_CELL_LIMIT") {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| format!("FRACSQ_CELL_LIMIT must be a cell count, got {v:?}").into()),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_CELL_LIMIT),
        Err(e) => Err(e.into()),
    }
}

fn emit(output: Option<&PathBuf>, contents: &str) -> Result<(), BoxError> {
    match output {
        Some(path) => fs::write(path, contents)
            .map_err(|e| format!("{}: {e}", path.display()).into()),
        None => {
            io::stdout().write_all(contents.as_bytes())?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), BoxError> {
    let limit = cell_limit()?;
    match cli.command {
        Command::Classify { input } => {
            let d = input.load()?;
            let start = Instant::now();
            let c = classify_with_limit(&d, limit)?;
            let elapsed = start.elapsed().as_millis() as u64;
            let report = Report::new(&d, &c, elapsed);
            writeln!(io::stdout().lock(), "{}", serde_json::to_string_pretty(&report)?)?;
        }
        Command::Render { input, depth, output } => {
            let d = input.load()?;
            emit(output.as_ref(), &render_pgm(&d, depth, limit)?)?;
        }
        Command::Graph { input, level, output } => {
            let d = input.load()?;
            let automaton = OffsetAutomaton::build(&d);
            let parts = digit_components(d.digits(), d.dim(), &automaton);
            let g1 = level1_graph(&d, &parts, &automaton);
            let dot = match level {
                1 => to_dot(&d, &g1),
                2 => {
                    let refined = dstar(&d, &parts, &g1, limit)?;
                    to_dot(&d, &level2_graph(&d, &refined, &automaton))
                }
                _ => return Err(format!("graph level must be 1 or 2, got {level}").into()),
            };
            emit(output.as_ref(), &dot)?;
        }
        Command::Oracle { input, depth } => {
            let d = input.load()?;
            let trace = component_trace(&d, depth, limit)?;
            let json = serde_json::json!({
                "base": d.base(),
                "dim": d.dim(),
                "depth": depth,
                "counts": trace.counts,
                "truncated_at": trace.truncated_at,
            });
            writeln!(io::stdout().lock(), "{json}")?;
        }
        Command::Generate { components } => {
            write!(io::stdout().lock(), "{}", to_pattern(&generate_exact_m(components)?))?;
        }
        Command::Scan { base, dim, depth, sample, seed, output } => {
            let cfg = ScanConfig {
                base,
                dim,
                depth,
                sample,
                seed,
                cell_limit: limit,
            };
            let (records, summary) = scan(&cfg)?;
            match output {
                Some(path) => {
                    let mut file = fs::File::create(&path)
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                    write_jsonl(&records, &summary, &mut file)?;
                }
                None => {
                    let stdout = io::stdout();
                    write_jsonl(&records, &summary, &mut stdout.lock())?;
                }
            }
        }
        Command::Builtins => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for name in BUILTIN_NAMES {
                writeln!(out, "{name}")?;
            }
        }
    }
    Ok(())
}

/// Is the root cause of this error a consumer that closed the pipe?
fn is_broken_pipe(mut err: &(dyn std::error::Error + 'static)) -> bool {
    loop {
        if let Some(io_err) = err.downcast_ref::<io::Error>() {
            return io_err.kind() == io::ErrorKind::BrokenPipe;
        }
        match err.source() {
            Some(source) => err = source,
            None => return false,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        // `fracsq scan | head` closing stdout early is normal shell usage,
        // not a failure worth reporting.
        Err(e) if is_broken_pipe(e.as_ref()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fracsq: {e}");
            ExitCode::FAILURE
        }
    }
}
