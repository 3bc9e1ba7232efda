//! The `coxco` command line: coherence analysis of Coxeter systems,
//! small-cancellation checks, the random-presentation lab, and curvature of
//! angled 2-complexes.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse error, 3 verdict not
//! applicable under `--strict`, 4 internal inconsistency.  Every failure
//! writes a single `error: ...` line to stderr.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use coxco::analyze::{decide_coherence, CoherenceOptions, CoherenceVerdict, WitnessPolicy};
use coxco::formats;
use coxco::rational::{parse_ratio, Rational};
use coxco::report;
use coxco::smallcancel::{incoherence_certificate, monte_carlo, piece_report, MonteCarloParams};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "coxco",
    version,
    about = "Exact coherence decisions for two-dimensional Coxeter groups, \
             small-cancellation analysis, and combinatorial curvature"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum WitnessArg {
    /// Report a smallest witness, lexicographically least among those.
    Minimal,
    /// Stop at the first witness found.
    First,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a Coxeter system (.cox): two-dimensionality, Euler
    /// characteristic, finiteness, coherence, L2-Betti profile.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long, value_enum, default_value_t = WitnessArg::Minimal)]
        witnesses: WitnessArg,
        /// Refuse systems whose rank exceeds this bound (the subgroup sweep
        /// is exponential in the rank).
        #[arg(long, default_value_t = 26)]
        max_rank: u32,
        /// Exit 3 when the coherence criterion does not apply to the input.
        #[arg(long)]
        strict: bool,
        /// Include wall-clock timing in the report.  Off by default so that
        /// repeated runs produce identical bytes.
        #[arg(long)]
        timing: bool,
    },
    /// Piece analysis, metric small-cancellation verdicts, and the
    /// incoherence certificate for a presentation (.pres).
    ScCheck {
        file: PathBuf,
        /// Additionally test the metric condition C'(lambda), e.g. 1/8.
        #[arg(long, value_parser = lambda_from_arg)]
        lambda: Option<Rational>,
    },
    /// Sample random presentations at several relator lengths and tabulate
    /// small-cancellation and incoherence rates as CSV.
    Random {
        /// Number of generators (at least 2).
        #[arg(long)]
        gens: usize,
        /// Number of relators per sampled presentation.
        #[arg(long)]
        rels: usize,
        /// Comma-separated maximum relator lengths, one table row each.
        #[arg(long, value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
        /// Trials per length.
        #[arg(long)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the CSV to a file instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Face and vertex curvature of an angled 2-complex (.cx2), with the
    /// exact Gauss-Bonnet identity as a built-in consistency check.
    Curvature { file: PathBuf },
}

fn lambda_from_arg(text: &str) -> Result<Rational, String> {
    parse_ratio(text).ok_or_else(|| format!("'{text}' is not a fraction p/q"))
}

/// A failed run: the exit code mandated for this class of failure plus a
/// one-line message.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: 1,
            message: message.to_string(),
        }
    }

    fn parse(message: impl ToString) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }

    fn internal(message: impl ToString) -> Self {
        Failure {
            code: 4,
            message: message.to_string(),
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

/// Worker count from `COXCO_THREADS` (0 or unset picks the default pool).
fn worker_threads() -> Result<usize, Failure> {
    match std::env::var("COXCO_THREADS") {
        Ok(value) => value.trim().parse::<usize>().map_err(|_| {
            Failure::usage(format!(
                "COXCO_THREADS must be a non-negative integer, got '{value}'"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(error) => Err(Failure::usage(format!("COXCO_THREADS: {error}"))),
    }
}

fn cmd_analyze(
    file: &Path,
    format: OutputFormat,
    witnesses: WitnessArg,
    max_rank: u32,
    strict: bool,
    timing: bool,
) -> Result<u8, Failure> {
    let text = read_input(file)?;
    let started = Instant::now();
    let sys = formats::parse_coxeter_file(&text).map_err(Failure::parse)?;
    let options = CoherenceOptions {
        witness_policy: match witnesses {
            WitnessArg::Minimal => WitnessPolicy::Minimal,
            WitnessArg::First => WitnessPolicy::FirstFound,
        },
        max_rank,
    };
    let coherence = decide_coherence(&sys, &options).map_err(Failure::usage)?;
    let timing_ms = timing.then(|| started.elapsed().as_millis());

    match format {
        OutputFormat::Text => {
            print!("{}", report::render_coherence_text(&sys, &coherence));
            if let Some(ms) = timing_ms {
                println!("time:            {ms} ms");
            }
        }
        OutputFormat::Json => {
            print!(
                "{}",
                report::build_report(&sys, &coherence, timing_ms).to_json()
            );
        }
    }

    if strict && matches!(coherence.verdict, CoherenceVerdict::NotApplicable { .. }) {
        return Ok(3);
    }
    Ok(0)
}

fn cmd_sc_check(file: &Path, lambda: Option<&Rational>) -> Result<u8, Failure> {
    let text = read_input(file)?;
    let parsed = formats::parse_presentation_file(&text).map_err(Failure::parse)?;
    for warning in &parsed.warnings {
        eprintln!("warning: {warning}");
    }
    let pieces = piece_report(&parsed.presentation);
    let certificate = incoherence_certificate(&parsed.presentation);
    print!(
        "{}",
        report::render_small_cancellation_text(&parsed.presentation, &pieces, &certificate, lambda)
    );
    Ok(0)
}

fn cmd_random(
    gens: usize,
    rels: usize,
    lengths: Vec<usize>,
    trials: u32,
    seed: u64,
    csv: Option<&Path>,
) -> Result<u8, Failure> {
    let params = MonteCarloParams {
        generators: gens,
        relators: rels,
        lengths,
        trials,
        seed,
        threads: worker_threads()?,
    };
    let table = monte_carlo(&params).map_err(Failure::usage)?;
    for row in &table.rows {
        if row.relator_collisions > 0 {
            eprintln!(
                "note: length {}: {} of {} trials drew two identical relators",
                row.length, row.relator_collisions, row.trials
            );
        }
    }
    let rendered = report::render_rate_table_csv(&table);
    match csv {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(0)
}

fn cmd_curvature(file: &Path) -> Result<u8, Failure> {
    let text = read_input(file)?;
    let complex = formats::parse_complex_file(&text).map_err(Failure::parse)?;
    // The identity total = 2 pi chi holds for every angle assignment, so a
    // violation can only mean broken bookkeeping, never bad input.
    let curvature = complex.gauss_bonnet_report().map_err(Failure::internal)?;
    let faces = complex.check_nonpositive_face_curvature();
    print!(
        "{}",
        report::render_curvature_text(&complex, &curvature, &faces)
    );
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze {
            file,
            format,
            witnesses,
            max_rank,
            strict,
            timing,
        } => cmd_analyze(&file, format, witnesses, max_rank, strict, timing),
        Command::ScCheck { file, lambda } => cmd_sc_check(&file, lambda.as_ref()),
        Command::Random {
            gens,
            rels,
            lengths,
            trials,
            seed,
            csv,
        } => cmd_random(gens, rels, lengths, trials, seed, csv.as_deref()),
        Command::Curvature { file } => cmd_curvature(&file),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(error) => {
            let code = match error.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = error.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
