use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use sylvester_core::fraction_free::{growth_trial, GrowthTable};
use sylvester_core::{Error, SeedStream};

mod verify;

const EXIT_FAIL: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) => EXIT_DATA,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Data(m) => write!(f, "data error: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => CliError::Data(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "sylvester",
    version,
    about = "Exact verification of Sylvester-type determinantal identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a seeded random integer matrix in the text format.
    #[command(allow_negative_numbers = true)]
    Gen(GenArgs),
    /// Check an identity on a matrix file or a seeded campaign.
    #[command(allow_negative_numbers = true)]
    Verify(verify::VerifyArgs),
    /// Compare entry growth of fraction-free and rational elimination.
    #[command(allow_negative_numbers = true)]
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenArgs {
    /// ROWS COLS LO HI SEED, as an alternative to the flags.
    #[arg(value_name = "ARGS", num_args = 0..=5)]
    positional: Vec<String>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long)]
    lo: Option<i64>,
    #[arg(long)]
    hi: Option<i64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Matrix order, at most 12.
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = -99)]
    lo: i64,
    #[arg(long, default_value_t = 99)]
    hi: i64,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

pub fn check_range(lo: i64, hi: i64) -> Result<(), CliError> {
    if lo > hi {
        Err(CliError::Usage(format!("empty entry range {lo}..={hi}")))
    } else {
        Ok(())
    }
}

fn positional<T: std::str::FromStr>(args: &[String], at: usize, name: &str) -> Result<Option<T>, CliError> {
    args.get(at)
        .map(|s| {
            s.parse()
                .map_err(|_| CliError::Usage(format!("bad {name} {s:?}")))
        })
        .transpose()
}

fn run_gen(a: GenArgs) -> Result<u8, CliError> {
    let p = &a.positional;
    let rows = a.rows.or(positional(p, 0, "rows")?);
    let cols = a.cols.or(positional(p, 1, "cols")?).or(rows);
    let lo = a.lo.or(positional(p, 2, "lo")?).unwrap_or(-9);
    let hi = a.hi.or(positional(p, 3, "hi")?).unwrap_or(9);
    let seed = a.seed.or(positional(p, 4, "seed")?).unwrap_or(0);
    let (rows, cols) = match (rows, cols) {
        (Some(r), Some(c)) if r > 0 && c > 0 => (r, c),
        _ => return Err(CliError::Usage("rows and cols must be positive".into())),
    };
    check_range(lo, hi)?;
    let m = SeedStream::for_trial(seed, 0).matrix(rows, cols, lo, hi);
    emit(a.out.as_deref(), &m.to_text())?;
    Ok(0)
}

fn run_bench(a: BenchArgs) -> Result<u8, CliError> {
    if a.n == 0 || a.n > 12 {
        return Err(CliError::Usage(format!("--n must be in 1..=12, got {}", a.n)));
    }
    if a.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    check_range(a.lo, a.hi)?;
    let results = (0..a.trials as u64)
        .into_par_iter()
        .map(|trial| growth_trial(a.n, a.seed, trial, a.lo, a.hi))
        .collect::<Result<Vec<_>, _>>()?;
    let skipped = results.iter().filter(|r| r.is_none()).count();
    let stats: Vec<_> = results.into_iter().flatten().collect();
    if let Some(bad) = stats.iter().position(|s| !s.dets_agree()) {
        eprintln!("elimination paths disagree on the determinant in trial {bad}");
        return Ok(EXIT_FAIL);
    }
    if skipped > 0 {
        eprintln!(
            "skipped {skipped} of {} trials with a singular leading minor",
            a.trials
        );
    }
    let table = GrowthTable::from_stats(a.n, &stats, skipped);
    emit(a.out.as_deref(), &table.to_tsv())?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => run_gen(a),
        Command::Verify(a) => verify::run(a),
        Command::Bench(a) => run_bench(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("sylvester: {e}");
            ExitCode::from(e.code())
        }
    }
}
