//! `nu2`: enumerate two-size partitions, classify them by parity, apply the
//! bijections, verify the identities behind ν₂(16n+14) ≡ 0 (mod 4) and scan
//! the related rank congruences.

mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nu2_core::classes::class_census;
use nu2_core::identities::{
    check_conjecture, verify_range, CongruenceFamily, IdentityId, IdentityReport, Statistic,
};
use nu2_core::maps::MapName;
use nu2_core::partitions::{count_k_sizes, enumerate_k_sizes, nu_k_series, FrequencyPartition};
use nu2_core::Error;
use serde_json::json;

use output::{Format, Records};

#[derive(Debug, Parser)]
#[command(
    name = "nu2",
    version,
    about = "Two-size partitions and the mod 4 congruence of ν₂"
)]
struct Cli {
    /// Output format for the data stream.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Suppress the summary line on stderr.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the partitions of n with exactly k distinct part sizes.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Print only the number of partitions.
        #[arg(long)]
        count_only: bool,
    },
    /// Census of the two-size partitions of n by marked parity class.
    Classify {
        #[arg(long)]
        n: u64,
    },
    /// Apply one of conj, rho, phibar, tau, crc to a partition.
    Map { name: String, partition: String },
    /// Check an identity (or `all`) at every admissible weight in range.
    Verify {
        id: String,
        /// Smallest weight considered.
        #[arg(long, default_value_t = 1, conflicts_with = "n")]
        from: u64,
        /// Largest weight considered.
        #[arg(long, required_unless_present = "n", conflicts_with = "n")]
        to: Option<u64>,
        /// Check a single weight.
        #[arg(long)]
        n: Option<u64>,
    },
    /// Scan rank-type statistics for parity counts divisible by a modulus.
    Conjecture {
        /// `A,B` or `A,B,m` for the weights An+B with modulus m (default 4).
        /// Repeatable; defaults to the five known families.
        #[arg(long)]
        family: Vec<String>,
        /// One of rk, rk2, crank.
        #[arg(long, default_value = "rk2")]
        stat: String,
        /// Largest weight scanned.
        #[arg(long, default_value_t = 1000)]
        n_max: u64,
        /// Exit with status 1 when a counterexample is found.
        #[arg(long)]
        strict: bool,
    },
    /// Coefficients of the generating function of ν_k up to q^N.
    Series {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long = "N")]
        order: usize,
    },
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Io(_) => "io",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Io(e) => e.to_string(),
        }
    }
}

/// What a command produced: data for stdout, an optional summary for
/// stderr, and whether it counts as a failure.
struct Outcome {
    records: Records,
    summary: Option<String>,
    failed: bool,
}

impl Outcome {
    fn data(records: Records) -> Self {
        Outcome {
            records,
            summary: None,
            failed: false,
        }
    }
}

fn enumerate(n: u64, k: usize, count_only: bool) -> Result<Outcome, CliError> {
    if count_only {
        let mut records = Records::new(&["count"]).bare();
        records.push(vec![json!(count_k_sizes(n, k))]);
        return Ok(Outcome::data(records));
    }
    let mut records = Records::new(&["partition"]).bare();
    for p in enumerate_k_sizes(n, k)? {
        records.push(vec![json!(p.to_string())]);
    }
    Ok(Outcome::data(records))
}

fn classify(n: u64) -> Result<Outcome, CliError> {
    let census = class_census(n)?;
    let mut rows: Vec<(String, u64)> = census
        .iter()
        .filter(|&(_, k)| k > 0)
        .map(|(c, k)| (c.to_string(), k))
        .collect();
    rows.sort();
    let mut records = Records::new(&["class", "count"]);
    for (class, k) in rows {
        records.push(vec![json!(class), json!(k)]);
    }
    records.push(vec![json!("TOTAL"), json!(census.total())]);
    Ok(Outcome::data(records))
}

fn map(name: &str, partition: &str) -> Result<Outcome, CliError> {
    let map: MapName = name.parse()?;
    let input: FrequencyPartition = partition.parse()?;
    let image = map.apply(&input)?;
    let mut records = Records::new(&["image"]).bare();
    records.push(vec![json!(image.to_string())]);
    Ok(Outcome::data(records))
}

fn verify(id: &str, from: u64, to: Option<u64>, n: Option<u64>) -> Result<Outcome, CliError> {
    let ids = if id == "all" {
        IdentityId::ALL.to_vec()
    } else {
        vec![id.parse::<IdentityId>()?]
    };
    let (from, to) = match n {
        Some(n) => (n, n),
        None => (from, to.expect("clap requires --to without --n")),
    };
    let reports = verify_range(&ids, from, to)?;
    Ok(report_outcome(&reports, "failed", true))
}

fn conjecture(
    families: &[String],
    stat: &str,
    n_max: u64,
    strict: bool,
) -> Result<Outcome, CliError> {
    let stat: Statistic = stat.parse()?;
    let families: Vec<CongruenceFamily> = if families.is_empty() {
        CongruenceFamily::known().to_vec()
    } else {
        families
            .iter()
            .map(|f| f.parse())
            .collect::<Result<_, _>>()?
    };
    let mut reports = Vec::new();
    for family in &families {
        if family.offset() > n_max {
            continue;
        }
        let index_max = (n_max - family.offset()) / family.stride();
        reports.extend(check_conjecture(family, stat, index_max)?);
    }
    Ok(report_outcome(&reports, "counterexamples", strict))
}

fn report_outcome(reports: &[IdentityReport], noun: &str, fail_on_miss: bool) -> Outcome {
    let missed = reports.iter().filter(|r| !r.holds).count();
    Outcome {
        records: Records::reports(reports),
        summary: Some(format!("{} checks, {missed} {noun}", reports.len())),
        failed: fail_on_miss && missed > 0,
    }
}

fn series(k: usize, order: usize) -> Result<Outcome, CliError> {
    let mut records = Records::new(&["n", "coefficient"]);
    for (n, c) in nu_k_series(k, order)?.into_iter().enumerate() {
        records.push(vec![json!(n), json!(c)]);
    }
    Ok(Outcome::data(records))
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Enumerate { n, k, count_only } => enumerate(*n, *k, *count_only),
        Command::Classify { n } => classify(*n),
        Command::Map { name, partition } => map(name, partition),
        Command::Verify { id, from, to, n } => verify(id, *from, *to, *n),
        Command::Conjecture {
            family,
            stat,
            n_max,
            strict,
        } => conjecture(family, stat, *n_max, *strict),
        Command::Series { k, order } => series(*k, *order),
    }
}

fn fail(code: &str, message: &str) -> ExitCode {
    eprintln!("error[{code}]: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // help and version requests
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid usage");
            return fail("usage", first.trim_start_matches("error: "));
        }
    };
    let outcome = match run(&cli) {
        Ok(outcome) => outcome,
        Err(e) => return fail(e.code(), &e.message()),
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if let Err(e) = outcome
        .records
        .write(cli.format, &mut out)
        .and_then(|_| out.flush())
    {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return ExitCode::SUCCESS;
        }
        return fail("io", &e.to_string());
    }
    if let (Some(summary), false) = (&outcome.summary, cli.quiet) {
        eprintln!("{summary}");
    }
    if outcome.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
