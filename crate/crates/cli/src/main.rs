//! `lapcode`: reports on Laplacian simplices and their codes.
//!
//! Exit codes: 0 success, 1 failed check or other error, 2 invalid input,
//! 3 resource guard exceeded, 4 code requested for a non-reflexive simplex.

mod analyze;
mod family;
mod json;
mod oracle;
mod scan;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use lapcode::families::Family;
use lapcode::graphs::{parse_construct, parse_edge_list};
use lapcode::{Error, Limits};

#[derive(Parser)]
#[command(
    name = "lapcode",
    version,
    about = "Laplacian simplices of graphs and their linear codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one graph.
    Analyze(AnalyzeArgs),
    /// CSV table over all connected classes in a vertex range.
    Scan(ScanArgs),
    /// Cross-check the kernel pipeline against the geometric oracle.
    OracleCheck(OracleArgs),
    /// Tables for named graph families.
    #[command(subcommand)]
    Family(FamilyCommand),
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["graph", "construct"]))]
struct AnalyzeArgs {
    /// Edge-list file: `n m` then one `u v` pair per line.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Construction expression such as `B(C3,T:P6)` or `W*(K3)`.
    #[arg(long)]
    construct: Option<String>,
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
    /// Only τ, h* and reflexivity.
    #[arg(long)]
    fast: bool,
    /// Skip minimum distance, MDS and weight distribution.
    #[arg(long)]
    no_distance: bool,
    /// Skip the duality check.
    #[arg(long)]
    no_duality: bool,
    /// Omit the timing field, for reproducible output.
    #[arg(long)]
    no_timing: bool,
    /// Fail with exit code 4 when the simplex is not reflexive.
    #[arg(long)]
    require_code: bool,
}

#[derive(Args)]
struct ScanArgs {
    /// Vertex range `A..B` (inclusive) or a single order.
    #[arg(long)]
    n: String,
    #[arg(long)]
    reflexive: bool,
    #[arg(long)]
    non_unimodal: bool,
    #[arg(long)]
    self_dual: bool,
    #[arg(long)]
    mds: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, default_value_t = 5)]
    n_max: usize,
    /// Perturb the oracle input; the check must then fail.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// |C| and rate of B((b−a)·C_n, a·K_n).
    Rate {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        /// Comma-separated odd orders.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Rate and relative distance: trees, cycles-odd, complete or wstar-prime.
    Asymptotic {
        family: String,
        /// Comma-separated code lengths.
        #[arg(long, value_delimiter = ',')]
        lengths: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Predicted and computed h* of W_k(G).
    WhiskerHstar {
        construct: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
}

/// An error together with the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Syntax { .. } | Error::EdgeList { .. } | Error::InvalidGraph(_) | Error::ParameterOutOfRange(_) => 2,
            Error::GuardExceeded { .. } => 3,
            Error::NotReflexive => 4,
            _ => 1,
        };
        Failure { code, error: e.into() }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Failure { code: 1, error }
    }
}

fn write_csv(header: &[&str], records: &[Vec<String>]) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
    w.write_record(header)?;
    for r in records {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}

fn print(text: &str) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn emit_table(table: &family::Table, as_json: bool) -> anyhow::Result<()> {
    if as_json {
        print(&json::render(&table.to_json()))
    } else {
        write_csv(&table.header, &table.to_records())
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::ParameterOutOfRange(format!("expected A..B or a single order, got {s:?}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok((
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ))
        }
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            Ok((n, n))
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let limits = Limits::from_env();
    match cli.command {
        Command::Analyze(a) => {
            let (g, construction) = if let Some(expr) = &a.construct {
                (parse_construct(expr)?, expr.clone())
            } else {
                let path = a.graph.as_ref().expect("clap enforces one input");
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))
                    .map_err(|error| Failure { code: 2, error })?;
                (parse_edge_list(&text)?, path.display().to_string())
            };
            let opts = analyze::Options {
                fast: a.fast,
                no_distance: a.no_distance,
                no_duality: a.no_duality,
                no_timing: a.no_timing,
                require_code: a.require_code,
            };
            let report = analyze::analyze(&g, &construction, opts, &limits)?;
            if a.csv {
                write_csv(&analyze::CSV_HEADER, &[analyze::csv_record(&report)])?;
            } else {
                print(&json::render(&report))?;
            }
        }
        Command::Scan(s) => {
            let (lo, hi) = parse_range(&s.n)?;
            let filters = scan::Filters {
                reflexive: s.reflexive,
                non_unimodal: s.non_unimodal,
                self_dual: s.self_dual,
                mds: s.mds,
            };
            write_csv(&scan::CSV_HEADER, &scan::scan(lo, hi, filters)?)?;
        }
        Command::OracleCheck(o) => {
            let summary = oracle::oracle_check(o.n_max, o.inject_fault, &limits)?;
            for line in &summary.lines {
                println!("{line}");
            }
            for f in &summary.failures {
                eprintln!("{f}");
            }
            if summary.failures.is_empty() {
                println!("PASS");
            } else {
                println!("FAIL: {} failures", summary.failures.len());
                return Err(Failure {
                    code: 1,
                    error: anyhow::anyhow!("oracle check failed"),
                });
            }
        }
        Command::Family(f) => match f {
            FamilyCommand::Rate { a, b, n, json } => emit_table(&family::rate_table(a, b, &n)?, json)?,
            FamilyCommand::Asymptotic {
                family: name,
                lengths,
                json,
            } => {
                let fam: Family = name.parse()?;
                let lengths = if lengths.is_empty() {
                    family::default_lengths(fam)
                } else {
                    lengths
                };
                emit_table(&family::asymptotic_table(fam, &lengths, &limits)?, json)?;
            }
            FamilyCommand::WhiskerHstar { construct, k, json } => {
                emit_table(&family::whisker_table(&construct, k)?, json)?
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
