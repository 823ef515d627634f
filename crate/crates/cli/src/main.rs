//! `nonham`: formula tables, constructions, per-graph diagnostics and
//! exhaustive verification runs.

mod check;
mod table;
mod verify;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nonham::constructions::{Family, FamilySpec};
use nonham::enumeration::{generate_all, GenFilter, RunOptions};
use nonham::{encode_graph6, Error};

#[derive(Parser)]
#[command(name = "nonham", version, about = "Extremal nonhamiltonian and nontraceable graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate f, phi or g over ranges of n and k.
    Table(table::TableArgs),
    /// Build a family member and summarise it.
    Construct(ConstructArgs),
    /// Diagnose graph6 graphs from arguments or standard input.
    Check(check::CheckArgs),
    /// Run an exhaustive verification.
    Verify(verify::VerifyArgs),
    /// List every isomorphism class of order n passing the filters.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    min_size: Option<usize>,
    #[arg(long)]
    max_size: Option<usize>,
    #[arg(long)]
    connectivity: Option<usize>,
    #[arg(long)]
    nonhamiltonian: bool,
    #[arg(long)]
    nontraceable: bool,
    /// Only balanced bipartite graphs with parts of this size.
    #[arg(long)]
    bipartite_part: Option<usize>,
    /// Print the number of classes instead of the graphs.
    #[arg(long)]
    count: bool,
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[arg(long)]
    force: bool,
}

/// A failure and the exit code it maps to.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::ScaleGuard(_)) { 3 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

pub fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn construct(args: &ConstructArgs, out: &mut impl Write) -> Result<u8, Failure> {
    let family = args.family;
    let k = match (family.takes_k(), args.k) {
        (true, Some(k)) => k,
        (true, None) => return Err(usage(format!("family {family} needs --k"))),
        (false, None) => 0,
        (false, Some(_)) => return Err(usage(format!("family {family} takes no --k"))),
    };
    let spec = FamilySpec::new(family, args.n, k);
    let g = spec.build()?;
    let summary = check::Summary::of(&g)?;
    match args.format {
        Format::Json => {
            let v = serde_json::json!({ "family": spec.to_string(), "graph6": encode_graph6(&g), "summary": summary });
            writeln!(out, "{v}")?;
        }
        _ => {
            writeln!(out, "{}", encode_graph6(&g))?;
            writeln!(out, "family: {spec}")?;
            summary.write_text(out)?;
        }
    }
    Ok(0)
}

fn sweep(args: &SweepArgs, out: &mut impl Write) -> Result<u8, Failure> {
    let filter = GenFilter {
        min_size: args.min_size,
        max_size: args.max_size,
        connectivity_exact: args.connectivity,
        nonhamiltonian_only: args.nonhamiltonian,
        nontraceable_only: args.nontraceable,
        bipartite_balanced: args.bipartite_part,
    };
    let opts = RunOptions { workers: args.workers, force: args.force };
    if args.count {
        writeln!(out, "{}", nonham::enumeration::count_graphs(args.n, &filter, opts)?)?;
    } else {
        for g in generate_all(args.n, &filter, opts)? {
            writeln!(out, "{}", encode_graph6(&g))?;
        }
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match cli.command {
        Command::Table(a) => table::run(&a, &mut out)?,
        Command::Construct(a) => construct(&a, &mut out)?,
        Command::Check(a) => check::run(&a, &mut out)?,
        Command::Verify(a) => verify::run(&a, &mut out)?,
        Command::Sweep(a) => sweep(&a, &mut out)?,
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
