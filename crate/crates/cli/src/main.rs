//! `diskgw`: exact contributions of degree-one disk covers and the
//! combinatorics of their moduli space.

mod cache;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use diskgw::Rational;

#[derive(Debug)]
pub enum CliError {
    /// Exit 1: a computed invariant or audit failed.
    Invariant(String),
    /// Exit 2: bad flags or malformed input.
    Usage(String),
    /// Exit 3: filesystem trouble.
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Invariant(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Invariant(m) | CliError::Usage(m) | CliError::Io(m) => m,
        }
    }
}

impl From<diskgw::Error> for CliError {
    fn from(e: diskgw::Error) -> Self {
        CliError::Invariant(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BuiltinLoop {
    DiskTangent,
    HalfTurn,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    diskgw::rational::parse(s).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "diskgw",
    version,
    about = "Degree-one disk cover contributions, computed exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Contribution C(g,h) as an exact rational.
    Contrib {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        boundary: u32,
        /// Maslov factor mu(N_0, N_0^R)/2.
        #[arg(long, default_value = "-1", value_parser = parse_rational, allow_hyphen_values = true)]
        m: Rational,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Generating-function coefficients C(0,1) ..= C(G,1).
    Series {
        #[arg(long)]
        max_genus: usize,
        #[arg(long, default_value = "-1", value_parser = parse_rational, allow_hyphen_values = true)]
        m: Rational,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Emit the full table (m, alpha, contributions).
        #[arg(long)]
        table: bool,
        /// Cache file; falls back to DISKGW_CACHE when the flag is absent.
        #[arg(long, env = "DISKGW_CACHE")]
        cache: Option<PathBuf>,
    },
    /// Ghost partitions of (g,h).
    Partitions {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        boundary: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Cell dimensions and bundle ranks, or the cell lattice.
    Cells {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        boundary: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Print the degeneration graph instead of the cell table.
        #[arg(long, value_enum)]
        graph: Option<GraphFormat>,
    },
    /// Gluing-dimension audit of every cell and stratum of (g,h).
    Audit {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        boundary: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Maslov index of a frame loop.
    Maslov {
        /// JSON frame loop, or `-` for stdin.
        #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
        input: Option<PathBuf>,
        /// Use a built-in sampled loop instead of a file.
        #[arg(long, value_enum)]
        builtin: Option<BuiltinLoop>,
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
        samples: u32,
        /// Also report the Riemann-Roch index rank * euler_char + mu.
        #[arg(long, allow_hyphen_values = true)]
        euler_char: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Contrib {
            genus,
            boundary,
            m,
            format,
        } => commands::contrib(genus, boundary, &m, format),
        Command::Series {
            max_genus,
            m,
            format,
            table,
            cache,
        } => commands::series(max_genus, m, format, table, cache.as_deref()),
        Command::Partitions {
            genus,
            boundary,
            format,
        } => commands::partitions(genus, boundary, format),
        Command::Cells {
            genus,
            boundary,
            format,
            graph,
        } => commands::cells(genus, boundary, format, graph),
        Command::Audit {
            genus,
            boundary,
            format,
        } => commands::audit(genus, boundary, format),
        Command::Maslov {
            input,
            builtin,
            samples,
            euler_char,
            format,
        } => commands::maslov(input.as_deref(), builtin, samples as usize, euler_char, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
