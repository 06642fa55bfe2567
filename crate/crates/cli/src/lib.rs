//! Command-line front end for `monopoly-core`.
//!
//! Every subcommand produces a human-readable report (`--format text`) or a
//! single JSON record with a fixed field order (`--format structured`).
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage or
//! input errors.

mod commands;
mod records;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::ENUMERATION_LIMIT;

#[derive(Debug, Parser)]
#[command(name = "monopoly", version, about = "Open k-monopolies, alliances and signed domination")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Solver threads; defaults to every core.
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Allow exact search above the default vertex limit.
    #[arg(long, global = true)]
    pub max_n_override: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProblemArg {
    Monopoly,
    TotalDom,
    DefOffAlliance,
    SignedTotal,
    Powerful,
    Signed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    MonopolyToSignedTotal,
    SignedTotalToMonopoly,
    PowerfulToSigned,
    SignedToPowerful,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Generator spec such as `cycle:8` or `complete_bipartite:3,4`.
    #[arg(long = "gen", value_name = "SPEC")]
    pub generator: Option<String>,

    /// Edge-list file: header `n m`, then one `u v` line per edge.
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<std::path::PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact minimum with a certificate.
    Solve {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = ProblemArg::Monopoly)]
        problem: ProblemArg,
        /// Defaults to 0, or 1 for the signed problems.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Check a vertex set (for signed problems, the +1 vertices).
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = ProblemArg::Monopoly)]
        problem: ProblemArg,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        /// Comma-separated vertex indices.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Closed-form bounds on the k-monopoly number.
    Bounds {
        #[command(flatten)]
        source: Source,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        k: i64,
    },
    /// Convert certificates between monopolies, alliances and signed functions.
    Transform {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        /// Verify the source certificate before converting.
        #[arg(long, action = clap::ArgAction::Set, default_value_t = true)]
        strict: bool,
    },
    /// Build the total-domination gadget H.
    Reduce {
        #[command(flatten)]
        source: Source,
        /// Write H as an edge list here instead of printing it.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// Write one line per vertex of H describing its origin.
        #[arg(long)]
        origin_map: Option<std::path::PathBuf>,
        /// Check 𝓜_0(H) = 6m − 3n + γ_t(G) by exact search.
        #[arg(long)]
        verify: bool,
    },
    /// Split V into r disjoint k-monopolies.
    Partition {
        #[command(flatten)]
        source: Source,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        k: i64,
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Search even when the part-count bound rules the partition out.
        #[arg(long)]
        no_bound_precheck: bool,
    },
    /// Print a generated graph as an edge list.
    Gen {
        #[arg(value_name = "SPEC")]
        spec: String,
    },
    /// Closed-form k-monopoly number of a family.
    Formula {
        #[arg(long = "gen", value_name = "SPEC")]
        spec: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// Also solve exactly and compare.
        #[arg(long)]
        check: bool,
    },
}

/// What a command produced.
pub struct Outcome {
    pub text: String,
    pub json: String,
    pub code: i32,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match commands::execute(&cli) {
        Ok(outcome) => {
            let body = match cli.format {
                Format::Text => outcome.text,
                Format::Structured => outcome.json + "\n",
            };
            let _ = out.write_all(body.as_bytes());
            outcome.code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
