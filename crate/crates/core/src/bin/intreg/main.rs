//! `intreg`: decide regular intersection emptiness for graph problems.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

#[derive(Parser)]
#[command(name = "intreg", version, about)]
struct Cli {
    /// Log progress to stderr
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

/// Where the automaton comes from.
#[derive(Args, Clone, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Regular expression over `> 1 $ a #`
    #[arg(long)]
    regex: Option<String>,

    /// Automaton in JSON form
    #[arg(long)]
    automaton: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the language contains a positive instance
    Decide {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        problem: String,
        /// Write the representative functions as JSON to this path
        #[arg(long)]
        emit_reps: Option<PathBuf>,
        /// Write the decision here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        /// Limit on configurations expanded by the core search
        #[arg(long, default_value_t = 5_000_000)]
        max_search: u64,
    },
    /// Print the finite core for a problem's representatives
    Core {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        problem: String,
        #[arg(long)]
        emit_reps: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 5_000_000)]
        max_search: u64,
    },
    /// Decode a word read from stdin
    Decode {
        /// Read the word as a red-blue graph
        #[arg(long)]
        red_blue: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Solve an instance given as JSON (file or stdin)
    Solve {
        #[arg(long)]
        problem: String,
        /// Instance file; stdin when absent
        #[arg(long)]
        instance: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Limit on solver search steps
        #[arg(long)]
        max_search: Option<u64>,
    },
    /// Check a witness word: membership, Enc, and a positive solver answer
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        problem: String,
        /// The word; stdin when absent
        #[arg(long)]
        word: Option<String>,
    },
    /// List the supported and unsupported problems
    ListProblems {
        /// Print JSON instead of a table
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command, cli.verbose) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
