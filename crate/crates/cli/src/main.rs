//! `tiltlab`: command-line front end for the tiltlab library.

mod commands;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tiltlab::Error;

#[derive(Parser, Debug)]
#[command(name = "tiltlab", version, about = "Tilted Bruhat orders, tilted Richardson varieties and the quantum Bruhat graph")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for parallel sweeps (default: available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Deodhar,
    Recursive,
    Hecke,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum WordKind {
    /// The regular construction (required for Deodhar parametrizations).
    Regular,
    /// The plain construction; Deodhar sums over it are exploratory.
    Any,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Fast,
    Full,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// The quantum Bruhat graph Γ_n.
    Graph {
        #[arg(long)]
        n: usize,
    },
    /// Distance ℓ(u,v) and minimal degree d_{u,v}.
    Mindeg { u: String, v: String },
    /// The tilted Bruhat interval [u,v].
    Interval { u: String, v: String },
    /// Tilted order predicates, witnesses, the k-tilted order, or an exploratory sweep of ≤_a.
    Order {
        u: Option<String>,
        v: Option<String>,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        /// Sweep (S_n, ≤_a) for connectivity and gradedness; reports only.
        #[arg(long)]
        explore: bool,
        #[arg(long)]
        n: Option<usize>,
    },
    /// An a-tilted reduced word of w.
    Word {
        w: String,
        #[arg(long)]
        a: String,
        #[arg(long, value_enum, default_value_t = WordKind::Regular)]
        kind: WordKind,
    },
    /// Distinguished subwords for u inside a tilted word of v.
    Subwords {
        u: String,
        v: String,
        #[arg(long)]
        a: Option<String>,
        /// Explicit word of v, e.g. "s1s2|s1"; needs --a.
        #[arg(long)]
        word: Option<String>,
        #[arg(long, value_enum, default_value_t = WordKind::Regular)]
        word_kind: WordKind,
    },
    /// The tilted R-polynomial.
    Rpoly {
        u: String,
        v: String,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        #[arg(long, value_enum, default_value_t = WordKind::Regular)]
        word_kind: WordKind,
    },
    /// Membership of a flag (matrix JSON file) in T_{u,v} or its open part.
    Member {
        matrix: std::path::PathBuf,
        u: String,
        v: String,
        #[arg(long)]
        open: bool,
    },
    /// Number of F_p points of the open tilted Richardson variety.
    Count {
        u: String,
        v: String,
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
    /// A random point of the open tilted Richardson variety.
    SampleDeodhar {
        u: String,
        v: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sign vectors and a totally nonnegative sample for the positive subword.
    Tnn {
        u: String,
        v: String,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Minimal-degree Gromov-Witten coefficients c_{u,w}^{v,d_{u,v}}.
    Gw { u: String, v: String },
    /// Check the descent-cycling identities for (u, v, i).
    DescentCycle { u: String, v: String, i: usize },
    /// Run the property catalogue.
    Verify {
        #[arg(long, value_enum, default_value_t = Level::Fast)]
        level: Level,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A command failure with its exit code.
pub enum Failure {
    Lib(Error),
    /// A report whose checks failed (exit 2).
    Report(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::Inconsistency(_)) { 2 } else { 1 })
        }
        Err(Failure::Report(out)) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::from(2)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
