use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use output::{Output, Status};

#[derive(Parser, Debug)]
#[command(name = "hcpairs", version, about = "Hopf superalgebras and Harish-Chandra pairs, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// `Q` or `Fp:<p>`; overrides the field declared in the input.
    #[arg(long, global = true)]
    field: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    out: Format,

    /// Degree bound for pairing checks and the primitive spot check.
    #[arg(long, global = true, default_value_t = 4)]
    degree_bound: usize,

    /// Assert that every rewriting step decreases the word order.
    #[arg(long, global = true)]
    strict: bool,

    /// Add wall-clock timings (in a separate `timings` field).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Hopf superalgebra axioms of a `hopf` document.
    VerifyHopf { file: PathBuf },
    /// Build H(J, V) from a `pair` document with finite J.
    BuildH { file: PathBuf },
    /// Build A(C, W) from an `hcp` document.
    BuildA { file: PathBuf },
    /// Check the conditions on a `pair` or `lie-superalgebra` document.
    VerifyDhcp { file: PathBuf },
    /// Check comodule, bracket and compatibility conditions of an `hcp` document.
    VerifyHcp { file: PathBuf },
    /// Reduce every overlap of the rewriting system both ways.
    CheckOverlaps { file: PathBuf },
    /// Pair H of the associated pair with A(C, W) and check the pairing laws.
    Pair { file: PathBuf },
    /// Build and recover, checking the canonical isomorphisms.
    Roundtrip { file: PathBuf },
    /// Irreducibility, unipotence, semisimplicity and parity flags for every file in a directory.
    Classify { dir: PathBuf },
    /// Normal form of a word in the generators of a `pair` document.
    Normalize {
        file: PathBuf,
        /// Letters: names of V or of generators of J.
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::VerifyHopf { .. } => "verify-hopf",
            Command::BuildH { .. } => "build-h",
            Command::BuildA { .. } => "build-a",
            Command::VerifyDhcp { .. } => "verify-dhcp",
            Command::VerifyHcp { .. } => "verify-hcp",
            Command::CheckOverlaps { .. } => "check-overlaps",
            Command::Pair { .. } => "pair",
            Command::Roundtrip { .. } => "roundtrip",
            Command::Classify { .. } => "classify",
            Command::Normalize { .. } => "normalize",
        }
    }

    fn input(&self) -> &PathBuf {
        match self {
            Command::VerifyHopf { file }
            | Command::BuildH { file }
            | Command::BuildA { file }
            | Command::VerifyDhcp { file }
            | Command::VerifyHcp { file }
            | Command::CheckOverlaps { file }
            | Command::Pair { file }
            | Command::Roundtrip { file }
            | Command::Normalize { file, .. } => file,
            Command::Classify { dir } => dir,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut out = Output::new(cli.command.name(), &cli.command.input().display().to_string());
    match commands::run(&cli, &mut out) {
        Ok(()) => out.finish_checks(),
        Err(e) => out.set_error(&e),
    }
    if cli.timings {
        out.set_timing("total_ms", start.elapsed().as_secs_f64() * 1000.0);
    }
    match cli.out {
        Format::Json => println!("{}", out.to_json()),
        Format::Table => print!("{}", out.to_table()),
    }
    ExitCode::from(match out.status {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::InputError => 2,
        Status::Unsupported => 3,
    })
}
