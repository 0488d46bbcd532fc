use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::Outcome;

#[derive(Parser, Debug)]
#[command(
    name = "shortcircuit",
    version,
    about = "Short-circuit closures of pure braids"
)]
struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Crossing cap for the Kauffman bracket.
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Cap on braid word length, in σ-letters.
    #[arg(long, global = true)]
    max_letters: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct WordArgs {
    /// Braid word, e.g. "s1 s2^-1" or "A(1,3) A(2,3)^-1".
    word: String,

    /// Strand count; inferred from the word when omitted.
    #[arg(long)]
    strands: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Short-circuit closure of a pure braid on an odd number of strands.
    Close {
        #[command(flatten)]
        word: WordArgs,
        /// Apply Reidemeister I/II reductions.
        #[arg(long)]
        simplify: bool,
    },
    /// Plat closure of a braid on an even number of strands.
    Plat {
        #[command(flatten)]
        word: WordArgs,
        /// Treat the word as a pure braid x on 2n+1 strands and close t·i(x).
        #[arg(long)]
        wrap: bool,
        /// Top caps as "1-2,3-4,…"; standard pairs by default.
        #[arg(long)]
        top: Option<String>,
        /// Bottom caps, same format.
        #[arg(long)]
        bottom: Option<String>,
        #[arg(long)]
        simplify: bool,
    },
    /// Jones polynomial, v2, v3, writhe and bridge bound.
    Invariants {
        /// A braid word, Gauss code or PD code.
        input: String,
        #[arg(long, value_enum, default_value_t = InputFormat::Braid)]
        format: InputFormat,
        #[arg(long)]
        strands: Option<usize>,
        /// Simplify before reporting the writhe.
        #[arg(long)]
        simplify: bool,
    },
    /// Compare the closure of b1 ⊗ b2 with the connected sum of closures.
    Tensor {
        first: String,
        second: String,
        #[arg(long)]
        strands1: Option<usize>,
        #[arg(long)]
        strands2: Option<usize>,
    },
    /// Random walk in the double-coset orbit of a braid.
    Orbit {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, default_value_t = 10)]
        steps: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Lower-central-series tools.
    Lcs {
        #[command(subcommand)]
        action: LcsCommand,
    },
    /// Run a seeded randomized verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteName,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
    /// Enumerate A-generator words and report distinct closures.
    Search {
        #[arg(long, default_value_t = 3)]
        strands: usize,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
}

#[derive(Subcommand, Debug)]
enum LcsCommand {
    /// Sample a left-normed commutator of depth n and report on it.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        strands: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        dmax: usize,
    },
    /// Vanishing report of the invariants of order below n.
    Certify {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        n: usize,
    },
    /// Johnson-filtration lower bound for the commutator depth.
    Johnson {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, default_value_t = 5)]
        dmax: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InputFormat {
    Braid,
    Gauss,
    Pd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteName {
    Stabilize,
    Tensor,
    Orbit,
    Lcs,
    Plat,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.max_letters {
        shortcircuit::braid::set_max_letters(n);
    }
    let result = commands::run(&cli);
    match result {
        Ok(Outcome { text, json, code }) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&json).expect("serializable output")
            } else {
                text
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
