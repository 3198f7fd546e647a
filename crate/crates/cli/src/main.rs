//! `morphic-bwt`: iterate morphisms, measure BWT runs, run the check suite.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use morphic_bwt::harness::CheckKind;

#[derive(Parser, Debug)]
#[command(name = "morphic-bwt", version, about = "BWT run statistics of purely morphic words")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Largest iterate length that will be materialized.
    #[arg(long, global = true, default_value_t = morphic_bwt::morphism::DEFAULT_ITERATE_CAP, value_parser = positive)]
    pub cap_len: usize,
    /// Largest word length for bispecial enumeration.
    #[arg(long, global = true, default_value_t = morphic_bwt::analysis::DEFAULT_BISPECIAL_CAP, value_parser = positive)]
    pub cap_bispecial: usize,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Statistics of one iterate.
    Analyze {
        spec: PathBuf,
        #[arg(short = 'i', long = "iterations")]
        i: usize,
        /// Letter to iterate from; defaults to the first prolongable letter.
        #[arg(long)]
        letter: Option<char>,
        /// Include the word itself when it has at most this many letters.
        #[arg(long, default_value_t = 4096)]
        show_word: usize,
    },
    /// One summary row per iterate over an inclusive range.
    Sweep {
        spec: PathBuf,
        #[arg(long = "i", value_parser = commands::parse_range)]
        range: (usize, usize),
        /// Also compute δ (slower).
        #[arg(long)]
        delta: bool,
    },
    /// Run checks over spec files, the built-in corpus and random morphisms.
    Verify {
        #[arg(long = "spec")]
        specs: Vec<PathBuf>,
        #[arg(long)]
        builtin_corpus: bool,
        /// Number of random morphisms to add.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Alphabet size of the random morphisms.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=26))]
        alphabet_size: u8,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all", value_parser = commands::parse_checks)]
        checks: ChecksArg,
        #[arg(long, default_value_t = 10)]
        i_max: usize,
        /// Length cap on the next iterate for the structural checks.
        #[arg(long, default_value_t = 3000)]
        structural_cap: usize,
    },
    /// Predicted complexity class, r_bwt behaviour and compressibility.
    Classify { spec: PathBuf },
    /// Statistics of a literal word.
    Word { text: String },
    /// Print an iterate.
    Iterate {
        spec: PathBuf,
        #[arg(short = 'i', long = "iterations")]
        i: usize,
        #[arg(long)]
        letter: Option<char>,
    },
}

#[derive(Clone, Debug)]
pub struct ChecksArg(pub Vec<CheckKind>);

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = cli.common;
    let result = match cli.command {
        Command::Analyze { spec, i, letter, show_word } => commands::analyze(&common, &spec, i, letter, show_word),
        Command::Sweep { spec, range, delta } => commands::sweep(&common, &spec, range, delta),
        Command::Verify { specs, builtin_corpus, random, seed, alphabet_size, checks, i_max, structural_cap } => {
            commands::verify(
                &common,
                commands::VerifyArgs {
                    specs,
                    builtin_corpus,
                    random,
                    seed,
                    alphabet_size: alphabet_size as usize,
                    checks: checks.0,
                    i_max,
                    structural_cap,
                },
            )
        }
        Command::Classify { spec } => commands::classify(&common, &spec),
        Command::Word { text } => commands::word(&common, &text),
        Command::Iterate { spec, i, letter } => commands::iterate(&common, &spec, i, letter),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("morphic-bwt: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
