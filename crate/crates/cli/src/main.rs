//! `rp`: rational powers, integral closures and binomial expansions of
//! monomial ideals from the command line.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "rp", version, about = "Exact rational powers and integral closures of monomial ideals")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Increase log verbosity (-vvv dumps simplex tableaus).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Either an integer power `-k` or a rational power `-u p/q`.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct PowerArg {
    #[arg(short = 'k')]
    pub k: Option<u32>,
    #[arg(short = 'u', allow_hyphen_values = true)]
    pub u: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integral closure of I^k.
    Closure {
        #[arg(short = 'k')]
        k: u32,
        file: PathBuf,
    },
    /// Rational power I_u.
    RationalPower {
        #[arg(short = 'u', allow_hyphen_values = true)]
        u: String,
        file: PathBuf,
    },
    /// Jumping denominator e with I_u = I_{ceil(ue)/e}.
    JumpingDenominator { file: PathBuf },
    /// Whether nu*_a(I) is an integer for every integer vector a.
    CheckIntegrality { file: PathBuf },
    /// Binomial expansion of the power of I + J (I, J in disjoint variables).
    Expand {
        #[command(flatten)]
        power: PowerArg,
        /// Double the omega grid (debugging aid; output must not change).
        #[arg(long)]
        grid_refine: bool,
        first: PathBuf,
        second: PathBuf,
    },
    /// Compare the power of I + J with its binomial expansion.
    VerifyExpansion {
        #[command(flatten)]
        power: PowerArg,
        #[arg(long)]
        grid_refine: bool,
        first: PathBuf,
        second: PathBuf,
    },
    /// Symbolic power of a squarefree ideal, or bounded equality checks with --bound.
    Symbolic {
        #[arg(short = 'k')]
        k: Option<u32>,
        #[arg(long)]
        bound: Option<u32>,
        file: PathBuf,
    },
    /// Graded Betti numbers of S/I.
    Betti { file: PathBuf },
    /// Depth, regularity and projective dimension of S/I.
    DepthReg { file: PathBuf },
    /// Compare depth and regularity of S/closure((I+J)^k) with the formulas, k = 1..=K.
    VerifyDepthReg {
        #[arg(short = 'k')]
        k: u32,
        first: PathBuf,
        second: PathBuf,
    },
    /// Containment certificates for the filtration of integral closures of powers.
    CertifyTor {
        #[arg(short = 'k')]
        k: u32,
        #[arg(long, default_value_t = 2)]
        bound: u32,
        file: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        2 => log::LevelFilter::Debug,
        _ => log::LevelFilter::Trace,
    };
    env_logger::Builder::new().filter_level(level).init();

    match commands::run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(outcome.status)
        }
        Err(err) => {
            eprintln!("error: {err}");
            if let Some(certificate) = err.certificate(cli.format) {
                println!("{certificate}");
            }
            ExitCode::from(err.status())
        }
    }
}
