mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Projective planes, mutually projective Latin squares, and matching duality.
#[derive(Debug, Parser)]
#[command(name = "mpls", version)]
pub struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Print progress to stderr; repeat for more.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the incidence matrix of PG(2, q).
    GenPlane {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        out: PathBuf,
        /// Also write the geometry as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Permute rows and columns at random (uses --seed).
        #[arg(long)]
        shuffle: bool,
        /// Largest field order accepted.
        #[arg(long, default_value_t = mpls::field::DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// Bring a plane's incidence matrix into block form.
    Canon {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Where to write the row/column permutations and order.
        #[arg(long)]
        meta: PathBuf,
    },
    /// Read the Latin squares off a block-form matrix into L1.ls, L2.ls, ...
    Extract {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Build a plane's incidence matrix from a complete set of squares.
    Reconstruct {
        #[arg(long)]
        in_dir: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check an incidence matrix against both plane definitions.
    VerifyPlane {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Check that the squares in a directory are mutually projective.
    VerifyMpls {
        #[arg(long)]
        in_dir: PathBuf,
    },
    /// Split a regular 0/1 matrix into permutation matrices P1.inc, P2.inc, ...
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Report v, w and their witnesses for a 0/1 matrix.
    Matching {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Classify a geometry with as many points as lines.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Resolve square `target` (1-based) of a complete set into transversals.
    Resolve {
        #[arg(long)]
        in_dir: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        target: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mpls: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
