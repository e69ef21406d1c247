use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use cable_slopes::PlanarOrientation;
use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod render;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Orientation {
    Standard,
    Reversed,
}

impl From<Orientation> for PlanarOrientation {
    fn from(o: Orientation) -> Self {
        match o {
            Orientation::Standard => PlanarOrientation::Standard,
            Orientation::Reversed => PlanarOrientation::Reversed,
        }
    }
}

/// Exact slope calculus for cable spaces and iterated cabling chains.
#[derive(Debug, Parser)]
#[command(name = "cable-slopes", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Sampling bound |a|, |b| <= N for slope-level verification.
    #[arg(long, global = true, default_value_t = 20,
          value_parser = clap::value_parser!(u32).range(1..))]
    pub grid: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smith normal form of an integer matrix (`rows cols` then entries; `-` for stdin).
    Snf { input: PathBuf },
    /// First homology of the cable space of a (p, q) cabling.
    CableHomology {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long, value_enum, default_value_t = Orientation::Standard)]
        orientation: Orientation,
    },
    /// Transfer law and relation witnesses of a (p, q) cabling.
    Transfer {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long, value_enum, default_value_t = Orientation::Standard)]
        orientation: Orientation,
    },
    /// Propagate strict slopes along a knot description and bound d_K.
    Propagate { input: PathBuf },
    /// Replay knot descriptions or transfer certificates.
    Verify {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = commands::run(&cli);
    if !outcome.stdout.is_empty() {
        let mut out = std::io::stdout().lock();
        let tail = if outcome.stdout.ends_with('\n') {
            ""
        } else {
            "\n"
        };
        // a closed pipe is not an error for a report writer
        let _ = out
            .write_all(outcome.stdout.as_bytes())
            .and_then(|_| out.write_all(tail.as_bytes()));
    }
    if let Some(err) = &outcome.stderr {
        eprintln!("{err}");
    }
    ExitCode::from(outcome.code)
}
