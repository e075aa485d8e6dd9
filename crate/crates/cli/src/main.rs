mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quivergrass::{ErrorKind, ExactField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldChoice {
    /// The prime field F_p with p = --prime.
    Fp,
    /// The rationals.
    Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Brute,
    Poly,
    Both,
}

#[derive(Debug, Parser)]
#[command(
    name = "quivergrass",
    version,
    about = "Quiver representations, quiver Grassmannian point counts and cluster characters"
)]
pub struct Cli {
    /// Quiver JSON (file or inline); required for catalog coordinates.
    #[arg(long, global = true)]
    quiver: Option<String>,
    /// Field for Hom, Ext and translates.
    #[arg(long, global = true, value_enum, default_value = "fp")]
    field: FieldChoice,
    /// Working prime.
    #[arg(long, global = true, default_value_t = 101)]
    prime: u64,
    /// Primes for brute-force counts, comma separated.
    #[arg(long, global = true, default_value = "2,3,5")]
    primes: String,
    /// Enumeration budget; defaults to QUIVERGRASS_BUDGET or 10^7.
    #[arg(long, global = true)]
    budget: Option<u128>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Seed for randomized subroutines.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Knitting bound for catalogs of non-Dynkin quivers.
    #[arg(long, global = true)]
    bound: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dynkin, affine or wild type of a quiver.
    Classify {
        /// Quiver JSON; falls back to --quiver.
        file: Option<String>,
    },
    /// Preprojective and preinjective indecomposables.
    Catalog,
    /// dim Hom(M, N).
    Hom { m: String, n: String },
    /// dim Ext¹(M, N).
    Ext { m: String, n: String },
    /// τM, or τ⁻M with --inverse.
    Tau {
        m: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Points of the quiver Grassmannian Gr_e(M).
    Count {
        m: String,
        #[arg(long)]
        e: String,
        #[arg(long, value_enum, default_value = "both")]
        mode: Mode,
    },
    /// Checks the multiplication formula CC(X) CC(S) for a pair (X, S).
    Cluster { x: String, s: String },
    /// Cluster character CC(M).
    Cc { m: String },
}

/// What a command produced; `verified = false` marks a failed identity.
pub struct Output {
    pub json: serde_json::Value,
    pub text: String,
    pub verified: bool,
}

impl Cli {
    pub fn field(&self) -> quivergrass::Result<ExactField> {
        match self.field {
            FieldChoice::Fp => ExactField::prime(self.prime),
            FieldChoice::Q => Ok(ExactField::Rationals),
        }
    }

    pub fn budget(&self) -> u128 {
        self.budget
            .unwrap_or_else(quivergrass::grassmannian::budget_from_env)
    }
}

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Internal => 1,
        ErrorKind::Precondition => 2,
        ErrorKind::Budget => 3,
        ErrorKind::Io => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("json output")
                ),
                Format::Text => println!("{}", out.text),
            }
            ExitCode::from(if out.verified { 0 } else { 1 })
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(err.kind()))
        }
    }
}
