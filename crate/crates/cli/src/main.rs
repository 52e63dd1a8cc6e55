//! Command-line front end for `motivic-core`.
//!
//! Exit codes: 0 success, 2 bad input (syntax, model validation, files,
//! non-generic weights, size bound), 3 unsupported ⊙ product, 10/11 from
//! `dt compare` (Euler-equal only / differs). A missing specialization
//! value prints as `null` (JSON) or `undefined` (text) and is not an error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "motivic", version, about = "Exact motivic classes, SNC integrals and refined DT series")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct RunConfig {
    /// JSON atom/bundle table.
    #[arg(long, global = true, value_name = "PATH")]
    pub atoms: Option<PathBuf>,
    /// SNC model (for `snc`) or strata file (for `localize`).
    #[arg(long, global = true, value_name = "PATH")]
    pub model: Option<PathBuf>,
    /// Truncation order for series output.
    #[arg(long, global = true, value_name = "K")]
    pub order: Option<usize>,
    /// One-parameter subgroup `a,b,c`.
    #[arg(long, global = true, value_name = "A,B,C", value_parser = parse_weights, allow_hyphen_values = true)]
    pub weights: Option<[i64; 3]>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Rewrite [MU2] as 1 - L^{1/2} in printed classes.
    #[arg(long = "enable-mu2-rewrite", global = true)]
    pub mu2_rewrite: bool,
}

fn parse_weights(s: &str) -> Result<[i64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated integers, got {s:?}"));
    }
    let mut w = [0; 3];
    for (slot, p) in w.iter_mut().zip(&parts) {
        *slot = p.parse().map_err(|_| format!("{p:?} is not an integer"))?;
    }
    Ok(w)
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ring expressions.
    #[command(subcommand)]
    Ring(RingCommand),
    /// Motivic integration over an SNC model (`--model`).
    #[command(subcommand)]
    Snc(SncCommand),
    /// Localization sum over fixed strata (`--model` or `--strata`).
    Localize {
        #[arg(long, value_name = "PATH")]
        strata: Option<PathBuf>,
    },
    /// Hilbert scheme of points on A^3.
    #[command(subcommand)]
    Dt(DtCommand),
}

#[derive(Subcommand, Debug)]
enum RingCommand {
    /// Parse, normalize and print an expression.
    Eval { expr: String },
}

#[derive(Subcommand, Debug)]
enum SncCommand {
    /// The degree-m integral.
    Integrate {
        #[arg(long)]
        m: u32,
    },
    /// Closed rational form and its expansion to `--order`.
    Series,
    /// The motivic volume.
    Volume,
    /// The motivic nearby cycle.
    Nearby,
    /// The motivic vanishing cycle (needs an ambient class).
    Vanishing,
}

#[derive(Subcommand, Debug)]
enum DtCommand {
    /// Coefficients of the product formula up to `--order`.
    Zseries,
    /// Plane-partition counts for sizes 1..=order.
    Count,
    /// Virtual index of every fixed point of Hilb^n under `--weights`.
    Index {
        #[arg(long)]
        n: usize,
    },
    /// Tangent dimension and character at every fixed point of Hilb^n.
    Tangent {
        #[arg(long)]
        n: usize,
    },
    /// Product formula versus fixed-point sum, up to `--order`.
    Compare,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Ring(RingCommand::Eval { expr }) => commands::ring_eval(&cli.config, expr),
        Command::Snc(sub) => {
            let op = match sub {
                SncCommand::Integrate { m } => commands::SncOp::Integrate(*m),
                SncCommand::Series => commands::SncOp::Series,
                SncCommand::Volume => commands::SncOp::Volume,
                SncCommand::Nearby => commands::SncOp::Nearby,
                SncCommand::Vanishing => commands::SncOp::Vanishing,
            };
            commands::snc(&cli.config, op)
        }
        Command::Localize { strata } => commands::localize(&cli.config, strata.as_deref()),
        Command::Dt(sub) => match sub {
            DtCommand::Zseries => commands::dt_zseries(&cli.config),
            DtCommand::Count => commands::dt_count(&cli.config),
            DtCommand::Index { n } => commands::dt_index(&cli.config, *n),
            DtCommand::Tangent { n } => commands::dt_tangent(&cli.config, *n),
            DtCommand::Compare => commands::dt_compare(&cli.config),
        },
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
