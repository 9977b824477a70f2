//! `esv`: run one check suite against the built-in algebra or a `.lialg`
//! file and print a report.
//!
//! Exit status is 0 for `pass` and `evidence`, 1 for `fail`, 2 for bad
//! arguments, unreadable files and invalid configurations.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use esv::report::{format_report, run_check, AlgebraSource, CheckConfig, CheckName, OutputFormat};

#[derive(Parser, Debug)]
#[command(
    name = "esv",
    version,
    about = "Exact checks for the extended Schrödinger-Virasoro algebra"
)]
struct Args {
    /// `builtin:esv` or a path to a `.lialg` file.
    #[arg(long, default_value = "builtin:esv")]
    algebra: String,

    /// One of: jacobi, grading, cybe-taft, taft-identity, compat, mybe,
    /// l1-identities, joint-kernel, skew-saturation, h1-l0, hom-l0,
    /// der-evidence, dsl-roundtrip.
    #[arg(long)]
    check: String,

    /// Bound on |twice_index| for basis vectors.
    #[arg(long, default_value_t = 6)]
    window: i64,

    /// Interior margin for window-truncated checks.
    #[arg(long, default_value_t = 2)]
    margin: i64,

    /// Seed for the randomized suites.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// text or json.
    #[arg(long, default_value = "text")]
    format: String,

    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn config(args: &Args) -> esv::Result<CheckConfig> {
    let cfg = CheckConfig {
        algebra: args.algebra.parse::<AlgebraSource>()?,
        check: args.check.parse::<CheckName>()?,
        window: args.window,
        margin: args.margin,
        seed: args.seed,
        format: args.format.parse::<OutputFormat>()?,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let cfg = match config(&args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("esv: {e}");
            return ExitCode::from(2);
        }
    };
    let report = match run_check(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("esv: {e}");
            return ExitCode::from(2);
        }
    };
    let text = format_report(&report, cfg.format);
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("esv: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.exit_code() as u8)
}
