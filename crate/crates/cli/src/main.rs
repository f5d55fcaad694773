mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use commands::{Report, Style, UsageError};
use skein_core::SignConvention;

/// Exact skein-theoretic invariants and Schur-algebra embedding checks.
///
/// Exit codes: 0 success, 2 usage or parse error, 3 verification failure.
/// SKEIN_FORGE_MAX_DIM bounds the dimension of tensor spaces.
#[derive(Parser)]
#[command(name = "skein-forge", version)]
struct Cli {
    /// Render polynomials as monomial strings instead of exact JSON terms.
    #[arg(long, global = true)]
    human: bool,
    /// Read relation coefficients `[a^n,k]` as `bracket(n,k)` instead of `bracket(n,-k)`.
    #[arg(long, global = true)]
    bracket_sign_flip: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Kauffman,
    Homfly,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Expand,
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Relations,
    Rank,
    Hecke,
    ThetaRoutes,
}

#[derive(Subcommand)]
enum Verb {
    /// Kauffman or HOMFLY-PT polynomial of a link JSON file.
    Invariant {
        #[arg(long, value_enum)]
        which: Which,
        file: PathBuf,
    },
    /// Jaeger's oriented resolutions, or a check that they sum to the Kauffman polynomial.
    Jaeger {
        #[arg(long, value_enum)]
        mode: Mode,
        file: PathBuf,
    },
    /// Checks of the BMW embedding into the Schur model.
    Embed {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long, value_enum)]
        suite: Suite,
    },
    /// Presentation and divided-power identities of S_q(n, d).
    SchurCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
}

fn read(file: &PathBuf) -> Result<String, UsageError> {
    std::fs::read_to_string(file).map_err(|e| UsageError(format!("cannot read {}: {e}", file.display())))
}

fn run(cli: Cli) -> Result<Report, UsageError> {
    let style = Style { human: cli.human };
    let conv = SignConvention::from_flip(cli.bracket_sign_flip);
    match cli.verb {
        Verb::Invariant { which, file } => {
            let d = commands::read_link(&read(&file)?)?;
            let name = match which {
                Which::Kauffman => "kauffman",
                Which::Homfly => "homfly",
            };
            commands::invariant(&d, name, style)
        }
        Verb::Jaeger { mode, file } => {
            let d = commands::read_link(&read(&file)?)?;
            Ok(match mode {
                Mode::Expand => commands::jaeger_expand(&d, style),
                Mode::Verify => commands::jaeger_verify(&d, style),
            })
        }
        Verb::Embed { n, big_n, suite } => {
            let s = match suite {
                Suite::Relations => "relations",
                Suite::Rank => "rank",
                Suite::Hecke => "hecke",
                Suite::ThetaRoutes => "theta-routes",
            };
            commands::embed(n, big_n, s, conv)
        }
        Verb::SchurCheck { n, d } => commands::schur_check(n, d),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(r) => {
            println!("{}", r.body);
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
