use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use socle_core::brute::{BruteConfig, DEFAULT_BUDGET};
use socle_core::finrank::{dim_mixed, MixedWeight};
use socle_core::socle::{simple_length, socle_layers, tensor_length, SocleReport};
use socle_core::symfunc::{coproduct, lr_coefficient};
use socle_core::verify::{self, Suite, VerifyOptions, DEFAULT_SEED};
use socle_core::{Error, Partition};

#[derive(Parser, Debug)]
#[command(
    name = "socle",
    version,
    about = "Socle filtrations and composition lengths of tensor modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Socle layers of W_{λ,μ}, bottom-up
    Socle {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Composition length of (V*)^{⊗m} ⊗ V^{⊗n}
    Length {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Composition length of W_{λ,μ}
    SimpleLength {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// Littlewood–Richardson coefficient c^λ_{μν}
    Lr {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
    },
    /// Coproduct of s_λ in the Schur basis
    Coproduct {
        lambda: Partition,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Dimension of the gl(rank) mixed tensor module labelled (λ, μ)
    Dim {
        #[arg(long)]
        rank: usize,
        /// Dual-side partition
        #[arg(long)]
        lambda: Partition,
        /// Primal-side partition
        #[arg(long, default_value = "-")]
        mu: Partition,
    },
    /// Run a self-check suite: hopf, branching, brute or all
    Verify {
        suite: Suite,
        /// Cap on tensor basis words for explicit modules
        #[arg(long, env = "SOCLE_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Seed for randomized evaluation points
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn render_socle(report: &SocleReport) -> String {
    let mut out = String::new();
    for (k, layer) in report.layers.iter().enumerate() {
        let _ = writeln!(out, "layer {k}:");
        for c in layer {
            let _ = writeln!(
                out,
                "  {} x (V*/V_*)[{}] ⊗ V[{}; {}]",
                c.multiplicity, c.alpha, c.beta, c.mu
            );
        }
    }
    out
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string(value)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Socle { lambda, mu, format } => {
            let report = socle_layers(&lambda, &mu);
            match format {
                Format::Text => Ok(render_socle(&report)),
                Format::Json => to_json(&report),
            }
        }
        Command::Length { m, n } => Ok(format!("{}\n", tensor_length(m, n))),
        Command::SimpleLength { lambda, mu } => Ok(format!("{}\n", simple_length(&lambda, &mu))),
        Command::Lr { lambda, mu, nu } => Ok(format!("{}\n", lr_coefficient(&lambda, &mu, &nu))),
        Command::Coproduct { lambda, format } => {
            let delta = coproduct(&lambda);
            match format {
                Format::Json => to_json(&delta),
                Format::Text => {
                    let mut terms: Vec<_> = delta.terms().collect();
                    terms.sort_by(|a, b| (a.0.size(), a.0, a.1).cmp(&(b.0.size(), b.0, b.1)));
                    let mut out = String::new();
                    for (l, r, c) in terms {
                        let _ = writeln!(out, "{c} {l} ⊗ {r}");
                    }
                    Ok(out)
                }
            }
        }
        Command::Dim { rank, lambda, mu } => {
            let w = MixedWeight::new(lambda, mu, rank)?;
            Ok(format!("{}\n", dim_mixed(&w)))
        }
        Command::Verify {
            suite,
            budget,
            seed,
            format,
        } => {
            let brute = BruteConfig::with_budget(budget);
            let token = brute.cancel.clone();
            if let Err(e) = ctrlc::set_handler(move || token.cancel()) {
                eprintln!("warning: cannot install interrupt handler: {e}");
            }
            let checks = verify::run(suite, &VerifyOptions::new(seed, brute))?;
            let out = match format {
                Format::Json => to_json(&checks)?,
                Format::Text => {
                    let mut out = String::new();
                    for c in &checks {
                        let status = if c.passed { "PASS" } else { "FAIL" };
                        let _ = writeln!(out, "{status} {} ({})", c.name, c.detail);
                    }
                    out
                }
            };
            let failed = checks.iter().filter(|c| !c.passed).count();
            if failed > 0 {
                print!("{out}");
                return Err(Failure::Verification(format!("{failed} check(s) failed")));
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("socle: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("socle: {msg}");
            ExitCode::from(2)
        }
    }
}
