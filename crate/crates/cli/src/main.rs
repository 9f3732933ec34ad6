use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use eqcohom::bundled;
use eqcohom::{run_source, RunOptions, DEFAULT_MAX_DEGREE};
use eqcohom_core::verify::{DEFAULT_SEED, DEFAULT_TRIALS};

#[derive(Parser)]
#[command(name = "eqcohom", version, about = "Equivariant cohomology of cohomogeneity-one actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify, present and optionally verify one spec.
    Run {
        /// Path to a spec file, or bundled:NAME.
        spec: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
        /// Re-derive the series degreewise and run product checks.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the bundled specs.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

fn load(spec: &str) -> Result<String, String> {
    match spec.strip_prefix("bundled:") {
        Some(name) => bundled::bundled(name)
            .map(str::to_string)
            .ok_or_else(|| format!("no bundled spec named '{name}'")),
        None => std::fs::read_to_string(spec).map_err(|e| format!("cannot read {spec}: {e}")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            for name in bundled::names() {
                println!("{name}");
            }
            ExitCode::SUCCESS
        }
        Command::Run {
            spec,
            max_degree,
            verify,
            trials,
            seed,
            format,
            out,
        } => {
            let src = match load(&spec) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            };
            let opts = RunOptions {
                max_degree,
                verify,
                trials,
                seed,
            };
            let outcome = run_source(&src, &opts);
            if let Some(report) = &outcome.report {
                let text = match format {
                    Format::Text => report.to_text(),
                    Format::Machine => report.to_json(),
                };
                match &out {
                    Some(path) => {
                        if let Err(e) = std::fs::write(path, text) {
                            eprintln!("error: cannot write {}: {e}", path.display());
                            return ExitCode::from(1);
                        }
                    }
                    None => print!("{text}"),
                }
            }
            if let Some(m) = &outcome.message {
                eprintln!("{m}");
            }
            ExitCode::from(outcome.status.code() as u8)
        }
    }
}
