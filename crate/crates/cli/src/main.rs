use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand};
use sigmabeta::commands::{
    cmd_canext, cmd_diagram, cmd_dual, cmd_verify, load, Format, VerifyTarget,
};
use sigmabeta::{exit, CliError};
use sigmabeta_core::harness::SamplePolicy;

/// Finite Stone duality, canonical extensions and Stone-Čech lifts, with
/// exhaustive verification that the two extension routes agree.
#[derive(Debug, Parser)]
#[command(name = "sigmabeta", version)]
struct Cli {
    /// Input document (JSON). Defaults to the bundled sample.
    #[arg(long, short, global = true, value_name = "PATH")]
    doc: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the ultrafilter dual of an algebra.
    Dual {
        algebra: String,
        /// Hasse diagram with ultrafilters, as DOT.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Summarize the canonical extension of an algebra.
    Canext {
        algebra: String,
        #[arg(long)]
        json: bool,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Verify one homomorphism, or the whole suite with --all.
    Verify {
        hom: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, value_name = "K")]
        max_atoms: Option<usize>,
        #[arg(long, value_name = "S")]
        seed: Option<u64>,
        #[arg(long, value_name = "N")]
        count: Option<usize>,
        /// Report JSON destination; stdout when absent.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Record per-instance wall-clock time (reports stop being reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Write the duality diagram of a homomorphism as DOT.
    Diagram {
        hom: String,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

fn usage(message: &str) -> CliError {
    let mut cmd = Cli::command();
    cmd.build();
    let usage = cmd
        .find_subcommand_mut("verify")
        .map(|c| c.render_usage().to_string())
        .unwrap_or_default();
    CliError::Usage(format!("{message}\n\n{usage}"))
}

fn verify_target(
    hom: Option<String>,
    all: bool,
    max_atoms: Option<usize>,
    seed: Option<u64>,
    count: Option<usize>,
) -> Result<VerifyTarget, CliError> {
    match (hom, all) {
        (Some(_), true) => Err(usage("give either a hom name or --all, not both")),
        (None, false) => Err(usage("give a hom name or --all")),
        (Some(h), false) => {
            if max_atoms.is_some() || seed.is_some() || count.is_some() {
                return Err(usage("--max-atoms, --seed and --count go with --all"));
            }
            Ok(VerifyTarget::Hom(h))
        }
        (None, true) => {
            let max_atoms = max_atoms.ok_or_else(|| usage("--all needs --max-atoms"))?;
            let policy = match (seed, count) {
                (None, None) => SamplePolicy::Exhaustive,
                (Some(seed), Some(count)) => SamplePolicy::Seeded { seed, count },
                _ => return Err(usage("--seed and --count go together")),
            };
            Ok(VerifyTarget::All { max_atoms, policy })
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let doc_path = cli.doc.as_deref();
    match cli.command {
        Command::Dual {
            algebra,
            dot,
            json,
            out,
        } => {
            let format = match (dot, json) {
                (true, _) => Format::Dot,
                (_, true) => Format::Json,
                _ => Format::Text,
            };
            let input = load(doc_path)?;
            emit(&cmd_dual(&input.doc, &algebra, format)?, out.as_deref())?;
        }
        Command::Canext { algebra, json, out } => {
            let input = load(doc_path)?;
            let format = if json { Format::Json } else { Format::Text };
            emit(&cmd_canext(&input.doc, &algebra, format)?, out.as_deref())?;
        }
        Command::Verify {
            hom,
            all,
            max_atoms,
            seed,
            count,
            out,
            timing,
        } => {
            let target = verify_target(hom, all, max_atoms, seed, count)?;
            let input = load(doc_path)?;
            let (report, passed) = cmd_verify(&input, &target, timing)?;
            emit(&report, out.as_deref())?;
            if !passed {
                eprintln!("counterexample found; see the report");
            }
            return Ok(exit::for_verdict(passed));
        }
        Command::Diagram { hom, out } => {
            let input = load(doc_path)?;
            emit(&cmd_diagram(&input.doc, &hom)?, out.as_deref())?;
        }
    }
    Ok(exit::OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(exit::OK);
        }
        Err(e) => {
            let rendered = e.render().to_string();
            eprint!("{rendered}");
            if !rendered.contains("Usage:") {
                eprintln!("\n{}", Cli::command().render_usage());
            }
            return ExitCode::from(exit::USAGE);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
