use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rankagg_core::census::{CensusMethod, TABLE1_ALTS, TABLE1_INDS};

mod commands;
mod documents;
mod error;
mod repro;

use commands::{AggregateRule, VerifyRule};
use documents::{read_json, ProfileDocument, RankingsDocument};
use error::CliError;

#[derive(Parser)]
#[command(name = "rankagg", version, about = "Aggregation of incomplete rankings")]
struct Cli {
    /// Worker threads for census and axiom scans (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Brute,
    Symmetric,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a profile as IP, DP or PP, with a witness.
    Classify { profile: PathBuf },
    /// Aggregate a ranking profile with f* or f**.
    Aggregate {
        #[arg(long, value_enum)]
        rule: AggregateRule,
        /// Comma-separated alternatives, best first (default: document order).
        #[arg(long)]
        tiebreak: Option<String>,
        profile: PathBuf,
        rankings: PathBuf,
    },
    /// Check axioms over every ranking profile.
    Verify {
        #[arg(long, value_enum)]
        rule: VerifyRule,
        /// Comma-separated subset of tv,pc,wpc,iia,nc,nd.
        #[arg(long, default_value = "tv,pc,wpc,iia,nc,nd")]
        axioms: String,
        /// Complete individual for --rule dictatorship (default: the first).
        #[arg(long)]
        dictator: Option<String>,
        #[arg(long)]
        tiebreak: Option<String>,
        #[arg(long, default_value_t = rankagg_core::properties::DEFAULT_BUDGET)]
        budget: u128,
        profile: PathBuf,
    },
    /// Count IP/DP/PP profiles over all labelled assignments.
    Census {
        #[arg(long)]
        alts: usize,
        #[arg(long)]
        inds: usize,
        #[arg(long, value_enum, default_value = "brute")]
        method: Method,
        #[arg(long, default_value_t = rankagg_core::census::DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Share of profiles with a complete individual, on a grid.
    Table1 {
        #[arg(long, value_delimiter = ',', default_values_t = TABLE1_ALTS)]
        alts: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = TABLE1_INDS)]
        inds: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Cyclic ranking profile for a profile failing Condition 1.
    WitnessCyclic { profile: PathBuf },
    /// Recompute the bundled goldens and compare.
    Repro {
        /// Write the recomputed outputs into this directory instead.
        #[arg(long)]
        write: Option<PathBuf>,
    },
}

fn load_profile(path: &Path) -> Result<rankagg_core::profile::EvaluabilityProfile, CliError> {
    read_json::<ProfileDocument>(path)?.to_profile()
}

fn run(command: Command) -> Result<(String, bool), CliError> {
    let text = match command {
        Command::Classify { profile } => commands::classify_cmd(&load_profile(&profile)?)?,
        Command::Aggregate { rule, tiebreak, profile, rankings } => {
            let profile = load_profile(&profile)?;
            let rankings = read_json::<RankingsDocument>(&rankings)?.to_rankings(&profile)?;
            let tiebreak = commands::parse_tiebreak(&profile, tiebreak.as_deref())?;
            commands::aggregate_cmd(&profile, &rankings, rule, tiebreak)?
        }
        Command::Verify { rule, axioms, dictator, tiebreak, budget, profile } => {
            let profile = load_profile(&profile)?;
            let axioms = commands::parse_axioms(&axioms)?;
            let tiebreak = commands::parse_tiebreak(&profile, tiebreak.as_deref())?;
            commands::verify_cmd(&profile, rule, dictator.as_deref(), &axioms, tiebreak, budget)?
        }
        Command::Census { alts, inds, method, budget } => {
            let method = match method {
                Method::Brute => CensusMethod::Brute,
                Method::Symmetric => CensusMethod::Symmetric,
            };
            commands::census_cmd(alts, inds, method, budget)?
        }
        Command::Table1 { alts, inds, json } => commands::table1_cmd(&alts, &inds, json)?,
        Command::WitnessCyclic { profile } => commands::witness_cmd(&load_profile(&profile)?)?,
        Command::Repro { write: Some(dir) } => {
            for golden in repro::GOLDENS {
                let path = dir.join(golden.file);
                std::fs::write(&path, repro::regenerate(golden.file)?).map_err(|e| {
                    CliError::Validation(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            format!("wrote {} files to {}\n", repro::GOLDENS.len(), dir.display())
        }
        Command::Repro { write: None } => {
            let mut out = String::new();
            let ok = repro::run(&mut out)?;
            return Ok((out, ok));
        }
    };
    Ok((text, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot start {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let mut stdout = std::io::stdout().lock();
    match run(cli.command) {
        Ok((text, ok)) => {
            let _ = stdout.write_all(text.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if let CliError::Precondition { output: Some(out), .. } = &e {
                let _ = stdout.write_all(out.as_bytes());
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
