//! `qent`: entanglement detection, measures and three-qubit classification
//! for density matrices stored as JSON state files.
//!
//! Exit codes: 0 success, 1 usage, 2 parse, 3 validation (including a
//! failed golden diff in `reproduce`).

pub mod commands;
pub mod error;
pub mod golden;
pub mod report;
pub mod state_file;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use qent_core::qmat::tol::DECISION_SLACK;
use qent_core::qmat::Tolerances;

use crate::commands::{DetectSelection, MeasureSelection};
use crate::error::{CliError, CliResult};
use crate::report::Report;

pub use crate::state_file::StateFile;

#[derive(Debug, Parser)]
#[command(
    name = "qent",
    version,
    about = "Entanglement analysis of small density matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Slack applied to every threshold decision.
    #[arg(long, default_value_t = DECISION_SLACK)]
    pub tol: f64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run entanglement tests on a bipartite state (PPT, realignment and
    /// reduction when no test is named).
    Detect {
        file: PathBuf,
        #[arg(long)]
        ppt: bool,
        #[arg(long)]
        realign: bool,
        #[arg(long)]
        reduce: bool,
        #[arg(long)]
        criterion1: bool,
        #[arg(long)]
        criterion2: bool,
        #[arg(long)]
        criterion3: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate entanglement and coherence measures (every applicable one
    /// when none is named).
    Measure {
        file: PathBuf,
        #[arg(long)]
        negativity: bool,
        #[arg(long)]
        structured: bool,
        #[arg(long)]
        concurrence: bool,
        #[arg(long)]
        clb: bool,
        #[arg(long)]
        coherence: bool,
        #[arg(long)]
        tangle: bool,
        #[arg(long = "three-pi")]
        three_pi: bool,
        #[command(flatten)]
        common: Common,
    },
    /// SLOCC class of a three-qubit state; with --canonical also the
    /// GHZ-subclass witness table.
    Classify3 {
        #[arg(required_unless_present = "canonical", conflicts_with = "canonical")]
        file: Option<PathBuf>,
        #[arg(long, num_args = 5, value_names = ["L0", "L1", "L2", "L3", "L4"], allow_negative_numbers = true)]
        canonical: Option<Vec<f64>>,
        #[arg(long, default_value_t = 0.0, requires = "canonical")]
        theta: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Regenerate a dataset and diff it against the golden copy; --out
    /// receives the regenerated data as CSV.
    Reproduce {
        id: String,
        #[command(flatten)]
        common: Common,
    },
}

fn tolerances(tol: f64) -> CliResult<Tolerances> {
    if !tol.is_finite() || tol < 0.0 {
        return Err(CliError::Usage(format!(
            "--tol {tol} must be a nonnegative number"
        )));
    }
    Ok(Tolerances::with_slack(tol))
}

fn write_to(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn emit(report: &Report, out: Option<&Path>) -> CliResult<()> {
    let text = report.to_json();
    match out {
        Some(p) => write_to(p, &text),
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

pub fn execute(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Detect {
            file,
            ppt,
            realign,
            reduce,
            criterion1,
            criterion2,
            criterion3,
            common,
        } => {
            let tol = tolerances(common.tol)?;
            let (rho, label) = commands::load_state(&file, &tol)?;
            let sel = DetectSelection {
                ppt,
                realign,
                reduce,
                criterion1,
                criterion2,
                criterion3,
            };
            emit(
                &commands::detect(&rho, &label, sel, &tol)?,
                common.out.as_deref(),
            )
        }
        Command::Measure {
            file,
            negativity,
            structured,
            concurrence,
            clb,
            coherence,
            tangle,
            three_pi,
            common,
        } => {
            let tol = tolerances(common.tol)?;
            let (rho, label) = commands::load_state(&file, &tol)?;
            let sel = MeasureSelection {
                negativity,
                structured,
                concurrence,
                clb,
                coherence,
                tangle,
                three_pi,
            };
            emit(
                &commands::measure(&rho, &label, sel, &tol)?,
                common.out.as_deref(),
            )
        }
        Command::Classify3 {
            file,
            canonical,
            theta,
            common,
        } => {
            let tol = tolerances(common.tol)?;
            let report = match (file, canonical) {
                (_, Some(l)) => {
                    let l: [f64; 5] = l
                        .try_into()
                        .map_err(|_| CliError::Usage("--canonical takes five values".into()))?;
                    commands::classify3_canonical(l, theta, &tol)?
                }
                (Some(f), None) => {
                    let (rho, label) = commands::load_state(&f, &tol)?;
                    commands::classify3_state(&rho, &label, &tol)?
                }
                (None, None) => {
                    return Err(CliError::Usage("give a state file or --canonical".into()))
                }
            };
            emit(&report, common.out.as_deref())
        }
        Command::Reproduce { id, common } => {
            let tol = tolerances(common.tol)?;
            let (report, data, ok) = commands::reproduce(&id, &tol)?;
            if let Some(p) = &common.out {
                write_to(p, &commands::dataset_csv(&data))?;
            }
            emit(&report, None)?;
            if ok {
                Ok(())
            } else {
                Err(CliError::Validation(format!(
                    "{id} differs from the golden data"
                )))
            }
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("qent: {e}");
            e.exit_code()
        }
    }
}
