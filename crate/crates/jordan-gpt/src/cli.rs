//! Argument parsing and dispatch.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use jordan_gpt_core::tol::DEFAULT_TOL;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::descriptor::{Descriptor, DescriptorError};
use crate::report::Report;
use crate::suites::{self, Budget};

pub const SEED_ENV: &str = "JORDAN_GPT_SEED";

#[derive(Parser, Debug)]
#[command(
    name = "jordan-gpt",
    version,
    about = "Numerical checks for Jordan-algebraic probabilistic models"
)]
struct Cli {
    /// RNG seed; the JORDAN_GPT_SEED environment variable takes precedence.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Tolerance for checks without a fixed threshold.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Operations on model descriptors.
    Model {
        #[command(subcommand)]
        action: ModelAction,
    },
    /// Run one suite against a model descriptor.
    Check { suite: CheckSuite, file: PathBuf },
    /// Run the checks for one result on a Jordan model.
    Theorem {
        name: TheoremName,
        /// Matrix order, or `d` for spin factors.
        #[arg(long, default_value_t = 3)]
        rank: usize,
        /// real, complex, quaternion or spin.
        #[arg(long, default_value = "complex")]
        kind: String,
    },
    /// Worked counterexamples.
    Demo { name: DemoName },
    /// Run every suite and write the report.
    Report {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum ModelAction {
    Validate { file: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CheckSuite {
    Sharpness,
    Spectrality,
    Conjugate,
    Selfdual,
    Filters,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TheoremName {
    Lemma1,
    Lemma2,
    Thm1,
    Thm2,
    Thm3,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DemoName {
    Gbit,
}

/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(report) => {
            if report.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

fn seed(flag: Option<u64>) -> anyhow::Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{SEED_ENV}={v:?} is not an unsigned integer")),
        Err(std::env::VarError::NotPresent) => Ok(flag.unwrap_or(0)),
        Err(e) => Err(anyhow!("{SEED_ENV}: {e}")),
    }
}

fn load(path: &Path) -> anyhow::Result<Descriptor> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Descriptor::from_json(&text).map_err(|e| match e {
        DescriptorError::Json { .. } => anyhow!("{}: {e}", path.display()),
        other => anyhow!("{}: {other}", path.display()),
    })
}

fn execute(cli: Cli) -> anyhow::Result<Report> {
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return Err(anyhow!("--tol must be a positive number"));
    }
    let seed = seed(cli.seed)?;
    let tol = cli.tol;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = Budget::default();
    let (suite, checks, out) = match cli.command {
        Command::Model {
            action: ModelAction::Validate { file },
        } => {
            let model = load(&file)?.build()?;
            (
                "model validate".to_string(),
                suites::model_suite(&model, &mut rng, tol, budget),
                None,
            )
        }
        Command::Check { suite, file } => {
            let model = load(&file)?.build()?;
            let checks = match suite {
                CheckSuite::Sharpness => suites::sharpness_suite(&model, &mut rng, tol, budget),
                CheckSuite::Spectrality => {
                    suites::spectrality_suite(&model, &mut rng, tol, budget)?
                }
                CheckSuite::Conjugate => suites::conjugate_suite(&model, &mut rng, tol, budget)?,
                CheckSuite::Selfdual => suites::selfdual_suite(&model, &mut rng, tol, budget)?,
                CheckSuite::Filters => suites::filters_suite(&model, &mut rng, tol, budget)?,
            };
            let name = format!(
                "check {}",
                suite.to_possible_value().expect("named").get_name()
            );
            (name, checks, None)
        }
        Command::Theorem { name, rank, kind } => {
            let checks = match name {
                TheoremName::Thm3 => {
                    if kind != "complex" {
                        return Err(anyhow!("thm3 needs --kind complex (found {kind:?})"));
                    }
                    if rank < 2 {
                        return Err(anyhow!("thm3 needs --rank of at least 2"));
                    }
                    suites::thm3_suite(rank, &mut rng, tol, budget)?
                }
                _ => {
                    let model = suites::theorem_model(&kind, rank)?;
                    match name {
                        TheoremName::Lemma1 => suites::lemma1_suite(&model, &mut rng, tol, budget)?,
                        TheoremName::Lemma2 => suites::lemma2_suite(&model, &mut rng, budget)?,
                        TheoremName::Thm1 => suites::thm1_suite(&model, &mut rng, budget)?,
                        TheoremName::Thm2 => suites::thm2_suite(&model, &mut rng, tol, budget)?,
                        TheoremName::Thm3 => unreachable!(),
                    }
                }
            };
            let label = name
                .to_possible_value()
                .expect("named")
                .get_name()
                .to_string();
            (format!("theorem {label} {kind} {rank}"), checks, None)
        }
        Command::Demo {
            name: DemoName::Gbit,
        } => (
            "demo gbit".to_string(),
            suites::gbit_demo(&mut rng, tol, budget)?,
            None,
        ),
        Command::Report { out } => (
            "report".to_string(),
            suites::full_suite(&mut rng, tol)?,
            Some(out),
        ),
    };
    let report = Report::new(&suite, seed, tol, checks);
    let json = report.to_json();
    match out {
        Some(path) => {
            std::fs::write(&path, &json).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{json}"),
    }
    for c in report.failed() {
        eprintln!("FAIL {}: {}", c.name, c.claim);
    }
    Ok(report)
}
