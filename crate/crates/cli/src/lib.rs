//! Command-line harness for the identity, lemma and table checks.
//!
//! Every flag can also be set through an environment variable with the
//! `QPL_` prefix (`--n-max` is `QPL_N_MAX`). Exit codes: 0 when every
//! check passed, 1 when one failed, 2 on usage or runtime errors.

pub mod identity;
pub mod lemma;
pub mod report;
pub mod table;

use std::time::Instant;

use clap::builder::BoolishValueParser;
use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};

use identity::Identity;
use lemma::Lemma;
use report::VerificationReport;
use table::{Family, Source, TableFormat};

#[derive(Debug, Parser)]
#[command(name = "qpl", version, about = "Verify q-series partition identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a generating-function identity as exact series.
    VerifyIdentity(IdentityArgs),
    /// Run seeded numeric trials of a lemma or of the derivation chain.
    Lemma(LemmaArgs),
    /// Print partition counts.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    #[arg(long, env = "QPL_IDENTITY", value_enum)]
    pub identity: Identity,
    #[arg(long, env = "QPL_T")]
    pub t: u32,
    /// Compare coefficients of q^0 through q^order.
    #[arg(long, env = "QPL_ORDER", default_value_t = 200)]
    pub order: u32,
    #[arg(long, env = "QPL_MAX_ORDER", default_value_t = 500)]
    pub max_order: u32,
    /// Cross-check against the enumerator for n up to this bound.
    #[arg(long, env = "QPL_ORACLE_N", default_value_t = 60)]
    pub oracle_n: u64,
    #[arg(long, env = "QPL_FORMAT", value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
    /// Fill in elapsed_ms (otherwise 0, so output is reproducible).
    #[arg(long, env = "QPL_TIMINGS", action = ArgAction::SetTrue, value_parser = BoolishValueParser::new())]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct LemmaArgs {
    #[arg(long, env = "QPL_LEMMA", value_enum)]
    pub lemma: Lemma,
    #[arg(long, env = "QPL_TRIALS", default_value_t = 100)]
    pub trials: u64,
    #[arg(long, env = "QPL_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Pass threshold for the max relative error; defaults to 1e-10 (chu),
    /// 1e-7 (ktw) or 1e-8 (chain).
    #[arg(long, env = "QPL_TOL")]
    pub tol: Option<f64>,
    #[arg(long, env = "QPL_FORMAT", value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
    #[arg(long, env = "QPL_TIMINGS", action = ArgAction::SetTrue, value_parser = BoolishValueParser::new())]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, env = "QPL_FAMILY", value_enum)]
    pub family: Family,
    #[arg(long, env = "QPL_T")]
    pub t: u64,
    #[arg(long, env = "QPL_N_MAX")]
    pub n_max: u64,
    #[arg(long, env = "QPL_FORMAT", value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
    #[arg(long, env = "QPL_SOURCE", value_enum, default_value_t = Source::Oracle)]
    pub source: Source,
    #[arg(long, env = "QPL_MAX_ORDER", default_value_t = 500)]
    pub max_order: u64,
}

/// What the binary prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn usage(msg: String) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: 2,
        }
    }
}

fn render(mut rep: VerificationReport, format: ReportFormat, start: Option<Instant>) -> Outcome {
    if let Some(start) = start {
        rep.elapsed_ms = start.elapsed().as_millis() as u64;
    }
    let stderr = match rep.observations.get("error") {
        Some(e) => format!("error: {}\n", e.as_str().unwrap_or_default()),
        None => String::new(),
    };
    let mut stdout = match format {
        ReportFormat::Json => rep.to_json(),
        ReportFormat::Text => rep.to_text(),
    };
    if !stdout.ends_with('\n') {
        stdout.push('\n');
    }
    Outcome {
        stdout,
        stderr,
        code: rep.status.exit_code(),
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::VerifyIdentity(a) => {
            if let Err(msg) = identity::validate(a.identity, a.t, a.order, a.max_order) {
                return Outcome::usage(msg);
            }
            let start = Instant::now();
            let rep = identity::verify_identity(a.identity, a.t, a.order, a.oracle_n);
            render(rep, a.format, a.timings.then_some(start))
        }
        Command::Lemma(a) => {
            let tol = a.tol.unwrap_or(a.lemma.default_tol());
            if let Err(msg) = lemma::validate(a.trials, tol) {
                return Outcome::usage(msg);
            }
            let start = Instant::now();
            let rep = lemma::run_lemma(a.lemma, a.trials, a.seed, tol);
            render(rep, a.format, a.timings.then_some(start))
        }
        Command::Table(a) => {
            let built = table::build_table(a.family, a.t, a.n_max, a.source, a.max_order);
            let table = match built {
                Ok(t) => t,
                Err(msg) => return Outcome::usage(msg),
            };
            let stdout = match a.format {
                TableFormat::Csv => table.to_csv(),
                TableFormat::Json => match table.to_json() {
                    Ok(s) => s + "\n",
                    Err(msg) => return Outcome::usage(msg),
                },
            };
            let code = if table.all_match() { 0 } else { 1 };
            Outcome {
                stdout,
                stderr: if code == 0 {
                    String::new()
                } else {
                    "sources disagree\n".into()
                },
                code,
            }
        }
    }
}
