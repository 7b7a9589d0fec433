//! Seeded numeric trials of the two hypergeometric lemmas and of the
//! derivation chain.

use clap::ValueEnum;
use num_complex::Complex64;
use qpl_core::numeric::{
    run_chain_trials, run_chu_trials, run_ktw_trials, NumericConfig, TrialSummary,
};
use serde_json::{json, Value};

use crate::report::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Lemma {
    /// terminating q-Chu-Vandermonde sum
    Chu,
    /// q-Kummer-Thomae-Whipple 3phi2 transformation
    Ktw,
    /// all nine lines of the closed-form derivation
    Chain,
}

impl Lemma {
    pub fn name(self) -> &'static str {
        match self {
            Lemma::Chu => "chu",
            Lemma::Ktw => "ktw",
            Lemma::Chain => "chain",
        }
    }

    pub fn default_tol(self) -> f64 {
        match self {
            Lemma::Chu => 1e-10,
            Lemma::Ktw => 1e-7,
            Lemma::Chain => 1e-8,
        }
    }
}

pub fn validate(trials: u64, tol: f64) -> Result<(), String> {
    if trials == 0 {
        return Err("--trials must be at least 1".into());
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(format!("--tol must be a positive number, got {tol}"));
    }
    Ok(())
}

fn complex(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn summarize(rep: &mut VerificationReport, s: &TrialSummary, tol: f64) {
    rep.observe("max_error", s.max_error)
        .observe("worst_trial", s.worst_trial)
        .observe("rejections", s.rejections);
    // written so that a NaN error counts as a failure
    let passed = s.max_error < tol;
    if !passed {
        rep.fail(
            format!("trial {}", s.worst_trial),
            format!("error < {tol:e}"),
            format!("{:e}", s.max_error),
        );
    }
}

pub fn run_lemma(lemma: Lemma, trials: u64, seed: u64, tol: f64) -> VerificationReport {
    let mut rep = VerificationReport::new(format!("lemma.{}", lemma.name()), trials);
    rep.param("lemma", lemma.name())
        .param("seed", seed)
        .param("tol", tol)
        .param("trials", trials);
    let cfg = NumericConfig::default();
    let outcome = match lemma {
        Lemma::Chu => run_chu_trials(trials, seed, &cfg).map(|s| summarize(&mut rep, &s, tol)),
        Lemma::Ktw => run_ktw_trials(trials, seed, &cfg).map(|s| summarize(&mut rep, &s, tol)),
        Lemma::Chain => run_chain_trials(trials, seed, &cfg).map(|c| {
            summarize(&mut rep, &c.summary, tol);
            rep.observe("endpoint_max_error", c.endpoint_max_error)
                .observe("ktw_step_max_error", c.ktw_step_max_error)
                .observe("chu_step_max_error", c.chu_step_max_error)
                .observe(
                    "chain_values",
                    c.first
                        .values
                        .iter()
                        .copied()
                        .map(complex)
                        .collect::<Vec<_>>(),
                )
                .observe(
                    "worst_chain_values",
                    c.worst
                        .values
                        .iter()
                        .copied()
                        .map(complex)
                        .collect::<Vec<_>>(),
                );
        }),
    };
    if let Err(e) = outcome {
        rep.error(e);
    }
    rep
}
