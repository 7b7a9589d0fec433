//! Seeded random trials for the numeric checks.
//!
//! Trial `i` draws from its own ChaCha stream `(seed, i)`, so a batch gives
//! the same samples whether trials run serially or in parallel. Samples that
//! hit a degenerate denominator or a divergent series are rejected and
//! redrawn from the same stream, at most [`MAX_DRAWS`] times.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    check_chu_vandermonde, check_ktw, proof_chain, relative_error, ChainReport, NumericConfig,
};
use crate::error::{Error, Result};

pub const MAX_DRAWS: u32 = 1000;

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn annulus(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Complex64 {
    let r = rng.gen_range(lo..=hi);
    let theta = rng.gen_range(0.0..TAU);
    Complex64::from_polar(r, theta)
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrialSummary {
    pub trials: u64,
    /// Error per accepted trial, in trial order.
    pub errors: Vec<f64>,
    pub max_error: f64,
    pub worst_trial: u64,
    /// Draws discarded by the genericity and convergence guards.
    pub rejections: u64,
}

fn is_rejection(e: &Error) -> bool {
    matches!(
        e,
        Error::DegenerateDenominator { .. } | Error::NonConvergent(_)
    )
}

/// Runs `trials` accepted samples. `attempt` draws parameters from the
/// stream and evaluates them; guard failures count as rejections.
fn run<T>(
    trials: u64,
    seed: u64,
    mut attempt: impl FnMut(&mut ChaCha8Rng) -> Result<(f64, T)>,
) -> Result<(TrialSummary, Vec<T>)> {
    let mut errors = Vec::with_capacity(trials as usize);
    let mut extras = Vec::with_capacity(trials as usize);
    let mut rejections = 0;
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let mut accepted = None;
        for _ in 0..MAX_DRAWS {
            match attempt(&mut rng) {
                Ok(v) => {
                    accepted = Some(v);
                    break;
                }
                Err(e) if is_rejection(&e) => rejections += 1,
                Err(e) => return Err(e),
            }
        }
        let (err, extra) = accepted.ok_or(Error::SamplingExhausted {
            trial,
            attempts: MAX_DRAWS,
        })?;
        errors.push(err);
        extras.push(extra);
    }
    let (worst_trial, max_error) =
        errors
            .iter()
            .copied()
            .enumerate()
            .fold(
                (0, 0.0f64),
                |best, (i, e)| if e > best.1 { (i, e) } else { best },
            );
    Ok((
        TrialSummary {
            trials,
            errors,
            max_error,
            worst_trial: worst_trial as u64,
            rejections,
        },
        extras,
    ))
}

/// Chu–Vandermonde at random `a, c` with `|a|, |c| ∈ [0.2, 1.5]`,
/// `|q| ∈ [0.1, 0.6]` and `n ≤ 8`.
pub fn run_chu_trials(trials: u64, seed: u64, cfg: &NumericConfig) -> Result<TrialSummary> {
    run(trials, seed, |rng| {
        let a = annulus(rng, 0.2, 1.5);
        let c = annulus(rng, 0.2, 1.5);
        let q = annulus(rng, 0.1, 0.6);
        let n = rng.gen_range(0..=8u32);
        check_chu_vandermonde(a, c, q, n, cfg).map(|e| (e, ()))
    })
    .map(|(s, _)| s)
}

/// Kummer–Thomae–Whipple at random parameters with `|a|, …, |e| ∈
/// [0.2, 1.5]` and `|q| ∈ [0.1, 0.6]`, keeping only draws where both
/// series arguments have modulus at most 0.9.
pub fn run_ktw_trials(trials: u64, seed: u64, cfg: &NumericConfig) -> Result<TrialSummary> {
    run(trials, seed, |rng| {
        let [a, b, c, d, e] = std::array::from_fn(|_| annulus(rng, 0.2, 1.5));
        let q = annulus(rng, 0.1, 0.6);
        let (zl, zr) = ((d * e / (a * b * c)).norm(), (e / a).norm());
        if zl > 0.9 || zr > 0.9 {
            return Err(Error::NonConvergent(format!(
                "|de/abc| = {zl:.3}, |e/a| = {zr:.3}"
            )));
        }
        check_ktw(a, b, c, d, e, q, cfg).map(|err| (err, ()))
    })
    .map(|(s, _)| s)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainTrials {
    /// Max pairwise deviation across the nine lines, per trial.
    pub summary: TrialSummary,
    /// Deviation between the defining sum and the closed form alone.
    pub endpoint_max_error: f64,
    pub ktw_step_max_error: f64,
    pub chu_step_max_error: f64,
    pub first: ChainReport,
    pub worst: ChainReport,
}

/// The derivation chain at random `α` (`|α| ≤ 1.5`), `β` (`|β| ∈ [0.2,
/// 1.5]`), `|q| ∈ [0.1, 0.6]` and `1 ≤ t ≤ 6`, with `|βq^{t+1}| ≤ 0.9` so
/// the transformation step can also be checked standalone.
pub fn run_chain_trials(trials: u64, seed: u64, cfg: &NumericConfig) -> Result<ChainTrials> {
    if trials == 0 {
        return Err(Error::Inadmissible("at least one trial is required".into()));
    }
    let (summary, reports) = run(trials, seed, |rng| {
        let alpha = annulus(rng, 0.0, 1.5);
        let beta = annulus(rng, 0.2, 1.5);
        let q = annulus(rng, 0.1, 0.6);
        let t = rng.gen_range(1..=6u32);
        let arg = (beta * q.powu(t + 1)).norm();
        if arg > 0.9 {
            return Err(Error::NonConvergent(format!("|βq^(t+1)| = {arg:.3}")));
        }
        let rep = proof_chain(alpha, beta, q, t, cfg)?;
        Ok((rep.max_pairwise_deviation, rep))
    })?;
    let max_of = |f: &dyn Fn(&ChainReport) -> Option<f64>| {
        reports.iter().filter_map(f).fold(0.0f64, f64::max)
    };
    Ok(ChainTrials {
        endpoint_max_error: max_of(&|r| Some(relative_error(r.values[0], r.values[8]))),
        ktw_step_max_error: max_of(&|r| r.ktw_step_error),
        chu_step_max_error: max_of(&|r| r.chu_step_error),
        first: reports[0].clone(),
        worst: reports[summary.worst_trial as usize].clone(),
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_independent_and_reproducible() {
        let a: f64 = trial_rng(7, 3).gen();
        let b: f64 = trial_rng(7, 3).gen();
        let c: f64 = trial_rng(7, 4).gen();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn small_batches() {
        let cfg = NumericConfig::default();
        let chu = run_chu_trials(10, 1, &cfg).unwrap();
        assert_eq!(chu.errors.len(), 10);
        assert!(chu.max_error < 1e-10);
        let ktw = run_ktw_trials(5, 1, &cfg).unwrap();
        assert!(ktw.max_error < 1e-7);
        let chain = run_chain_trials(5, 1, &cfg).unwrap();
        assert!(chain.summary.max_error < 1e-8);
        assert_eq!(chain.first.values.len(), 9);
    }

    #[test]
    fn same_seed_same_summary() {
        let cfg = NumericConfig::default();
        assert_eq!(
            run_chu_trials(8, 42, &cfg).unwrap(),
            run_chu_trials(8, 42, &cfg).unwrap()
        );
    }

    #[test]
    fn zero_chain_trials_rejected() {
        assert!(run_chain_trials(0, 1, &NumericConfig::default()).is_err());
    }
}
