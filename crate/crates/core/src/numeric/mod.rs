//! Complex floating-point q-Pochhammer symbols and basic hypergeometric
//! series, plus the numeric identity checks built on them.
//!
//! Errors are reported as `|lhs - rhs| / max(1, |rhs|)` throughout.

mod chain;
mod eval;
mod lemmas;
mod phi;
mod trials;

pub use chain::{closed_form_num, proof_chain, s_sum, ChainReport, CHAIN_LINES};
pub use eval::eval_series;
pub use lemmas::{check_chu_vandermonde, check_ktw};
pub use phi::{phi, phi_detailed, PhiValue, QParam};
pub use trials::{
    run_chain_trials, run_chu_trials, run_ktw_trials, trial_rng, ChainTrials, TrialSummary,
    MAX_DRAWS,
};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerances shared by every numeric routine.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericConfig {
    /// Smallest admissible magnitude of a denominator factor.
    pub floor: f64,
    /// Relative size below which a series term counts as negligible.
    pub tail_eps: f64,
    /// Consecutive negligible terms required before an infinite sum stops.
    pub streak: usize,
    pub max_terms: usize,
}

impl Default for NumericConfig {
    fn default() -> Self {
        Self {
            floor: 1e-3,
            tail_eps: 1e-17,
            streak: 5,
            max_terms: 20_000,
        }
    }
}

/// Length of a q-Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(u32),
    Infinite,
}

impl From<u32> for Length {
    fn from(n: u32) -> Self {
        Length::Finite(n)
    }
}

/// `(a; q)_n`. For `n = ∞` the product stops once `|a q^k|` drops below
/// `tail_eps · (1 - |q|)`, which bounds the relative error of the
/// neglected tail by roughly `tail_eps`.
pub fn pochhammer_num(a: Complex64, q: Complex64, n: impl Into<Length>) -> Complex64 {
    pochhammer_num_with(a, q, n.into(), NumericConfig::default().tail_eps)
}

pub fn pochhammer_num_with(a: Complex64, q: Complex64, n: Length, tail_eps: f64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    match n {
        Length::Finite(n) => {
            let mut acc = one;
            let mut x = a;
            for _ in 0..n {
                acc *= one - x;
                x *= q;
            }
            acc
        }
        Length::Infinite => {
            let qn = q.norm();
            assert!(qn < 1.0, "infinite q-Pochhammer needs |q| < 1, got {qn}");
            let cutoff = tail_eps * (1.0 - qn);
            let mut acc = one;
            let mut x = a;
            while x.norm() >= cutoff {
                acc *= one - x;
                x *= q;
            }
            acc
        }
    }
}

/// Returns `value` or a `DegenerateDenominator` error if it is too small to
/// divide by.
pub(crate) fn guard(
    value: Complex64,
    what: impl FnOnce() -> String,
    floor: f64,
) -> Result<Complex64> {
    let magnitude = value.norm();
    if magnitude < floor {
        return Err(Error::DegenerateDenominator {
            what: what(),
            magnitude,
            floor,
        });
    }
    Ok(value)
}

/// `(a; q)_n` used as a denominator: every factor is guarded.
pub(crate) fn guarded_pochhammer(
    a: Complex64,
    q: Complex64,
    n: u32,
    floor: f64,
    label: &str,
) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let mut acc = one;
    let mut x = a;
    for k in 0..n {
        acc *= guard(one - x, || format!("{label}: factor k = {k}"), floor)?;
        x *= q;
    }
    Ok(acc)
}

/// Infinite Pochhammer used as a denominator.
pub(crate) fn guarded_pochhammer_inf(
    a: Complex64,
    q: Complex64,
    cfg: &NumericConfig,
    label: &str,
) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let cutoff = cfg.tail_eps * (1.0 - q.norm());
    let mut acc = one;
    let mut x = a;
    let mut k = 0;
    while x.norm() >= cutoff {
        acc *= guard(one - x, || format!("{label}: factor k = {k}"), cfg.floor)?;
        x *= q;
        k += 1;
    }
    Ok(acc)
}

/// Relative error convention shared by all checks.
pub fn relative_error(lhs: Complex64, rhs: Complex64) -> f64 {
    (lhs - rhs).norm() / rhs.norm().max(1.0)
}
