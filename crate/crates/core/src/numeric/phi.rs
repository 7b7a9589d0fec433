use num_complex::Complex64;

use super::{guard, NumericConfig};
use crate::error::{Error, Result};

/// A series parameter: either a general complex number or an exact power
/// of the base. Exact powers let `q^{-n}` terminate a series at exactly
/// `n + 1` terms instead of relying on floating-point cancellation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum QParam {
    Value(Complex64),
    QPow(i64),
}

impl QParam {
    pub fn value(&self, q: Complex64) -> Complex64 {
        match *self {
            QParam::Value(v) => v,
            QParam::QPow(k) => q.powi(k as i32),
        }
    }

    /// `1 - self · q^k`, exactly zero when `self = q^{-k}`.
    fn factor(&self, q: Complex64, k: usize) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        match *self {
            QParam::Value(v) => one - v * q.powi(k as i32),
            QParam::QPow(e) if e + k as i64 == 0 => Complex64::new(0.0, 0.0),
            QParam::QPow(e) => one - q.powi((e + k as i64) as i32),
        }
    }

    /// Number of nonzero terms forced by a parameter `q^{-n}`, `n ≥ 0`.
    fn terminates_after(&self) -> Option<usize> {
        match *self {
            QParam::QPow(e) if e <= 0 => Some((-e) as usize),
            _ => None,
        }
    }
}

impl From<Complex64> for QParam {
    fn from(v: Complex64) -> Self {
        QParam::Value(v)
    }
}

/// Value of a series together with how it was obtained.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhiValue {
    pub value: Complex64,
    pub terms: usize,
    pub terminating: bool,
    /// Geometric estimate of the neglected tail (zero when terminating).
    pub tail_bound: f64,
}

/// `_{r+1}φ_r(a_0, …, a_r; b_1, …, b_r; q, z)`.
pub fn phi(
    numerator: &[QParam],
    denominator: &[QParam],
    q: Complex64,
    z: Complex64,
    cfg: &NumericConfig,
) -> Result<Complex64> {
    phi_detailed(numerator, denominator, q, z, cfg).map(|v| v.value)
}

/// Sums the series term by term using the ratio of consecutive terms.
///
/// A numerator parameter `q^{-n}` makes the sum finite (`n + 1` terms).
/// Otherwise `|z| < 1` is required, and summation stops once `cfg.streak`
/// consecutive terms are below `cfg.tail_eps` relative to the partial sum.
pub fn phi_detailed(
    numerator: &[QParam],
    denominator: &[QParam],
    q: Complex64,
    z: Complex64,
    cfg: &NumericConfig,
) -> Result<PhiValue> {
    let stop = numerator.iter().filter_map(QParam::terminates_after).min();
    if stop.is_none() && z.norm() >= 1.0 {
        return Err(Error::NonConvergent(format!(
            "non-terminating series with |z| = {} >= 1",
            z.norm()
        )));
    }
    if q.norm() >= 1.0 {
        return Err(Error::NonConvergent(format!("|q| = {} >= 1", q.norm())));
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut quiet = 0;
    let limit = stop.unwrap_or(cfg.max_terms);
    for k in 0..limit {
        let mut num = z;
        for a in numerator {
            num *= a.factor(q, k);
        }
        let mut den = guard(
            Complex64::new(1.0, 0.0) - q.powi(k as i32 + 1),
            || format!("(q;q) factor at k = {k}"),
            cfg.floor,
        )?;
        for (j, b) in denominator.iter().enumerate() {
            den *= guard(
                b.factor(q, k),
                || format!("denominator parameter {j} at k = {k}"),
                cfg.floor,
            )?;
        }
        term = term * num / den;
        sum += term;
        if stop.is_none() {
            let negligible = term.norm() <= cfg.tail_eps * sum.norm() || term.norm() < 1e-300;
            quiet = if negligible { quiet + 1 } else { 0 };
            if quiet >= cfg.streak {
                let zn = z.norm();
                return Ok(PhiValue {
                    value: sum,
                    terms: k + 2,
                    terminating: false,
                    tail_bound: term.norm() * zn / (1.0 - zn),
                });
            }
        }
    }
    match stop {
        Some(n) => Ok(PhiValue {
            value: sum,
            terms: n + 1,
            terminating: true,
            tail_bound: 0.0,
        }),
        None => Err(Error::NonConvergent(format!(
            "no convergence within {} terms",
            cfg.max_terms
        ))),
    }
}
