//! Numeric walk through the derivation of the closed form of
//!
//! ```text
//! S(α, β; q; t) = Σ_{r≥1} q^r Π_{j=0}^{t-2} (1 - α q^{r+j}) / Π_{j=0}^{t} (1 - β q^{r+j})
//! ```
//!
//! Each intermediate expression is evaluated on its own, so a wrong step
//! shows up as a disagreement between neighbouring lines.

use num_complex::Complex64;

use super::{
    check_chu_vandermonde, check_ktw, guard, guarded_pochhammer, guarded_pochhammer_inf, phi,
    pochhammer_num, Length, NumericConfig, QParam,
};
use crate::error::{Error, Result};

pub const CHAIN_LINES: usize = 9;

#[derive(Clone, Debug, PartialEq)]
pub struct ChainReport {
    /// One value per line, in derivation order.
    pub values: Vec<Complex64>,
    /// `max_{i,j} |v_i - v_j| / max(1, |v_last|)`
    pub max_pairwise_deviation: f64,
    /// Transformation step re-run as a standalone lemma check at the
    /// parameters the derivation uses; `None` when `α` is too small for
    /// the lemma's own parametrisation.
    pub ktw_step_error: Option<f64>,
    /// Summation step likewise.
    pub chu_step_error: Option<f64>,
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// Sums `f(start), f(start + 1), …` until `cfg.streak` consecutive terms
/// are negligible relative to the partial sum.
fn sum_until_quiet(
    start: u32,
    cfg: &NumericConfig,
    mut f: impl FnMut(u32) -> Result<Complex64>,
) -> Result<Complex64> {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut quiet = 0;
    for r in start..start + cfg.max_terms as u32 {
        let term = f(r)?;
        sum += term;
        let negligible = term.norm() <= cfg.tail_eps * sum.norm() || term.norm() < 1e-300;
        quiet = if negligible { quiet + 1 } else { 0 };
        if quiet >= cfg.streak {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergent(format!(
        "sum did not settle within {} terms",
        cfg.max_terms
    )))
}

/// The defining sum of `S(α, β; q; t)`, term by term.
pub fn s_sum(
    alpha: Complex64,
    beta: Complex64,
    q: Complex64,
    t: u32,
    cfg: &NumericConfig,
) -> Result<Complex64> {
    if q.norm() >= 1.0 {
        return Err(Error::NonConvergent(format!("|q| = {} >= 1", q.norm())));
    }
    sum_until_quiet(1, cfg, |r| {
        let qr = q.powu(r);
        let num = pochhammer_num(alpha * qr, q, t.saturating_sub(1));
        let den = guarded_pochhammer(beta * qr, q, t + 1, cfg.floor, "(βq^r;q)_{t+1}")?;
        Ok(qr * num / den)
    })
}

/// `q / ((βq − α)(1 − q^t)) · ((α;q)_t / (βq;q)_t − 1)`.
pub fn closed_form_num(
    alpha: Complex64,
    beta: Complex64,
    q: Complex64,
    t: u32,
    cfg: &NumericConfig,
) -> Result<Complex64> {
    let gap = guard(beta * q - alpha, || "βq − α".into(), cfg.floor)?;
    let ratio =
        pochhammer_num(alpha, q, t) / guarded_pochhammer(beta * q, q, t, cfg.floor, "(βq;q)_t")?;
    Ok(q / (gap * (one() - q.powu(t))) * (ratio - one()))
}

/// Evaluates all nine lines of the derivation at one parameter point.
///
/// Requires `β ≠ 0` (later lines use `α/β`) and `α ≠ βq`; both are
/// enforced through the magnitude floor.
pub fn proof_chain(
    alpha: Complex64,
    beta: Complex64,
    q: Complex64,
    t: u32,
    cfg: &NumericConfig,
) -> Result<ChainReport> {
    if t == 0 {
        return Err(Error::Inadmissible("t must be positive".into()));
    }
    if q.norm() >= 1.0 {
        return Err(Error::NonConvergent(format!("|q| = {} >= 1", q.norm())));
    }
    guard(q, || "q".into(), cfg.floor)?;
    guard(beta, || "β".into(), cfg.floor)?;
    let floor = cfg.floor;
    let poch = |a: Complex64, n: u32| pochhammer_num(a, q, n);
    let den_poch = |a: Complex64, n: u32, label: &str| guarded_pochhammer(a, q, n, floor, label);
    let qt = q.powu(t);
    let mut values = Vec::with_capacity(CHAIN_LINES);

    // (i) defining sum
    values.push(s_sum(alpha, beta, q, t, cfg)?);

    // (ii) Pochhammer ratios, r ≥ 1
    values.push(sum_until_quiet(1, cfg, |r| {
        let num = poch(alpha, r + t - 1) * poch(beta, r);
        let den = den_poch(alpha, r, "(α;q)_r")? * den_poch(beta, r + t + 1, "(β;q)_{r+t+1}")?;
        Ok(num / den * q.powu(r))
    })?);

    // (iii) reindexed from r = 0
    values.push(sum_until_quiet(0, cfg, |r| {
        let num = poch(alpha, r + t) * poch(beta, r + 1);
        let den =
            den_poch(alpha, r + 1, "(α;q)_{r+1}")? * den_poch(beta, r + t + 2, "(β;q)_{r+t+2}")?;
        Ok(num / den * q.powu(r + 1))
    })?);

    // (iv) 3φ2(q, βq, αq^t; αq, βq^{t+2}; q, q)
    let outer = q * poch(alpha * q, t - 1) / den_poch(beta * q, t + 1, "(βq;q)_{t+1}")?;
    let before = phi(
        &[QParam::QPow(1), (beta * q).into(), (alpha * qt).into()],
        &[(alpha * q).into(), (beta * qt * q * q).into()],
        q,
        q,
        cfg,
    )?;
    values.push(outer * before);

    // (v) after the transformation
    let inf = Length::Infinite;
    let infinite = pochhammer_num(beta * qt * q, q, inf) * pochhammer_num(q * q, q, inf)
        / (guarded_pochhammer_inf(beta * qt * q * q, q, cfg, "(βq^{t+2};q)_∞")?
            * guarded_pochhammer_inf(q, q, cfg, "(q;q)_∞")?);
    let z = beta * qt * q;
    let after = phi(
        &[
            QParam::QPow(1),
            (alpha / beta).into(),
            QParam::QPow(1 - i64::from(t)),
        ],
        &[(alpha * q).into(), QParam::QPow(2)],
        q,
        z,
        cfg,
    )?;
    values.push(outer * infinite * after);

    // (vi) the same series written out; (q^{1-t};q)_r vanishes for r ≥ t
    let one_minus_q = guard(one() - q, || "1 − q".into(), floor)?;
    let pre_vi = q * poch(alpha * q, t - 1) / (one_minus_q * den_poch(beta * q, t, "(βq;q)_t")?);
    let mut explicit = Complex64::new(0.0, 0.0);
    for r in 0..=t {
        let num = poch(alpha / beta, r) * poch(q.powi(1 - t as i32), r);
        let den = den_poch(alpha * q, r, "(αq;q)_r")? * den_poch(q * q, r, "(q²;q)_r")?;
        explicit += num / den * z.powu(r);
    }
    values.push(pre_vi * explicit);

    // (vii) index shifted by one
    let a_over_bq = alpha / (beta * q);
    let shift_factor = (one() - alpha) * one_minus_q
        / (z * guard(one() - a_over_bq, || "1 − α/(βq)".into(), floor)?
            * guard(one() - q.powi(-(t as i32)), || "1 − q^{-t}".into(), floor)?);
    let mut shifted = Complex64::new(0.0, 0.0);
    for r in 0..=t {
        let num = poch(a_over_bq, r + 1) * poch(q.powi(-(t as i32)), r + 1);
        let den = den_poch(alpha, r + 1, "(α;q)_{r+1}")? * den_poch(q, r + 1, "(q;q)_{r+1}")?;
        shifted += num / den * z.powu(r + 1);
    }
    values.push(pre_vi * shift_factor * shifted);

    // (viii) in terms of a terminating 2φ1
    let gap = guard(beta * q - alpha, || "βq − α".into(), floor)?;
    let ratio = poch(alpha, t) / den_poch(beta * q, t, "(βq;q)_t")?;
    let two_phi_one = phi(
        &[a_over_bq.into(), QParam::QPow(-i64::from(t))],
        &[alpha.into()],
        q,
        z,
        cfg,
    )?;
    values.push(q / (gap * (qt - one())) * ratio * (two_phi_one - one()));

    // (ix) closed form
    values.push(closed_form_num(alpha, beta, q, t, cfg)?);

    let scale = values[CHAIN_LINES - 1].norm().max(1.0);
    let mut max_pairwise_deviation: f64 = 0.0;
    for (i, x) in values.iter().enumerate() {
        for y in &values[i + 1..] {
            max_pairwise_deviation = max_pairwise_deviation.max((x - y).norm() / scale);
        }
    }

    // The two annotated steps, re-run as standalone lemma checks. Their
    // own parametrisations divide by α.
    let (ktw_step_error, chu_step_error) = if alpha.norm() < floor {
        (None, None)
    } else {
        let ktw = check_ktw(
            q,
            beta * q,
            alpha * qt,
            alpha * q,
            beta * qt * q * q,
            q,
            cfg,
        )?;
        let chu = check_chu_vandermonde(a_over_bq, alpha, q, t, cfg)?;
        (Some(ktw), Some(chu))
    };

    debug_assert_eq!(values.len(), CHAIN_LINES);
    Ok(ChainReport {
        values,
        max_pairwise_deviation,
        ktw_step_error,
        chu_step_error,
    })
}

#[cfg(test)]
mod tests {
    use super::super::relative_error;
    use super::*;

    #[test]
    fn chain_agrees_at_a_real_point() {
        let cfg = NumericConfig::default();
        let q = Complex64::new(0.4, 0.0);
        let rep = proof_chain(
            Complex64::new(0.3, 0.0),
            Complex64::new(0.7, 0.0),
            q,
            3,
            &cfg,
        )
        .unwrap();
        assert_eq!(rep.values.len(), CHAIN_LINES);
        assert!(rep.max_pairwise_deviation < 1e-8, "{rep:?}");
        assert!(rep.ktw_step_error.unwrap() < 1e-8);
        assert!(rep.chu_step_error.unwrap() < 1e-10);
    }

    #[test]
    fn chain_with_alpha_zero() {
        let cfg = NumericConfig::default();
        let rep = proof_chain(
            Complex64::new(0.0, 0.0),
            Complex64::new(-0.6, 0.5),
            Complex64::new(0.1, 0.5),
            4,
            &cfg,
        )
        .unwrap();
        assert!(rep.max_pairwise_deviation < 1e-8, "{rep:?}");
        assert_eq!(rep.ktw_step_error, None);
    }

    #[test]
    fn chain_rejects_beta_zero() {
        let cfg = NumericConfig::default();
        let q = Complex64::new(0.3, 0.1);
        let r = proof_chain(
            Complex64::new(0.3, 0.0),
            Complex64::new(0.0, 0.0),
            q,
            2,
            &cfg,
        );
        assert!(matches!(r, Err(Error::DegenerateDenominator { .. })));
    }

    #[test]
    fn first_and_last_lines_with_beta_zero() {
        // Only the defining sum and the closed form make sense at β = 0.
        let cfg = NumericConfig::default();
        for t in 1..=6 {
            let (alpha, q) = (Complex64::new(-0.4, 0.8), Complex64::new(0.35, -0.3));
            let beta = Complex64::new(0.0, 0.0);
            let lhs = s_sum(alpha, beta, q, t, &cfg).unwrap();
            let rhs = closed_form_num(alpha, beta, q, t, &cfg).unwrap();
            assert!(relative_error(lhs, rhs) < 1e-10, "t = {t}");
        }
    }
}
