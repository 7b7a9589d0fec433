use num_complex::Complex64;

use super::{
    guard, guarded_pochhammer, guarded_pochhammer_inf, phi, pochhammer_num, relative_error, Length,
    NumericConfig, QParam,
};
use crate::error::{Error, Result};

/// Terminating q-Chu–Vandermonde sum:
///
/// `2φ1(a, q^{-n}; c; q, c q^n / a) = (c/a; q)_n / (c; q)_n`.
///
/// Returns the relative error between the two sides.
pub fn check_chu_vandermonde(
    a: Complex64,
    c: Complex64,
    q: Complex64,
    n: u32,
    cfg: &NumericConfig,
) -> Result<f64> {
    let a = guard(a, || "parameter a (divides z)".into(), cfg.floor)?;
    let z = c * q.powu(n) / a;
    let lhs = phi(
        &[QParam::Value(a), QParam::QPow(-i64::from(n))],
        &[QParam::Value(c)],
        q,
        z,
        cfg,
    )?;
    let den = guarded_pochhammer(c, q, n, cfg.floor, "(c;q)_n")?;
    let rhs = pochhammer_num(c / a, q, n) / den;
    Ok(relative_error(lhs, rhs))
}

/// q-analogue of the Kummer–Thomae–Whipple transformation:
///
/// ```text
/// 3φ2(a, b, c; d, e; q, de/abc)
///   = (e/a)_∞ (de/bc)_∞ / ((e)_∞ (de/abc)_∞) · 3φ2(a, d/b, d/c; d, de/bc; q, e/a)
/// ```
///
/// Both series must converge: `|de/abc| < 1` and `|e/a| < 1`.
pub fn check_ktw(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
    e: Complex64,
    q: Complex64,
    cfg: &NumericConfig,
) -> Result<f64> {
    for (name, x) in [("a", a), ("b", b), ("c", c)] {
        guard(x, || format!("parameter {name}"), cfg.floor)?;
    }
    let z_left = d * e / (a * b * c);
    let z_right = e / a;
    if z_left.norm() >= 1.0 || z_right.norm() >= 1.0 {
        return Err(Error::NonConvergent(format!(
            "need |de/abc| < 1 and |e/a| < 1, got {:.4} and {:.4}",
            z_left.norm(),
            z_right.norm()
        )));
    }
    let de_bc = d * e / (b * c);
    let lhs = phi(
        &[a.into(), b.into(), c.into()],
        &[d.into(), e.into()],
        q,
        z_left,
        cfg,
    )?;
    let series = phi(
        &[a.into(), (d / b).into(), (d / c).into()],
        &[d.into(), de_bc.into()],
        q,
        z_right,
        cfg,
    )?;
    let inf = Length::Infinite;
    let prefactor = pochhammer_num(z_right, q, inf) * pochhammer_num(de_bc, q, inf)
        / (guarded_pochhammer_inf(e, q, cfg, "(e;q)_∞")?
            * guarded_pochhammer_inf(z_left, q, cfg, "(de/abc;q)_∞")?);
    Ok(relative_error(lhs, prefactor * series))
}
