use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::series::QSeries;

/// Evaluates the stored part of a truncated series at numeric `q` and `z`.
/// The caller accounts for the neglected `O(q^{valid_to + 1})` tail.
pub fn eval_series(s: &QSeries, q: Complex64, z: Complex64) -> Complex64 {
    s.terms()
        .map(|(e, c)| {
            let zc = c
                .coeffs()
                .iter()
                .rev()
                .fold(Complex64::new(0.0, 0.0), |acc, k| {
                    acc * z + k.to_f64().unwrap_or(f64::NAN)
                });
            zc * q.powi(e as i32)
        })
        .sum()
}
