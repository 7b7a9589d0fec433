//! Finite q-Pochhammer products with monomial parameters.

use super::Monomial;
use crate::error::Result;
use crate::series::QSeries;

/// `(a; q^d)_n = prod_{k=0}^{n-1} (1 - a q^{dk})`, exact through `order`.
///
/// Fails with `NegativeExponentFactor` when some factor would carry a
/// negative power of `q`.
pub fn pochhammer(a: Monomial, d: u32, n: u32, order: i64) -> Result<QSeries> {
    let step = i64::from(d);
    let mut acc = QSeries::one(order);
    for k in 0..i64::from(n) {
        let factor = a.one_minus_times_q(step * k, order)?;
        acc = &acc * &factor;
    }
    Ok(acc.truncate(order))
}

/// `series / (a; q^d)_n`, dividing one binomial at a time.
///
/// Every factor must have unit constant term, i.e. a positive `q`-exponent
/// (or `a == 0`).
pub fn divide_by_pochhammer(series: &QSeries, a: Monomial, d: u32, n: u32) -> Result<QSeries> {
    let step = i64::from(d);
    let order = series.valid_to();
    let mut acc = series.clone();
    for k in 0..i64::from(n) {
        let factor = a.one_minus_times_q(step * k, order)?;
        acc = acc.div(&factor)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::series::ZPoly;

    #[test]
    fn empty_product_is_one() {
        for a in [Monomial::ZERO, Monomial::q(3), Monomial::neg_zq(1)] {
            assert_eq!(pochhammer(a, 2, 0, 12).unwrap(), QSeries::one(12));
        }
    }

    #[test]
    fn minus_q_three_factors() {
        // (1+q)(1+q^2)(1+q^3) expanded by hand
        let expect = QSeries::from_ints(0, &[1, 1, 1, 2, 1, 1, 1], 6);
        assert_eq!(pochhammer(Monomial::neg_q(1), 1, 3, 6).unwrap(), expect);
    }

    #[test]
    fn base_q_squared() {
        // (1-q)(1-q^3)
        let expect = QSeries::from_ints(0, &[1, -1, 0, -1, 1], 4);
        assert_eq!(pochhammer(Monomial::q(1), 2, 2, 4).unwrap(), expect);
    }

    #[test]
    fn truncated_product() {
        let p = pochhammer(Monomial::neg_q(1), 1, 3, 2).unwrap();
        assert_eq!(p, QSeries::from_ints(0, &[1, 1, 1], 2));
    }

    #[test]
    fn overline_marker_product() {
        // (-zq; q)_2 = (1 + zq)(1 + zq^2)
        let p = pochhammer(Monomial::neg_zq(1), 1, 2, 10).unwrap();
        assert_eq!(p.coefficient(1).unwrap(), ZPoly::monomial(1, 1));
        assert_eq!(p.coefficient(3).unwrap(), ZPoly::monomial(1, 2));
    }

    #[test]
    fn negative_exponent_rejected() {
        assert!(matches!(
            pochhammer(Monomial::q(-2), 1, 3, 5),
            Err(Error::NegativeExponentFactor { .. })
        ));
    }

    #[test]
    fn division_undoes_product() {
        let a = Monomial::q(1);
        let p = pochhammer(a, 2, 3, 30).unwrap();
        let back = divide_by_pochhammer(&p, a, 2, 3).unwrap();
        assert_eq!(back, QSeries::one(30));
    }
}
