//! Closed-form generating functions of the four bounded part-difference
//! families, and their routes through the master sum.

use super::{divide_by_pochhammer, eval_s, pochhammer, Monomial, SParams};
use crate::error::{Error, Result};
use crate::series::{QSeries, ZPoly};

/// `(x - 1) / (1 - q^w)` for a series `x` with constant term 1.
fn minus_one_over(x: &QSeries, w: u32) -> Result<QSeries> {
    let order = x.valid_to();
    let numerator = x - &QSeries::one(order);
    divide_by_pochhammer(&numerator, Monomial::q(i64::from(w)), 1, 1)
}

fn require_positive(t: u32, what: &str) -> Result<()> {
    if t == 0 {
        return Err(Error::Inadmissible(format!("{what} requires t >= 1")));
    }
    Ok(())
}

/// `(1/(q;q)_t - 1) / (1 - q^t)`: partitions with largest minus smallest
/// part at most `t`.
pub fn gf_bounded_diff(t: u32, order: i64) -> Result<QSeries> {
    require_positive(t, "bounded-difference generating function")?;
    let inv = divide_by_pochhammer(&QSeries::one(order), Monomial::q(1), 1, t)?;
    minus_one_over(&inv, t)
}

/// `((-zq;q)_t/(q;q)_t - 1) / (1 - q^t)`: overpartitions with bounded
/// difference, `z` marking overlined parts.
pub fn gf_overpartition(t: u32, order: i64) -> Result<QSeries> {
    require_positive(t, "overpartition generating function")?;
    let num = pochhammer(Monomial::neg_zq(1), 1, t, order)?;
    let ratio = divide_by_pochhammer(&num, Monomial::q(1), 1, t)?;
    minus_one_over(&ratio, t)
}

/// `((-q;q)_{t+1} - 1) / (1 - q^{t+1})`: partitions into distinct parts
/// with bounded difference. `t = 0` is allowed.
pub fn gf_distinct(t: u32, order: i64) -> Result<QSeries> {
    let prod = pochhammer(Monomial::neg_q(1), 1, t + 1, order)?;
    minus_one_over(&prod, t + 1)
}

/// `(1/(q;q^2)_t - 1) / (1 - q^{2t})`: partitions into odd parts whose
/// difference is at most `2t` (equivalently `2t + 1`).
pub fn gf_odd(t: u32, order: i64) -> Result<QSeries> {
    require_positive(t, "odd-part generating function")?;
    let inv = divide_by_pochhammer(&QSeries::one(order), Monomial::q(1), 2, t)?;
    minus_one_over(&inv, 2 * t)
}

/// `S(0, 1; q; t)`; the master identity collapses it onto
/// [`gf_bounded_diff`].
pub fn bounded_diff_via_s(t: u32, order: i64) -> Result<QSeries> {
    eval_s(&SParams::new(Monomial::ZERO, Monomial::q(0), 1, t)?, order)
}

/// `(1 + z) · S(-zq, 1; q; t)`.
pub fn overpartition_via_s(t: u32, order: i64) -> Result<QSeries> {
    let s = eval_s(
        &SParams::new(Monomial::neg_zq(1), Monomial::q(0), 1, t)?,
        order,
    )?;
    Ok(s.scale(&ZPoly::from_i64s(&[1, 1])))
}

/// `S(-q, 0; q; t + 1)`.
pub fn distinct_via_s(t: u32, order: i64) -> Result<QSeries> {
    eval_s(
        &SParams::new(Monomial::neg_q(1), Monomial::ZERO, 1, t + 1)?,
        order,
    )
}

/// `q^{-1} · S(0, q^{-1}; q^2; t)`.
pub fn odd_via_s(t: u32, order: i64) -> Result<QSeries> {
    let s = eval_s(
        &SParams::new(Monomial::ZERO, Monomial::q(-1), 2, t)?,
        order + 1,
    )?;
    Ok(s.shift(-1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi)
            .map(|n| {
                let c = s.coefficient(n).unwrap();
                i64::try_from(c.coeff(0)).unwrap()
            })
            .collect()
    }

    #[test]
    fn bounded_diff_small_t() {
        let g1 = gf_bounded_diff(1, 10).unwrap();
        assert_eq!(ints(&g1, 0, 10), (0..=10).collect::<Vec<_>>());
        let g2 = gf_bounded_diff(2, 5).unwrap();
        assert_eq!(ints(&g2, 0, 5), vec![0, 1, 2, 3, 5, 6]);
        assert!(gf_bounded_diff(0, 5).is_err());
    }

    #[test]
    fn overpartition_t1() {
        let g = gf_overpartition(1, 8).unwrap();
        for n in 1..=8 {
            assert_eq!(g.coefficient(n).unwrap(), ZPoly::from_i64s(&[n, n]));
        }
        assert_eq!(g.coefficient(0).unwrap(), ZPoly::zero());
    }

    #[test]
    fn overpartition_at_z_zero_is_bounded_diff() {
        for t in 1..=4 {
            let g = gf_overpartition(t, 30).unwrap().eval_z(0);
            assert_eq!(g, gf_bounded_diff(t, 30).unwrap());
        }
    }

    #[test]
    fn distinct_small_t() {
        let g = gf_distinct(2, 6).unwrap();
        assert_eq!(ints(&g, 0, 6), vec![0, 1, 1, 2, 2, 2, 3]);
        let g0 = gf_distinct(0, 12).unwrap();
        assert_eq!(ints(&g0, 1, 12), vec![1; 12]);
    }

    #[test]
    fn odd_small_t() {
        let g = gf_odd(1, 5).unwrap();
        assert_eq!(ints(&g, 0, 5), vec![0, 1, 1, 2, 2, 3]);
        assert!(gf_odd(0, 5).is_err());
    }

    #[test]
    fn routes_agree_at_small_order() {
        for t in 1..=4 {
            assert_eq!(
                bounded_diff_via_s(t, 25).unwrap(),
                gf_bounded_diff(t, 25).unwrap()
            );
            assert_eq!(distinct_via_s(t, 25).unwrap(), gf_distinct(t, 25).unwrap());
            assert_eq!(odd_via_s(t, 25).unwrap(), gf_odd(t, 25).unwrap());
            assert_eq!(
                overpartition_via_s(t, 20).unwrap(),
                gf_overpartition(t, 20).unwrap()
            );
        }
    }
}
