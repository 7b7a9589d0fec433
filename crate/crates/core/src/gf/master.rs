//! The master sum
//!
//! ```text
//! S(α, β; Q; t) = Σ_{r≥1} Q^r · Π_{j=0}^{t-2} (1 - α Q^{r+j}) / Π_{j=0}^{t} (1 - β Q^{r+j})
//! ```
//!
//! with `Q = q^d`, and its closed form, checked with denominators cleared:
//!
//! ```text
//! (β Q - α)(1 - Q^t) · S = Q · ((α; Q)_t / (β Q; Q)_t - 1)
//! ```

use super::{divide_by_pochhammer, pochhammer, Monomial};
use crate::error::{Error, Result};
use crate::series::{Mismatch, QSeries};

/// Arguments of the master sum: `S(alpha, beta; q^d; t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SParams {
    alpha: Monomial,
    beta: Monomial,
    d: u32,
    t: u32,
}

impl SParams {
    /// Validates that no denominator factor `1 - β q^{d(r+j)}` can lose its
    /// constant term, which for `r ≥ 1` means `beta.q_pow + d ≥ 1`.
    pub fn new(alpha: Monomial, beta: Monomial, d: u32, t: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::Inadmissible("base power d must be positive".into()));
        }
        if t == 0 {
            return Err(Error::Inadmissible("width t must be positive".into()));
        }
        if !beta.is_zero() && beta.q_pow() + i64::from(d) < 1 {
            return Err(Error::Inadmissible(format!(
                "beta = {beta} with d = {d} makes the r = 1 denominator factor degenerate"
            )));
        }
        Ok(Self { alpha, beta, d, t })
    }

    pub fn alpha(&self) -> Monomial {
        self.alpha
    }

    pub fn beta(&self) -> Monomial {
        self.beta
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// True when `α = β q^d`, where the uncleared closed form is undefined.
    pub fn is_degenerate(&self) -> bool {
        self.alpha == self.beta.times_q(i64::from(self.d))
    }
}

/// The `r`-th summand of `S`, exact through `order`.
///
/// Its lowest exponent is at least `d·r`, since every numerator factor is a
/// polynomial and every denominator factor has constant term 1.
pub fn s_term(p: &SParams, r: u32, order: i64) -> Result<QSeries> {
    let shift = i64::from(p.d) * i64::from(r);
    if shift > order {
        return Ok(QSeries::zero(order));
    }
    let inner = order - shift;
    let num = pochhammer(p.alpha.times_q(shift), p.d, p.t - 1, inner)?;
    let term = divide_by_pochhammer(&num, p.beta.times_q(shift), p.d, p.t + 1)?;
    Ok(term.shift(shift))
}

/// `S(α, β; q^d; t)` exact through `order`.
///
/// Summands with `d·r > order` cannot reach `q^order`, so the sum stops at
/// `r = floor(order / d)`.
pub fn eval_s(p: &SParams, order: i64) -> Result<QSeries> {
    let mut sum = QSeries::zero(order);
    let last = if order < 1 { 0 } else { order / i64::from(p.d) };
    for r in 1..=last {
        sum = &sum + &s_term(p, r as u32, order)?;
    }
    Ok(sum)
}

/// Both sides of the master identity with denominators cleared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClearedForm {
    /// `(βQ − α)(1 − Q^t) · S`
    pub lhs: QSeries,
    /// `Q · ((α; Q)_t / (βQ; Q)_t − 1)`
    pub rhs: QSeries,
}

impl ClearedForm {
    pub fn mismatch(&self) -> Option<Mismatch> {
        self.lhs.first_mismatch(&self.rhs)
    }
}

/// Builds both cleared sides exact through `order`. Valid for `α = βQ`
/// too, where both sides vanish.
pub fn closed_form_cleared(p: &SParams, order: i64) -> Result<ClearedForm> {
    let d = i64::from(p.d);
    let t = i64::from(p.t);
    let beta_q = p.beta.times_q(d);

    // The multiplier is a polynomial; give it slack so its own truncation
    // never binds.
    let poly_order = order + d * t + 2;
    let diff = &beta_q.to_series(poly_order) - &p.alpha.to_series(poly_order);
    let one_minus = QSeries::from_terms(&[(0, 1.into()), (d * t, (-1).into())], poly_order);
    let multiplier = &diff * &one_minus;
    let lhs = if multiplier.is_zero() {
        QSeries::zero(order)
    } else {
        let s = eval_s(p, order - multiplier.min_exp())?;
        (&multiplier * &s).truncate(order)
    };

    let inner = order - d;
    if inner < 0 {
        // the right side starts at Q^1
        return Ok(ClearedForm {
            lhs,
            rhs: QSeries::zero(order),
        });
    }
    let num = pochhammer(p.alpha, p.d, p.t, inner)?;
    let ratio = divide_by_pochhammer(&num, beta_q, p.d, p.t)?;
    let rhs = (&ratio - &QSeries::one(inner)).shift(d);

    Ok(ClearedForm { lhs, rhs })
}

/// The monomial test grid used for the formal master-identity sweep:
/// `α ∈ {0, ±q^a, −z q^a : 0 ≤ a ≤ 2}`, `β ∈ {0, 1, q^{-1}}`, `d ∈ {1, 2}`,
/// `1 ≤ t ≤ t_max`, keeping only admissible combinations.
pub fn parameter_grid(t_max: u32) -> Vec<SParams> {
    let mut alphas = vec![Monomial::ZERO];
    for a in 0..=2 {
        alphas.extend([Monomial::q(a), Monomial::neg_q(a), Monomial::neg_zq(a)]);
    }
    let betas = [Monomial::ZERO, Monomial::q(0), Monomial::q(-1)];
    let mut grid = Vec::new();
    for d in 1..=2 {
        for t in 1..=t_max {
            for beta in betas {
                for alpha in &alphas {
                    if let Ok(p) = SParams::new(*alpha, beta, d, t) {
                        grid.push(p);
                    }
                }
            }
        }
    }
    grid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ZPoly;

    fn params(alpha: Monomial, beta: Monomial, d: u32, t: u32) -> SParams {
        SParams::new(alpha, beta, d, t).unwrap()
    }

    #[test]
    fn admissibility() {
        assert!(SParams::new(Monomial::ZERO, Monomial::q(-1), 1, 2).is_err());
        assert!(SParams::new(Monomial::ZERO, Monomial::q(-1), 2, 2).is_ok());
        assert!(SParams::new(Monomial::ZERO, Monomial::q(0), 1, 0).is_err());
        assert!(SParams::new(Monomial::ZERO, Monomial::q(0), 0, 1).is_err());
    }

    #[test]
    fn distinct_term_smallest_part_one() {
        // q(1+q^2)(1+q^3)
        let p = params(Monomial::neg_q(1), Monomial::ZERO, 1, 3);
        let term = s_term(&p, 1, 10).unwrap();
        assert_eq!(term, QSeries::from_ints(1, &[1, 0, 1, 1, 0, 1], 10));
    }

    #[test]
    fn bounded_term_geometric() {
        // q^2 / ((1-q^2)(1-q^3)): coefficients of 1/((1-q^2)(1-q^3)) by
        // counting solutions of 2a + 3b = n.
        let oracle: Vec<i64> = (0..=4)
            .map(|n| (0..=n / 2).filter(|a| (n - 2 * a) % 3 == 0).count() as i64)
            .collect();
        let p = params(Monomial::ZERO, Monomial::q(0), 1, 1);
        let term = s_term(&p, 2, 6).unwrap();
        assert_eq!(term, QSeries::from_ints(2, &oracle, 6));
        assert_eq!(term, QSeries::from_ints(2, &[1, 0, 1, 1, 1], 6));
    }

    #[test]
    fn term_has_no_constant() {
        for p in parameter_grid(3) {
            let term = s_term(&p, 1, 8).unwrap();
            assert_eq!(term.coefficient(0).unwrap(), ZPoly::zero());
            assert!(term.min_exp() >= i64::from(p.d()));
        }
    }

    #[test]
    fn eval_s_bounded_width_two() {
        let p = params(Monomial::ZERO, Monomial::q(0), 1, 2);
        assert_eq!(
            eval_s(&p, 5).unwrap(),
            QSeries::from_ints(1, &[1, 2, 3, 5, 6], 5)
        );
    }

    #[test]
    fn eval_s_distinct_width_two() {
        let p = params(Monomial::neg_q(1), Monomial::ZERO, 1, 3);
        assert_eq!(
            eval_s(&p, 6).unwrap(),
            QSeries::from_ints(1, &[1, 1, 2, 2, 2, 3], 6)
        );
    }

    #[test]
    fn eval_s_tiny_orders() {
        let p = params(Monomial::ZERO, Monomial::q(-1), 2, 2);
        assert_eq!(eval_s(&p, 1).unwrap(), QSeries::zero(1));
        assert_eq!(eval_s(&p, 0).unwrap(), QSeries::zero(0));
    }

    #[test]
    fn degenerate_alpha_equals_beta_q() {
        let p = params(Monomial::q(1), Monomial::q(0), 1, 4);
        assert!(p.is_degenerate());
        let cf = closed_form_cleared(&p, 30).unwrap();
        assert!(cf.lhs.is_zero());
        assert!(cf.rhs.is_zero());
        assert_eq!(cf.lhs.valid_to(), 30);
        assert_eq!(cf.rhs.valid_to(), 30);
    }

    #[test]
    fn cleared_form_bounded_case() {
        let p = params(Monomial::ZERO, Monomial::q(0), 1, 3);
        let cf = closed_form_cleared(&p, 40).unwrap();
        assert_eq!(cf.mismatch(), None);
        assert_eq!(cf.lhs.valid_to(), 40);
    }

    #[test]
    fn cleared_form_detects_corruption() {
        let p = params(Monomial::neg_q(1), Monomial::ZERO, 1, 3);
        let mut cf = closed_form_cleared(&p, 20).unwrap();
        cf.rhs = &cf.rhs + &QSeries::monomial(ZPoly::one(), 7, 20);
        assert_eq!(cf.mismatch().unwrap().exponent, 7);
    }

    #[test]
    fn cleared_form_at_tiny_orders() {
        for p in parameter_grid(3) {
            for order in 0..=3 {
                let cf = closed_form_cleared(&p, order).unwrap();
                assert_eq!(cf.mismatch(), None, "{p:?} order {order}");
                assert_eq!(cf.rhs.valid_to(), order);
            }
        }
    }

    #[test]
    fn grid_size() {
        // 10 alphas × (2 betas at d = 1 + 3 betas at d = 2) × t
        assert_eq!(parameter_grid(6).len(), 10 * 5 * 6);
    }
}
