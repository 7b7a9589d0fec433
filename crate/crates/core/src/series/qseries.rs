//! Truncated Laurent series in `q` with [`ZPoly`] coefficients.
//!
//! A `QSeries` represents `sum_{n=min_exp}^{valid_to} c_n q^n + O(q^{valid_to+1})`.
//!
//! Invariants:
//! - `coeffs.len() == valid_to - min_exp + 1`; storage is dense
//! - the first stored coefficient is nonzero (leading zeros are trimmed)
//! - a series that vanishes through `valid_to` has no coefficients and
//!   `min_exp == valid_to + 1`
//! - nothing is ever read past `valid_to`

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::ZPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    min_exp: i64,
    valid_to: i64,
    coeffs: Vec<ZPoly>,
}

/// First exponent at which two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: i64,
    pub left: ZPoly,
    pub right: ZPoly,
}

impl QSeries {
    /// Builds a series from dense coefficients starting at `min_exp`.
    /// Entries past `valid_to` are dropped; missing entries up to
    /// `valid_to` are zero.
    pub fn new(min_exp: i64, coeffs: Vec<ZPoly>, valid_to: i64) -> Self {
        let mut coeffs = coeffs;
        let len = (valid_to - min_exp + 1).max(0) as usize;
        coeffs.resize(len, ZPoly::zero());
        Self::canonical(min_exp, coeffs, valid_to)
    }

    pub fn from_ints(min_exp: i64, coeffs: &[i64], valid_to: i64) -> Self {
        Self::new(
            min_exp,
            coeffs.iter().map(|&c| ZPoly::from(c)).collect(),
            valid_to,
        )
    }

    /// Sparse constructor; repeated exponents are summed.
    pub fn from_terms(terms: &[(i64, ZPoly)], valid_to: i64) -> Self {
        let Some(lo) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero(valid_to);
        };
        let lo = lo.min(valid_to + 1);
        let mut coeffs = vec![ZPoly::zero(); (valid_to - lo + 1).max(0) as usize];
        for (e, c) in terms {
            if *e <= valid_to {
                coeffs[(*e - lo) as usize] += c;
            }
        }
        Self::canonical(lo, coeffs, valid_to)
    }

    pub fn zero(valid_to: i64) -> Self {
        Self {
            min_exp: valid_to + 1,
            valid_to,
            coeffs: Vec::new(),
        }
    }

    pub fn one(valid_to: i64) -> Self {
        Self::monomial(ZPoly::one(), 0, valid_to)
    }

    /// `c * q^exp`.
    pub fn monomial(c: ZPoly, exp: i64, valid_to: i64) -> Self {
        Self::from_terms(&[(exp, c)], valid_to)
    }

    fn canonical(mut min_exp: i64, mut coeffs: Vec<ZPoly>, valid_to: i64) -> Self {
        let lead = coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(coeffs.len());
        if lead > 0 {
            coeffs.drain(..lead);
            min_exp += lead as i64;
        }
        if coeffs.is_empty() {
            min_exp = valid_to + 1;
        }
        debug_assert_eq!(coeffs.len() as i64, valid_to - min_exp + 1);
        Self {
            min_exp,
            valid_to,
            coeffs,
        }
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn valid_to(&self) -> i64 {
        self.valid_to
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact coefficient of `q^n`. Exponents below `min_exp` are known
    /// zeros; exponents past `valid_to` are unknown and rejected.
    pub fn coefficient(&self, n: i64) -> Result<ZPoly> {
        if n > self.valid_to {
            return Err(Error::OutOfValidRange {
                n,
                valid_to: self.valid_to,
            });
        }
        Ok(self.coeff_unchecked(n).clone())
    }

    fn coeff_unchecked(&self, n: i64) -> &ZPoly {
        static ZERO: ZPoly = ZPoly::zero_const();
        if n < self.min_exp {
            &ZERO
        } else {
            &self.coeffs[(n - self.min_exp) as usize]
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &ZPoly)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// Drops everything past `order`. A larger `order` than the current
    /// `valid_to` leaves the series unchanged.
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.valid_to {
            return self.clone();
        }
        let keep = (order - self.min_exp + 1).max(0) as usize;
        Self::canonical(self.min_exp, self.coeffs[..keep].to_vec(), order)
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            min_exp: self.min_exp + k,
            valid_to: self.valid_to + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &ZPoly) -> Self {
        let coeffs = self.coeffs.iter().map(|x| x * c).collect();
        Self::canonical(self.min_exp, coeffs, self.valid_to)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    fn combine(&self, other: &Self, plus: bool) -> Self {
        let valid_to = self.valid_to.min(other.valid_to);
        let lo = self.min_exp.min(other.min_exp).min(valid_to + 1);
        let mut coeffs = vec![ZPoly::zero(); (valid_to - lo + 1) as usize];
        for (e, c) in self.terms().take_while(|(e, _)| *e <= valid_to) {
            coeffs[(e - lo) as usize] += c;
        }
        for (e, c) in other.terms().take_while(|(e, _)| *e <= valid_to) {
            if plus {
                coeffs[(e - lo) as usize] += c;
            } else {
                coeffs[(e - lo) as usize] -= c;
            }
        }
        Self::canonical(lo, coeffs, valid_to)
    }

    /// Cauchy product. The result is exact through
    /// `min(a.valid_to + b.min_exp, b.valid_to + a.min_exp)`.
    pub fn mul(&self, other: &Self) -> Self {
        let valid_to = (self.valid_to + other.min_exp).min(other.valid_to + self.min_exp);
        let lo = self.min_exp + other.min_exp;
        if self.is_zero() || other.is_zero() || lo > valid_to {
            return Self::zero(valid_to);
        }
        // Loop over the sparser operand.
        let (sparse, dense) = if self.terms().count() <= other.terms().count() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = vec![ZPoly::zero(); (valid_to - lo + 1) as usize];
        for (ea, ca) in sparse.terms() {
            for (eb, cb) in dense.terms() {
                let e = ea + eb;
                if e > valid_to {
                    break;
                }
                coeffs[(e - lo) as usize] += &(ca * cb);
            }
        }
        Self::canonical(lo, coeffs, valid_to)
    }

    /// Exact quotient `self / divisor` for a divisor with constant term
    /// `±1` at `q^0`. Runs the usual triangular recurrence over the nonzero
    /// terms of the divisor, so dividing by a sparse product is cheap.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        let unit = divisor.unit_constant()?;
        let valid_to = self.valid_to.min(divisor.valid_to + self.min_exp);
        if self.is_zero() {
            return Ok(Self::zero(valid_to));
        }
        let lo = self.min_exp;
        let len = (valid_to - lo + 1).max(0) as usize;
        let tail: Vec<(usize, &ZPoly)> = divisor
            .terms()
            .skip(1)
            .map(|(e, c)| (e as usize, c))
            .collect();
        let mut out: Vec<ZPoly> = Vec::with_capacity(len);
        for i in 0..len {
            let mut acc = self.coeffs[i].clone();
            for &(k, b) in &tail {
                if k > i {
                    break;
                }
                acc -= &(b * &out[i - k]);
            }
            out.push(&acc * &unit);
        }
        Ok(Self::canonical(lo, out, valid_to))
    }

    fn unit_constant(&self) -> Result<ZPoly> {
        if self.min_exp != 0 {
            return Err(Error::NotAUnit(format!(
                "lowest exponent is {} (expected 0): {self}",
                self.min_exp
            )));
        }
        let Some(c0) = self.coeffs.first() else {
            return Err(Error::NotAUnit(format!(
                "constant term unknown (exact only through q^{})",
                self.valid_to
            )));
        };
        if !c0.is_unit() {
            return Err(Error::NotAUnit(format!("constant term is {c0}")));
        }
        // ±1 is its own inverse.
        Ok(c0.clone())
    }

    /// Multiplicative inverse through `order` (or through `valid_to`, if
    /// that is smaller).
    pub fn invert_unit(&self, order: i64) -> Result<Self> {
        Self::one(order).div(self)
    }

    /// Substitution `q -> q^d`.
    pub fn dilate(&self, d: u32) -> Self {
        assert!(d >= 1, "dilation factor must be positive");
        let d = i64::from(d);
        let valid_to = d * self.valid_to + (d - 1);
        let min_exp = d * self.min_exp;
        if self.is_zero() {
            return Self::zero(valid_to);
        }
        let mut coeffs = vec![ZPoly::zero(); (valid_to - min_exp + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * d as usize] = c.clone();
        }
        Self::canonical(min_exp, coeffs, valid_to)
    }

    /// Substitutes an integer for `z` in every coefficient.
    pub fn eval_z(&self, z: i64) -> Self {
        let z = BigInt::from(z);
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| ZPoly::constant(c.eval(&z)))
            .collect();
        Self::canonical(self.min_exp, coeffs, self.valid_to)
    }

    /// First exponent, through the common `valid_to`, where the two series
    /// differ. `None` means they agree on the whole common range.
    pub fn first_mismatch(&self, other: &Self) -> Option<Mismatch> {
        let hi = self.valid_to.min(other.valid_to);
        let lo = self.min_exp.min(other.min_exp);
        (lo..=hi).find_map(|n| {
            let (l, r) = (self.coeff_unchecked(n), other.coeff_unchecked(n));
            (l != r).then(|| Mismatch {
                exponent: n,
                left: l.clone(),
                right: r.clone(),
            })
        })
    }

    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(ZPoly::is_nonnegative)
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        QSeries::add(self, rhs)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        QSeries::sub(self, rhs)
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        QSeries::mul(self, rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            min_exp: self.min_exp,
            valid_to: self.valid_to,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let simple = c.degree() == Some(0);
            match (e, simple) {
                (0, _) => write!(f, "{c}")?,
                (_, true) if c.is_unit() && c.coeffs()[0] == BigInt::from(1) => {}
                (_, true) => write!(f, "{c}*")?,
                (_, false) => write!(f, "({c})*")?,
            }
            match e {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.valid_to + 1)
    }
}
