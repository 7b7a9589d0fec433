use std::fmt;

use crate::error::{Error, Result};
use crate::series::{QSeries, ZPoly};

/// A parameter of the shape `c * z^z_pow * q^q_pow` with `c` in `{-1, 0, 1}`.
///
/// Zero is canonical: `c == 0` forces both powers to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    c: i8,
    z_pow: u32,
    q_pow: i64,
}

impl Monomial {
    pub const ZERO: Monomial = Monomial {
        c: 0,
        z_pow: 0,
        q_pow: 0,
    };

    pub fn new(c: i8, z_pow: u32, q_pow: i64) -> Result<Self> {
        match c {
            0 => Ok(Self::ZERO),
            -1 | 1 => Ok(Self { c, z_pow, q_pow }),
            _ => Err(Error::Inadmissible(format!(
                "monomial coefficient must be -1, 0 or 1, got {c}"
            ))),
        }
    }

    /// `q^e`.
    pub fn q(e: i64) -> Self {
        Self {
            c: 1,
            z_pow: 0,
            q_pow: e,
        }
    }

    /// `-q^e`.
    pub fn neg_q(e: i64) -> Self {
        Self {
            c: -1,
            z_pow: 0,
            q_pow: e,
        }
    }

    /// `-z q^e`.
    pub fn neg_zq(e: i64) -> Self {
        Self {
            c: -1,
            z_pow: 1,
            q_pow: e,
        }
    }

    pub fn c(&self) -> i8 {
        self.c
    }

    pub fn z_pow(&self) -> u32 {
        self.z_pow
    }

    pub fn q_pow(&self) -> i64 {
        self.q_pow
    }

    pub fn is_zero(&self) -> bool {
        self.c == 0
    }

    /// Multiplication by `q^k`; zero stays zero.
    pub fn times_q(self, k: i64) -> Self {
        if self.is_zero() {
            self
        } else {
            Self {
                q_pow: self.q_pow + k,
                ..self
            }
        }
    }

    /// The `z`-part `c * z^z_pow`.
    pub fn z_coeff(&self) -> ZPoly {
        ZPoly::monomial(i64::from(self.c), self.z_pow as usize)
    }

    /// The monomial as a (one-term) series exact through `valid_to`.
    pub fn to_series(&self, valid_to: i64) -> QSeries {
        if self.is_zero() {
            return QSeries::zero(valid_to);
        }
        QSeries::monomial(self.z_coeff(), self.q_pow, valid_to)
    }

    /// The binomial `1 - self * q^k` as an exact series.
    pub fn one_minus_times_q(&self, k: i64, valid_to: i64) -> Result<QSeries> {
        if self.is_zero() {
            return Ok(QSeries::one(valid_to));
        }
        let e = self.q_pow + k;
        if e < 0 {
            return Err(Error::NegativeExponentFactor {
                coeff: self.to_string(),
                exponent: e,
            });
        }
        Ok(QSeries::from_terms(
            &[(0, ZPoly::one()), (e, -&self.z_coeff())],
            valid_to,
        ))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.c < 0 {
            write!(f, "-")?;
        }
        let z = match self.z_pow {
            0 => String::new(),
            1 => "z".to_string(),
            m => format!("z^{m}"),
        };
        let q = match self.q_pow {
            0 => String::new(),
            1 => "q".to_string(),
            e => format!("q^{e}"),
        };
        match (z.is_empty(), q.is_empty()) {
            (true, true) => write!(f, "1"),
            (false, true) => write!(f, "{z}"),
            (true, false) => write!(f, "{q}"),
            (false, false) => write!(f, "{z}*{q}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_canonical() {
        assert_eq!(Monomial::new(0, 3, -2).unwrap(), Monomial::ZERO);
        assert_eq!(Monomial::ZERO.times_q(5), Monomial::ZERO);
        assert!(Monomial::new(2, 0, 0).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::neg_zq(1).to_string(), "-z*q");
        assert_eq!(Monomial::q(-1).to_string(), "q^-1");
        assert_eq!(Monomial::q(0).to_string(), "1");
        assert_eq!(Monomial::neg_q(2).to_string(), "-q^2");
    }

    #[test]
    fn binomial_factor() {
        let f = Monomial::neg_q(1).one_minus_times_q(2, 10).unwrap();
        assert_eq!(f, QSeries::from_ints(0, &[1, 0, 0, 1], 10));
        let g = Monomial::q(-1).one_minus_times_q(1, 10).unwrap();
        assert!(g.is_zero());
        assert!(matches!(
            Monomial::q(-3).one_minus_times_q(1, 10),
            Err(Error::NegativeExponentFactor { exponent: -2, .. })
        ));
    }
}
