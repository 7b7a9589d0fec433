use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series is not a unit: {0}")]
    NotAUnit(String),
    #[error("coefficient of q^{n} requested but series is only exact through q^{valid_to}")]
    OutOfValidRange { n: i64, valid_to: i64 },
    #[error("factor 1 - ({coeff})q^{exponent} has a negative q-exponent")]
    NegativeExponentFactor { coeff: String, exponent: i64 },
    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),
    #[error("n = {n} exceeds the enumeration budget of {budget}")]
    BudgetExceeded { n: u64, budget: u64 },
    #[error("series does not converge: {0}")]
    NonConvergent(String),
    #[error(
        "denominator factor {what} has magnitude {magnitude:.3e}, below the floor {floor:.1e}"
    )]
    DegenerateDenominator {
        what: String,
        magnitude: f64,
        floor: f64,
    },
    #[error("no acceptable sample for trial {trial} after {attempts} draws")]
    SamplingExhausted { trial: u64, attempts: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
