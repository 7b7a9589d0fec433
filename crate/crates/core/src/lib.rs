//! Exact and numeric machinery for generating functions of partitions with
//! bounded part differences.
//!
//! - [`series`]: truncated Laurent series over `Z[z]`
//! - [`gf`]: q-Pochhammer products, the master sum `S(α, β; q; t)`, its
//!   closed form and the four partition generating functions
//! - [`oracle`]: brute-force partition enumerators
//! - [`numeric`]: complex floating-point q-hypergeometric series and the
//!   lemma and proof-chain checks

pub mod error;
pub mod gf;
pub mod numeric;
pub mod oracle;
pub mod series;

pub use error::{Error, Result};
pub use series::{QSeries, ZPoly};
