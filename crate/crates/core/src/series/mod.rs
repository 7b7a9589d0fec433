//! Exact truncated Laurent series over `Z[z]`.
//!
//! Every formal computation in the crate happens in [`QSeries`]. Truncation
//! is explicit: each series carries the exponent through which its
//! coefficients are exact, and all operations propagate that bound.

mod qseries;
mod zpoly;

pub use qseries::{Mismatch, QSeries};
pub use zpoly::ZPoly;
