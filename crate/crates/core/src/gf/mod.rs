//! Formal generating functions built from monomial-parameter q-products.

mod families;
mod master;
mod monomial;
mod products;

pub use families::{
    bounded_diff_via_s, distinct_via_s, gf_bounded_diff, gf_distinct, gf_odd, gf_overpartition,
    odd_via_s, overpartition_via_s,
};
pub use master::{closed_form_cleared, eval_s, parameter_grid, s_term, ClearedForm, SParams};
pub use monomial::Monomial;
pub use products::{divide_by_pochhammer, pochhammer};
