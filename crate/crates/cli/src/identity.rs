//! Formal identity checks: closed-form generating functions against the
//! master sum and against brute-force counts.

use clap::ValueEnum;
use num_bigint::BigInt;
use qpl_core::gf::{self, SParams};
use qpl_core::oracle::Oracle;
use qpl_core::{QSeries, ZPoly};

use crate::report::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    /// bounded part difference, p_t
    Bk,
    /// overpartitions, g_t
    Cy,
    /// distinct parts, pd_t
    Pdt,
    /// odd parts, po_2t
    Pot,
    /// the master sum, cleared of denominators, over the monomial grid
    Main,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Bk => "bk",
            Identity::Cy => "cy",
            Identity::Pdt => "pdt",
            Identity::Pot => "pot",
            Identity::Main => "main",
        }
    }
}

/// Rejects parameter combinations that make no sense before any work is
/// done. The message becomes a usage error.
pub fn validate(identity: Identity, t: u32, order: u32, max_order: u32) -> Result<(), String> {
    if t == 0 && identity != Identity::Pdt {
        return Err(format!(
            "--t must be at least 1 for identity {}",
            identity.name()
        ));
    }
    if order > max_order {
        return Err(format!("--order {order} exceeds the maximum {max_order}"));
    }
    Ok(())
}

/// Runs one identity check. Core errors end up as status `error` in the
/// report rather than as an `Err`.
pub fn verify_identity(
    identity: Identity,
    t: u32,
    order: u32,
    oracle_n: u64,
) -> VerificationReport {
    let mut rep = VerificationReport::new(format!("identity.{}", identity.name()), order.into());
    rep.param("identity", identity.name())
        .param("t", t)
        .param("order", order);
    let order = i64::from(order);
    let oracle_n = oracle_n.min(order.max(0) as u64);
    let result = match identity {
        Identity::Bk => bk(&mut rep, t, order, oracle_n),
        Identity::Cy => cy(&mut rep, t, order, oracle_n),
        Identity::Pdt => pdt(&mut rep, t, order, oracle_n),
        Identity::Pot => pot(&mut rep, t, order, oracle_n),
        Identity::Main => main_grid(&mut rep, t, order),
    };
    if let Err(e) = result {
        rep.error(e);
    }
    rep
}

fn compare(rep: &mut VerificationReport, label: &str, expected: &QSeries, actual: &QSeries) {
    if let Some(m) = expected.first_mismatch(actual) {
        rep.fail(format!("{label}: q^{}", m.exponent), m.left, m.right);
    }
}

fn compare_counts(
    rep: &mut VerificationReport,
    label: &str,
    series: &QSeries,
    n_max: u64,
    count: impl Fn(u64) -> qpl_core::Result<u64>,
) -> qpl_core::Result<()> {
    for n in 1..=n_max {
        let want = ZPoly::constant(count(n)?);
        let got = series.coefficient(n as i64)?;
        if got != want {
            rep.fail(format!("{label}: n={n}"), want, got);
            break;
        }
    }
    rep.observe("oracle_through", n_max);
    Ok(())
}

fn bk(rep: &mut VerificationReport, t: u32, order: i64, oracle_n: u64) -> qpl_core::Result<()> {
    let closed = gf::gf_bounded_diff(t, order)?;
    compare(
        rep,
        "closed form vs sum",
        &closed,
        &gf::bounded_diff_via_s(t, order)?,
    );
    let p = SParams::new(gf::Monomial::ZERO, gf::Monomial::q(0), 1, t)?;
    let cleared = gf::closed_form_cleared(&p, order)?;
    compare(rep, "cleared form", &cleared.rhs, &cleared.lhs);
    let o = Oracle::default();
    compare_counts(rep, "oracle", &closed, oracle_n, |n| {
        o.count_bounded_diff(n, t.into())
    })
}

fn cy(rep: &mut VerificationReport, t: u32, order: i64, oracle_n: u64) -> qpl_core::Result<()> {
    let closed = gf::gf_overpartition(t, order)?;
    compare(
        rep,
        "closed form vs sum",
        &closed,
        &gf::overpartition_via_s(t, order)?,
    );
    let o = Oracle::default();
    for n in 1..=oracle_n {
        let counts = o.count_overpartition(n, t.into())?;
        let top = counts.keys().max().copied().unwrap_or(0) as usize;
        let mut coeffs = vec![BigInt::from(0); top + 1];
        for (m, k) in counts {
            coeffs[m as usize] = k.into();
        }
        let want = ZPoly::from_coeffs(coeffs);
        let got = closed.coefficient(n as i64)?;
        if got != want {
            rep.fail(format!("oracle: n={n}"), want, got);
            break;
        }
    }
    rep.observe("oracle_through", oracle_n);
    Ok(())
}

fn pdt(rep: &mut VerificationReport, t: u32, order: i64, oracle_n: u64) -> qpl_core::Result<()> {
    let closed = gf::gf_distinct(t, order)?;
    compare(
        rep,
        "closed form vs sum",
        &closed,
        &gf::distinct_via_s(t, order)?,
    );
    let o = Oracle::default();
    compare_counts(rep, "oracle", &closed, oracle_n, |n| {
        o.count_distinct_bounded_diff(n, t.into())
    })
}

fn pot(rep: &mut VerificationReport, t: u32, order: i64, oracle_n: u64) -> qpl_core::Result<()> {
    let closed = gf::gf_odd(t, order)?;
    compare(
        rep,
        "closed form vs sum",
        &closed,
        &gf::odd_via_s(t, order)?,
    );
    let o = Oracle::default();
    let w = 2 * u64::from(t);
    compare_counts(rep, "oracle", &closed, oracle_n, |n| {
        o.count_odd_bounded_diff(n, w)
    })?;
    for n in 1..=oracle_n {
        let (even, odd) = (
            o.count_odd_bounded_diff(n, w)?,
            o.count_odd_bounded_diff(n, w + 1)?,
        );
        if even != odd {
            rep.fail(format!("window {w} vs {}: n={n}", w + 1), even, odd);
            break;
        }
    }
    Ok(())
}

fn main_grid(rep: &mut VerificationReport, t: u32, order: i64) -> qpl_core::Result<()> {
    let points: Vec<SParams> = gf::parameter_grid(t)
        .into_iter()
        .filter(|p| p.t() == t)
        .collect();
    let mut degenerate = 0u64;
    for p in &points {
        let cf = gf::closed_form_cleared(p, order)?;
        let label = format!("alpha={}, beta={}, d={}", p.alpha(), p.beta(), p.d());
        compare(rep, &label, &cf.rhs, &cf.lhs);
        if p.is_degenerate() {
            degenerate += 1;
            if !(cf.lhs.is_zero() && cf.rhs.is_zero()) {
                rep.fail(format!("{label}: degenerate"), "both sides zero", &cf.lhs);
            }
        }
    }
    rep.observe("parameter_points", points.len() as u64);
    rep.observe("degenerate_points", degenerate);
    Ok(())
}
