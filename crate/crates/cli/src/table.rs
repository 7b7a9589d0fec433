//! Count tables from the enumerator, from series coefficients, or both
//! side by side.

use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::BigInt;
use qpl_core::gf;
use qpl_core::oracle::{Counts, FamilyKind, Oracle, PartitionFamily};
use qpl_core::ZPoly;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// partitions with part difference at most t
    P,
    /// distinct parts, difference at most t
    Pd,
    /// odd parts, difference at most t
    Po,
    /// overpartitions, split by number of overlined parts
    G,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::P => "p",
            Family::Pd => "pd",
            Family::Po => "po",
            Family::G => "g",
        }
    }

    fn kind(self) -> FamilyKind {
        match self {
            Family::P => FamilyKind::BoundedDiff,
            Family::Pd => FamilyKind::DistinctBoundedDiff,
            Family::Po => FamilyKind::OddBoundedDiff,
            Family::G => FamilyKind::OverpartitionBoundedDiff,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Oracle,
    Series,
    Both,
}

impl Source {
    fn name(self) -> &'static str {
        match self {
            Source::Oracle => "oracle",
            Source::Series => "series",
            Source::Both => "both",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub n: u64,
    /// Overlined-part count, only for `g`.
    pub m: Option<u32>,
    pub oracle: Option<BigInt>,
    pub series: Option<BigInt>,
}

impl Row {
    pub fn matches(&self) -> bool {
        self.oracle == self.series
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub family: Family,
    pub t: u64,
    pub source: Source,
    pub rows: Vec<Row>,
}

impl Table {
    pub fn all_match(&self) -> bool {
        self.source != Source::Both || self.rows.iter().all(Row::matches)
    }

    pub fn to_csv(&self) -> String {
        let refined = self.family == Family::G;
        let mut out = String::from(if refined { "n,m," } else { "n," });
        out.push_str(match self.source {
            Source::Both => "oracle,series,match\n",
            _ => "count\n",
        });
        for row in &self.rows {
            let _ = write!(out, "{},", row.n);
            if let Some(m) = row.m {
                let _ = write!(out, "{m},");
            }
            let _ = match (&row.oracle, &row.series) {
                (Some(o), Some(s)) => writeln!(out, "{o},{s},{}", row.matches()),
                (Some(c), None) | (None, Some(c)) => writeln!(out, "{c}"),
                (None, None) => writeln!(out),
            };
        }
        out
    }

    pub fn to_json(&self) -> Result<String, String> {
        let big = |c: &Option<BigInt>| {
            c.as_ref()
                .map(|c| {
                    u128::try_from(c).map_err(|_| format!("count {c} does not fit in 128 bits"))
                })
                .transpose()
        };
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let (oracle, series) = (big(&r.oracle)?, big(&r.series)?);
                Ok(if self.source == Source::Both {
                    JsonRow {
                        n: r.n,
                        m: r.m,
                        count: None,
                        oracle,
                        series,
                        matches: Some(r.matches()),
                    }
                } else {
                    JsonRow {
                        n: r.n,
                        m: r.m,
                        count: oracle.or(series),
                        oracle: None,
                        series: None,
                        matches: None,
                    }
                })
            })
            .collect::<Result<Vec<_>, String>>()?;
        let doc = JsonTable {
            family: self.family.name(),
            t: self.t,
            source: self.source.name(),
            rows,
        };
        Ok(serde_json::to_string_pretty(&doc).expect("table serializes"))
    }
}

#[derive(Serialize)]
struct JsonTable {
    family: &'static str,
    t: u64,
    source: &'static str,
    rows: Vec<JsonRow>,
}

#[derive(Serialize)]
struct JsonRow {
    n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    series: Option<u128>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
}

/// `n -> coefficient polynomial in z`, one entry per `n` in `1..=n_max`.
type Column = Vec<ZPoly>;

fn oracle_column(family: Family, t: u64, n_max: u64) -> Result<Column, String> {
    let fam = PartitionFamily::new(family.kind(), t).map_err(|e| e.to_string())?;
    let table = Oracle::default()
        .table(fam, n_max)
        .map_err(|e| e.to_string())?;
    Ok(match table.rows {
        Counts::Plain(rows) => rows.into_values().map(ZPoly::constant).collect(),
        Counts::Refined(rows) => rows
            .into_values()
            .map(|by_m| {
                let top = by_m.keys().max().copied().unwrap_or(0) as usize;
                let mut coeffs = vec![BigInt::from(0); top + 1];
                for (m, k) in by_m {
                    coeffs[m as usize] = k.into();
                }
                ZPoly::from_coeffs(coeffs)
            })
            .collect(),
    })
}

fn series_column(family: Family, t: u64, n_max: u64, max_order: u64) -> Result<Column, String> {
    if n_max > max_order {
        return Err(format!(
            "--n-max {n_max} exceeds the maximum series order {max_order}"
        ));
    }
    let t32 = u32::try_from(t).map_err(|_| format!("--t {t} is too large"))?;
    let need_positive = |what: &str| {
        if t32 == 0 {
            Err(format!("the {what} series needs --t at least 1"))
        } else {
            Ok(())
        }
    };
    let order = n_max as i64;
    let series = match family {
        Family::P => {
            need_positive("p")?;
            gf::gf_bounded_diff(t32, order)
        }
        Family::Pd => gf::gf_distinct(t32, order),
        Family::G => {
            need_positive("g")?;
            gf::gf_overpartition(t32, order)
        }
        // windows 2k and 2k + 1 admit the same odd partitions
        Family::Po => {
            if t32 < 2 {
                return Err("the po series needs --t at least 2".into());
            }
            gf::gf_odd(t32 / 2, order)
        }
    }
    .map_err(|e| e.to_string())?;
    (1..=n_max)
        .map(|n| series.coefficient(n as i64).map_err(|e| e.to_string()))
        .collect()
}

/// Builds the table. Every failure here is a usage or runtime error.
pub fn build_table(
    family: Family,
    t: u64,
    n_max: u64,
    source: Source,
    max_order: u64,
) -> Result<Table, String> {
    let oracle = match source {
        Source::Series => None,
        _ => Some(oracle_column(family, t, n_max)?),
    };
    let series = match source {
        Source::Oracle => None,
        _ => Some(series_column(family, t, n_max, max_order)?),
    };
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let i = (n - 1) as usize;
        let o = oracle.as_ref().map(|c| &c[i]);
        let s = series.as_ref().map(|c| &c[i]);
        if family == Family::G {
            let top = [o, s]
                .into_iter()
                .flatten()
                .filter_map(ZPoly::degree)
                .max()
                .unwrap_or(0);
            for m in 0..=top {
                rows.push(Row {
                    n,
                    m: Some(m as u32),
                    oracle: o.map(|p| p.coeff(m)),
                    series: s.map(|p| p.coeff(m)),
                });
            }
        } else {
            rows.push(Row {
                n,
                m: None,
                oracle: o.map(|p| p.coeff(0)),
                series: s.map(|p| p.coeff(0)),
            });
        }
    }
    Ok(Table {
        family,
        t,
        source,
        rows,
    })
}
