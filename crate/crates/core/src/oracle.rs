//! Brute-force enumerators for partitions with bounded part difference.
//!
//! Partitions are walked by smallest part `r`: every partition counted here
//! uses `r` at least once and otherwise only parts from the window
//! `[r, r + t]`. Nothing in this module touches q-series; it is the ground
//! truth the series coefficients are checked against.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 80;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `p_t(n)`
    BoundedDiff,
    /// `pd_t(n)`
    DistinctBoundedDiff,
    /// `po_t(n)`
    OddBoundedDiff,
    /// `g_t(m, n)`
    OverpartitionBoundedDiff,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PartitionFamily {
    kind: FamilyKind,
    t: u64,
}

impl PartitionFamily {
    /// `t = 0` is only meaningful for distinct parts.
    pub fn new(kind: FamilyKind, t: u64) -> Result<Self> {
        if t == 0 && kind != FamilyKind::DistinctBoundedDiff {
            return Err(Error::Inadmissible(format!("{kind:?} requires t >= 1")));
        }
        Ok(Self { kind, t })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn t(&self) -> u64 {
        self.t
    }
}

impl fmt::Display for PartitionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            FamilyKind::BoundedDiff => "p",
            FamilyKind::DistinctBoundedDiff => "pd",
            FamilyKind::OddBoundedDiff => "po",
            FamilyKind::OverpartitionBoundedDiff => "g",
        };
        write!(f, "{name}_{}", self.t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counts {
    /// `n -> count`
    Plain(BTreeMap<u64, u64>),
    /// `n -> (m -> count)`, `m` the number of overlined parts
    Refined(BTreeMap<u64, BTreeMap<u32, u64>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub family: PartitionFamily,
    pub rows: Counts,
}

/// Enumerator with a hard bound on `n`; requests past the bound fail
/// instead of silently returning partial counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    budget: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
        }
    }
}

impl Oracle {
    pub fn new(budget: u64) -> Self {
        Self { budget }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    fn check(&self, n: u64) -> Result<()> {
        if n > self.budget {
            return Err(Error::BudgetExceeded {
                n,
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// `p_t(n)`.
    pub fn count_bounded_diff(&self, n: u64, t: u64) -> Result<u64> {
        self.check(n)?;
        let mut count = 0;
        walk(n, t, Shape::Any, |_| count += 1);
        Ok(count)
    }

    /// `pd_t(n)`.
    pub fn count_distinct_bounded_diff(&self, n: u64, t: u64) -> Result<u64> {
        self.check(n)?;
        let mut count = 0;
        walk(n, t, Shape::Distinct, |_| count += 1);
        Ok(count)
    }

    /// `po_t(n)`, for any `t` (odd or even).
    pub fn count_odd_bounded_diff(&self, n: u64, t: u64) -> Result<u64> {
        self.check(n)?;
        let mut count = 0;
        walk(n, t, Shape::Odd, |_| count += 1);
        Ok(count)
    }

    /// `m -> g_t(m, n)`. Each distinct part value may be overlined or not,
    /// except that the largest part stays plain when the difference is
    /// exactly `t`.
    pub fn count_overpartition(&self, n: u64, t: u64) -> Result<BTreeMap<u32, u64>> {
        self.check(n)?;
        let mut by_m = BTreeMap::new();
        walk(n, t, Shape::Any, |distinct| {
            let k = distinct.len();
            let largest_locked = distinct[0] - distinct[k - 1] == t;
            for mask in 0u32..(1 << k) {
                // bit 0 is the largest part
                if largest_locked && mask & 1 == 1 {
                    continue;
                }
                *by_m.entry(mask.count_ones()).or_insert(0) += 1;
            }
        });
        Ok(by_m)
    }

    /// Partitions of `n` in the family, split by smallest part. Overlined
    /// variants are summed over the number of overlines.
    pub fn count_by_smallest_part(
        &self,
        family: PartitionFamily,
        n: u64,
    ) -> Result<BTreeMap<u64, u64>> {
        self.check(n)?;
        let t = family.t;
        let shape = match family.kind {
            FamilyKind::DistinctBoundedDiff => Shape::Distinct,
            FamilyKind::OddBoundedDiff => Shape::Odd,
            _ => Shape::Any,
        };
        let overlined = family.kind == FamilyKind::OverpartitionBoundedDiff;
        let mut by_r = BTreeMap::new();
        walk(n, t, shape, |distinct| {
            let k = distinct.len() as u32;
            let r = distinct[k as usize - 1];
            let weight = match (overlined, distinct[0] - r == t) {
                (false, _) => 1,
                (true, true) => 1 << (k - 1),
                (true, false) => 1 << k,
            };
            *by_r.entry(r).or_insert(0) += weight;
        });
        Ok(by_r)
    }

    pub fn table(&self, family: PartitionFamily, n_max: u64) -> Result<CountTable> {
        self.check(n_max)?;
        let t = family.t;
        let rows = match family.kind {
            FamilyKind::OverpartitionBoundedDiff => Counts::Refined(
                (1..=n_max)
                    .map(|n| Ok((n, self.count_overpartition(n, t)?)))
                    .collect::<Result<_>>()?,
            ),
            kind => {
                let count = |n| match kind {
                    FamilyKind::BoundedDiff => self.count_bounded_diff(n, t),
                    FamilyKind::DistinctBoundedDiff => self.count_distinct_bounded_diff(n, t),
                    _ => self.count_odd_bounded_diff(n, t),
                };
                Counts::Plain(
                    (1..=n_max)
                        .map(|n| Ok((n, count(n)?)))
                        .collect::<Result<_>>()?,
                )
            }
        };
        Ok(CountTable { family, rows })
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Shape {
    Any,
    Distinct,
    Odd,
}

/// Calls `visit` once per partition of `n` with difference at most `t`
/// and the given shape, passing the distinct part values used (largest
/// first, smallest last).
fn walk(n: u64, t: u64, shape: Shape, mut visit: impl FnMut(&[u64])) {
    let mut used = Vec::new();
    for r in 1..=n {
        if shape == Shape::Odd && r % 2 == 0 {
            continue;
        }
        let top = (r + t).min(n);
        let window: Vec<u64> = (r + 1..=top)
            .rev()
            .filter(|p| shape != Shape::Odd || p % 2 == 1)
            .collect();
        // One copy of r is mandatory.
        fill(&window, n - r, r, shape, &mut used, &mut visit);
    }
}

fn fill(
    window: &[u64],
    remaining: u64,
    r: u64,
    shape: Shape,
    used: &mut Vec<u64>,
    visit: &mut impl FnMut(&[u64]),
) {
    let Some((&part, rest)) = window.split_first() else {
        // Whatever is left goes to the smallest part.
        let ok = match shape {
            Shape::Distinct => remaining == 0,
            _ => remaining.is_multiple_of(r),
        };
        if ok {
            used.push(r);
            visit(used);
            used.pop();
        }
        return;
    };
    let max_mult = match shape {
        Shape::Distinct => 1.min(remaining / part),
        _ => remaining / part,
    };
    for mult in 0..=max_mult {
        if mult > 0 {
            used.push(part);
        }
        fill(rest, remaining - mult * part, r, shape, used, visit);
        if mult > 0 {
            used.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every partition of `n` as a non-increasing vector.
    fn all_partitions(n: u64) -> Vec<Vec<u64>> {
        fn go(n: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if n == 0 {
                out.push(cur.clone());
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                go(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    fn spread(p: &[u64]) -> u64 {
        p[0] - p[p.len() - 1]
    }

    #[test]
    fn bounded_diff_examples() {
        let o = Oracle::default();
        for t in 1..5 {
            assert_eq!(o.count_bounded_diff(1, t).unwrap(), 1);
        }
        assert_eq!(o.count_bounded_diff(4, 2).unwrap(), 5);
        assert_eq!(o.count_bounded_diff(4, 1).unwrap(), 4);
    }

    #[test]
    fn distinct_examples() {
        let o = Oracle::default();
        assert_eq!(o.count_distinct_bounded_diff(1, 3).unwrap(), 1);
        assert_eq!(o.count_distinct_bounded_diff(6, 2).unwrap(), 3);
        assert_eq!(o.count_distinct_bounded_diff(5, 2).unwrap(), 2);
        assert_eq!(o.count_distinct_bounded_diff(7, 0).unwrap(), 1);
    }

    #[test]
    fn odd_examples() {
        let o = Oracle::default();
        assert_eq!(o.count_odd_bounded_diff(2, 2).unwrap(), 1);
        assert_eq!(o.count_odd_bounded_diff(5, 2).unwrap(), 3);
        assert_eq!(o.count_odd_bounded_diff(4, 2).unwrap(), 2);
    }

    #[test]
    fn overpartition_examples() {
        let o = Oracle::default();
        let g = o.count_overpartition(2, 1).unwrap();
        assert_eq!(g, BTreeMap::from([(0, 2), (1, 2)]));
        for t in 1..4 {
            let g = o.count_overpartition(1, t).unwrap();
            assert_eq!(g, BTreeMap::from([(0, 1), (1, 1)]));
        }
    }

    #[test]
    fn overpartition_total_matches_direct_recount() {
        // Unstratified recount: 2^k overlinings per partition with k
        // distinct parts, halved when the largest part is locked.
        let o = Oracle::default();
        for t in 1..=4 {
            for n in 1..=18 {
                let direct: u64 = all_partitions(n)
                    .iter()
                    .filter(|p| spread(p) <= t)
                    .map(|p| {
                        let mut d = p.clone();
                        d.dedup();
                        let k = d.len() as u32;
                        if spread(p) == t {
                            1 << (k - 1)
                        } else {
                            1 << k
                        }
                    })
                    .sum();
                let total: u64 = o.count_overpartition(n, t).unwrap().values().sum();
                assert_eq!(total, direct, "n = {n}, t = {t}");
            }
        }
    }

    #[test]
    fn agrees_with_unrestricted_filter() {
        let o = Oracle::default();
        for n in 1..=20 {
            let parts = all_partitions(n);
            for t in 0..=6 {
                let count = |pred: &dyn Fn(&Vec<u64>) -> bool| {
                    parts.iter().filter(|p| spread(p) <= t && pred(p)).count() as u64
                };
                if t > 0 {
                    assert_eq!(o.count_bounded_diff(n, t).unwrap(), count(&|_| true));
                    assert_eq!(
                        o.count_odd_bounded_diff(n, t).unwrap(),
                        count(&|p| p.iter().all(|x| x % 2 == 1))
                    );
                }
                assert_eq!(
                    o.count_distinct_bounded_diff(n, t).unwrap(),
                    count(&|p| p.windows(2).all(|w| w[0] > w[1]))
                );
            }
        }
    }

    #[test]
    fn overlines_never_exceed_distinct_parts() {
        let o = Oracle::default();
        for t in 1..=5 {
            for n in 1..=25 {
                let g = o.count_overpartition(n, t).unwrap();
                let max_m = *g.keys().max().unwrap() as u64;
                assert!(max_m <= t + 1);
                // a partition of n has fewer than sqrt(2n) + 1 distinct parts
                assert!(max_m * (max_m + 1) / 2 <= n);
            }
        }
    }

    #[test]
    fn budget_enforced() {
        let o = Oracle::new(10);
        assert_eq!(
            o.count_bounded_diff(11, 2),
            Err(Error::BudgetExceeded { n: 11, budget: 10 })
        );
        assert!(o.count_overpartition(10, 2).is_ok());
        assert!(Oracle::default().count_odd_bounded_diff(81, 3).is_err());
    }

    #[test]
    fn tables() {
        let o = Oracle::default();
        let fam = PartitionFamily::new(FamilyKind::DistinctBoundedDiff, 2).unwrap();
        let table = o.table(fam, 6).unwrap();
        let Counts::Plain(rows) = table.rows else {
            panic!("expected plain counts")
        };
        assert_eq!(
            rows.values().copied().collect::<Vec<_>>(),
            vec![1, 1, 2, 2, 2, 3]
        );
        assert!(PartitionFamily::new(FamilyKind::BoundedDiff, 0).is_err());
        assert_eq!(fam.to_string(), "pd_2");
    }
}
