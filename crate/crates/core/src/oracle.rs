// SPDX-License-Identifier: Apache-2.0

//! Ground-truth counting of Deutsch paths.
//!
//! From level `l` a path may step up to `l + 1` or down to any level
//! `0 <= l' < l`. With an upper bound, up-steps leaving the strip are
//! forbidden. Counts come from a forward dynamic program using suffix sums;
//! tiny cases can also be enumerated exhaustively.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::{TruncatedSeries, Var};

/// Largest step count accepted by [`enumerate_paths`].
pub const MAX_ENUMERATION_STEPS: usize = 10;

/// Upper boundary of the strip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Upper {
    Unbounded,
    /// Highest allowed level, `m - 1` for a strip of `m` levels.
    Bound(usize),
}

/// Start level, end level and upper boundary of a path family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct StripSpec {
    pub t: usize,
    pub j: usize,
    pub upper: Upper,
}

impl StripSpec {
    pub fn unbounded(t: usize, j: usize) -> Self {
        Self {
            t,
            j,
            upper: Upper::Unbounded,
        }
    }

    /// Paths on levels `0..m` from `t` to `j`.
    pub fn strip(m: usize, t: usize, j: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParams("strip size m must be at least 1".into()));
        }
        let spec = Self {
            t,
            j,
            upper: Upper::Bound(m - 1),
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Number of levels in the strip, if bounded.
    pub fn height(&self) -> Option<usize> {
        match self.upper {
            Upper::Unbounded => None,
            Upper::Bound(top) => Some(top + 1),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let Upper::Bound(top) = self.upper {
            if self.t > top || self.j > top {
                return Err(Error::InvalidParams(format!(
                    "levels t={} and j={} must lie in 0..={top}",
                    self.t, self.j
                )));
            }
        }
        Ok(())
    }
}

/// `count[s][l]`: number of `s`-step paths from the start level to level `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    start: usize,
    rows: Vec<Vec<BigUint>>,
}

impl CountTable {
    /// Runs the dynamic program for `0..=n_max` steps. Without an upper
    /// bound the table is `start + n_max + 1` levels wide, which no path can
    /// exceed.
    pub fn build(n_max: usize, start: usize, upper: Upper) -> Result<Self> {
        let width = match upper {
            Upper::Unbounded => start + n_max + 1,
            Upper::Bound(top) => {
                if start > top {
                    return Err(Error::InvalidParams(format!(
                        "start level {start} exceeds upper boundary {top}"
                    )));
                }
                top + 1
            }
        };
        let mut first = vec![BigUint::zero(); width];
        first[start] = BigUint::from(1u32);
        let mut rows = Vec::with_capacity(n_max + 1);
        rows.push(first);
        for _ in 0..n_max {
            let next = step(rows.last().expect("nonempty"));
            rows.push(next);
        }
        Ok(Self { start, rows })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn steps(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    /// Count at step `s` and level `level`; zero outside the table width.
    pub fn get(&self, s: usize, level: usize) -> BigUint {
        self.rows[s].get(level).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Number of `s`-step paths ending anywhere.
    pub fn row_sum(&self, s: usize) -> BigUint {
        self.rows[s].iter().sum()
    }
}

fn step(cur: &[BigUint]) -> Vec<BigUint> {
    let width = cur.len();
    let mut next = vec![BigUint::zero(); width];
    // suffix = sum of cur[k] for k > l
    let mut suffix = BigUint::zero();
    for l in (0..width).rev() {
        let mut c = suffix.clone();
        if l > 0 {
            c += &cur[l - 1];
        }
        next[l] = c;
        suffix += &cur[l];
    }
    next
}

/// Number of `n`-step paths described by `spec`.
pub fn count_paths(n: usize, spec: &StripSpec) -> Result<BigUint> {
    spec.validate()?;
    let table = CountTable::build(n, spec.t, spec.upper)?;
    Ok(table.get(n, spec.j))
}

/// Series in `z` whose `n`-th coefficient is `count_paths(n, spec)`.
pub fn count_series(spec: &StripSpec, order: usize) -> Result<TruncatedSeries> {
    spec.validate()?;
    if order == 0 {
        return Err(Error::EmptySeries);
    }
    let table = CountTable::build(order - 1, spec.t, spec.upper)?;
    let coeffs: Vec<_> = (0..order)
        .map(|s| table.get(s, spec.j).into())
        .collect();
    TruncatedSeries::from_big_ints(Var::Z, &coeffs, order)
}

/// Every legal path as its list of level increments. Limited to
/// [`MAX_ENUMERATION_STEPS`] steps.
pub fn enumerate_paths(n: usize, spec: &StripSpec) -> Result<Vec<Vec<i64>>> {
    if n > MAX_ENUMERATION_STEPS {
        return Err(Error::TooManySteps {
            n,
            max: MAX_ENUMERATION_STEPS,
        });
    }
    spec.validate()?;
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(n);
    walk(spec.t, n, spec, &mut path, &mut out);
    Ok(out)
}

fn walk(level: usize, left: usize, spec: &StripSpec, path: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if left == 0 {
        if level == spec.j {
            out.push(path.clone());
        }
        return;
    }
    let up_ok = match spec.upper {
        Upper::Unbounded => true,
        Upper::Bound(top) => level < top,
    };
    if up_ok {
        path.push(1);
        walk(level + 1, left - 1, spec, path, out);
        path.pop();
    }
    for d in 1..=level {
        path.push(-(d as i64));
        walk(level - d, left - 1, spec, path, out);
        path.pop();
    }
}
