// SPDX-License-Identifier: Apache-2.0

//! Named verification suites cross-checking the independent routes to the
//! path counts. Cases inside a suite run in parallel.

use std::fmt::Debug;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::kernel::{
    f_end_zero_v, f_start_zero_v, f_total, f_unbounded_closed, f_unbounded_closed_v,
    f_unbounded_sum, kernel_identity, roots_r2,
};
use crate::oracle::{count_series, CountTable, StripSpec, Upper};
use crate::poly::PolyMatrix;
use crate::series::{motzkin_v, Substitution, TruncatedSeries, Var};
use crate::strip::{
    det_d_replaced, det_dm_closed, det_recursion_check, det_replaced_poly, phi_closed_v_impl,
    phi_limit, phi_shifted, solve_series, z_poly_to_v,
};
use crate::V_ORDER_MARGIN;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Suite {
    Kernel,
    Roots,
    Determinant,
    Recursion,
    Cramer,
    Oracle,
    Shifted,
    Stabilization,
    RowSums,
    Anchors,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Kernel,
        Suite::Roots,
        Suite::Determinant,
        Suite::Recursion,
        Suite::Cramer,
        Suite::Oracle,
        Suite::Shifted,
        Suite::Stabilization,
        Suite::RowSums,
        Suite::Anchors,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Kernel => "kernel",
            Suite::Roots => "roots",
            Suite::Determinant => "determinant",
            Suite::Recursion => "recursion",
            Suite::Cramer => "cramer",
            Suite::Oracle => "oracle",
            Suite::Shifted => "shifted",
            Suite::Stabilization => "stabilization",
            Suite::RowSums => "row-sums",
            Suite::Anchors => "anchors",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Bounds for the verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest strip size.
    pub m_max: usize,
    /// Largest start (and end) level for unbounded families and shifted strips.
    pub t_max: usize,
    /// Largest step count compared against the dynamic program.
    pub n_max: usize,
    /// Truncation order in `z` for series comparisons.
    pub trunc: usize,
    /// Truncation order in `v` for determinant comparisons.
    pub v_order: usize,
    /// Perturbs the strip closed form so that dependent suites must fail.
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            m_max: 6,
            t_max: 5,
            n_max: 12,
            trunc: 16,
            v_order: 31,
            inject_fault: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub pass: bool,
    pub cases: usize,
    #[serde(skip)]
    pub failures: Vec<String>,
}

fn check_all<I, F>(name: &str, items: Vec<I>, check: F) -> SuiteReport
where
    I: Debug + Send + Sync,
    F: Fn(&I) -> Result<bool> + Sync,
{
    let failures: Vec<String> = items
        .par_iter()
        .filter_map(|item| match check(item) {
            Ok(true) => None,
            Ok(false) => Some(format!("{item:?}: mismatch")),
            Err(e) => Some(format!("{item:?}: {e}")),
        })
        .collect();
    SuiteReport {
        name: name.to_owned(),
        pass: failures.is_empty(),
        cases: items.len(),
        failures,
    }
}

fn strip_triples(m_max: usize) -> Vec<(usize, usize, usize)> {
    (1..=m_max)
        .flat_map(|m| (0..m).flat_map(move |t| (0..m).map(move |j| (m, t, j))))
        .collect()
}

fn pairs(max: usize) -> Vec<(usize, usize)> {
    (0..=max).flat_map(|t| (0..=max).map(move |j| (t, j))).collect()
}

impl VerifyConfig {
    fn phi_closed(&self, m: usize, t: usize, j: usize, order: usize) -> Result<TruncatedSeries> {
        let v = phi_closed_v_impl(m, t, j, order + V_ORDER_MARGIN, self.inject_fault)?;
        Substitution::v_to_z(v.order())?.apply(&v)?.truncate(order)
    }

    pub fn run_suite(&self, suite: Suite) -> SuiteReport {
        let name = suite.name();
        let n = self.trunc;
        match suite {
            Suite::Kernel => check_all(name, (0..=self.t_max as u32).collect(), |&t| {
                Ok(kernel_identity(t))
            }),
            Suite::Roots => check_all(name, vec![n.max(2)], |&order| {
                let roots = roots_r2(order)?;
                Ok(*roots.r2() == motzkin_v(order)? && roots.residual()?.is_zero())
            }),
            Suite::Determinant => {
                let mut items: Vec<(usize, Option<(usize, usize)>)> =
                    (1..=self.m_max).map(|m| (m, None)).collect();
                items.extend(
                    strip_triples(self.m_max)
                        .into_iter()
                        .map(|(m, t, j)| (m, Some((t, j)))),
                );
                check_all(name, items, |&(m, tj)| match tj {
                    None => {
                        let exact = PolyMatrix::strip_system(m).det()?;
                        Ok(z_poly_to_v(&exact, self.v_order)? == det_dm_closed(m, self.v_order)?)
                    }
                    Some((t, j)) => {
                        let exact = det_replaced_poly(m, t, j)?;
                        Ok(z_poly_to_v(&exact, self.v_order)?
                            == det_d_replaced(m, t, j, self.v_order)?)
                    }
                })
            }
            Suite::Recursion => check_all(name, vec![self.m_max], |&m| {
                det_recursion_check(m, self.v_order)
            }),
            Suite::Cramer => {
                let items: Vec<(usize, usize)> = (1..=self.m_max)
                    .flat_map(|m| (0..m).map(move |t| (m, t)))
                    .collect();
                check_all(name, items, |&(m, t)| {
                    let solved = solve_series(m, t, n)?;
                    let dm = det_dm_closed(m, n + V_ORDER_MARGIN)?;
                    for j in 0..m {
                        if solved.phi()[j] != self.phi_closed(m, t, j, n)? {
                            return Ok(false);
                        }
                        let ratio = det_d_replaced(m, t, j, n + V_ORDER_MARGIN)?.div(&dm)?;
                        let closed =
                            phi_closed_v_impl(m, t, j, n + V_ORDER_MARGIN, self.inject_fault)?;
                        if ratio != closed {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                })
            }
            Suite::Oracle => {
                let order = self.n_max + 1;
                let mut items: Vec<(Option<usize>, usize, usize)> = pairs(self.t_max)
                    .into_iter()
                    .map(|(t, j)| (None, t, j))
                    .collect();
                items.extend(
                    strip_triples(self.m_max)
                        .into_iter()
                        .map(|(m, t, j)| (Some(m), t, j)),
                );
                check_all(name, items, |&(m, t, j)| match m {
                    None => {
                        let dp = count_series(&StripSpec::unbounded(t, j), order)?;
                        Ok(f_unbounded_closed(t, j, order)? == dp
                            && f_unbounded_sum(t, j, order)? == dp)
                    }
                    Some(m) => {
                        let dp = count_series(&StripSpec::strip(m, t, j)?, order)?;
                        Ok(self.phi_closed(m, t, j, order)? == dp)
                    }
                })
            }
            Suite::Shifted => {
                let items: Vec<(usize, usize, i64)> = (0..=self.t_max)
                    .flat_map(|h| {
                        (0..=self.t_max)
                            .flat_map(move |d| (-(d as i64)..=h as i64).map(move |i| (h, d, i)))
                    })
                    .collect();
                check_all(name, items, |&(h, d, i)| {
                    let j = (i + d as i64) as usize;
                    Ok(phi_shifted(h, d, i, n)? == self.phi_closed(h + d + 1, d, j, n)?)
                })
            }
            Suite::Stabilization => {
                let items: Vec<(usize, usize, usize)> = pairs(self.t_max.min(4))
                    .into_iter()
                    .flat_map(|(t, j)| (0..=self.n_max.min(10)).map(move |k| (t, j, k)))
                    .collect();
                check_all(name, items, |&(t, j, k)| {
                    let order = k + 1;
                    let m = (t + k + 1).max(j + 1);
                    Ok(self.phi_closed(m, t, j, order)? == phi_limit(t, j, order)?)
                })
            }
            Suite::RowSums => check_all(name, (0..=self.t_max).collect(), |&t| {
                let mut acc = TruncatedSeries::zero(Var::Z, n)?;
                for j in 0..=t + n {
                    acc = acc.add(&f_unbounded_closed(t, j, n)?)?;
                }
                let table = CountTable::build(n - 1, t, Upper::Unbounded)?;
                let walks: Vec<_> = (0..n).map(|s| table.row_sum(s).into()).collect();
                let total = f_total(t, n)?;
                Ok(acc == total && total == TruncatedSeries::from_big_ints(Var::Z, &walks, n)?)
            }),
            Suite::Anchors => {
                let items: Vec<(usize, usize)> = (0..=self.t_max)
                    .map(|j| (0, j))
                    .chain((1..=self.t_max).map(|t| (t, 0)))
                    .collect();
                check_all(name, items, |&(t, j)| {
                    let nv = n + V_ORDER_MARGIN;
                    let special = if t == 0 {
                        f_start_zero_v(j, nv)?
                    } else {
                        f_end_zero_v(t, nv)?
                    };
                    let z = Substitution::v_to_z(nv)?.apply(&special)?.truncate(n)?;
                    Ok(special == f_unbounded_closed_v(t, j, nv)?
                        && z == count_series(&StripSpec::unbounded(t, j), n)?
                        && z == f_unbounded_sum(t, j, n)?)
                })
            }
        }
    }

    pub fn run(&self, suites: &[Suite]) -> Vec<SuiteReport> {
        suites.par_iter().map(|&s| self.run_suite(s)).collect()
    }
}

pub fn all_pass(reports: &[SuiteReport]) -> bool {
    reports.iter().all(|r| r.pass)
}
