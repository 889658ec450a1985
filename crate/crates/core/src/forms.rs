// SPDX-License-Identifier: Apache-2.0

//! Building blocks of the closed forms, all rational functions of `v`
//! evaluated as truncated series.

use crate::error::Result;
use crate::series::{TruncatedSeries, Var};

/// Extra `v`-order carried before mapping a closed form to `z`.
pub const V_ORDER_MARGIN: usize = 2;

#[derive(Debug, Clone, Copy)]
pub(crate) struct VForms {
    pub order: usize,
}

impl VForms {
    pub fn new(order: usize) -> Self {
        Self { order }
    }

    pub fn one(&self) -> Result<TruncatedSeries> {
        TruncatedSeries::one(Var::V, self.order)
    }

    /// `v^k`
    pub fn v_pow(&self, k: usize) -> Result<TruncatedSeries> {
        TruncatedSeries::monomial(Var::V, k, 1, self.order)
    }

    /// `(1 + v)^e`, any integer `e`.
    pub fn one_plus_v_pow(&self, e: i64) -> Result<TruncatedSeries> {
        TruncatedSeries::from_ints(Var::V, &[1, 1], self.order)?.pow(e)
    }

    /// `1 + v + v^2`
    pub fn kernel_factor(&self) -> Result<TruncatedSeries> {
        TruncatedSeries::from_ints(Var::V, &[1, 1, 1], self.order)
    }

    /// `(1 + v + v^2)^e`, any integer `e`.
    pub fn kernel_factor_pow(&self, e: i64) -> Result<TruncatedSeries> {
        self.kernel_factor()?.pow(e)
    }

    /// `1 - v^k` for `k >= 1`.
    pub fn one_minus_v_pow(&self, k: usize) -> Result<TruncatedSeries> {
        let mut s = self.one()?;
        s = s.sub(&self.v_pow(k)?)?;
        Ok(s)
    }

    /// Product of all factors.
    pub fn product(&self, factors: &[TruncatedSeries]) -> Result<TruncatedSeries> {
        factors.iter().try_fold(self.one()?, |acc, f| acc.mul(f))
    }
}
