// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::series::Var;

/// Errors raised by the series, oracle and solver layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable mismatch: {left:?} vs {right:?}")]
    VarMismatch { left: Var, right: Var },
    #[error("truncation order must be at least 1")]
    EmptySeries,
    #[error("divisor has zero constant term")]
    NonUnitDivisor,
    #[error("negative power of a non-unit series")]
    NegativePowerOfNonUnit,
    #[error("square root needs constant term 1")]
    SqrtConstantTerm,
    #[error("inner series of a composition must have zero constant term")]
    CompositionConstantTerm,
    #[error("coefficient {index} requested from a series of order {order}")]
    BeyondOrder { index: usize, order: usize },
    #[error("coefficient {index} is not a nonnegative integer")]
    NotACount { index: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("enumeration limited to {max} steps, got {n}")]
    TooManySteps { n: usize, max: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
