// SPDX-License-Identifier: Apache-2.0

//! Exact enumeration of Deutsch paths: lattice paths with up-steps `+1` and
//! down-steps `-d` for every `d >= 1`, above level 0 and optionally below a
//! ceiling `m - 1`.
//!
//! Counts come from three independent routes which are compared against
//! each other:
//!
//! * [`oracle`]: dynamic programming and exhaustive enumeration,
//! * [`kernel`]: kernel-method generating functions without a ceiling,
//! * [`strip`]: the banded linear system for a strip, solved by series
//!   elimination, by exact determinants, and by closed forms in `v` where
//!   `z = v / (1 + v + v^2)`.
//!
//! [`verify`] bundles the cross-checks into named suites.

pub mod bivar;
pub mod error;
mod forms;
pub mod kernel;
pub mod oracle;
pub mod output;
pub mod poly;
pub mod series;
pub mod strip;
pub mod verify;

pub use error::{Error, Result};
pub use forms::V_ORDER_MARGIN;
pub use oracle::{count_paths, count_series, enumerate_paths, CountTable, StripSpec, Upper};
pub use series::{motzkin_v, v_to_z, TruncatedSeries, Var};
