// SPDX-License-Identifier: Apache-2.0

//! Kernel-method generating functions for paths with a lower boundary only.
//!
//! `F(z, u) = sum_j f_j(z) u^j` has kernel `z(u-1)^2 + (u-1)(z-1) + z`,
//! whose small root (after the shift `u = 1 + r`) is `r2 = v(z)`. The large
//! root `r1 = 1/v` never appears directly: every factor `1/(z(1+r1))` is
//! rewritten as `(1+v+v^2)/(1+v)`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bivar::BivarPoly;
use crate::error::{Error, Result};
use crate::forms::{VForms, V_ORDER_MARGIN};
use crate::series::{motzkin_v, Substitution, TruncatedSeries, Var};

/// The small kernel root `r2` as a series in `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelRoots {
    r2: TruncatedSeries,
}

impl KernelRoots {
    pub fn r2(&self) -> &TruncatedSeries {
        &self.r2
    }

    pub fn order(&self) -> usize {
        self.r2.order()
    }

    /// `z r^2 + (z - 1) r + z` evaluated at `r = r2`.
    pub fn residual(&self) -> Result<TruncatedSeries> {
        let n = self.order();
        let z = TruncatedSeries::monomial(Var::Z, 1, 1, n)?;
        let z_minus_one = TruncatedSeries::from_ints(Var::Z, &[-1, 1], n)?;
        let r = &self.r2;
        z.mul(&r.mul(r)?)?.add(&z_minus_one.mul(r)?)?.add(&z)
    }
}

/// `r2 = (1 - z - sqrt(1 - 2z - 3z^2)) / (2z)`, cross-checked against the
/// fixed point of `v = z(1 + v + v^2)`.
pub fn roots_r2(order: usize) -> Result<KernelRoots> {
    if order < 2 {
        return Err(Error::InvalidParams("root order must be at least 2".into()));
    }
    let disc = TruncatedSeries::from_ints(Var::Z, &[1, -2, -3], order + 1)?;
    let numerator = TruncatedSeries::from_ints(Var::Z, &[1, -1], order + 1)?.sub(&disc.sqrt()?)?;
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let r2 = numerator.div_by_var()?.scale(&half);
    if r2 != motzkin_v(order)? {
        return Err(Error::Internal(
            "square-root root and fixed-point series disagree".into(),
        ));
    }
    Ok(KernelRoots { r2 })
}

/// Both sides of the cancellation identity
///
/// `u^t (1 - u) + v (1 + v)^t = (u - 1 - v) (-v sum_{k<t} (1+v)^{t-1-k} u^k - u^t)`
///
/// as exact polynomials.
pub fn kernel_identity_sides(t: u32) -> (BivarPoly, BivarPoly) {
    let u = BivarPoly::u();
    let v = BivarPoly::v();
    let one = BivarPoly::one();
    let one_plus_v = one.add(&v);
    let ut = u.pow(t);

    let lhs = ut.mul(&one.sub(&u)).add(&v.mul(&one_plus_v.pow(t)));

    let mut sum = BivarPoly::zero();
    for k in 0..t {
        sum = sum.add(&one_plus_v.pow(t - 1 - k).mul(&u.pow(k)));
    }
    let quotient = v.mul(&sum).neg().sub(&ut);
    let rhs = u.sub(&one).sub(&v).mul(&quotient);
    (lhs, rhs)
}

pub fn kernel_identity(t: u32) -> bool {
    let (lhs, rhs) = kernel_identity_sides(t);
    lhs == rhs
}

/// `F(z, 1) = (1 + r2)^t r2 / z`: paths from `t` ending at any level.
pub fn f_total(t: usize, order: usize) -> Result<TruncatedSeries> {
    let roots = roots_r2(order + 1)?;
    let r2 = roots.r2();
    let one = TruncatedSeries::one(Var::Z, order + 1)?;
    let z_f = one.add(r2)?.pow(t as i64)?.mul(r2)?;
    // a nonzero constant term here would mean r2 is not a root
    z_f.div_by_var()
}

fn z_order_to_v(order: usize) -> usize {
    order + V_ORDER_MARGIN
}

fn to_z(g: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    Substitution::v_to_z(g.order())?.apply(g)?.truncate(order)
}

/// `1 / (z (1 + r1)^(l+1)) = (1 + v + v^2) v^l / (1 + v)^(l+1)`.
fn tail_factor(f: &VForms, l: usize) -> Result<TruncatedSeries> {
    f.product(&[f.kernel_factor()?, f.v_pow(l)?, f.one_plus_v_pow(-(l as i64 + 1))?])
}

/// `[u^j]` of `(v sum_{k<t} (1+v)^{t-1-k} u^k + u^t) sum_l u^l / (z(1+r1)^(l+1))`,
/// as a series in `v`.
pub fn f_unbounded_sum_v(t: usize, j: usize, v_order: usize) -> Result<TruncatedSeries> {
    let f = VForms::new(v_order);
    let v = f.v_pow(1)?;
    let mut acc = TruncatedSeries::zero(Var::V, v_order)?;
    for k in 0..t.min(j + 1) {
        let term = f.product(&[
            v.clone(),
            f.one_plus_v_pow((t - 1 - k) as i64)?,
            tail_factor(&f, j - k)?,
        ])?;
        acc = acc.add(&term)?;
    }
    if t <= j {
        acc = acc.add(&tail_factor(&f, j - t)?)?;
    }
    Ok(acc)
}

/// `f_j(z)` from the coefficient extraction, mapped to `z`.
pub fn f_unbounded_sum(t: usize, j: usize, order: usize) -> Result<TruncatedSeries> {
    to_z(&f_unbounded_sum_v(t, j, z_order_to_v(order))?, order)
}

/// Simplified closed form of `f_j`, split on `j < t`, as a series in `v`.
pub fn f_unbounded_closed_v(t: usize, j: usize, v_order: usize) -> Result<TruncatedSeries> {
    let f = VForms::new(v_order);
    let numerator = if j < t {
        f.product(&[
            f.one_plus_v_pow(t as i64 - j as i64 - 2)?,
            f.one_minus_v_pow(j + 1)?,
            f.v_pow(1)?,
            f.kernel_factor()?,
        ])?
    } else {
        f.product(&[
            f.v_pow(j - t)?,
            f.one_minus_v_pow(t + 2)?,
            f.kernel_factor()?,
            f.one_plus_v_pow(-((j - t) as i64 + 2))?,
        ])?
    };
    numerator.div(&f.one_minus_v_pow(1)?)
}

pub fn f_unbounded_closed(t: usize, j: usize, order: usize) -> Result<TruncatedSeries> {
    to_z(&f_unbounded_closed_v(t, j, z_order_to_v(order))?, order)
}

/// `(1 + v + v^2) v^j / (1 + v)^(j+1)`: the `t = 0` family.
pub fn f_start_zero_v(j: usize, v_order: usize) -> Result<TruncatedSeries> {
    tail_factor(&VForms::new(v_order), j)
}

/// `v (1 + v + v^2) (1 + v)^(t-2)`: the `j = 0` family for `t >= 1`.
pub fn f_end_zero_v(t: usize, v_order: usize) -> Result<TruncatedSeries> {
    if t == 0 {
        return Err(Error::InvalidParams("end-at-zero form needs t >= 1".into()));
    }
    let f = VForms::new(v_order);
    f.product(&[f.v_pow(1)?, f.kernel_factor()?, f.one_plus_v_pow(t as i64 - 2)?])
}
