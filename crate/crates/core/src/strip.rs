// SPDX-License-Identifier: Apache-2.0

//! Paths confined to the strip `0..m`.
//!
//! The generating functions `phi_0 .. phi_{m-1}` of paths from level `t`
//! solve the banded system `A phi = e_t` where `A` has `1` on the diagonal,
//! `-z` on the subdiagonal and `-z` everywhere above the diagonal. This
//! module solves it three ways: Gaussian elimination over series in `z`,
//! exact determinants in `Z[z]` (Cramer's rule), and closed forms in `v`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::{VForms, V_ORDER_MARGIN};
use crate::poly::{IntPoly, PolyMatrix};
use crate::series::{Substitution, TruncatedSeries, Var};

fn check_strip(m: usize, t: usize, j: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParams("strip size m must be at least 1".into()));
    }
    if t >= m || j >= m {
        return Err(Error::InvalidParams(format!(
            "levels t={t} and j={j} must lie in 0..{m}"
        )));
    }
    Ok(())
}

/// The `m x m` system matrix and the row of the unit right-hand side.
pub fn build_system(m: usize, t: usize) -> Result<(PolyMatrix, usize)> {
    check_strip(m, t, 0)?;
    Ok((PolyMatrix::strip_system(m), t))
}

/// All `phi_j` for a fixed start level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripSolution {
    phi: Vec<TruncatedSeries>,
    t: usize,
}

impl StripSolution {
    pub fn phi(&self) -> &[TruncatedSeries] {
        &self.phi
    }

    pub fn start(&self) -> usize {
        self.t
    }

    pub fn m(&self) -> usize {
        self.phi.len()
    }

    pub fn order(&self) -> usize {
        self.phi[0].order()
    }
}

/// Solves the strip system by elimination over truncated series in `z`.
pub fn solve_series(m: usize, t: usize, order: usize) -> Result<StripSolution> {
    let (mat, row) = build_system(m, t)?;
    let entry = |p: &IntPoly| TruncatedSeries::from_big_ints(Var::Z, p.coeffs(), order);
    let mut a = (0..m)
        .map(|i| (0..m).map(|k| entry(mat.entry(i, k))).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let mut b = (0..m)
        .map(|i| TruncatedSeries::from_ints(Var::Z, &[i64::from(i == row)], order))
        .collect::<Result<Vec<_>>>()?;

    for k in 0..m {
        let p = (k..m)
            .find(|&i| !a[i][k].coeffs()[0].is_zero())
            .ok_or_else(|| Error::Internal(format!("no unit pivot in column {k}")))?;
        a.swap(p, k);
        b.swap(p, k);
        let pivot = a[k][k].clone();
        for i in k + 1..m {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].div(&pivot)?;
            let (upper, lower) = a.split_at_mut(i);
            for (x, y) in lower[0][k..].iter_mut().zip(&upper[k][k..]) {
                *x = x.sub(&factor.mul(y)?)?;
            }
            let next = b[i].sub(&factor.mul(&b[k])?)?;
            b[i] = next;
        }
    }

    let mut phi: Vec<TruncatedSeries> = vec![TruncatedSeries::zero(Var::Z, order)?; m];
    for k in (0..m).rev() {
        let mut acc = b[k].clone();
        for c in k + 1..m {
            acc = acc.sub(&a[k][c].mul(&phi[c])?)?;
        }
        phi[k] = acc.div(&a[k][k])?;
    }
    for (j, s) in phi.iter().enumerate() {
        s.to_counts()
            .map_err(|_| Error::Internal(format!("phi_{j} is not a counting series")))?;
    }
    Ok(StripSolution { phi, t })
}

/// Exact determinant of a polynomial matrix.
pub fn det_poly(mat: &PolyMatrix) -> Result<IntPoly> {
    mat.det()
}

/// Determinant of the system with column `j` replaced by `e_t`.
pub fn det_replaced_poly(m: usize, t: usize, j: usize) -> Result<IntPoly> {
    check_strip(m, t, j)?;
    PolyMatrix::strip_system(m).with_unit_column(j, t).det()
}

/// Substitutes `z = v / (1 + v + v^2)` into a polynomial.
pub fn z_poly_to_v(p: &IntPoly, v_order: usize) -> Result<TruncatedSeries> {
    Substitution::z_to_v(v_order)?.apply_poly(p.coeffs())
}

/// `D_m = (1+v)^(m-1) / (1+v+v^2)^m * (1 - v^(m+2)) / (1 - v)`.
pub fn det_dm_closed(m: usize, v_order: usize) -> Result<TruncatedSeries> {
    if m == 0 {
        return Err(Error::InvalidParams("strip size m must be at least 1".into()));
    }
    let f = VForms::new(v_order);
    f.product(&[
        f.one_plus_v_pow(m as i64 - 1)?,
        f.kernel_factor_pow(-(m as i64))?,
        f.one_minus_v_pow(m + 2)?,
    ])?
    .div(&f.one_minus_v_pow(1)?)
}

/// Checks `(1+v+v^2)^2 D_{k+2} - (1+v+v^2)(1+v)^2 D_{k+1} + v(1+v)^2 D_k = 0`
/// for every consecutive triple in `dets`.
pub fn recursion_holds(dets: &[TruncatedSeries]) -> Result<bool> {
    let Some(first) = dets.first() else {
        return Ok(true);
    };
    let f = VForms::new(first.order());
    let q = f.kernel_factor()?;
    let q2 = q.mul(&q)?;
    let opv2 = f.one_plus_v_pow(2)?;
    let c1 = q.mul(&opv2)?;
    let c0 = f.v_pow(1)?.mul(&opv2)?;
    for w in dets.windows(3) {
        let lhs = q2
            .mul(&w[2])?
            .sub(&c1.mul(&w[1])?)?
            .add(&c0.mul(&w[0])?)?;
        if !lhs.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The three-term recursion on the closed-form `D_m`, for `1 <= m <= m_max`.
pub fn det_recursion_check(m_max: usize, v_order: usize) -> Result<bool> {
    let dets = (1..=m_max + 2)
        .map(|m| det_dm_closed(m, v_order))
        .collect::<Result<Vec<_>>>()?;
    recursion_holds(&dets)
}

/// Closed form of `D(m; t, j)`, the determinant with column `j` replaced by
/// `e_t`. The case `j = t` uses the `j >= t` branch.
pub fn det_d_replaced(m: usize, t: usize, j: usize, v_order: usize) -> Result<TruncatedSeries> {
    check_strip(m, t, j)?;
    let f = VForms::new(v_order);
    let (m_i, t_i, j_i) = (m as i64, t as i64, j as i64);
    let numerator = if j < t {
        f.product(&[
            f.one_plus_v_pow(t_i - j_i - 3 + m_i)?,
            f.one_minus_v_pow(j + 1)?,
            f.v_pow(1)?,
            f.one_minus_v_pow(m - t)?,
        ])?
    } else {
        f.product(&[
            f.v_pow(j - t)?,
            f.one_minus_v_pow(t + 2)?,
            f.one_minus_v_pow(1 + m - j)?,
            f.one_plus_v_pow(-(j_i - t_i + 3 - m_i))?,
        ])?
    };
    let one_minus_v = f.one_minus_v_pow(1)?;
    let denominator = f.product(&[
        one_minus_v.clone(),
        one_minus_v,
        f.kernel_factor_pow(m_i - 1)?,
    ])?;
    numerator.div(&denominator)
}

pub(crate) fn phi_closed_v_impl(
    m: usize,
    t: usize,
    j: usize,
    v_order: usize,
    fault: bool,
) -> Result<TruncatedSeries> {
    check_strip(m, t, j)?;
    let f = VForms::new(v_order);
    let (t_i, j_i) = (t as i64, j as i64);
    let numerator = if j < t {
        f.product(&[
            f.one_plus_v_pow(t_i - j_i - 2)?,
            f.one_minus_v_pow(j + 1)?,
            f.v_pow(1)?,
            f.one_minus_v_pow(m - t)?,
            f.kernel_factor()?,
        ])?
    } else {
        f.product(&[
            f.v_pow(j - t)?,
            f.one_minus_v_pow(t + 2)?,
            f.one_minus_v_pow(1 + m - j)?,
            f.kernel_factor()?,
            f.one_plus_v_pow(-(j_i - t_i + 2))?,
        ])?
    };
    let top = if fault { m + 3 } else { m + 2 };
    numerator.div(&f.one_minus_v_pow(1)?.mul(&f.one_minus_v_pow(top)?)?)
}

/// Strip generating function from `t` to `j` as a series in `v`.
pub fn phi_closed_v(m: usize, t: usize, j: usize, v_order: usize) -> Result<TruncatedSeries> {
    phi_closed_v_impl(m, t, j, v_order, false)
}

fn to_z(g: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    Substitution::v_to_z(g.order())?.apply(g)?.truncate(order)
}

/// Strip generating function from `t` to `j`, in `z`.
pub fn phi_closed(m: usize, t: usize, j: usize, order: usize) -> Result<TruncatedSeries> {
    to_z(&phi_closed_v(m, t, j, order + V_ORDER_MARGIN)?, order)
}

/// The `m -> infinity` limit of [`phi_closed`], i.e. no ceiling.
pub fn phi_limit_v(t: usize, j: usize, v_order: usize) -> Result<TruncatedSeries> {
    crate::kernel::f_unbounded_closed_v(t, j, v_order)
}

pub fn phi_limit(t: usize, j: usize, order: usize) -> Result<TruncatedSeries> {
    to_z(&phi_limit_v(t, j, order + V_ORDER_MARGIN)?, order)
}

/// Paths between floor `-depth` and ceiling `h`, from `0` to `i`, in `v`.
pub fn phi_shifted_v(h: usize, depth: usize, i: i64, v_order: usize) -> Result<TruncatedSeries> {
    let (h_i, d_i) = (h as i64, depth as i64);
    if i < -d_i || i > h_i {
        return Err(Error::InvalidParams(format!(
            "end level {i} must lie in -{depth}..={h}"
        )));
    }
    let f = VForms::new(v_order);
    let numerator = if i < 0 {
        f.product(&[
            f.one_plus_v_pow(-i - 2)?,
            f.one_minus_v_pow((i + d_i + 1) as usize)?,
            f.v_pow(1)?,
            f.one_minus_v_pow(h + 1)?,
            f.kernel_factor()?,
        ])?
    } else {
        let i_u = i as usize;
        f.product(&[
            f.v_pow(i_u)?,
            f.one_minus_v_pow(depth + 2)?,
            f.one_minus_v_pow(2 + h - i_u)?,
            f.kernel_factor()?,
            f.one_plus_v_pow(-(i + 2))?,
        ])?
    };
    numerator.div(&f.one_minus_v_pow(1)?.mul(&f.one_minus_v_pow(h + depth + 3)?)?)
}

pub fn phi_shifted(h: usize, depth: usize, i: i64, order: usize) -> Result<TruncatedSeries> {
    to_z(&phi_shifted_v(h, depth, i, order + V_ORDER_MARGIN)?, order)
}
