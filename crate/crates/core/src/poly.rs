// SPDX-License-Identifier: Apache-2.0

//! Integer polynomials in `z` and square matrices of them, with exact
//! fraction-free (Bareiss) determinants.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial, lowest degree first, without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::from_ints(&[c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        Self::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in other.coeffs.iter().enumerate() {
                out[i + k] += a * b;
            }
        }
        Self::new(out)
    }

    /// Exact quotient. Fails when `divisor` does not divide `self` in `Z[z]`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::Internal("polynomial division by zero".into()));
        };
        let Some(nd) = self.degree() else {
            return Ok(Self::zero());
        };
        if nd < dd {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::Internal("inexact polynomial division".into()));
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            q[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        Ok(Self::new(q))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (n, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => f.write_str("z")?,
                (1, false) => write!(f, "{a}z")?,
                (_, true) => write!(f, "z^{n}")?,
                (_, false) => write!(f, "{a}z^{n}")?,
            }
        }
        Ok(())
    }
}

/// Square matrix with polynomial entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: Vec<Vec<IntPoly>>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<IntPoly>>) -> Result<Self> {
        let m = rows.len();
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidParams("matrix is not square".into()));
        }
        Ok(Self { rows })
    }

    /// The `m x m` strip system: `1` on the diagonal, `-z` on the
    /// subdiagonal and everywhere above the diagonal, `0` elsewhere.
    pub fn strip_system(m: usize) -> Self {
        let minus_z = IntPoly::from_ints(&[0, -1]);
        let rows = (0..m)
            .map(|i| {
                (0..m)
                    .map(|k| {
                        if k == i {
                            IntPoly::constant(1)
                        } else if k > i || k + 1 == i {
                            minus_z.clone()
                        } else {
                            IntPoly::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &IntPoly {
        &self.rows[row][col]
    }

    /// Copy with column `col` replaced by the unit vector `e_row`.
    pub fn with_unit_column(&self, col: usize, row: usize) -> Self {
        let mut out = self.clone();
        for (i, r) in out.rows.iter_mut().enumerate() {
            r[col] = IntPoly::constant(i64::from(i == row));
        }
        out
    }

    /// Determinant by Bareiss elimination with row pivoting. Every division
    /// is exact in `Z[z]`.
    pub fn det(&self) -> Result<IntPoly> {
        let m = self.dim();
        if m == 0 {
            return Ok(IntPoly::constant(1));
        }
        let mut a = self.rows.clone();
        let mut prev = IntPoly::constant(1);
        let mut negate = false;
        for k in 0..m - 1 {
            let Some(p) = (k..m).find(|&i| !a[i][k].is_zero()) else {
                return Ok(IntPoly::zero());
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..m {
                for j in k + 1..m {
                    let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = num.div_exact(&prev)?;
                }
                a[i][k] = IntPoly::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[m - 1][m - 1].clone();
        Ok(if negate { d.neg() } else { d })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_ints(c)
    }

    /// Permutation expansion, usable for small matrices only.
    fn leibniz(m: &PolyMatrix) -> IntPoly {
        fn go(m: &PolyMatrix, row: usize, used: &mut Vec<bool>, sign: bool, acc: IntPoly, out: &mut IntPoly) {
            let n = m.dim();
            if row == n {
                *out = if sign { out.sub(&acc) } else { out.add(&acc) };
                return;
            }
            for col in 0..n {
                if used[col] {
                    continue;
                }
                // inversions contributed by placing `col` after the chosen ones
                let inv = used[col + 1..].iter().filter(|&&u| u).count();
                used[col] = true;
                go(m, row + 1, used, sign ^ (inv % 2 == 1), acc.mul(m.entry(row, col)), out);
                used[col] = false;
            }
        }
        let mut out = IntPoly::zero();
        go(m, 0, &mut vec![false; m.dim()], false, IntPoly::constant(1), &mut out);
        out
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 1]).mul(&p(&[-2, 0, 3]));
        assert_eq!(a.div_exact(&p(&[1, 1])).unwrap(), p(&[-2, 0, 3]));
        assert!(p(&[1, 0, 1]).div_exact(&p(&[1, 1])).is_err());
        assert!(p(&[1]).div_exact(&IntPoly::zero()).is_err());
    }

    #[test]
    fn system_shape() {
        let mat = PolyMatrix::strip_system(3);
        let expect = vec![
            vec![p(&[1]), p(&[0, -1]), p(&[0, -1])],
            vec![p(&[0, -1]), p(&[1]), p(&[0, -1])],
            vec![p(&[]), p(&[0, -1]), p(&[1])],
        ];
        assert_eq!(mat, PolyMatrix::from_rows(expect).unwrap());
    }

    #[test]
    fn small_determinants() {
        assert_eq!(PolyMatrix::strip_system(1).det().unwrap(), p(&[1]));
        assert_eq!(PolyMatrix::strip_system(2).det().unwrap(), p(&[1, 0, -1]));
        for m in 1..=5 {
            let mat = PolyMatrix::strip_system(m);
            assert_eq!(mat.det().unwrap(), leibniz(&mat), "m = {m}");
        }
    }

    #[test]
    fn replaced_column_determinants_need_pivoting() {
        for m in 1..=5 {
            let base = PolyMatrix::strip_system(m);
            for t in 0..m {
                for j in 0..m {
                    let mat = base.with_unit_column(j, t);
                    assert_eq!(mat.det().unwrap(), leibniz(&mat), "m={m} t={t} j={j}");
                }
            }
        }
    }

    #[test]
    fn singular_matrix() {
        let mat = PolyMatrix::from_rows(vec![vec![p(&[0, 1]), p(&[0, 2])], vec![p(&[1]), p(&[2])]]).unwrap();
        assert!(mat.det().unwrap().is_zero());
        assert!(PolyMatrix::from_rows(vec![vec![p(&[1])], vec![]]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -1]).to_string(), "1 - z^2");
        assert_eq!(p(&[0, -2, 1]).to_string(), "-2z + z^2");
    }
}
