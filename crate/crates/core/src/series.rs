// SPDX-License-Identifier: Apache-2.0

//! Truncated formal power series over exact rationals.
//!
//! A [`TruncatedSeries`] stores the coefficients `c_0 .. c_{N-1}` of a power
//! series in one of two variables: `z`, which marks path length, and `v`,
//! the uniformizing variable tied to `z` by `z = v / (1 + v + v^2)`. Binary
//! operations between series in different variables are rejected; mixing
//! truncation orders truncates to the smaller one.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Expansion variable of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Var {
    Z,
    V,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Z => f.write_str("z"),
            Var::V => f.write_str("v"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    var: Var,
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[allow(clippy::should_implement_trait)]
impl TruncatedSeries {
    /// Builds a series whose order is the number of coefficients given.
    pub fn new(var: Var, coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(Self { var, coeffs })
    }

    /// Builds a series from integer coefficients, zero-padded or cut to `order`.
    pub fn from_ints(var: Var, coeffs: &[i64], order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptySeries);
        }
        let coeffs = (0..order)
            .map(|i| coeffs.get(i).map_or_else(BigRational::zero, |&c| rat(c)))
            .collect();
        Ok(Self { var, coeffs })
    }

    /// Same as [`from_ints`](Self::from_ints) for big integers.
    pub fn from_big_ints(var: Var, coeffs: &[BigInt], order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptySeries);
        }
        let coeffs = (0..order)
            .map(|i| {
                coeffs
                    .get(i)
                    .map_or_else(BigRational::zero, |c| BigRational::from_integer(c.clone()))
            })
            .collect();
        Ok(Self { var, coeffs })
    }

    pub fn zero(var: Var, order: usize) -> Result<Self> {
        Self::from_ints(var, &[], order)
    }

    pub fn one(var: Var, order: usize) -> Result<Self> {
        Self::from_ints(var, &[1], order)
    }

    /// `coeff * var^power`, which is the zero series when `power >= order`.
    pub fn monomial(var: Var, power: usize, coeff: i64, order: usize) -> Result<Self> {
        let mut s = Self::zero(var, order)?;
        if power < order {
            s.coeffs[power] = rat(coeff);
        }
        Ok(s)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The coefficient of `var^n`. Asking past the truncation order is an error.
    pub fn coefficient(&self, n: usize) -> Result<&BigRational> {
        self.coeffs.get(n).ok_or(Error::BeyondOrder {
            index: n,
            order: self.order(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptySeries);
        }
        let order = order.min(self.order());
        Ok(Self {
            var: self.var,
            coeffs: self.coeffs[..order].to_vec(),
        })
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VarMismatch {
                left: self.var,
                right: other.var,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            var: self.var,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            var: self.var,
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order];
        for (i, a) in self.coeffs[..order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in other.coeffs[..order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + k] += a * b;
                }
            }
        }
        Ok(Self {
            var: self.var,
            coeffs,
        })
    }

    /// Quotient `q` with `q * other == self` up to truncation.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let lead = &other.coeffs[0];
        if lead.is_zero() {
            return Err(Error::NonUnitDivisor);
        }
        let order = self.order().min(other.order());
        let mut q: Vec<BigRational> = Vec::with_capacity(order);
        for n in 0..order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                let b = &other.coeffs[k];
                if !b.is_zero() {
                    acc -= b * &q[n - k];
                }
            }
            q.push(acc / lead);
        }
        Ok(Self {
            var: self.var,
            coeffs: q,
        })
    }

    pub fn reciprocal(&self) -> Result<Self> {
        Self::one(self.var, self.order())?.div(self)
    }

    /// Integer power by repeated squaring. Negative exponents need a unit.
    pub fn pow(&self, exponent: i64) -> Result<Self> {
        let base = if exponent < 0 {
            if self.coeffs[0].is_zero() {
                return Err(Error::NegativePowerOfNonUnit);
            }
            self.reciprocal()?
        } else {
            self.clone()
        };
        let mut e = exponent.unsigned_abs();
        let mut acc = Self::one(self.var, self.order())?;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Square root with constant term `+1`.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtConstantTerm);
        }
        let two = rat(2);
        let mut s: Vec<BigRational> = Vec::with_capacity(self.order());
        s.push(BigRational::one());
        for n in 1..self.order() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc -= &s[k] * &s[n - k];
            }
            s.push(acc / &two);
        }
        Ok(Self {
            var: self.var,
            coeffs: s,
        })
    }

    /// `self(inner)`; the result lives in the variable of `inner`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionConstantTerm);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order)?;
        // Horner from the highest retained coefficient down.
        let mut acc = Self::zero(inner.var, order)?;
        for c in self.coeffs[..order].iter().rev() {
            acc = acc.mul(&inner)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Divides by the series variable. The constant term must vanish; the
    /// result has order one less.
    pub fn div_by_var(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Internal(
                "constant term must vanish before dividing by the variable".into(),
            ));
        }
        Self::new(self.var, self.coeffs[1..].to_vec())
    }

    /// Exact integer coefficients, or an error naming the first non-integer.
    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NotACount { index })
                }
            })
            .collect()
    }

    /// Coefficients as path counts: each must be a nonnegative integer.
    pub fn to_counts(&self) -> Result<Vec<BigUint>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() && !c.is_negative() {
                    Ok(c.to_integer().to_biguint().expect("nonnegative"))
                } else {
                    Err(Error::NotACount { index })
                }
            })
            .collect()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c}){}", self.var)?,
                _ => write!(f, "({c}){}^{n}", self.var)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order())
    }
}

/// The series `v(z)` with `v(0) = 0` and `v = z (1 + v + v^2)`, computed
/// coefficient by coefficient. Its coefficients are shifted Motzkin numbers.
pub fn motzkin_v(order: usize) -> Result<TruncatedSeries> {
    if order == 0 {
        return Err(Error::EmptySeries);
    }
    let mut v: Vec<BigInt> = vec![BigInt::zero(); order];
    for n in 1..order {
        // [z^n] z(1 + v + v^2) = [z^{n-1}](1 + v + v^2)
        let m = n - 1;
        let mut c = if m == 0 { BigInt::one() } else { BigInt::zero() };
        c += &v[m];
        for k in 1..m {
            c += &v[k] * &v[m - k];
        }
        v[n] = c;
    }
    TruncatedSeries::from_big_ints(Var::Z, &v, order)
}

/// `z = v / (1 + v + v^2)` as a series in `v`.
pub fn z_in_v(order: usize) -> Result<TruncatedSeries> {
    let v = TruncatedSeries::monomial(Var::V, 1, 1, order)?;
    v.div(&TruncatedSeries::from_ints(Var::V, &[1, 1, 1], order)?)
}

/// Rewrites a series in `v` as a series in `z` by substituting `v = v(z)`.
pub fn v_to_z(g: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    Substitution::v_to_z(order)?.apply(g)
}

/// Precomputed powers of an inner series, for applying the same
/// substitution to many outer series.
#[derive(Debug, Clone)]
pub struct Substitution {
    from: Var,
    powers: Vec<TruncatedSeries>,
}

impl Substitution {
    /// Substitution `from := inner`. `inner` must have zero constant term.
    pub fn new(from: Var, inner: &TruncatedSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionConstantTerm);
        }
        let order = inner.order();
        let mut powers = Vec::with_capacity(order);
        powers.push(TruncatedSeries::one(inner.var, order)?);
        for k in 1..order {
            let next = powers[k - 1].mul(inner)?;
            powers.push(next);
        }
        Ok(Self { from, powers })
    }

    /// `v := v(z)` at the given order.
    pub fn v_to_z(order: usize) -> Result<Self> {
        Self::new(Var::V, &motzkin_v(order)?)
    }

    /// `z := v / (1 + v + v^2)` at the given order.
    pub fn z_to_v(order: usize) -> Result<Self> {
        Self::new(Var::Z, &z_in_v(order)?)
    }

    pub fn order(&self) -> usize {
        self.powers.len()
    }

    pub fn apply(&self, outer: &TruncatedSeries) -> Result<TruncatedSeries> {
        if outer.var != self.from {
            return Err(Error::VarMismatch {
                left: outer.var,
                right: self.from,
            });
        }
        let order = outer.order().min(self.order());
        self.apply_coeffs(&outer.coeffs[..order], order)
    }

    /// Applies the substitution to a polynomial given by its coefficients,
    /// lowest degree first.
    pub fn apply_poly(&self, coeffs: &[BigInt]) -> Result<TruncatedSeries> {
        let order = self.order();
        let rats: Vec<BigRational> = coeffs
            .iter()
            .take(order)
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        self.apply_coeffs(&rats, order)
    }

    fn apply_coeffs(&self, coeffs: &[BigRational], order: usize) -> Result<TruncatedSeries> {
        let var = self.powers[0].var;
        let mut out = vec![BigRational::zero(); order];
        for (c, p) in coeffs.iter().zip(&self.powers) {
            if c.is_zero() {
                continue;
            }
            for (slot, pc) in out.iter_mut().zip(&p.coeffs) {
                if !pc.is_zero() {
                    *slot += c * pc;
                }
            }
        }
        TruncatedSeries::new(var, out)
    }
}

/// Small-integer view of a coefficient, for tests and display.
pub fn coefficient_i64(c: &BigRational) -> Option<i64> {
    if c.is_integer() {
        c.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64], n: usize) -> TruncatedSeries {
        TruncatedSeries::from_ints(Var::Z, c, n).unwrap()
    }

    fn v(c: &[i64], n: usize) -> TruncatedSeries {
        TruncatedSeries::from_ints(Var::V, c, n).unwrap()
    }

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| coefficient_i64(c).unwrap()).collect()
    }

    #[test]
    fn add_cancels_and_sums() {
        assert_eq!(z(&[1, 1], 4).add(&z(&[1, -1], 4)).unwrap(), z(&[2], 4));
        let a = z(&[3, 0, -2], 5);
        assert_eq!(a.add(&TruncatedSeries::zero(Var::Z, 5).unwrap()).unwrap(), a);
        assert_eq!(ints(&z(&[0, 1, 1], 3).add(&z(&[0, 0, 1], 3)).unwrap()), vec![0, 1, 2]);
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let s = z(&[1, 2, 3, 4], 4).add(&z(&[1], 2)).unwrap();
        assert_eq!(s.order(), 2);
        assert_eq!(z(&[1, 1], 6).mul(&z(&[1, 1], 3)).unwrap().order(), 3);
    }

    #[test]
    fn var_mismatch_is_an_error() {
        let e = z(&[1], 3).add(&v(&[1], 3)).unwrap_err();
        assert_eq!(e, Error::VarMismatch { left: Var::Z, right: Var::V });
        assert!(z(&[1], 3).mul(&v(&[1], 3)).is_err());
        assert!(z(&[1], 3).div(&v(&[1], 3)).is_err());
    }

    #[test]
    fn products() {
        assert_eq!(v(&[1, 1], 5).mul(&v(&[1, -1], 5)).unwrap(), v(&[1, 0, -1], 5));
        let a = v(&[2, 0, 5, 1], 4);
        assert_eq!(a.mul(&v(&[1], 4)).unwrap(), a);
        let sq = v(&[0, 1], 4).mul(&v(&[0, 1], 4)).unwrap();
        assert_eq!(ints(&sq), vec![0, 0, 1, 0]);
    }

    #[test]
    fn division() {
        let geo = v(&[1], 6).div(&v(&[1, -1], 6)).unwrap();
        assert_eq!(ints(&geo), vec![1; 6]);
        let a = v(&[1, 4, -2], 6);
        assert_eq!(a.div(&a).unwrap(), v(&[1], 6));
        // (1+v+v^2)/(1+v) = 1 + v^2 - v^3 + v^4 - ...; checked by multiplying back
        let q = v(&[1, 1, 1], 7).div(&v(&[1, 1], 7)).unwrap();
        assert_eq!(ints(&q), vec![1, 0, 1, -1, 1, -1, 1]);
        assert_eq!(q.mul(&v(&[1, 1], 7)).unwrap(), v(&[1, 1, 1], 7));
        assert_eq!(v(&[1], 3).div(&v(&[0, 1], 3)).unwrap_err(), Error::NonUnitDivisor);
    }

    #[test]
    fn powers() {
        let base = v(&[1, 1], 6);
        assert_eq!(base.pow(0).unwrap(), v(&[1], 6));
        assert_eq!(ints(&base.pow(-1).unwrap()), vec![1, -1, 1, -1, 1, -1]);
        assert_eq!(ints(&base.pow(3).unwrap()), vec![1, 3, 3, 1, 0, 0]);
        assert_eq!(v(&[0, 1], 4).pow(-2).unwrap_err(), Error::NegativePowerOfNonUnit);
        assert_eq!(ints(&v(&[0, 1], 4).pow(2).unwrap()), vec![0, 0, 1, 0]);
    }

    #[test]
    fn square_roots() {
        assert_eq!(z(&[1], 5).sqrt().unwrap(), z(&[1], 5));
        assert_eq!(z(&[1, 2, 1], 6).sqrt().unwrap(), z(&[1, 1], 6));
        let a = z(&[1, -2, -3], 8);
        let s = a.sqrt().unwrap();
        assert_eq!(s.mul(&s).unwrap(), a);
        assert_eq!(ints(&s)[..4], [1, -1, -2, -2]);
        assert_eq!(z(&[2, 1], 4).sqrt().unwrap_err(), Error::SqrtConstantTerm);
    }

    #[test]
    fn compositions() {
        let f = v(&[3, 1, 4, 1, 5], 5);
        let zero_inner = TruncatedSeries::zero(Var::Z, 5).unwrap();
        assert_eq!(f.compose(&zero_inner).unwrap(), z(&[3], 5));
        let zid = z(&[0, 1], 5);
        assert_eq!(ints(&f.compose(&zid).unwrap()), vec![3, 1, 4, 1, 5]);
        assert_eq!(f.compose(&z(&[1, 1], 5)).unwrap_err(), Error::CompositionConstantTerm);

        let geo = v(&[1], 8).div(&v(&[1, -1], 8)).unwrap();
        let got = geo.compose(&motzkin_v(8).unwrap()).unwrap();
        // 1 + sum_k v(z)^k, expanded directly
        let vz = motzkin_v(8).unwrap();
        let mut expect = TruncatedSeries::one(Var::Z, 8).unwrap();
        let mut p = TruncatedSeries::one(Var::Z, 8).unwrap();
        for _ in 1..8 {
            p = p.mul(&vz).unwrap();
            expect = expect.add(&p).unwrap();
        }
        assert_eq!(got, expect);
        assert_eq!(ints(&got)[..5], [1, 1, 2, 5, 13]);
    }

    fn motzkin_numbers(n: usize) -> Vec<i64> {
        let mut m = vec![1i64];
        while m.len() < n {
            let k = m.len() - 1;
            let mut next = m[k];
            for i in 0..k {
                next += m[i] * m[k - 1 - i];
            }
            m.push(next);
        }
        m
    }

    #[test]
    fn motzkin_series() {
        let vz = motzkin_v(12).unwrap();
        let got = ints(&vz);
        assert_eq!(got[0], 0);
        assert_eq!(got[1], 1);
        assert_eq!(got[1..7], [1, 1, 2, 4, 9, 21]);
        assert_eq!(got[1..], motzkin_numbers(11)[..]);
        let back = z_in_v(12).unwrap().compose(&vz).unwrap();
        assert_eq!(back, z(&[0, 1], 12));
    }

    #[test]
    fn v_to_z_round_trips() {
        assert_eq!(v_to_z(&v(&[0, 1], 6), 6).unwrap(), motzkin_v(6).unwrap());
        assert_eq!(v_to_z(&v(&[1], 6), 6).unwrap(), z(&[1], 6));
        assert_eq!(v_to_z(&z_in_v(9).unwrap(), 9).unwrap(), z(&[0, 1], 9));
        assert!(v_to_z(&z(&[1], 3), 3).is_err());
    }

    #[test]
    fn coefficient_access() {
        assert_eq!(coefficient_i64(z(&[1, 2], 3).coefficient(1).unwrap()), Some(2));
        assert_eq!(coefficient_i64(v(&[0, 0, 1], 3).coefficient(1).unwrap()), Some(0));
        assert_eq!(
            z(&[1, 2], 3).coefficient(3).unwrap_err(),
            Error::BeyondOrder { index: 3, order: 3 }
        );
    }

    #[test]
    fn counts_reject_fractions_and_negatives() {
        let half = z(&[1], 3).div(&z(&[2], 3)).unwrap();
        assert_eq!(half.to_counts().unwrap_err(), Error::NotACount { index: 0 });
        assert_eq!(z(&[1, -1], 2).to_counts().unwrap_err(), Error::NotACount { index: 1 });
        assert!(TruncatedSeries::new(Var::Z, vec![]).is_err());
    }
}
