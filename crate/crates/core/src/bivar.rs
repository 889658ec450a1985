// SPDX-License-Identifier: Apache-2.0

//! Exact polynomials in two variables `u` and `v` with big-integer
//! coefficients. No truncation is ever applied.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

/// Sparse map `(deg_u, deg_v) -> coefficient`, never storing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn u() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn v() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, deg_u: u32, deg_v: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((deg_u, deg_v), coeff.into());
        p
    }

    fn add_term(&mut self, key: (u32, u32), coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, deg_u: u32, deg_v: u32) -> BigInt {
        self.terms
            .get(&(deg_u, deg_v))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(au, av), a) in &self.terms {
            for (&(bu, bv), b) in &other.terms {
                out.add_term((au + bu, av + bv), a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }
}
