//! Degree invariants of cyclic covers of the projective line.
//!
//! A cyclic cover of order `c`, totally ramified over `m` finite points
//! (monodromy generator 1 at each) and ramified with index
//! `r_inf = c / gcd(c, m)` over infinity, decomposes pushforwards into
//! character summands indexed by `j` in `[0, c)`. This module computes the
//! classical invariants of that decomposition with exact arithmetic:
//!
//! - `w_j`: the fractional weight at infinity, `frac(-m*j/c)`;
//! - `kappa_j` and their sum `kappa`, the carry count, equal to
//!   `(-m) mod c`;
//! - `s_1 = -(m + kappa)/c` and the degrees `s_j` of the character
//!   summands;
//! - [`CyclicCover::bundle`]: the full parabolic bundle of the `j`-th
//!   character, a single piece of degree `s_j` with weight `j/c` at every
//!   finite branch point and `w_j` at infinity.

use crate::exact::{gcd, Rational};
use crate::parabolic::{MarkedCurve, MarkedPoint, ParaLine, SplitBundle};
use crate::{Error, Result};

/// Parameters of a cyclic cover: `m` finite branch points, group order `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicCover {
    m: u64,
    c: u64,
}

impl CyclicCover {
    pub fn new(m: u64, c: u64) -> Result<Self> {
        if m == 0 || c == 0 {
            return Err(Error::InvalidInput("m and c must be positive".into()));
        }
        Ok(CyclicCover { m, c })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    /// Ramification index over infinity: `c / gcd(c, m)`.
    pub fn r_inf(&self) -> u64 {
        self.c / gcd(self.c, self.m)
    }

    fn check_j(&self, j: u64) -> Result<()> {
        if j >= self.c {
            return Err(Error::InvalidInput(format!(
                "character index {j} out of [0, {})",
                self.c
            )));
        }
        Ok(())
    }

    /// The weight at infinity of the `j`-th character: `frac(-m*j/c)`.
    pub fn w_j(&self, j: u64) -> Result<Rational> {
        self.check_j(j)?;
        let mj = self.m as u128 * j as u128;
        let q = Rational::from_big(-num_bigint::BigInt::from(mj), self.c.into())?;
        Ok(q.frac())
    }

    /// The carry indicator: 1 iff `w_1 + w_j >= 1`. Requires `1 <= j < c`.
    pub fn kappa_j(&self, j: u64) -> Result<u64> {
        if j == 0 {
            return Err(Error::InvalidInput("kappa_j needs j >= 1".into()));
        }
        self.check_j(j)?;
        let sum = &self.w_j(1)? + &self.w_j(j)?;
        Ok(u64::from(sum >= Rational::from_int(1)))
    }

    /// Total carry count `kappa = sum_{j=1}^{c-1} kappa_j`, with the closed
    /// form `(-m) mod c` enforced as an internal cross-check.
    pub fn kappa(&self) -> Result<u64> {
        let mut total = 0u64;
        for j in 1..self.c {
            total += self.kappa_j(j)?;
        }
        let closed = (self.c - self.m % self.c) % self.c;
        if total != closed {
            return Err(Error::Internal(format!(
                "kappa({}, {}) = {total} violates the congruence (-m) mod c = {closed}",
                self.m, self.c
            )));
        }
        Ok(total)
    }

    /// `s_1 = -(m + kappa)/c`; the division is exact by the congruence.
    pub fn s1(&self) -> Result<i64> {
        let kappa = self.kappa()?;
        let numerator = self.m as u128 + kappa as u128;
        if numerator % self.c as u128 != 0 {
            return Err(Error::Internal(format!(
                "c = {} does not divide m + kappa = {numerator}",
                self.c
            )));
        }
        i64::try_from(numerator / self.c as u128)
            .map(|q| -q)
            .map_err(|_| Error::InvalidInput("s_1 out of i64 range".into()))
    }

    /// Degree of the `j`-th character summand:
    /// `s_j = j*s_1 + sum_{i=1}^{j-1} kappa_i`, with `s_0 = 0`.
    pub fn s_j(&self, j: u64) -> Result<i64> {
        self.check_j(j)?;
        if j == 0 {
            return Ok(0);
        }
        let mut value = j as i128 * self.s1()? as i128;
        for i in 1..j {
            value += self.kappa_j(i)? as i128;
        }
        i64::try_from(value).map_err(|_| Error::InvalidInput("s_j out of i64 range".into()))
    }

    /// The marked curve of the cover: finite branch points `p1..pm` with
    /// divisibility `c`, plus `inf` with divisibility `r_inf` (kept even
    /// when that is 1, so bundles for different `j` stay composable).
    pub fn curve(&self) -> MarkedCurve {
        let mut points: Vec<MarkedPoint> = (1..=self.m)
            .map(|i| MarkedPoint::new(format!("p{i}"), 1, self.c))
            .collect();
        points.push(MarkedPoint::new("inf", 1, self.r_inf()));
        MarkedCurve::new(points).expect("cover curve is valid")
    }

    /// The parabolic bundle of the `j`-th character: one piece of degree
    /// `s_j`, weight `j/c` at every finite branch point, weight `w_j` at
    /// infinity.
    pub fn bundle(&self, j: u64) -> Result<SplitBundle> {
        self.check_j(j)?;
        let mut weights: Vec<Rational> = (0..self.m)
            .map(|_| Rational::from_big(j.into(), self.c.into()))
            .collect::<Result<_>>()?;
        weights.push(self.w_j(j)?);
        SplitBundle::new(self.curve(), vec![ParaLine::new(self.s_j(j)?, weights)])
    }
}
