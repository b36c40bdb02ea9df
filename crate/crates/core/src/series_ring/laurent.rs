//! Exact Laurent polynomials with finitely many terms.

use std::collections::BTreeMap;

use serde::Serialize;

use super::kernel;
use super::power::PowerSeries;
use crate::error::{Error, Result};
use crate::padic_core::PadicBall;

/// `sum_d c_d t^d`; degrees not present are exactly zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    p: u64,
    terms: BTreeMap<i64, PadicBall>,
}

#[derive(Serialize)]
struct LaurentJson {
    p: u64,
    precision: u32,
    offset: i64,
    coeffs: Vec<u64>,
}

impl LaurentPoly {
    pub fn zero(p: u64) -> Self {
        Self { p, terms: BTreeMap::new() }
    }

    pub fn monomial(degree: i64, c: PadicBall) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(degree, c);
        Self { p: c.p(), terms }
    }

    pub fn from_terms(p: u64, terms: impl IntoIterator<Item = (i64, PadicBall)>) -> Result<Self> {
        let mut out = Self::zero(p);
        for (d, c) in terms {
            if c.p() != p {
                return Err(Error::PrimeMismatch(p, c.p()));
            }
            out = out.add(&Self::monomial(d, c))?;
        }
        Ok(out)
    }

    /// The polynomial `f(t)_{<m}`.
    pub fn from_series_prefix(f: &PowerSeries, m: usize) -> Result<Self> {
        if m > f.len() {
            return Err(Error::InsufficientCoefficients { requested: m, available: f.len() });
        }
        Ok(Self {
            p: f.p(),
            terms: f.coeffs()[..m].iter().enumerate().map(|(k, c)| (k as i64, *c)).collect(),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeff(&self, d: i64) -> Option<&PadicBall> {
        self.terms.get(&d)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &PadicBall)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn precision(&self) -> u32 {
        self.terms.values().map(|b| b.precision()).min().unwrap_or(u32::MAX)
    }

    fn check_prime(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        Ok(())
    }

    fn merge(&self, other: &Self, negate: bool) -> Result<Self> {
        self.check_prime(other)?;
        let mut terms = self.terms.clone();
        for (d, c) in &other.terms {
            let c = if negate { c.neg() } else { *c };
            let v = match terms.get(d) {
                Some(x) => x.add(&c)?,
                None => c,
            };
            terms.insert(*d, v);
        }
        Ok(Self { p: self.p, terms })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        Self { p: self.p, terms: self.terms.iter().map(|(d, c)| (*d, c.neg())).collect() }
    }

    pub fn scale(&self, x: &PadicBall) -> Result<Self> {
        let terms = self.terms.iter().map(|(d, c)| Ok((*d, c.mul(x)?))).collect::<Result<_>>()?;
        Ok(Self { p: self.p, terms })
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { p: self.p, terms: self.terms.iter().map(|(d, c)| (d + k, *c)).collect() }
    }

    /// The involution `t -> t^{-1}`.
    pub fn omega_invert(&self) -> Self {
        Self { p: self.p, terms: self.terms.iter().map(|(d, c)| (-d, *c)).collect() }
    }

    fn dense(&self) -> Result<(i64, Vec<PadicBall>)> {
        let (Some(lo), Some(hi)) = (self.min_degree(), self.max_degree()) else {
            return Ok((0, Vec::new()));
        };
        let top = self.terms.values().map(|b| b.precision()).max().unwrap_or(0);
        let zero = PadicBall::zero(self.p, top)?;
        let mut v = vec![zero; (hi - lo + 1) as usize];
        for (d, c) in &self.terms {
            v[(d - lo) as usize] = *c;
        }
        Ok((lo, v))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        let (lf, f) = self.dense()?;
        let (lg, g) = other.dense()?;
        if f.is_empty() || g.is_empty() {
            return Ok(Self::zero(self.p));
        }
        let out = kernel::convolve(self.p, &f, &g, f.len() + g.len() - 1);
        let terms = out.into_iter().enumerate().map(|(k, c)| (lf + lg + k as i64, c)).collect();
        Ok(Self { p: self.p, terms })
    }

    /// Every coefficient vanishes modulo `p^n`; `Err` carries the lowest
    /// offending degree. A coefficient with fewer than `n` digits offends.
    pub fn check_zero_mod(&self, n: u32) -> std::result::Result<(), i64> {
        for (d, c) in &self.terms {
            match c.residue_mod(n) {
                Some(0) => {}
                _ => return Err(*d),
            }
        }
        Ok(())
    }

    /// Coefficients of degrees `lo..=hi`, zeros filled in, reduced mod `p^n`.
    pub fn residues_mod(&self, n: u32, lo: i64, hi: i64) -> Vec<Option<u64>> {
        (lo..=hi)
            .map(|d| match self.terms.get(&d) {
                Some(c) => c.residue_mod(n),
                None => Some(0),
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let (offset, coeffs) = self.dense().unwrap_or((0, Vec::new()));
        serde_json::to_value(LaurentJson {
            p: self.p,
            precision: if coeffs.is_empty() { 0 } else { self.precision() },
            offset,
            coeffs: coeffs.iter().map(|b| b.residue()).collect(),
        })
        .expect("laurent serialize")
    }
}
