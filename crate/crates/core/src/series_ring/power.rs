//! Dense power series truncated at a fixed order.

use serde::Serialize;

use super::kernel;
use crate::error::{Error, Result};
use crate::padic_core::special::check_frobenius;
use crate::padic_core::{reduce, PadicBall, Rational};

/// `sum_{k < len} a_k t^k`.
///
/// When `exact` is false the coefficients of `t^k` for `k >= len` are
/// unknown. When it is true the series is a polynomial and they are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    p: u64,
    coeffs: Vec<PadicBall>,
    exact: bool,
}

#[derive(Serialize)]
struct SeriesJson<'a> {
    p: u64,
    precision: u32,
    exact: bool,
    coeffs: Vec<u64>,
    precisions: &'a [u32],
}

impl PowerSeries {
    pub fn new(p: u64, coeffs: Vec<PadicBall>) -> Result<Self> {
        Self::build(p, coeffs, false)
    }

    pub fn polynomial(p: u64, coeffs: Vec<PadicBall>) -> Result<Self> {
        Self::build(p, coeffs, true)
    }

    fn build(p: u64, coeffs: Vec<PadicBall>, exact: bool) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter("a power series needs at least one coefficient".into()));
        }
        if let Some(b) = coeffs.iter().find(|b| b.p() != p) {
            return Err(Error::PrimeMismatch(p, b.p()));
        }
        Ok(Self { p, coeffs, exact })
    }

    /// Series from small integers, all at precision `prec`.
    pub fn from_i64s(p: u64, xs: &[i64], prec: u32) -> Result<Self> {
        let coeffs = xs.iter().map(|&x| PadicBall::from_i64(p, x, prec)).collect::<Result<Vec<_>>>()?;
        Self::new(p, coeffs)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn coeffs(&self) -> &[PadicBall] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&PadicBall> {
        self.coeffs.get(k)
    }

    /// Smallest coefficient precision.
    pub fn precision(&self) -> u32 {
        self.coeffs.iter().map(|b| b.precision()).min().unwrap_or(0)
    }

    pub fn into_coeffs(self) -> Vec<PadicBall> {
        self.coeffs
    }

    fn check_prime(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        Ok(())
    }

    /// Length and exactness of a binary result.
    fn joint_len(&self, other: &Self, exact_len: usize) -> (usize, bool) {
        match (self.exact, other.exact) {
            (true, true) => (exact_len, true),
            (true, false) => (other.len(), false),
            (false, true) => (self.len(), false),
            (false, false) => (self.len().min(other.len()), false),
        }
    }

    /// Cauchy product. Two inexact series give the shorter length; an
    /// exact polynomial takes on the length of the other factor.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        let (len, exact) = self.joint_len(other, self.len() + other.len() - 1);
        let coeffs = kernel::convolve(self.p, &self.coeffs, &other.coeffs, len);
        Ok(Self { p: self.p, coeffs, exact })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&PadicBall, &PadicBall) -> Result<PadicBall>) -> Result<Self> {
        self.check_prime(other)?;
        let (len, exact) = self.joint_len(other, self.len().max(other.len()));
        let top = kernel::max_precision(&self.coeffs).max(kernel::max_precision(&other.coeffs));
        let zero = PadicBall::zero(self.p, top)?;
        let coeffs = (0..len)
            .map(|k| f(self.coeffs.get(k).unwrap_or(&zero), other.coeffs.get(k).unwrap_or(&zero)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { p: self.p, coeffs, exact })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |x, y| x.add(y))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |x, y| x.sub(y))
    }

    pub fn scale(&self, x: &PadicBall) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|b| b.mul(x)).collect::<Result<Vec<_>>>()?;
        Ok(Self { p: self.p, coeffs, exact: self.exact })
    }

    /// Reciprocal to the same length. A polynomial is inverted as a series
    /// of its own length; use [`PowerSeries::invert_to`] for more terms.
    pub fn invert(&self) -> Result<Self> {
        self.invert_to(self.len())
    }

    pub fn invert_to(&self, len: usize) -> Result<Self> {
        let len = if self.exact { len } else { len.min(self.len()) };
        let coeffs = kernel::invert(self.p, &self.coeffs, len.max(1)).ok_or(Error::NotInvertible)?;
        Ok(Self { p: self.p, coeffs, exact: false })
    }

    /// `f(t)_{<m}` as an exact polynomial.
    pub fn truncate_below(&self, m: usize) -> Result<Self> {
        if m > self.len() {
            return Err(Error::InsufficientCoefficients { requested: m, available: self.len() });
        }
        if m == 0 {
            let top = kernel::max_precision(&self.coeffs);
            return Self::polynomial(self.p, vec![PadicBall::zero(self.p, top)?]);
        }
        Self::polynomial(self.p, self.coeffs[..m].to_vec())
    }

    /// The first `m` coefficients, still as a truncated series.
    pub fn prefix(&self, m: usize) -> Result<Self> {
        if m > self.len() || m == 0 {
            return Err(Error::InsufficientCoefficients { requested: m, available: self.len() });
        }
        Ok(Self { p: self.p, coeffs: self.coeffs[..m].to_vec(), exact: false })
    }

    /// Dense copy with `len` coefficients. Padding is only possible for an
    /// exact polynomial; the result is treated as a truncated series.
    pub fn extended(&self, len: usize) -> Result<Self> {
        if len <= self.len() {
            return self.prefix(len);
        }
        if !self.exact {
            return Err(Error::InsufficientCoefficients { requested: len, available: self.len() });
        }
        let zero = PadicBall::zero(self.p, kernel::max_precision(&self.coeffs))?;
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, zero);
        Ok(Self { p: self.p, coeffs, exact: false })
    }

    /// Coefficientwise reduction to at most `prec` digits.
    pub fn truncate_precision(&self, prec: u32) -> Self {
        Self { p: self.p, coeffs: self.coeffs.iter().map(|b| b.truncate(prec)).collect(), exact: self.exact }
    }

    /// `f^sigma(t) = sum a_i c^i t^{ip}`, capped at `out_len` coefficients.
    pub fn frobenius_substitute(&self, c: &Rational, out_len: usize) -> Result<Self> {
        let p = self.p;
        check_frobenius(c, p)?;
        let top = kernel::max_precision(&self.coeffs);
        let full = (self.len() - 1) * p as usize + 1;
        let (len, exact) = if self.exact {
            if out_len >= full {
                (full, true)
            } else {
                (out_len, false)
            }
        } else {
            (out_len.min(self.len() * p as usize), false)
        };
        let len = len.max(1);
        let cb = reduce(c, p, top)?;
        let zero = PadicBall::zero(p, top)?;
        let mut coeffs = vec![zero; len];
        let mut cpow = PadicBall::one(p, top)?;
        for (i, a) in self.coeffs.iter().enumerate() {
            let j = i * p as usize;
            if j >= len {
                break;
            }
            coeffs[j] = a.mul(&cpow)?;
            cpow = cpow.mul(&cb)?;
        }
        Ok(Self { p, coeffs, exact })
    }

    /// `int_0^t f(t) dt/t`, i.e. `g_k = f_k / k`.
    pub fn integrate_dlog(&self) -> Result<Self> {
        let p = self.p;
        if !self.coeffs[0].is_zero() {
            return Err(Error::DlogUndefined);
        }
        let mut coeffs = Vec::with_capacity(self.len());
        coeffs.push(self.coeffs[0]);
        for (k, f) in self.coeffs.iter().enumerate().skip(1) {
            let v = crate::padic_core::modular::val_u64(k as u64, p);
            let kb = PadicBall::from_i64(p, k as i64, f.precision() + v)?;
            coeffs.push(f.div(&kb)?);
        }
        Ok(Self { p, coeffs, exact: self.exact })
    }

    /// `k * f_k`, the inverse of [`PowerSeries::integrate_dlog`].
    pub fn theta(&self) -> Result<Self> {
        let p = self.p;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, f)| f.mul(&PadicBall::from_i64(p, k as i64, f.precision())?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { p, coeffs, exact: self.exact })
    }

    /// True when every coefficient with index below `len` agrees with
    /// `other` modulo `p^n`.
    pub fn agrees_mod(&self, other: &Self, n: u32, len: usize) -> bool {
        self.first_disagreement(other, n, len).is_none()
    }

    pub fn first_disagreement(&self, other: &Self, n: u32, len: usize) -> Option<usize> {
        (0..len).find(|&k| {
            let x = self.coeffs.get(k).and_then(|b| b.residue_mod(n));
            let y = other.coeffs.get(k).and_then(|b| b.residue_mod(n));
            x.is_none() || x != y
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let precisions: Vec<u32> = self.coeffs.iter().map(|b| b.precision()).collect();
        serde_json::to_value(SeriesJson {
            p: self.p,
            precision: self.precision(),
            exact: self.exact,
            coeffs: self.coeffs.iter().map(|b| b.residue()).collect(),
            precisions: &precisions,
        })
        .expect("series serialize")
    }
}
