//! Residues modulo `p^N` carrying the number of digits that are known to be correct.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::modular::{add_mod, checked_pow, inv_mod, mul_mod, pow_mod, sub_mod};
use crate::error::{Error, Result};

/// A p-adic integer known modulo `p^precision`.
///
/// Absolute precision: the value is asserted correct modulo `p^precision`
/// and nothing is claimed about higher digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PadicBall {
    p: u64,
    precision: u32,
    residue: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BallOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl PadicBall {
    pub fn new(p: u64, residue: u64, precision: u32) -> Result<Self> {
        let m = checked_pow(p, precision)?;
        Ok(Self { p, precision, residue: residue % m })
    }

    /// Caller guarantees `residue < p^precision` and that the modulus fits.
    pub(crate) fn from_parts(p: u64, residue: u64, precision: u32) -> Self {
        Self { p, precision, residue }
    }

    pub fn zero(p: u64, precision: u32) -> Result<Self> {
        Self::new(p, 0, precision)
    }

    pub fn one(p: u64, precision: u32) -> Result<Self> {
        Self::new(p, 1, precision)
    }

    pub fn from_i64(p: u64, x: i64, precision: u32) -> Result<Self> {
        let m = checked_pow(p, precision)?;
        let r = (x as i128).rem_euclid(m as i128) as u64;
        Ok(Self { p, precision, residue: r })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.p.pow(self.precision)
    }

    /// `v_p` of the residue, capped at the precision (a zero ball reports its precision).
    pub fn valuation(&self) -> u32 {
        if self.residue == 0 {
            return self.precision;
        }
        let mut r = self.residue;
        let mut v = 0;
        while r % self.p == 0 {
            r /= self.p;
            v += 1;
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    /// Forgets digits above `precision` (never adds digits).
    pub fn truncate(&self, precision: u32) -> Self {
        if precision >= self.precision {
            return *self;
        }
        let m = self.p.pow(precision);
        Self { p: self.p, precision, residue: self.residue % m }
    }

    /// Residue modulo `p^n`; `None` if fewer than `n` digits are known.
    pub fn residue_mod(&self, n: u32) -> Option<u64> {
        (n <= self.precision).then(|| self.residue % self.p.pow(n))
    }

    /// Base-p digits, least significant first, one per known digit.
    pub fn digits(&self) -> Vec<u64> {
        let mut r = self.residue;
        (0..self.precision)
            .map(|_| {
                let d = r % self.p;
                r /= self.p;
                d
            })
            .collect()
    }

    fn check_prime(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        Ok(())
    }

    fn aligned(&self, other: &Self) -> (u32, u64, u64, u64) {
        let prec = self.precision.min(other.precision);
        let m = self.p.pow(prec);
        (prec, m, self.residue % m, other.residue % m)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        let (prec, m, x, y) = self.aligned(other);
        Ok(Self::from_parts(self.p, add_mod(x, y, m), prec))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        let (prec, m, x, y) = self.aligned(other);
        Ok(Self::from_parts(self.p, sub_mod(x, y, m), prec))
    }

    /// Product reported at the smaller of the two precisions.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        let (prec, m, x, y) = self.aligned(other);
        Ok(Self::from_parts(self.p, mul_mod(x, y, m), prec))
    }

    /// Quotient; loses `v_p(other)` digits.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        let v = other.valuation();
        if v >= other.precision {
            return Err(Error::InsufficientPrecision(format!(
                "divisor has valuation >= its precision {}",
                other.precision
            )));
        }
        let base = self.precision.min(other.precision);
        if v > base {
            return Err(Error::InsufficientPrecision(format!(
                "dividing by p^{v} leaves no digits of a {base}-digit value"
            )));
        }
        let prec = base - v;
        let scale = self.p.pow(v);
        let num = self.residue % self.p.pow(base);
        if num % scale != 0 {
            return Err(Error::NotIntegral(format!(
                "quotient by a multiple of {}^{v} is not integral",
                self.p
            )));
        }
        let m = self.p.pow(prec);
        let unit = (other.residue / scale) % m;
        let inv = inv_mod(unit, m).expect("unit part is invertible");
        Ok(Self::from_parts(self.p, mul_mod((num / scale) % m, inv, m), prec))
    }

    pub fn neg(&self) -> Self {
        let m = self.modulus();
        Self::from_parts(self.p, sub_mod(0, self.residue, m), self.precision)
    }

    pub fn pow(&self, e: u64) -> Self {
        Self::from_parts(self.p, pow_mod(self.residue, e, self.modulus()), self.precision)
    }

    /// Adds `delta * p^shift` to the residue; used by fault injection.
    pub fn perturbed(&self, shift: u32) -> Self {
        let m = self.modulus();
        let delta = if shift < self.precision { self.p.pow(shift) } else { 0 };
        Self::from_parts(self.p, add_mod(self.residue, delta % m, m), self.precision)
    }

    pub fn combine(op: BallOp, x: &Self, y: &Self) -> Result<Self> {
        match op {
            BallOp::Add => x.add(y),
            BallOp::Sub => x.sub(y),
            BallOp::Mul => x.mul(y),
            BallOp::Div => x.div(y),
        }
    }
}

impl fmt::Display for PadicBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}^{}", self.residue, self.p, self.precision)
    }
}
