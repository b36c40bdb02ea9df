//! Nonzero p-adic numbers stored as `p^v * unit` with a relative precision.
//!
//! Coefficient recurrences multiply and divide many factors whose p-parts
//! cancel; tracking the exponent separately keeps every unit digit.

use num_traits::Zero;

use super::ball::PadicBall;
use super::modular::{checked_pow, inv_mod, mul_mod, pow_mod};
use super::rational::{bigint_mod, int_valuation, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScaledUnit {
    p: u64,
    valuation: i64,
    unit: u64,
    unit_precision: u32,
}

impl ScaledUnit {
    pub fn one(p: u64, unit_precision: u32) -> Result<Self> {
        checked_pow(p, unit_precision)?;
        Ok(Self { p, valuation: 0, unit: 1 % p.pow(unit_precision), unit_precision })
    }

    pub fn from_rational(x: &Rational, p: u64, unit_precision: u32) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::InfiniteValuation);
        }
        let m = checked_pow(p, unit_precision)?;
        let vn = int_valuation(x.numer(), p);
        let vd = int_valuation(x.denom(), p);
        let pb = num_bigint::BigInt::from(p);
        let num = x.numer() / pb.pow(vn);
        let den = x.denom() / pb.pow(vd);
        let inv = inv_mod(bigint_mod(&den, m), m).expect("unit denominator");
        Ok(Self {
            p,
            valuation: vn as i64 - vd as i64,
            unit: mul_mod(bigint_mod(&num, m), inv, m),
            unit_precision,
        })
    }

    /// `num / den` for machine integers, both nonzero.
    pub fn from_ratio(num: i128, den: i128, p: u64, unit_precision: u32) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::InfiniteValuation);
        }
        let m = checked_pow(p, unit_precision)?;
        let (vn, num) = strip(num, p);
        let (vd, den) = strip(den, p);
        let r = |x: i128| x.rem_euclid(m as i128) as u64;
        let inv = inv_mod(r(den), m).expect("unit denominator");
        Ok(Self {
            p,
            valuation: vn - vd,
            unit: mul_mod(r(num), inv, m),
            unit_precision,
        })
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn unit(&self) -> u64 {
        self.unit
    }

    pub fn unit_precision(&self) -> u32 {
        self.unit_precision
    }

    fn modulus_for(&self, other: &Self) -> (u32, u64) {
        let prec = self.unit_precision.min(other.unit_precision);
        (prec, self.p.pow(prec))
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let (prec, m) = self.modulus_for(other);
        Self {
            p: self.p,
            valuation: self.valuation + other.valuation,
            unit: mul_mod(self.unit % m, other.unit % m, m),
            unit_precision: prec,
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let (prec, m) = self.modulus_for(other);
        let inv = inv_mod(other.unit % m, m).expect("unit");
        Self {
            p: self.p,
            valuation: self.valuation - other.valuation,
            unit: mul_mod(self.unit % m, inv, m),
            unit_precision: prec,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        Self {
            p: self.p,
            valuation: self.valuation * e as i64,
            unit: pow_mod(self.unit, e as u64, self.p.pow(self.unit_precision)),
            unit_precision: self.unit_precision,
        }
    }

    /// `x / self`, losing `v_p(self)` digits of `x`.
    pub fn divide_ball(&self, x: &PadicBall) -> Result<PadicBall> {
        if self.valuation < 0 {
            return self.inverse_scaled().mul_ball(x);
        }
        let v = self.valuation as u32;
        if v > x.precision() {
            return Err(Error::InsufficientPrecision(format!(
                "dividing by p^{v} leaves no digits of a {}-digit value",
                x.precision()
            )));
        }
        let scale = self.p.pow(v);
        if x.residue() % scale != 0 {
            return Err(Error::NotIntegral(format!(
                "quotient by a multiple of {}^{v} is not integral",
                self.p
            )));
        }
        let prec = (x.precision() - v).min(self.unit_precision);
        let m = self.p.pow(prec);
        let inv = inv_mod(self.unit % m, m).expect("unit");
        Ok(PadicBall::from_parts(self.p, mul_mod((x.residue() / scale) % m, inv, m), prec))
    }

    fn inverse_scaled(&self) -> Self {
        let m = self.p.pow(self.unit_precision);
        Self {
            p: self.p,
            valuation: -self.valuation,
            unit: inv_mod(self.unit, m).expect("unit"),
            unit_precision: self.unit_precision,
        }
    }

    /// `self * x` for non-negative valuation.
    pub fn mul_ball(&self, x: &PadicBall) -> Result<PadicBall> {
        let b = self.to_ball(x.precision())?;
        x.mul(&b)
    }

    /// Absolute-precision view; fails for negative valuation.
    pub fn to_ball(&self, precision: u32) -> Result<PadicBall> {
        if self.valuation < 0 {
            return Err(Error::NotIntegral(format!(
                "value of {}-adic valuation {}",
                self.p, self.valuation
            )));
        }
        let v = self.valuation as u64;
        if v >= precision as u64 {
            return PadicBall::zero(self.p, precision);
        }
        let known = (v as u32 + self.unit_precision).min(precision);
        let m = checked_pow(self.p, known)?;
        let scale = self.p.pow(v as u32);
        PadicBall::new(self.p, mul_mod(self.unit % m, scale, m), known)
    }
}

fn strip(mut x: i128, p: u64) -> (i64, i128) {
    let p = p as i128;
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    (v, x)
}
