//! Exact rationals and their p-adic valuation and reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::ball::PadicBall;
use super::modular::{checked_pow, inv_mod, mul_mod};
use crate::error::{Error, Result};

/// Canonical arbitrary-precision fraction (`gcd(num, den) = 1`, `den > 0`).
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"n/d"` or `"n"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidParameter(format!("cannot parse rational '{s}'"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::InvalidParameter(format!("zero denominator in '{s}'")));
    }
    Ok(Rational::new(num, den))
}

/// Renders `n` for integers and `n/d` otherwise.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Multiplicity of `p` in a nonzero integer.
pub fn int_valuation(x: &BigInt, p: u64) -> u32 {
    debug_assert!(!x.is_zero());
    let pb = BigInt::from(p);
    let mut v = 0;
    let mut y = x.clone();
    loop {
        let (q, r) = y.div_rem(&pb);
        if !r.is_zero() {
            return v;
        }
        y = q;
        v += 1;
    }
}

/// `v_p(x) = v_p(num) - v_p(den)`.
pub fn valuation(x: &Rational, p: u64) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::InfiniteValuation);
    }
    Ok(int_valuation(x.numer(), p) as i64 - int_valuation(x.denom(), p) as i64)
}

pub fn is_p_integral(x: &Rational, p: u64) -> bool {
    x.is_zero() || int_valuation(x.denom(), p) == 0
}

pub fn is_nonpositive_integer(x: &Rational) -> bool {
    x.is_integer() && !x.is_positive()
}

/// `x mod m` as a least non-negative residue.
pub fn bigint_mod(x: &BigInt, m: u64) -> u64 {
    x.mod_floor(&BigInt::from(m)).to_u64().expect("residue below modulus")
}

/// Residue of a p-integral rational modulo `p^prec`.
pub fn reduce(x: &Rational, p: u64, prec: u32) -> Result<PadicBall> {
    let modulus = checked_pow(p, prec)?;
    if x.is_zero() {
        return PadicBall::new(p, 0, prec);
    }
    if !is_p_integral(x, p) {
        return Err(Error::NotIntegral(format!(
            "{} has negative {p}-adic valuation",
            format_rational(x)
        )));
    }
    let num = bigint_mod(x.numer(), modulus);
    let den = bigint_mod(x.denom(), modulus);
    let inv = inv_mod(den, modulus).expect("denominator coprime to p");
    PadicBall::new(p, mul_mod(num, inv, modulus), prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&rational(25, 3), 5).unwrap(), 2);
        assert_eq!(valuation(&int(1), 7).unwrap(), 0);
        assert_eq!(valuation(&rational(9, 64), 3).unwrap(), 2);
        assert_eq!(valuation(&rational(1, 12), 2).unwrap(), -2);
        assert_eq!(valuation(&int(0), 3), Err(Error::InfiniteValuation));
    }

    #[test]
    fn reduce_examples() {
        let b = reduce(&rational(1, 4), 3, 1).unwrap();
        assert_eq!((b.residue(), b.precision()), (1, 1));
        let b = reduce(&rational(11, 6), 5, 2).unwrap();
        assert_eq!((b.residue(), b.precision()), (6, 2));
        let b = reduce(&int(0), 2, 4).unwrap();
        assert_eq!(b.residue(), 0);
        assert!(matches!(reduce(&rational(1, 5), 5, 2), Err(Error::NotIntegral(_))));
        let b = reduce(&rational(-2, 3), 7, 3).unwrap();
        assert_eq!((b.residue() * 3) % 343, 343 - 2);
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("1/3").unwrap(), rational(1, 3));
        assert_eq!(parse_rational(" -4/6 ").unwrap(), rational(-2, 3));
        assert_eq!(parse_rational("22").unwrap(), int(22));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&rational(6, 4)), "3/2");
        assert_eq!(format_rational(&int(-5)), "-5");
    }
}
