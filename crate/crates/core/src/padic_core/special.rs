//! The transcendental primitives: binomial powers `c^alpha`, the Iwasawa
//! logarithm of a principal unit, and the digamma combination `psi_p + gamma_p`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ball::PadicBall;
use super::modular::{add_mod, checked_pow, inv_mod};
use super::rational::{format_rational, is_p_integral, reduce, valuation, Rational};
use crate::error::{Error, Result};

/// Least `v_p(c - 1)` a Frobenius constant must have: 1, or 2 when `p = 2`.
pub fn frobenius_order(p: u64) -> i64 {
    if p == 2 {
        2
    } else {
        1
    }
}

/// `v_p(c - 1)`, or `None` when `c = 1`; errors if `c` is not a valid Frobenius constant.
pub fn check_frobenius(c: &Rational, p: u64) -> Result<Option<i64>> {
    let d = c - Rational::one();
    if d.is_zero() {
        return Ok(None);
    }
    let need = frobenius_order(p);
    match valuation(&d, p) {
        Ok(v) if v >= need => Ok(Some(v)),
        _ => Err(Error::InvalidFrobenius {
            c: format_rational(c),
            modulus: p.pow(need as u32),
        }),
    }
}

/// `c^alpha = sum_i binom(alpha, i) (c - 1)^i`, summed exactly and reduced mod `p^precision`.
///
/// `binom(alpha, i)` is p-integral for p-integral `alpha`, so every term from
/// index `i` on has valuation at least `i * v_p(c - 1)`.
pub fn pow_binomial(c: &Rational, alpha: &Rational, p: u64, precision: u32) -> Result<PadicBall> {
    let w = match check_frobenius(c, p)? {
        None => return PadicBall::one(p, precision),
        Some(w) => w,
    };
    if !is_p_integral(alpha, p) {
        return Err(Error::NotIntegral(format!(
            "exponent {} is not {p}-integral",
            format_rational(alpha)
        )));
    }
    let u = c - Rational::one();
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    let mut i: i64 = 0;
    while i * w < precision as i64 {
        sum += &term;
        term = term * (alpha - Rational::from_integer(BigInt::from(i))) * &u
            / Rational::from_integer(BigInt::from(i + 1));
        i += 1;
    }
    reduce(&sum, p, precision)
}

/// `log(c) = sum_{i>=1} (-1)^(i+1) (c-1)^i / i`, returned with `precision + 1`
/// known digits so that `log(c) / p` keeps `precision` digits.
pub fn iwasawa_log_unit(c: &Rational, p: u64, precision: u32) -> Result<PadicBall> {
    let target = precision + 1;
    let w = match check_frobenius(c, p)? {
        None => return PadicBall::zero(p, target),
        Some(w) => w,
    };
    let u = c - Rational::one();
    let mut sum = Rational::zero();
    let mut power = u.clone();
    let mut i: i64 = 1;
    // v(term_i) >= i w - floor(log_p i), nondecreasing in i.
    while i * w - floor_log(i as u64, p) < target as i64 {
        let t = &power / Rational::from_integer(BigInt::from(i));
        if i % 2 == 1 {
            sum += t;
        } else {
            sum -= t;
        }
        power *= &u;
        i += 1;
    }
    reduce(&sum, p, target)
}

fn floor_log(x: u64, p: u64) -> i64 {
    let mut k = 0;
    let mut y = x;
    while y >= p {
        y /= p;
        k += 1;
    }
    k
}

/// Guard digits for the harmonic limit: 1, or 2 when `p = 2`.
pub fn harmonic_guard(p: u64) -> u32 {
    if p == 2 {
        2
    } else {
        1
    }
}

/// Iteration ceiling for the harmonic-limit loop.
const HARMONIC_LIMIT: u64 = 1 << 32;

/// `H(m) = sum_{1 <= k <= m, p !| k} 1/k` modulo `p^precision`.
pub fn harmonic_unit_sum(m: u64, p: u64, precision: u32) -> Result<PadicBall> {
    let modulus = checked_pow(p, precision)?;
    let mut acc = 0;
    for k in 1..=m {
        if k % p != 0 {
            acc = add_mod(acc, inv_mod(k % modulus, modulus).expect("unit"), modulus);
        }
    }
    PadicBall::new(p, acc, precision)
}

/// `Psi(a) = psi_p(a) + gamma_p` as the p-adic limit of `H(m)` over `m = a - 1`.
pub fn psi_gamma(a: &Rational, p: u64, precision: u32) -> Result<PadicBall> {
    let g = harmonic_guard(p);
    let shifted = reduce(&(a - Rational::one()), p, precision + g)?;
    if shifted.modulus() > HARMONIC_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "harmonic limit needs {}^{} terms",
            p,
            precision + g
        )));
    }
    harmonic_unit_sum(shifted.residue(), p, precision)
}
