//! Word-sized modular helpers shared by the ball and series kernels.

use crate::error::{Error, Result};

/// Largest modulus the kernels accept: residues stay below 2^63 so that
/// sums of two residues never overflow a `u64` and products fit a `u128`.
pub const MAX_MODULUS: u64 = 1 << 63;

/// `p^e`, or `PrecisionOverflow` when it would not fit below [`MAX_MODULUS`].
pub fn checked_pow(p: u64, e: u32) -> Result<u64> {
    let mut acc: u64 = 1;
    for _ in 0..e {
        acc = match acc.checked_mul(p) {
            Some(v) if v < MAX_MODULUS => v,
            _ => return Err(Error::PrecisionOverflow { p, prec: e }),
        };
    }
    Ok(acc)
}

/// Largest exponent `e` with `p^e` below [`MAX_MODULUS`].
pub fn max_precision(p: u64) -> u32 {
    let mut e = 0;
    let mut acc: u64 = 1;
    while let Some(v) = acc.checked_mul(p) {
        if v >= MAX_MODULUS {
            break;
        }
        acc = v;
        e += 1;
    }
    e
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (m - b)
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Number of times `p` divides `x` (`x != 0`).
pub fn val_u64(mut x: u64, p: u64) -> u32 {
    debug_assert!(x != 0);
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
