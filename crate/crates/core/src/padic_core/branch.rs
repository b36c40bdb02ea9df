use serde::Serialize;

use super::rational::{bigint_mod, is_nonpositive_integer, is_p_integral, Rational};
use super::modular::{inv_mod, mul_mod};
use crate::error::{Error, Result};

/// Residue-class constants attached to a parameter `a`.
///
/// `l` is the digit with `a + l = 0 mod p`, `l_prime` the one with
/// `a + l_prime = 0 mod q`, and `e` fixes the sign `(-1)^(s e)` of the
/// subtracted Frobenius term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BranchConstants {
    pub l: u64,
    pub q: u64,
    pub l_prime: u64,
    pub e: u64,
}

/// `a mod m` for a p-integral rational and `m` a power of `p`.
fn residue(a: &Rational, m: u64) -> u64 {
    let num = bigint_mod(a.numer(), m);
    let den = bigint_mod(a.denom(), m);
    mul_mod(num, inv_mod(den, m).expect("p-integral"), m)
}

pub fn branch_constants(a: &Rational, p: u64) -> Result<BranchConstants> {
    if !is_p_integral(a, p) {
        return Err(Error::NotIntegral(format!("a = {a} is not {p}-integral")));
    }
    if is_nonpositive_integer(a) {
        return Err(Error::InvalidParameter(format!("a = {a} is a non-positive integer")));
    }
    let q = if p == 2 { 4 } else { p };
    let l = (p - residue(a, p)) % p;
    let l_prime = (q - residue(a, q)) % q;
    let e = l_prime - l_prime / p;
    Ok(BranchConstants { l, q, l_prime, e })
}
