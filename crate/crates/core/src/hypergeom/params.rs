//! Parameter bundle shared by every generator and checker.

use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::padic_core::modular::{is_prime, max_precision};
use crate::padic_core::special::check_frobenius;
use crate::padic_core::{branch_constants, format_rational, BranchConstants, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HGParams {
    pub p: u64,
    pub a: Rational,
    pub s: u32,
    pub c: Rational,
    pub n: u32,
    /// Output series length.
    pub m: usize,
    /// Working precision for coefficient tables.
    pub nw: u32,
}

#[derive(Serialize)]
pub struct ParamsJson {
    pub p: u64,
    pub a: String,
    pub s: u32,
    pub c: String,
    pub n: u32,
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N_w")]
    pub nw: u32,
}

/// `2 p^n + 2 p`.
pub fn default_len(p: u64, n: u32) -> usize {
    (2 * p.saturating_pow(n) + 2 * p) as usize
}

fn ceil_log(x: u128, p: u64) -> u32 {
    let mut k = 0;
    let mut y: u128 = 1;
    while y < x {
        y *= p as u128;
        k += 1;
    }
    k
}

/// `n + ceil(log_p(M (1 + den a) + |num a|)) + 2`.
///
/// The middle term bounds `v_p(k + a)` and `v_p(k)` for every `k < M`,
/// which is the most a single division by `k + a` or `k` can cost.
pub fn default_working_precision(p: u64, a: &Rational, n: u32, m: usize) -> u32 {
    let den = a.denom().abs().to_u128().unwrap_or(u128::MAX / 4);
    let num = a.numer().abs().to_u128().unwrap_or(u128::MAX / 4);
    let bound = (m as u128).saturating_mul(1 + den).saturating_add(num);
    n + ceil_log(bound.max(1), p) + 2
}

impl HGParams {
    /// Validated parameters with the default length and working precision.
    pub fn new(p: u64, a: Rational, s: u32, c: Rational, n: u32) -> Result<Self> {
        let m = default_len(p, n);
        Self::with_len(p, a, s, c, n, m)
    }

    pub fn with_len(p: u64, a: Rational, s: u32, c: Rational, n: u32, m: usize) -> Result<Self> {
        let nw = default_working_precision(p, &a, n, m);
        Self::with_all(p, a, s, c, n, m, nw)
    }

    pub fn with_all(p: u64, a: Rational, s: u32, c: Rational, n: u32, m: usize, nw: u32) -> Result<Self> {
        let out = Self { p, a, s, c, n, m, nw };
        out.validate()?;
        Ok(out)
    }

    pub fn validate(&self) -> Result<()> {
        if !is_prime(self.p) {
            return Err(Error::InvalidParameter(format!("p = {} is not prime", self.p)));
        }
        branch_constants(&self.a, self.p)?;
        check_frobenius(&self.c, self.p)?;
        if self.s == 0 {
            return Err(Error::InvalidParameter("s must be positive".into()));
        }
        if self.n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        if self.m == 0 {
            return Err(Error::InvalidParameter("M must be positive".into()));
        }
        if self.nw < self.n {
            return Err(Error::InvalidParameter(format!(
                "working precision {} is below n = {}",
                self.nw, self.n
            )));
        }
        if self.nw > max_precision(self.p) {
            return Err(Error::PrecisionOverflow { p: self.p, prec: self.nw });
        }
        Ok(())
    }

    pub fn branch(&self) -> BranchConstants {
        branch_constants(&self.a, self.p).expect("validated")
    }

    /// `p^n`.
    pub fn modulus(&self) -> u64 {
        self.p.pow(self.n)
    }

    /// Same parameters with `a` replaced.
    pub fn with_a(&self, a: Rational) -> Result<Self> {
        Self::with_all(self.p, a, self.s, self.c.clone(), self.n, self.m, self.nw)
    }

    /// Same parameters with `c` replaced by `1 / c`.
    pub fn with_inverse_c(&self) -> Self {
        let mut out = self.clone();
        out.c = Rational::one() / &self.c;
        out
    }

    /// Numerator and denominator of `a` as machine integers.
    pub fn a_parts(&self) -> Result<(i128, i128)> {
        let num = self.a.numer().to_i128();
        let den = self.a.denom().to_i128();
        match (num, den) {
            (Some(x), Some(d)) if x.abs() < (1 << 60) && d < (1 << 60) => Ok((x, d)),
            _ => Err(Error::InvalidParameter(format!("a = {} is too large", self.a))),
        }
    }

    pub fn to_json(&self) -> ParamsJson {
        ParamsJson {
            p: self.p,
            a: format_rational(&self.a),
            s: self.s,
            c: format_rational(&self.c),
            n: self.n,
            m: self.m,
            nw: self.nw,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic_core::rational::{int, rational};

    #[test]
    fn defaults() {
        let h = HGParams::new(5, rational(1, 3), 2, int(6), 2).unwrap();
        assert_eq!(h.m, 60);
        // 60 * 4 + 1 = 241 <= 5^4
        assert_eq!(h.nw, 2 + 4 + 2);
    }

    #[test]
    fn rejects_invalid() {
        assert!(HGParams::new(4, int(1), 1, int(1), 1).is_err());
        assert!(HGParams::new(3, rational(1, 3), 1, int(1), 1).is_err());
        assert!(HGParams::new(3, int(-2), 1, int(1), 1).is_err());
        assert!(HGParams::new(2, int(1), 1, int(3), 1).is_err());
        assert!(HGParams::new(5, int(1), 1, int(2), 1).is_err());
        assert!(HGParams::new(5, int(1), 0, int(1), 1).is_err());
        assert!(HGParams::with_all(5, int(1), 1, int(1), 1, 10, 40).is_err());
    }
}
